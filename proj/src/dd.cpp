#include "nbts/dd.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cassert>

namespace nbts {

namespace {

using Bitset = boost::dynamic_bitset<>;

struct Ray {
  Vec v;
  Bitset tight;  // processed constraints satisfied with equality
};

void normalize_ray(Vec& v) { scale_to_coprime_integers(v); }

void normalize_line(Vec& v) {
  scale_to_coprime_integers(v);
  for (const auto& e : v) {
    if (e == 0) continue;
    if (e < 0) {
      for (auto& f : v) f = -f;
    }
    break;
  }
}

// Combinatorial adjacency test (valid for a minimal description of the
// pointed quotient): r1, r2 are adjacent iff no third ray is tight on
// every constraint that is tight on both of them.
bool adjacent(const std::vector<Ray>& rays, std::size_t i, std::size_t j) {
  Bitset common = rays[i].tight & rays[j].tight;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (k == i || k == j) continue;
    if (common.is_subset_of(rays[k].tight)) return false;
  }
  return true;
}

}  // namespace

ConeGenerators double_description(int dim, const std::vector<ConeConstraint>& constraints) {
  const std::size_t nc = constraints.size();
  for (const auto& c : constraints) {
    assert(static_cast<int>(c.normal.size()) == dim);
    (void)c;
  }

  // Start from R^dim: a full lineality basis, no rays.
  Mat lines;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::vector<bool> done(nc, false);
  Bitset processed_mask(nc);

  // dots[k] holds the scalar products of constraint k with every current
  // ray (aligned with `rays`), maintained incrementally so the cut-count
  // ordering below stays cheap.
  std::vector<Vec> dots(nc);
  auto refresh_dots = [&](std::size_t k) {
    dots[k].clear();
    dots[k].reserve(rays.size());
    for (const auto& r : rays) dots[k].push_back(dot(constraints[k].normal, r.v));
  };

  for (std::size_t step = 0; step < nc; ++step) {
    // Equalities first (each can only shrink the description); then the
    // inequality currently cutting the most rays.
    std::size_t pick = nc;
    for (std::size_t k = 0; k < nc; ++k) {
      if (!done[k] && constraints[k].is_equality) {
        pick = k;
        break;
      }
    }
    if (pick == nc) {
      long best_cut = -1;
      for (std::size_t k = 0; k < nc; ++k) {
        if (done[k]) continue;
        long cut = 0;
        for (const auto& d : dots[k]) {
          if (d < 0) ++cut;
        }
        if (cut > best_cut) {
          best_cut = cut;
          pick = k;
        }
      }
    }
    assert(pick < nc);
    done[pick] = true;
    const Vec& a = constraints[pick].normal;
    const bool is_eq = constraints[pick].is_equality;

    // A line not orthogonal to the constraint absorbs it: the lineality
    // dimension drops by one and every other generator is projected onto
    // the constraint's hyperplane along the pivot line.
    std::size_t pivot = lines.size();
    Rational pivot_dot;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      Rational d = dot(a, lines[l]);
      if (d != 0) {
        pivot = l;
        pivot_dot = d;
        break;
      }
    }

    if (pivot < lines.size()) {
      Vec pivot_line = lines[pivot];
      lines.erase(lines.begin() + pivot);
      for (auto& l : lines) {
        Rational d = dot(a, l);
        if (d != 0) {
          add_scaled(l, -d / pivot_dot, pivot_line);
          normalize_line(l);
        }
      }
      for (std::size_t i = 0; i < rays.size(); ++i) {
        const Rational d = dots[pick].empty() ? dot(a, rays[i].v) : dots[pick][i];
        if (d != 0) {
          add_scaled(rays[i].v, -d / pivot_dot, pivot_line);
          normalize_ray(rays[i].v);
        }
        rays[i].tight.set(pick);
      }
      if (!is_eq) {
        // The pivot direction itself survives as a ray on the feasible side.
        if (pivot_dot < 0) {
          for (auto& e : pivot_line) e = -e;
        }
        Ray nr;
        nr.v = std::move(pivot_line);
        normalize_ray(nr.v);
        nr.tight = processed_mask;  // orthogonal to everything processed
        rays.push_back(std::move(nr));
      }
      processed_mask.set(pick);
      // Projection changed every ray; rebuild all bookkeeping.
      for (std::size_t k = 0; k < nc; ++k) {
        if (!done[k]) refresh_dots(k);
      }
      dots[pick].clear();
      continue;
    }

    // All lines are orthogonal to the constraint: classify rays and combine
    // adjacent positive/negative pairs on the hyperplane.
    if (dots[pick].size() != rays.size()) refresh_dots(pick);
    const Vec cur = std::move(dots[pick]);
    dots[pick].clear();
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (cur[i] > 0) {
        pos.push_back(i);
      } else if (cur[i] < 0) {
        neg.push_back(i);
      }
    }
    if (neg.empty() && !is_eq) {
      // Nothing cut; only tightness bookkeeping.
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (cur[i] == 0) rays[i].tight.set(pick);
      }
      processed_mask.set(pick);
      continue;
    }

    std::vector<std::size_t> kept;
    std::vector<Ray> added;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (cur[i] == 0 || (!is_eq && cur[i] > 0)) kept.push_back(i);
    }
    for (std::size_t i : pos) {
      for (std::size_t j : neg) {
        if (!adjacent(rays, i, j)) continue;
        Ray combo;
        combo.v = rays[j].v;
        for (auto& e : combo.v) e *= cur[i];
        add_scaled(combo.v, -cur[j], rays[i].v);
        normalize_ray(combo.v);
        combo.tight = rays[i].tight & rays[j].tight;
        combo.tight.set(pick);
        added.push_back(std::move(combo));
      }
    }

    // New ray list: kept survivors followed by the fresh combinations;
    // update the cached scalar products the same way.
    std::vector<Ray> next;
    next.reserve(kept.size() + added.size());
    for (std::size_t i : kept) {
      if (cur[i] == 0) rays[i].tight.set(pick);
      next.push_back(std::move(rays[i]));
    }
    for (std::size_t k = 0; k < nc; ++k) {
      if (done[k]) continue;
      Vec updated;
      updated.reserve(kept.size() + added.size());
      for (std::size_t i : kept) updated.push_back(std::move(dots[k][i]));
      for (const auto& r : added) updated.push_back(dot(constraints[k].normal, r.v));
      dots[k] = std::move(updated);
    }
    for (auto& r : added) next.push_back(std::move(r));
    rays = std::move(next);
    processed_mask.set(pick);
  }

  ConeGenerators out;
  out.lines = std::move(lines);
  out.rays.reserve(rays.size());
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace nbts
