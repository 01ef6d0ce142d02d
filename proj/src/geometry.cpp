#include "nbts/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "nbts/dd.hpp"

namespace nbts {

namespace {

LpConstraint to_lp_row(const Inequality& ineq) {
  return LpConstraint{ineq.coeffs, ineq.rel, ineq.bound};
}

LpProblem hrep_problem(const PolytopeH& constraints) {
  LpProblem lp;
  lp.num_vars = constraints.ambient_dim;
  for (const auto& e : constraints.equalities) lp.rows.push_back(to_lp_row(e));
  for (const auto& i : constraints.inequalities) lp.rows.push_back(to_lp_row(i));
  lp.objective.assign(lp.num_vars, Rational(0));
  return lp;
}

/// Feasibility LP for convex weights: sum w_i v_i = query, sum w_i = 1, w >= 0.
LpSolution convex_weights_lp(const Point& query, const std::vector<Point>& vertices) {
  const int n = query.dim();
  const int k = static_cast<int>(vertices.size());
  LpProblem lp;
  lp.num_vars = k;
  lp.nonneg.assign(k, true);
  lp.objective.assign(k, Rational(0));
  lp.sense = Sense::Minimize;
  for (int c = 0; c < n; ++c) {
    LpConstraint row;
    row.coeffs.reserve(k);
    for (int i = 0; i < k; ++i) row.coeffs.push_back(vertices[i].coords[c]);
    row.rel = Relation::Equal;
    row.rhs = query.coords[c];
    lp.rows.push_back(std::move(row));
  }
  LpConstraint total;
  total.coeffs.assign(k, Rational(1));
  total.rel = Relation::Equal;
  total.rhs = 1;
  lp.rows.push_back(std::move(total));
  return solve_lp(lp);
}

}  // namespace

LpSolution lp_solve(const Vec& objective, const PolytopeH& constraints, Sense sense) {
  if (static_cast<int>(objective.size()) != constraints.ambient_dim) {
    throw InvalidInput("objective length does not match ambient dimension");
  }
  LpProblem lp = hrep_problem(constraints);
  lp.objective = objective;
  lp.sense = sense;
  return solve_lp(lp);
}

int affine_dimension(const PolytopeV& points) {
  if (points.vertices.empty()) return -1;
  Mat differences;
  const Vec& base = points.vertices.front().coords;
  for (std::size_t i = 1; i < points.vertices.size(); ++i) {
    Vec d = points.vertices[i].coords;
    for (std::size_t c = 0; c < d.size(); ++c) d[c] -= base[c];
    differences.push_back(std::move(d));
  }
  return rank(std::move(differences));
}

HullMembership is_in_hull(const Point& query, const PolytopeV& hull) {
  if (query.dim() != hull.ambient_dim) {
    throw InvalidInput("query dimension does not match hull ambient dimension");
  }
  HullMembership result;
  if (hull.vertices.empty()) {
    // Vacuous hull: any constraint the query strictly violates certifies.
    Inequality never;
    never.coeffs.assign(query.dim(), Rational(0));
    never.bound = 1;
    never.rel = Relation::GreaterEq;
    result.inside = false;
    result.certificate.kind = Certificate::Kind::SeparatingHyperplane;
    result.certificate.hyperplane = never;
    return result;
  }
  LpSolution weights = convex_weights_lp(query, hull.vertices);
  if (weights.status == LpStatus::Optimal) {
    result.inside = true;
    result.certificate.kind = Certificate::Kind::ConvexWeights;
    result.certificate.weights = weights.point;
    assert(verify_certificate(result.certificate, hull, query));
    return result;
  }

  // Outside: find a constraint satisfied by the hull and strictly violated
  // by the query via  max  f.query - s  s.t.  f.v <= s for all hull points,
  // |f_j| <= 1. The optimum is strictly positive exactly when the query is
  // separable, which it is here.
  const int n = query.dim();
  LpProblem lp;
  lp.num_vars = n + 1;  // f, then s
  lp.objective = query.coords;
  lp.objective.push_back(Rational(-1));
  lp.sense = Sense::Maximize;
  for (const auto& v : hull.vertices) {
    LpConstraint row;
    row.coeffs = v.coords;
    row.coeffs.push_back(Rational(-1));
    row.rel = Relation::LessEq;
    row.rhs = 0;
    lp.rows.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    LpConstraint bound;
    bound.coeffs.assign(n + 1, Rational(0));
    bound.coeffs[j] = 1;
    bound.rel = Relation::LessEq;
    bound.rhs = 1;
    lp.rows.push_back(bound);
    bound.rel = Relation::GreaterEq;
    bound.rhs = -1;
    lp.rows.push_back(std::move(bound));
  }
  LpSolution sep = solve_lp(lp);
  assert(sep.status == LpStatus::Optimal && sep.value > 0);

  Inequality plane;
  plane.coeffs.assign(sep.point.begin(), sep.point.begin() + n);
  plane.bound = sep.point[n];
  plane.rel = Relation::LessEq;
  result.inside = false;
  result.certificate.kind = Certificate::Kind::SeparatingHyperplane;
  result.certificate.hyperplane = canonicalized(plane);
  assert(verify_certificate(result.certificate, hull, query));
  return result;
}

PolytopeV extremal_subset(const PolytopeV& points) {
  std::vector<Point> pool = points.vertices;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const int n = points.ambient_dim;

  // Cheap exact pre-pass: the unique maximizer of a linear functional over
  // the pool is extreme, so its feasibility LP can be skipped. The
  // objective family is fixed, keeping the routine deterministic.
  std::vector<bool> certified(pool.size(), false);
  auto certify_argmax = [&pool, &certified](const Vec& objective) {
    std::size_t best = 0;
    bool unique = true;
    Rational best_value = dot(objective, pool[0].coords);
    for (std::size_t i = 1; i < pool.size(); ++i) {
      Rational value = dot(objective, pool[i].coords);
      if (value > best_value) {
        best_value = std::move(value);
        best = i;
        unique = true;
      } else if (value == best_value) {
        unique = false;
      }
    }
    if (unique) certified[best] = true;
  };
  if (pool.size() > 2) {
    for (int i = 0; i < n; ++i) {
      for (int si = -1; si <= 1; si += 2) {
        Vec objective(n, Rational(0));
        objective[i] = si;
        certify_argmax(objective);
        for (int j = i + 1; j < n; ++j) {
          for (int sj = -1; sj <= 1; sj += 2) {
            objective[j] = sj;
            certify_argmax(objective);
          }
          objective[j] = 0;
        }
      }
    }
    std::mt19937 rng(7341);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int rep = 0; rep < 48; ++rep) {
      Vec objective(n);
      for (auto& c : objective) c = coeff(rng);
      certify_argmax(objective);
    }
  }

  // Removing a point that is a convex combination of the others never
  // changes the hull, so each survivor set supports the remaining tests.
  std::vector<bool> active(pool.size(), true);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (certified[i]) continue;
    std::vector<Point> others;
    others.reserve(pool.size() - 1);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j != i && active[j]) others.push_back(pool[j]);
    }
    if (others.empty()) continue;
    if (convex_weights_lp(pool[i], others).status == LpStatus::Optimal) {
      active[i] = false;
    }
  }

  PolytopeV out;
  out.ambient_dim = points.ambient_dim;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (active[i]) out.vertices.push_back(pool[i]);
  }
  return out;
}

PolytopeH hull_facets(const PolytopeV& points) {
  if (points.vertices.empty()) {
    throw InvalidInput("hull_facets requires at least one point");
  }
  const int n = points.ambient_dim;

  // Cone of valid inequalities a.z + c >= 0 over y = (a, c): one
  // homogeneous constraint per hull point. Its lineality space holds the
  // affine hull's equalities, its extreme rays the facets.
  std::vector<ConeConstraint> rows;
  std::vector<Point> pool = points.vertices;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (const auto& v : pool) {
    ConeConstraint row;
    row.normal = v.coords;
    row.normal.push_back(Rational(1));
    rows.push_back(std::move(row));
  }
  ConeGenerators cone = double_description(n + 1, rows);

  PolytopeH out;
  out.ambient_dim = n;
  for (const auto& line : cone.lines) {
    Inequality eq;
    eq.coeffs.assign(line.begin(), line.begin() + n);
    eq.bound = -line[n];
    eq.rel = Relation::Equal;
    out.add(eq);
  }

  // Reduce each facet representative modulo the lineality space so the
  // output is deterministic, then drop the homogenization artifact (the
  // one ray tight at no vertex).
  Mat basis = cone.lines;
  std::vector<int> pivots = rref(basis);
  for (const auto& ray : cone.rays) {
    Vec r = ray;
    for (std::size_t row = 0; row < basis.size(); ++row) {
      add_scaled(r, -r[pivots[row]], basis[row]);
    }
    Inequality ineq;
    ineq.coeffs.assign(r.begin(), r.begin() + n);
    ineq.bound = -r[n];
    ineq.rel = Relation::GreaterEq;
    bool tight_somewhere = false;
    for (const auto& v : pool) {
      if (ineq.saturates(v)) {
        tight_somewhere = true;
        break;
      }
    }
    if (tight_somewhere) out.add(ineq);
  }
  std::sort(out.inequalities.begin(), out.inequalities.end());
  std::sort(out.equalities.begin(), out.equalities.end());
  return out;
}

VertexEnumeration hrep_vertices(const PolytopeH& constraints) {
  const int n = constraints.ambient_dim;

  // Homogenize over y = (z, t): a.z >= b becomes a.z - b t >= 0, with t >= 0
  // first so the lineality that survives has t = 0.
  std::vector<ConeConstraint> rows;
  ConeConstraint positivity;
  positivity.normal.assign(n + 1, Rational(0));
  positivity.normal[n] = 1;
  rows.push_back(std::move(positivity));
  auto add_row = [&rows, n](const Inequality& ineq, bool eq) {
    ConeConstraint row;
    row.normal = ineq.coeffs;
    row.normal.push_back(-ineq.bound);
    if (ineq.rel == Relation::LessEq) {
      for (auto& e : row.normal) e = -e;
    }
    row.is_equality = eq;
    rows.push_back(std::move(row));
  };
  for (const auto& e : constraints.equalities) add_row(e, true);
  for (const auto& i : constraints.inequalities) add_row(i, false);

  ConeGenerators cone = double_description(n + 1, rows);

  VertexEnumeration out;
  out.vertices.ambient_dim = n;
  bool has_direction = !cone.lines.empty();
  for (const auto& ray : cone.rays) {
    if (ray[n] == 0) {
      has_direction = true;
      continue;
    }
    Vec z(ray.begin(), ray.begin() + n);
    for (auto& e : z) e /= ray[n];
    out.vertices.vertices.emplace_back(std::move(z));
  }
  if (out.vertices.vertices.empty()) {
    out.status = RegionStatus::Infeasible;
  } else if (has_direction) {
    out.status = RegionStatus::Unbounded;
  } else {
    out.status = RegionStatus::Ok;
    std::sort(out.vertices.vertices.begin(), out.vertices.vertices.end());
  }
  return out;
}

bool hrep_implies(const PolytopeH& from, const PolytopeH& to) {
  auto worst = [&from](const Vec& coeffs, Sense sense) {
    LpSolution sol = lp_solve(coeffs, from, sense);
    assert(sol.status == LpStatus::Optimal);
    return sol.value;
  };
  for (const auto& e : to.equalities) {
    if (worst(e.coeffs, Sense::Minimize) < e.bound) return false;
    if (worst(e.coeffs, Sense::Maximize) > e.bound) return false;
  }
  for (const auto& i : to.inequalities) {
    if (i.rel == Relation::GreaterEq) {
      if (worst(i.coeffs, Sense::Minimize) < i.bound) return false;
    } else {
      if (worst(i.coeffs, Sense::Maximize) > i.bound) return false;
    }
  }
  return true;
}

}  // namespace nbts
