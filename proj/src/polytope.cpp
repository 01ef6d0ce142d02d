#include "nbts/polytope.hpp"

#include <algorithm>

namespace nbts {

std::strong_ordering Point::operator<=>(const Point& other) const {
  const std::size_t n = std::min(coords.size(), other.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i] < other.coords[i]) return std::strong_ordering::less;
    if (coords[i] > other.coords[i]) return std::strong_ordering::greater;
  }
  return coords.size() <=> other.coords.size();
}

Rational Inequality::margin(const Point& p) const {
  const Rational value = lhs(p);
  switch (rel) {
    case Relation::GreaterEq:
      return value - bound;
    case Relation::LessEq:
      return bound - value;
    case Relation::Equal: {
      Rational r = value - bound;
      return r <= 0 ? r : -r;
    }
  }
  return 0;
}

bool Inequality::saturates(const Point& p) const { return margin(p) == 0; }

std::strong_ordering Inequality::operator<=>(const Inequality& other) const {
  if (auto c = rel <=> other.rel; c != 0) return c;
  const std::size_t n = std::min(coeffs.size(), other.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] < other.coeffs[i]) return std::strong_ordering::less;
    if (coeffs[i] > other.coeffs[i]) return std::strong_ordering::greater;
  }
  if (auto c = coeffs.size() <=> other.coeffs.size(); c != 0) return c;
  if (bound < other.bound) return std::strong_ordering::less;
  if (bound > other.bound) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Inequality canonicalized(const Inequality& ineq) {
  Inequality out = ineq;
  if (out.rel == Relation::LessEq) {
    for (auto& c : out.coeffs) c = -c;
    out.bound = -out.bound;
    out.rel = Relation::GreaterEq;
  }
  Vec all = out.coeffs;
  all.push_back(out.bound);
  scale_to_coprime_integers(all);
  if (out.rel == Relation::Equal) {
    // Sign is free for equalities; fix the leading nonzero coefficient
    // positive (falling back to the bound for 0 = c constraints).
    Rational lead = 0;
    for (const auto& c : all) {
      if (c != 0) {
        lead = c;
        break;
      }
    }
    if (lead < 0) {
      for (auto& c : all) c = -c;
    }
  }
  out.bound = all.back();
  all.pop_back();
  out.coeffs = std::move(all);
  return out;
}

void PolytopeH::add(const Inequality& ineq) {
  Inequality canon = canonicalized(ineq);
  auto& list = canon.rel == Relation::Equal ? equalities : inequalities;
  if (std::find(list.begin(), list.end(), canon) == list.end()) {
    list.push_back(std::move(canon));
  }
}

bool PolytopeH::contains(const Point& p) const {
  for (const auto& e : equalities) {
    if (!e.satisfies(p)) return false;
  }
  for (const auto& i : inequalities) {
    if (!i.satisfies(p)) return false;
  }
  return true;
}

bool verify_certificate(const Certificate& cert, const PolytopeV& hull, const Point& query) {
  if (cert.kind == Certificate::Kind::ConvexWeights) {
    if (cert.weights.size() != hull.vertices.size()) return false;
    Rational total = 0;
    Vec combo(query.coords.size(), Rational(0));
    for (std::size_t i = 0; i < cert.weights.size(); ++i) {
      if (cert.weights[i] < 0) return false;
      total += cert.weights[i];
      add_scaled(combo, cert.weights[i], hull.vertices[i].coords);
    }
    return total == 1 && combo == query.coords;
  }
  if (!cert.hyperplane.has_value()) return false;
  const Inequality& h = *cert.hyperplane;
  for (const auto& v : hull.vertices) {
    if (!h.satisfies(v)) return false;
  }
  return h.margin(query) < 0;
}

}  // namespace nbts
