#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nbts/linalg.hpp"

namespace nbts {

/// A point of the ambient rational vector space.
struct Point {
  Vec coords;

  Point() = default;
  explicit Point(Vec c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }

  bool operator==(const Point& other) const = default;
  /// Lexicographic; used for deterministic ordering of vertex lists.
  std::strong_ordering operator<=>(const Point& other) const;
};

/// An affine constraint `coeffs . z REL bound`.
///
/// Canonical form (produced by `canonicalized`): coefficients and bound are
/// coprime integers; inequalities use relation >=; equalities have a
/// positive leading coefficient.
struct Inequality {
  Vec coeffs;
  Rational bound;
  Relation rel = Relation::GreaterEq;

  int dim() const { return static_cast<int>(coeffs.size()); }

  Rational lhs(const Point& p) const { return dot(coeffs, p.coords); }

  /// Margin by which `p` satisfies the constraint: positive = satisfied
  /// with slack, zero = saturated, negative = violated by that amount.
  /// For equalities the margin is -(absolute residual).
  Rational margin(const Point& p) const;

  bool satisfies(const Point& p) const { return margin(p) >= 0; }
  bool saturates(const Point& p) const;

  bool operator==(const Inequality& other) const = default;
  std::strong_ordering operator<=>(const Inequality& other) const;
};

Inequality canonicalized(const Inequality& ineq);

/// Vertex description of a polytope. `vertices` are pairwise distinct;
/// after `extremal_subset` no vertex lies in the hull of the others.
struct PolytopeV {
  int ambient_dim = 0;
  std::vector<Point> vertices;
};

/// Constraint description of a polytope: inequalities plus the equalities
/// of its affine hull. Constraints are kept canonical and deduplicated.
struct PolytopeH {
  int ambient_dim = 0;
  std::vector<Inequality> inequalities;
  std::vector<Inequality> equalities;

  /// Canonicalizes and inserts, ignoring exact duplicates.
  void add(const Inequality& ineq);

  bool contains(const Point& p) const;
};

/// Proof of a hull-membership verdict. ConvexWeights: nonnegative weights
/// over the hull points, summing to one, whose weighted sum reproduces the
/// query exactly. SeparatingHyperplane: a constraint satisfied by every
/// hull point and strictly violated by the query.
struct Certificate {
  enum class Kind { ConvexWeights, SeparatingHyperplane };
  Kind kind = Kind::ConvexWeights;
  std::vector<Rational> weights;        // one per hull point
  std::optional<Inequality> hyperplane;
};

/// Exact arithmetic re-check of a certificate against hull and query.
bool verify_certificate(const Certificate& cert, const PolytopeV& hull, const Point& query);

}  // namespace nbts
