#include <doctest.h>

#include <algorithm>

#include "nbts/geometry.hpp"

using namespace nbts;

namespace {

Point pt(std::initializer_list<int> coords) {
  Vec v;
  for (int c : coords) v.push_back(Rational(c));
  return Point(std::move(v));
}

PolytopeV make_polytope(int dim, std::initializer_list<Point> points) {
  PolytopeV p;
  p.ambient_dim = dim;
  p.vertices = points;
  return p;
}

const PolytopeV kSquare = make_polytope(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});

}  // namespace

TEST_CASE("affine_dimension on degenerate and generic inputs") {
  CHECK(affine_dimension(make_polytope(2, {})) == -1);
  CHECK(affine_dimension(make_polytope(2, {pt({0, 0})})) == 0);
  CHECK(affine_dimension(make_polytope(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})})) == 2);
  CHECK(affine_dimension(make_polytope(2, {pt({0, 0}), pt({1, 1}), pt({2, 2})})) == 1);
}

TEST_CASE("is_in_hull: midpoint with exact weights") {
  PolytopeV hull = make_polytope(2, {pt({0, 0}), pt({1, 1})});
  Point query(Vec{Rational(1, 2), Rational(1, 2)});
  HullMembership result = is_in_hull(query, hull);
  REQUIRE(result.inside);
  CHECK(result.certificate.kind == Certificate::Kind::ConvexWeights);
  CHECK(result.certificate.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(verify_certificate(result.certificate, hull, query));
}

TEST_CASE("is_in_hull: exterior point gets a separating hyperplane") {
  PolytopeV hull = make_polytope(2, {pt({0, 0}), pt({1, 1})});
  Point query = pt({2, 0});
  HullMembership result = is_in_hull(query, hull);
  REQUIRE_FALSE(result.inside);
  CHECK(result.certificate.kind == Certificate::Kind::SeparatingHyperplane);
  CHECK(verify_certificate(result.certificate, hull, query));
}

TEST_CASE("is_in_hull rejects dimension mismatch") {
  CHECK_THROWS_AS(is_in_hull(pt({1}), kSquare), InvalidInput);
}

TEST_CASE("extremal_subset drops the midpoint") {
  PolytopeV points = make_polytope(2, {pt({0, 0}), pt({1, 1})});
  points.vertices.push_back(Point(Vec{Rational(1, 2), Rational(1, 2)}));
  PolytopeV reduced = extremal_subset(points);
  CHECK(reduced.vertices == std::vector<Point>{pt({0, 0}), pt({1, 1})});
}

TEST_CASE("extremal_subset merges duplicates, is idempotent and order-independent") {
  PolytopeV points = make_polytope(2, {pt({1, 1}), pt({0, 0}), pt({1, 1}), pt({0, 2}),
                                       pt({0, 1}), pt({0, 0})});
  PolytopeV reduced = extremal_subset(points);
  CHECK(reduced.vertices == std::vector<Point>{pt({0, 0}), pt({0, 2}), pt({1, 1})});

  PolytopeV again = extremal_subset(reduced);
  CHECK(again.vertices == reduced.vertices);

  std::reverse(points.vertices.begin(), points.vertices.end());
  CHECK(extremal_subset(points).vertices == reduced.vertices);

  CHECK(extremal_subset(make_polytope(2, {})).vertices.empty());
}

TEST_CASE("hull_facets of the unit square") {
  PolytopeH h = hull_facets(kSquare);
  CHECK(h.equalities.empty());
  REQUIRE(h.inequalities.size() == 4);
  for (const auto& v : kSquare.vertices) {
    CHECK(h.contains(v));
  }
  CHECK_FALSE(h.contains(pt({2, 0})));
  // Each facet of the square is tight on exactly two vertices.
  for (const auto& ineq : h.inequalities) {
    int tight = 0;
    for (const auto& v : kSquare.vertices) {
      if (ineq.saturates(v)) ++tight;
    }
    CHECK(tight == 2);
  }
}

TEST_CASE("hull_facets of a segment in one dimension") {
  PolytopeH h = hull_facets(make_polytope(1, {pt({0}), pt({1})}));
  CHECK(h.equalities.empty());
  REQUIRE(h.inequalities.size() == 2);
  // Canonical forms: x >= 0 and -x >= -1.
  Inequality lower{{Rational(1)}, Rational(0), Relation::GreaterEq};
  Inequality upper{{Rational(-1)}, Rational(-1), Relation::GreaterEq};
  CHECK(std::find(h.inequalities.begin(), h.inequalities.end(), lower) != h.inequalities.end());
  CHECK(std::find(h.inequalities.begin(), h.inequalities.end(), upper) != h.inequalities.end());
}

TEST_CASE("hull_facets of a lower-dimensional polytope reports equalities") {
  // Segment embedded diagonally in the plane.
  PolytopeH h = hull_facets(make_polytope(2, {pt({0, 0}), pt({1, 1})}));
  REQUIRE(h.equalities.size() == 1);
  CHECK(h.equalities[0].coeffs == Vec{Rational(1), Rational(-1)});
  CHECK(h.equalities[0].bound == 0);
  CHECK(h.inequalities.size() == 2);

  // A single point is its affine hull.
  PolytopeH point_h = hull_facets(make_polytope(2, {pt({3, 4})}));
  CHECK(point_h.equalities.size() == 2);
  CHECK(point_h.inequalities.empty());
  CHECK(point_h.contains(pt({3, 4})));
  CHECK_FALSE(point_h.contains(pt({3, 5})));

  CHECK_THROWS_AS(hull_facets(make_polytope(2, {})), InvalidInput);
}

TEST_CASE("hrep_vertices of the unit square") {
  VertexEnumeration result = hrep_vertices(hull_facets(kSquare));
  REQUIRE(result.status == RegionStatus::Ok);
  CHECK(result.vertices.vertices ==
        std::vector<Point>{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})});
}

TEST_CASE("hrep_vertices detects empty and unbounded regions") {
  PolytopeH empty;
  empty.ambient_dim = 1;
  empty.add({{Rational(1)}, Rational(0), Relation::LessEq});
  empty.add({{Rational(1)}, Rational(1), Relation::GreaterEq});
  CHECK(hrep_vertices(empty).status == RegionStatus::Infeasible);

  PolytopeH halfline;
  halfline.ambient_dim = 1;
  halfline.add({{Rational(1)}, Rational(0), Relation::GreaterEq});
  CHECK(hrep_vertices(halfline).status == RegionStatus::Unbounded);

  PolytopeH flat;  // an affine line in the plane: unbounded
  flat.ambient_dim = 2;
  flat.add({{Rational(1), Rational(1)}, Rational(1), Relation::Equal});
  CHECK(hrep_vertices(flat).status == RegionStatus::Unbounded);

  PolytopeH point;  // equalities pinning a single point: bounded
  point.ambient_dim = 2;
  point.add({{Rational(1), Rational(0)}, Rational(2), Relation::Equal});
  point.add({{Rational(0), Rational(1)}, Rational(-1), Relation::Equal});
  VertexEnumeration result = hrep_vertices(point);
  REQUIRE(result.status == RegionStatus::Ok);
  CHECK(result.vertices.vertices == std::vector<Point>{pt({2, -1})});
}

TEST_CASE("round-trip duality with redundant inputs") {
  // A triangle described with a redundant constraint still enumerates to
  // its three corners, and the facets of those corners describe the same
  // region (mutual LP containment).
  PolytopeH h;
  h.ambient_dim = 2;
  h.add({{Rational(1), Rational(0)}, Rational(0), Relation::GreaterEq});
  h.add({{Rational(0), Rational(1)}, Rational(0), Relation::GreaterEq});
  h.add({{Rational(1), Rational(1)}, Rational(1), Relation::LessEq});
  h.add({{Rational(1), Rational(1)}, Rational(2), Relation::LessEq});  // redundant
  VertexEnumeration triangle = hrep_vertices(h);
  REQUIRE(triangle.status == RegionStatus::Ok);
  CHECK(triangle.vertices.vertices.size() == 3);
  PolytopeH back = hull_facets(triangle.vertices);
  CHECK(back.inequalities.size() == 3);
  CHECK(hrep_implies(h, back));
  CHECK(hrep_implies(back, h));
}
