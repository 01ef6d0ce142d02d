#include <doctest.h>

#include "nbts/catalog.hpp"
#include "nbts/geometry.hpp"
#include "nbts/oracle.hpp"

using namespace nbts;

namespace {

PolytopeH unit_interval() {
  PolytopeH h;
  h.ambient_dim = 1;
  h.add({{Rational(1)}, Rational(0), Relation::GreaterEq});  // x >= 0
  h.add({{Rational(1)}, Rational(1), Relation::LessEq});     // x <= 1
  return h;
}

}  // namespace

TEST_CASE("maximize x over the unit interval") {
  LpSolution sol = lp_solve({Rational(1)}, unit_interval(), Sense::Maximize);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.point == Vec{Rational(1)});
}

TEST_CASE("contradictory bounds are infeasible") {
  PolytopeH h;
  h.ambient_dim = 1;
  h.add({{Rational(1)}, Rational(0), Relation::LessEq});
  h.add({{Rational(1)}, Rational(1), Relation::GreaterEq});
  LpSolution sol = lp_solve({Rational(1)}, h, Sense::Maximize);
  CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded direction is reported") {
  PolytopeH h;
  h.ambient_dim = 1;
  h.add({{Rational(1)}, Rational(0), Relation::GreaterEq});
  LpSolution sol = lp_solve({Rational(1)}, h, Sense::Maximize);
  CHECK(sol.status == LpStatus::Unbounded);
  // The minimum in the same region exists.
  sol = lp_solve({Rational(1)}, h, Sense::Minimize);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 0);
}

TEST_CASE("objective length must match the ambient dimension") {
  CHECK_THROWS_AS(lp_solve({Rational(1), Rational(2)}, unit_interval(), Sense::Maximize),
                  InvalidInput);
}

TEST_CASE("negative coordinates are reachable (free variables)") {
  PolytopeH h;
  h.ambient_dim = 2;
  h.add({{Rational(1), Rational(0)}, Rational(-3), Relation::GreaterEq});   // x >= -3
  h.add({{Rational(1), Rational(0)}, Rational(-1), Relation::LessEq});      // x <= -1
  h.add({{Rational(0), Rational(1)}, Rational(-2), Relation::GreaterEq});   // y >= -2
  h.add({{Rational(1), Rational(1)}, Rational(4), Relation::LessEq});       // x + y <= 4
  LpSolution sol = lp_solve({Rational(1), Rational(-2)}, h, Sense::Maximize);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rational(3));  // x = -1, y = -2
  CHECK(sol.point == Vec{Rational(-1), Rational(-2)});
}

TEST_CASE("equality constraints are honored exactly") {
  PolytopeH h;
  h.ambient_dim = 2;
  h.add({{Rational(1), Rational(1)}, Rational(1), Relation::Equal});
  h.add({{Rational(1), Rational(0)}, Rational(0), Relation::GreaterEq});
  h.add({{Rational(0), Rational(1)}, Rational(0), Relation::GreaterEq});
  LpSolution sol = lp_solve({Rational(2), Rational(1)}, h, Sense::Maximize);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 2);
  CHECK(sol.point == Vec{Rational(1), Rational(0)});
}

// The minimum of the diagonal-floor functional at (x,y)=(1,1) over the
// definite-global polytope: evaluating it on all 22 vertices bottoms out
// at zero (the inequality is tight there), so the LP must return 0.
TEST_CASE("diagonal-floor functional minimizes to zero over definite-global") {
  const NamedPolytope definite = build({PolytopeId::DefiniteGlobal, 0});
  Vec objective = {Rational(0), Rational(1),  Rational(0), Rational(1),
                   Rational(-1), Rational(0), Rational(0), Rational(-1)};
  LpSolution sol = lp_solve(objective, definite.facets, Sense::Minimize);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 0);
  CHECK(sol.value == extremum_over_vertices(objective, definite.vertices, Sense::Minimize));
}
