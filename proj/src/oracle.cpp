#include "nbts/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nbts {

Rational extremum_over_vertices(const Vec& objective, const PolytopeV& vertices, Sense sense) {
  if (vertices.vertices.empty()) {
    throw InvalidInput("extremum over an empty vertex list");
  }
  Rational best = dot(objective, vertices.vertices.front().coords);
  for (std::size_t i = 1; i < vertices.vertices.size(); ++i) {
    Rational value = dot(objective, vertices.vertices[i].coords);
    if (sense == Sense::Maximize ? value > best : value < best) best = value;
  }
  return best;
}

bool inside_by_separation_lp(const Point& query, const PolytopeV& vertices) {
  const int n = query.dim();
  LpProblem lp;
  lp.num_vars = n + 1;  // f, then s
  lp.objective = query.coords;
  lp.objective.push_back(Rational(-1));
  lp.sense = Sense::Maximize;
  for (const auto& v : vertices.vertices) {
    LpConstraint row;
    row.coeffs = v.coords;
    row.coeffs.push_back(Rational(-1));
    row.rel = Relation::LessEq;
    row.rhs = 0;
    lp.rows.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    LpConstraint upper;
    upper.coeffs.assign(n + 1, Rational(0));
    upper.coeffs[j] = 1;
    upper.rel = Relation::LessEq;
    upper.rhs = 1;
    lp.rows.push_back(upper);
    upper.rel = Relation::GreaterEq;
    upper.rhs = -1;
    lp.rows.push_back(std::move(upper));
  }
  LpSolution sol = solve_lp(lp);
  return sol.status == LpStatus::Optimal && sol.value == 0;
}

namespace {

struct CaseContext {
  int instance;
  std::vector<std::string>* failures;

  void expect(bool condition, const std::string& what) const {
    if (!condition) {
      std::ostringstream out;
      out << "instance " << instance << ": " << what;
      failures->push_back(out.str());
    }
  }
};

}  // namespace

PropertySuiteResult run_geometry_property_suite(int instances, unsigned seed) {
  PropertySuiteResult result;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim_dist(1, 4);
  std::uniform_int_distribution<int> num_dist(-4, 4);
  std::uniform_int_distribution<int> den_dist(1, 3);

  auto random_rational = [&rng, &num_dist, &den_dist]() {
    return Rational(num_dist(rng), den_dist(rng));
  };

  for (int instance = 0; instance < instances; ++instance) {
    CaseContext ctx{instance, &result.failures};
    const int dim = dim_dist(rng);
    std::uniform_int_distribution<int> count_dist(1, 12);
    const int count = count_dist(rng);

    PolytopeV points;
    points.ambient_dim = dim;
    for (int i = 0; i < count; ++i) {
      Vec coords(dim);
      for (auto& c : coords) c = random_rational();
      points.vertices.emplace_back(std::move(coords));
    }

    // Extremal reduction: subset, idempotent.
    PolytopeV extremal = extremal_subset(points);
    ++result.checks;
    ctx.expect(!extremal.vertices.empty(), "extremal subset is empty");
    PolytopeV again = extremal_subset(extremal);
    ++result.checks;
    ctx.expect(again.vertices == extremal.vertices, "extremal_subset is not idempotent");

    // Facet/vertex round-trip recovers exactly the extreme points.
    PolytopeH facets = hull_facets(points);
    for (const auto& p : points.vertices) {
      ++result.checks;
      ctx.expect(facets.contains(p), "input point violates its own hull facets");
    }
    VertexEnumeration back = hrep_vertices(facets);
    ++result.checks;
    ctx.expect(back.status == RegionStatus::Ok, "round-trip vertex enumeration not bounded");
    ++result.checks;
    ctx.expect(back.vertices.vertices == extremal.vertices,
               "round-trip vertices differ from extremal subset");

    // Facet saturation spans a face of dimension (polytope dim - 1).
    const int poly_dim = affine_dimension(extremal);
    for (const auto& ineq : facets.inequalities) {
      PolytopeV tight;
      tight.ambient_dim = dim;
      for (const auto& v : extremal.vertices) {
        if (ineq.saturates(v)) tight.vertices.push_back(v);
      }
      ++result.checks;
      ctx.expect(affine_dimension(tight) == poly_dim - 1,
                 "facet saturation set does not span dimension dim-1");
    }

    // Membership: a random convex combination (inside) and shifted points
    // (either way), cross-checked against the separation LP, the
    // H-description, and certificate verification.
    std::vector<Point> queries;
    {
      Vec combo(dim, Rational(0));
      Rational left = 1;
      for (std::size_t i = 0; i + 1 < points.vertices.size() && left > 0; ++i) {
        Rational w = left * Rational(1, static_cast<int>(i) + 2);
        add_scaled(combo, w, points.vertices[i].coords);
        left -= w;
      }
      add_scaled(combo, left, points.vertices.back().coords);
      queries.emplace_back(std::move(combo));
    }
    for (int extra = 0; extra < 2; ++extra) {
      Vec coords(dim);
      for (auto& c : coords) c = random_rational();
      queries.emplace_back(std::move(coords));
    }
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
      const Point& q = queries[qi];
      HullMembership member = is_in_hull(q, points);
      ++result.checks;
      ctx.expect(verify_certificate(member.certificate, points, q),
                 "membership certificate fails verification");
      ++result.checks;
      ctx.expect(member.inside == inside_by_separation_lp(q, points),
                 "membership disagrees with separation LP");
      ++result.checks;
      ctx.expect(member.inside == facets.contains(q),
                 "membership disagrees with facet evaluation");
      if (qi == 0) {
        ++result.checks;
        ctx.expect(member.inside, "convex combination reported outside");
      }
    }

    // LP optima equal vertex-scan extrema, and the optimizer is feasible.
    for (int rep = 0; rep < 2; ++rep) {
      Vec objective(dim);
      for (auto& c : objective) c = Rational(num_dist(rng));
      for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
        LpSolution sol = lp_solve(objective, facets, sense);
        ++result.checks;
        ctx.expect(sol.status == LpStatus::Optimal, "LP over a polytope not optimal");
        if (sol.status != LpStatus::Optimal) continue;
        ++result.checks;
        ctx.expect(sol.value == extremum_over_vertices(objective, extremal, sense),
                   "LP optimum differs from vertex scan");
        ++result.checks;
        ctx.expect(facets.contains(Point(sol.point)), "LP optimizer violates constraints");
      }
    }

    ++result.instances;
  }
  return result;
}

}  // namespace nbts
