#pragma once

#include <string>
#include <vector>

#include "nbts/geometry.hpp"

namespace nbts {

// Brute-force routes kept independent of the primary implementations they
// cross-check: optima by direct vertex scans, membership by a separation
// LP in the dual formulation and by H-description evaluation.

/// Extremum of `objective` over an explicit vertex list.
Rational extremum_over_vertices(const Vec& objective, const PolytopeV& vertices, Sense sense);

/// Membership via the separation program max { f.q - s : f.v <= s for all
/// vertices, |f_j| <= 1 }: the query is inside iff the optimum is zero.
bool inside_by_separation_lp(const Point& query, const PolytopeV& vertices);

/// Result of the randomized geometry cross-check suite.
struct PropertySuiteResult {
  int instances = 0;
  int checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs `instances` randomized small cases (dimension <= 4, at most 12
/// points, small rational coordinates) from a fixed seed. Each case
/// cross-checks facet/vertex round-trips, hull membership against both
/// brute-force routes with certificate verification, and LP optima
/// against vertex scans. Deterministic for a given seed.
PropertySuiteResult run_geometry_property_suite(int instances, unsigned seed);

}  // namespace nbts
