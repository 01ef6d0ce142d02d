#pragma once

#include <vector>

#include "nbts/linalg.hpp"

namespace nbts {

/// One homogeneous constraint of a cone: `normal . y >= 0`, or
/// `normal . y == 0` when `is_equality` is set.
struct ConeConstraint {
  Vec normal;
  bool is_equality = false;
};

/// Generator description of a polyhedral cone: a basis of its lineality
/// space plus the extreme rays of the pointed quotient. Rays and lines are
/// scaled to coprime integer vectors.
struct ConeGenerators {
  Mat lines;
  Mat rays;
};

/// Double description method. Starting from the whole space, constraints
/// are inserted one at a time while a minimal generator description is
/// maintained; adjacency of rays is decided combinatorially from the
/// constraints already processed. Inequalities are inserted most-cutting
/// first, which keeps intermediate ray counts small on the degenerate
/// cones that arise here.
ConeGenerators double_description(int dim, const std::vector<ConeConstraint>& constraints);

}  // namespace nbts
