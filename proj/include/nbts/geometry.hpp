#pragma once

#include "nbts/lp.hpp"
#include "nbts/polytope.hpp"

namespace nbts {

/// Exact LP over an H-described region. Throws InvalidInput when the
/// objective length does not match the ambient dimension.
LpSolution lp_solve(const Vec& objective, const PolytopeH& constraints, Sense sense);

/// Dimension of the affine hull: -1 for no points, 0 for a single point.
int affine_dimension(const PolytopeV& points);

struct HullMembership {
  bool inside = false;
  Certificate certificate;
};

/// Decides whether `query` lies in the convex hull of `hull.vertices`,
/// returning a convex-weights certificate when inside and a separating
/// hyperplane when outside. Throws InvalidInput on dimension mismatch.
HullMembership is_in_hull(const Point& query, const PolytopeV& hull);

/// The extreme points of the hull: exactly those input points that are not
/// convex combinations of the others. Duplicates are merged first; the
/// result is sorted and independent of input order.
PolytopeV extremal_subset(const PolytopeV& points);

/// Complete irredundant H-description of conv(points): the affine hull's
/// equalities plus one facet inequality per facet, all canonical and
/// sorted. Throws InvalidInput when `points` is empty.
PolytopeH hull_facets(const PolytopeV& points);

enum class RegionStatus { Ok, Infeasible, Unbounded };

struct VertexEnumeration {
  RegionStatus status = RegionStatus::Ok;
  PolytopeV vertices;  // meaningful when status == Ok
};

/// Enumerates the extreme points of an H-described region, detecting empty
/// and unbounded regions.
VertexEnumeration hrep_vertices(const PolytopeH& constraints);

/// True when every point satisfying `from` also satisfies `to`, decided by
/// optimizing each constraint of `to` over `from`. `from` must be bounded
/// and nonempty.
bool hrep_implies(const PolytopeH& from, const PolytopeH& to);

}  // namespace nbts
