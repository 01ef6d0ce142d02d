#pragma once

#include <string>

#include "nbts/correlation.hpp"
#include "nbts/polytope.hpp"

namespace nbts {

/// Renders an inequality over the embedding coordinates in probability
/// notation, e.g. "p_A(0|y=1) + p_B(0|x=1) - p(0,0|1,1) - p(0,0|0,0) >= 0".
std::string probability_form(const Inequality& ineq);

/// Renders an inequality as a coefficient vector, e.g.
/// "(0,1,0,1,-1,0,0,-1) . z >= 0".
std::string coordinate_form(const Inequality& ineq);

/// Multi-line table of a correlation's sixteen probabilities.
std::string correlation_table_text(const Correlation& c);

std::string point_text(const Point& p);

}  // namespace nbts
