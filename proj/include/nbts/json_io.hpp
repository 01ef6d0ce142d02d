#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "nbts/catalog.hpp"
#include "nbts/correlation.hpp"

namespace nbts {

/// Correlation file format: a JSON object with one key per input pair
/// ("x,y"), each mapping outcome pairs ("a,b") to exact rational strings:
///   { "0,0": { "0,0": "1/2", "0,1": "0", ... }, ... }
/// Parsing validates normalization and entry ranges and reports the
/// offending entry on failure (ParseError).
Correlation correlation_from_json(const nlohmann::json& doc);
nlohmann::json correlation_to_json(const Correlation& c);

/// Reads and validates a correlation file. ParseError carries the file
/// name and, where known, the offending entry.
Correlation read_correlation_file(const std::string& path);

/// Polytope export document: ambient dimension, polytope dimension, the
/// lexicographically sorted vertex list (rational strings plus family
/// labels where known), facet and equality lists in canonical integer
/// form. Byte-stable across runs.
nlohmann::json polytope_to_json(const NamedPolytope& polytope);

nlohmann::json inequality_to_json(const Inequality& ineq);

}  // namespace nbts
