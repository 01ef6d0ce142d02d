#include "nbts/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace nbts {

using nlohmann::json;

namespace {

std::string pair_key(int first, int second) {
  return std::to_string(first) + "," + std::to_string(second);
}

Rational entry_value(const json& block, const std::string& xy, const std::string& ab) {
  if (!block.contains(ab)) {
    throw ParseError("missing entry \"" + ab + "\" in block \"" + xy + "\"");
  }
  const json& cell = block.at(ab);
  if (!cell.is_string()) {
    throw ParseError("entry \"" + ab + "\" in block \"" + xy +
                     "\" must be a rational string such as \"1/2\"");
  }
  try {
    return parse_rational(cell.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " at entry \"" + ab + "\" in block \"" + xy + "\"");
  }
}

}  // namespace

Correlation correlation_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("correlation document must be a JSON object keyed by \"x,y\"");
  }
  Correlation c;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const std::string xy = pair_key(x, y);
      if (!doc.contains(xy)) {
        throw ParseError("missing block \"" + xy + "\"");
      }
      const json& block = doc.at(xy);
      if (!block.is_object()) {
        throw ParseError("block \"" + xy + "\" must be an object keyed by \"a,b\"");
      }
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          c.p(a, b, x, y) = entry_value(block, xy, pair_key(a, b));
        }
      }
    }
  }
  try {
    c.validate();
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  return c;
}

json correlation_to_json(const Correlation& c) {
  json doc = json::object();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      json block = json::object();
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          block[pair_key(a, b)] = to_string(c.p(a, b, x, y));
        }
      }
      doc[pair_key(x, y)] = std::move(block);
    }
  }
  return doc;
}

Correlation read_correlation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open correlation file '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("file '" + path + "': " + e.what());
  }
  try {
    return correlation_from_json(doc);
  } catch (const ParseError& e) {
    throw ParseError("file '" + path + "': " + e.what());
  }
}

json inequality_to_json(const Inequality& ineq) {
  json out;
  json coeffs = json::array();
  for (const auto& c : ineq.coeffs) coeffs.push_back(to_string(c));
  out["coeffs"] = std::move(coeffs);
  out["bound"] = to_string(ineq.bound);
  switch (ineq.rel) {
    case Relation::GreaterEq:
      out["relation"] = ">=";
      break;
    case Relation::LessEq:
      out["relation"] = "<=";
      break;
    case Relation::Equal:
      out["relation"] = "=";
      break;
  }
  return out;
}

json polytope_to_json(const NamedPolytope& polytope) {
  json out;
  out["name"] = polytope.name.str();
  out["ambient_dim"] = polytope.vertices.ambient_dim;
  out["dimension"] = polytope.dimension;

  json vertices = json::array();
  for (std::size_t i = 0; i < polytope.vertices.vertices.size(); ++i) {
    json v;
    json coords = json::array();
    for (const auto& c : polytope.vertices.vertices[i].coords) coords.push_back(to_string(c));
    v["coords"] = std::move(coords);
    if (i < polytope.labels.size() && polytope.labels[i].has_value()) {
      v["label"] = polytope.labels[i]->name();
    }
    vertices.push_back(std::move(v));
  }
  out["vertices"] = std::move(vertices);

  json facets = json::array();
  for (const auto& ineq : polytope.facets.inequalities) facets.push_back(inequality_to_json(ineq));
  out["facets"] = std::move(facets);
  json equalities = json::array();
  for (const auto& eq : polytope.facets.equalities) equalities.push_back(inequality_to_json(eq));
  out["equalities"] = std::move(equalities);
  return out;
}

}  // namespace nbts
