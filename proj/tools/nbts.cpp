// Command-line front end: polytope construction, NBTS condition checks,
// hull membership with certificates, inequality listings, the full
// reproduction report, and figure-data export.
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 usage error,
// 3 input parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nbts/catalog.hpp"
#include "nbts/format.hpp"
#include "nbts/json_io.hpp"
#include "nbts/report.hpp"

namespace {

using nbts::Rational;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string target;
  std::vector<std::string> polytopes;
  std::vector<std::string> projections;
  std::string polytope;
  std::string ordering = "weak";
  std::string format = "table";
  std::string output;
  std::string q_text;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.output.empty()) return std::cout;
  file.open(opt.output);
  if (!file) throw UsageError("cannot open output file '" + opt.output + "'");
  return file;
}

Rational parse_q(const std::string& text) {
  Rational q;
  try {
    q = nbts::parse_rational(text);
  } catch (const nbts::ParseError& e) {
    throw UsageError(e.what());
  }
  if (q < 0 || q > 1) throw UsageError("q = " + text + " is outside [0,1]");
  return q;
}

nbts::PolytopeName resolve_polytope(const std::string& name, const std::string& q_text) {
  auto id = nbts::parse_polytope_id(name);
  if (!id.has_value()) {
    throw UsageError("unknown polytope '" + name +
                     "' (expected nbts, alice-first, bob-first, definite-global or set-q)");
  }
  nbts::PolytopeName out{*id, Rational(0)};
  if (*id == nbts::PolytopeId::SetQ) {
    if (q_text.empty()) throw UsageError("set-q requires --q");
    out.q = parse_q(q_text);
  } else if (!q_text.empty()) {
    throw UsageError("--q only applies to set-q");
  }
  return out;
}

// Named boxes accepted wherever a correlation file is expected.
std::optional<nbts::Correlation> builtin_correlation(const std::string& name) {
  if (name == "pr-box") return nbts::pr_box();
  if (name == "uniform") return nbts::uniform_box();
  auto bits_after = [&name](const std::string& prefix) -> std::optional<std::vector<int>> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::vector<int> bits;
    for (char c : name.substr(prefix.size())) {
      if (c != '0' && c != '1') return std::nullopt;
      bits.push_back(c - '0');
    }
    return bits;
  };
  if (auto bits = bits_after("gyni-"); bits && bits->size() == 2) {
    return nbts::gyni_vertex((*bits)[0], (*bits)[1]);
  }
  if (auto bits = bits_after("det-"); bits && bits->size() == 4) {
    return nbts::deterministic_vertex((*bits)[0], (*bits)[1], (*bits)[2], (*bits)[3]);
  }
  if (auto bits = bits_after("pr-like-"); bits && bits->size() == 3) {
    return nbts::pr_like_vertex((*bits)[0], (*bits)[1], (*bits)[2]);
  }
  if (auto bits = bits_after("linear-"); bits && bits->size() == 1) {
    return nbts::linear_vertex((*bits)[0]);
  }
  return std::nullopt;
}

nbts::Correlation resolve_correlation(const std::string& target) {
  if (auto builtin = builtin_correlation(target)) return *builtin;
  return nbts::read_correlation_file(target);
}

std::string label_text(const std::optional<nbts::VertexLabel>& label) {
  return label.has_value() ? label->name() : "mixture";
}

int cmd_vertices(const Options& opt) {
  const nbts::NamedPolytope polytope = nbts::build(resolve_polytope(opt.target, opt.q_text));
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (opt.format == "json") {
    out << nbts::polytope_to_json(polytope).dump(2) << "\n";
    return kExitOk;
  }
  if (opt.format == "csv") {
    out << "label";
    for (const auto& name : nbts::nbts_coordinate_names()) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < polytope.vertices.vertices.size(); ++i) {
      out << label_text(polytope.labels[i]);
      for (const auto& c : polytope.vertices.vertices[i].coords) out << "," << c;
      out << "\n";
    }
    return kExitOk;
  }
  out << polytope.name.str() << ": " << polytope.vertices.vertices.size()
      << " vertices, dimension " << polytope.dimension << "\n";
  for (std::size_t i = 0; i < polytope.vertices.vertices.size(); ++i) {
    out << "  " << label_text(polytope.labels[i]) << " "
        << nbts::point_text(polytope.vertices.vertices[i]) << "\n";
  }
  return kExitOk;
}

int cmd_facets(const Options& opt) {
  const nbts::NamedPolytope polytope = nbts::build(resolve_polytope(opt.target, opt.q_text));
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (opt.format == "json") {
    out << nbts::polytope_to_json(polytope).dump(2) << "\n";
    return kExitOk;
  }
  out << polytope.name.str() << ": " << polytope.facets.inequalities.size() << " facets, "
      << polytope.facets.equalities.size() << " equalities, dimension " << polytope.dimension
      << "\n";
  if (!polytope.facets.equalities.empty()) {
    out << "equalities:\n";
    for (const auto& eq : polytope.facets.equalities) {
      out << "  " << nbts::coordinate_form(eq) << "   [" << nbts::probability_form(eq) << "]\n";
    }
  }
  out << "facets:\n";
  for (const auto& ineq : polytope.facets.inequalities) {
    out << "  " << nbts::coordinate_form(ineq) << "   [" << nbts::probability_form(ineq)
        << "]\n";
  }
  return kExitOk;
}

int cmd_check(const Options& opt) {
  const nbts::Correlation c = resolve_correlation(opt.target);
  auto ordering = nbts::parse_ordering(opt.ordering);
  if (!ordering.has_value()) {
    throw UsageError("unknown ordering '" + opt.ordering +
                     "' (expected weak, alice-first, bob-first or simultaneous)");
  }
  const nbts::NbtsCheck result = nbts::nbts_check(c, *ordering);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["ordering"] = nbts::to_string(*ordering);
    doc["passed"] = result.passed;
    auto violations = nlohmann::json::array();
    for (const auto& v : result.violations) violations.push_back(v.describe());
    doc["violations"] = std::move(violations);
    out << doc.dump(2) << "\n";
  } else {
    out << (result.passed ? "pass" : "fail") << " (" << nbts::to_string(*ordering)
        << " conditions)\n";
    for (const auto& v : result.violations) out << "  violated: " << v.describe() << "\n";
  }
  return kExitOk;
}

int cmd_membership(const Options& opt) {
  const nbts::Correlation c = resolve_correlation(opt.target);
  if (opt.polytope.empty()) throw UsageError("membership requires --polytope");
  const nbts::NamedPolytope polytope = nbts::build(resolve_polytope(opt.polytope, opt.q_text));
  const nbts::MembershipReport result = nbts::membership_report(c, polytope);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["polytope"] = polytope.name.str();
    doc["inside"] = result.inside;
    if (result.inside) {
      auto weights = nlohmann::json::array();
      for (std::size_t i = 0; i < result.certificate.weights.size(); ++i) {
        if (result.certificate.weights[i] == 0) continue;
        nlohmann::json w;
        w["vertex"] = label_text(polytope.labels[i]);
        w["weight"] = nbts::to_string(result.certificate.weights[i]);
        weights.push_back(std::move(w));
      }
      doc["weights"] = std::move(weights);
    } else {
      doc["separating_hyperplane"] =
          nbts::inequality_to_json(*result.certificate.hyperplane);
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  if (result.inside) {
    out << "inside " << polytope.name.str() << "; convex weights:\n";
    for (std::size_t i = 0; i < result.certificate.weights.size(); ++i) {
      if (result.certificate.weights[i] == 0) continue;
      out << "  " << label_text(polytope.labels[i]) << " "
          << nbts::point_text(polytope.vertices.vertices[i]) << ": "
          << result.certificate.weights[i] << "\n";
    }
  } else {
    const nbts::Inequality& plane = *result.certificate.hyperplane;
    out << "outside " << polytope.name.str() << "; separating hyperplane (holds on the "
        << "polytope, violated by the query):\n";
    out << "  " << nbts::coordinate_form(plane) << "   [" << nbts::probability_form(plane)
        << "]\n";
  }
  return kExitOk;
}

int cmd_inequalities(const Options& opt) {
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (!opt.q_text.empty()) {
    const Rational q = parse_q(opt.q_text);
    const auto bounds = nbts::q_inequalities(q);
    if (opt.format == "json") {
      auto doc = nlohmann::json::array();
      for (const auto& ineq : bounds) doc.push_back(nbts::inequality_to_json(ineq));
      out << doc.dump(2) << "\n";
      return kExitOk;
    }
    out << "q-dependent inequalities at q = " << q << ":\n";
    for (const auto& ineq : bounds) {
      out << "  " << nbts::coordinate_form(ineq) << "   [" << nbts::probability_form(ineq)
          << "]\n";
    }
    return kExitOk;
  }
  const auto novel = nbts::novel_inequalities_detailed(false);
  if (opt.format == "json") {
    auto doc = nlohmann::json::array();
    for (const auto& entry : novel) doc.push_back(nbts::inequality_to_json(entry.canonical));
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "novel facet inequalities of the definite-global polytope:\n";
  for (const auto& entry : novel) {
    out << "  [" << (entry.kind == nbts::NovelKind::DiagonalFloor ? "diagonal-floor"
                                                                  : "cross-ceiling")
        << " x=" << entry.x << ",y=" << entry.y << "] " << nbts::coordinate_form(entry.canonical)
        << "   [" << nbts::probability_form(entry.canonical) << "]\n";
  }
  return kExitOk;
}

int cmd_report(const Options& opt) {
  const nbts::ReproductionReport report = nbts::run_reproduction_suite();
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (opt.format == "json") {
    nlohmann::json doc;
    auto criteria = nlohmann::json::array();
    for (const auto& c : report.criteria) {
      nlohmann::json entry;
      entry["id"] = c.id;
      entry["title"] = c.title;
      entry["passed"] = c.passed;
      entry["detail"] = c.detail;
      criteria.push_back(std::move(entry));
    }
    doc["criteria"] = std::move(criteria);
    doc["all_passed"] = report.all_passed;
    out << doc.dump(2) << "\n";
  } else {
    out << nbts::render_report(report);
  }
  return report.all_passed ? kExitOk : kExitMismatch;
}

struct Projection {
  nbts::Vec coeffs;
  Rational constant;
};

Projection parse_projection(const std::string& text) {
  Projection proj;
  proj.constant = 0;
  std::stringstream stream(text);
  std::string part;
  std::vector<Rational> values;
  while (std::getline(stream, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    try {
      values.push_back(nbts::parse_rational(part));
    } catch (const nbts::ParseError& e) {
      throw UsageError(std::string("projection: ") + e.what());
    }
  }
  if (values.size() != nbts::kNbtsDim && values.size() != nbts::kNbtsDim + 1) {
    throw UsageError("projection needs 8 coefficients (plus an optional constant), got " +
                     std::to_string(values.size()));
  }
  if (values.size() == nbts::kNbtsDim + 1) {
    proj.constant = values.back();
    values.pop_back();
  }
  proj.coeffs = nbts::Vec(values.begin(), values.end());
  return proj;
}

int cmd_figure_data(const Options& opt) {
  if (opt.polytopes.empty()) throw UsageError("figure-data requires at least one --polytope");
  if (opt.projections.size() < 2 || opt.projections.size() > 3) {
    throw UsageError("figure-data requires two or three --projection functionals");
  }
  std::vector<Projection> projections;
  for (const auto& text : opt.projections) projections.push_back(parse_projection(text));

  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  out << "polytope,label";
  for (std::size_t i = 0; i < projections.size(); ++i) {
    out << ",f" << i + 1 << ",f" << i + 1 << "_approx";
  }
  out << "\n";
  for (const auto& name : opt.polytopes) {
    const nbts::NamedPolytope polytope = nbts::build(resolve_polytope(name, opt.q_text));
    for (std::size_t i = 0; i < polytope.vertices.vertices.size(); ++i) {
      out << polytope.name.str() << "," << label_text(polytope.labels[i]);
      for (const auto& proj : projections) {
        const Rational value =
            nbts::dot(proj.coeffs, polytope.vertices.vertices[i].coords) + proj.constant;
        out << "," << value << "," << nbts::approx(value);
      }
      out << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact-arithmetic toolkit for no-backwards-in-time-signalling polytopes"};
  app.require_subcommand(1);

  auto add_common = [&opt](CLI::App* cmd, bool with_q) {
    cmd->add_option("--format", opt.format, "Output format: table, json or csv");
    cmd->add_option("--output", opt.output, "Write output to a file instead of stdout");
    if (with_q) cmd->add_option("--q", opt.q_text, "Mixing weight for set-q (exact rational)");
  };

  CLI::App* vertices = app.add_subcommand("vertices", "List a polytope's extremal vertices");
  vertices->add_option("polytope", opt.target, "nbts, alice-first, bob-first, definite-global, set-q")
      ->required();
  add_common(vertices, true);

  CLI::App* facets = app.add_subcommand("facets", "List a polytope's facets and equalities");
  facets->add_option("polytope", opt.target, "Polytope name")->required();
  add_common(facets, true);

  CLI::App* check = app.add_subcommand("check", "Check the NBTS conditions for a correlation");
  check->add_option("correlation", opt.target,
                    "Correlation file, or a named box (pr-box, gyni-00, det-0101, "
                    "pr-like-000, linear-0, uniform)")
      ->required();
  check->add_option("--ordering", opt.ordering, "weak, alice-first, bob-first or simultaneous");
  add_common(check, false);

  CLI::App* membership =
      app.add_subcommand("membership", "Decide hull membership with a certificate");
  membership->add_option("correlation", opt.target, "Correlation file or named box")->required();
  membership->add_option("--polytope", opt.polytope, "Polytope name")->required();
  add_common(membership, true);

  CLI::App* inequalities = app.add_subcommand(
      "inequalities", "List the novel facet inequalities (or, with --q, the q-dependent ones)");
  add_common(inequalities, true);

  CLI::App* report =
      app.add_subcommand("report", "Run the full reproduction suite (exit 1 on mismatch)");
  add_common(report, false);

  CLI::App* figure = app.add_subcommand(
      "figure-data", "Export projected vertex coordinates as CSV for external plotting");
  figure->add_option("--polytope", opt.polytopes, "Polytope to project (repeatable)");
  figure
      ->add_option("--projection", opt.projections,
                   "Affine functional: 8 comma-separated rationals plus optional constant "
                   "(give two or three)")
      ->expected(-1);
  add_common(figure, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*vertices) return cmd_vertices(opt);
    if (*facets) return cmd_facets(opt);
    if (*check) return cmd_check(opt);
    if (*membership) return cmd_membership(opt);
    if (*inequalities) return cmd_inequalities(opt);
    if (*report) return cmd_report(opt);
    if (*figure) return cmd_figure_data(opt);
    std::cerr << "no command selected\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nbts::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nbts::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
