#include "nbts/catalog.hpp"

#include <algorithm>
#include <cassert>

namespace nbts {

namespace {

// Affine expressions over the eight embedding coordinates, used to write
// constraints in the same shape as the probability notation.
struct AffineExpr {
  Vec coeffs = Vec(kNbtsDim, Rational(0));
  Rational constant;
};

AffineExpr operator+(AffineExpr lhs, const AffineExpr& rhs) {
  for (int i = 0; i < kNbtsDim; ++i) lhs.coeffs[i] += rhs.coeffs[i];
  lhs.constant += rhs.constant;
  return lhs;
}

AffineExpr operator-(AffineExpr lhs, const AffineExpr& rhs) {
  for (int i = 0; i < kNbtsDim; ++i) lhs.coeffs[i] -= rhs.coeffs[i];
  lhs.constant -= rhs.constant;
  return lhs;
}

AffineExpr constant_expr(Rational value) {
  AffineExpr e;
  e.constant = std::move(value);
  return e;
}

AffineExpr coordinate(int index) {
  AffineExpr e;
  e.coeffs[index] = 1;
  return e;
}

// p_A(a|y), p_B(b|x), p(a,b|x,y) as affine functions of the coordinates.
AffineExpr marginal_a_expr(int a, int y) {
  AffineExpr base = coordinate(y);
  return a == 0 ? base : constant_expr(1) - base;
}

AffineExpr marginal_b_expr(int b, int x) {
  AffineExpr base = coordinate(2 + x);
  return b == 0 ? base : constant_expr(1) - base;
}

AffineExpr joint_expr(int a, int b, int x, int y) {
  AffineExpr joint = coordinate(4 + 2 * x + y);
  if (a == 0 && b == 0) return joint;
  if (a == 0) return marginal_a_expr(0, y) - joint;
  if (b == 0) return marginal_b_expr(0, x) - joint;
  return constant_expr(1) - marginal_a_expr(0, y) - marginal_b_expr(0, x) + joint;
}

Inequality make_constraint(const AffineExpr& lhs, Relation rel, const Rational& rhs) {
  Inequality ineq;
  ineq.coeffs = lhs.coeffs;
  ineq.bound = rhs - lhs.constant;
  ineq.rel = rel;
  return canonicalized(ineq);
}

PolytopeV condition_polytope_vertices(TimeOrdering ordering) {
  const PolytopeH h = ordering == TimeOrdering::Weak ? nbts_conditions_hrep(ordering)
                                                     : one_party_first_hrep(ordering);
  VertexEnumeration result = hrep_vertices(h);
  assert(result.status == RegionStatus::Ok);
  return result.vertices;
}

NbtsPoint nbts_point_of(const Point& p) {
  assert(p.dim() == kNbtsDim);
  NbtsPoint out;
  std::copy(p.coords.begin(), p.coords.end(), out.coords.begin());
  return out;
}

}  // namespace

std::string PolytopeName::str() const {
  switch (id) {
    case PolytopeId::Nbts:
      return "nbts";
    case PolytopeId::AliceFirst:
      return "alice-first";
    case PolytopeId::BobFirst:
      return "bob-first";
    case PolytopeId::DefiniteGlobal:
      return "definite-global";
    case PolytopeId::SetQ:
      return "set-q(" + to_string(q) + ")";
  }
  return "?";
}

std::optional<PolytopeId> parse_polytope_id(std::string_view name) {
  if (name == "nbts") return PolytopeId::Nbts;
  if (name == "alice-first") return PolytopeId::AliceFirst;
  if (name == "bob-first") return PolytopeId::BobFirst;
  if (name == "definite-global") return PolytopeId::DefiniteGlobal;
  if (name == "set-q") return PolytopeId::SetQ;
  return std::nullopt;
}

PolytopeH nbts_conditions_hrep(TimeOrdering ordering) {
  PolytopeH h;
  h.ambient_dim = kNbtsDim;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          h.add(make_constraint(joint_expr(a, b, x, y), Relation::GreaterEq, 0));
        }
      }
    }
  }
  const bool alice_first =
      ordering == TimeOrdering::AliceFirst || ordering == TimeOrdering::Simultaneous;
  const bool bob_first =
      ordering == TimeOrdering::BobFirst || ordering == TimeOrdering::Simultaneous;
  if (alice_first) {
    h.add(make_constraint(coordinate(0) - coordinate(1), Relation::Equal, 0));
  }
  if (bob_first) {
    h.add(make_constraint(coordinate(2) - coordinate(3), Relation::Equal, 0));
  }
  return h;
}

std::vector<Inequality> ordering_variation_bounds(TimeOrdering ordering) {
  if (ordering != TimeOrdering::AliceFirst && ordering != TimeOrdering::BobFirst) {
    throw InvalidInput("variation bounds exist only for the one-party-first orderings");
  }
  std::vector<Inequality> out;
  for (int fixed = 0; fixed < 2; ++fixed) {
    AffineExpr variation =
        ordering == TimeOrdering::AliceFirst
            ? joint_expr(0, 0, fixed, 0) - joint_expr(0, 0, fixed, 1)   // y varies
            : joint_expr(0, 0, 0, fixed) - joint_expr(0, 0, 1, fixed);  // x varies
    for (int outcome = 0; outcome < 2; ++outcome) {
      AffineExpr cap = ordering == TimeOrdering::AliceFirst
                           ? marginal_b_expr(outcome, 1 - fixed)
                           : marginal_a_expr(outcome, 1 - fixed);
      out.push_back(make_constraint(cap - variation, Relation::GreaterEq, 0));
      out.push_back(make_constraint(cap + variation, Relation::GreaterEq, 0));
    }
  }
  return out;
}

PolytopeH one_party_first_hrep(TimeOrdering ordering) {
  PolytopeH h = nbts_conditions_hrep(ordering);
  for (const auto& bound : ordering_variation_bounds(ordering)) h.add(bound);
  return h;
}

NamedPolytope build(const PolytopeName& name) {
  PolytopeV vertices;
  switch (name.id) {
    case PolytopeId::Nbts:
      vertices = condition_polytope_vertices(TimeOrdering::Weak);
      break;
    case PolytopeId::AliceFirst:
      vertices = condition_polytope_vertices(TimeOrdering::AliceFirst);
      break;
    case PolytopeId::BobFirst:
      vertices = condition_polytope_vertices(TimeOrdering::BobFirst);
      break;
    case PolytopeId::DefiniteGlobal: {
      PolytopeV pool = condition_polytope_vertices(TimeOrdering::AliceFirst);
      PolytopeV bob = condition_polytope_vertices(TimeOrdering::BobFirst);
      pool.vertices.insert(pool.vertices.end(), bob.vertices.begin(), bob.vertices.end());
      vertices = extremal_subset(pool);
      break;
    }
    case PolytopeId::SetQ: {
      if (name.q < 0 || name.q > 1) {
        throw InvalidInput("set-q weight " + to_string(name.q) + " is outside [0,1]");
      }
      PolytopeV alice = condition_polytope_vertices(TimeOrdering::AliceFirst);
      PolytopeV bob = condition_polytope_vertices(TimeOrdering::BobFirst);
      PolytopeV pool;
      pool.ambient_dim = kNbtsDim;
      for (const auto& u : alice.vertices) {
        for (const auto& w : bob.vertices) {
          Vec mixed(kNbtsDim);
          for (int i = 0; i < kNbtsDim; ++i) {
            mixed[i] = name.q * u.coords[i] + (1 - name.q) * w.coords[i];
          }
          pool.vertices.emplace_back(std::move(mixed));
        }
      }
      vertices = extremal_subset(pool);
      break;
    }
  }

  NamedPolytope out;
  out.name = name;
  out.vertices = std::move(vertices);
  out.facets = hull_facets(out.vertices);
  out.dimension = affine_dimension(out.vertices);
  out.labels.reserve(out.vertices.vertices.size());
  for (const auto& v : out.vertices.vertices) {
    out.labels.push_back(classify(from_coords(nbts_point_of(v))));
  }
  return out;
}

std::vector<Inequality> novel_inequalities() {
  std::vector<Inequality> out;
  for (const auto& detail : novel_inequalities_detailed(false)) {
    out.push_back(detail.canonical);
  }
  return out;
}

std::vector<NovelInequality> novel_inequalities_detailed(bool expand_outcomes) {
  std::vector<NovelInequality> out;
  const int outcome_limit = expand_outcomes ? 2 : 1;
  for (int a = 0; a < outcome_limit; ++a) {
    for (int b = 0; b < outcome_limit; ++b) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          AffineExpr margins = marginal_a_expr(a, y) + marginal_b_expr(b, x);
          AffineExpr diagonal = joint_expr(a, b, x, y) + joint_expr(a, b, 1 - x, 1 - y);
          out.push_back({make_constraint(margins - diagonal, Relation::GreaterEq, 0),
                         NovelKind::DiagonalFloor, a, b, x, y});
        }
      }
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          AffineExpr margins = marginal_a_expr(a, y) + marginal_b_expr(b, x);
          AffineExpr cross = joint_expr(a, b, x, 1 - y) + joint_expr(a, b, 1 - x, y);
          out.push_back({make_constraint(margins - cross, Relation::LessEq, 1),
                         NovelKind::CrossCeiling, a, b, x, y});
        }
      }
    }
  }
  return out;
}

std::vector<Inequality> q_inequalities(const Rational& q) {
  if (q < 0 || q > 1) {
    throw InvalidInput("set-q weight " + to_string(q) + " is outside [0,1]");
  }
  std::vector<Inequality> out;
  AffineExpr alice_diff = coordinate(0) - coordinate(1);
  AffineExpr bob_diff = coordinate(2) - coordinate(3);
  out.push_back(make_constraint(alice_diff, Relation::LessEq, 1 - q));
  out.push_back(make_constraint(constant_expr(0) - alice_diff, Relation::LessEq, 1 - q));
  out.push_back(make_constraint(bob_diff, Relation::LessEq, q));
  out.push_back(make_constraint(constant_expr(0) - bob_diff, Relation::LessEq, q));
  return out;
}

IneqEvaluation evaluate_point(const Point& coords, const Inequality& ineq) {
  IneqEvaluation eval;
  eval.margin = ineq.margin(coords);
  if (eval.margin > 0) {
    eval.verdict = Verdict::Satisfied;
  } else if (eval.margin == 0) {
    eval.verdict = Verdict::Saturated;
  } else {
    eval.verdict = Verdict::Violated;
  }
  return eval;
}

IneqEvaluation evaluate_inequality(const Correlation& c, const Inequality& ineq) {
  return evaluate_point(to_coords(c).to_point(), ineq);
}

MembershipReport membership_report(const Correlation& c, const NamedPolytope& polytope) {
  HullMembership hull = is_in_hull(to_coords(c).to_point(), polytope.vertices);
  return MembershipReport{hull.inside, std::move(hull.certificate)};
}

GyniExclusionReport gyni_exclusion_report(const std::vector<Rational>& q_grid) {
  GyniExclusionReport report;
  const NamedPolytope definite = build({PolytopeId::DefiniteGlobal, 0});
  const PolytopeV alice = condition_polytope_vertices(TimeOrdering::AliceFirst);
  const PolytopeV bob = condition_polytope_vertices(TimeOrdering::BobFirst);
  const std::vector<Inequality> novel = novel_inequalities();

  bool ok = true;

  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      GyniExclusionReport::PerVertex entry;
      const Correlation box = gyni_vertex(alpha, beta);
      entry.label = VertexLabel{VertexLabel::Family::Gyni, {alpha, beta}};
      entry.coords = to_coords(box);
      entry.weak_pass = nbts_check(box, TimeOrdering::Weak).passed;

      HullMembership membership = is_in_hull(entry.coords.to_point(), definite.vertices);
      entry.outside_definite = !membership.inside;
      entry.certificate = membership.certificate;

      for (std::size_t i = 0; i < novel.size(); ++i) {
        if (evaluate_point(entry.coords.to_point(), novel[i]).verdict == Verdict::Violated) {
          entry.violated_novel.push_back(static_cast<int>(i));
        }
      }

      for (const auto& q : q_grid) {
        std::vector<int> violated;
        const std::vector<Inequality> bounds = q_inequalities(q);
        for (std::size_t i = 0; i < bounds.size(); ++i) {
          if (evaluate_point(entry.coords.to_point(), bounds[i]).verdict == Verdict::Violated) {
            violated.push_back(static_cast<int>(i));
          }
        }
        entry.violated_q_dependent.emplace_back(q, violated);
      }

      ok = ok && entry.weak_pass && entry.outside_definite && !entry.violated_novel.empty() &&
           verify_certificate(entry.certificate, definite.vertices, entry.coords.to_point());
      for (const auto& [q, violated] : entry.violated_q_dependent) {
        ok = ok && !violated.empty();
      }
      report.gyni.push_back(std::move(entry));
    }
  }

  report.definite_vertices_satisfy_all = true;
  for (const auto& v : definite.vertices.vertices) {
    for (const auto& ineq : novel) {
      if (evaluate_point(v, ineq).verdict == Verdict::Violated) {
        report.definite_vertices_satisfy_all = false;
      }
    }
  }

  for (std::size_t i = 0; i < novel.size(); ++i) {
    GyniExclusionReport::Saturation sat;
    sat.inequality_index = static_cast<int>(i);
    for (const auto& v : alice.vertices) {
      if (novel[i].saturates(v)) ++sat.alice_first_saturating;
    }
    for (const auto& v : bob.vertices) {
      if (novel[i].saturates(v)) ++sat.bob_first_saturating;
    }
    ok = ok && sat.alice_first_saturating > 0 && sat.bob_first_saturating > 0;
    report.saturation.push_back(sat);
  }

  report.all_claims_hold = ok && report.definite_vertices_satisfy_all;
  return report;
}

}  // namespace nbts
