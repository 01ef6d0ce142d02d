#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nbts/correlation.hpp"
#include "nbts/geometry.hpp"

namespace nbts {

enum class PolytopeId { Nbts, AliceFirst, BobFirst, DefiniteGlobal, SetQ };

/// A catalog polytope identifier; `q` is the probability that Alice's lab
/// acts first and is only meaningful for SetQ.
struct PolytopeName {
  PolytopeId id = PolytopeId::Nbts;
  Rational q;

  static PolytopeName set_q(Rational q) { return {PolytopeId::SetQ, std::move(q)}; }

  std::string str() const;
};

std::optional<PolytopeId> parse_polytope_id(std::string_view name);

/// A catalog polytope with mutually consistent dual descriptions.
struct NamedPolytope {
  PolytopeName name;
  PolytopeV vertices;
  std::vector<std::optional<VertexLabel>> labels;  // parallel to vertices
  PolytopeH facets;
  int dimension = -1;
};

/// H-description of the correlations obeying the chosen regime's NBTS
/// condition equalities, in the eight embedding coordinates: the sixteen
/// entry nonnegativity constraints plus the regime's marginal equalities.
PolytopeH nbts_conditions_hrep(TimeOrdering ordering);

/// The eight variation bounds obeyed by correlations with the given party
/// strictly first, beyond the condition equalities. With Alice first the
/// last input is y, and the influence y may exert on the joint at Alice
/// input x is capped by Bob's outcome uncertainty at the other input:
///   |p(0,0|x,y=0) - p(0,0|x,y=1)| <= p_B(b|xbar)   for both b.
/// Bob first is the mirror image. Only defined for AliceFirst/BobFirst.
std::vector<Inequality> ordering_variation_bounds(TimeOrdering ordering);

/// Complete H-description of the AliceFirst or BobFirst polytope: the
/// condition equalities, entry nonnegativity, and the variation bounds.
/// (The bare condition set is strictly larger: it admits boxes that mix a
/// deterministic branch with a parity branch, which lie outside the
/// one-party-first polytopes.)
PolytopeH one_party_first_hrep(TimeOrdering ordering);

/// Constructs a catalog polytope from first principles: the condition
/// polytopes by vertex enumeration of their H-descriptions, DefiniteGlobal
/// as the extremal subset of the AliceFirst/BobFirst vertex union, SetQ as
/// the extremal subset of all 20 x 20 ordered mixtures. Throws InvalidInput
/// when q is outside [0,1].
NamedPolytope build(const PolytopeName& name);

/// The two families of facet inequalities specific to the definite-timing
/// polytope, at the canonical outcome choice a = b = 0:
/// DiagonalFloor:  p_A(a|y) + p_B(b|x) - p(a,b|x,y) - p(a,b|xbar,ybar) >= 0
/// CrossCeiling:   p_A(a|y) + p_B(b|x) - p(a,b|x,ybar) - p(a,b|xbar,y) <= 1
enum class NovelKind { DiagonalFloor, CrossCeiling };

struct NovelInequality {
  Inequality canonical;
  NovelKind kind;
  int a, b, x, y;
};

/// The eight canonical facet inequalities (four per kind, over the four
/// (x,y) instances), expressed over the embedding coordinates.
std::vector<Inequality> novel_inequalities();

/// As above with provenance; with `expand_outcomes` all four (a,b) choices
/// are generated (32 presentations that canonicalize onto the same eight
/// facets).
std::vector<NovelInequality> novel_inequalities_detailed(bool expand_outcomes = false);

/// The four mixing-weight-dependent constraints of the SetQ polytope, as
/// one-sided inequalities: |p_A(0|y=0) - p_A(0|y=1)| <= 1-q and
/// |p_B(0|x=0) - p_B(0|x=1)| <= q. Throws InvalidInput when q is outside
/// [0,1].
std::vector<Inequality> q_inequalities(const Rational& q);

enum class Verdict { Satisfied, Saturated, Violated };

struct IneqEvaluation {
  Verdict verdict = Verdict::Satisfied;
  /// Exact margin: positive slack, zero when saturated, negative deficit.
  Rational margin;
};

IneqEvaluation evaluate_point(const Point& coords, const Inequality& ineq);

/// Evaluates an inequality on a correlation's embedding. Throws
/// InvalidInput when the correlation fails the weak NBTS check (its
/// embedding would be ill-defined).
IneqEvaluation evaluate_inequality(const Correlation& c, const Inequality& ineq);

struct MembershipReport {
  bool inside = false;
  Certificate certificate;
};

MembershipReport membership_report(const Correlation& c, const NamedPolytope& polytope);

/// Everything needed to audit the exclusion of the GYNI boxes from
/// definite-global-timing correlations.
struct GyniExclusionReport {
  struct PerVertex {
    VertexLabel label;
    NbtsPoint coords;
    bool weak_pass = false;
    bool outside_definite = false;
    Certificate certificate;
    std::vector<int> violated_novel;  // indices into novel_inequalities()
    std::vector<std::pair<Rational, std::vector<int>>> violated_q_dependent;
  };
  struct Saturation {
    int inequality_index = 0;
    int alice_first_saturating = 0;
    int bob_first_saturating = 0;
  };

  std::vector<PerVertex> gyni;
  /// No definite-global vertex violates any of the eight inequalities.
  bool definite_vertices_satisfy_all = false;
  std::vector<Saturation> saturation;
  bool all_claims_hold = false;
};

/// Runs the full exclusion audit: each GYNI box is certified outside the
/// definite-global polytope, violates at least one of the eight facet
/// inequalities, and violates at least one q-dependent inequality for
/// every q in `q_grid`; every facet inequality is saturated from both
/// one-party-first polytopes and satisfied by all definite-global
/// vertices.
GyniExclusionReport gyni_exclusion_report(const std::vector<Rational>& q_grid);

}  // namespace nbts
