#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nbts/polytope.hpp"

namespace nbts {

/// A bipartite correlation p(a,b|x,y) over binary outcomes a,b and binary
/// inputs x,y: sixteen exact probabilities, normalized per input pair.
struct Correlation {
  std::array<Rational, 16> table{};

  static int index(int a, int b, int x, int y) { return ((a * 2 + b) * 2 + x) * 2 + y; }

  const Rational& p(int a, int b, int x, int y) const { return table[index(a, b, x, y)]; }
  Rational& p(int a, int b, int x, int y) { return table[index(a, b, x, y)]; }

  /// Throws InvalidInput if any entry leaves [0,1] or any input pair's
  /// block does not sum to one. The message names the offending entry.
  void validate() const;

  bool operator==(const Correlation& other) const = default;
};

/// p_A(a|x,y): Alice's outcome marginal in context (x,y).
Rational marginal_a(const Correlation& c, int a, int x, int y);
/// p_B(b|x,y): Bob's outcome marginal in context (x,y).
Rational marginal_b(const Correlation& c, int b, int x, int y);

/// Relative global time ordering governing which marginal-independence
/// equalities apply. Weak constrains p_A per y and p_B per x; AliceFirst
/// additionally forces p_A input-independent; BobFirst the mirror image;
/// Simultaneous forces both.
enum class TimeOrdering { Weak, AliceFirst, BobFirst, Simultaneous };

std::string to_string(TimeOrdering ordering);
std::optional<TimeOrdering> parse_ordering(std::string_view name);

/// One violated marginal equality, with both evaluated sides.
struct EqualityViolation {
  char party;               // 'A' or 'B'
  int outcome;              // the a (or b) value the marginal fixes
  std::array<int, 2> lhs_context;  // (x, y) on the left side
  std::array<int, 2> rhs_context;  // (x, y) on the right side
  Rational lhs_value;
  Rational rhs_value;

  std::string describe() const;
};

struct NbtsCheck {
  bool passed = true;
  std::vector<EqualityViolation> violations;
};

/// Checks every marginal equality of the chosen regime, collecting all
/// violations rather than stopping at the first.
NbtsCheck nbts_check(const Correlation& c, TimeOrdering ordering);

// Vertex family generators. All parameters are bits.

/// a = mu y + alpha, b = nu x + beta (mod 2), deterministically.
Correlation deterministic_vertex(int alpha, int beta, int mu, int nu);
/// The guess-your-neighbour's-input box: a = y + alpha, b = x + beta.
Correlation gyni_vertex(int alpha, int beta);
/// Uniform-marginal box with a + b = (x + gamma)(y + delta) + epsilon.
Correlation pr_like_vertex(int gamma, int delta, int epsilon);
/// Uniform-marginal box with a + b = x + y + alpha.
Correlation linear_vertex(int alpha);
/// pr_like_vertex(0, 0, 0).
Correlation pr_box();
/// p(a,b|x,y) = 1/4 everywhere.
Correlation uniform_box();

/// Entrywise q . first + (1-q) . second. Throws InvalidInput when q is
/// outside [0,1].
Correlation mix(const Rational& q, const Correlation& first, const Correlation& second);

/// Exchanges the two parties: p'(a,b|x,y) = p(b,a|y,x).
Correlation swap_parties(const Correlation& c);

/// The eight-coordinate embedding of a weak-NBTS correlation, ordered as
/// (p_A(0|y=0), p_A(0|y=1), p_B(0|x=0), p_B(0|x=1),
///  p(0,0|0,0), p(0,0|0,1), p(0,0|1,0), p(0,0|1,1)).
struct NbtsPoint {
  std::array<Rational, 8> coords{};

  Point to_point() const { return Point(Vec(coords.begin(), coords.end())); }

  bool operator==(const NbtsPoint& other) const = default;
};

inline constexpr int kNbtsDim = 8;

/// Names of the eight coordinates, in order.
const std::array<std::string, 8>& nbts_coordinate_names();

/// Embeds a correlation. Throws InvalidInput (quoting the violated
/// equality) unless the correlation passes the Weak check, without which
/// the marginals p_A(0|y), p_B(0|x) are ill-defined.
NbtsPoint to_coords(const Correlation& c);

/// Reconstructs the full table. Throws InvalidInput (naming the offending
/// entry) when any reconstructed probability leaves [0,1].
Correlation from_coords(const NbtsPoint& p);

/// Swap symmetry on coordinates, matching swap_parties on tables.
NbtsPoint swap_parties(const NbtsPoint& p);

/// Family tag for the named extremal correlations.
struct VertexLabel {
  enum class Family { Deterministic, Gyni, PrLike, Linear };
  Family family;
  std::vector<int> params;

  std::string name() const;
};

/// Matches a correlation against the named families (the four GYNI boxes
/// are reported as Gyni, not Deterministic). Unnamed correlations yield
/// nothing.
std::optional<VertexLabel> classify(const Correlation& c);

}  // namespace nbts
