#include "nbts/correlation.hpp"

#include <sstream>

namespace nbts {

namespace {

std::string entry_name(int a, int b, int x, int y) {
  std::ostringstream out;
  out << "p(" << a << "," << b << "|" << x << "," << y << ")";
  return out.str();
}

}  // namespace

void Correlation::validate() const {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      Rational sum = 0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const Rational& v = p(a, b, x, y);
          if (v < 0 || v > 1) {
            throw InvalidInput(entry_name(a, b, x, y) + " = " + to_string(v) +
                               " is outside [0,1]");
          }
          sum += v;
        }
      }
      if (sum != 1) {
        std::ostringstream out;
        out << "block x=" << x << ",y=" << y << " sums to " << sum << ", expected 1";
        throw InvalidInput(out.str());
      }
    }
  }
}

Rational marginal_a(const Correlation& c, int a, int x, int y) {
  return c.p(a, 0, x, y) + c.p(a, 1, x, y);
}

Rational marginal_b(const Correlation& c, int b, int x, int y) {
  return c.p(0, b, x, y) + c.p(1, b, x, y);
}

std::string to_string(TimeOrdering ordering) {
  switch (ordering) {
    case TimeOrdering::Weak:
      return "weak";
    case TimeOrdering::AliceFirst:
      return "alice-first";
    case TimeOrdering::BobFirst:
      return "bob-first";
    case TimeOrdering::Simultaneous:
      return "simultaneous";
  }
  return "?";
}

std::optional<TimeOrdering> parse_ordering(std::string_view name) {
  if (name == "weak") return TimeOrdering::Weak;
  if (name == "alice-first") return TimeOrdering::AliceFirst;
  if (name == "bob-first") return TimeOrdering::BobFirst;
  if (name == "simultaneous") return TimeOrdering::Simultaneous;
  return std::nullopt;
}

std::string EqualityViolation::describe() const {
  std::ostringstream out;
  out << "p_" << party << "(" << outcome << "|x=" << lhs_context[0] << ",y=" << lhs_context[1]
      << ") = " << lhs_value << " differs from p_" << party << "(" << outcome
      << "|x=" << rhs_context[0] << ",y=" << rhs_context[1] << ") = " << rhs_value;
  return out.str();
}

namespace {

// Context pairs whose marginals must agree. For the weak condition only
// the other party's input may vary; once a party is known to act first its
// marginal must be context-free, which the chain (0,0)~(1,0), (0,1)~(1,1),
// (0,0)~(0,1) pins down.
using ContextPair = std::array<std::array<int, 2>, 2>;

const std::vector<ContextPair>& vary_x_pairs() {
  static const std::vector<ContextPair> pairs = {
      {{{0, 0}, {1, 0}}},
      {{{0, 1}, {1, 1}}},
  };
  return pairs;
}

const std::vector<ContextPair>& vary_y_pairs() {
  static const std::vector<ContextPair> pairs = {
      {{{0, 0}, {0, 1}}},
      {{{1, 0}, {1, 1}}},
  };
  return pairs;
}

const std::vector<ContextPair>& all_context_pairs() {
  static const std::vector<ContextPair> pairs = {
      {{{0, 0}, {1, 0}}},
      {{{0, 1}, {1, 1}}},
      {{{0, 0}, {0, 1}}},
  };
  return pairs;
}

void check_party(const Correlation& c, char party, const std::vector<ContextPair>& pairs,
                 NbtsCheck& result) {
  for (int outcome = 0; outcome < 2; ++outcome) {
    for (const auto& pr : pairs) {
      const auto& l = pr[0];
      const auto& r = pr[1];
      Rational lhs = party == 'A' ? marginal_a(c, outcome, l[0], l[1])
                                  : marginal_b(c, outcome, l[0], l[1]);
      Rational rhs = party == 'A' ? marginal_a(c, outcome, r[0], r[1])
                                  : marginal_b(c, outcome, r[0], r[1]);
      if (lhs != rhs) {
        result.passed = false;
        result.violations.push_back({party, outcome, l, r, lhs, rhs});
      }
    }
  }
}

}  // namespace

NbtsCheck nbts_check(const Correlation& c, TimeOrdering ordering) {
  NbtsCheck result;
  const bool alice_first =
      ordering == TimeOrdering::AliceFirst || ordering == TimeOrdering::Simultaneous;
  const bool bob_first =
      ordering == TimeOrdering::BobFirst || ordering == TimeOrdering::Simultaneous;
  check_party(c, 'A', alice_first ? all_context_pairs() : vary_x_pairs(), result);
  check_party(c, 'B', bob_first ? all_context_pairs() : vary_y_pairs(), result);
  return result;
}

Correlation deterministic_vertex(int alpha, int beta, int mu, int nu) {
  Correlation c;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int a = (mu * y + alpha) % 2;
      const int b = (nu * x + beta) % 2;
      c.p(a, b, x, y) = 1;
    }
  }
  return c;
}

Correlation gyni_vertex(int alpha, int beta) { return deterministic_vertex(alpha, beta, 1, 1); }

Correlation pr_like_vertex(int gamma, int delta, int epsilon) {
  Correlation c;
  const Rational half(1, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int parity = ((x ^ gamma) & (y ^ delta)) ^ epsilon;
      for (int a = 0; a < 2; ++a) {
        c.p(a, a ^ parity, x, y) = half;
      }
    }
  }
  return c;
}

Correlation linear_vertex(int alpha) {
  Correlation c;
  const Rational half(1, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int parity = x ^ y ^ alpha;
      for (int a = 0; a < 2; ++a) {
        c.p(a, a ^ parity, x, y) = half;
      }
    }
  }
  return c;
}

Correlation pr_box() { return pr_like_vertex(0, 0, 0); }

Correlation uniform_box() {
  Correlation c;
  c.table.fill(Rational(1, 4));
  return c;
}

Correlation mix(const Rational& q, const Correlation& first, const Correlation& second) {
  if (q < 0 || q > 1) {
    throw InvalidInput("mixing weight " + to_string(q) + " is outside [0,1]");
  }
  Correlation c;
  for (std::size_t i = 0; i < c.table.size(); ++i) {
    c.table[i] = q * first.table[i] + (1 - q) * second.table[i];
  }
  return c;
}

Correlation swap_parties(const Correlation& c) {
  Correlation out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          out.p(a, b, x, y) = c.p(b, a, y, x);
        }
      }
    }
  }
  return out;
}

const std::array<std::string, 8>& nbts_coordinate_names() {
  static const std::array<std::string, 8> names = {
      "p_A(0|y=0)", "p_A(0|y=1)", "p_B(0|x=0)", "p_B(0|x=1)",
      "p(0,0|0,0)", "p(0,0|0,1)", "p(0,0|1,0)", "p(0,0|1,1)",
  };
  return names;
}

NbtsPoint to_coords(const Correlation& c) {
  NbtsCheck weak = nbts_check(c, TimeOrdering::Weak);
  if (!weak.passed) {
    throw InvalidInput("correlation violates the weak NBTS conditions: " +
                       weak.violations.front().describe());
  }
  NbtsPoint p;
  p.coords[0] = marginal_a(c, 0, 0, 0);  // x-independent under Weak
  p.coords[1] = marginal_a(c, 0, 0, 1);
  p.coords[2] = marginal_b(c, 0, 0, 0);  // y-independent under Weak
  p.coords[3] = marginal_b(c, 0, 1, 0);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      p.coords[4 + 2 * x + y] = c.p(0, 0, x, y);
    }
  }
  return p;
}

Correlation from_coords(const NbtsPoint& p) {
  Correlation c;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const Rational& pa = p.coords[y];
      const Rational& pb = p.coords[2 + x];
      const Rational& joint = p.coords[4 + 2 * x + y];
      c.p(0, 0, x, y) = joint;
      c.p(0, 1, x, y) = pa - joint;
      c.p(1, 0, x, y) = pb - joint;
      c.p(1, 1, x, y) = 1 - pa - pb + joint;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const Rational& v = c.p(a, b, x, y);
          if (v < 0 || v > 1) {
            throw InvalidInput("coordinates reconstruct " + entry_name(a, b, x, y) + " = " +
                               to_string(v) + ", outside [0,1]");
          }
        }
      }
    }
  }
  return c;
}

NbtsPoint swap_parties(const NbtsPoint& p) {
  NbtsPoint out;
  out.coords[0] = p.coords[2];
  out.coords[1] = p.coords[3];
  out.coords[2] = p.coords[0];
  out.coords[3] = p.coords[1];
  out.coords[4] = p.coords[4];  // p(0,0|x,y) -> p(0,0|y,x)
  out.coords[5] = p.coords[6];
  out.coords[6] = p.coords[5];
  out.coords[7] = p.coords[7];
  return out;
}

std::string VertexLabel::name() const {
  std::ostringstream out;
  switch (family) {
    case Family::Deterministic:
      out << "det";
      break;
    case Family::Gyni:
      out << "gyni";
      break;
    case Family::PrLike:
      out << "pr-like";
      break;
    case Family::Linear:
      out << "linear";
      break;
  }
  out << "-";
  for (int p : params) out << p;
  return out.str();
}

std::optional<VertexLabel> classify(const Correlation& c) {
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      for (int mu = 0; mu < 2; ++mu) {
        for (int nu = 0; nu < 2; ++nu) {
          if (c == deterministic_vertex(alpha, beta, mu, nu)) {
            if (mu == 1 && nu == 1) {
              return VertexLabel{VertexLabel::Family::Gyni, {alpha, beta}};
            }
            return VertexLabel{VertexLabel::Family::Deterministic, {alpha, beta, mu, nu}};
          }
        }
      }
    }
  }
  for (int gamma = 0; gamma < 2; ++gamma) {
    for (int delta = 0; delta < 2; ++delta) {
      for (int epsilon = 0; epsilon < 2; ++epsilon) {
        if (c == pr_like_vertex(gamma, delta, epsilon)) {
          return VertexLabel{VertexLabel::Family::PrLike, {gamma, delta, epsilon}};
        }
      }
    }
  }
  for (int alpha = 0; alpha < 2; ++alpha) {
    if (c == linear_vertex(alpha)) {
      return VertexLabel{VertexLabel::Family::Linear, {alpha}};
    }
  }
  return std::nullopt;
}

}  // namespace nbts
