#include "nbts/lp.hpp"

#include <cassert>

namespace nbts {

namespace {

// Dense simplex tableau in standard form: minimize cost . x subject to
// T x = rhs, x >= 0, with one basic column per row. The cost row `d`
// carries reduced costs; d_rhs carries minus the current objective value.
struct Tableau {
  Mat t;                   // m rows, n columns
  Vec rhs;                 // m entries, kept >= 0
  std::vector<int> basis;  // basic column of each row
  Vec d;                   // n reduced costs
  Rational d_rhs;

  int rows() const { return static_cast<int>(t.size()); }
  int cols() const { return t.empty() ? 0 : static_cast<int>(t[0].size()); }

  void pivot(int row, int col) {
    const Rational inv = Rational(1) / t[row][col];
    for (auto& e : t[row]) e *= inv;
    rhs[row] *= inv;
    for (int r = 0; r < rows(); ++r) {
      if (r == row || t[r][col] == 0) continue;
      const Rational f = -t[r][col];
      add_scaled(t[r], f, t[row]);
      rhs[r] += f * rhs[row];
    }
    if (d[col] != 0) {
      const Rational f = -d[col];
      add_scaled(d, f, t[row]);
      d_rhs += f * rhs[row];
    }
    basis[row] = col;
  }

  // Recomputes reduced costs for the given cost vector from scratch.
  void load_costs(const Vec& cost) {
    d = cost;
    d_rhs = 0;
    for (int r = 0; r < rows(); ++r) {
      const Rational cb = cost[basis[r]];
      if (cb == 0) continue;
      add_scaled(d, -cb, t[r]);
      d_rhs -= cb * rhs[r];
    }
  }

  // Entering column: steepest reduced cost while progress is smooth, with
  // a permanent switch to Bland's rule (lowest eligible index, ties in the
  // ratio test broken by smallest basic variable) once the iteration count
  // suggests stalling. Bland's rule guarantees termination on the heavily
  // degenerate bases that show up here. `allowed` masks columns eligible
  // to enter. Returns Optimal or Unbounded.
  LpStatus iterate(const std::vector<bool>& allowed) {
    const long bland_after = 3L * (rows() + cols()) + 50;
    long iterations = 0;
    for (;;) {
      const bool bland = iterations++ > bland_after;
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!allowed[j] || d[j] >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter < 0 || d[j] < d[enter]) enter = j;
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows(); ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = rhs[r] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const int n = problem.num_vars;
  assert(static_cast<int>(problem.objective.size()) == n);
  assert(problem.nonneg.empty() || static_cast<int>(problem.nonneg.size()) == n);
  for (const auto& row : problem.rows) {
    assert(static_cast<int>(row.coeffs.size()) == n);
  }

  // Column layout: one column per nonnegative variable, a (plus, minus)
  // pair per free variable, then slack/surplus columns, then artificials.
  std::vector<int> col_plus(n), col_minus(n, -1);
  int structural = 0;
  for (int j = 0; j < n; ++j) {
    const bool nn = !problem.nonneg.empty() && problem.nonneg[j];
    col_plus[j] = structural++;
    if (!nn) col_minus[j] = structural++;
  }

  const int m = static_cast<int>(problem.rows.size());
  int num_slacks = 0;
  for (const auto& row : problem.rows) {
    if (row.rel != Relation::Equal) ++num_slacks;
  }
  int num_artificials = 0;  // worst case: one per row
  for (const auto& row : problem.rows) {
    (void)row;
    ++num_artificials;
  }
  const int total = structural + num_slacks + num_artificials;

  Tableau tab;
  tab.t.assign(m, Vec(total, Rational(0)));
  tab.rhs.assign(m, Rational(0));
  tab.basis.assign(m, -1);

  int slack_at = structural;
  int art_at = structural + num_slacks;
  std::vector<bool> is_artificial(total, false);

  for (int r = 0; r < m; ++r) {
    const auto& row = problem.rows[r];
    Relation rel = row.rel;
    Rational rhs = row.rhs;
    Rational sign = 1;
    if (rhs < 0) {
      sign = -1;
      rhs = -rhs;
      if (rel == Relation::GreaterEq) {
        rel = Relation::LessEq;
      } else if (rel == Relation::LessEq) {
        rel = Relation::GreaterEq;
      }
    }
    for (int j = 0; j < n; ++j) {
      const Rational c = sign * row.coeffs[j];
      if (c == 0) continue;
      tab.t[r][col_plus[j]] = c;
      if (col_minus[j] >= 0) tab.t[r][col_minus[j]] = -c;
    }
    tab.rhs[r] = rhs;
    if (rel == Relation::LessEq) {
      tab.t[r][slack_at] = 1;
      tab.basis[r] = slack_at++;
    } else {
      if (rel == Relation::GreaterEq) tab.t[r][slack_at++] = -1;
      tab.t[r][art_at] = 1;
      is_artificial[art_at] = true;
      tab.basis[r] = art_at++;
    }
  }

  // Phase 1: minimize the sum of artificial variables.
  Vec phase1_cost(total, Rational(0));
  for (int j = 0; j < total; ++j) {
    if (is_artificial[j]) phase1_cost[j] = 1;
  }
  tab.load_costs(phase1_cost);
  std::vector<bool> allowed(total, true);
  LpStatus st = tab.iterate(allowed);
  assert(st == LpStatus::Optimal);  // phase 1 is bounded below by 0
  if (tab.d_rhs != 0) {             // minimum of sum(artificials) is -d_rhs
    LpSolution sol;
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot are
  // redundant and get dropped.
  for (int r = tab.rows() - 1; r >= 0; --r) {
    if (!is_artificial[tab.basis[r]]) continue;
    assert(tab.rhs[r] == 0);
    int col = -1;
    for (int j = 0; j < total; ++j) {
      if (!is_artificial[j] && tab.t[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(r, col);
    } else {
      tab.t.erase(tab.t.begin() + r);
      tab.rhs.erase(tab.rhs.begin() + r);
      tab.basis.erase(tab.basis.begin() + r);
    }
  }

  // Phase 2 on the original objective, artificial columns locked out.
  Vec phase2_cost(total, Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational c = problem.objective[j];
    if (problem.sense == Sense::Maximize) c = -c;
    phase2_cost[col_plus[j]] = c;
    if (col_minus[j] >= 0) phase2_cost[col_minus[j]] = -c;
  }
  tab.load_costs(phase2_cost);
  for (int j = 0; j < total; ++j) {
    if (is_artificial[j]) allowed[j] = false;
  }
  st = tab.iterate(allowed);
  if (st == LpStatus::Unbounded) {
    LpSolution sol;
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  Vec cols(total, Rational(0));
  for (int r = 0; r < tab.rows(); ++r) cols[tab.basis[r]] = tab.rhs[r];
  sol.point.assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    sol.point[j] = cols[col_plus[j]];
    if (col_minus[j] >= 0) sol.point[j] -= cols[col_minus[j]];
  }
  sol.value = -tab.d_rhs;
  if (problem.sense == Sense::Maximize) sol.value = -sol.value;
  return sol;
}

}  // namespace nbts
