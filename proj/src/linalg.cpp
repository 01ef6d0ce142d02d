#include "nbts/linalg.hpp"

#include <cassert>

namespace nbts {

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

void add_scaled(Vec& y, const Rational& c, const Vec& x) {
  assert(y.size() == x.size());
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] += c * x[i];
  }
}

bool is_zero(const Vec& v) {
  for (const auto& e : v) {
    if (e != 0) return false;
  }
  return true;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r != row && m[r][col] != 0) {
        add_scaled(m[r], -m[r][col], m[row]);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Mat nullspace(const Mat& m, int cols) {
  Mat reduced = m;
  for (auto& r : reduced) assert(static_cast<int>(r.size()) == cols);
  std::vector<int> pivots = rref(reduced);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -reduced[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  std::vector<int> pivots = rref(a);
  Vec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // row 0 = nonzero
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

void scale_to_coprime_integers(Vec& v) {
  Int den_lcm = 1;
  for (const auto& e : v) {
    if (e != 0) den_lcm = lcm(den_lcm, denominator(e));
  }
  Int num_gcd = 0;
  for (const auto& e : v) {
    if (e != 0) num_gcd = gcd(num_gcd, Int(numerator(e) * (den_lcm / denominator(e))));
  }
  if (num_gcd == 0) return;
  const Rational factor = make_rational(den_lcm, num_gcd);
  for (auto& e : v) e *= factor;
}

}  // namespace nbts
