#pragma once

#include <optional>
#include <vector>

#include "nbts/rational.hpp"

namespace nbts {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// Direction of a linear constraint `coeffs . z REL rhs`.
enum class Relation { GreaterEq, LessEq, Equal };

Rational dot(const Vec& a, const Vec& b);

/// y += c * x
void add_scaled(Vec& y, const Rational& c, const Vec& x);

bool is_zero(const Vec& v);

/// Reduces `m` in place to reduced row echelon form; returns the pivot
/// column of each remaining nonzero row. Zero rows are dropped.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Basis of { x : m x = 0 } for a matrix with `cols` columns.
Mat nullspace(const Mat& m, int cols);

/// Any exact solution of A x = b, or nothing if the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vec> solve_linear(Mat a, Vec b);

/// Scales a rational vector by a positive factor so that all entries are
/// integers with overall gcd 1. The zero vector is left untouched.
void scale_to_coprime_integers(Vec& v);

}  // namespace nbts
