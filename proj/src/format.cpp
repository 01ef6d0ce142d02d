#include "nbts/format.hpp"

#include <sstream>

namespace nbts {

namespace {

const char* relation_text(Relation rel) {
  switch (rel) {
    case Relation::GreaterEq:
      return ">=";
    case Relation::LessEq:
      return "<=";
    case Relation::Equal:
      return "=";
  }
  return "?";
}

void append_term(std::ostringstream& out, bool& first, const Rational& coeff,
                 const std::string& name) {
  if (coeff == 0) return;
  Rational magnitude = coeff < 0 ? Rational(-coeff) : coeff;
  if (first) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (magnitude != 1) out << magnitude << " ";
  out << name;
  first = false;
}

}  // namespace

std::string probability_form(const Inequality& ineq) {
  std::ostringstream out;
  bool first = true;
  const auto& names = nbts_coordinate_names();
  for (int i = 0; i < ineq.dim() && i < static_cast<int>(names.size()); ++i) {
    append_term(out, first, ineq.coeffs[i], names[i]);
  }
  if (first) out << "0";
  out << " " << relation_text(ineq.rel) << " " << ineq.bound;
  return out.str();
}

std::string coordinate_form(const Inequality& ineq) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < ineq.dim(); ++i) {
    if (i > 0) out << ",";
    out << ineq.coeffs[i];
  }
  out << ") . z " << relation_text(ineq.rel) << " " << ineq.bound;
  return out.str();
}

std::string correlation_table_text(const Correlation& c) {
  std::ostringstream out;
  out << "        (a,b)=00  (a,b)=01  (a,b)=10  (a,b)=11\n";
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      out << "x=" << x << ",y=" << y << " ";
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          std::string cell = to_string(c.p(a, b, x, y));
          out << " " << cell;
          for (std::size_t pad = cell.size(); pad < 9; ++pad) out << " ";
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string point_text(const Point& p) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < p.dim(); ++i) {
    if (i > 0) out << ", ";
    out << p.coords[i];
  }
  out << ")";
  return out.str();
}

}  // namespace nbts
