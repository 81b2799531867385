#ifndef INVOP_FORMAT_HH
#define INVOP_FORMAT_HH

#include <string>
#include <utility>
#include <vector>

#include "invop/rational.hh"

namespace invop {

// Joins (coefficient, monomial-text) terms into the canonical signed sum,
// e.g. {(1,"x^2"), (-2,"x"), (3,"")} -> "x^2 - 2*x + 3". Empty input -> "0".
inline std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, body] : terms) {
    Rational a = coeff;
    if (first) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    if (body.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += body;
    } else {
      out += a.str() + "*" + body;
    }
  }
  return out;
}

}  // namespace invop

#endif
