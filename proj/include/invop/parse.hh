#ifndef INVOP_PARSE_HH
#define INVOP_PARSE_HH

#include <string>
#include <string_view>
#include <vector>

#include "invop/sparse_poly.hh"
#include "invop/unipoly.hh"
#include "invop/weyl.hh"
#include "invop/word.hh"

namespace invop {

// Shared grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?
//   atom   := identifier | rational | '(' expr ')'
// with rational literals p/q and a leading sign accepted on the first term.
// Products are explicit and left-associative; the word grammars are
// noncommutative.

// Commutative polynomial in the named variables.
SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

// Univariate polynomial over Q in the named variable (default t).
UniPolyQ parse_unipoly(std::string_view text, const std::string& var = "t");

// Word sum over a three-letter alphabet (names for x, y, e in that order).
// When allow_x_inverse is set, negative powers of the first letter are
// accepted and expand to the formal inverse letter.
WordSum parse_word_sum(std::string_view text, const std::vector<std::string>& letter_names,
                       bool allow_x_inverse = false);

// Differential operator: the polynomial grammar extended with dx_<name> or
// dx_<index> tokens for the partial derivatives; noncommutative product.
WeylOp parse_weyl_op(std::string_view text, const std::vector<std::string>& vars);

}  // namespace invop

#endif
