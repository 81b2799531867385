#ifndef INVOP_PVSPACE_HH
#define INVOP_PVSPACE_HH

#include <optional>
#include <string>
#include <vector>

#include "invop/laurent.hh"
#include "invop/report.hh"
#include "invop/smith.hh"
#include "invop/weyl.hh"
#include "invop/word.hh"

namespace invop {

struct SpaceDef {
  std::string name;
  std::vector<std::string> vars;
  std::string delta_text;
  std::string description;
};

// A multiplicity-free space with one-dimensional quotient, given by its
// fundamental invariant delta. Derived data: d0 = deg delta, the operators
// X (multiplication by delta), Y (the normalized constant-coefficient
// operator delta(d) with (Y delta)(0) = 1) and the Euler operator E.
class PVSpace {
 public:
  static const std::vector<SpaceDef>& catalog();
  static bool is_builtin(const std::string& name);
  // Builtin name, or a path to a definition file (name=/vars=/delta= lines).
  static PVSpace load(const std::string& name_or_path);
  static PVSpace from_definition_text(const std::string& text);
  static PVSpace make(std::string name, std::vector<std::string> vars, SparsePoly delta,
                      bool builtin);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const SparsePoly& delta() const { return delta_; }
  int d0() const { return d0_; }
  const WeylOp& X() const { return x_; }
  const WeylOp& Y() const { return y_; }
  const WeylOp& E() const { return e_; }
  // The scale c = sum c_alpha^2 alpha! with Y = (1/c) delta(d).
  const Rational& normalization() const { return norm_; }
  bool is_builtin_space() const { return builtin_; }

 private:
  PVSpace(std::string name, std::vector<std::string> vars, SparsePoly delta, bool builtin);
  std::string name_;
  std::vector<std::string> vars_;
  SparsePoly delta_;
  int d0_;
  Rational norm_;
  WeylOp x_;
  WeylOp y_;
  WeylOp e_;
  bool builtin_;
};

// b(k) for k = 0..K with Y delta^{k+1} = b(k) delta^k; each power is checked
// for exact proportionality and failure raises check_error.
struct BTable {
  std::vector<Rational> values;
};
BTable bfunction(const PVSpace& space, int max_power);

// Interpolates u through (d0 (k+1), b(k)), k = 0..d0, then requires every
// remaining b-point to lie on the curve; u(0) = 0 and deg u = d0 are
// asserted for builtin spaces.
UniPolyQ u_polynomial(const PVSpace& space, int max_power);

// Evaluates a word over X, Y, E at the Weyl level (letters x, y, e).
WeylOp eval_word_weyl(const WordSum& expr, const PVSpace& space);

// The radial component of expr: the element sum x^p g_p(e) of the localized
// model acting on powers of delta by (x^p g(e)) delta^k = g(k d0) delta^{k+p}.
// max_power < 0 grows the sample size until interpolation stabilizes.
LaurentElement<Rational> radial_component(const PVSpace& space, const WordSum& expr,
                                          int max_power = -1);

// The full verification suite for one space: grading, tau-exchange,
// b-proportionality, u extraction, commutativity of XY/YX, and agreement of
// the radial and abstract pipelines on a fixed word list.
Report verify_space(const PVSpace& space, int max_power);

// Dimension growth of the Lie algebra generated by X and Y.
std::vector<std::size_t> igusa_closure(const PVSpace& space, int depth);

}  // namespace invop

#endif
