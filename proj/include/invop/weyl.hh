#ifndef INVOP_WEYL_HH
#define INVOP_WEYL_HH

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invop/sparse_poly.hh"

namespace invop {

// Differential operator with polynomial coefficients in normal order:
// a finite map (alpha, beta) -> coefficient representing
// sum c_{alpha,beta} x^alpha d^beta with every x to the left of every d.
// Normal order is the unique stored form, so equality is map equality.
class WeylOp {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;
  using TermMap = std::map<Key, Rational>;

  explicit WeylOp(std::size_t nvars) : nvars_(nvars) {}
  static WeylOp constant(std::size_t nvars, Rational c);
  static WeylOp coordinate(std::size_t nvars, std::size_t i);  // x_i
  static WeylOp partial(std::size_t nvars, std::size_t i);     // d_i
  // Multiplication by a polynomial.
  static WeylOp mult_by(const SparsePoly& p);
  // p(d): the constant-coefficient operator with symbol p.
  static WeylOp constant_coeff(const SparsePoly& p);
  // sum_i x_i d_i
  static WeylOp euler(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const MultiIndex& alpha, const MultiIndex& beta, const Rational& c);

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  // Normal-ordered product via the Leibniz exchange
  //   d^b x^g = sum_{k <= min(b,g)} prod_i C(b_i,k_i) g_i!/(g_i-k_i)! x^{g-k} d^{b-k}.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  WeylOp& operator*=(const WeylOp& o) { return *this = *this * o; }
  WeylOp scaled(const Rational& c) const;

  // Exact action on a polynomial:
  //   x^a d^b (x^g) = prod_i g_i!/(g_i-b_i)! x^{a+g-b} when b <= g, else 0.
  SparsePoly apply(const SparsePoly& p) const;

  bool operator==(const WeylOp& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const WeylOp& o) const { return !(*this == o); }

  // Derivatives print as dx_<name>. Default names are x1..xN.
  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  void check_same_nvars(const WeylOp& o) const;
  std::size_t nvars_;
  TermMap terms_;
};

WeylOp commutator(const WeylOp& a, const WeylOp& b);

// The integer m with [E, D] = m*D when one exists (D homogeneous for the
// grading defined by E); empty otherwise. The zero operator reports 0.
std::optional<long> graded_degree(const WeylOp& d, const WeylOp& euler);

// Splits D into pieces of constant grade |alpha| - |beta|, i.e. the
// eigenspaces of [E, .] for the standard Euler operator.
std::map<long, WeylOp> split_by_euler_grade(const WeylOp& d);

}  // namespace invop

#endif
