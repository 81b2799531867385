#ifndef INVOP_SPARSE_POLY_HH
#define INVOP_SPARSE_POLY_HH

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invop/multi_index.hh"
#include "invop/rational.hh"

namespace invop {

// Sparse multivariate polynomial over Q: a finite map MultiIndex -> Rational
// holding only nonzero coefficients, keyed in graded lexicographic order.
// Two polynomials are equal iff their maps are equal.
class SparsePoly {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
  static SparsePoly constant(std::size_t nvars, Rational c);
  static SparsePoly monomial(MultiIndex alpha, Rational c);
  static SparsePoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Total degree of the grlex-leading term. Zero polynomial has no degree.
  std::optional<unsigned long> degree() const;
  // Present iff nonzero and all terms share one total degree.
  std::optional<unsigned long> homogeneous_degree() const;
  // Constant term (coefficient of the empty monomial).
  Rational constant_term() const;

  void add_term(const MultiIndex& alpha, const Rational& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly scaled(const Rational& c) const;
  SparsePoly pow(unsigned long k) const;

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  // Terms printed in descending grlex order. Default names are x1..xN.
  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  void check_same_nvars(const SparsePoly& o) const;
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace invop

#endif
