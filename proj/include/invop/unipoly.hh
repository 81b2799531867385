#ifndef INVOP_UNIPOLY_HH
#define INVOP_UNIPOLY_HH

#include <string>
#include <utility>
#include <vector>

#include "invop/coeff_ring.hh"
#include "invop/format.hh"

namespace invop {

// Univariate polynomial in t over a coefficient ring R. The coefficient list
// is never empty (the zero polynomial keeps one zero coefficient so the ring
// context survives) and carries no trailing zeros otherwise.
template <CoeffRing R>
class UniPoly {
 public:
  explicit UniPoly(R constant) : c_{std::move(constant)} {}

  static UniPoly zero(const R& ctx) { return UniPoly(ring_zero(ctx)); }
  static UniPoly one(const R& ctx) { return UniPoly(ring_one(ctx)); }
  static UniPoly t(const R& ctx) {
    return from_coeffs({ring_zero(ctx), ring_one(ctx)});
  }
  static UniPoly t_power(const R& ctx, unsigned k) {
    std::vector<R> c(k + 1, ring_zero(ctx));
    c.back() = ring_one(ctx);
    return from_coeffs(std::move(c));
  }
  static UniPoly from_coeffs(std::vector<R> coeffs) {
    if (coeffs.empty()) throw usage_error("empty coefficient list");
    UniPoly p(coeffs.front());
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  // -1 for the zero polynomial, otherwise the index of the last nonzero
  // coefficient.
  int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && ring_is_zero(c_[0]); }
  R context() const { return ring_zero(c_[0]); }
  R coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : ring_zero(c_[0]);
  }
  const std::vector<R>& coeffs() const { return c_; }
  R leading() const { return c_.back(); }

  UniPoly operator-() const {
    UniPoly r(*this);
    for (R& c : r.c_) c = -c;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    c_.resize(std::max(c_.size(), o.c_.size()), ring_zero(c_[0]));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    R z = ring_zero(a.c_[0]);
    if (a.is_zero() || b.is_zero()) return UniPoly(z);
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, z);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return from_coeffs(std::move(c));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly scaled(const R& s) const {
    UniPoly r(*this);
    for (R& c : r.c_) c = c * s;
    r.normalize();
    return r;
  }
  UniPoly scaled_q(const Rational& q) const { return scaled(ring_scalar(c_[0], q)); }

  // Horner evaluation at a ring element.
  R eval(const R& x) const {
    R acc = ring_zero(c_[0]);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // u(t + s), coefficients binomially expanded via Horner in (t + s).
  UniPoly shifted(const R& s) const {
    UniPoly t_plus_s = from_coeffs({s, ring_one(c_[0])});
    UniPoly acc = zero(c_[0]);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * t_plus_s + UniPoly(*it);
    return acc;
  }
  UniPoly shifted_q(const Rational& q) const { return shifted(ring_scalar(c_[0], q)); }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "t") const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (ring_is_zero(c_[i])) continue;
      std::string body = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if constexpr (std::is_same_v<R, Rational>) {
        parts.emplace_back(c_[i], body);
      } else {
        std::string text = "(" + ring_str(c_[i]) + ")";
        parts.emplace_back(Rational(1), body.empty() ? text : text + "*" + body);
      }
    }
    return join_terms(parts);
  }

 private:
  void normalize() {
    while (c_.size() > 1 && ring_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

// u(t + s) for a rational shift s.
template <CoeffRing R>
UniPoly<R> unipoly_shift(const UniPoly<R>& u, const Rational& s) {
  return u.shifted_q(s);
}

using UniPolyQ = UniPoly<Rational>;

}  // namespace invop

#endif
