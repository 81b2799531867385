#ifndef INVOP_LAURENT_HH
#define INVOP_LAURENT_HH

#include <map>

#include "invop/smith.hh"
#include "invop/unipoly.hh"
#include "invop/word.hh"

namespace invop {

// Element of the localized model T = (+)_{p in Z} A[e] x^p with x invertible:
// a finite map p -> g_p representing sum x^p g_p(e). The product follows the
// exchange rule g(e) x^q = x^q g(e + q n).
template <CoeffRing R>
class LaurentElement {
 public:
  using CompMap = std::map<int, UniPoly<R>>;

  explicit LaurentElement(R proto) : proto_(std::move(proto)) {}

  static LaurentElement zero(const R& proto) { return LaurentElement(ring_zero(proto)); }
  static LaurentElement unit(const R& proto) {
    return monomial(0, UniPoly<R>::one(proto));
  }
  static LaurentElement x_power(const R& proto, int p) {
    return monomial(p, UniPoly<R>::one(proto));
  }
  static LaurentElement monomial(int p, UniPoly<R> g) {
    LaurentElement el(g.context());
    el.add_component(p, std::move(g));
    return el;
  }
  static LaurentElement from_poly(UniPoly<R> g) { return monomial(0, std::move(g)); }

  bool is_zero() const { return c_.empty(); }
  const CompMap& components() const { return c_; }
  R proto() const { return proto_; }
  UniPoly<R> component(int p) const {
    auto it = c_.find(p);
    return it == c_.end() ? UniPoly<R>::zero(proto_) : it->second;
  }

  void add_component(int p, const UniPoly<R>& g) {
    if (g.is_zero()) return;
    auto [it, inserted] = c_.emplace(p, g);
    if (!inserted) {
      it->second += g;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  LaurentElement operator-() const {
    LaurentElement r(proto_);
    for (const auto& [p, g] : c_) r.c_.emplace(p, -g);
    return r;
  }
  LaurentElement& operator+=(const LaurentElement& o) {
    for (const auto& [p, g] : o.c_) add_component(p, g);
    return *this;
  }
  LaurentElement& operator-=(const LaurentElement& o) {
    for (const auto& [p, g] : o.c_) add_component(p, -g);
    return *this;
  }
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  LaurentElement scaled(const R& s) const {
    LaurentElement r(proto_);
    for (const auto& [p, g] : c_) r.add_component(p, g.scaled(s));
    return r;
  }

  bool operator==(const LaurentElement& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentElement& o) const { return !(*this == o); }

  std::string str(const std::string& evar = "e") const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      std::string g = it->second.str(evar);
      std::string piece;
      if (it->first == 0)
        piece = g;
      else if (it->first == 1)
        piece = "x*(" + g + ")";
      else
        piece = "x^" + std::to_string(it->first) + "*(" + g + ")";
      if (!out.empty()) out += " + ";
      out += piece;
    }
    return out;
  }

 private:
  R proto_;
  CompMap c_;
};

// (x^p g(e)) (x^q h(e)) = x^{p+q} g(e + q n) h(e). Associative with unit 1.
template <CoeffRing R>
LaurentElement<R> laurent_mul(const LaurentElement<R>& a, const LaurentElement<R>& b, int n) {
  LaurentElement<R> r = LaurentElement<R>::zero(a.proto());
  for (const auto& [p, g] : a.components())
    for (const auto& [q, h] : b.components())
      r.add_component(p + q, g.shifted_q(Rational(static_cast<long>(q) * n)) * h);
  return r;
}

// tau(D) = X D X^{-1}: on x^p g(e) this is x^p g(e - n), an automorphism
// that stabilizes the degree-zero part A[e].
template <CoeffRing R>
LaurentElement<R> tau(const LaurentElement<R>& a, int n) {
  LaurentElement<R> r = LaurentElement<R>::zero(a.proto());
  for (const auto& [p, g] : a.components())
    r.add_component(p, g.shifted_q(Rational(-n)));
  return r;
}

template <CoeffRing R>
LaurentElement<R> tau_inv(const LaurentElement<R>& a, int n) {
  return tau(a, -n);
}

// Evaluates a word sum over the letters x, y, e, x^-1 in T, with
// y = x^-1 u(e) so that x y = u(e) and y x = u(e + n).
template <CoeffRing R>
LaurentElement<R> eval_word_laurent(const FreeElt<R>& elem, const UPresentation<R>& pres) {
  R ctx = pres.u.context();
  LaurentElement<R> images[4] = {
      LaurentElement<R>::x_power(ctx, 1),
      LaurentElement<R>::monomial(-1, pres.u),
      LaurentElement<R>::from_poly(UniPoly<R>::t(ctx)),
      LaurentElement<R>::x_power(ctx, -1),
  };
  LaurentElement<R> total = LaurentElement<R>::zero(ctx);
  for (const auto& [w, c] : elem.terms()) {
    LaurentElement<R> prod = LaurentElement<R>::unit(ctx);
    for (std::uint8_t l : w) prod = laurent_mul(prod, images[l], pres.n);
    total += prod.scaled(c);
  }
  return total;
}

// The embedding U(A, u, n) -> T given by x -> x, e -> e, y -> x^-1 u(e).
template <CoeffRing R>
LaurentElement<R> embed_u(const UNormalForm<R>& nf, const UPresentation<R>& pres) {
  return eval_word_laurent(nf.to_words(), pres);
}

// Laurent polynomial in t: the radial model C[t, t^-1] on which T acts.
class RadialVector {
 public:
  using TermMap = std::map<int, Rational>;

  RadialVector() = default;
  static RadialVector t_power(int k) {
    RadialVector v;
    v.add_term(k, Rational(1));
    return v;
  }

  bool is_zero() const { return c_.empty(); }
  const TermMap& terms() const { return c_; }
  void add_term(int k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  bool operator==(const RadialVector& o) const { return c_ == o.c_; }
  bool operator!=(const RadialVector& o) const { return !(*this == o); }

  std::string str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      std::string body;
      if (it->first == 1) body = "t";
      else if (it->first != 0) body = "t^" + std::to_string(it->first);
      parts.emplace_back(it->second, body);
    }
    return join_terms(parts);
  }

 private:
  TermMap c_;
};

// The radial representation with n = d0: (x^p g(e)) t^k = g(k d0) t^{k+p}.
inline RadialVector radial_act(const LaurentElement<Rational>& elem, const RadialVector& v,
                               int d0) {
  RadialVector out;
  for (const auto& [p, g] : elem.components())
    for (const auto& [k, c] : v.terms())
      out.add_term(k + p, c * g.eval(Rational(static_cast<long>(k) * d0)));
  return out;
}

// The model form of T0 = Z(T) (+) E T0 over A = Q: every g in Q[e] splits
// uniquely as g(0) + e h(e).
inline std::pair<Rational, UniPolyQ> split_constant(const UniPolyQ& g) {
  Rational c0 = g.coeff(0);
  std::vector<Rational> rest;
  for (int j = 1; j <= g.degree(); ++j) rest.push_back(g.coeff(j));
  if (rest.empty()) rest.push_back(Rational(0));
  return {c0, UniPolyQ::from_coeffs(std::move(rest))};
}

}  // namespace invop

#endif
