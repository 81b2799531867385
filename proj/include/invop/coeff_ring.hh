#ifndef INVOP_COEFF_RING_HH
#define INVOP_COEFF_RING_HH

#include <concepts>
#include <string>

#include "invop/rational.hh"
#include "invop/sparse_poly.hh"

namespace invop {

// A commutative coefficient ring with unit is any value type providing ring
// arithmetic plus the context functions below. Shipped instances: Rational
// and SparsePoly (a polynomial ring used for centers larger than Q). The
// `context` argument carries whatever a bare type cannot, e.g. the ambient
// variable count of a SparsePoly.

inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_scalar(const Rational&, const Rational& q) { return q; }
inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline std::string ring_str(const Rational& a) { return a.str(); }

inline SparsePoly ring_zero(const SparsePoly& ctx) { return SparsePoly(ctx.nvars()); }
inline SparsePoly ring_one(const SparsePoly& ctx) {
  return SparsePoly::constant(ctx.nvars(), Rational(1));
}
inline SparsePoly ring_scalar(const SparsePoly& ctx, const Rational& q) {
  return SparsePoly::constant(ctx.nvars(), q);
}
inline bool ring_is_zero(const SparsePoly& a) { return a.is_zero(); }
inline std::string ring_str(const SparsePoly& a) { return a.str(); }

template <class R>
concept CoeffRing = std::equality_comparable<R> && std::copyable<R> &&
    requires(const R& a, const R& b, const Rational& q) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      { ring_zero(a) } -> std::convertible_to<R>;
      { ring_one(a) } -> std::convertible_to<R>;
      { ring_scalar(a, q) } -> std::convertible_to<R>;
      { ring_is_zero(a) } -> std::convertible_to<bool>;
    };

static_assert(CoeffRing<Rational>);
static_assert(CoeffRing<SparsePoly>);

}  // namespace invop

#endif
