#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "invop/laurent.hh"
#include "invop/parse.hh"

using namespace invop;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

using LQ = LaurentElement<Rational>;

UniPolyQ upoly(const std::string& text) { return parse_unipoly(text); }

UniPolyQ random_upoly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rational> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(num(rng), den(rng));
  return UniPolyQ::from_coeffs(c);
}

LQ random_laurent(std::mt19937_64& rng, int max_p, int max_deg) {
  std::uniform_int_distribution<int> p(-max_p, max_p);
  std::uniform_int_distribution<int> comps(1, 3);
  LQ el = LQ::zero(q(0));
  int n = comps(rng);
  for (int i = 0; i < n; ++i) el.add_component(p(rng), random_upoly(rng, max_deg));
  return el;
}

}  // namespace

TEST_CASE("localization basics") {
  const int n = 2;
  LQ x = LQ::x_power(q(0), 1), xinv = LQ::x_power(q(0), -1);
  CHECK(laurent_mul(x, xinv, n) == LQ::unit(q(0)));

  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    UniPolyQ g = random_upoly(rng, 4);
    // g(e) x = x g(e+n)
    CHECK(laurent_mul(LQ::from_poly(g), x, n) ==
          LQ::monomial(1, g.shifted_q(Rational(n))));
  }

  // (x^-1 u(e)) x = u(e + n), the quotient relation y x = u(e + n).
  UniPolyQ u = upoly("1/4*t^2");
  CHECK(laurent_mul(LQ::monomial(-1, u), x, n) == LQ::from_poly(u.shifted_q(q(n))));
}

TEST_CASE("product associativity on random elements") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + iter % 3;
    LQ a = random_laurent(rng, 2, 3);
    LQ b = random_laurent(rng, 2, 3);
    LQ c = random_laurent(rng, 2, 3);
    CHECK(laurent_mul(laurent_mul(a, b, n), c, n) == laurent_mul(a, laurent_mul(b, c, n), n));
  }
}

TEST_CASE("tau is the conjugation by x") {
  const int n = 3;
  LQ e = LQ::from_poly(upoly("t"));
  CHECK(tau(e, n) == LQ::from_poly(upoly("t - 3")));

  // x e x^-1 computed directly in the model agrees.
  LQ x = LQ::x_power(q(0), 1), xinv = LQ::x_power(q(0), -1);
  CHECK(laurent_mul(laurent_mul(x, e, n), xinv, n) == tau(e, n));
  CHECK(tau(x, n) == x);
  CHECK(tau(LQ::from_poly(upoly("7")), n) == LQ::from_poly(upoly("7")));
}

TEST_CASE("tau is an automorphism with inverse shifting the other way") {
  std::mt19937_64 rng(400);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + iter % 4;
    LQ a = random_laurent(rng, 2, 3);
    LQ b = random_laurent(rng, 2, 3);
    CHECK(tau(laurent_mul(a, b, n), n) == laurent_mul(tau(a, n), tau(b, n), n));
    CHECK(tau_inv(tau(a, n), n) == a);
  }
}

TEST_CASE("constants are the only tau-fixed polynomials in e") {
  const int n = 2;
  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 40; ++iter) {
    UniPolyQ g = random_upoly(rng, 4);
    LQ el = LQ::from_poly(g);
    bool fixed = tau(el, n) == el;
    CHECK(fixed == (g.degree() <= 0));
  }
}

TEST_CASE("exchange relations through x and y") {
  std::mt19937_64 rng(31);
  UniPolyQ u = upoly("1/8*t^2 + 1/4*t");
  const int n = 2;
  LQ x = LQ::x_power(q(0), 1);
  LQ y = LQ::monomial(-1, u);
  for (int iter = 0; iter < 100; ++iter) {
    LQ d = random_laurent(rng, 3, 4);
    // X D = tau(D) X holds on all of T.
    CHECK(laurent_mul(x, d, n) == laurent_mul(tau(d, n), x, n));
  }
  for (int iter = 0; iter < 100; ++iter) {
    // D Y = Y tau(D) holds on the degree-zero part.
    LQ d0 = LQ::from_poly(random_upoly(rng, 5));
    CHECK(laurent_mul(d0, y, n) == laurent_mul(y, tau(d0, n), n));
  }
  // Outside degree zero the relation fails: D = x gives x y = u(e) on the
  // left but y tau(x) = y x = u(e + n) on the right.
  CHECK(laurent_mul(x, y, n) == LQ::from_poly(u));
  CHECK(laurent_mul(y, tau(x, n), n) == LQ::from_poly(u.shifted_q(q(n))));
  CHECK(laurent_mul(x, y, n) != laurent_mul(y, tau(x, n), n));
}

TEST_CASE("embedding of U-normal forms") {
  UniPolyQ u = upoly("1/4*t^2");
  const int n = 2;
  UPresentation<Rational> pres(u, n);

  UNormalForm<Rational> y_nf;
  y_nf.add_y_term(1, 0, q(1));
  CHECK(embed_u(y_nf, pres) == LQ::monomial(-1, u));

  WordSum xy_word = parse_word_sum("x*y", {"x", "y", "e"});
  CHECK(eval_word_laurent(xy_word, pres) == LQ::from_poly(u));

  UNormalForm<Rational> y2;
  y2.add_y_term(2, 0, q(1));
  CHECK(embed_u(y2, pres) == LQ::monomial(-2, u.shifted_q(q(-n)) * u));
}

TEST_CASE("embedding agrees with direct evaluation after normalization") {
  std::mt19937_64 rng(606);
  UniPolyQ u = upoly("1/6*t^2 + 1/6*t");
  UPresentation<Rational> pres(u, 2);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> letter_pick(0, 2);
  for (int iter = 0; iter < 100; ++iter) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(static_cast<std::uint8_t>(letter_pick(rng)));
    WordSum elem = WordSum::single(w, q(1 + iter % 5, 1 + iter % 2));
    CHECK(embed_u(u_normalize(elem, pres), pres) == eval_word_laurent(elem, pres));
  }
}

TEST_CASE("radial action on powers of t") {
  const int d0 = 1;
  UniPolyQ u = upoly("t");
  LQ x = LQ::x_power(q(0), 1);
  LQ y = LQ::monomial(-1, u);
  LQ e = LQ::from_poly(upoly("t"));

  for (int k = -2; k <= 4; ++k) {
    RadialVector tk = RadialVector::t_power(k);
    CHECK(radial_act(x, tk, d0) == RadialVector::t_power(k + 1));
    RadialVector ek = radial_act(e, tk, d0);
    RadialVector expect_e;
    expect_e.add_term(k, q(k));
    CHECK(ek == expect_e);
    // rank-one: y t^k = k t^{k-1}, exactly d/dt.
    RadialVector yk = radial_act(y, tk, d0);
    RadialVector expect_y;
    expect_y.add_term(k - 1, q(k));
    CHECK(yk == expect_y);
  }
}

TEST_CASE("radial action is a representation") {
  std::mt19937_64 rng(8080);
  for (int iter = 0; iter < 100; ++iter) {
    int d0 = 1 + iter % 3;
    LQ a = random_laurent(rng, 2, 3);
    LQ b = random_laurent(rng, 2, 3);
    RadialVector v;
    std::uniform_int_distribution<int> kpick(-3, 5);
    v.add_term(kpick(rng), q(1 + iter % 4));
    v.add_term(kpick(rng), q(-2, 3));
    CHECK(radial_act(laurent_mul(a, b, d0), v, d0) ==
          radial_act(a, radial_act(b, v, d0), d0));
  }
}

TEST_CASE("radial action is faithful on graded pieces") {
  std::mt19937_64 rng(1999);
  std::uniform_int_distribution<int> ppick(-3, 3);
  for (int iter = 0; iter < 60; ++iter) {
    int d0 = 1 + iter % 3;
    UniPolyQ g = random_upoly(rng, 4);
    if (g.is_zero()) continue;
    int p = ppick(rng);
    LQ el = LQ::monomial(p, g);
    bool all_zero = true;
    for (int k = 0; k <= g.degree() + 1; ++k)
      if (!radial_act(el, RadialVector::t_power(k), d0).is_zero()) all_zero = false;
    CHECK_FALSE(all_zero);
  }
}

TEST_CASE("degree-zero part splits into constants plus e times the rest") {
  std::mt19937_64 rng(24601);
  for (int iter = 0; iter < 50; ++iter) {
    UniPolyQ g = random_upoly(rng, 5);
    auto [c, h] = split_constant(g);
    UniPolyQ back = UniPolyQ(c) + UniPolyQ::t(q(0)) * h;
    CHECK(back == g);
    // Coefficients of the expansion g = H0 + e H1 + ... are unique.
    auto [c2, h2] = split_constant(back);
    CHECK(c2 == c);
    CHECK(h2 == h);
  }
}

TEST_CASE("laurent model over a polynomial coefficient ring") {
  SparsePoly h = SparsePoly::variable(1, 0);
  using UP = UniPoly<SparsePoly>;
  using LP = LaurentElement<SparsePoly>;
  UP g = UP::from_coeffs({h, ring_one(h)});
  LP a = LP::monomial(1, g);
  LP b = LP::monomial(-1, UP::t(h));
  LP prod = laurent_mul(a, b, 2);
  CHECK(prod.components().size() == 1);
  CHECK(prod.component(0) == g.shifted_q(Rational(-2)) * UP::t(h));
  CHECK(tau_inv(tau(a, 2), 2) == a);
}

TEST_CASE("the localized model is generated by x, x^-1 and e") {
  // Every x^p g(e) is the evaluation of an explicit word in the generators,
  // with y itself redundant: y = x^-1 u(e).
  std::mt19937_64 rng(3333);
  UniPolyQ u = upoly("1/4*t^2");
  UPresentation<Rational> pres(u, 2);
  std::uniform_int_distribution<int> ppick(-3, 3);
  for (int iter = 0; iter < 40; ++iter) {
    int p = ppick(rng);
    UniPolyQ g = random_upoly(rng, 4);
    WordSum word;
    for (int j = 0; j <= g.degree(); ++j) {
      Word w(static_cast<std::size_t>(p < 0 ? -p : p),
             p < 0 ? letter::x_inv : letter::x);
      w.insert(w.end(), j, letter::e);
      word += WordSum::single(w, g.coeff(j));
    }
    CHECK(eval_word_laurent(word, pres) == LQ::monomial(p, g));
  }
  WordSum y_word = parse_word_sum("y", {"x", "y", "e"});
  WordSum xinv_u = parse_word_sum("x^-1*(1/4*e^2)", {"x", "y", "e"}, true);
  CHECK(eval_word_laurent(y_word, pres) == eval_word_laurent(xinv_u, pres));
}

TEST_CASE("laurent printing") {
  UniPolyQ u = upoly("1/4*t^2");
  LQ el = LQ::monomial(-1, u) + LQ::from_poly(upoly("t + 1")) + LQ::x_power(q(0), 2);
  CHECK(el.str() == "x^2*(1) + e + 1 + x^-1*(1/4*e^2)");
  CHECK(LQ::zero(q(0)).str() == "0");
}
