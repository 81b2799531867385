#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "invop/lie_closure.hh"
#include "invop/parse.hh"
#include "invop/weyl.hh"

using namespace invop;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

WeylOp random_op(std::mt19937_64& rng, std::size_t nvars, int max_order, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_order);
  std::uniform_int_distribution<long> coeff(-4, 4);
  WeylOp d(nvars);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    MultiIndex alpha(nvars), beta(nvars);
    int budget_a = max_order, budget_b = max_order;
    for (std::size_t i = 0; i < nvars; ++i) {
      int a = std::min(exp(rng), budget_a);
      int b = std::min(exp(rng), budget_b);
      alpha.set(i, a);
      beta.set(i, b);
      budget_a -= a;
      budget_b -= b;
    }
    d.add_term(alpha, beta, q(coeff(rng)));
  }
  return d;
}

SparsePoly random_poly(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<long> coeff(-5, 5);
  SparsePoly p(nvars);
  for (int t = 0; t < 4; ++t) {
    MultiIndex m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, exp(rng));
    p.add_term(m, q(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("normal ordering of canonical products") {
  const std::size_t n = 1;
  WeylOp x = WeylOp::coordinate(n, 0), d = WeylOp::partial(n, 0);
  CHECK(d * x == x * d + WeylOp::constant(n, q(1)));

  // d^2 x^2 = x^2 d^2 + 4 x d + 2, frozen after checking the action on
  // x^k for k = 0..3 below.
  WeylOp lhs = (d * d) * (x * x);
  WeylOp expected = (x * x) * (d * d) + (x * d).scaled(q(4)) + WeylOp::constant(n, q(2));
  CHECK(lhs == expected);
  for (int k = 0; k <= 3; ++k) {
    SparsePoly xk = SparsePoly::variable(n, 0).pow(k);
    CHECK(lhs.apply(xk) == expected.apply(xk));
  }

  CHECK((x * d).term_count() == 1);  // already normal ordered
  CHECK(parse_weyl_op("dx_x*x", {"x"}) == parse_weyl_op("x*dx_1 + 1", {"x"}));
}

TEST_CASE("action on polynomials") {
  const std::size_t n = 2;
  WeylOp dx = WeylOp::partial(n, 0);
  SparsePoly x3 = SparsePoly::variable(n, 0).pow(3);
  CHECK(dx.apply(x3) == SparsePoly::variable(n, 0).pow(2).scaled(q(3)));

  WeylOp euler = WeylOp::euler(n);
  SparsePoly xayb = SparsePoly::variable(n, 0).pow(2) * SparsePoly::variable(n, 1).pow(3);
  CHECK(euler.apply(xayb) == xayb.scaled(q(5)));

  WeylOp xd = WeylOp::coordinate(n, 0) * WeylOp::partial(n, 0);
  CHECK(xd.apply(SparsePoly::constant(n, q(5))).is_zero());
}

TEST_CASE("commutator examples") {
  const std::size_t n = 1;
  WeylOp x = WeylOp::coordinate(n, 0), d = WeylOp::partial(n, 0);
  CHECK(commutator(x * d, x) == x);
  CHECK(commutator(d, d).is_zero());
}

TEST_CASE("graded degree detection") {
  const std::size_t n = 1;
  WeylOp e = WeylOp::euler(n);
  WeylOp x = WeylOp::coordinate(n, 0), d = WeylOp::partial(n, 0);
  CHECK(graded_degree(x, e) == 1);
  CHECK(graded_degree(d, e) == -1);
  CHECK(graded_degree(x * x, e) == 2);
  CHECK(graded_degree(x + d, e) == std::nullopt);
  CHECK(graded_degree(WeylOp(n), e) == 0);
  CHECK(graded_degree(e, e) == 0);
}

TEST_CASE("product associativity on random operators") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t nvars = 1 + iter % 4;
    WeylOp a = random_op(rng, nvars, 3, 3);
    WeylOp b = random_op(rng, nvars, 3, 3);
    WeylOp c = random_op(rng, nvars, 3, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("product is compatible with the action") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t nvars = 1 + iter % 3;
    WeylOp a = random_op(rng, nvars, 3, 3);
    WeylOp b = random_op(rng, nvars, 3, 3);
    SparsePoly p = random_poly(rng, nvars);
    CHECK((a * b).apply(p) == a.apply(b.apply(p)));
  }
}

TEST_CASE("jacobi identity on random operators") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t nvars = 1 + iter % 3;
    WeylOp a = random_op(rng, nvars, 2, 3);
    WeylOp b = random_op(rng, nvars, 2, 3);
    WeylOp c = random_op(rng, nvars, 2, 3);
    WeylOp total = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                   commutator(c, commutator(a, b));
    CHECK(total.is_zero());
  }
}

TEST_CASE("lie closure of x and d stabilizes at 3") {
  const std::size_t n = 1;
  auto dims = lie_closure_dims({WeylOp::coordinate(n, 0), WeylOp::partial(n, 0)}, 5);
  CHECK(dims == std::vector<std::size_t>{2, 3, 3, 3, 3});
  CHECK_THROWS_AS(lie_closure_dims({WeylOp::coordinate(n, 0)}, 0), usage_error);
}

TEST_CASE("span insertion reduces exactly") {
  const std::size_t n = 2;
  WeylSpan span;
  WeylOp x = WeylOp::coordinate(n, 0), y = WeylOp::coordinate(n, 1);
  CHECK(span.insert(x));
  CHECK(span.insert(y));
  CHECK_FALSE(span.insert(x.scaled(q(3)) - y.scaled(q(7, 2))));
  CHECK(span.rank() == 2);
}

TEST_CASE("operator printing round-trips through the grammar") {
  std::vector<std::string> vars = {"x", "y"};
  WeylOp op = parse_weyl_op("3/2*x*dx_y^2 - dx_x + 1", vars);
  CHECK(parse_weyl_op(op.str(vars), vars) == op);
  CHECK(parse_weyl_op("dx_2*y", vars) == parse_weyl_op("y*dx_y + 1", vars));
}
