#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfeq/expr.hpp"
#include "pfeq/laurent.hpp"
#include "pfeq/linsolve.hpp"
#include "testutil.hpp"

using namespace pfeq;
using pfeq::testutil::random_poly;
using pfeq::testutil::random_ratfunc;

TEST_CASE("polynomial gcd and lcm") {
  Poly t = Poly::variable();
  CHECK(gcd(t * t - Poly(1L), t - Poly(1L)) == t - Poly(1L));

  // over Q(lambda)[t]: coprime linear factors
  BiPoly tt = BiPoly::variable();
  BiPoly t_minus_lam = tt - BiPoly(RatFunc::variable());
  CHECK(lcm(tt, t_minus_lam) == tt * t_minus_lam);

  // denominator quadratic of catalog row 10 splits over Q
  RatFunc lhs = parse_ratfunc("(2*l + 1)*(4*l + 27)", "l");
  RatFunc rhs = parse_ratfunc("8*l^2 + 58*l + 27", "l");
  CHECK(lhs == rhs);
  Poly g = gcd(rhs.num(), parse_ratfunc("2*l + 1", "l").num());
  CHECK(g == parse_ratfunc("l + 1/2", "l").num());
}

TEST_CASE("rational function derivatives") {
  CHECK(parse_ratfunc("1/t", "t").derivative() == parse_ratfunc("-1/t^2", "t"));

  // d/dt of t/(t - lambda) over Q(lambda)
  BiRatFunc t = BiRatFunc::variable();
  BiRatFunc lam{RatFunc::variable()};
  BiRatFunc f = t / (t - lam);
  BiRatFunc expect = -lam / ((t - lam) * (t - lam));
  CHECK(f.derivative() == expect);
}

TEST_CASE("product rule on random inputs") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = random_ratfunc(rng, 6), g = random_ratfunc(rng, 6);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
  }
}

TEST_CASE("reduction invariants after arithmetic") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
    for (const RatFunc& h : {f + g, f * g, f - g}) {
      if (h.is_zero_fn()) continue;
      CHECK(h.den().is_monic());
      CHECK(gcd(h.num(), h.den()).degree() == 0);
    }
  }
}

TEST_CASE("laurent expansions") {
  // sigma of catalog row 9 at 0: double pole with coefficient 8/9
  RatFunc s9 = parse_ratfunc("(32 + 49*l^2 + 27*l^4)/(36*l^2*(l^2 - 1)^2)", "l");
  LaurentSeries<Rational> at0 = laurent_at(s9, Rational(0), 0);
  CHECK(at0.lo == -2);
  CHECK(at0.coefficient(-2) == Rational(8, 9));

  // 1/t at infinity is w in the chart w = 1/t
  LaurentSeries<Rational> inf = laurent_at_infinity(parse_ratfunc("1/t", "t"), 3);
  CHECK(inf.lo == 1);
  CHECK(inf.coefficient(1) == Rational(1));
  CHECK(inf.coefficient(2) == Rational(0));

  // row 1 sigma at the conjugate quadratic points: coefficient 3/4
  RatFunc s1 = parse_ratfunc(
      "3*(945 - 652*l + 142*l^2 - 60*l^3 + 9*l^4)/(4*l^2*(27 - 14*l + 3*l^2)^2)", "l");
  QuadExt root = quadratic_root(parse_ratfunc("3*l^2 - 14*l + 27", "l").num());
  LaurentSeries<QuadExt> alg = laurent_at(s1, root, -2);
  CHECK(alg.coefficient(-2) == QuadExt(Rational(3, 4)));
  LaurentSeries<QuadExt> conj = laurent_at(s1, root.conj(), -2);
  CHECK(conj.coefficient(-2) == QuadExt(Rational(3, 4)));
}

TEST_CASE("laurent truncation leaves high-valuation remainder") {
  std::mt19937 rng(99);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = random_ratfunc(rng, 4);
    if (f.is_zero_fn()) continue;
    Rational p = pfeq::testutil::random_rational(rng, 3, 3);
    if (is_zero(f.den().eval(p)) && is_zero(f.num().eval(p))) continue;
    const int depth = 4;
    LaurentSeries<Rational> s = laurent_at(f, p, depth);
    RatFunc x_minus_p = RatFunc::variable() - RatFunc(p);
    RatFunc acc;
    for (int e = s.lo; e <= depth; ++e) acc += RatFunc(s.coefficient(e)) * x_minus_p.pow(e);
    RatFunc rem = f - acc;
    if (rem.is_zero_fn()) continue;
    CHECK(valuation(rem, Point::finite(p)) > depth);
  }
}

TEST_CASE("reducible minimal polynomials are rejected") {
  CHECK_THROWS_AS(Point::from_minpoly(parse_ratfunc("l^2 - 1", "l").num()), MathError);
  CHECK_THROWS_AS(Point::from_minpoly(parse_ratfunc("l^2 - 2*l + 1", "l").num()),
                  MathError);
  CHECK(Point::from_minpoly(parse_ratfunc("l^2 - 2", "l").num()).is_algebraic());
}

TEST_CASE("quadratic field arithmetic") {
  QuadExt one_plus(Rational(1), Rational(1), -2);  // 1 + sqrt(-2)
  QuadExt fourth = pow(one_plus, 4);
  CHECK(fourth == QuadExt(Rational(-7), Rational(-4), -2));

  QuadExt gamma = -fourth / QuadExt(3);
  CHECK(minimal_polynomial(gamma) ==
        parse_ratfunc("27 - 14*l + 3*l^2", "l").num());

  // conj is a ring homomorphism, norm is multiplicative
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    QuadExt x(pfeq::testutil::random_rational(rng), pfeq::testutil::random_rational(rng), -2);
    QuadExt y(pfeq::testutil::random_rational(rng), pfeq::testutil::random_rational(rng), -2);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x * y).norm() == x.norm() * y.norm());
  }
}

TEST_CASE("linear solve: identity, inconsistent, substitution property") {
  std::vector<std::vector<RatFunc>> id = {{RatFunc(1), RatFunc(0)},
                                          {RatFunc(0), RatFunc(1)}};
  std::vector<RatFunc> v = {parse_ratfunc("t^2", "t"), RatFunc(7)};
  auto sol = solve_linear(id, v);
  CHECK(sol.consistent);
  CHECK_FALSE(sol.underdetermined);
  CHECK(sol.solution == v);

  std::vector<std::vector<RatFunc>> bad = {{RatFunc(1), RatFunc(0)},
                                           {RatFunc(1), RatFunc(0)}};
  std::vector<RatFunc> rhs = {RatFunc(0), RatFunc(1)};
  auto nosol = solve_linear(bad, rhs);
  CHECK_FALSE(nosol.consistent);
  CHECK(nosol.certificate.size() == 3);
  CHECK_FALSE(nosol.certificate.back().is_zero_fn());

  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    std::vector<std::vector<RatFunc>> A(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> x0(n), b(n, RatFunc(0));
    for (int i = 0; i < n; ++i) {
      x0[i] = RatFunc(random_poly(rng, 2));
      for (int j = 0; j < n; ++j) A[i][j] = RatFunc(random_poly(rng, 2));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[i] += A[i][j] * x0[j];
    auto s = solve_linear(A, b);
    REQUIRE(s.consistent);
    for (int i = 0; i < n; ++i) {
      RatFunc acc;
      for (int j = 0; j < n; ++j) acc += A[i][j] * s.solution[j];
      CHECK(acc == b[i]);
    }
  }
}
