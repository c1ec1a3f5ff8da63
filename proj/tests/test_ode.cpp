#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfeq/expr.hpp"
#include "pfeq/ode.hpp"
#include "testutil.hpp"

using namespace pfeq;
using pfeq::testutil::random_ratfunc;

namespace {
LinearODE ode2(const char* b, const char* a, const char* var = "t") {
  return make_ode({parse_ratfunc(b, var), parse_ratfunc(a, var)}, var);
}
}  // namespace

TEST_CASE("normalize divides by the leading coefficient") {
  std::vector<RatFunc> raw = {parse_ratfunc("7*t/144 - 7/18", "t"),
                              parse_ratfunc("(10*t^2 - 203*t + 216)/6", "t"),
                              parse_ratfunc("t*(t - 2)*(t - 27)", "t")};
  LinearODE ode = normalize(raw, "t");
  CHECK(ode.a[1] ==
        parse_ratfunc("(10*t^2 - 203*t + 216)/(6*t*(t - 2)*(t - 27))", "t"));
  CHECK(ode.order() == 2);
  CHECK(ode.raw.size() == 3);

  // already monic: unchanged, and normalize is idempotent
  LinearODE monic = ode2("1/t", "t + 1");
  LinearODE again = normalize(std::vector<RatFunc>{monic.a[0], monic.a[1], RatFunc(1)}, "t");
  CHECK(again.a == monic.a);
  CHECK(normalize(again).a == again.a);

  CHECK_THROWS_AS(normalize(std::vector<RatFunc>{RatFunc(1), RatFunc(0)}, "t"), MathError);
}

TEST_CASE("symmetric square closed forms") {
  LinearODE zero = symmetric_square(ode2("0", "0"));
  for (const RatFunc& c : zero.a) CHECK(c.is_zero_fn());

  // a = 0 specialization: (0, 4b, 2b')
  RatFunc b = parse_ratfunc("t^2/(t - 3)", "t");
  LinearODE sq = symmetric_square(ode2("t^2/(t - 3)", "0"));
  CHECK(sq.a[2].is_zero_fn());
  CHECK(sq.a[1] == RatFunc(4) * b);
  CHECK(sq.a[0] == RatFunc(2) * b.derivative());
}

TEST_CASE("sqrt3 inverts symmetric_square") {
  LinearODE not_square = make_ode({RatFunc(1), RatFunc(0), RatFunc(0)}, "t");
  Sqrt3Result r = sqrt3(not_square);  // z''' + z = 0
  CHECK_FALSE(r.ok);
  CHECK(r.residual == RatFunc(1));

  std::mt19937 rng(4217);
  for (int i = 0; i < 50; ++i) {
    RatFunc a = random_ratfunc(rng, 4), b = random_ratfunc(rng, 4);
    LinearODE deg2 = make_ode({b, a}, "t");
    Sqrt3Result back = sqrt3(symmetric_square(deg2));
    REQUIRE(back.ok);
    CHECK(back.a == a);
    CHECK(back.b == b);
  }
}

TEST_CASE("series solve basics") {
  LinearODE ypp = make_ode({RatFunc(0), RatFunc(0)}, "t");  // y'' = 0
  TruncatedSeries s = series_solve(ypp, Rational(0), 5, {Rational(0), Rational(1)});
  CHECK(s.coef[0] == Rational(0));
  CHECK(s.coef[1] == Rational(1));
  for (int k = 2; k <= 5; ++k) CHECK(is_zero(s.coef[k]));

  // apply on rational functions: (d/dt)^2 t^2 = 2
  CHECK(apply(ypp, parse_ratfunc("t^2", "t")) == RatFunc(2));

  // the Legendre operator is singular at 0
  LinearODE leg = ode2("-1/(4*t*(1 - t))", "(1 - 2*t)/(t*(1 - t))");
  CHECK_THROWS_AS(series_solve(leg, Rational(0), 5, {Rational(1), Rational(0)}),
                  MathError);

  // defining property: the operator annihilates its own series solutions
  TruncatedSeries y = series_solve(leg, Rational(1, 2), 20, {Rational(1), Rational(0)});
  CHECK(series_is_zero(apply(leg, y)));
}

TEST_CASE("products of solutions satisfy the symmetric square") {
  LinearODE leg = ode2("-1/(4*t*(1 - t))", "(1 - 2*t)/(t*(1 - t))");
  LinearODE sq = symmetric_square(leg);
  TruncatedSeries y1 = series_solve(leg, Rational(1, 2), 20, {Rational(1), Rational(0)});
  TruncatedSeries y2 = series_solve(leg, Rational(1, 2), 20, {Rational(0), Rational(1)});
  for (const TruncatedSeries& prod :
       {series_mul(y1, y1), series_mul(y1, y2), series_mul(y2, y2)}) {
    TruncatedSeries res = apply(sq, prod);
    CHECK(res.N >= 17);
    CHECK(series_is_zero(res));
  }
}
