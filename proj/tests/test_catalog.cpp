#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfeq/catalog.hpp"
#include "pfeq/expr.hpp"

using namespace pfeq;
using namespace pfeq::catalog;

TEST_CASE("entry access") {
  CHECK(get_entry(9).sigma.f ==
        parse_ratfunc("(32 + 49*l^2 + 27*l^4)/(36*l^2*(l^2 - 1)^2)", "l"));

  const auto& row1 = get_entry(1);
  CHECK(row1.singular_points[0].location.minpoly() ==
        parse_ratfunc("27 - 14*l + 3*l^2", "l").num());
  CHECK(row1.singular_points[1].location.minpoly() ==
        row1.singular_points[0].location.minpoly());

  const auto& e15 = get_elkies("V*15");
  CHECK(e15.raw[2] == parse_ratfunc("(t - 81)*(t - 1)*t", "t"));
  CHECK(e15.raw[1] == parse_ratfunc("3*t^2/2 - 82*t + 81/2", "t"));
  CHECK(e15.raw[0] == parse_ratfunc("t/18 - 1/2", "t"));

  CHECK_THROWS_AS(get_entry(12), MathError);
  CHECK_THROWS_AS(get_elkies("V*9"), MathError);
}

TEST_CASE("discriminant column") {
  const int expected[] = {6, 6, 15, 10, 14, 6, 6, 6, 6, 10, 6};
  for (int id = 1; id <= 11; ++id) CHECK(get_entry(id).discriminant == expected[id - 1]);
}

TEST_CASE("verify_entry") {
  CHECK(verify_entry(10).all_pass());
  CHECK(verify_entry(1).all_pass());

  // a tampered index must be caught: row 9 has index 3 at 0, not 4
  const auto& row9 = get_entry(9);
  CHECK(index_at(row9.sigma, Point::finite(Rational(0))) == 3);
  CHECK(index_at(row9.sigma, Point::finite(Rational(0))) != 4);
  CHECK(residue(row9.sigma, Point::finite(Rational(0))) != Rational(1, 16));
}

TEST_CASE("verify_all is green on shipped data") {
  Report rep = verify_all();
  for (const auto& c : rep.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.checks.size() >= 30);
}

TEST_CASE("broken variants fail in isolation") {
  // the published uncorrected quadratic (7 instead of 17) breaks chain no. 4
  CorrespondenceChain bad;
  bad.legs.push_back({get_elkies("V*10").sigma,
                      {parse_ratfunc("(-6 + 6*x)^3/((1 + x)^2*(7 - 10*x + 9*x^2))", "x"),
                       "x", "t"}});
  bad.legs.push_back({get_entry(4).sigma,
                      {parse_ratfunc("3 - 128/(3*(9*x^2 - 10*x + 17))", "x"), "x", "l"}});
  CHECK_FALSE(verify_chain(bad).ok);

  // inverting a record's direction without re-expressing the map fails
  RationalMap inverted{parse_ratfunc("-4*t", "t"), "t", "l"};
  CHECK_FALSE(verify_map(get_entry(10).sigma, inverted, get_elkies("V*10").sigma).ok);

  // and the genuine records still pass around it
  CHECK(verify_all().all_pass());
}

TEST_CASE("quadratic point values match their radicals") {
  QuadExt gamma = parse_quadext("-(1 + sqrt(-2))^4/3");
  CHECK(get_entry(1).singular_points[0].location.same_orbit(Point::algebraic(gamma)));
  QuadExt delta = parse_quadext("(1 + sqrt(-7))^7/512");
  CHECK(get_entry(5).singular_points[0].location.same_orbit(Point::algebraic(delta)));
  // conjugates are distinct points in the same orbit
  CHECK(get_entry(1).singular_points[0].location !=
        get_entry(1).singular_points[1].location);
}
