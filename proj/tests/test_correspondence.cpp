#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfeq/catalog.hpp"
#include "pfeq/expr.hpp"
#include "testutil.hpp"

using namespace pfeq;

TEST_CASE("verify_map on the explicit correspondences") {
  const auto& e10 = catalog::get_elkies("V*10");
  const auto& row10 = catalog::get_entry(10);
  RationalMap right{parse_ratfunc("-4*l", "l"), "l", "t"};
  CHECK(verify_map(e10.sigma, right, row10.sigma).ok);

  RationalMap wrong{parse_ratfunc("-5*l", "l"), "l", "t"};
  VerifyResult bad = verify_map(e10.sigma, wrong, row10.sigma);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.residual.is_zero_fn());

  const auto& e14 = catalog::get_elkies("V*14");
  const auto& row5 = catalog::get_entry(5);
  RationalMap inv{parse_ratfunc("2/l", "l"), "l", "t"};
  CHECK(verify_map(e14.sigma, inv, row5.sigma).ok);
}

TEST_CASE("mobius_from_points") {
  std::vector<Point> std3 = {Point::finite(Rational(0)), Point::finite(Rational(1)),
                             Point::infinity()};
  RationalMap ident = mobius_from_points(std3, std3, "t", "t");
  CHECK(ident.expr == RatFunc::variable());

  // anchor data of the no. 3 correspondence
  std::vector<Point> src = {Point::finite(Rational(81)), Point::finite(Rational(0)),
                            Point::finite(Rational(1))};
  std::vector<Point> tgt = {Point::finite(Rational(0)), Point::infinity(),
                            Point::finite(Rational(-10))};
  RationalMap m = mobius_from_points(src, tgt, "t", "l");
  CHECK(m.expr == parse_ratfunc("(t - 81)/(8*t)", "t"));

  // examples 9 and 11 exchange coordinates by an involution
  std::vector<Point> s2 = {Point::finite(Rational(0)), Point::infinity(),
                           Point::finite(Rational(1))};
  std::vector<Point> t2 = {Point::finite(Rational(1)), Point::finite(Rational(-1)),
                           Point::infinity()};
  RationalMap m2 = mobius_from_points(s2, t2, "l", "l");
  CHECK(m2.expr == parse_ratfunc("(1 + l)/(1 - l)", "l"));

  CHECK_THROWS_AS(mobius_from_points({std3[0], std3[0], std3[2]}, std3, "t", "t"),
                  MathError);
}

TEST_CASE("mobius composed with its inverse is the identity") {
  std::mt19937 rng(414);
  std::vector<Point> base = {Point::finite(Rational(0)), Point::finite(Rational(1)),
                             Point::infinity()};
  for (int i = 0; i < 10; ++i) {
    std::vector<Point> img;
    while (img.size() < 3) {
      Point p = Point::finite(pfeq::testutil::random_rational(rng, 6, 3));
      bool dup = false;
      for (const Point& q : img) dup = dup || q == p;
      if (!dup) img.push_back(p);
    }
    RationalMap fwd = mobius_from_points(base, img, "t", "u");
    RationalMap back = mobius_from_points(img, base, "u", "t");
    CHECK(back.expr.compose(fwd.expr) == RatFunc::variable());
  }
}

TEST_CASE("search_mobius finds the published internal correspondences") {
  const auto& e6 = catalog::get_entry(6);
  const auto& e8 = catalog::get_entry(8);
  auto maps68 = search_mobius({e6.sigma, e6.singular_points},
                              {e8.sigma, e8.singular_points});
  RatFunc expect68 = parse_ratfunc("1 - 1/l", "l");
  bool found68 = false;
  for (const RationalMap& m : maps68) {
    found68 = found68 || m.expr == expect68;
    CHECK(verify_map(e6.sigma, m, e8.sigma).ok);
  }
  CHECK(found68);

  const auto& e11 = catalog::get_entry(11);
  const auto& e9 = catalog::get_entry(9);
  auto maps = search_mobius({e11.sigma, e11.singular_points},
                            {e9.sigma, e9.singular_points});
  RatFunc expect = parse_ratfunc("(1 + l)/(1 - l)", "l");
  bool found = false;
  for (const RationalMap& m : maps) found = found || m.expr == expect;
  CHECK(found);

  // indices {2,2,2,6} against {2,2,2,4}: no candidate survives
  const auto& e1 = catalog::get_entry(1);
  const auto& e5 = catalog::get_entry(5);
  CHECK(search_mobius({e1.sigma, e1.singular_points}, {e5.sigma, e5.singular_points})
            .empty());
}

TEST_CASE("verify_map accepts its own transport") {
  std::mt19937 rng(99);
  const auto& e9 = catalog::get_entry(9);
  int done = 0;
  while (done < 5) {
    RatFunc phi = pfeq::testutil::random_ratfunc(rng, 3);
    if (phi.derivative().is_zero_fn()) continue;
    QuadDifferential moved = transport(e9.sigma, phi, "u");
    RationalMap m{phi, "u", "l"};
    CHECK(verify_map(e9.sigma, m, moved).ok);
    ++done;
  }
}

TEST_CASE("chains transported to a common coordinate") {
  // the degree-5 cover chain for entry 7
  CorrespondenceChain chain;
  chain.legs.push_back({catalog::get_elkies("V6-zeta").sigma,
                        {parse_ratfunc("-1/(27*x^4*(5 + 12*x + 20*x^2))", "x"), "x", "z"}});
  chain.legs.push_back({catalog::get_entry(7).sigma,
                        {parse_ratfunc("-(3 + 5*x)^2/(5*(1 - 6*x + 15*x^2))", "x"), "x", "l"}});
  ChainReport rep = verify_chain(chain);
  CHECK(rep.ok);

  // breaking one leg must break the chain
  chain.legs[1].map.expr = chain.legs[1].map.expr + RatFunc(1);
  CHECK_FALSE(verify_chain(chain).ok);
}
