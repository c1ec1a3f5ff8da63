#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfeq/catalog.hpp"
#include "pfeq/expr.hpp"
#include "pfeq/json_io.hpp"

using namespace pfeq;

TEST_CASE("parsing catalog display forms") {
  RatFunc f = parse_ratfunc("(27-21*l+6*l^2)/(27*l-14*l^2+3*l^3)", "l");
  CHECK(f == catalog::get_entry(1).a);
}

TEST_CASE("print/parse roundtrip on the embedded data") {
  for (int id = 1; id <= 11; ++id) {
    const auto& e = catalog::get_entry(id);
    for (const RatFunc& f : {e.a, e.b, e.sigma.f}) {
      CHECK(parse_ratfunc(ratfunc_str(f, "l"), "l") == f);
    }
  }
  for (const char* label : {"V*10", "V*14", "V*15"}) {
    const auto& e = catalog::get_elkies(label);
    for (const RatFunc& f : e.raw) CHECK(parse_ratfunc(ratfunc_str(f, "t"), "t") == f);
    CHECK(parse_ratfunc(ratfunc_str(e.sigma.f, "t"), "t") == e.sigma.f);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ratfunc("1/0", "t"), MathError);
  CHECK_THROWS_AS(parse_ratfunc("t +* 2", "t"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("(t + 1", "t"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("q + 1", "t"), ParseError);  // unknown identifier
  try {
    parse_ratfunc("t + @", "t");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("grammar corners") {
  CHECK(parse_ratfunc("t^-2", "t") == parse_ratfunc("1/t^2", "t"));
  CHECK(parse_ratfunc("t^(-2)", "t") == parse_ratfunc("1/t^2", "t"));
  CHECK(parse_ratfunc("-t^2", "t") == -parse_ratfunc("t^2", "t"));
  CHECK(parse_ratfunc("2^10", "t") == RatFunc(1024));
  // unicode aliases for lambda and zeta
  CHECK(parse_ratfunc("\xce\xbb^2", "l") == parse_ratfunc("l^2", "l"));
  CHECK(parse_ratfunc("\xce\xb6 + 1", "z") == parse_ratfunc("z + 1", "z"));
  // sqrt atoms only in constant context
  QuadExt d = parse_quadext("(1 + sqrt(-7))^7/512");
  CHECK(minimal_polynomial(d) == parse_ratfunc("4*l^2 + 13*l + 32", "l").num());
  CHECK_THROWS(parse_rational("sqrt(2)"));
}

TEST_CASE("json serialization roundtrip and determinism") {
  for (int id = 1; id <= 11; ++id) {
    const auto& e = catalog::get_entry(id);
    for (const RatFunc& f : {e.a, e.b, e.sigma.f}) {
      nlohmann::json j = ratfunc_to_json(f, "l");
      CHECK(ratfunc_from_json(j) == f);
      CHECK(j.dump() == ratfunc_to_json(f, "l").dump());
    }
  }
  nlohmann::json j = ratfunc_to_json(parse_ratfunc("(3/2)*t/(t - 1/5)", "t"), "t");
  CHECK(j["var"] == "t");
  CHECK(j["ext"].is_null());
  // integer-normalized: 15 t / (10 t - 2)
  CHECK(j["num"] == nlohmann::json::array({"0", "15"}));
  CHECK(j["den"] == nlohmann::json::array({"-2", "10"}));
}

TEST_CASE("latex printing") {
  CHECK(ratfunc_latex(parse_ratfunc("1/t", "t"), "t") == "\\frac{1}{t}");
  CHECK(ratfunc_latex(parse_ratfunc("3*t + 1", "t"), "t") == "1 + 3t");
}
