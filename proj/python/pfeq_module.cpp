// Python bindings for the main operations. Rational functions cross the
// boundary as plain expression strings; structured results come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfeq/catalog.hpp"
#include "pfeq/elliptic.hpp"
#include "pfeq/expr.hpp"
#include "pfeq/json_io.hpp"
#include "pfeq/numeric.hpp"
#include "pfeq/twist.hpp"

namespace py = pybind11;
using namespace pfeq;

namespace {

std::string canon(const RatFunc& f, const std::string& var) { return ratfunc_str(f, var); }

Point point_from_text(const std::string& text, const std::string& var) {
  if (text == "inf" || text == "infinity" || text == "oo") return Point::infinity();
  if (text.rfind("minpoly:", 0) == 0) {
    RatFunc m = parse_ratfunc(text.substr(8), var);
    return Point::from_minpoly(m.num());
  }
  return Point::finite(parse_rational(text));
}

py::dict report_dict(const catalog::Report& rep) {
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    if (!c.detail.empty()) d["detail"] = c.detail;
    checks.append(d);
  }
  py::dict out;
  out["checks"] = checks;
  out["passed"] = rep.passed();
  out["total"] = static_cast<int>(rep.checks.size());
  out["ok"] = rep.all_pass();
  return out;
}

}  // namespace

PYBIND11_MODULE(pfeq, m) {
  m.doc() = "Picard-Fuchs equations of elliptic surfaces and their twist families";

  py::register_exception<MathError>(m, "MathError");
  py::register_exception<ParseError>(m, "ExprParseError");

  m.def(
      "parse",
      [](const std::string& text, const std::string& var) {
        return canon(parse_ratfunc(text, var), var);
      },
      py::arg("text"), py::arg("var") = "t",
      "Parse an expression and return its canonical printed form.");

  m.def(
      "ratfunc_json",
      [](const std::string& text, const std::string& var) {
        return ratfunc_to_json(parse_ratfunc(text, var), var).dump();
      },
      py::arg("text"), py::arg("var") = "t");

  m.def(
      "picard_fuchs",
      [](const std::string& a, const std::string& b, const std::string& c,
         const std::string& d, const std::string& var) {
        WeierstrassModel w{parse_ratfunc(a, var), parse_ratfunc(b, var),
                           parse_ratfunc(c, var), parse_ratfunc(d, var)};
        EllipticPF pf = picard_fuchs(w);
        py::dict out;
        out["c1"] = canon(pf.c1, var);
        out["c2"] = canon(pf.c2, var);
        py::list q;
        for (const RatFunc& qi : pf.q) q.append(canon(qi, var));
        out["q"] = q;
        out["degenerate"] = pf.degenerate;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("var") = "t");

  m.def(
      "twist_weierstrass",
      [](const std::string& a, const std::string& b, const std::string& c,
         const std::string& d, const std::string& u, const std::string& var) {
        WeierstrassModel w{parse_ratfunc(a, var), parse_ratfunc(b, var),
                           parse_ratfunc(c, var), parse_ratfunc(d, var)};
        WeierstrassModel tw = twist_weierstrass(w, parse_ratfunc(u, var));
        return py::make_tuple(canon(tw.a, var), canon(tw.b, var), canon(tw.c, var),
                              canon(tw.d, var));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("u"),
      py::arg("var") = "t");

  m.def(
      "twist_pf",
      [](const std::string& c1, const std::string& c2) {
        TwistPF tw = twist_pf(parse_ratfunc(c1, "t"), parse_ratfunc(c2, "t"));
        py::dict out;
        py::list ct;
        for (const RatFunc& cn : tw.ctilde) ct.append(canon(cn, "l"));
        out["ctilde"] = ct;
        out["m"] = tw.m;
        out["order"] = tw.degenerate ? 0 : tw.order();
        out["degenerate"] = tw.degenerate;
        return out;
      },
      py::arg("c1"), py::arg("c2"));

  m.def(
      "numeric_check",
      [](const std::string& c1s, const std::string& c2s,
         const std::vector<std::string>& lambdas, double tol, long digits) {
        RatFunc c1 = parse_ratfunc(c1s, "t"), c2 = parse_ratfunc(c2s, "t");
        TwistPF tw = twist_pf(c1, c2);
        std::vector<Rational> ls;
        for (const std::string& s : lambdas) ls.push_back(parse_rational(s));
        NumericOptions opt;
        opt.digits = digits;
        NumericReport rep = numeric_check(tw, c1, c2, ls, tol, opt);
        py::dict out;
        out["pass"] = rep.pass;
        out["max_rel_residual"] = rep.max_rel_residual;
        return out;
      },
      py::arg("c1"), py::arg("c2"), py::arg("lambdas"), py::arg("tol") = 1e-6,
      py::arg("digits") = 50);

  m.def(
      "normalize",
      [](const std::vector<std::string>& coeffs, const std::string& var) {
        std::vector<RatFunc> cs;
        for (const std::string& s : coeffs) cs.push_back(parse_ratfunc(s, var));
        LinearODE ode = normalize(cs, var);
        py::list out;
        for (const RatFunc& ai : ode.a) out.append(canon(ai, var));
        return out;
      },
      py::arg("coeffs"), py::arg("var") = "t");

  m.def(
      "symmetric_square",
      [](const std::string& a, const std::string& b, const std::string& var) {
        LinearODE sq = symmetric_square(
            make_ode({parse_ratfunc(b, var), parse_ratfunc(a, var)}, var));
        return py::make_tuple(canon(sq.a[2], var), canon(sq.a[1], var),
                              canon(sq.a[0], var));
      },
      py::arg("a"), py::arg("b"), py::arg("var") = "t");

  m.def(
      "sqrt3",
      [](const std::string& alpha, const std::string& beta, const std::string& gamma,
         const std::string& var) {
        LinearODE deg3 =
            make_ode({parse_ratfunc(gamma, var), parse_ratfunc(beta, var),
                      parse_ratfunc(alpha, var)},
                     var);
        Sqrt3Result r = sqrt3(deg3);
        py::dict out;
        out["ok"] = r.ok;
        out["a"] = canon(r.a, var);
        out["b"] = canon(r.b, var);
        out["residual"] = canon(r.residual, var);
        return out;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("var") = "t");

  m.def(
      "sigma_of_ode",
      [](const std::string& a, const std::string& b, const std::string& var) {
        return canon(
            schwarzian_of_ode(parse_ratfunc(a, var), parse_ratfunc(b, var), var).f, var);
      },
      py::arg("a"), py::arg("b"), py::arg("var") = "t");

  m.def(
      "sigma_of_map",
      [](const std::string& phi, const std::string& var) {
        return canon(schwarzian_of_map(parse_ratfunc(phi, var), var).f, var);
      },
      py::arg("phi"), py::arg("var") = "t");

  m.def(
      "transport",
      [](const std::string& sigma, const std::string& var, const std::string& map,
         const std::string& new_var) {
        QuadDifferential s{parse_ratfunc(sigma, var), var};
        return canon(transport(s, parse_ratfunc(map, new_var), new_var).f, new_var);
      },
      py::arg("sigma"), py::arg("var"), py::arg("map"), py::arg("new_var"));

  m.def(
      "residue",
      [](const std::string& sigma, const std::string& var, const std::string& at) {
        QuadDifferential s{parse_ratfunc(sigma, var), var};
        return residue(s, point_from_text(at, var)).get_str();
      },
      py::arg("sigma"), py::arg("var"), py::arg("at"));

  m.def(
      "index_at",
      [](const std::string& sigma, const std::string& var, const std::string& at) {
        QuadDifferential s{parse_ratfunc(sigma, var), var};
        return index_at(s, point_from_text(at, var));
      },
      py::arg("sigma"), py::arg("var"), py::arg("at"));

  m.def(
      "sigma_from_indices",
      [](int n0, int n1, int ninf, const std::string& var) {
        return canon(sigma_from_indices(n0, n1, ninf, var).f, var);
      },
      py::arg("n0"), py::arg("n1"), py::arg("ninf"), py::arg("var") = "t");

  m.def(
      "verify_map",
      [](const std::string& src_sigma, const std::string& src_var,
         const std::string& map, const std::string& tgt_sigma,
         const std::string& tgt_var) {
        QuadDifferential src{parse_ratfunc(src_sigma, src_var), src_var};
        QuadDifferential tgt{parse_ratfunc(tgt_sigma, tgt_var), tgt_var};
        RationalMap phi{parse_ratfunc(map, tgt_var), tgt_var, src_var};
        return verify_map(src, phi, tgt).ok;
      },
      py::arg("src_sigma"), py::arg("src_var"), py::arg("map"), py::arg("tgt_sigma"),
      py::arg("tgt_var"));

  m.def(
      "search_mobius",
      [](int src_id, int tgt_id) {
        const auto& se = catalog::get_entry(src_id);
        const auto& te = catalog::get_entry(tgt_id);
        auto maps = search_mobius({se.sigma, se.singular_points},
                                  {te.sigma, te.singular_points});
        py::list out;
        for (const RationalMap& mm : maps) out.append(canon(mm.expr, "l"));
        return out;
      },
      py::arg("src_id"), py::arg("tgt_id"));

  m.def("catalog_entry", [](int id) {
    const auto& e = catalog::get_entry(id);
    py::dict out;
    out["id"] = e.id;
    out["fiber_types"] = e.fiber_types;
    py::list pts;
    for (const MarkedPoint& mp : e.singular_points) {
      py::dict p;
      p["point"] = mp.location.str();
      p["index"] = mp.index;
      pts.append(p);
    }
    out["singular_points"] = pts;
    out["a"] = canon(e.a, "l");
    out["b"] = canon(e.b, "l");
    out["sigma"] = canon(e.sigma.f, "l");
    out["discriminant"] = e.discriminant;
    return out;
  });

  m.def("catalog_verify_entry", [](int id) { return report_dict(catalog::verify_entry(id)); });
  m.def("catalog_verify_all", [] { return report_dict(catalog::verify_all()); });
}
