// Command-line front end: exact Picard-Fuchs computations for elliptic
// surfaces and their twist families, symmetric squares, Schwarzian/sigma
// invariants, the built-in catalog, and the numeric operator check.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfeq/catalog.hpp"
#include "pfeq/elliptic.hpp"
#include "pfeq/expr.hpp"
#include "pfeq/json_io.hpp"
#include "pfeq/numeric.hpp"
#include "pfeq/twist.hpp"

using nlohmann::json;
using namespace pfeq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

struct MathFailure {  // expected mathematical failure -> exit 2 with payload
  json payload;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Point parse_point(const std::string& text, const std::string& var) {
  if (text == "inf" || text == "infinity" || text == "oo") return Point::infinity();
  if (text.rfind("minpoly:", 0) == 0) {
    RatFunc m = parse_ratfunc(text.substr(8), var);
    if (!m.is_polynomial()) throw MathError("minimal polynomial must be a polynomial");
    return Point::from_minpoly(m.num());
  }
  return Point::finite(parse_rational(text));
}

json ode_json(const std::vector<RatFunc>& coeffs, const std::string& var) {
  json a = json::array();
  for (const RatFunc& c : coeffs) a.push_back(ratfunc_to_json(c, var));
  return a;
}

json pf_json(const EllipticPF& pf, const std::string& var = "t") {
  json j;
  j["c1"] = ratfunc_to_json(pf.c1, var);
  j["c2"] = ratfunc_to_json(pf.c2, var);
  j["c1_plain"] = ratfunc_str(pf.c1, var);
  j["c2_plain"] = ratfunc_str(pf.c2, var);
  j["q"] = ode_json(pf.q, var);
  j["degenerate"] = pf.degenerate;
  return j;
}

struct WeierstrassRecord {
  std::string name;
  WeierstrassModel model;
  Rational twist_point{0};
};

std::vector<WeierstrassRecord> read_weierstrass_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot open file " + path);
  std::vector<WeierstrassRecord> records;
  std::optional<WeierstrassRecord> cur;
  std::optional<std::string> a, b, c, d;
  auto flush = [&]() {
    if (!cur) return;
    if (!a || !b || !c || !d)
      throw MathError("record '" + cur->name + "': needs all of a=, b=, c=, d=");
    cur->model = WeierstrassModel{parse_ratfunc(*a, "t"), parse_ratfunc(*b, "t"),
                                  parse_ratfunc(*c, "t"), parse_ratfunc(*d, "t")};
    records.push_back(*cur);
    cur.reset();
    a.reset(); b.reset(); c.reset(); d.reset();
  };
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t s = line.find_first_not_of(" \t\r");
    if (s == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(s, e - s + 1);
    size_t eq = line.find('=');
    std::string key = eq == std::string::npos ? "" : line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    if (eq != std::string::npos && (key == "a" || key == "b" || key == "c" ||
                                    key == "d" || key == "s")) {
      if (!cur) throw MathError("coefficient line before any record name");
      std::string val = line.substr(eq + 1);
      if (key == "a") a = val;
      else if (key == "b") b = val;
      else if (key == "c") c = val;
      else if (key == "d") d = val;
      else cur->twist_point = parse_rational(val);
    } else {
      flush();
      cur = WeierstrassRecord{};
      cur->name = line;
    }
  }
  flush();
  return records;
}

json entry_json(const catalog::CatalogEntry& e) {
  json j;
  j["id"] = e.id;
  j["fiber_types"] = e.fiber_types;
  json pts = json::array();
  for (const MarkedPoint& m : e.singular_points) {
    json p;
    p["point"] = m.location.str();
    if (m.location.is_algebraic()) p["minpoly"] = poly_str(m.location.minpoly(), "l");
    p["index"] = m.index;
    pts.push_back(p);
  }
  j["singular_points"] = pts;
  j["a"] = ratfunc_str(e.a, "l");
  j["b"] = ratfunc_str(e.b, "l");
  j["sigma"] = ratfunc_str(e.sigma.f, "l");
  j["a_json"] = ratfunc_to_json(e.a, "l");
  j["b_json"] = ratfunc_to_json(e.b, "l");
  j["sigma_json"] = ratfunc_to_json(e.sigma.f, "l");
  j["discriminant"] = e.discriminant;
  return j;
}

json report_json(const catalog::Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  json out;
  out["checks"] = checks;
  out["passed"] = rep.passed();
  out["total"] = static_cast<int>(rep.checks.size());
  out["ok"] = rep.all_pass();
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Picard-Fuchs equations of elliptic surfaces and their twist families"};
  app.require_subcommand(1);

  // ---- pf ----
  auto* pf_cmd = app.add_subcommand("pf", "Picard-Fuchs computations");
  pf_cmd->require_subcommand(1);

  auto* pf_ell = pf_cmd->add_subcommand("elliptic", "base equation of y^2 = f(x)");
  std::string file, wa, wb, wc, wd, var = "t";
  pf_ell->add_option("--file", file, "Weierstrass data file");
  pf_ell->add_option("--a", wa, "coefficient of x^3");
  pf_ell->add_option("--b", wb, "coefficient of x^2");
  pf_ell->add_option("--c", wc, "coefficient of x");
  pf_ell->add_option("--d", wd, "constant coefficient");
  pf_ell->add_option("--var", var, "base variable (default t)");
  pf_ell->callback([&] {
    json out;
    if (!file.empty()) {
      out = json::array();
      for (const WeierstrassRecord& r : read_weierstrass_file(file)) {
        json j = pf_json(picard_fuchs(r.model));
        j["name"] = r.name;
        j["twist_point"] = r.twist_point.get_str();
        out.push_back(j);
      }
    } else {
      if (wa.empty() || wb.empty() || wc.empty() || wd.empty())
        throw CLI::ValidationError("pf elliptic", "need --file or all of --a --b --c --d");
      WeierstrassModel w{parse_ratfunc(wa, var), parse_ratfunc(wb, var),
                         parse_ratfunc(wc, var), parse_ratfunc(wd, var)};
      out = pf_json(picard_fuchs(w), var);
    }
    emit(out);
  });

  auto* pf_tw = pf_cmd->add_subcommand("twist", "operator for the family of twists");
  std::string tc1, tc2, shift = "0";
  bool monic = false, do_sqrt3 = false;
  pf_tw->add_option("--c1", tc1, "base coefficient c1(t)")->required();
  pf_tw->add_option("--c2", tc2, "base coefficient c2(t)")->required();
  pf_tw->add_option("--shift", shift, "twist point s; shifts t -> t + s first");
  pf_tw->add_flag("--monic", monic, "include the monic form");
  pf_tw->add_flag("--sqrt3", do_sqrt3, "attempt the order-2 square root of the monic form");
  pf_tw->callback([&] {
    RatFunc c1 = parse_ratfunc(tc1, "t"), c2 = parse_ratfunc(tc2, "t");
    Rational s = parse_rational(shift);
    if (!is_zero(s)) shift_base(c1, c2, s);
    TwistPF tw = twist_pf(c1, c2);
    json out;
    out["ctilde"] = ode_json(tw.ctilde, "l");
    json plain = json::array();
    for (const RatFunc& cn : tw.ctilde) plain.push_back(ratfunc_str(cn, "l"));
    out["ctilde_plain"] = plain;
    out["m"] = tw.m;
    out["order"] = tw.degenerate ? 0 : tw.order();
    out["degenerate"] = tw.degenerate;
    if ((monic || do_sqrt3) && !tw.degenerate) {
      LinearODE ode = tw.monic_ode("l");
      if (monic) out["monic"] = ode_json(ode.a, "l");
      if (do_sqrt3) {
        if (ode.order() != 3) {
          throw MathFailure{json{{"error", "twist operator does not have order 3"},
                                 {"order", ode.order()}}};
        }
        Sqrt3Result r = sqrt3(ode);
        if (!r.ok)
          throw MathFailure{json{{"error", "not a symmetric square"},
                                 {"residual", ratfunc_str(r.residual, "l")}}};
        out["sqrt3"] = {{"a", ratfunc_str(r.a, "l")}, {"b", ratfunc_str(r.b, "l")}};
      }
    }
    emit(out);
  });

  // ---- ode ----
  auto* ode_cmd = app.add_subcommand("ode", "operator manipulations");
  ode_cmd->require_subcommand(1);
  std::string ode_var = "t";

  auto* ode_norm = ode_cmd->add_subcommand("normalize", "divide by the leading coefficient");
  std::vector<std::string> raw_coeffs;
  ode_norm->add_option("--coeff", raw_coeffs,
                       "coefficients A_0 .. A_n, ascending (repeatable)")->required();
  ode_norm->add_option("--var", ode_var, "variable (default t)");
  ode_norm->callback([&] {
    std::vector<RatFunc> cs;
    for (const std::string& s : raw_coeffs) cs.push_back(parse_ratfunc(s, ode_var));
    LinearODE ode = normalize(cs, ode_var);
    json out;
    out["monic"] = ode_json(ode.a, ode_var);
    json plain = json::array();
    for (const RatFunc& c : ode.a) plain.push_back(ratfunc_str(c, ode_var));
    out["monic_plain"] = plain;
    emit(out);
  });

  auto* ode_sym = ode_cmd->add_subcommand("symsquare", "symmetric square of y''+ay'+by");
  std::string sa, sb;
  ode_sym->add_option("--a", sa)->required();
  ode_sym->add_option("--b", sb)->required();
  ode_sym->add_option("--var", ode_var, "variable (default t)");
  ode_sym->callback([&] {
    LinearODE sq = symmetric_square(
        make_ode({parse_ratfunc(sb, ode_var), parse_ratfunc(sa, ode_var)}, ode_var));
    json out;
    out["alpha"] = ratfunc_str(sq.a[2], ode_var);
    out["beta"] = ratfunc_str(sq.a[1], ode_var);
    out["gamma"] = ratfunc_str(sq.a[0], ode_var);
    out["coeffs"] = ode_json(sq.a, ode_var);
    emit(out);
  });

  auto* ode_sqrt = ode_cmd->add_subcommand("sqrt3", "square root of a degree-3 operator");
  std::string al, be, ga;
  ode_sqrt->add_option("--alpha", al)->required();
  ode_sqrt->add_option("--beta", be)->required();
  ode_sqrt->add_option("--gamma", ga)->required();
  ode_sqrt->add_option("--var", ode_var, "variable (default t)");
  ode_sqrt->callback([&] {
    LinearODE deg3 = make_ode({parse_ratfunc(ga, ode_var), parse_ratfunc(be, ode_var),
                               parse_ratfunc(al, ode_var)},
                              ode_var);
    Sqrt3Result r = sqrt3(deg3);
    if (!r.ok)
      throw MathFailure{json{{"error", "not a symmetric square"},
                             {"residual", ratfunc_str(r.residual, ode_var)}}};
    emit(json{{"a", ratfunc_str(r.a, ode_var)},
              {"b", ratfunc_str(r.b, ode_var)},
              {"a_json", ratfunc_to_json(r.a, ode_var)},
              {"b_json", ratfunc_to_json(r.b, ode_var)}});
  });

  // ---- sigma ----
  auto* sig_cmd = app.add_subcommand("sigma", "Schwarzian and sigma invariants");
  sig_cmd->require_subcommand(1);
  std::string sig_var = "t", sig_a, sig_b, sig_map, sig_f, new_var, at_point;

  auto* sig_ode = sig_cmd->add_subcommand("of-ode", "sigma of a monic order-2 operator");
  sig_ode->add_option("--a", sig_a)->required();
  sig_ode->add_option("--b", sig_b)->required();
  sig_ode->add_option("--var", sig_var, "variable (default t)");
  sig_ode->callback([&] {
    QuadDifferential s = schwarzian_of_ode(parse_ratfunc(sig_a, sig_var),
                                           parse_ratfunc(sig_b, sig_var), sig_var);
    emit(json{{"sigma", ratfunc_str(s.f, sig_var)},
              {"sigma_json", ratfunc_to_json(s.f, sig_var)}});
  });

  auto* sig_map_cmd = sig_cmd->add_subcommand("of-map", "Schwarzian derivative of a map");
  sig_map_cmd->add_option("--map", sig_map)->required();
  sig_map_cmd->add_option("--var", sig_var, "variable (default t)");
  sig_map_cmd->callback([&] {
    QuadDifferential s = schwarzian_of_map(parse_ratfunc(sig_map, sig_var), sig_var);
    emit(json{{"sigma", ratfunc_str(s.f, sig_var)},
              {"sigma_json", ratfunc_to_json(s.f, sig_var)}});
  });

  auto* sig_tr = sig_cmd->add_subcommand("transport", "change of variable old = map(new)");
  sig_tr->add_option("--sigma", sig_f, "differential in the old variable")->required();
  sig_tr->add_option("--var", sig_var, "old variable (default t)");
  sig_tr->add_option("--map", sig_map, "expression for old in terms of new")->required();
  sig_tr->add_option("--new-var", new_var, "new variable")->required();
  sig_tr->callback([&] {
    QuadDifferential s{parse_ratfunc(sig_f, sig_var), sig_var};
    QuadDifferential moved = transport(s, parse_ratfunc(sig_map, new_var), new_var);
    emit(json{{"sigma", ratfunc_str(moved.f, new_var)},
              {"sigma_json", ratfunc_to_json(moved.f, new_var)}});
  });

  auto* sig_res = sig_cmd->add_subcommand("residue", "Schwarzian residue at a point");
  sig_res->add_option("--sigma", sig_f)->required();
  sig_res->add_option("--var", sig_var, "variable (default t)");
  sig_res->add_option("--at", at_point, "rational, 'inf', or minpoly:<quadratic>")->required();
  sig_res->callback([&] {
    QuadDifferential s{parse_ratfunc(sig_f, sig_var), sig_var};
    Rational r = residue(s, parse_point(at_point, sig_var));
    emit(json{{"residue", r.get_str()}});
  });

  auto* sig_idx = sig_cmd->add_subcommand("index", "Schwarzian index at a point");
  sig_idx->add_option("--sigma", sig_f)->required();
  sig_idx->add_option("--var", sig_var, "variable (default t)");
  sig_idx->add_option("--at", at_point)->required();
  sig_idx->callback([&] {
    QuadDifferential s{parse_ratfunc(sig_f, sig_var), sig_var};
    emit(json{{"index", index_at(s, parse_point(at_point, sig_var))}});
  });

  auto* sig_from = sig_cmd->add_subcommand(
      "from-indices", "differential with indices n0, n1, ninf at 0, 1, infinity");
  int n0 = 1, n1 = 1, ninf = 1;
  sig_from->add_option("n0", n0)->required();
  sig_from->add_option("n1", n1)->required();
  sig_from->add_option("ninf", ninf)->required();
  sig_from->add_option("--var", sig_var, "variable (default t)");
  sig_from->callback([&] {
    QuadDifferential s = sigma_from_indices(n0, n1, ninf, sig_var);
    emit(json{{"sigma", ratfunc_str(s.f, sig_var)},
              {"sigma_json", ratfunc_to_json(s.f, sig_var)}});
  });

  // ---- print ----
  auto* print_cmd = app.add_subcommand("print", "parse and reprint an expression");
  std::string print_expr, print_var = "t", print_style = "plain";
  print_cmd->add_option("--expr", print_expr)->required();
  print_cmd->add_option("--var", print_var, "variable (default t)");
  print_cmd->add_option("--style", print_style, "plain | json | latex")
      ->check(CLI::IsMember({"plain", "json", "latex"}));
  print_cmd->callback([&] {
    RatFunc f = parse_ratfunc(print_expr, print_var);
    if (print_style == "json") {
      emit(ratfunc_to_json(f, print_var));
    } else if (print_style == "latex") {
      std::cout << ratfunc_latex(f, print_var) << "\n";
    } else {
      std::cout << ratfunc_str(f, print_var) << "\n";
    }
  });

  // ---- catalog ----
  auto* cat_cmd = app.add_subcommand("catalog", "the built-in twist families");
  cat_cmd->require_subcommand(1);
  int cat_id = 0;

  cat_cmd->add_subcommand("list", "ids and headline data")->callback([&] {
    json out = json::array();
    for (int id = 1; id <= 11; ++id) {
      const auto& e = catalog::get_entry(id);
      json j;
      j["id"] = e.id;
      j["fiber_types"] = e.fiber_types;
      j["discriminant"] = e.discriminant;
      out.push_back(j);
    }
    emit(out);
  });

  auto* cat_show = cat_cmd->add_subcommand("show", "full entry");
  cat_show->add_option("id", cat_id)->required();
  cat_show->callback([&] { emit(entry_json(catalog::get_entry(cat_id))); });

  auto* cat_verify = cat_cmd->add_subcommand("verify", "verify one entry (or all)");
  cat_id = 0;
  cat_verify->add_option("id", cat_id, "entry id; omit to verify everything");
  cat_verify->callback([&] {
    catalog::Report rep = cat_id ? catalog::verify_entry(cat_id) : catalog::verify_all();
    emit(report_json(rep));
    if (!rep.all_pass()) throw MathFailure{json{{"error", "verification failed"}}};
  });

  cat_cmd->add_subcommand("verify-all", "verify everything")->callback([&] {
    catalog::Report rep = catalog::verify_all();
    emit(report_json(rep));
    if (!rep.all_pass()) throw MathFailure{json{{"error", "verification failed"}}};
  });

  // ---- search ----
  auto* search_cmd = app.add_subcommand("search", "correspondence search");
  auto* search_mob = search_cmd->add_subcommand(
      "mobius", "Moebius maps matching two catalog entries' marked points");
  int src_id = 0, tgt_id = 0;
  search_mob->add_option("--src", src_id, "source catalog id")->required();
  search_mob->add_option("--tgt", tgt_id, "target catalog id")->required();
  search_mob->callback([&] {
    const auto& se = catalog::get_entry(src_id);
    const auto& te = catalog::get_entry(tgt_id);
    auto maps = search_mobius({se.sigma, se.singular_points},
                              {te.sigma, te.singular_points});
    json out = json::array();
    for (const RationalMap& m : maps) out.push_back(ratfunc_str(m.expr, "l"));
    emit(json{{"maps", out}});
  });

  // ---- check ----
  auto* check_cmd = app.add_subcommand("check", "verification helpers");
  auto* check_num = check_cmd->add_subcommand(
      "numeric", "numeric test of the twist operator against a period");
  std::string nc1, nc2;
  std::vector<std::string> lambdas_text;
  double tol = 1e-6;
  check_num->add_option("--c1", nc1)->required();
  check_num->add_option("--c2", nc2)->required();
  check_num->add_option("--lambda", lambdas_text, "sample point (repeatable)")->required();
  check_num->add_option("--tol", tol, "relative residual tolerance");
  check_num->callback([&] {
    RatFunc c1 = parse_ratfunc(nc1, "t"), c2 = parse_ratfunc(nc2, "t");
    TwistPF tw = twist_pf(c1, c2);
    std::vector<Rational> ls;
    for (const std::string& s : lambdas_text) ls.push_back(parse_rational(s));
    NumericOptions opt;
    if (const char* env = std::getenv("PF_NUMERIC_DIGITS")) opt.digits = std::atol(env);
    NumericReport rep = numeric_check(tw, c1, c2, ls, tol, opt);
    json out;
    out["pass"] = rep.pass;
    out["max_rel_residual"] = rep.max_rel_residual;
    json samples = json::array();
    for (const NumericSample& s : rep.samples)
      samples.push_back(json{{"lambda", s.lambda.get_str()},
                             {"rel_residual", s.rel_residual},
                             {"pass", s.pass}});
    out["samples"] = samples;
    if (!rep.message.empty()) out["message"] = rep.message;
    emit(out);
    if (!rep.pass) throw MathFailure{json{{"error", "numeric check failed"}}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MathFailure& f) {
    std::cout << f.payload.dump(2) << "\n";
    return kExitMath;
  } catch (const ParseError& e) {
    emit(json{{"error", e.what()}});
    return kExitUsage;
  } catch (const MathError& e) {
    emit(json{{"error", e.what()}});
    return kExitMath;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}});
    return kExitUsage;
  }
}
