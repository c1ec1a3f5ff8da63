#include "pfeq/json_io.hpp"

#include "pfeq/expr.hpp"

namespace pfeq {

nlohmann::json ratfunc_to_json(const RatFunc& f, const std::string& var,
                               std::optional<long> ext) {
  Poly n, d;
  integer_normalized(f, n, d);
  nlohmann::json j;
  j["var"] = canonical_var(var);
  j["ext"] = ext ? nlohmann::json(*ext) : nlohmann::json(nullptr);
  auto arr = [](const Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) a.push_back(Int(c.get_num()).get_str());
    if (p.is_zero_poly()) a.push_back("0");
    return a;
  };
  j["num"] = arr(n);
  j["den"] = arr(d);
  return j;
}

RatFunc ratfunc_from_json(const nlohmann::json& j, std::string* var_out) {
  if (var_out && j.contains("var")) *var_out = j["var"].get<std::string>();
  auto poly = [](const nlohmann::json& a) {
    std::vector<Rational> c;
    for (const auto& s : a) c.emplace_back(Int(s.template get<std::string>()));
    return Poly::from_coeffs(std::move(c));
  };
  return RatFunc(poly(j.at("num")), poly(j.at("den")));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace pfeq
