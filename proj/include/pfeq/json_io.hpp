#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pfeq/ratfunc.hpp"

namespace pfeq {

// Schema for one rational function:
//   {"num": [decimal strings, ascending], "den": [...], "var": name, "ext": d or null}
// Both arrays are the integer-normalized forms (cleared denominators, content 1,
// positive leading denominator coefficient), so output is byte-deterministic.
nlohmann::json ratfunc_to_json(const RatFunc& f, const std::string& var,
                               std::optional<long> ext = std::nullopt);

RatFunc ratfunc_from_json(const nlohmann::json& j, std::string* var_out = nullptr);

std::string rational_to_string(const Rational& q);

}  // namespace pfeq
