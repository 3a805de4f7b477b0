#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "casselman/laurent.hpp"
#include "casselman/ratfn.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Laurent polynomials in q: [{"q_exp": e, "coeff": c}, ...] by increasing e.
json to_json(const LaurentQ& p);
LaurentQ laurent_from_json(const json& j);

// [{"q_exp": e, "z_exp": [..rank..], "coeff": c}, ...] in stored term order.
json to_json(const QZLaurent& p, int rank);
QZLaurent qz_from_json(const json& j);

// {"num": <terms>, "den": [{"root": [..], "mult": m}, ...]}.
json to_json(const RatFn& f, int rank);
RatFn ratfn_from_json(const json& j);

// {"word": "s1*s2", "letters": [1, 2]}; the identity is {"word": "e", "letters": []}.
json element_json(const WeylGroup& group, ElementIndex w);
ElementIndex element_from_json(const WeylGroup& group, const json& j);

std::string latex(const LaurentQ& p);
std::string latex(const QZLaurent& p, int rank);
std::string latex(const RatFn& f, int rank);
// "s_1 s_2", or "e".
std::string latex_element(const WeylGroup& group, ElementIndex w);

// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace casselman
