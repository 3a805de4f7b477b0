#include "casselman/serialize.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "casselman/errors.hpp"

namespace casselman {

namespace {

std::string latex_exp(int e) { return e == 1 ? "" : "^{" + std::to_string(e) + "}"; }

// Monomial body without the coefficient; empty for the constant monomial.
std::string latex_monomial(int q, const RootVec& z, int rank) {
  std::string s;
  if (q != 0) s += "q" + latex_exp(q);
  for (int i = 0; i < rank; ++i) {
    if (z[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "z_{" + std::to_string(i + 1) + "}" + latex_exp(z[i]);
  }
  return s;
}

void append_term(std::ostringstream& os, bool first, std::int64_t coeff, const std::string& body) {
  std::int64_t a = coeff < 0 ? -coeff : coeff;
  if (first) {
    if (coeff < 0) os << '-';
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (body.empty()) {
    os << a;
  } else {
    if (a != 1) os << a << ' ';
    os << body;
  }
}

}  // namespace

json to_json(const LaurentQ& p) {
  json j = json::array();
  for (auto [e, c] : p.to_map()) j.push_back({{"q_exp", e}, {"coeff", c}});
  return j;
}

LaurentQ laurent_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of terms");
  std::map<int, std::int64_t> m;
  for (const auto& t : j) m[t.at("q_exp").get<int>()] += t.at("coeff").get<std::int64_t>();
  return LaurentQ::from_map(m);
}

json to_json(const QZLaurent& p, int rank) {
  json j = json::array();
  for (const auto& t : p.terms()) {
    j.push_back({{"q_exp", t.mono.q}, {"z_exp", t.mono.z.to_vector(rank)}, {"coeff", t.coeff}});
  }
  return j;
}

QZLaurent qz_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of terms");
  std::vector<QZTerm> terms;
  for (const auto& t : j) {
    auto z = t.at("z_exp").get<std::vector<int>>();
    if (z.size() > static_cast<std::size_t>(kMaxRank)) throw ParseError("z_exp longer than the maximum rank");
    terms.push_back({{t.at("q_exp").get<int>(), RootVec::from(z)}, t.at("coeff").get<std::int64_t>()});
  }
  return QZLaurent::from_terms(std::move(terms));
}

json to_json(const RatFn& f, int rank) {
  json den = json::array();
  for (const auto& d : f.den()) den.push_back({{"root", d.root.to_vector(rank)}, {"mult", d.mult}});
  return {{"num", to_json(f.num(), rank)}, {"den", den}};
}

RatFn ratfn_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("rational function must be a JSON object");
  std::vector<DenFactor> den;
  for (const auto& d : j.at("den")) {
    auto root = d.at("root").get<std::vector<int>>();
    if (root.size() > static_cast<std::size_t>(kMaxRank)) throw ParseError("root longer than the maximum rank");
    den.push_back({RootVec::from(root), d.at("mult").get<int>()});
  }
  return RatFn(qz_from_json(j.at("num")), std::move(den));
}

json element_json(const WeylGroup& group, ElementIndex w) {
  WeylElt e = group.element(w);
  return {{"word", e.to_string()}, {"letters", e.word()}};
}

ElementIndex element_from_json(const WeylGroup& group, const json& j) {
  if (j.is_string()) return element_from_word(group, parse_word(j.get<std::string>())).index();
  return element_from_word(group, j.at("letters").get<std::vector<int>>()).index();
}

std::string latex(const LaurentQ& p) {
  if (p.is_zero()) return "0";
  // Same term order as LaurentQ::to_string.
  std::ostringstream os;
  std::vector<std::pair<int, std::int64_t>> terms;
  for (auto [e, c] : p.to_map()) terms.emplace_back(e, c);
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int aa = std::abs(a.first), ab = std::abs(b.first);
    return aa != ab ? aa < ab : a.first > b.first;
  });
  bool first = true;
  for (auto [e, c] : terms) {
    append_term(os, first, c, latex_monomial(e, RootVec{}, 0));
    first = false;
  }
  return os.str();
}

std::string latex(const QZLaurent& p, int rank) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : display_order(p.terms(), rank)) {
    append_term(os, first, t.coeff, latex_monomial(t.mono.q, t.mono.z, rank));
    first = false;
  }
  return os.str();
}

std::string latex(const RatFn& f, int rank) {
  if (f.den().empty()) return latex(f.num(), rank);
  std::string den;
  for (const auto& d : f.den()) {
    den += "(1 - " + latex_monomial(0, d.root, rank) + ")";
    if (d.mult != 1) den += "^{" + std::to_string(d.mult) + "}";
  }
  return "\\frac{" + latex(f.num(), rank) + "}{" + den + "}";
}

std::string latex_element(const WeylGroup& group, ElementIndex w) {
  auto word = group.element(w).word();
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " s_" : "s_") + std::to_string(word[i]);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"') r += '"';
    r += ch;
  }
  return r + "\"";
}

}  // namespace casselman
