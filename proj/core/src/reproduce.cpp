#include "casselman/reproduce.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "casselman/klpoly.hpp"
#include "casselman/scans.hpp"

namespace casselman {

namespace {

const LaurentQ kC12 = LaurentQ::from_map({{-1, 1}, {-2, -1}});
const LaurentQ kC13 = LaurentQ::from_map({{-1, 1}, {-3, -1}});
const LaurentQ kCm13 = LaurentQ::from_map({{-1, -1}, {-3, 1}});
const LaurentQ kC23 = LaurentQ::from_map({{-2, 1}, {-3, -1}});
const LaurentQ kOnePlusQ = LaurentQ::from_map({{0, 1}, {1, 1}});

std::vector<int> digits(const std::string& s) {
  std::vector<int> w;
  for (char ch : s) w.push_back(ch - '0');
  return w;
}

ElementIndex resolve(const WeylGroup& W, const std::string& word) {
  return element_from_word(W, digits(word)).index();
}

using Key = std::tuple<ElementIndex, ElementIndex, std::map<int, std::int64_t>, bool>;

std::vector<Key> keys(const std::vector<FigureRow>& rows) {
  std::vector<Key> k;
  for (const auto& r : rows) k.emplace_back(r.u, r.v, r.c.to_map(), r.precedes);
  std::sort(k.begin(), k.end());
  return k;
}

using AdKey = std::tuple<ElementIndex, ElementIndex, ElementIndex, std::map<int, std::int64_t>,
                         std::map<int, std::int64_t>>;

std::vector<AdKey> keys(const std::vector<AdTableRow>& rows) {
  std::vector<AdKey> k;
  for (const auto& r : rows) k.emplace_back(r.u, r.v, r.t, r.P.to_map(), r.Q.to_map());
  std::sort(k.begin(), k.end());
  return k;
}

std::string pair_text(const WeylGroup& W, ElementIndex u, ElementIndex v) {
  return "(" + W.element(u).to_string() + ", " + W.element(v).to_string() + ")";
}

}  // namespace

const std::vector<ReferenceFigureRow>& reference_figure1() {
  static const std::vector<ReferenceFigureRow> rows = {
      {"32", "342312", kC13, false, ""},
      {"412", "123432", kC12, true, ""},
      {"31", "34231", kC12, true, ""},
      {"42", "42312", kC12, true, ""},
      {"4121", "1234321", kC12, true, ""},
      {"312", "342312", kC12, true, ""},
      {"232", "234123", kC12, true, ""},
      {"1232", "3412312", kC12, true, ""},
      {"42", "234312", kCm13, false, ""},
      {"232", "23412312", kC23, true, ""},
      {"34121", "12342312", kC12, true, ""},
      {"3431", "12342321", kCm13, false, ""},
      {"42", "23432", kC12, true, ""},
      {"343121", "123423121", kC12, true, ""},
      {"31", "12321", kC12, true, ""},
      {"4231", "23412321", kC13, false, ""},
      {"341", "123421", kC12, true, ""},
      {"2", "2312", kC12, true, ""},
      {"2342", "2342312", kC12, true, ""},
      {"4121", "12343121", kCm13, false, ""},
      {"232", "342312", kC12, true, ""},
      {"4232", "2341232", kC12, true, ""},
      {"41", "1234321", kC23, true, ""},
      {"423", "234123", kC12, true, ""},
      {"31", "34123", kC12, true, ""},
      {"23", "234123", kC13, false, ""},
      {"42321", "23412321", kC12, true, ""},
      {"431", "412321", kC12, true, ""},
      {"123431", "123412321", kC12, true, ""},
      {"3412", "12342312", kC13, false, ""},
      {"4121", "1234312", kC12, true, ""},
      {"3431", "3412321", kC12, true, ""},
      {"42", "23412", kC12, true, ""},
      {"3431", "1234231", kC12, true, ""},
      {"23431", "23412321", kC12, true, ""},
      {"41231", "23412321", kC12, true, ""},
      {"2321", "2341231", kC12, true, ""},
      {"31", "341231", kCm13, false, ""},
      {"34312", "12342312", kC12, true, ""},
      {"231", "234123", kC12, true, ""},
      {"4121", "2343121", kC12, true, ""},
      {"421", "234321", kC12, true, ""},
      {"3431", "1234321", kC12, true, ""},
      {"3", "3423", kC12, true, ""},
      {"342", "342312", kC12, true, ""},
      {"12342", "12342312", kC12, true, "stray token 'a' printed after v; read as s1s2s3s4s2s3s1s2"},
  };
  return rows;
}

const std::vector<ReferenceAdRow>& reference_a3_adtable() {
  static const std::vector<ReferenceAdRow> rows = {
      {"1", "12321", "121", kOnePlusQ, 1},
      {"3", "12321", "232", kOnePlusQ, 1},
      {"13", "12321", "121", kOnePlusQ, kOnePlusQ},
      {"13", "12321", "232", kOnePlusQ, kOnePlusQ},
      {"2", "2132", "121", kOnePlusQ, kOnePlusQ},
      {"2", "2132", "232", kOnePlusQ, kOnePlusQ},
      {"2", "32132", "121", 1, kOnePlusQ},
      {"2", "12132", "232", 1, kOnePlusQ},
  };
  return rows;
}

Figure1Report reproduce_figure1(const WeylGroup& group) {
  const WeylGroup& W = group;
  Figure1Report report;
  report.system = W.roots().name();
  KLTable kl(W);
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = u + 1; v < W.size(); ++v) {
      if (!W.leq(u, v)) continue;
      ++report.comparable_pairs;
      const LaurentQ& c = kl.c(u, v);
      if (c.is_zero()) continue;
      report.rows.push_back({u, v, c, kl.precedes(u, v)});
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), [&](const FigureRow& a, const FigureRow& b) {
    return std::tuple(W.length(a.u), W.length(a.v), a.u, a.v) < std::tuple(W.length(b.u), W.length(b.v), b.u, b.v);
  });
  for (const auto& r : report.rows) {
    if (!r.precedes) continue;
    ++report.precedes_count;
    if (r.c != kC12) report.precedes_other_c.push_back(r);
  }

  if (report.system == "A4") {
    for (const auto& ref : reference_figure1()) {
      report.reference_view.push_back({resolve(W, ref.u), resolve(W, ref.v), ref.c, ref.precedes});
      if (!ref.note.empty()) {
        report.notes.push_back("reference row " + pair_text(W, report.reference_view.back().u, report.reference_view.back().v) +
                               ": " + ref.note);
      }
    }
    report.matches_reference = keys(report.rows) == keys(report.reference_view);
    if (!report.matches_reference) report.notes.push_back("computed rows differ from the reference table");
  } else {
    report.notes.push_back("no reference table for " + report.system);
  }
  for (const auto& r : report.precedes_other_c) {
    report.notes.push_back("precedes-marked pair " + pair_text(W, r.u, r.v) + " has c = " + r.c.to_string() +
                           ", not q^-1 - q^-2");
  }
  return report;
}

AdTableReport reproduce_a3_adtable(const WeylGroup& group) {
  const WeylGroup& W = group;
  AdTableReport report;
  report.system = W.roots().name();
  AdScanReport scan = ad_recursion_scan(W, RunOptions{});
  for (const auto& f : scan.failures) report.rows.push_back({f.u, f.v, f.t, f.P, f.Q});
  std::sort(report.rows.begin(), report.rows.end(), [&](const AdTableRow& a, const AdTableRow& b) {
    return std::tuple(W.length(a.u), W.length(a.v), a.u, a.v, a.t) <
           std::tuple(W.length(b.u), W.length(b.v), b.u, b.v, b.t);
  });
  if (report.system == "A3") {
    for (const auto& ref : reference_a3_adtable()) {
      report.reference_view.push_back({resolve(W, ref.u), resolve(W, ref.v), resolve(W, ref.t), ref.P, ref.Q});
    }
    report.matches_reference = keys(report.rows) == keys(report.reference_view);
    if (!report.matches_reference) report.notes.push_back("computed rows differ from the reference table");
  } else {
    report.notes.push_back("no reference table for " + report.system);
  }
  return report;
}

}  // namespace casselman
