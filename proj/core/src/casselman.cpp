#include "casselman/casselman.hpp"

namespace casselman {

bool denominator_within(const RatFn& f, const RootSystem& rs, const std::vector<int>& allowed,
                        int* max_mult) {
  bool ok = true;
  for (const auto& d : f.den()) {
    if (max_mult && d.mult > *max_mult) *max_mult = d.mult;
    int idx = rs.index_of(d.root);
    if (d.mult > 1 || std::find(allowed.begin(), allowed.end(), idx) == allowed.end()) ok = false;
  }
  return ok;
}

bool pole_clearance_check(CassTable<SymbolicField>& table, ElementIndex u, ElementIndex v, int* max_mult) {
  const WeylGroup& W = table.group();
  if (!W.leq(u, v)) throw NotComparable("pole_clearance_check requires u <= v");
  auto allowed = W.s_set(u, v);
  bool r_ok = denominator_within(table.r(u, v), W.roots(), allowed, max_mult);
  bool m_ok = denominator_within(table.m(u, v), W.roots(), allowed, max_mult);
  return r_ok && m_ok;
}

}  // namespace casselman
