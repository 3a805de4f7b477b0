#include "casselman/klpoly.hpp"

namespace casselman {

KLTable::KLTable(const WeylGroup& group)
    : group_(&group),
      n_(group.size()),
      p_cols_(n_) {}

namespace {

// Pair tables are allocated on first use; most scans touch only one of them.
std::optional<LaurentQ>& pair_slot(std::vector<std::optional<LaurentQ>>& table, std::size_t n,
                                   std::size_t key) {
  if (table.empty()) table.resize(n * n);
  return table[key];
}

}  // namespace

const LaurentQ& KLTable::R(ElementIndex u, ElementIndex v) {
  auto& slot = pair_slot(r_, n_, key(u, v));
  if (slot) return *slot;
  const WeylGroup& W = *group_;
  LaurentQ value;
  if (u == v) {
    value = 1;
  } else if (W.leq(u, v)) {
    int s = W.first_left_descent(v);
    ElementIndex sv = W.lmul(s, v);
    ElementIndex su = W.lmul(s, u);
    if (W.length(su) < W.length(u)) {
      value = R(su, sv);
    } else {
      value = (LaurentQ::monomial(1) - 1) * R(u, sv) + R(su, sv).shifted(1);
    }
  }
  slot = std::move(value);
  return *slot;
}

// Descent recursion with s a left descent of w, v = sw:
//   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
//             - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
// where c = 1 if sx < x and 0 otherwise.
const std::vector<LaurentQ>& KLTable::P_column(ElementIndex w) {
  auto& slot = p_cols_[w];
  if (slot) return *slot;
  const WeylGroup& W = *group_;
  std::vector<LaurentQ> col(n_);
  if (w == W.identity()) {
    col[w] = 1;
  } else {
    int s = W.first_left_descent(w);
    ElementIndex v = W.lmul(s, w);
    // Column slots are preallocated, so references stay valid while the
    // recursion fills other columns.
    const std::vector<LaurentQ>& colv = P_column(v);
    struct Correction {
      ElementIndex z;
      std::int64_t mu;
      int shift;
    };
    std::vector<Correction> corrections;
    for (ElementIndex z = 0; z < v; ++z) {
      int diff = W.length(v) - W.length(z);
      if (diff <= 0 || diff % 2 == 0) continue;
      if (!W.is_left_descent(s, z) || !W.leq(z, v)) continue;
      std::int64_t m = colv[z].coeff((diff - 1) / 2);
      if (m != 0) corrections.push_back({z, m, (W.length(w) - W.length(z)) / 2});
    }
    std::vector<const std::vector<LaurentQ>*> zcols;
    for (const auto& corr : corrections) zcols.push_back(&P_column(corr.z));
    for (ElementIndex x = 0; x <= w; ++x) {
      if (!W.leq(x, w)) continue;
      ElementIndex sx = W.lmul(s, x);
      bool down = W.length(sx) < W.length(x);
      LaurentQ value = colv[sx].shifted(down ? 0 : 1) + colv[x].shifted(down ? 1 : 0);
      for (std::size_t k = 0; k < corrections.size(); ++k) {
        const LaurentQ& pxz = (*zcols[k])[x];
        if (!pxz.is_zero()) value -= (pxz * corrections[k].mu).shifted(corrections[k].shift);
      }
      col[x] = std::move(value);
    }
  }
  slot = std::move(col);
  return *slot;
}

const LaurentQ& KLTable::P(ElementIndex u, ElementIndex v) { return P_column(v)[u]; }

const LaurentQ& KLTable::Q(ElementIndex u, ElementIndex v) {
  const WeylGroup& W = *group_;
  ElementIndex w0 = W.longest();
  return P(W.mul(w0, v), W.mul(w0, u));
}

std::int64_t KLTable::mu(ElementIndex u, ElementIndex v) {
  const WeylGroup& W = *group_;
  int diff = W.length(v) - W.length(u);
  if (diff <= 0 || diff % 2 == 0 || !W.leq(u, v)) return 0;
  return P(u, v).coeff((diff - 1) / 2);
}

bool KLTable::precedes(ElementIndex u, ElementIndex v, bool include_covers) {
  const WeylGroup& W = *group_;
  int diff = W.length(v) - W.length(u);
  if (diff % 2 == 0 || diff < (include_covers ? 1 : 3) || !W.leq(u, v)) return false;
  const LaurentQ& p = P(u, v);
  return !p.is_zero() && p.degree() == (diff - 1) / 2;
}

const LaurentQ& KLTable::alternating_P_sum(ElementIndex u, ElementIndex y) {
  auto& slot = pair_slot(a_, n_, key(u, y));
  if (slot) return *slot;
  const WeylGroup& W = *group_;
  LaurentQ sum;
  for (ElementIndex x : W.interval(u, y)) {
    const LaurentQ& p = P(x, y);
    sum += W.sign(x) > 0 ? p : -p;
  }
  slot = std::move(sum);
  return *slot;
}

const LaurentQ& KLTable::alternating_Qbar_sum(ElementIndex y, ElementIndex v) {
  auto& slot = pair_slot(b_, n_, key(y, v));
  if (slot) return *slot;
  const WeylGroup& W = *group_;
  LaurentQ sum;
  for (ElementIndex z : W.interval(y, v)) {
    LaurentQ qb = Q(y, z).bar();
    sum += W.sign(z) > 0 ? qb : -qb;
  }
  slot = std::move(sum);
  return *slot;
}

// The chain sum factors through the middle element y:
//   c_{u,v} = q_u e_v sum_y e_y q_y^{-1} (sum_x e_x P_{x,y}) (sum_z e_z bar Q_{y,z}).
const LaurentQ& KLTable::c(ElementIndex u, ElementIndex v) {
  auto& slot = pair_slot(c_, n_, key(u, v));
  if (slot) return *slot;
  const WeylGroup& W = *group_;
  LaurentQ sum;
  if (W.leq(u, v)) {
    for (ElementIndex y : W.interval(u, v)) {
      LaurentQ term = (alternating_P_sum(u, y) * alternating_Qbar_sum(y, v)).shifted(-W.length(y));
      sum += W.sign(y) > 0 ? term : -term;
    }
    sum = sum.shifted(W.length(u));
    if (W.sign(v) < 0) sum = -sum;
  }
  slot = std::move(sum);
  return *slot;
}

}  // namespace casselman
