#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "casselman/field.hpp"
#include "casselman/klpoly.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

enum class DescentChoice { Lowest, Highest };

// Memoized deformed R-polynomials r_{u,v}(z), their inverse matrix r',
// the Casselman coefficients m_{u,v} and the inverse matrix m', over a scalar
// backend. All four matrices are upper triangular in the Bruhat order with
// unit diagonal.
//
// Accessors r(), m(), m_prime(), r_prime() return matrix entries and are zero
// when u is not <= v. The *_coeff() forms throw NotComparable instead.
//
// r uses the descent recursion: pick a left descent s = s_alpha of v and put
// beta = -v^{-1} alpha (a positive root). Then
//   su < u:  r_{u,v} = (1-q)/(1-z^beta) r_{u,sv} + r_{su,sv}
//   su > u:  r_{u,v} = (1-q) z^beta/(1-z^beta) r_{u,sv} + q r_{su,sv}
// and m_{u,v} = sum_{u<=x<=v} bar(r_{x,v}).
//
// Not thread-safe: tables fill lazily. Use one table per worker.
template <ScalarField Field>
class CassTable {
 public:
  using V = typename Field::value_type;

  CassTable(const WeylGroup& group, Field field, DescentChoice choice = DescentChoice::Lowest)
      : group_(&group), field_(std::move(field)), choice_(choice), n_(group.size()) {}

  const WeylGroup& group() const { return *group_; }
  const Field& field() const { return field_; }

  // epsilon_w q_w^k as a scalar.
  V sign(ElementIndex w) const { return field_.constant(group_->sign(w)); }
  V q_len(ElementIndex w, int k = 1) const { return field_.q_pow(k * group_->length(w)); }

  const V& r(ElementIndex u, ElementIndex v) {
    auto& slot = slot_of(r_, u, v);
    if (slot) return *slot;
    const WeylGroup& W = *group_;
    V value = field_.zero();
    if (u == v) {
      value = field_.one();
    } else if (W.leq(u, v)) {
      int s = descent_of(v);
      ElementIndex sv = W.lmul(s, v);
      ElementIndex su = W.lmul(s, u);
      RootVec beta = -W.act(W.inverse(v), RootVec::simple(s));
      V one_minus_q = field_.one() - field_.q_pow(1);
      V pole = field_.inv_one_minus_z(beta);
      if (W.length(su) < W.length(u)) {
        value = one_minus_q * pole * r(u, sv) + r(su, sv);
      } else {
        value = one_minus_q * field_.z_pow(beta) * pole * r(u, sv) + field_.q_pow(1) * r(su, sv);
      }
    }
    slot = std::move(value);
    return *slot;
  }

  const V& m(ElementIndex u, ElementIndex v) {
    auto& slot = slot_of(m_, u, v);
    if (slot) return *slot;
    V value = field_.zero();
    if (group_->leq(u, v)) {
      for (ElementIndex x : group_->interval(u, v)) value = value + field_.bar(r(x, v));
    }
    slot = std::move(value);
    return *slot;
  }

  V m_coeff(ElementIndex u, ElementIndex v) {
    require_leq(u, v, "m_coeff");
    return m(u, v);
  }

  // r_{u,v} = sum_{u<=x<=v} e_u e_x bar(m_{x,v}).
  V r_from_m(ElementIndex u, ElementIndex v) {
    require_leq(u, v, "r_from_m");
    V sum = field_.zero();
    for (ElementIndex x : group_->interval(u, v)) {
      V term = field_.bar(m(x, v));
      sum = group_->sign(u) * group_->sign(x) > 0 ? sum + term : sum - term;
    }
    return sum;
  }

  // Inverse of the m-matrix by back-substitution:
  //   m'_{u,v} = -sum_{u<x<=v} m_{u,x} m'_{x,v}.
  const V& m_prime(ElementIndex u, ElementIndex v) {
    return inverse_entry(mp_, u, v, [this](ElementIndex a, ElementIndex b) -> const V& { return m(a, b); });
  }

  V m_prime_coeff(ElementIndex u, ElementIndex v) {
    require_leq(u, v, "m_prime");
    return m_prime(u, v);
  }

  // Inverse of the r-matrix by back-substitution.
  const V& r_prime(ElementIndex u, ElementIndex v) {
    return inverse_entry(rp_, u, v, [this](ElementIndex a, ElementIndex b) -> const V& { return r(a, b); });
  }

  // r' by its own recursion: pick s with su > u, gamma = u^{-1} alpha_s (positive).
  //   sv > v:  r'_{u,v} = r'_{su,sv} + (q-1)/(1-z^gamma) r'_{su,v}
  //   sv < v:  r'_{u,v} = (q-1) z^gamma/(1-z^gamma) r'_{su,v} + q r'_{su,sv}
  const V& r_prime_recursive(ElementIndex u, ElementIndex v) {
    auto& slot = slot_of(rp_rec_, u, v);
    if (slot) return *slot;
    const WeylGroup& W = *group_;
    V value = field_.zero();
    if (u == v) {
      value = field_.one();
    } else if (W.leq(u, v)) {
      int s = ascent_of(u);
      ElementIndex su = W.lmul(s, u);
      ElementIndex sv = W.lmul(s, v);
      RootVec gamma = W.act(W.inverse(u), RootVec::simple(s));
      V q_minus_one = field_.q_pow(1) - field_.one();
      V pole = field_.inv_one_minus_z(gamma);
      if (W.length(sv) > W.length(v)) {
        value = r_prime_recursive(su, sv) + q_minus_one * pole * r_prime_recursive(su, v);
      } else {
        value = q_minus_one * field_.z_pow(gamma) * pole * r_prime_recursive(su, v) +
                field_.q_pow(1) * r_prime_recursive(su, sv);
      }
    }
    slot = std::move(value);
    return *slot;
  }

  enum class RPrimeRoute { Inverse, Recursion };
  V r_prime_coeff(ElementIndex u, ElementIndex v, RPrimeRoute route = RPrimeRoute::Inverse) {
    require_leq(u, v, "r_prime");
    return route == RPrimeRoute::Inverse ? r_prime(u, v) : r_prime_recursive(u, v);
  }

 private:
  using Table = std::vector<std::optional<V>>;

  std::optional<V>& slot_of(Table& t, ElementIndex u, ElementIndex v) {
    if (t.empty()) t.resize(n_ * n_);
    return t[std::size_t{u} * n_ + v];
  }

  void require_leq(ElementIndex u, ElementIndex v, const char* what) const {
    if (!group_->leq(u, v)) throw NotComparable(std::string(what) + " requires u <= v");
  }

  int descent_of(ElementIndex v) const {
    const WeylGroup& W = *group_;
    if (choice_ == DescentChoice::Lowest) return W.first_left_descent(v);
    for (int s = W.rank() - 1; s >= 0; --s) {
      if (W.is_left_descent(s, v)) return s;
    }
    return -1;
  }

  int ascent_of(ElementIndex u) const {
    const WeylGroup& W = *group_;
    if (choice_ == DescentChoice::Lowest) {
      for (int s = 0; s < W.rank(); ++s) {
        if (!W.is_left_descent(s, u)) return s;
      }
    } else {
      for (int s = W.rank() - 1; s >= 0; --s) {
        if (!W.is_left_descent(s, u)) return s;
      }
    }
    return -1;
  }

  template <class Entry>
  const V& inverse_entry(Table& t, ElementIndex u, ElementIndex v, Entry entry) {
    auto& slot = slot_of(t, u, v);
    if (slot) return *slot;
    V value = field_.zero();
    if (u == v) {
      value = field_.one();
    } else if (group_->leq(u, v)) {
      for (ElementIndex x : group_->interval(u, v)) {
        if (x == u) continue;
        value = value - entry(u, x) * inverse_entry(t, x, v, entry);
      }
    }
    slot = std::move(value);
    return *slot;
  }

  const WeylGroup* group_;
  Field field_;
  DescentChoice choice_;
  std::size_t n_;
  Table r_, m_, mp_, rp_, rp_rec_;
};

// prod_{alpha in roots} (1 - q^{-1} z^alpha)/(1 - z^alpha), times
// (-1)^{sign_exp} when is_signed.
template <ScalarField Field>
typename Field::value_type gk_product(const Field& field, const std::vector<RootVec>& roots,
                                      bool is_signed = false, int sign_exp = 0) {
  auto value = field.one();
  for (const auto& a : roots) {
    value = value * (field.one() - field.q_pow(-1) * field.z_pow(a)) * field.inv_one_minus_z(a);
  }
  if (is_signed && (sign_exp % 2 != 0)) value = -value;
  return value;
}

inline std::vector<RootVec> root_vectors(const RootSystem& rs, const std::vector<int>& indices) {
  std::vector<RootVec> out;
  for (int k : indices) out.push_back(rs.root(k));
  return out;
}

enum class DescentCase { First, Second, None };

// Outcome of descent_reduce for a pair u < v.
struct DescentCertificate {
  DescentCase kind = DescentCase::None;
  int simple = -1;      // 0-based s, or -1
  RootVec beta;         // -v^{-1} alpha_s for the first case
  bool verified = false;
};

// Looks for a left descent s of v with either
//   (i)  su > u: then S(u,v) = S(u,sv) + {beta} and
//        bar m_{u,v} = (1 - q z^beta)/(1 - z^beta) bar m_{u,sv}, or
//   (ii) su < u and u not <= sv: then S(u,v) = S(su,sv), m_{u,v} = m_{su,sv}
//        and r_{u,v} = r_{su,sv}.
// The claimed identities are checked in the table's backend before returning.
template <ScalarField Field>
DescentCertificate descent_reduce(CassTable<Field>& table, ElementIndex u, ElementIndex v) {
  const WeylGroup& W = table.group();
  const Field& F = table.field();
  if (!W.less(u, v)) throw NotComparable("descent_reduce requires u < v");
  DescentCertificate cert;
  for (int s = 0; s < W.rank(); ++s) {
    if (!W.is_left_descent(s, v)) continue;
    ElementIndex sv = W.lmul(s, v);
    ElementIndex su = W.lmul(s, u);
    if (W.length(su) > W.length(u)) {
      cert.kind = DescentCase::First;
      cert.simple = s;
      cert.beta = -W.act(W.inverse(v), RootVec::simple(s));
      auto factor = (F.one() - F.q_pow(1) * F.z_pow(cert.beta)) * F.inv_one_minus_z(cert.beta);
      bool m_ok = F.equal(F.bar(table.m(u, v)), factor * F.bar(table.m(u, sv)));
      auto s_uv = W.s_set(u, v);
      auto s_usv = W.s_set(u, sv);
      int beta_idx = W.roots().index_of(cert.beta);
      bool s_ok = std::find(s_usv.begin(), s_usv.end(), beta_idx) == s_usv.end();
      s_usv.push_back(beta_idx);
      std::sort(s_usv.begin(), s_usv.end());
      s_ok = s_ok && s_usv == s_uv;
      cert.verified = m_ok && s_ok;
      return cert;
    }
    if (!W.leq(u, sv)) {
      cert.kind = DescentCase::Second;
      cert.simple = s;
      bool ok = F.equal(table.m(u, v), table.m(su, sv)) && F.equal(table.r(u, v), table.r(su, sv)) &&
                W.s_set(u, v) == W.s_set(su, sv);
      cert.verified = ok;
      return cert;
    }
  }
  return cert;
}

// Denominator of f (reduced) is a sub-multiset of the given positive roots
// with every multiplicity <= 1.
bool denominator_within(const RatFn& f, const RootSystem& rs, const std::vector<int>& allowed,
                        int* max_mult = nullptr);

// Both r_{u,v} and m_{u,v} have reduced denominators dividing
// prod_{beta in S(u,v)} (1 - z^beta).
bool pole_clearance_check(CassTable<SymbolicField>& table, ElementIndex u, ElementIndex v,
                          int* max_mult = nullptr);

}  // namespace casselman
