#pragma once

#include <vector>

#include "casselman/casselman.hpp"
#include "casselman/field.hpp"
#include "casselman/klpoly.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

// sum_w coeff[w] T_w, dense over the group.
template <class V>
struct HeckeElt {
  std::vector<V> coeff;
};

// Iwahori-Hecke algebra of a Weyl group with scalars extended to a backend
// field. Relations: T_s^2 = (q-1) T_s + q, T_u T_v = T_{uv} when lengths add.
//
// The elements mu_z(w) are the products
//   mu_z(s) = q^{-1} T_s + (1 - q^{-1}) z^alpha/(1 - z^alpha),
//   mu_z(w1 w2) = mu_z(w2) mu_{w2 z}(w1)  (l(w1 w2) = l(w1) + l(w2)),
// where (wz)^lambda = z^{w^{-1} lambda}. Lambda is the linear functional
// taking the coefficient of T_e.
template <ScalarField Field>
class HeckeAlgebra {
 public:
  using V = typename Field::value_type;
  using Elt = HeckeElt<V>;

  HeckeAlgebra(const WeylGroup& group, Field field) : group_(&group), field_(std::move(field)) {}

  const WeylGroup& group() const { return *group_; }
  const Field& field() const { return field_; }

  Elt zero() const { return Elt{std::vector<V>(group_->size(), field_.zero())}; }
  Elt basis(ElementIndex w) const { return basis(w, field_.one()); }
  Elt basis(ElementIndex w, V c) const {
    Elt e = zero();
    e.coeff[w] = std::move(c);
    return e;
  }
  Elt scalar(V c) const { return basis(group_->identity(), std::move(c)); }

  Elt add(const Elt& a, const Elt& b) const {
    Elt r = a;
    for (std::size_t w = 0; w < r.coeff.size(); ++w) r.coeff[w] = r.coeff[w] + b.coeff[w];
    return r;
  }
  Elt sub(const Elt& a, const Elt& b) const {
    Elt r = a;
    for (std::size_t w = 0; w < r.coeff.size(); ++w) r.coeff[w] = r.coeff[w] - b.coeff[w];
    return r;
  }
  Elt scale(const Elt& a, const V& c) const {
    Elt r = a;
    for (auto& x : r.coeff) {
      if (!field_.is_zero(x)) x = x * c;
    }
    return r;
  }

  // a * T_s.
  Elt mul_simple(const Elt& a, int s) const {
    const WeylGroup& W = *group_;
    Elt r = zero();
    V q = field_.q_pow(1);
    V q_minus_one = q - field_.one();
    for (ElementIndex w = 0; w < W.size(); ++w) {
      const V& c = a.coeff[w];
      if (field_.is_zero(c)) continue;
      ElementIndex ws = W.rmul(w, s);
      if (W.length(ws) > W.length(w)) {
        r.coeff[ws] = r.coeff[ws] + c;
      } else {
        r.coeff[w] = r.coeff[w] + q_minus_one * c;
        r.coeff[ws] = r.coeff[ws] + q * c;
      }
    }
    return r;
  }

  // a * T_s^{-1}, with T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
  Elt mul_simple_inverse(const Elt& a, int s) const {
    V qi = field_.q_pow(-1);
    return add(scale(mul_simple(a, s), qi), scale(a, qi - field_.one()));
  }

  // a * T_w.
  Elt mul_basis(const Elt& a, ElementIndex w) const {
    Elt r = a;
    for (int s : group_->reduced_word(w)) r = mul_simple(r, s);
    return r;
  }

  Elt mul(const Elt& a, const Elt& b) const {
    Elt r = zero();
    for (ElementIndex w = 0; w < group_->size(); ++w) {
      if (field_.is_zero(b.coeff[w])) continue;
      r = add(r, scale(mul_basis(a, w), b.coeff[w]));
    }
    return r;
  }

  // T_w^{-1} as the reversed product of simple inverses.
  Elt t_inverse(ElementIndex w) const {
    Elt r = scalar(field_.one());
    auto word = group_->reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = mul_simple_inverse(r, *it);
    return r;
  }

  // T_y^{-1} = sum_{u<=y} bar(R_{u,y}) q_u^{-1} T_{u^{-1}}.
  Elt t_inverse_via_R(ElementIndex y, KLTable& kl) const {
    const WeylGroup& W = *group_;
    Elt r = zero();
    for (ElementIndex u : W.interval(W.identity(), y)) {
      r.coeff[W.inverse(u)] = field_.from_q(kl.R(u, y).bar().shifted(-W.length(u)));
    }
    return r;
  }

  // mu_{gz}(s) for the 0-based simple reflection s.
  Elt mu_simple(int s, ElementIndex g) const {
    const WeylGroup& W = *group_;
    RootVec gamma = W.act(W.inverse(g), RootVec::simple(s));
    V qi = field_.q_pow(-1);
    V c = (field_.one() - qi) * field_.z_pow(gamma) * field_.inv_one_minus_z(gamma);
    Elt r = basis(W.rmul(W.identity(), s), qi);
    r.coeff[W.identity()] = c;
    return r;
  }

  // mu_{gz}(w) along the lex-minimal reduced word of w.
  Elt mu(ElementIndex w, ElementIndex g = 0) const { return mu_word(group_->reduced_word(w), g); }

  // mu_{gz}(s_{i1} ... s_{ik}) for a reduced word (0-based letters): the
  // factor for letter j is taken at shift s_{i(j+1)} ... s_{ik} g.
  Elt mu_word(const std::vector<int>& word, ElementIndex g = 0) const {
    const WeylGroup& W = *group_;
    Elt r = scalar(field_.one());
    ElementIndex y = g;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int s = *it;
      RootVec gamma = W.act(W.inverse(y), RootVec::simple(s));
      V qi = field_.q_pow(-1);
      V c = (field_.one() - qi) * field_.z_pow(gamma) * field_.inv_one_minus_z(gamma);
      r = add(scale(mul_simple(r, s), qi), scale(r, c));
      y = W.lmul(s, y);
    }
    return r;
  }

  // Coefficient of T_e.
  V lambda(const Elt& a) const { return a.coeff[group_->identity()]; }

  // psi_u = sum_{x >= u} T_x.
  Elt psi(ElementIndex u) const {
    Elt r = zero();
    for (ElementIndex x = 0; x < group_->size(); ++x) {
      if (group_->leq(u, x)) r.coeff[x] = field_.one();
    }
    return r;
  }

  // Involution sum c_w T_w -> sum bar(c_w) T_{w^{-1}}^{-1}.
  Elt bar(const Elt& a) const {
    Elt r = zero();
    for (ElementIndex w = 0; w < group_->size(); ++w) {
      if (field_.is_zero(a.coeff[w])) continue;
      r = add(r, scale(t_inverse(group_->inverse(w)), field_.bar(a.coeff[w])));
    }
    return r;
  }

  // z -> z^{-1} on every coefficient.
  Elt invert_z(const Elt& a) const {
    Elt r = a;
    for (auto& x : r.coeff) x = field_.invert_z(x);
    return r;
  }

  // m_{u,v} = Lambda(psi_u mu_z(v)).
  V m_via_hecke(ElementIndex u, ElementIndex v) const { return lambda(mul(psi(u), mu(v))); }

  bool equal(const Elt& a, const Elt& b) const {
    for (std::size_t w = 0; w < a.coeff.size(); ++w) {
      if (!field_.equal(a.coeff[w], b.coeff[w])) return false;
    }
    return true;
  }

 private:
  const WeylGroup* group_;
  Field field_;
};

}  // namespace casselman
