#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "casselman/ratfn.hpp"
#include "casselman/weyl.hpp"

namespace casselman::test {

inline ElementIndex el(const WeylGroup& W, std::initializer_list<int> word) {
  return element_from_word(W, word).index();
}

inline RootVec rv(std::initializer_list<int> coords) {
  std::vector<int> c(coords);
  return RootVec::from(c);
}

// (1 - q^{-1} z^a)/(1 - z^a)
inline RatFn gk_factor(const RootVec& a) {
  return (RatFn(1) - RatFn::q_pow(-1) * RatFn::z_pow(a)) * RatFn::inv_one_minus_z(a);
}

// Small random rational function over the roots of rs: a few monomials over
// a product of at most two binomials.
inline RatFn random_ratfn(std::mt19937& rng, const RootSystem& rs) {
  std::uniform_int_distribution<int> coeff(-3, 3), qexp(-2, 2), zexp(-1, 2), nterms(1, 3), nden(0, 2);
  std::uniform_int_distribution<int> root(0, rs.num_positive() - 1);
  std::vector<QZTerm> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    RootVec z;
    for (int j = 0; j < rs.rank(); ++j) z[j] = static_cast<std::int16_t>(zexp(rng));
    int c = coeff(rng);
    terms.push_back({{qexp(rng), z}, c == 0 ? 1 : c});
  }
  RatFn f(QZLaurent::from_terms(terms));
  int d = nden(rng);
  for (int i = 0; i < d; ++i) f = f * RatFn::inv_one_minus_z(rs.root(root(rng)));
  return f;
}

}  // namespace casselman::test
