#include <doctest.h>

#include "casselman/klpoly.hpp"
#include "casselman/weyl.hpp"
#include "support.hpp"

using namespace casselman;
using casselman::test::el;

namespace {

LaurentQ poly(std::initializer_list<std::pair<const int, std::int64_t>> terms) { return LaurentQ::from_map(terms); }

LaurentQ sign_poly(int e) { return LaurentQ(e % 2 == 0 ? 1 : -1); }

// P_{x,w} from the bar-invariance identity
//   q^{l(w)-l(x)} bar(P_{x,w}) - P_{x,w} = sum_{x<y<=w} R_{x,y} P_{y,w},
// keeping the degree <= (l(w)-l(x)-1)/2 part of the right side.
std::vector<LaurentQ> p_column_oracle(const WeylGroup& W, KLTable& kl, ElementIndex w) {
  std::vector<LaurentQ> P(W.size());
  P[w] = 1;
  for (ElementIndex xi = w; xi-- > 0;) {
    if (!W.leq(xi, w)) continue;
    LaurentQ s;
    for (ElementIndex y : W.interval(xi, w)) {
      if (y != xi) s += kl.R(xi, y) * P[y];
    }
    int d = W.length(w) - W.length(xi);
    P[xi] = -s.truncated_above((d - 1) / 2);
    CHECK((P[xi].bar().shifted(d) - P[xi]) == s);
  }
  return P;
}

LaurentQ c_brute_force(const WeylGroup& W, KLTable& kl, ElementIndex u, ElementIndex v) {
  LaurentQ total;
  auto iv = W.interval(u, v);
  for (ElementIndex x : iv) {
    for (ElementIndex y : iv) {
      if (!W.leq(x, y)) continue;
      for (ElementIndex z : iv) {
        if (!W.leq(y, z)) continue;
        int e = W.length(x) + W.length(y) + W.length(z) + W.length(v);
        LaurentQ term = kl.P(x, y) * kl.Q(y, z).bar();
        total += sign_poly(e) * term.shifted(W.length(u) - W.length(y));
      }
    }
  }
  return total;
}

}  // namespace

TEST_CASE("classical R polynomials") {
  WeylGroup W(build_root_system("A", 2));
  KLTable kl(W);
  for (ElementIndex w = 0; w < W.size(); ++w) CHECK(kl.R(w, w) == LaurentQ(1));
  CHECK(kl.R(W.identity(), el(W, {1})) == poly({{0, -1}, {1, 1}}));
  CHECK(kl.R(W.identity(), el(W, {1, 2})) == poly({{0, 1}, {1, -2}, {2, 1}}));
  CHECK(kl.R(el(W, {1}), el(W, {2})).is_zero());
}

TEST_CASE("Kazhdan-Lusztig P and Q") {
  WeylGroup W(build_root_system("A", 3));
  KLTable kl(W);
  LaurentQ one_plus_q = poly({{0, 1}, {1, 1}});
  CHECK(kl.P(el(W, {2}), el(W, {2, 1, 3, 2})) == one_plus_q);
  CHECK(kl.Q(el(W, {1}), el(W, {1, 2, 3, 2, 1})) == LaurentQ(1));
  CHECK(kl.Q(el(W, {2}), el(W, {3, 2, 1, 3, 2})) == one_plus_q);
  CHECK(kl.P(W.identity(), W.longest()) == LaurentQ(1));
  CHECK(kl.mu(el(W, {2}), el(W, {2, 1, 3, 2})) == 1);
  CHECK(kl.mu(W.identity(), el(W, {1, 2})) == 0);
  CHECK(kl.mu(W.identity(), el(W, {1})) == 1);
  for (ElementIndex u = 0; u < W.size(); ++u) {
    CHECK(kl.P(u, u) == LaurentQ(1));
    CHECK(kl.Q(u, u) == LaurentQ(1));
    for (ElementIndex v = 0; v < W.size(); ++v) {
      if (!W.leq(u, v)) {
        CHECK(kl.P(u, v).is_zero());
        continue;
      }
      if (W.length(v) - W.length(u) <= 2) CHECK(kl.P(u, v) == LaurentQ(1));
      ElementIndex w0 = W.longest();
      CHECK(kl.Q(u, v) == kl.P(W.mul(w0, v), W.mul(w0, u)));
    }
  }
}

TEST_CASE("P agrees with the bar-invariance oracle") {
  for (auto [type, rank] : {std::pair{"A", 3}, {"B", 2}, {"B", 3}, {"G", 2}}) {
    WeylGroup W(build_root_system(type, rank));
    KLTable kl(W);
    for (ElementIndex w = 0; w < W.size(); ++w) {
      auto oracle = p_column_oracle(W, kl, w);
      for (ElementIndex x = 0; x < W.size(); ++x) {
        if (W.leq(x, w)) CHECK(kl.P(x, w) == oracle[x]);
      }
    }
  }
}

TEST_CASE("P columns match pairwise lookups") {
  WeylGroup W(build_root_system("A", 4));
  KLTable kl(W);
  const auto& col = kl.P_column(W.longest());
  for (ElementIndex x = 0; x < W.size(); ++x) CHECK(col[x] == LaurentQ(1));
  ElementIndex w = el(W, {2, 3, 4, 1, 2, 3, 1, 2});
  const auto& col2 = kl.P_column(w);
  for (ElementIndex x = 0; x < W.size(); ++x) CHECK(col2[x] == kl.P(x, w));
}

TEST_CASE("KL inversion") {
  for (auto [type, rank] : {std::pair{"A", 2}, {"A", 3}, {"B", 2}}) {
    WeylGroup W(build_root_system(type, rank));
    KLTable kl(W);
    for (ElementIndex x = 0; x < W.size(); ++x) {
      for (ElementIndex t = 0; t < W.size(); ++t) {
        if (!W.leq(x, t)) continue;
        LaurentQ sum;
        for (ElementIndex y : W.interval(x, t)) sum += sign_poly(W.length(x) + W.length(y)) * kl.P(x, y) * kl.Q(y, t);
        CHECK(sum == LaurentQ(x == t ? 1 : 0));
      }
    }
  }
}

TEST_CASE("c coefficients: examples") {
  WeylGroup W(build_root_system("A", 4));
  KLTable kl(W);
  ElementIndex u1 = el(W, {3, 1}), v1 = el(W, {3, 4, 2, 3, 1});
  ElementIndex u2 = el(W, {3, 2}), v2 = el(W, {3, 4, 2, 3, 1, 2});
  CHECK(kl.c(u1, v1) == poly({{-1, 1}, {-2, -1}}));
  CHECK(kl.c(u2, v2) == poly({{-1, 1}, {-3, -1}}));
  CHECK(kl.c(el(W, {4, 2}), el(W, {2, 3, 4, 3, 1, 2})) == poly({{-1, -1}, {-3, 1}}));
  CHECK(kl.c(u1, v1) == c_brute_force(W, kl, u1, v1));
  CHECK(kl.c(u2, v2) == c_brute_force(W, kl, u2, v2));
  for (ElementIndex w = 0; w < W.size(); ++w) CHECK(kl.c(w, w) == LaurentQ(1));
  CHECK(kl.c(el(W, {1}), el(W, {2})).is_zero());
}

TEST_CASE("c coefficients match the chain sum") {
  for (auto [type, rank] : {std::pair{"A", 2}, {"A", 3}, {"B", 2}, {"G", 2}}) {
    WeylGroup W(build_root_system(type, rank));
    KLTable kl(W);
    for (ElementIndex u = 0; u < W.size(); ++u) {
      for (ElementIndex v = 0; v < W.size(); ++v) {
        if (!W.leq(u, v)) continue;
        CHECK(kl.c(u, v) == c_brute_force(W, kl, u, v));
        if (W.covers(u, v)) CHECK(kl.c(u, v).is_zero());
      }
    }
  }
}

TEST_CASE("A2 has no nonzero off-diagonal c") {
  WeylGroup W(build_root_system("A", 2));
  KLTable kl(W);
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = u + 1; v < W.size(); ++v) CHECK(kl.c(u, v).is_zero());
  }
}

TEST_CASE("the precedes relation") {
  WeylGroup W(build_root_system("A", 4));
  KLTable kl(W);
  ElementIndex s1 = el(W, {1});
  CHECK_FALSE(kl.precedes(s1, s1));
  CHECK(kl.precedes(el(W, {3, 1}), el(W, {3, 4, 2, 3, 1})));
  CHECK_FALSE(kl.precedes(el(W, {3, 2}), el(W, {3, 4, 2, 3, 1, 2})));
  CHECK_FALSE(kl.precedes(s1, el(W, {1, 2})));
  CHECK(kl.precedes(s1, el(W, {1, 2}), true));
}
