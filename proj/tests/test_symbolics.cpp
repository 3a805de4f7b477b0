#include <doctest.h>

#include <random>

#include "casselman/casselman.hpp"
#include "casselman/errors.hpp"
#include "casselman/modular.hpp"
#include "casselman/ratfn.hpp"
#include "casselman/serialize.hpp"
#include "support.hpp"

using namespace casselman;
using casselman::test::el;
using casselman::test::gk_factor;
using casselman::test::random_ratfn;
using casselman::test::rv;

namespace {

const RatFn q = RatFn::q_pow(1);
const RatFn qi = RatFn::q_pow(-1);

RatFn z(const RootVec& a) { return RatFn::z_pow(a); }
RatFn pole(const RootVec& a) { return RatFn::inv_one_minus_z(a); }

}  // namespace

TEST_CASE("Laurent polynomials in q") {
  LaurentQ p = LaurentQ::from_map({{-1, 1}, {-2, -1}});
  CHECK(p.to_string() == "q^-1 - q^-2");
  CHECK(LaurentQ::from_map({{-1, -1}, {-3, 1}}).to_string() == "-q^-1 + q^-3");
  CHECK(LaurentQ::from_map({{0, 1}, {1, 1}}).to_string() == "1 + q");
  CHECK(LaurentQ::from_map({{0, 1}, {1, -2}, {2, 1}}).to_string() == "1 - 2*q + q^2");
  CHECK(LaurentQ().to_string() == "0");
  CHECK(p.bar() == LaurentQ::from_map({{1, 1}, {2, -1}}));
  CHECK((p * p.bar()).coeff(0) == 2);
  CHECK(LaurentQ::from_map({{0, 1}, {3, 0}}).degree() == 0);
  CHECK(LaurentQ::from_map({{2, 1}, {5, 1}}).truncated_above(4) == LaurentQ::monomial(2));
}

TEST_CASE("coefficient overflow is detected") {
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("rational function arithmetic") {
  RootVec a = rv({1, 0});
  CHECK(RatFn(1) + RatFn(0) == RatFn(1));
  RatFn r = (RatFn(1) - q) * z(a) * pole(a);
  RatFn sum = r + RatFn(1);
  CHECK(sum == (RatFn(1) - q * z(a)) * pole(a));
  CHECK(sum.den().size() == 1);
  CHECK(pole(a) * (RatFn(1) - z(a)) == RatFn(1));
  CHECK((pole(a) * (RatFn(1) - z(a))).den().empty());
  CHECK(-(-r) == r);
  CHECK((r - r).is_zero());
}

TEST_CASE("reduction cancels exact binomial factors") {
  RootVec a = rv({1, 0}), b = rv({1, 1});
  CHECK(RatFn((RatFn(1) - z(a)).num(), {{a, 1}}) == RatFn(1));
  CHECK(RatFn((RatFn(1) - z(a)).num(), {{a, 1}}).den().empty());
  // ((1-q) + (q-1) z^b)/(1 - z^b) = (1-q)(1 - z^b)/(1 - z^b)
  RatFn f(((RatFn(1) - q) + (q - RatFn(1)) * z(b)).num(), {{b, 1}});
  CHECK(f.den().empty());
  CHECK(f == RatFn(1) - q);
  RatFn g = gk_factor(a) * gk_factor(b);
  CHECK(g.reduce().num() == g.num());
  CHECK(g.reduce().den().size() == g.den().size());
  // Negative root denominators are normalized to positive roots.
  RatFn h = pole(-a);
  REQUIRE(h.den().size() == 1);
  CHECK(h.den()[0].root == a);
  CHECK(h == -z(a) * pole(a));
}

TEST_CASE("bar and invert_z") {
  RootVec a = rv({1, 0});
  CHECK(q.bar() == qi);
  CHECK(((RatFn(1) - q) * z(a) * pole(a)).bar() == (RatFn(1) - qi) * z(a) * pole(a));
  CHECK(z(a).invert_z() == z(-a));
  CHECK(pole(a).invert_z() == -z(a) * pole(a));
}

TEST_CASE("limits as z goes to infinity") {
  RootVec a = rv({1, 0});
  CHECK(RatFn(1).limit_z_infinity() == LaurentQ(1));
  CHECK(((RatFn(1) - q) * z(a) * pole(a)).limit_z_infinity() == LaurentQ::from_map({{0, -1}, {1, 1}}));
  CHECK(gk_factor(a).limit_z_infinity() == LaurentQ::monomial(-1));
  CHECK(pole(a).limit_z_infinity().is_zero());
  CHECK_THROWS_AS(z(a).limit_z_infinity(), NoLimit);
}

TEST_CASE("random rational functions satisfy the field axioms") {
  std::mt19937 rng(7);
  RootSystem rs = build_root_system("A", 3);
  for (int i = 0; i < 200; ++i) {
    RatFn a = random_ratfn(rng, rs), b = random_ratfn(rng, rs), c = random_ratfn(rng, rs);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.bar().bar() == a);
    CHECK(a.invert_z().invert_z() == a);
    CHECK(a.bar().invert_z() == a.invert_z().bar());
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).invert_z() == a.invert_z() + b.invert_z());
    CHECK(a.reduce().num() == a.num());
  }
}

TEST_CASE("limits do not depend on the positive weight vector") {
  for (int rank : {2, 3}) {
    WeylGroup W(build_root_system("A", rank));
    CassTable<SymbolicField> T(W, SymbolicField{});
    std::vector<std::vector<int>> weights = {{1, 1, 1}, {1, 2, 3}, {5, 1, 2}, {2, 7, 1}};
    for (ElementIndex u = 0; u < W.size(); ++u) {
      for (ElementIndex v = 0; v < W.size(); ++v) {
        if (!W.leq(u, v)) continue;
        LaurentQ base = T.r(u, v).limit_z_infinity();
        for (auto& w : weights) {
          std::span<const int> ws(w.data(), static_cast<std::size_t>(rank));
          CHECK(T.r(u, v).limit_z_infinity(ws) == base);
        }
      }
    }
  }
}

TEST_CASE("modular evaluation") {
  RootSystem rs = build_root_system("A", 2);
  ModCtx small(rs, 101, 2, {3, 5});
  CHECK(small.eval(RatFn(1)).value() == 1);
  CHECK(small.eval(q).value() == 2);
  CHECK(small.eval(qi).value() == 51);
  CHECK(small.eval(z(rv({1, 1}))).value() == 15);
  CHECK(is_prime(kDefaultPrime));

  WeylGroup W(rs);
  CassTable<SymbolicField> T(W, SymbolicField{});
  RatFn m = T.m(W.identity(), el(W, {1}));
  RatFn want = gk_factor(rv({1, 0}));
  for (std::size_t i = 0; i < 20; ++i) {
    ModCtx ctx = ModCtx::sample(rs, kDefaultPrime, 1, i);
    CHECK(ctx.eval(m) == ctx.eval(want));
    CHECK(ctx.eval_mod(m) == ctx.eval_mod(want));
  }
}

TEST_CASE("modular evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  RootSystem rs = build_root_system("B", 2);
  ModCtx ctx = ModCtx::sample(rs, kDefaultPrime, 3, 0);
  for (int i = 0; i < 200; ++i) {
    RatFn a = random_ratfn(rng, rs), b = random_ratfn(rng, rs);
    CHECK(ctx.eval(a + b) == ctx.eval(a) + ctx.eval(b));
    CHECK(ctx.eval(a * b) == ctx.eval(a) * ctx.eval(b));
    CHECK(ctx.eval(a.bar()) == ctx.eval(a).bar());
    CHECK(ctx.eval(a.invert_z()) == ctx.eval(a).invert_z());
  }
}

TEST_CASE("sample points are deterministic in the seed") {
  RootSystem rs = build_root_system("A", 3);
  ModCtx a = ModCtx::sample(rs, kDefaultPrime, 42, 5);
  ModCtx b = ModCtx::sample(rs, kDefaultPrime, 42, 5);
  ModCtx c = ModCtx::sample(rs, kDefaultPrime, 42, 6);
  CHECK(a.q() == b.q());
  CHECK(a.z() == b.z());
  CHECK((a.q() != c.q() || a.z() != c.z()));
}

TEST_CASE("JSON round trip is bit exact") {
  RootSystem rs = build_root_system("A", 3);
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    RatFn f = random_ratfn(rng, rs);
    std::string text = to_json(f, 3).dump();
    RatFn g = ratfn_from_json(json::parse(text));
    CHECK(g == f);
    CHECK(to_json(g, 3).dump() == text);
  }
  WeylGroup W(rs);
  CassTable<SymbolicField> T(W, SymbolicField{});
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = 0; v < W.size(); ++v) {
      if (!W.leq(u, v)) continue;
      std::string text = to_json(T.m(u, v), 3).dump();
      CHECK(to_json(ratfn_from_json(json::parse(text)), 3).dump() == text);
    }
  }
  LaurentQ p = LaurentQ::from_map({{-1, 1}, {-2, -1}});
  CHECK(to_json(p).dump() == R"([{"coeff":-1,"q_exp":-2},{"coeff":1,"q_exp":-1}])");
  CHECK(laurent_from_json(to_json(p)) == p);
  CHECK(to_json(gk_factor(rv({1, 0})), 2).dump() ==
        R"({"den":[{"mult":1,"root":[1,0]}],"num":[{"coeff":-1,"q_exp":-1,"z_exp":[1,0]},{"coeff":1,"q_exp":0,"z_exp":[0,0]}]})");
  CHECK_THROWS_AS(ratfn_from_json(json::array()), ParseError);
}

TEST_CASE("printing") {
  RootVec a = rv({1, 0});
  CHECK(gk_factor(a).to_string(2) == "(1 - q^-1*z1)/(1 - z1)");
  CHECK(((RatFn(1) - q) * z(a) * pole(a)).to_string(2) == "(z1 - q*z1)/(1 - z1)");
  CHECK(latex(gk_factor(a), 2) == "\\frac{1 - q^{-1} z_{1}}{(1 - z_{1})}");
  CHECK(latex(LaurentQ::from_map({{-1, 1}, {-2, -1}})) == "q^{-1} - q^{-2}");
  CHECK((pole(a) * pole(a)).to_string(2) == "(1)/((1 - z1)^2)");
}
