#include "casselman/verify.hpp"

#include <memory>

#include "casselman/casselman.hpp"
#include "casselman/hecke.hpp"
#include "casselman/klpoly.hpp"
#include "casselman/parallel.hpp"

namespace casselman {

Backend parse_backend(std::string_view s) {
  if (s == "symbolic") return Backend::Symbolic;
  if (s == "modular") return Backend::Modular;
  throw ParseError("unknown backend '" + std::string(s) + "'");
}

std::string backend_name(Backend b) { return b == Backend::Symbolic ? "symbolic" : "modular"; }

namespace {

const std::vector<std::pair<Suite, std::string>> kSuiteNames = {
    {Suite::Combinatorics, "combinatorics"}, {Suite::FeQ1, "fe-q1"},
    {Suite::FullInversion, "full-inversion"}, {Suite::Duality, "duality"},
    {Suite::Limits, "limits"},                {Suite::Oracle, "oracle"},
    {Suite::HeckeLemmas, "hecke-lemmas"},     {Suite::Transforms, "transforms"},
    {Suite::All, "all"},
};

}  // namespace

Suite parse_suite(std::string_view s) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (name == s) return suite;
  }
  throw ParseError("unknown suite '" + std::string(s) + "'");
}

std::string suite_name(Suite s) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return name;
  }
  return "?";
}

std::vector<Suite> expand_suite(Suite s) {
  if (s != Suite::All) return {s};
  std::vector<Suite> out;
  for (const auto& entry : kSuiteNames) {
    if (entry.first != Suite::All) out.push_back(entry.first);
  }
  return out;
}

std::size_t SuiteReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& [id, count] : checks) n += count;
  return n;
}

namespace {

struct Partial {
  int sample = -1;
  std::map<std::string, std::size_t> checks;
  std::vector<CheckFailure> failures;

  void check(const std::string& id, bool ok, ElementIndex u, ElementIndex v, std::string detail = {}) {
    ++checks[id];
    if (!ok) failures.push_back({id, u, v, sample, std::move(detail)});
  }
};

std::vector<std::pair<ElementIndex, ElementIndex>> comparable_pairs(const WeylGroup& W) {
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = u; v < W.size(); ++v) {
      if (W.leq(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

int sign_of(const WeylGroup& W, ElementIndex a, ElementIndex b) { return W.sign(a) * W.sign(b); }

// Checks that do not depend on the scalar backend.
void combinatorial_checks(const WeylGroup& W, KLTable& kl, Partial& out) {
  const std::size_t n = W.size();
  // Moebius function of the Bruhat order by the defining recursion.
  for (ElementIndex u = 0; u < n; ++u) {
    std::vector<std::int64_t> mob(n, 0);
    mob[u] = 1;
    for (ElementIndex y = u + 1; y < n; ++y) {
      if (!W.leq(u, y)) continue;
      std::int64_t sum = 0;
      for (ElementIndex z = u; z < y; ++z) {
        if (mob[z] != 0 && W.leq(z, y)) sum += mob[z];
      }
      mob[y] = -sum;
    }
    for (ElementIndex y = u; y < n; ++y) {
      if (!W.leq(u, y)) continue;
      out.check("moebius", mob[y] == sign_of(W, u, y), u, y);
    }
  }
  for (ElementIndex u = 0; u < n; ++u) {
    for (ElementIndex v = 0; v < n; ++v) {
      for (int s = 0; s < W.rank(); ++s) {
        if (!W.is_left_descent(s, u) || !W.is_left_descent(s, v)) continue;
        ElementIndex su = W.lmul(s, u), sv = W.lmul(s, v);
        bool a = W.leq(u, v), b = W.leq(su, v), c = W.leq(su, sv);
        out.check("lifting", a == b && b == c, u, v);
      }
    }
  }
  for (auto [u, v] : comparable_pairs(W)) {
    auto diff = static_cast<std::size_t>(W.length(v) - W.length(u));
    auto s = W.s_set(u, v).size();
    auto sp = W.s_prime_set(u, v).size();
    out.check("s-cardinality", s >= diff && sp >= diff, u, v);
    if (kl.Q(u, v).is_one()) out.check("s-cardinality-q1", s == diff, u, v);
    if (kl.P(u, v).is_one()) out.check("s-prime-cardinality-p1", sp == diff, u, v);
  }
}

void kl_identity_checks(const WeylGroup& W, KLTable& kl, Partial& out) {
  for (auto [x, t] : comparable_pairs(W)) {
    LaurentQ sum;
    for (ElementIndex y : W.interval(x, t)) {
      LaurentQ term = kl.P(x, y) * kl.Q(y, t);
      sum += sign_of(W, x, y) > 0 ? term : -term;
    }
    out.check("kl-inversion", x == t ? sum.is_one() : sum.is_zero(), x, t, sum.to_string());

    // Q_{u,y} = q_u^{-1} q_y sum_{u<=w<=y} bar(Q_{u,w}) bar(R_{w,y})
    LaurentQ rhs;
    for (ElementIndex w : W.interval(x, t)) rhs += kl.Q(x, w).bar() * kl.R(w, t).bar();
    rhs = rhs.shifted(W.length(t) - W.length(x));
    out.check("q-identity", rhs == kl.Q(x, t), x, t);

    // Q_{u,v} = 1 iff sum_{u<=z<=v} R_{z,v} = q_v q_u^{-1}
    LaurentQ rsum;
    for (ElementIndex z : W.interval(x, t)) rsum += kl.R(z, t);
    bool crit = rsum == LaurentQ::monomial(W.length(t) - W.length(x));
    out.check("q-criterion", crit == kl.Q(x, t).is_one(), x, t);
  }
}

template <ScalarField Field>
class Checker {
 public:
  using V = typename Field::value_type;

  Checker(const WeylGroup& W, Field F, KLTable& kl, Partial& out)
      : W_(W), F_(F), kl_(kl), out_(out), T_(W, F), H_(W, F) {}

  void run(Suite suite) {
    switch (suite) {
      case Suite::FeQ1: fe_q1(); break;
      case Suite::FullInversion: full_inversion(); break;
      case Suite::Duality: duality(); break;
      case Suite::Limits: limits(); break;
      case Suite::Oracle: oracle(); break;
      case Suite::HeckeLemmas: hecke_lemmas(); break;
      case Suite::Transforms: transforms(); break;
      default: break;
    }
  }

 private:
  V q(int k) const { return F_.q_pow(k); }
  V eps(ElementIndex a, ElementIndex b) const { return F_.constant(sign_of(W_, a, b)); }
  V poly(const LaurentQ& p) const { return F_.from_q(p); }

  std::string show(const V& a) const {
    if constexpr (Field::kSymbolic) {
      return a.to_string(W_.rank());
    } else {
      (void)a;
      return {};
    }
  }
  std::string show2(const V& a, const V& b) const {
    if constexpr (Field::kSymbolic) {
      return "lhs = " + show(a) + "; rhs = " + show(b);
    } else {
      (void)a;
      (void)b;
      return {};
    }
  }
  void eq(const std::string& id, const V& lhs, const V& rhs, ElementIndex u, ElementIndex v) {
    bool ok = F_.equal(lhs, rhs);
    out_.check(id, ok, u, v, ok ? std::string{} : show2(lhs, rhs));
  }
  void eq(const std::string& id, const HeckeElt<V>& lhs, const HeckeElt<V>& rhs, ElementIndex u,
          ElementIndex v) {
    out_.check(id, H_.equal(lhs, rhs), u, v);
  }
  V delta(ElementIndex u, ElementIndex v) const { return u == v ? F_.one() : F_.zero(); }

  void fe_q1() {
    for (auto [u, v] : comparable_pairs(W_)) {
      if (!kl_.Q(u, v).is_one()) continue;
      const V& m = T_.m(u, v);
      eq("functional-equation", F_.bar(m), q(W_.length(v) - W_.length(u)) * F_.invert_z(m), u, v);
    }
  }

  void full_inversion() {
    const std::size_t n = W_.size();
    std::vector<std::vector<LaurentQ>> a_cache(n);
    // a_u[t] = sum_{u<=w<=t} e_w bar(Q_{u,w})
    auto a_row = [&](ElementIndex u) -> const std::vector<LaurentQ>& {
      auto& row = a_cache[u];
      if (row.empty()) {
        row.resize(n);
        for (ElementIndex t = u; t < n; ++t) {
          if (!W_.leq(u, t)) continue;
          LaurentQ sum;
          for (ElementIndex w : W_.interval(u, t)) {
            LaurentQ qb = kl_.Q(u, w).bar();
            sum += W_.sign(w) > 0 ? qb : -qb;
          }
          row[t] = std::move(sum);
        }
      }
      return row;
    };
    for (auto [u, v] : comparable_pairs(W_)) {
      int dl = W_.length(v) - W_.length(u);
      auto interval = W_.interval(u, v);

      V sum = F_.zero();
      for (ElementIndex w : interval) {
        const LaurentQ& c = kl_.c(u, w);
        if (!c.is_zero()) sum = sum + poly(c) * F_.invert_z(T_.m(w, v));
      }
      eq("full-inversion", F_.bar(T_.m(u, v)), q(dl) * sum, u, v);

      const auto& a = a_row(u);
      V lhs = F_.zero();
      V rhs = F_.zero();
      V rinv = F_.zero();
      for (ElementIndex t : interval) {
        if (!a[t].is_zero()) {
          V term = poly(a[t]) * F_.invert_z(T_.m(t, v));
          lhs = W_.sign(t) > 0 ? lhs + term : lhs - term;
        }
        rhs = rhs + poly(kl_.Q(u, t)) * T_.r(t, v);
        rinv = rinv + poly(kl_.R(u, t).bar().shifted(W_.length(t))) * T_.r(t, v);
      }
      eq("q-m-relation", lhs, q(-dl) * rhs, u, v);
      eq("r-inversion", F_.invert_z(F_.bar(T_.r(u, v))), q(-W_.length(v)) * rinv, u, v);
    }
  }

  void duality() {
    ElementIndex w0 = W_.longest();
    auto flip = [&](ElementIndex x) { return W_.mul(w0, x); };
    for (auto [u, v] : comparable_pairs(W_)) {
      V sr = F_.zero(), sm = F_.zero();
      for (ElementIndex x : W_.interval(u, v)) {
        V e = eps(x, v);
        sr = sr + T_.r(u, x) * e * T_.r(flip(v), flip(x));
        sm = sm + T_.m(u, x) * e * T_.m(flip(v), flip(x));
      }
      eq("r-duality", sr, delta(u, v), u, v);
      eq("m-duality", sm, delta(u, v), u, v);
      eq("m-prime-dual", T_.m_prime(u, v), eps(u, v) * T_.m(flip(v), flip(u)), u, v);
      eq("r-prime-dual", T_.r_prime(u, v), eps(u, v) * T_.r(flip(v), flip(u)), u, v);
    }
  }

  void limits() {
    if constexpr (Field::kSymbolic) {
      std::vector<int> up, down;
      for (int i = 0; i < W_.rank(); ++i) {
        up.push_back(i + 1);
        down.push_back(2 * (W_.rank() - i) + 1);
      }
      for (auto [u, v] : comparable_pairs(W_)) {
        const LaurentQ& R = kl_.R(u, v);
        check_limit("r-limit", T_.r(u, v), {}, R, u, v);
        check_limit("r-limit-weighted", T_.r(u, v), up, R, u, v);
        check_limit("r-limit-weighted", T_.r(u, v), down, R, u, v);
        check_limit("r-prime-limit", T_.r_prime(u, v), {}, sign_of(W_, u, v) > 0 ? R : -R, u, v);
      }
    }
  }

  void check_limit(const std::string& id, const RatFn& f, std::span<const int> weights, const LaurentQ& want,
                   ElementIndex u, ElementIndex v) {
    try {
      LaurentQ got = f.limit_z_infinity(weights);
      out_.check(id, got == want, u, v, got == want ? "" : got.to_string() + " vs " + want.to_string());
    } catch (const NoLimit& e) {
      out_.check(id, false, u, v, e.what());
    }
  }

  void oracle() {
    const std::size_t n = W_.size();
    for (ElementIndex v = 0; v < n; ++v) {
      auto mu = H_.mu(v);
      for (ElementIndex u = 0; u < n; ++u) {
        V want = W_.leq(u, v) ? q(-W_.length(u)) * F_.bar(T_.r(u, v)) : F_.zero();
        eq("mu-expansion", mu.coeff[W_.inverse(u)], want, u, v);
        if (W_.leq(u, v)) eq("m-via-hecke", H_.lambda(H_.mul(H_.psi(u), mu)), T_.m(u, v), u, v);
      }
    }
  }

  void hecke_lemmas() {
    const std::size_t n = W_.size();
    const ElementIndex e = W_.identity();
    for (ElementIndex u = 0; u < n; ++u) {
      auto tu = H_.basis(u);
      for (ElementIndex v = 0; v < n; ++v) {
        V want = u == W_.inverse(v) ? q(W_.length(u)) : F_.zero();
        eq("lambda-tu-tv", H_.lambda(H_.mul_basis(tu, v)), want, u, v);
      }
    }
    for (int s = 0; s < W_.rank(); ++s) {
      ElementIndex es = W_.rmul(e, s);
      auto ts = H_.basis(es);
      auto want = H_.add(H_.basis(es, q(1) - F_.one()), H_.scalar(q(1)));
      eq("quadratic", H_.mul(ts, ts), want, es, es);
      for (int t = s + 1; t < W_.rank(); ++t) {
        ElementIndex et = W_.rmul(e, t);
        // Alternating products of length m_st.
        int m = 1;
        ElementIndex x = W_.mul(es, et);
        for (ElementIndex p = x; p != e; p = W_.mul(p, x)) ++m;
        auto left = H_.scalar(F_.one()), right = H_.scalar(F_.one());
        for (int k = 0; k < m; ++k) {
          left = H_.mul_simple(left, k % 2 == 0 ? s : t);
          right = H_.mul_simple(right, k % 2 == 0 ? t : s);
        }
        eq("braid", left, right, es, et);
      }
    }
    KLTable& kl = kl_;
    for (ElementIndex w = 0; w < n; ++w) {
      auto inv = H_.t_inverse(w);
      eq("t-inverse-routes", inv, H_.t_inverse_via_R(w, kl), w, w);
      eq("t-inverse-product", H_.mul_basis(inv, w), H_.scalar(F_.one()), w, w);

      auto mu = H_.mu(w);
      for (const auto& word : W_.reduced_words(w, 64)) eq("mu-reduced-words", H_.mu_word(word), mu, w, w);
      eq("mu-bar", H_.bar(mu), H_.scale(H_.invert_z(mu), q(W_.length(w))), w, w);

      for (int s = 0; s < W_.rank(); ++s) {
        ElementIndex sw = W_.lmul(s, w);
        auto lhs = H_.mul(mu, H_.mu_simple(s, w));
        V c = F_.one();
        if (W_.length(sw) < W_.length(w)) {
          RootVec g = W_.act(W_.inverse(w), RootVec::simple(s));
          auto factor = [&](const RootVec& x) {
            return (F_.one() - q(-1) * F_.z_pow(x)) * F_.inv_one_minus_z(x);
          };
          c = factor(g) * factor(-g);
        }
        eq("mu-mu", lhs, H_.scale(H_.mu(sw), c), w, sw);
      }
    }
    // Associativity on a deterministic spread of triples.
    for (std::size_t k = 0; k < std::min<std::size_t>(n, 8); ++k) {
      auto a = H_.mu(static_cast<ElementIndex>((k * 7 + 1) % n));
      auto b = H_.add(H_.basis(static_cast<ElementIndex>((k * 5 + 2) % n)), H_.psi(static_cast<ElementIndex>(k % n)));
      auto c = H_.t_inverse(static_cast<ElementIndex>((k * 3 + 4) % n));
      eq("associativity", H_.mul(H_.mul(a, b), c), H_.mul(a, H_.mul(b, c)), static_cast<ElementIndex>(k),
         static_cast<ElementIndex>(k));
    }
  }

  void transforms() {
    CassTable<Field> other(W_, F_, DescentChoice::Highest);
    for (auto [u, v] : comparable_pairs(W_)) {
      const V& r = T_.r(u, v);
      eq("r-from-m", T_.r_from_m(u, v), r, u, v);
      eq("bar-sign", F_.bar(r), eps(u, v) * q(W_.length(u) - W_.length(v)) * r, u, v);
      eq("descent-choice", other.r(u, v), r, u, v);
      V mp = F_.zero(), rp = F_.zero();
      for (ElementIndex x : W_.interval(u, v)) {
        mp = mp + eps(x, v) * F_.bar(T_.r_prime(u, x));
        rp = rp + F_.bar(T_.m_prime(u, x));
      }
      eq("m-prime-from-r-prime", T_.m_prime(u, v), mp, u, v);
      eq("r-prime-from-m-prime", T_.r_prime(u, v), rp, u, v);
      eq("r-prime-routes", T_.r_prime_recursive(u, v), T_.r_prime(u, v), u, v);
    }
  }

  const WeylGroup& W_;
  Field F_;
  KLTable& kl_;
  Partial& out_;
  CassTable<Field> T_;
  HeckeAlgebra<Field> H_;
};

bool backend_dependent(Suite s) { return s != Suite::Combinatorics && s != Suite::Limits; }

}  // namespace

SuiteReport run_suite(const WeylGroup& group, Suite suite, const RunOptions& options) {
  if (suite == Suite::All) throw Error("run_suite needs a concrete suite");
  SuiteReport report;
  report.suite = suite_name(suite);
  report.system = group.roots().name();
  report.backend = backend_dependent(suite) ? options.backend : Backend::Symbolic;

  auto merge = [&](Partial& part) {
    for (const auto& [id, count] : part.checks) report.checks[id] += count;
    for (auto& f : part.failures) report.failures.push_back(std::move(f));
  };

  KLTable kl(group);
  {
    Partial part;
    if (suite == Suite::Combinatorics) combinatorial_checks(group, kl, part);
    if (suite == Suite::FullInversion) kl_identity_checks(group, kl, part);
    if (!backend_dependent(suite) || report.backend == Backend::Symbolic) {
      Checker<SymbolicField> checker(group, SymbolicField{}, kl, part);
      checker.run(suite);
    }
    merge(part);
  }
  if (report.backend == Backend::Symbolic) return report;

  report.samples = options.samples;
  report.prime = options.prime;
  report.seed = options.seed;
  std::vector<Partial> parts(static_cast<std::size_t>(std::max(options.samples, 0)));
  int workers = std::max(1, options.workers);
  // KL tables are lazily filled and not shareable, so each worker owns one.
  std::vector<std::unique_ptr<KLTable>> tables;
  for (int w = 0; w < workers; ++w) tables.push_back(std::make_unique<KLTable>(group));
  tables[0].reset();
  parallel_for(parts.size(), workers, [&](int worker, std::size_t i) {
    KLTable& local = worker == 0 ? kl : *tables[static_cast<std::size_t>(worker)];
    ModCtx ctx = ModCtx::sample(group.roots(), options.prime, options.seed, i);
    Partial& part = parts[i];
    part.sample = static_cast<int>(i);
    Checker<ModularField> checker(group, ModularField(ctx), local, part);
    checker.run(suite);
  });
  for (auto& part : parts) merge(part);
  return report;
}

}  // namespace casselman
