#include "casselman/scans.hpp"

#include <memory>

#include "casselman/casselman.hpp"
#include "casselman/klpoly.hpp"
#include "casselman/parallel.hpp"

namespace casselman {

Conjecture parse_conjecture(std::string_view s) {
  if (s == "poles") return Conjecture::Poles;
  if (s == "descent") return Conjecture::Descent;
  if (s == "ad-recursion") return Conjecture::AdRecursion;
  if (s == "product-formula") return Conjecture::ProductFormula;
  throw ParseError("unknown conjecture '" + std::string(s) + "'");
}

std::string conjecture_name(Conjecture c) {
  switch (c) {
    case Conjecture::Poles: return "poles";
    case Conjecture::Descent: return "descent";
    case Conjecture::AdRecursion: return "ad-recursion";
    case Conjecture::ProductFormula: return "product-formula";
  }
  return "?";
}

PoleScanReport pole_scan(const WeylGroup& group) {
  const WeylGroup& W = group;
  PoleScanReport report;
  report.system = W.roots().name();
  CassTable<SymbolicField> table(W, SymbolicField{});
  for (ElementIndex v = 0; v < W.size(); ++v) {
    for (ElementIndex u = 0; u <= v; ++u) {
      if (!W.leq(u, v)) continue;
      ++report.pairs;
      if (!pole_clearance_check(table, u, v, &report.max_multiplicity)) {
        report.violations.push_back(
            {u, v, table.r(u, v).to_string(W.rank()), table.m(u, v).to_string(W.rank())});
      }
    }
  }
  return report;
}

DescentScanReport descent_scan(const WeylGroup& group, int workers) {
  const WeylGroup& W = group;
  DescentScanReport report;
  report.system = W.roots().name();
  report.simply_laced = W.roots().simply_laced();
  W.leq(0, 0);  // build the shared Bruhat table before fanning out

  std::vector<std::vector<ElementIndex>> failing(W.size());
  std::vector<std::size_t> counts(W.size(), 0);
  parallel_for(W.size(), workers, [&](int, std::size_t vi) {
    auto v = static_cast<ElementIndex>(vi);
    for (ElementIndex u = 0; u < v; ++u) {
      if (!W.leq(u, v)) continue;
      ++counts[v];
      bool found = false;
      for (int s = 0; s < W.rank() && !found; ++s) {
        if (!W.is_left_descent(s, v)) continue;
        if (!W.is_left_descent(s, u)) found = true;
        else if (!W.leq(u, W.lmul(s, v))) found = true;
      }
      if (!found) failing[v].push_back(u);
    }
  });

  KLTable kl(W);
  for (ElementIndex v = 0; v < W.size(); ++v) {
    report.pairs += counts[v];
    for (ElementIndex u : failing[v]) {
      const LaurentQ& q = kl.Q(u, v);
      if (q.is_one()) ++report.failing_with_q_one;
      report.failures.push_back({u, v, q});
    }
  }
  return report;
}

namespace {

struct AdTriple {
  ElementIndex u, v, t;
  RootVec beta;
};

template <ScalarField Field>
void ad_evaluate(const WeylGroup& W, const Field& F, const std::vector<AdTriple>& triples, std::vector<char>& r_ok,
                 std::vector<char>& m_ok) {
  CassTable<Field> T(W, F);
  auto q = F.q_pow(1);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& [u, v, t, beta] = triples[i];
    ElementIndex tu = W.mul(t, u), tv = W.mul(t, v);
    auto pole = F.inv_one_minus_z(beta);
    auto r_rhs = q * T.r(tu, tv) + (F.one() - q) * F.z_pow(beta) * pole * T.r(u, tv);
    if (!F.equal(T.r(u, v), r_rhs)) r_ok[i] = 0;
    auto m_rhs = (F.one() - q * F.z_pow(beta)) * pole * F.bar(T.m(u, tv));
    if (!F.equal(F.bar(T.m(u, v)), m_rhs)) m_ok[i] = 0;
  }
}

// Runs eval(field, r_ok, m_ok) symbolically or at every modular sample; an
// entry stays true only if it holds everywhere.
template <class Eval>
void evaluate_everywhere(const WeylGroup& W, const RunOptions& options, std::size_t n, std::vector<char>& a,
                         std::vector<char>& b, Eval eval) {
  a.assign(n, 1);
  b.assign(n, 1);
  if (options.backend == Backend::Symbolic) {
    eval(SymbolicField{}, a, b);
    return;
  }
  std::vector<std::vector<char>> sa(static_cast<std::size_t>(options.samples), std::vector<char>(n, 1));
  std::vector<std::vector<char>> sb = sa;
  parallel_for(sa.size(), options.workers, [&](int, std::size_t i) {
    ModCtx ctx = ModCtx::sample(W.roots(), options.prime, options.seed, i);
    eval(ModularField(ctx), sa[i], sb[i]);
  });
  for (std::size_t i = 0; i < sa.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = a[k] && sa[i][k];
      b[k] = b[k] && sb[i][k];
    }
  }
}

}  // namespace

AdScanReport ad_recursion_scan(const WeylGroup& group, const RunOptions& options, bool only_pq_one) {
  const WeylGroup& W = group;
  if (!W.roots().simply_laced()) throw NotSimplyLaced("ad-recursion scan needs a simply-laced root system");
  AdScanReport report;
  report.system = W.roots().name();
  report.backend = options.backend;
  report.only_pq_one = only_pq_one;

  KLTable kl(W);
  std::vector<AdTriple> triples;
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = u + 1; v < W.size(); ++v) {
      if (!W.leq(u, v)) continue;
      if (only_pq_one && !(kl.P(u, v).is_one() && kl.Q(u, v).is_one())) continue;
      for (int p : W.ad_min(u, v).minimal) {
        RootVec beta = -W.act(W.inverse(v), W.roots().root(p));
        triples.push_back({u, v, W.reflection(p), beta});
      }
    }
  }
  report.triples = triples.size();

  std::vector<char> r_ok, m_ok;
  evaluate_everywhere(W, options, triples.size(), r_ok, m_ok,
                      [&](const auto& field, std::vector<char>& a, std::vector<char>& b) {
                        ad_evaluate(W, field, triples, a, b);
                      });
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!r_ok[i]) ++report.r_failures;
    if (!m_ok[i]) ++report.m_failures;
    if (r_ok[i] && m_ok[i]) continue;
    const auto& tr = triples[i];
    report.failures.push_back({tr.u, tr.v, tr.t, r_ok[i] != 0, m_ok[i] != 0, kl.P(tr.u, tr.v), kl.Q(tr.u, tr.v)});
  }
  return report;
}

ProductScanReport product_formula_scan(const WeylGroup& group, const RunOptions& options) {
  const WeylGroup& W = group;
  ProductScanReport report;
  report.system = W.roots().name();
  report.backend = options.backend;
  report.simply_laced = W.roots().simply_laced();

  KLTable kl(W);
  std::vector<std::pair<ElementIndex, ElementIndex>> q_pairs, p_pairs;
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = u + 1; v < W.size(); ++v) {
      if (!W.leq(u, v)) continue;
      if (kl.Q(u, v).is_one()) q_pairs.emplace_back(u, v);
      if (kl.P(u, v).is_one()) p_pairs.emplace_back(u, v);
    }
  }
  report.q_one_pairs = q_pairs.size();
  report.p_one_pairs = p_pairs.size();

  std::vector<char> q_ok, p_ok;
  std::size_t n = std::max(q_pairs.size(), p_pairs.size());
  evaluate_everywhere(W, options, n, q_ok, p_ok, [&](const auto& F, std::vector<char>& a, std::vector<char>& b) {
    CassTable<std::decay_t<decltype(F)>> T(W, F);
    const RootSystem& rs = W.roots();
    for (std::size_t i = 0; i < q_pairs.size(); ++i) {
      auto [u, v] = q_pairs[i];
      if (!F.equal(T.m(u, v), gk_product(F, root_vectors(rs, W.s_set(u, v))))) a[i] = 0;
    }
    for (std::size_t i = 0; i < p_pairs.size(); ++i) {
      auto [u, v] = p_pairs[i];
      auto want = gk_product(F, root_vectors(rs, W.s_prime_set(u, v)), true, W.length(v) - W.length(u));
      if (!F.equal(T.m_prime(u, v), want)) b[i] = 0;
    }
  });
  for (std::size_t i = 0; i < q_pairs.size(); ++i) {
    if (!q_ok[i]) report.violations.push_back({q_pairs[i].first, q_pairs[i].second, false});
  }
  for (std::size_t i = 0; i < p_pairs.size(); ++i) {
    if (!p_ok[i]) report.violations.push_back({p_pairs[i].first, p_pairs[i].second, true});
  }
  return report;
}

}  // namespace casselman
