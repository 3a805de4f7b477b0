#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "casselman/casselman.hpp"
#include "casselman/errors.hpp"
#include "casselman/klpoly.hpp"
#include "casselman/parallel.hpp"
#include "casselman/reproduce.hpp"
#include "casselman/scans.hpp"
#include "casselman/serialize.hpp"
#include "casselman/verify.hpp"
#include "casselman/weyl.hpp"

namespace casselman::cli {

namespace {

// Thrown for configurations that parse but cannot run.
class UsageError : public Error {
 public:
  using Error::Error;
};

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json header(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

json pair_json(const WeylGroup& W, ElementIndex u, ElementIndex v) {
  return json::array({element_json(W, u), element_json(W, v)});
}

std::vector<std::pair<ElementIndex, ElementIndex>> comparable_pairs(const WeylGroup& W) {
  std::vector<std::pair<ElementIndex, ElementIndex>> pairs;
  for (ElementIndex u = 0; u < W.size(); ++u) {
    for (ElementIndex v = u; v < W.size(); ++v) {
      if (W.leq(u, v)) pairs.emplace_back(u, v);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return std::tuple(W.length(a.first), W.length(a.second), a.first, a.second) <
           std::tuple(W.length(b.first), W.length(b.second), b.first, b.second);
  });
  return pairs;
}

// One table entry rendered three ways.
struct Cell {
  json value;
  std::string text;
  std::string tex;
};

std::string matrix_tex_name(const std::string& m) {
  if (m == "rp") return "r'_{u,v}";
  if (m == "mp") return "m'_{u,v}";
  return m + "_{u,v}";
}

std::string canonical_matrix(const std::string& m) {
  if (m == "r'") return "rp";
  if (m == "m'") return "mp";
  return m;
}

std::function<Cell(ElementIndex, ElementIndex)> cell_source(const WeylGroup& W, const std::string& matrix) {
  int rank = W.rank();
  if (matrix == "R" || matrix == "P" || matrix == "Q" || matrix == "c") {
    auto kl = std::make_shared<KLTable>(W);
    return [kl, matrix](ElementIndex u, ElementIndex v) {
      const LaurentQ& p = matrix == "R" ? kl->R(u, v) : matrix == "P" ? kl->P(u, v) : matrix == "Q" ? kl->Q(u, v)
                                                                                                      : kl->c(u, v);
      return Cell{to_json(p), p.to_string(), latex(p)};
    };
  }
  auto table = std::make_shared<CassTable<SymbolicField>>(W, SymbolicField{});
  return [table, matrix, rank](ElementIndex u, ElementIndex v) {
    const RatFn& f = matrix == "r"    ? table->r(u, v)
                     : matrix == "rp" ? table->r_prime(u, v)
                     : matrix == "m"  ? table->m(u, v)
                                      : table->m_prime(u, v);
    return Cell{to_json(f, rank), f.to_string(rank), latex(f, rank)};
  };
}

constexpr const char* kLatexPreamble =
    "\\documentclass{article}\n"
    "\\usepackage[margin=1.5cm,landscape]{geometry}\n"
    "\\usepackage{amsmath,amssymb,longtable}\n"
    "\\begin{document}\n";

int run_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.run.backend != Backend::Symbolic) throw UsageError("table output is exact; use --backend symbolic");
  WeylGroup W(build_root_system(cfg.type, cfg.rank));
  std::string matrix = canonical_matrix(cfg.matrix);
  auto source = cell_source(W, matrix);
  auto pairs = comparable_pairs(W);

  if (cfg.format == "json") {
    json doc = header("table");
    doc["system"] = W.roots().name();
    doc["matrix"] = matrix;
    json entries = json::array();
    for (auto [u, v] : pairs) {
      Cell c = source(u, v);
      entries.push_back({{"u", element_json(W, u)}, {"v", element_json(W, v)}, {"value", c.value}, {"text", c.text}});
    }
    doc["count"] = entries.size();
    doc["entries"] = std::move(entries);
    write_json(out, doc);
  } else if (cfg.format == "csv") {
    out << "u,v," << matrix << '\n';
    for (auto [u, v] : pairs) {
      out << W.element(u).to_string() << ',' << W.element(v).to_string() << ',' << csv_field(source(u, v).text)
          << '\n';
    }
  } else {
    out << kLatexPreamble << "\\begin{longtable}{lll}\n$u$ & $v$ & $" << matrix_tex_name(matrix)
        << "$ \\\\\n\\hline\n\\endhead\n";
    for (auto [u, v] : pairs) {
      out << '$' << latex_element(W, u) << "$ & $" << latex_element(W, v) << "$ & $" << source(u, v).tex
          << "$ \\\\\n";
    }
    out << "\\end{longtable}\n\\end{document}\n";
  }
  return kPass;
}

void require_json(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError(cfg.command + " reports are JSON only");
}

json run_options_json(const RunOptions& o) {
  json j = {{"backend", backend_name(o.backend)}};
  if (o.backend == Backend::Modular) {
    j["prime"] = o.prime;
    j["samples"] = o.samples;
    j["seed"] = o.seed;
  }
  return j;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  WeylGroup W(build_root_system(cfg.type, cfg.rank));
  json doc = header("verify");
  doc["system"] = W.roots().name();
  doc["options"] = run_options_json(cfg.run);
  json suites = json::array();
  bool passed = true;
  for (Suite s : expand_suite(parse_suite(cfg.suite))) {
    SuiteReport r = run_suite(W, s, cfg.run);
    json failures = json::array();
    for (const auto& f : r.failures) {
      json jf = {{"identity", f.identity}, {"pair", pair_json(W, f.u, f.v)}, {"detail", f.detail}};
      if (f.sample >= 0) jf["sample"] = f.sample;
      failures.push_back(std::move(jf));
    }
    passed = passed && r.passed();
    suites.push_back({{"suite", r.suite},
                      {"backend", backend_name(r.backend)},
                      {"passed", r.passed()},
                      {"checks", r.checks},
                      {"total_checks", r.total_checks()},
                      {"failures", std::move(failures)}});
  }
  doc["passed"] = passed;
  doc["suites"] = std::move(suites);
  write_json(out, doc);
  return passed ? kPass : kIdentityFailure;
}

json poly_witness(const LaurentQ& p) { return {{"value", to_json(p)}, {"text", p.to_string()}}; }

int run_scan(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  if (cfg.conjecture.empty()) throw UsageError("scan needs --conjecture");
  Conjecture which = parse_conjecture(cfg.conjecture);
  WeylGroup W(build_root_system(cfg.type, cfg.rank));
  json doc = header("scan");
  doc["system"] = W.roots().name();
  doc["conjecture"] = conjecture_name(which);
  json items = json::array();
  switch (which) {
    case Conjecture::Poles: {
      PoleScanReport r = pole_scan(W);
      doc["options"] = run_options_json(RunOptions{});
      doc["pairs"] = r.pairs;
      doc["max_multiplicity"] = r.max_multiplicity;
      for (const auto& v : r.violations) {
        std::vector<int> s;
        for (int p : W.s_set(v.u, v.v)) s.push_back(p);
        json factors = json::array();
        for (int p : s) factors.push_back(W.roots().root(p).to_vector(W.rank()));
        items.push_back({{"pair", pair_json(W, v.u, v.v)},
                         {"status", "violation"},
                         {"witnesses", {{"r", v.r}, {"m", v.m}, {"factors", factors}}}});
      }
      doc["violations"] = items.size();
      break;
    }
    case Conjecture::Descent: {
      DescentScanReport r = descent_scan(W, cfg.run.workers);
      doc["simply_laced"] = r.simply_laced;
      doc["pairs"] = r.pairs;
      doc["failing"] = r.failures.size();
      doc["failing_with_q_one"] = r.failing_with_q_one;
      for (const auto& f : r.failures) {
        items.push_back({{"pair", pair_json(W, f.u, f.v)},
                         {"status", f.Q.is_one() ? "fails-with-q-one" : "fails"},
                         {"witnesses", {{"Q", poly_witness(f.Q)}}}});
      }
      break;
    }
    case Conjecture::AdRecursion: {
      AdScanReport r = ad_recursion_scan(W, cfg.run, cfg.only_pq_one);
      doc["options"] = run_options_json(cfg.run);
      doc["only_pq_one"] = r.only_pq_one;
      doc["triples"] = r.triples;
      doc["failing"] = r.failures.size();
      doc["r_failures"] = r.r_failures;
      doc["m_failures"] = r.m_failures;
      for (const auto& f : r.failures) {
        items.push_back({{"pair", pair_json(W, f.u, f.v)},
                         {"t", element_json(W, f.t)},
                         {"status", std::string(f.r_holds ? "" : "r-fails") +
                                        (f.r_holds || f.m_holds ? "" : ",") + (f.m_holds ? "" : "m-fails")},
                         {"witnesses", {{"P", poly_witness(f.P)}, {"Q", poly_witness(f.Q)}}}});
      }
      break;
    }
    case Conjecture::ProductFormula: {
      ProductScanReport r = product_formula_scan(W, cfg.run);
      doc["options"] = run_options_json(cfg.run);
      doc["simply_laced"] = r.simply_laced;
      doc["q_one_pairs"] = r.q_one_pairs;
      doc["p_one_pairs"] = r.p_one_pairs;
      doc["violations"] = r.violations.size();
      for (const auto& v : r.violations) {
        auto set = v.primed ? W.s_prime_set(v.u, v.v) : W.s_set(v.u, v.v);
        json factors = json::array();
        for (int p : set) factors.push_back(W.roots().root(p).to_vector(W.rank()));
        items.push_back({{"pair", pair_json(W, v.u, v.v)},
                         {"status", v.primed ? "m-prime-violation" : "m-violation"},
                         {"witnesses", {{"factors", factors}}}});
      }
      break;
    }
  }
  doc["items"] = std::move(items);
  write_json(out, doc);
  return kPass;
}

json figure_rows_json(const WeylGroup& W, const std::vector<FigureRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back({{"u", element_json(W, r.u)},
                 {"v", element_json(W, r.v)},
                 {"c", poly_witness(r.c)},
                 {"precedes", r.precedes}});
  }
  return a;
}

json ad_rows_json(const WeylGroup& W, const std::vector<AdTableRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back({{"u", element_json(W, r.u)},
                 {"v", element_json(W, r.v)},
                 {"t", element_json(W, r.t)},
                 {"P", poly_witness(r.P)},
                 {"Q", poly_witness(r.Q)}});
  }
  return a;
}

void emit_figure1(const RunConfig& cfg, const WeylGroup& W, const Figure1Report& r, std::ostream& out) {
  if (cfg.format == "json") {
    json doc = header("reproduce");
    doc["target"] = "figure1";
    doc["system"] = r.system;
    doc["comparable_pairs"] = r.comparable_pairs;
    doc["nonzero"] = r.rows.size();
    doc["precedes"] = r.precedes_count;
    doc["matches_reference"] = r.matches_reference;
    doc["rows"] = figure_rows_json(W, r.rows);
    doc["reference_view"] = figure_rows_json(W, r.reference_view);
    doc["notes"] = r.notes;
    write_json(out, doc);
  } else if (cfg.format == "csv") {
    out << "u,v,c,precedes\n";
    for (const auto& row : r.rows) {
      out << W.element(row.u).to_string() << ',' << W.element(row.v).to_string() << ',' << csv_field(row.c.to_string())
          << ',' << (row.precedes ? 1 : 0) << '\n';
    }
  } else {
    // Two side-by-side column groups, filled left column first.
    std::size_t half = (r.rows.size() + 1) / 2;
    auto cells = [&](std::size_t i) {
      if (i >= r.rows.size()) return std::string(" & & &");
      const auto& row = r.rows[i];
      return "$" + latex_element(W, row.u) + "$ & $" + latex_element(W, row.v) + "$ & $" + latex(row.c) + "$ & " +
             (row.precedes ? "$\\checkmark$" : "");
    };
    out << kLatexPreamble << "\\begin{longtable}{llll|llll}\n"
        << "$u$ & $v$ & $c_{u,v}$ & $\\prec$ & $u$ & $v$ & $c_{u,v}$ & $\\prec$ \\\\\n\\hline\n\\endhead\n";
    for (std::size_t i = 0; i < half; ++i) out << cells(i) << " & " << cells(i + half) << " \\\\\n";
    out << "\\end{longtable}\n\\end{document}\n";
  }
}

void emit_adtable(const RunConfig& cfg, const WeylGroup& W, const AdTableReport& r, std::ostream& out) {
  if (cfg.format == "json") {
    json doc = header("reproduce");
    doc["target"] = "a3-adtable";
    doc["system"] = r.system;
    doc["count"] = r.rows.size();
    doc["matches_reference"] = r.matches_reference;
    doc["rows"] = ad_rows_json(W, r.rows);
    doc["reference_view"] = ad_rows_json(W, r.reference_view);
    doc["notes"] = r.notes;
    write_json(out, doc);
  } else if (cfg.format == "csv") {
    out << "u,v,t,P,Q\n";
    for (const auto& row : r.rows) {
      out << W.element(row.u).to_string() << ',' << W.element(row.v).to_string() << ','
          << W.element(row.t).to_string() << ',' << csv_field(row.P.to_string()) << ',' << csv_field(row.Q.to_string())
          << '\n';
    }
  } else {
    out << kLatexPreamble << "\\begin{tabular}{|l|l|l|l|l|}\n\\hline\n"
        << "$u$ & $v$ & $t$ & $P_{u,v}$ & $Q_{u,v}$ \\\\\n\\hline\n";
    for (const auto& row : r.rows) {
      out << '$' << latex_element(W, row.u) << "$ & $" << latex_element(W, row.v) << "$ & $"
          << latex_element(W, row.t) << "$ & $" << latex(row.P) << "$ & $" << latex(row.Q) << "$ \\\\\n\\hline\n";
    }
    out << "\\end{tabular}\n\\end{document}\n";
  }
}

int run_reproduce(const RunConfig& cfg, std::ostream& out) {
  if (cfg.target == "figure1") {
    WeylGroup W(build_root_system("A", 4));
    emit_figure1(cfg, W, reproduce_figure1(W), out);
  } else if (cfg.target == "a3-adtable") {
    WeylGroup W(build_root_system("A", 3));
    emit_adtable(cfg, W, reproduce_a3_adtable(W), out);
  } else {
    throw UsageError("reproduce needs --target figure1 or a3-adtable");
  }
  return kPass;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "table") return run_table(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, out);
    if (cfg.command == "scan") return run_scan(cfg, out);
    if (cfg.command == "reproduce") return run_reproduce(cfg, out);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotSimplyLaced& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.run.workers = worker_count();
  std::string backend = "symbolic";

  CLI::App app{"Deformed Kazhdan-Lusztig R-polynomials and Casselman matrices for finite Weyl groups", "casselman"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type (A, B, C, D, F, G)");
    sub->add_option("--rank", cfg.rank, "Rank")->check(CLI::Range(1, kMaxRank));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
    sub->add_option("--output,-o", cfg.output, "Output path (default: standard output)");
  };
  auto add_backend = [&](CLI::App* sub) {
    sub->add_option("--backend", backend, "Arithmetic backend")->check(CLI::IsMember({"symbolic", "modular"}));
    sub->add_option("--prime", cfg.run.prime, "Modulus for the modular backend");
    sub->add_option("--samples", cfg.run.samples, "Independent sample points per identity")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.run.seed, "Seed for sample points");
  };

  auto* table = app.add_subcommand("table", "Emit one matrix over all comparable pairs");
  add_common(table);
  add_backend(table);
  table->add_option("--matrix", cfg.matrix, "r, rp (r'), m, mp (m'), R, P, Q or c")
      ->check(CLI::IsMember({"r", "rp", "r'", "m", "mp", "m'", "R", "P", "Q", "c"}));

  auto* verify = app.add_subcommand("verify", "Check an identity suite exhaustively");
  add_common(verify);
  add_backend(verify);
  verify->add_option("--suite", cfg.suite,
                     "all, combinatorics, fe-q1, full-inversion, duality, limits, oracle, hecke-lemmas, transforms");

  auto* scan = app.add_subcommand("scan", "Run a conjecture scan (report only)");
  add_common(scan);
  add_backend(scan);
  scan->add_option("--conjecture", cfg.conjecture, "poles, descent, ad-recursion or product-formula")->required();
  scan->add_flag("--only-pq-one", cfg.only_pq_one, "ad-recursion: restrict to pairs with P = Q = 1");

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a published table");
  add_common(reproduce);
  reproduce->add_option("--target", cfg.target, "figure1 or a3-adtable")
      ->required()
      ->check(CLI::IsMember({"figure1", "a3-adtable"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kPass : kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    cfg.run.backend = parse_backend(backend);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.output.empty()) return execute(cfg, out, err);
  std::ostringstream buffer;
  int code = execute(cfg, buffer, err);
  if (code == kUsage || code == kInternal) return code;
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << cfg.output << '\n';
    return kUsage;
  }
  file << buffer.str();
  return code;
}

}  // namespace casselman::cli
