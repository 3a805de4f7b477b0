#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "casselman/modular.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

enum class Backend { Symbolic, Modular };

Backend parse_backend(std::string_view s);
std::string backend_name(Backend b);

// Settings shared by suites and scans that can run in either backend.
struct RunOptions {
  Backend backend = Backend::Symbolic;
  std::uint64_t prime = kDefaultPrime;
  int samples = kDefaultSamples;
  std::uint64_t seed = 1;
  int workers = 1;
};

enum class Suite {
  Combinatorics,   // Moebius function, lifting property, |S|, |S'| bounds
  FeQ1,            // functional equation when Q = 1
  FullInversion,   // inversion with c, the Q/m relation, KL inversion identities
  Duality,         // r and m duality under w -> w0 w
  Limits,          // z -> infinity limits of r and r'
  Oracle,          // Hecke-algebra oracle for m and the mu_z expansion
  HeckeLemmas,     // Lambda, T inverses, mu cocycle, bar lemma
  Transforms,      // r <-> m, bar-sign relation, m'/r' transforms, r' routes
  All,
};

Suite parse_suite(std::string_view s);
std::string suite_name(Suite s);
// Suites a selector expands to (All expands to every concrete suite).
std::vector<Suite> expand_suite(Suite s);

struct CheckFailure {
  std::string identity;
  ElementIndex u = 0;
  ElementIndex v = 0;
  int sample = -1;  // -1 for symbolic or backend-independent checks
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string system;
  Backend backend = Backend::Symbolic;
  int samples = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> checks;  // identity -> instances checked
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  std::size_t total_checks() const;
};

// Runs one concrete suite (not All) exhaustively over the group.
// Symbolic runs are exact. Modular runs repeat every backend-dependent
// identity at `samples` independent points; a true identity never fails, and
// a false one survives all samples with probability at most (d/p)^samples for
// total degree d. Limits need exact arithmetic and always run symbolically.
SuiteReport run_suite(const WeylGroup& group, Suite suite, const RunOptions& options);

}  // namespace casselman
