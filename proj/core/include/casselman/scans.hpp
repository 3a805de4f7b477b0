#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casselman/laurent.hpp"
#include "casselman/verify.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

enum class Conjecture { Poles, Descent, AdRecursion, ProductFormula };

Conjecture parse_conjecture(std::string_view s);
std::string conjecture_name(Conjecture c);

struct PoleViolation {
  ElementIndex u = 0;
  ElementIndex v = 0;
  std::string r;
  std::string m;
};

// For every u <= v: after reduction the denominators of r_{u,v} and m_{u,v}
// use only roots of S(u,v), each at most once. Always symbolic.
struct PoleScanReport {
  std::string system;
  std::size_t pairs = 0;
  int max_multiplicity = 0;
  std::vector<PoleViolation> violations;
};

PoleScanReport pole_scan(const WeylGroup& group);

struct DescentFailure {
  ElementIndex u = 0;
  ElementIndex v = 0;
  LaurentQ Q;
};

// For every u < v: is there a left descent s of v with su > u, or with
// su < u and u not <= sv? Failures record Q_{u,v}.
struct DescentScanReport {
  std::string system;
  bool simply_laced = true;
  std::size_t pairs = 0;
  std::vector<DescentFailure> failures;
  std::size_t failing_with_q_one = 0;
};

DescentScanReport descent_scan(const WeylGroup& group, int workers = 1);

struct AdFailure {
  ElementIndex u = 0;
  ElementIndex v = 0;
  ElementIndex t = 0;
  bool r_holds = false;
  bool m_holds = false;
  LaurentQ P;
  LaurentQ Q;
};

// For every u < v and every minimal t = r_alpha in AD(u,v), beta = -v^{-1} alpha:
//   r_{u,v} = q r_{tu,tv} + (1-q) z^beta/(1-z^beta) r_{u,tv}
//   bar m_{u,v} = (1 - q z^beta)/(1 - z^beta) bar m_{u,tv}
// A triple fails when either identity fails.
struct AdScanReport {
  std::string system;
  Backend backend = Backend::Symbolic;
  bool only_pq_one = false;
  std::size_t triples = 0;
  std::vector<AdFailure> failures;
  std::size_t r_failures = 0;
  std::size_t m_failures = 0;
};

AdScanReport ad_recursion_scan(const WeylGroup& group, const RunOptions& options, bool only_pq_one = false);

struct ProductViolation {
  ElementIndex u = 0;
  ElementIndex v = 0;
  bool primed = false;  // false: m with Q = 1; true: m' with P = 1
};

// Q_{u,v} = 1  =>  m_{u,v} = prod_{S(u,v)} (1 - q^{-1} z^a)/(1 - z^a)
// P_{u,v} = 1  =>  m'_{u,v} = (-1)^{l(v)-l(u)} prod_{S'(u,v)} (same factor)
struct ProductScanReport {
  std::string system;
  Backend backend = Backend::Symbolic;
  bool simply_laced = true;
  std::size_t q_one_pairs = 0;
  std::size_t p_one_pairs = 0;
  std::vector<ProductViolation> violations;
};

ProductScanReport product_formula_scan(const WeylGroup& group, const RunOptions& options);

}  // namespace casselman
