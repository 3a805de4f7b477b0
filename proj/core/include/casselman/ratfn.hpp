#pragma once

#include <span>
#include <string>
#include <vector>

#include "casselman/laurent.hpp"

namespace casselman {

// One denominator factor (1 - z^root)^mult. root is always a positive root
// (nonnegative coordinates).
struct DenFactor {
  RootVec root;
  int mult = 1;
  auto operator<=>(const DenFactor&) const = default;
  bool operator==(const DenFactor&) const = default;
};

// Rational function in q and z: a Laurent numerator over a product of
// binomials (1 - z^beta)^m with beta positive. Never expands the denominator.
//
// Every arithmetic result is reduced: no denominator factor divides the
// numerator. Because the binomials for distinct positive roots are coprime
// irreducibles, a reduced RatFn is a canonical form.
class RatFn {
 public:
  RatFn() = default;
  RatFn(std::int64_t c) : num_(c) {}  // NOLINT(implicit)
  RatFn(QZLaurent num) : num_(std::move(num)) {}  // NOLINT(implicit)
  RatFn(QZLaurent num, std::vector<DenFactor> den);  // reduces

  static RatFn from_q(const LaurentQ& p) { return RatFn(QZLaurent::from_q(p)); }
  static RatFn q_pow(int k) { return RatFn(QZLaurent::monomial(k, {})); }
  static RatFn z_pow(const RootVec& lambda) { return RatFn(QZLaurent::monomial(0, lambda)); }
  // 1/(1 - z^gamma) for gamma = +-(positive root); negative gamma is
  // rewritten as -z^{-gamma}/(1 - z^{-gamma}).
  static RatFn inv_one_minus_z(const RootVec& gamma);

  const QZLaurent& num() const { return num_; }
  std::span<const DenFactor> den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Pure Laurent polynomial in q (no z, no denominator).
  bool is_q_only() const;
  LaurentQ to_q() const;  // requires is_q_only()

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

  // q -> q^{-1}, z fixed.
  RatFn bar() const;
  // z -> z^{-1}; each factor 1/(1-z^{-beta}) becomes -z^beta/(1-z^beta).
  RatFn invert_z() const;
  // Removes every denominator factor that exactly divides the numerator.
  RatFn reduce() const;

  // Limit as z^alpha -> infinity for all positive alpha, taken along
  // z^lambda = t^{<weights, lambda>}; the default weights give the height.
  // Throws NoLimit when the t-degree of the numerator exceeds the denominator's.
  LaurentQ limit_z_infinity(std::span<const int> weights = {}) const;

  // Equality of the represented functions (cross-multiplied numerators).
  bool equals(const RatFn& o) const;
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.equals(b); }

  std::string to_string(int rank) const;

 private:
  void reduce_in_place();

  QZLaurent num_;
  std::vector<DenFactor> den_;  // sorted by root
};

}  // namespace casselman
