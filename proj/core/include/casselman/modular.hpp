#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "casselman/ratfn.hpp"

namespace casselman {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;
inline constexpr int kDefaultSamples = 20;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);  // throws BadSample on 0
bool is_prime(std::uint64_t n);

// A value evaluated at four linked points:
//   0: (q, z)   1: (q^-1, z)   2: (q, z^-1)   3: (q^-1, z^-1)
// so that bar (q -> q^-1) and invert_z (z -> z^-1) are coordinate swaps and
// every operation stays a ring homomorphism.
class ModVal {
 public:
  ModVal() = default;
  ModVal(std::array<std::uint64_t, 4> v, std::uint64_t p) : v_(v), p_(p) {}
  static ModVal constant(std::int64_t c, std::uint64_t p);

  std::uint64_t at(int point) const { return v_[static_cast<std::size_t>(point)]; }
  std::uint64_t value() const { return v_[0]; }
  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == std::array<std::uint64_t, 4>{}; }

  ModVal operator-() const;
  friend ModVal operator+(const ModVal& a, const ModVal& b);
  friend ModVal operator-(const ModVal& a, const ModVal& b) { return a + (-b); }
  friend ModVal operator*(const ModVal& a, const ModVal& b);
  ModVal& operator+=(const ModVal& o) { return *this = *this + o; }
  ModVal& operator-=(const ModVal& o) { return *this = *this - o; }
  ModVal& operator*=(const ModVal& o) { return *this = *this * o; }
  ModVal inverse() const;  // throws BadSample if any coordinate is 0

  ModVal bar() const { return {{v_[1], v_[0], v_[3], v_[2]}, p_}; }
  ModVal invert_z() const { return {{v_[2], v_[3], v_[0], v_[1]}, p_}; }

  friend bool operator==(const ModVal& a, const ModVal& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  std::array<std::uint64_t, 4> v_{};
  std::uint64_t p_ = 0;
};

// Sample point for Schwartz-Zippel identity testing: a prime and values of q
// and z_1..z_n in F_p^*, chosen so that 1 - z^beta != 0 for every positive
// root beta (resampled otherwise) and q != 0, +-1.
class ModCtx {
 public:
  ModCtx(const RootSystem& rs, std::uint64_t prime, std::uint64_t q, std::vector<std::uint64_t> z);
  // Deterministic in (seed, sample_index).
  static ModCtx sample(const RootSystem& rs, std::uint64_t prime, std::uint64_t seed,
                       std::uint64_t sample_index);

  std::uint64_t prime() const { return p_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint64_t>& z() const { return z_; }

  ModVal constant(std::int64_t c) const { return ModVal::constant(c, p_); }
  ModVal q_pow(int k) const;
  ModVal z_pow(const RootVec& lambda) const;
  ModVal inv_one_minus_z(const RootVec& gamma) const;
  ModVal eval(const LaurentQ& f) const;
  ModVal eval(const QZLaurent& f) const;
  ModVal eval(const RatFn& f) const;  // throws BadSample if the denominator vanishes
  // eval_mod: residue at the primary point (q, z).
  std::uint64_t eval_mod(const RatFn& f) const { return eval(f).value(); }

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  std::uint64_t q_inv_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint64_t> z_inv_;
  int rank_;
};

}  // namespace casselman
