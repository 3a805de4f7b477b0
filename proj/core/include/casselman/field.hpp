#pragma once

#include <concepts>
#include <string>

#include "casselman/modular.hpp"
#include "casselman/ratfn.hpp"

namespace casselman {

// Scalar backends for the generic recursions. A backend supplies the ring
// constants the recursions need (q^k, z^lambda, 1/(1 - z^gamma)) plus the two
// involutions; values themselves carry + - * and equality.
template <class F>
concept ScalarField = requires(const F& f, const typename F::value_type& a, const RootVec& v,
                               const LaurentQ& p) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.constant(1) } -> std::same_as<typename F::value_type>;
  { f.q_pow(1) } -> std::same_as<typename F::value_type>;
  { f.z_pow(v) } -> std::same_as<typename F::value_type>;
  { f.inv_one_minus_z(v) } -> std::same_as<typename F::value_type>;
  { f.from_q(p) } -> std::same_as<typename F::value_type>;
  { f.bar(a) } -> std::same_as<typename F::value_type>;
  { f.invert_z(a) } -> std::same_as<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a - a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
};

// Exact backend over RatFn.
struct SymbolicField {
  using value_type = RatFn;
  static constexpr bool kSymbolic = true;

  RatFn zero() const { return {}; }
  RatFn one() const { return RatFn(1); }
  RatFn constant(std::int64_t c) const { return RatFn(c); }
  RatFn q_pow(int k) const { return RatFn::q_pow(k); }
  RatFn z_pow(const RootVec& v) const { return RatFn::z_pow(v); }
  RatFn inv_one_minus_z(const RootVec& v) const { return RatFn::inv_one_minus_z(v); }
  RatFn from_q(const LaurentQ& p) const { return RatFn::from_q(p); }
  RatFn bar(const RatFn& a) const { return a.bar(); }
  RatFn invert_z(const RatFn& a) const { return a.invert_z(); }
  bool is_zero(const RatFn& a) const { return a.is_zero(); }
  bool equal(const RatFn& a, const RatFn& b) const { return a.equals(b); }
  std::string describe() const { return "symbolic"; }
};

// Evaluation backend over F_p at one ModCtx sample.
class ModularField {
 public:
  using value_type = ModVal;
  static constexpr bool kSymbolic = false;

  explicit ModularField(const ModCtx& ctx) : ctx_(&ctx) {}

  ModVal zero() const { return ctx_->constant(0); }
  ModVal one() const { return ctx_->constant(1); }
  ModVal constant(std::int64_t c) const { return ctx_->constant(c); }
  ModVal q_pow(int k) const { return ctx_->q_pow(k); }
  ModVal z_pow(const RootVec& v) const { return ctx_->z_pow(v); }
  ModVal inv_one_minus_z(const RootVec& v) const { return ctx_->inv_one_minus_z(v); }
  ModVal from_q(const LaurentQ& p) const { return ctx_->eval(p); }
  ModVal from_ratfn(const RatFn& f) const { return ctx_->eval(f); }
  ModVal bar(const ModVal& a) const { return a.bar(); }
  ModVal invert_z(const ModVal& a) const { return a.invert_z(); }
  bool is_zero(const ModVal& a) const { return a.is_zero(); }
  bool equal(const ModVal& a, const ModVal& b) const { return a == b; }
  const ModCtx& ctx() const { return *ctx_; }
  std::string describe() const { return "modular"; }

 private:
  const ModCtx* ctx_;
};

static_assert(ScalarField<SymbolicField>);
static_assert(ScalarField<ModularField>);

}  // namespace casselman
