#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "casselman/weyl.hpp"

namespace casselman {

// Checked 64-bit coefficient arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Laurent polynomial in q with integer coefficients. Used for the classical
// R, P, Q polynomials and for c_{u,v}.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(std::int64_t c) { if (c != 0) { coeffs_ = {c}; } }  // NOLINT(implicit)
  static LaurentQ monomial(int exp, std::int64_t coeff = 1);
  // Coefficient map {exponent: coefficient}.
  static LaurentQ from_map(const std::map<int, std::int64_t>& m);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }
  int low_degree() const { return low_; }
  // Highest exponent; undefined for zero.
  int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exp) const;
  std::map<int, std::int64_t> to_map() const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  LaurentQ shifted(int k) const;  // times q^k
  // q -> q^{-1}.
  LaurentQ bar() const;
  // Terms of degree <= d.
  LaurentQ truncated_above(int d) const;

  bool operator==(const LaurentQ&) const = default;

  // e.g. "q^-1 - q^-2", "1 + q", "0".
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;  // coeffs_[k] is the coefficient of q^{low_+k}
};

// Monomial q^a z^lambda.
struct QZMonomial {
  int q = 0;
  RootVec z;
  auto operator<=>(const QZMonomial&) const = default;
  bool operator==(const QZMonomial&) const = default;
};

struct QZTerm {
  QZMonomial mono;
  std::int64_t coeff = 0;
  bool operator==(const QZTerm&) const = default;
};

// Laurent polynomial in q and z_1..z_n with integer coefficients, stored as a
// sorted list of nonzero terms.
class QZLaurent {
 public:
  QZLaurent() = default;
  QZLaurent(std::int64_t c);  // NOLINT(implicit)
  static QZLaurent monomial(int q_exp, const RootVec& z_exp, std::int64_t coeff = 1);
  static QZLaurent from_q(const LaurentQ& p);
  // Builds from unsorted terms, combining duplicates.
  static QZLaurent from_terms(std::vector<QZTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  std::span<const QZTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  QZLaurent operator-() const;
  friend QZLaurent operator+(const QZLaurent& a, const QZLaurent& b);
  friend QZLaurent operator-(const QZLaurent& a, const QZLaurent& b);
  friend QZLaurent operator*(const QZLaurent& a, const QZLaurent& b);
  QZLaurent times_monomial(int q_exp, const RootVec& z_exp, std::int64_t coeff = 1) const;
  // this * (1 - z^beta)
  QZLaurent times_one_minus(const RootVec& beta) const;
  // Exact quotient by (1 - z^beta) when it exists; beta must be nonzero with
  // a positive leading coordinate.
  bool divide_one_minus(const RootVec& beta, QZLaurent& quotient) const;

  QZLaurent bar() const;       // q -> q^{-1}
  QZLaurent invert_z() const;  // z -> z^{-1}
  // Applies a linear map to every z exponent.
  template <class F>
  QZLaurent map_z(F&& f) const {
    std::vector<QZTerm> t;
    t.reserve(terms_.size());
    for (const auto& term : terms_) t.push_back({{term.mono.q, f(term.mono.z)}, term.coeff});
    return from_terms(std::move(t));
  }

  bool operator==(const QZLaurent&) const = default;

  std::string to_string(int rank) const;

 private:
  std::vector<QZTerm> terms_;
};

// Terms of p in the order used for printing.
std::vector<QZTerm> display_order(std::span<const QZTerm> terms, int rank);

}  // namespace casselman
