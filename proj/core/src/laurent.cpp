#include "casselman/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace casselman {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

// ---------------------------------------------------------------------------
// LaurentQ

LaurentQ LaurentQ::monomial(int exp, std::int64_t coeff) {
  LaurentQ p;
  if (coeff != 0) {
    p.low_ = exp;
    p.coeffs_ = {coeff};
  }
  return p;
}

LaurentQ LaurentQ::from_map(const std::map<int, std::int64_t>& m) {
  LaurentQ p;
  for (const auto& [e, c] : m) p += monomial(e, c);
  return p;
}

std::int64_t LaurentQ::coeff(int exp) const {
  int k = exp - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::map<int, std::int64_t> LaurentQ::to_map() const {
  std::map<int, std::int64_t> m;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) m[low_ + static_cast<int>(k)] = coeffs_[k];
  }
  return m;
}

void LaurentQ::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[static_cast<std::size_t>(low_ - lo) + k] = coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    auto& slot = c[static_cast<std::size_t>(o.low_ - lo) + k];
    slot = checked_add(slot, o.coeffs_[k]);
  }
  low_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentQ r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  r.trim();
  return r;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentQ LaurentQ::bar() const {
  if (is_zero()) return {};
  LaurentQ r;
  r.low_ = -degree();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentQ LaurentQ::truncated_above(int d) const {
  LaurentQ r;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    int e = low_ + static_cast<int>(k);
    if (e <= d) r += monomial(e, coeffs_[k]);
  }
  return r;
}

// Terms are printed by increasing |exponent|, positive first on ties:
// "1 + q", "q^-1 - q^-3".
std::string LaurentQ::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<int, std::int64_t>> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) terms.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int aa = std::abs(a.first), ab = std::abs(b.first);
    return aa != ab ? aa < ab : a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QZLaurent

QZLaurent::QZLaurent(std::int64_t c) {
  if (c != 0) terms_.push_back({{}, c});
}

QZLaurent QZLaurent::monomial(int q_exp, const RootVec& z_exp, std::int64_t coeff) {
  QZLaurent p;
  if (coeff != 0) p.terms_.push_back({{q_exp, z_exp}, coeff});
  return p;
}

QZLaurent QZLaurent::from_q(const LaurentQ& p) {
  QZLaurent r;
  for (const auto& [e, c] : p.to_map()) r.terms_.push_back({{e, {}}, c});
  return r;
}

QZLaurent QZLaurent::from_terms(std::vector<QZTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const QZTerm& a, const QZTerm& b) { return a.mono < b.mono; });
  QZLaurent r;
  r.terms_.reserve(terms.size());
  for (const auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = checked_add(r.terms_.back().coeff, t.coeff);
    } else {
      r.terms_.push_back(t);
    }
  }
  std::erase_if(r.terms_, [](const QZTerm& t) { return t.coeff == 0; });
  return r;
}

QZLaurent QZLaurent::operator-() const {
  QZLaurent r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

QZLaurent operator+(const QZLaurent& a, const QZLaurent& b) {
  QZLaurent r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->mono < j->mono)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->mono < i->mono) {
      r.terms_.push_back(*j++);
    } else {
      std::int64_t c = checked_add(i->coeff, j->coeff);
      if (c != 0) r.terms_.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

QZLaurent operator-(const QZLaurent& a, const QZLaurent& b) { return a + (-b); }

QZLaurent operator*(const QZLaurent& a, const QZLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QZTerm> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      t.push_back({{x.mono.q + y.mono.q, x.mono.z + y.mono.z}, checked_mul(x.coeff, y.coeff)});
    }
  }
  return QZLaurent::from_terms(std::move(t));
}

QZLaurent QZLaurent::times_monomial(int q_exp, const RootVec& z_exp, std::int64_t coeff) const {
  if (coeff == 0) return {};
  QZLaurent r = *this;
  for (auto& t : r.terms_) {
    t.mono.q += q_exp;
    t.mono.z += z_exp;
    t.coeff = checked_mul(t.coeff, coeff);
  }
  return r;  // shifting every exponent by the same amount preserves order
}

QZLaurent QZLaurent::times_one_minus(const RootVec& beta) const {
  return *this - times_monomial(0, beta);
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool QZLaurent::divide_one_minus(const RootVec& beta, QZLaurent& quotient) const {
  if (is_zero()) {
    quotient = {};
    return true;
  }
  int lead = -1;
  for (int i = 0; i < kMaxRank; ++i) {
    if (beta[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead < 0 || beta[lead] < 0) throw std::invalid_argument("divide_one_minus: bad binomial");

  // Terms on a line {m + k beta} form a univariate polynomial N(t) in t = z^beta;
  // N(t) = (1 - t) Q(t) iff the coefficients sum to zero, and then Q_k is the
  // prefix sum of N up to k.
  struct Keyed {
    QZMonomial base;
    int k;
    std::int64_t c;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) {
    int k = floor_div(t.mono.z[lead], beta[lead]);
    keyed.push_back({{t.mono.q, t.mono.z - beta.scaled(k)}, k, t.coeff});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.k < b.k;
  });
  std::vector<QZTerm> out;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].base == keyed[i].base) ++j;
    std::int64_t running = 0;
    for (std::size_t a = i; a < j; ++a) {
      running = checked_add(running, keyed[a].c);
      int next_k = (a + 1 < j) ? keyed[a + 1].k : keyed[a].k + 1;
      if (running != 0) {
        if (a + 1 == j) return false;  // line total is nonzero
        for (int k = keyed[a].k; k < next_k; ++k) {
          out.push_back({{keyed[i].base.q, keyed[i].base.z + beta.scaled(k)}, running});
        }
      }
    }
    i = j;
  }
  quotient = from_terms(std::move(out));
  return true;
}

QZLaurent QZLaurent::bar() const {
  std::vector<QZTerm> t = terms_;
  for (auto& x : t) x.mono.q = -x.mono.q;
  return from_terms(std::move(t));
}

QZLaurent QZLaurent::invert_z() const {
  std::vector<QZTerm> t = terms_;
  for (auto& x : t) x.mono.z = -x.mono.z;
  return from_terms(std::move(t));
}

// Display order: by z-degree, then z exponent, then |q| with positive first.
std::vector<QZTerm> display_order(std::span<const QZTerm> terms, int rank) {
  std::vector<QZTerm> sorted(terms.begin(), terms.end());
  auto key = [rank](const QZTerm& t) {
    int deg = 0;
    for (int i = 0; i < rank; ++i) deg += t.mono.z[i];
    return std::tuple(deg, t.mono.z, std::abs(t.mono.q), -t.mono.q);
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const QZTerm& a, const QZTerm& b) { return key(a) < key(b); });
  return sorted;
}

std::string QZLaurent::to_string(int rank) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : display_order(terms_, rank)) {
    std::int64_t a = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff < 0) os << '-';
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (t.mono.q != 0) factors.push_back(t.mono.q == 1 ? "q" : "q^" + std::to_string(t.mono.q));
    for (int i = 0; i < rank; ++i) {
      int e = t.mono.z[i];
      if (e == 0) continue;
      std::string f = "z" + std::to_string(i + 1);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << a;
      continue;
    }
    if (a != 1) os << a << '*';
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

}  // namespace casselman
