#include "casselman/ratfn.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace casselman {

namespace {

// a's numerator rewritten over the denominator `target` (target >= a.den).
QZLaurent lift_numerator(const QZLaurent& num, std::span<const DenFactor> den,
                         std::span<const DenFactor> target) {
  QZLaurent out = num;
  for (const auto& f : target) {
    int have = 0;
    for (const auto& g : den) {
      if (g.root == f.root) have = g.mult;
    }
    for (int k = have; k < f.mult; ++k) out = out.times_one_minus(f.root);
  }
  return out;
}

std::vector<DenFactor> lcm_den(std::span<const DenFactor> a, std::span<const DenFactor> b) {
  std::map<RootVec, int> m;
  for (const auto& f : a) m[f.root] = std::max(m[f.root], f.mult);
  for (const auto& f : b) m[f.root] = std::max(m[f.root], f.mult);
  std::vector<DenFactor> out;
  for (const auto& [r, k] : m) out.push_back({r, k});
  return out;
}

}  // namespace

RatFn::RatFn(QZLaurent num, std::vector<DenFactor> den) : num_(std::move(num)) {
  std::map<RootVec, int> m;
  for (const auto& f : den) {
    if (!f.root.nonneg() || f.root.is_zero()) {
      throw std::invalid_argument("denominator factor must be (1 - z^beta) with beta positive");
    }
    if (f.mult > 0) m[f.root] += f.mult;
  }
  for (const auto& [r, k] : m) den_.push_back({r, k});
  reduce_in_place();
}

RatFn RatFn::inv_one_minus_z(const RootVec& gamma) {
  if (gamma.is_zero()) throw std::invalid_argument("1/(1 - z^0) is undefined");
  if (gamma.nonneg()) return RatFn(QZLaurent(1), {{gamma, 1}});
  if (gamma.nonpos()) return RatFn(QZLaurent::monomial(0, -gamma, -1), {{-gamma, 1}});
  throw std::invalid_argument("inv_one_minus_z: exponent is not +-(positive vector)");
}

bool RatFn::is_q_only() const {
  if (!den_.empty()) return false;
  return std::all_of(num_.terms().begin(), num_.terms().end(),
                     [](const QZTerm& t) { return t.mono.z.is_zero(); });
}

LaurentQ RatFn::to_q() const {
  if (!is_q_only()) throw std::logic_error("RatFn depends on z");
  LaurentQ p;
  for (const auto& t : num_.terms()) p += LaurentQ::monomial(t.mono.q, t.coeff);
  return p;
}

void RatFn::reduce_in_place() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    QZLaurent quotient;
    while (f.mult > 0 && num_.divide_one_minus(f.root, quotient)) {
      num_ = std::move(quotient);
      --f.mult;
    }
  }
  std::erase_if(den_, [](const DenFactor& f) { return f.mult == 0; });
}

RatFn RatFn::reduce() const {
  RatFn r = *this;
  r.reduce_in_place();
  return r;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFn r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.den_ = lcm_den(a.den_, b.den_);
    r.num_ = lift_numerator(a.num_, a.den_, r.den_) + lift_numerator(b.num_, b.den_, r.den_);
  }
  r.reduce_in_place();
  return r;
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<DenFactor> den(a.den_.begin(), a.den_.end());
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return RatFn(a.num_ * b.num_, std::move(den));
}

RatFn RatFn::bar() const {
  RatFn r;
  r.num_ = num_.bar();
  r.den_ = den_;
  return r;
}

RatFn RatFn::invert_z() const {
  // prod (1 - z^{-b})^{-m} = prod (-z^{b})^{m} (1 - z^{b})^{-m}
  QZLaurent num = num_.invert_z();
  RootVec shift;
  int total = 0;
  for (const auto& f : den_) {
    shift += f.root.scaled(f.mult);
    total += f.mult;
  }
  num = num.times_monomial(0, shift, (total % 2) ? -1 : 1);
  return RatFn(std::move(num), den_);
}

LaurentQ RatFn::limit_z_infinity(std::span<const int> weights) const {
  std::vector<int> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(kMaxRank, 1);
  if (num_.is_zero()) return {};
  int den_degree = 0;
  int den_terms = 0;
  for (const auto& f : den_) {
    int h = f.root.weighted_height(w);
    if (h <= 0) throw std::invalid_argument("limit weights must be strictly positive");
    den_degree += h * f.mult;
    den_terms += f.mult;
  }
  // Leading t-coefficient of the numerator, as a Laurent polynomial in q.
  int top = 0;
  bool any = false;
  for (const auto& t : num_.terms()) {
    int d = t.mono.z.weighted_height(w);
    if (!any || d > top) top = d;
    any = true;
  }
  LaurentQ lead;
  while (true) {
    lead = {};
    int next = top;
    bool has_lower = false;
    for (const auto& t : num_.terms()) {
      int d = t.mono.z.weighted_height(w);
      if (d == top) {
        lead += LaurentQ::monomial(t.mono.q, t.coeff);
      } else if (d < top && (!has_lower || d > next)) {
        next = d;
        has_lower = true;
      }
    }
    if (!lead.is_zero() || !has_lower) break;
    top = next;
  }
  if (lead.is_zero()) return {};
  if (top > den_degree) throw NoLimit("numerator grows faster than denominator as z -> infinity");
  if (top < den_degree) return {};
  // Leading coefficient of prod (1 - t^h)^m is (-1)^{sum m}.
  return (den_terms % 2) ? -lead : lead;
}

bool RatFn::equals(const RatFn& o) const {
  auto den = lcm_den(den_, o.den_);
  return lift_numerator(num_, den_, den) == lift_numerator(o.num_, o.den_, den);
}

std::string RatFn::to_string(int rank) const {
  if (den_.empty()) return num_.to_string(rank);
  std::ostringstream os;
  os << '(' << num_.to_string(rank) << ")/";
  bool wrap = den_.size() > 1 || den_[0].mult != 1;
  if (wrap) os << '(';
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) os << '*';
    os << "(1 - " << QZLaurent::monomial(0, den_[i].root).to_string(rank) << ')';
    if (den_[i].mult != 1) os << '^' << den_[i].mult;
  }
  if (wrap) os << ')';
  return os.str();
}

}  // namespace casselman
