#include "casselman/modular.hpp"

namespace casselman {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw BadSample("division by zero residue");
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ModVal ModVal::constant(std::int64_t c, std::uint64_t p) {
  std::uint64_t r = c >= 0 ? static_cast<std::uint64_t>(c) % p
                           : (p - static_cast<std::uint64_t>(-(c + 1)) % p - 1) % p;
  return {{r, r, r, r}, p};
}

ModVal ModVal::operator-() const {
  ModVal r = *this;
  for (auto& x : r.v_) x = x ? p_ - x : 0;
  return r;
}

ModVal operator+(const ModVal& a, const ModVal& b) {
  ModVal r = a;
  for (std::size_t i = 0; i < 4; ++i) {
    std::uint64_t s = a.v_[i] + b.v_[i];
    r.v_[i] = s >= a.p_ ? s - a.p_ : s;
  }
  return r;
}

ModVal operator*(const ModVal& a, const ModVal& b) {
  ModVal r = a;
  for (std::size_t i = 0; i < 4; ++i) r.v_[i] = mod_mul(a.v_[i], b.v_[i], a.p_);
  return r;
}

ModVal ModVal::inverse() const {
  ModVal r = *this;
  for (auto& x : r.v_) x = mod_inv(x, p_);
  return r;
}

// ---------------------------------------------------------------------------

ModCtx::ModCtx(const RootSystem& rs, std::uint64_t prime, std::uint64_t q, std::vector<std::uint64_t> z)
    : p_(prime), q_(q % prime), z_(std::move(z)), rank_(rs.rank()) {
  if (!is_prime(p_)) throw BadSample("modulus " + std::to_string(p_) + " is not prime");
  if (static_cast<int>(z_.size()) != rank_) throw BadSample("wrong number of z coordinates");
  if (q_ == 0 || q_ == 1 || q_ == p_ - 1) throw BadSample("degenerate q");
  q_inv_ = mod_inv(q_, p_);
  for (auto& x : z_) {
    x %= p_;
    z_inv_.push_back(mod_inv(x, p_));
  }
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (z_pow(rs.root(k)).value() == 1) throw BadSample("1 - z^beta vanishes at sample point");
  }
}

ModCtx ModCtx::sample(const RootSystem& rs, std::uint64_t prime, std::uint64_t seed,
                      std::uint64_t sample_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample_index),
                    static_cast<std::uint32_t>(sample_index >> 32)};
  std::mt19937_64 rng(seq);
  // Plain modular reduction keeps the draw reproducible across standard
  // libraries; the bias is irrelevant for identity testing.
  auto draw = [&] { return 2 + rng() % (prime - 3); };
  if (prime < 7) throw BadSample("modulus too small for sampling");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::uint64_t q = draw();
    std::vector<std::uint64_t> z;
    for (int i = 0; i < rs.rank(); ++i) z.push_back(draw());
    try {
      return ModCtx(rs, prime, q, std::move(z));
    } catch (const BadSample&) {
      if (!is_prime(prime)) throw;
    }
  }
  throw BadSample("no admissible sample point found");
}

ModVal ModCtx::q_pow(int k) const {
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -static_cast<std::int64_t>(k) : k);
  std::uint64_t a = mod_pow(k < 0 ? q_inv_ : q_, e, p_);
  std::uint64_t b = mod_pow(k < 0 ? q_ : q_inv_, e, p_);
  return {{a, b, a, b}, p_};
}

ModVal ModCtx::z_pow(const RootVec& lambda) const {
  std::uint64_t a = 1, b = 1;
  for (int i = 0; i < rank_; ++i) {
    int e = lambda[i];
    if (e == 0) continue;
    std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    const auto& base = e > 0 ? z_ : z_inv_;
    const auto& inv = e > 0 ? z_inv_ : z_;
    a = mod_mul(a, mod_pow(base[static_cast<std::size_t>(i)], n, p_), p_);
    b = mod_mul(b, mod_pow(inv[static_cast<std::size_t>(i)], n, p_), p_);
  }
  return {{a, a, b, b}, p_};
}

ModVal ModCtx::inv_one_minus_z(const RootVec& gamma) const {
  return (constant(1) - z_pow(gamma)).inverse();
}

ModVal ModCtx::eval(const LaurentQ& f) const {
  ModVal r = constant(0);
  for (const auto& [e, c] : f.to_map()) r += constant(c) * q_pow(e);
  return r;
}

ModVal ModCtx::eval(const QZLaurent& f) const {
  ModVal r = constant(0);
  for (const auto& t : f.terms()) r += constant(t.coeff) * q_pow(t.mono.q) * z_pow(t.mono.z);
  return r;
}

ModVal ModCtx::eval(const RatFn& f) const {
  ModVal r = eval(f.num());
  for (const auto& d : f.den()) {
    ModVal inv = inv_one_minus_z(d.root);
    for (int k = 0; k < d.mult; ++k) r *= inv;
  }
  return r;
}

}  // namespace casselman
