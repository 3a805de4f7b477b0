#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casselman/errors.hpp"

namespace casselman {

inline constexpr int kMaxRank = 8;

// Integer vector in the basis of simple roots. Used for roots, for weights of
// the torus variable z (z^lambda) and for anything else living in the root
// lattice. Unused trailing coordinates are zero.
struct RootVec {
  std::array<std::int16_t, kMaxRank> c{};

  static RootVec simple(int i) {
    RootVec v;
    v.c[static_cast<std::size_t>(i)] = 1;
    return v;
  }
  static RootVec from(std::span<const int> coords);

  std::int16_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  std::int16_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  RootVec operator-() const;
  RootVec operator+(const RootVec& o) const;
  RootVec operator-(const RootVec& o) const;
  RootVec& operator+=(const RootVec& o);
  RootVec scaled(int k) const;

  int height() const;
  int weighted_height(std::span<const int> weights) const;
  bool is_zero() const;
  bool nonneg() const;
  bool nonpos() const;

  std::vector<int> to_vector(int rank) const;

  auto operator<=>(const RootVec&) const = default;
  bool operator==(const RootVec&) const = default;
};

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', F = 'F', G = 'G' };

CartanType parse_cartan_type(std::string_view s);

// A finite crystallographic root system given by its Cartan datum.
//
// Roots are indexed densely: positive roots occupy [0, N) ordered by height,
// simple roots first (index i is alpha_{i+1}); the negative of root k is
// k + N. Cartan entries follow Bourbaki: cartan(i, j) = <alpha_i^vee, alpha_j>,
// so s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
class RootSystem {
 public:
  static RootSystem build(CartanType type, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;
  bool simply_laced() const;

  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  std::vector<std::vector<int>> cartan_matrix() const;

  int num_positive() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  const RootVec& root(int idx) const { return roots_[static_cast<std::size_t>(idx)]; }
  bool is_positive(int idx) const { return idx < num_pos_; }
  int negate(int idx) const { return idx < num_pos_ ? idx + num_pos_ : idx - num_pos_; }
  // Index of a root vector, or -1 when the vector is not a root.
  int index_of(const RootVec& v) const;
  // Index of the positive root +-v, or -1.
  int positive_index_of(const RootVec& v) const;

  // s_i applied to root idx (reflection table lookup).
  int reflect(int simple, int idx) const {
    return reflection_table_[static_cast<std::size_t>(simple * 2 * num_pos_ + idx)];
  }
  // s_i applied to an arbitrary lattice vector.
  RootVec reflect(int simple, const RootVec& v) const;

 private:
  RootSystem() = default;

  CartanType type_ = CartanType::A;
  int rank_ = 0;
  int num_pos_ = 0;
  std::vector<int> cartan_;
  std::vector<RootVec> roots_;
  std::vector<int> reflection_table_;
};

using ElementIndex = std::uint32_t;

class WeylGroup;

// A group element bound to its Weyl group. The group must outlive the element.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(const WeylGroup* group, ElementIndex index) : group_(group), index_(index) {}

  const WeylGroup& group() const { return *group_; }
  ElementIndex index() const { return index_; }

  int length() const;
  int sign() const { return (length() & 1) ? -1 : 1; }
  WeylElt inverse() const;
  WeylElt operator*(const WeylElt& o) const;
  // Lexicographically minimal reduced word, 1-based letters.
  std::vector<int> word() const;
  // "s3*s2", or "e" for the identity.
  std::string to_string() const;
  std::vector<int> left_descents() const;
  std::vector<int> right_descents() const;

  bool operator==(const WeylElt& o) const { return group_ == o.group_ && index_ == o.index_; }

 private:
  const WeylGroup* group_ = nullptr;
  ElementIndex index_ = 0;
};

// Result of ad_min: AD(u,v) as positive-root indices and its minimal elements
// in the root order.
struct AdSet {
  std::vector<int> roots;
  std::vector<int> minimal;
};

// The Weyl group of a RootSystem with every element enumerated and densely
// indexed. Index order is (length, canonical form), so index 0 is the identity
// and the last index is w0.
//
// An element's canonical form is the tuple of images of the simple roots as
// signed root indices. Multiplication by simple reflections is tabulated.
// The Bruhat table is built on first use; it is the only lazily built state
// and is guarded by a once-flag, so a WeylGroup can be shared across threads.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs);
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return length_.size(); }
  ElementIndex identity() const { return 0; }
  ElementIndex longest() const { return static_cast<ElementIndex>(size() - 1); }

  WeylElt element(ElementIndex w) const { return WeylElt(this, w); }

  int length(ElementIndex w) const { return length_[w]; }
  int sign(ElementIndex w) const { return (length_[w] & 1) ? -1 : 1; }
  // w * s_i and s_i * w; s is 0-based.
  ElementIndex rmul(ElementIndex w, int s) const { return rmul_[w * rank() + static_cast<unsigned>(s)]; }
  ElementIndex lmul(int s, ElementIndex w) const { return lmul_[w * rank() + static_cast<unsigned>(s)]; }
  bool is_left_descent(int s, ElementIndex w) const { return length(lmul(s, w)) < length(w); }
  bool is_right_descent(ElementIndex w, int s) const { return length(rmul(w, s)) < length(w); }
  // Lowest-index left descent, or -1 for the identity.
  int first_left_descent(ElementIndex w) const;

  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex w) const { return inverse_[w]; }
  // Letters are 0-based here.
  std::vector<int> reduced_word(ElementIndex w) const;
  ElementIndex from_word(std::span<const int> word) const;
  // Reduced words of w (0-based letters) in lexicographic order, at most limit.
  std::vector<std::vector<int>> reduced_words(ElementIndex w, std::size_t limit = 1024) const;

  // Image of root idx under w.
  int act_on_root(ElementIndex w, int idx) const;
  RootVec act(ElementIndex w, const RootVec& v) const;
  // Canonical form: images of simple roots.
  std::span<const std::uint16_t> canonical_form(ElementIndex w) const;

  // Reflection r_alpha for the positive root with index p.
  ElementIndex reflection(int p) const { return reflection_[static_cast<std::size_t>(p)]; }

  bool leq(ElementIndex u, ElementIndex v) const;
  bool less(ElementIndex u, ElementIndex v) const { return u != v && leq(u, v); }
  bool covers(ElementIndex u, ElementIndex v) const {
    return length(v) == length(u) + 1 && leq(u, v);
  }
  // {x : u <= x <= v} in index order; throws NotComparable if u is not <= v.
  std::vector<ElementIndex> interval(ElementIndex u, ElementIndex v) const;
  std::size_t comparable_pair_count() const;

  // S(u,v) = {alpha > 0 : u <= v r_alpha < v} as positive-root indices.
  std::vector<int> s_set(ElementIndex u, ElementIndex v) const;
  // S'(u,v) = {alpha > 0 : u < u r_alpha <= v}.
  std::vector<int> s_prime_set(ElementIndex u, ElementIndex v) const;
  // AD(u,v) = {r in T : r u > u, r v < v} with its minimal elements.
  AdSet ad_min(ElementIndex u, ElementIndex v) const;

 private:
  void build_bruhat() const;

  RootSystem rs_;
  std::vector<std::uint16_t> images_;  // size() * rank
  std::vector<int> length_;
  std::vector<ElementIndex> rmul_;
  std::vector<ElementIndex> lmul_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> reflection_;

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::uint64_t> bruhat_;  // row v, bit u
  mutable std::size_t bruhat_stride_ = 0;
};

// build_root_system; supported: A1-A8, B2-B8, C2-C8, D3-D8, G2, F4.
RootSystem build_root_system(CartanType type, int rank);
RootSystem build_root_system(std::string_view type, int rank);

// 1-based letters.
WeylElt element_from_word(const WeylGroup& group, std::span<const int> word);
WeylElt element_from_word(const WeylGroup& group, std::initializer_list<int> word);
// Accepts "s3*s2", "s3s2", "3,2", "[3,2]" and "e".
std::vector<int> parse_word(std::string_view text);
std::string word_to_string(std::span<const int> word);

bool bruhat_leq(const WeylElt& u, const WeylElt& v);
std::vector<WeylElt> bruhat_interval(const WeylElt& u, const WeylElt& v);
RootVec act_on_root(const WeylElt& w, const RootVec& v);

}  // namespace casselman
