#include "casselman/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace casselman {

RootVec RootVec::from(std::span<const int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxRank)) {
    throw IndexOutOfRange("root vector has more than 8 coordinates");
  }
  RootVec v;
  for (std::size_t i = 0; i < coords.size(); ++i) v.c[i] = static_cast<std::int16_t>(coords[i]);
  return v;
}

RootVec RootVec::operator-() const {
  RootVec r;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = static_cast<std::int16_t>(-c[i]);
  return r;
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  r += o;
  return r;
}

RootVec RootVec::operator-(const RootVec& o) const { return *this + (-o); }

RootVec& RootVec::operator+=(const RootVec& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::int16_t>(c[i] + o.c[i]);
  return *this;
}

RootVec RootVec::scaled(int k) const {
  RootVec r;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = static_cast<std::int16_t>(c[i] * k);
  return r;
}

int RootVec::height() const { return std::accumulate(c.begin(), c.end(), 0); }

int RootVec::weighted_height(std::span<const int> weights) const {
  int h = 0;
  for (std::size_t i = 0; i < weights.size() && i < c.size(); ++i) h += weights[i] * c[i];
  return h;
}

bool RootVec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
}
bool RootVec::nonneg() const {
  return std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
}
bool RootVec::nonpos() const {
  return std::all_of(c.begin(), c.end(), [](auto x) { return x <= 0; });
}

std::vector<int> RootVec::to_vector(int rank) const {
  return std::vector<int>(c.begin(), c.begin() + rank);
}

CartanType parse_cartan_type(std::string_view s) {
  if (s.size() != 1) throw UnsupportedType("unknown Cartan type '" + std::string(s) + "'");
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': return CartanType::A;
    case 'B': return CartanType::B;
    case 'C': return CartanType::C;
    case 'D': return CartanType::D;
    case 'F': return CartanType::F;
    case 'G': return CartanType::G;
    default: throw UnsupportedType("unknown Cartan type '" + std::string(s) + "'");
  }
}

namespace {

std::vector<int> cartan_entries(CartanType type, int n) {
  std::vector<int> a(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) at(i, i + 1) = at(i + 1, i) = -1;
  };
  switch (type) {
    case CartanType::A:
      chain(n);
      break;
    case CartanType::B:  // alpha_n short
      chain(n);
      at(n - 1, n - 2) = -2;
      break;
    case CartanType::C:  // alpha_n long
      chain(n);
      at(n - 2, n - 1) = -2;
      break;
    case CartanType::D:
      chain(n - 1);
      at(n - 2, n - 1) = at(n - 1, n - 2) = 0;
      at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
      break;
    case CartanType::G:  // alpha_1 short
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
    case CartanType::F:  // alpha_1, alpha_2 long
      chain(n);
      at(2, 1) = -2;
      break;
  }
  return a;
}

void check_supported(CartanType type, int rank) {
  bool ok = rank >= 1 && rank <= kMaxRank;
  switch (type) {
    case CartanType::A: break;
    case CartanType::B:
    case CartanType::C: ok = ok && rank >= 2; break;
    case CartanType::D: ok = ok && rank >= 3; break;
    case CartanType::G: ok = rank == 2; break;
    case CartanType::F: ok = rank == 4; break;
  }
  if (!ok) {
    throw UnsupportedType(std::string("unsupported root system ") + static_cast<char>(type) +
                          std::to_string(rank));
  }
}

}  // namespace

RootSystem RootSystem::build(CartanType type, int rank) {
  check_supported(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_entries(type, rank);

  // Close the simple roots under simple reflections.
  std::vector<RootVec> found;
  std::deque<RootVec> queue;
  for (int i = 0; i < rank; ++i) {
    found.push_back(RootVec::simple(i));
    queue.push_back(RootVec::simple(i));
  }
  while (!queue.empty()) {
    RootVec r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      RootVec s = rs.reflect(i, r);
      if (std::find(found.begin(), found.end(), s) == found.end()) {
        found.push_back(s);
        queue.push_back(s);
      }
    }
  }
  std::vector<RootVec> pos;
  for (const auto& r : found) {
    if (r.nonneg()) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a > b;
  });
  rs.num_pos_ = static_cast<int>(pos.size());
  rs.roots_ = pos;
  for (const auto& r : pos) rs.roots_.push_back(-r);

  const int nr = rs.num_roots();
  rs.reflection_table_.assign(static_cast<std::size_t>(rank * nr), -1);
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < nr; ++k) {
      int img = rs.index_of(rs.reflect(i, rs.roots_[static_cast<std::size_t>(k)]));
      if (img < 0) throw Error("root system closure failed");
      rs.reflection_table_[static_cast<std::size_t>(i * nr + k)] = img;
    }
  }
  return rs;
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(type_)) + std::to_string(rank_);
}

bool RootSystem::simply_laced() const {
  return type_ == CartanType::A || type_ == CartanType::D;
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) m[static_cast<std::size_t>(i)].push_back(cartan(i, j));
  }
  return m;
}

int RootSystem::index_of(const RootVec& v) const {
  auto it = std::find(roots_.begin(), roots_.end(), v);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

int RootSystem::positive_index_of(const RootVec& v) const {
  int k = index_of(v.nonneg() ? v : -v);
  return (k >= 0 && k < num_pos_) ? k : -1;
}

RootVec RootSystem::reflect(int simple, const RootVec& v) const {
  int pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += cartan(simple, j) * v[j];
  RootVec r = v;
  r[simple] = static_cast<std::int16_t>(r[simple] - pairing);
  return r;
}

RootSystem build_root_system(CartanType type, int rank) { return RootSystem::build(type, rank); }

RootSystem build_root_system(std::string_view type, int rank) {
  return RootSystem::build(parse_cartan_type(type), rank);
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank();
  using Key = std::vector<std::uint16_t>;

  // Breadth-first enumeration by right multiplication; the image of alpha_j
  // under w s_i is w(alpha_j) - cartan(i,j) w(alpha_i).
  std::map<Key, std::size_t> seen;
  std::vector<Key> forms;
  std::vector<int> lens;
  Key id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(i);
  seen.emplace(id, 0);
  forms.push_back(id);
  lens.push_back(0);
  for (std::size_t head = 0; head < forms.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      Key next(static_cast<std::size_t>(n));
      const Key cur = forms[head];
      const RootVec wi = rs_.root(cur[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j) {
        RootVec img = rs_.root(cur[static_cast<std::size_t>(j)]) - wi.scaled(rs_.cartan(i, j));
        next[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(rs_.index_of(img));
      }
      if (seen.emplace(next, forms.size()).second) {
        forms.push_back(next);
        lens.push_back(lens[head] + 1);
      }
    }
  }

  std::vector<std::size_t> order(forms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lens[a] != lens[b]) return lens[a] < lens[b];
    return forms[a] < forms[b];
  });
  std::map<Key, ElementIndex> index;
  images_.reserve(forms.size() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Key& f = forms[order[k]];
    images_.insert(images_.end(), f.begin(), f.end());
    length_.push_back(lens[order[k]]);
    index.emplace(f, static_cast<ElementIndex>(k));
  }

  const std::size_t total = size();
  rmul_.resize(total * static_cast<std::size_t>(n));
  lmul_.resize(total * static_cast<std::size_t>(n));
  for (ElementIndex w = 0; w < total; ++w) {
    auto form = canonical_form(w);
    for (int i = 0; i < n; ++i) {
      Key right(static_cast<std::size_t>(n)), left(static_cast<std::size_t>(n));
      const RootVec wi = rs_.root(form[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j) {
        RootVec img = rs_.root(form[static_cast<std::size_t>(j)]) - wi.scaled(rs_.cartan(i, j));
        right[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(rs_.index_of(img));
        left[static_cast<std::size_t>(j)] =
            static_cast<std::uint16_t>(rs_.reflect(i, form[static_cast<std::size_t>(j)]));
      }
      rmul_[w * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = index.at(right);
      lmul_[w * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = index.at(left);
    }
  }

  inverse_.resize(total);
  for (ElementIndex w = 0; w < total; ++w) {
    auto word = reduced_word(w);
    std::reverse(word.begin(), word.end());
    inverse_[w] = from_word(word);
  }

  // r_alpha = w s_i w^{-1} whenever w(alpha_i) = alpha.
  reflection_.assign(static_cast<std::size_t>(rs_.num_positive()), 0);
  std::vector<bool> done(static_cast<std::size_t>(rs_.num_positive()), false);
  for (ElementIndex w = 0; w < total; ++w) {
    auto form = canonical_form(w);
    for (int i = 0; i < n; ++i) {
      int img = form[static_cast<std::size_t>(i)];
      if (rs_.is_positive(img) && !done[static_cast<std::size_t>(img)]) {
        done[static_cast<std::size_t>(img)] = true;
        reflection_[static_cast<std::size_t>(img)] = mul(rmul(w, i), inverse(w));
      }
    }
  }
}

int WeylGroup::first_left_descent(ElementIndex w) const {
  for (int s = 0; s < rank(); ++s) {
    if (is_left_descent(s, w)) return s;
  }
  return -1;
}

ElementIndex WeylGroup::mul(ElementIndex a, ElementIndex b) const {
  ElementIndex r = a;
  for (int s : reduced_word(b)) r = rmul(r, s);
  return r;
}

std::vector<int> WeylGroup::reduced_word(ElementIndex w) const {
  std::vector<int> word;
  while (w != identity()) {
    int s = first_left_descent(w);
    word.push_back(s);
    w = lmul(s, w);
  }
  return word;
}

std::vector<std::vector<int>> WeylGroup::reduced_words(ElementIndex w, std::size_t limit) const {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  auto walk = [&](auto&& self, ElementIndex x) -> void {
    if (out.size() >= limit) return;
    if (x == identity()) {
      out.push_back(prefix);
      return;
    }
    for (int s = 0; s < rank(); ++s) {
      if (!is_left_descent(s, x)) continue;
      prefix.push_back(s);
      self(self, lmul(s, x));
      prefix.pop_back();
    }
  };
  walk(walk, w);
  return out;
}

ElementIndex WeylGroup::from_word(std::span<const int> word) const {
  ElementIndex w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank()) {
      throw IndexOutOfRange("simple reflection index " + std::to_string(s + 1) + " out of range 1.." +
                            std::to_string(rank()));
    }
    w = rmul(w, s);
  }
  return w;
}

std::span<const std::uint16_t> WeylGroup::canonical_form(ElementIndex w) const {
  return {images_.data() + static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()),
          static_cast<std::size_t>(rank())};
}

RootVec WeylGroup::act(ElementIndex w, const RootVec& v) const {
  auto form = canonical_form(w);
  RootVec r;
  for (int j = 0; j < rank(); ++j) {
    if (v[j] != 0) r += rs_.root(form[static_cast<std::size_t>(j)]).scaled(v[j]);
  }
  return r;
}

int WeylGroup::act_on_root(ElementIndex w, int idx) const { return rs_.index_of(act(w, rs_.root(idx))); }

void WeylGroup::build_bruhat() const {
  std::call_once(bruhat_once_, [this] {
    const std::size_t n = size();
    bruhat_stride_ = (n + 63) / 64;
    bruhat_.assign(n * bruhat_stride_, 0);
    auto set = [&](ElementIndex v, ElementIndex u) {
      bruhat_[v * bruhat_stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
    };
    auto get = [&](ElementIndex v, ElementIndex u) {
      return (bruhat_[v * bruhat_stride_ + u / 64] >> (u % 64)) & 1U;
    };
    set(identity(), identity());
    // Lifting property with s a left descent of v:
    //   su < u:  u <= v  iff  su <= sv
    //   su > u:  u <= v  iff  u <= sv
    for (ElementIndex v = 1; v < n; ++v) {
      int s = first_left_descent(v);
      ElementIndex sv = lmul(s, v);
      for (ElementIndex u = 0; u < n; ++u) {
        if (length(u) > length(v)) break;
        ElementIndex su = lmul(s, u);
        bool below = length(su) < length(u) ? get(sv, su) : get(sv, u);
        if (below) set(v, u);
      }
    }
  });
}

bool WeylGroup::leq(ElementIndex u, ElementIndex v) const {
  build_bruhat();
  return (bruhat_[v * bruhat_stride_ + u / 64] >> (u % 64)) & 1U;
}

std::vector<ElementIndex> WeylGroup::interval(ElementIndex u, ElementIndex v) const {
  if (!leq(u, v)) throw NotComparable("interval [u,v] requires u <= v");
  std::vector<ElementIndex> out;
  for (ElementIndex x = u; x <= v; ++x) {
    if (leq(u, x) && leq(x, v)) out.push_back(x);
  }
  return out;
}

std::size_t WeylGroup::comparable_pair_count() const {
  std::size_t count = 0;
  for (ElementIndex v = 0; v < size(); ++v) {
    for (ElementIndex u = 0; u <= v; ++u) count += leq(u, v) ? 1 : 0;
  }
  return count;
}

std::vector<int> WeylGroup::s_set(ElementIndex u, ElementIndex v) const {
  if (!leq(u, v)) throw NotComparable("S(u,v) requires u <= v");
  std::vector<int> out;
  for (int p = 0; p < rs_.num_positive(); ++p) {
    ElementIndex vr = mul(v, reflection(p));
    if (length(vr) < length(v) && leq(u, vr)) out.push_back(p);
  }
  return out;
}

std::vector<int> WeylGroup::s_prime_set(ElementIndex u, ElementIndex v) const {
  if (!leq(u, v)) throw NotComparable("S'(u,v) requires u <= v");
  std::vector<int> out;
  for (int p = 0; p < rs_.num_positive(); ++p) {
    ElementIndex ur = mul(u, reflection(p));
    if (length(ur) > length(u) && leq(ur, v)) out.push_back(p);
  }
  return out;
}

AdSet WeylGroup::ad_min(ElementIndex u, ElementIndex v) const {
  if (!less(u, v)) throw NotComparable("AD(u,v) requires u < v");
  AdSet ad;
  for (int p = 0; p < rs_.num_positive(); ++p) {
    ElementIndex t = reflection(p);
    if (length(mul(t, u)) > length(u) && length(mul(t, v)) < length(v)) ad.roots.push_back(p);
  }
  for (int a : ad.roots) {
    bool minimal = std::none_of(ad.roots.begin(), ad.roots.end(), [&](int b) {
      return b != a && (rs_.root(a) - rs_.root(b)).nonneg();
    });
    if (minimal) ad.minimal.push_back(a);
  }
  return ad;
}

// ---------------------------------------------------------------------------

int WeylElt::length() const { return group_->length(index_); }

WeylElt WeylElt::inverse() const { return WeylElt(group_, group_->inverse(index_)); }

WeylElt WeylElt::operator*(const WeylElt& o) const {
  if (group_ != o.group_) throw MixedRootSystems();
  return WeylElt(group_, group_->mul(index_, o.index_));
}

std::vector<int> WeylElt::word() const {
  auto w = group_->reduced_word(index_);
  for (int& s : w) ++s;
  return w;
}

std::string WeylElt::to_string() const { return word_to_string(word()); }

std::vector<int> WeylElt::left_descents() const {
  std::vector<int> out;
  for (int s = 0; s < group_->rank(); ++s) {
    if (group_->is_left_descent(s, index_)) out.push_back(s + 1);
  }
  return out;
}

std::vector<int> WeylElt::right_descents() const {
  std::vector<int> out;
  for (int s = 0; s < group_->rank(); ++s) {
    if (group_->is_right_descent(index_, s)) out.push_back(s + 1);
  }
  return out;
}

WeylElt element_from_word(const WeylGroup& group, std::span<const int> word) {
  std::vector<int> zero_based;
  for (int s : word) {
    if (s < 1 || s > group.rank()) {
      throw IndexOutOfRange("simple reflection index " + std::to_string(s) + " out of range 1.." +
                            std::to_string(group.rank()));
    }
    zero_based.push_back(s - 1);
  }
  return group.element(group.from_word(zero_based));
}

WeylElt element_from_word(const WeylGroup& group, std::initializer_list<int> word) {
  return element_from_word(group, std::span<const int>(word.begin(), word.size()));
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' ||
                               text[i] == ',' || text[i] == '[' || text[i] == ']' || text[i] == 's')) {
      ++i;
    }
  };
  skip();
  if (text.find_first_not_of(" \t") != std::string_view::npos && text.substr(i) == "e") return out;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("cannot parse word '" + std::string(text) + "'");
    }
    int n = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      n = n * 10 + (text[i] - '0');
      ++i;
    }
    out.push_back(n);
    skip();
  }
  return out;
}

std::string word_to_string(std::span<const int> word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << '*';
    os << 's' << word[i];
  }
  return os.str();
}

bool bruhat_leq(const WeylElt& u, const WeylElt& v) {
  if (&u.group() != &v.group()) throw MixedRootSystems();
  return u.group().leq(u.index(), v.index());
}

std::vector<WeylElt> bruhat_interval(const WeylElt& u, const WeylElt& v) {
  if (&u.group() != &v.group()) throw MixedRootSystems();
  std::vector<WeylElt> out;
  for (ElementIndex x : u.group().interval(u.index(), v.index())) out.push_back(u.group().element(x));
  return out;
}

RootVec act_on_root(const WeylElt& w, const RootVec& v) { return w.group().act(w.index(), v); }

}  // namespace casselman
