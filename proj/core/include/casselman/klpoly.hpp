#pragma once

#include <optional>
#include <vector>

#include "casselman/laurent.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

// Memoized classical Kazhdan-Lusztig data for one Weyl group: R-, P- and
// Q-polynomials, mu-coefficients, and the coefficients
//
//   c_{u,v} = sum_{u<=x<=y<=z<=v} e_x e_y q_y^{-1} q_u P_{x,y} bar(Q_{y,z}) e_z e_v.
//
// Tables fill lazily; a KLTable is not safe for concurrent use. Give each
// worker its own table.
class KLTable {
 public:
  explicit KLTable(const WeylGroup& group);

  const WeylGroup& group() const { return *group_; }

  const LaurentQ& R(ElementIndex u, ElementIndex v);
  const LaurentQ& P(ElementIndex u, ElementIndex v);
  const LaurentQ& Q(ElementIndex u, ElementIndex v);
  // Coefficient of q^{(l(v)-l(u)-1)/2} in P_{u,v}; zero unless u < v with odd
  // length difference.
  std::int64_t mu(ElementIndex u, ElementIndex v);
  const LaurentQ& c(ElementIndex u, ElementIndex v);

  // u < v, l(v)-l(u) odd and >= 3, and deg P_{u,v} = (l(v)-l(u)-1)/2.
  // With include_covers the length condition relaxes to >= 1, which is the
  // original relation including covering pairs.
  bool precedes(ElementIndex u, ElementIndex v, bool include_covers = false);

  // Full column x -> P_{x,w}.
  const std::vector<LaurentQ>& P_column(ElementIndex w);

 private:
  std::size_t key(ElementIndex u, ElementIndex v) const { return std::size_t{u} * n_ + v; }
  const LaurentQ& alternating_P_sum(ElementIndex u, ElementIndex y);
  const LaurentQ& alternating_Qbar_sum(ElementIndex y, ElementIndex v);

  const WeylGroup* group_;
  std::size_t n_;
  std::vector<std::optional<LaurentQ>> r_;
  std::vector<std::optional<std::vector<LaurentQ>>> p_cols_;
  std::vector<std::optional<LaurentQ>> c_;
  std::vector<std::optional<LaurentQ>> a_;  // sum_{u<=x<=y} e_x P_{x,y}
  std::vector<std::optional<LaurentQ>> b_;  // sum_{y<=z<=v} e_z bar(Q_{y,z})
  LaurentQ zero_;
};

}  // namespace casselman
