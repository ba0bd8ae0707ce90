#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mvcr/character.hpp"
#include "mvcr/extremal.hpp"
#include "mvcr/mvcrystal.hpp"
#include "mvcr/weyl.hpp"

namespace mvcr {

/// MV_x(lambda) as a sorted list of node indices into a generated crystal MV(lambda).
struct DemazureSet {
  WeylElt x;  // minimal coset representative
  Coweight lambda;
  std::vector<std::size_t> members;
};

/// Every element f_j^c b (c >= 0) for b in `in`.
inline std::vector<std::size_t> close_under_f(const MVCrystal& cr, const std::vector<std::size_t>& in, int j) {
  std::set<std::size_t> out;
  for (std::size_t b : in)
    for (std::size_t cur = b; cur != MVCrystal::npos && out.insert(cur).second;) cur = cr.f_edge(cur, j);
  return {out.begin(), out.end()};
}

/// {f_{j_1}^{c_1} ... f_{j_r}^{c_r} P_lambda} for an arbitrary word (j_1..j_r).
inline std::vector<std::size_t> demazure_members_along(const MVCrystal& cr, const Word& word) {
  std::vector<std::size_t> cur{cr.highest()};
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = close_under_f(cr, cur, *it);
  return cur;
}

/// MV_x(lambda) by f-strings along the ShortLex-least reduced word of the minimal coset
/// representative of x.
inline DemazureSet demazure_set(const MVCrystal& cr, WeylElt x) {
  const WeylGroup& W = cr.root_system().weyl();
  const WeylElt rep = W.min_coset_rep(x, cr.lambda());
  return DemazureSet{rep, cr.lambda(), demazure_members_along(cr, W.word(rep))};
}

/// MV_x(lambda) by the recursion B_x = union_k f_j^k B_{s_j x} over a left descent j of x,
/// always taking the largest such j.
inline DemazureSet demazure_set_recursive(const MVCrystal& cr, WeylElt x) {
  const WeylGroup& W = cr.root_system().weyl();
  const WeylElt rep = W.min_coset_rep(x, cr.lambda());
  std::map<std::uint32_t, std::vector<std::size_t>> memo;
  auto rec = [&](auto&& self, WeylElt y) -> std::vector<std::size_t> {
    if (W.length(y) == 0) return {cr.highest()};
    if (auto it = memo.find(y.id); it != memo.end()) return it->second;
    int j = static_cast<int>(W.rank()) - 1;
    while (!W.is_left_descent(j, y)) --j;
    auto out = close_under_f(cr, self(self, W.left_mul(j, y)), j);
    memo.emplace(y.id, out);
    return out;
  };
  return DemazureSet{rep, cr.lambda(), rec(rec, rep)};
}

inline bool in_demazure(const MVCrystal& cr, const MVPolytope& P, WeylElt x) {
  const auto k = cr.find(P);
  if (!k) return false;
  const auto members = demazure_set(cr, x).members;
  return std::binary_search(members.begin(), members.end(), *k);
}

/// P lies in the opposite Demazure crystal MV^x(lambda) iff it contains P_{x.lambda}.
inline bool opposite_demazure_member(const RootSystem& rs, const MVPolytope& P, WeylElt x) {
  const WeylElt rep = rs.weyl().min_coset_rep(x, P.lambda);
  return contains(rs.weyl(), P.datum, extremal_polytope(rs, rep, P.lambda, false).datum);
}

/// Weight multiset of a set of crystal nodes.
inline Character weight_character(const MVCrystal& cr, const std::vector<std::size_t>& members) {
  Character ch;
  for (std::size_t k : members) add_term(ch, wt(cr.node(k)), 1);
  return ch;
}

}  // namespace mvcr
