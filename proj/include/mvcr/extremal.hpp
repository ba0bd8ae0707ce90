#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/mvcrystal.hpp"
#include "mvcr/polytope.hpp"
#include "mvcr/root_system.hpp"
#include "mvcr/weyl.hpp"

namespace mvcr {

/// Lexicographically least increasing tuple of 1-based positions a_1 < ... < a_p of a reduced
/// word such that s_{word[a_1]} ... s_{word[a_p]} is a reduced expression of `target`.
inline std::vector<int> min_lex_subword(const WeylGroup& W, WeylElt target, const Word& word) {
  const std::size_t m = word.size();
  std::vector<WeylElt> suffix(m + 1, W.identity());
  for (std::size_t a = m; a-- > 0;) suffix[a] = W.left_mul(word[a], suffix[a + 1]);
  if (W.length(suffix[0]) != m) throw Error("min_lex_subword: word is not reduced");
  if (!W.bruhat_leq(target, suffix[0]))
    throw Error("min_lex_subword: " + W.word_string(target) + " is not a subword product");
  std::vector<int> pos;
  WeylElt rest = target;
  for (std::size_t a = 0; a < m && W.length(rest) > 0; ++a) {
    if (!W.is_left_descent(word[a], rest)) continue;
    const WeylElt next = W.left_mul(word[a], rest);
    if (!W.bruhat_leq(next, suffix[a + 1])) continue;
    pos.push_back(static_cast<int>(a) + 1);
    rest = next;
  }
  return pos;
}

/// The sequences y_0..y_m and v_0..v_m attached to x and one reduced word of w0.
struct YSequence {
  std::size_t word = 0;
  std::vector<int> positions;  // min-lex subword for x w0, 1-based
  std::vector<WeylElt> y;
  std::vector<WeylElt> v;
};

inline YSequence y_sequence(const RootSystem& rs, WeylElt x, std::size_t word) {
  const WeylGroup& W = rs.weyl();
  const Word& i = rs.words()[word];
  const std::size_t m = i.size();
  const auto& pre = rs.prefixes(word);
  YSequence s;
  s.word = word;
  s.positions = min_lex_subword(W, W.mul(x, W.longest()), i);
  std::vector<bool> chosen(m + 1, false);
  for (int a : s.positions) chosen[a] = true;
  s.y.assign(m + 1, W.identity());
  s.v.assign(m + 1, W.identity());
  for (std::size_t l = m; l >= 1; --l) {
    if (chosen[l]) {
      s.y[l - 1] = s.y[l];
      s.v[l - 1] = W.left_mul(i[l - 1], s.v[l]);
      if (W.length(s.v[l - 1]) != W.length(s.v[l]) + 1)
        throw InconsistentVertex("v-sequence does not grow at a chosen position");
    } else {
      // Reflection in w_{l-1} . alpha_{i_l}, i.e. w_l w_{l-1}^{-1}.
      const WeylElt refl = W.mul(pre[l], W.inverse(pre[l - 1]));
      s.y[l - 1] = W.mul(refl, s.y[l]);
      s.v[l - 1] = s.v[l];
    }
  }
  const WeylElt w0inv = W.inverse(W.longest());
  for (std::size_t l = 0; l <= m; ++l)
    if (s.y[l] != W.mul(W.mul(pre[l], s.v[l]), w0inv))
      throw InconsistentVertex("y_l != w_l v_l w0^{-1} at l = " + std::to_string(l));
  return s;
}

/// True iff the polytope with datum d equals Conv(W_{<=x} . lambda).
inline bool equals_bruhat_hull(const WeylGroup& W, const GGMSDatum& d, WeylElt x, const Coweight& lambda) {
  std::set<Coweight> pts;
  for (WeylElt w : W.elements())
    if (W.bruhat_leq(w, x)) pts.insert(W.act(w, lambda));
  for (const auto& v : d.mu)
    if (!pts.count(v)) return false;
  for (const auto& p : pts)
    if (!contains(W, d, constant_datum(W, p))) return false;
  return true;
}

/// The extremal MV polytope P_{x.lambda}, assembled vertex by vertex from y-sequences
/// (mu_{w_l} = y_l . lambda). With all_words, every reduced word of w0 is used and any
/// disagreement raises InconsistentVertex; otherwise words are taken until every vertex is set.
inline MVPolytope extremal_polytope(const RootSystem& rs, WeylElt x, const Coweight& lambda, bool all_words = true) {
  if (!lambda.is_dominant()) throw NotDominant("extremal_polytope: " + lambda.str() + " is not dominant");
  if (lambda.rank() != rs.rank()) throw RankMismatch("extremal_polytope: lambda has wrong rank");
  const WeylGroup& W = rs.weyl();
  std::vector<std::optional<Coweight>> mu(W.size());
  std::size_t filled = 0;
  for (std::size_t u = 0; u < rs.words().size(); ++u) {
    if (!all_words && filled == W.size()) break;
    const YSequence s = y_sequence(rs, x, u);
    const auto& pre = rs.prefixes(u);
    for (std::size_t l = 0; l < pre.size(); ++l) {
      const Coweight v = W.act(s.y[l], lambda);
      auto& slot = mu[pre[l].id];
      if (!slot) {
        slot = v;
        ++filled;
      } else if (*slot != v) {
        throw InconsistentVertex("reduced words disagree on the vertex at " + W.word_string(pre[l]));
      }
    }
  }
  MVPolytope P;
  P.lambda = lambda;
  for (auto& v : mu) P.datum.mu.push_back(std::move(*v));
  if (!is_mv_datum(rs, P.datum)) throw InconsistentVertex("extremal datum is not an MV datum");
  if (!equals_bruhat_hull(W, P.datum, x, lambda))
    throw InconsistentVertex("extremal datum differs from Conv(W_{<=x} . lambda)");
  return P;
}

/// Lengths c_t of the full f-strings producing P_{x.lambda} along a reduced word (j_1..j_r) of x:
/// c_t = <s_{j_{t+1}} ... s_{j_r} lambda, alpha_{j_t}>.
inline std::vector<Int> extremal_string_lengths(const WeylGroup& W, const Word& word, const Coweight& lambda) {
  std::vector<Int> c(word.size());
  Coweight cur = lambda;
  for (std::size_t t = word.size(); t-- > 0;) {
    c[t] = cur.pair(word[t]);
    cur = cur - c[t] * W.cartan().simple_coroot(word[t]);
  }
  return c;
}

/// P_{x.lambda} as f_{j_1}^{c_1} ... f_{j_r}^{c_r} P_lambda along the ShortLex-least word of x.
inline MVPolytope extremal_by_strings(const RootSystem& rs, WeylElt x, const Coweight& lambda) {
  const Word& word = rs.weyl().word(x);
  const auto c = extremal_string_lengths(rs.weyl(), word, lambda);
  std::optional<MVPolytope> P = highest_polytope(rs, lambda);
  for (std::size_t t = word.size(); t-- > 0;) {
    P = f_power(rs, P, word[t], c[t]);
    if (!P) throw PathDeadEnd("extremal f-string ran off the crystal");
  }
  return *P;
}

/// A pair (w, j) with w < w s_j at which the extremal edge conditions fail.
struct EdgeViolation {
  WeylElt w;
  int j;
};

/// For every w < w s_j: mu_{w s_j} is mu_w or (w s_j w^{-1}) . mu_w, and <mu_{w s_j}, w . alpha_j> >= 0.
inline std::optional<EdgeViolation> check_extremal_edges(const WeylGroup& W, const GGMSDatum& d) {
  for (WeylElt w : W.elements()) {
    for (std::size_t jj = 0; jj < W.rank(); ++jj) {
      const int j = static_cast<int>(jj);
      const WeylElt ws = W.right_mul(w, j);
      if (W.length(ws) < W.length(w)) continue;
      const Coweight& a = d[ws];
      const Coweight& b = d[w];
      const bool shape = a == b || a == W.act(W.mul(ws, W.inverse(w)), b);
      const bool sign = WeylGroup::pair(a, W.act_root(w, W.simple_root(j))) >= 0;
      if (!shape || !sign) return EdgeViolation{w, j};
    }
  }
  return std::nullopt;
}

/// All extremal polytopes P_{x.lambda}, x in W^lambda_min, indexed by their lowest vertex x.lambda.
class ExtremalFamily {
 public:
  ExtremalFamily(RootSystemPtr rs, Coweight lambda) : rs_(std::move(rs)), lambda_(std::move(lambda)) {
    const WeylGroup& W = rs_->weyl();
    reps_ = W.min_coset_reps(lambda_);
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      polytopes_.push_back(extremal_polytope(*rs_, reps_[k], lambda_));
      by_weight_.emplace(W.act(reps_[k], lambda_), k);
    }
  }

  const Coweight& lambda() const { return lambda_; }
  const std::vector<WeylElt>& reps() const { return reps_; }

  /// P_{x.lambda} for any x (reduced to its minimal coset representative).
  const MVPolytope& polytope(WeylElt x) const {
    return polytopes_[by_weight_.at(rs_->weyl().act(x, lambda_))];
  }

  /// The x in W^lambda_min with P = P_{x.lambda}, if any.
  std::optional<WeylElt> find(const MVPolytope& P) const {
    if (P.lambda != lambda_) return std::nullopt;
    auto it = by_weight_.find(wt(P));
    if (it == by_weight_.end() || polytopes_[it->second].datum != P.datum) return std::nullopt;
    return reps_[it->second];
  }

 private:
  RootSystemPtr rs_;
  Coweight lambda_;
  std::vector<WeylElt> reps_;
  std::vector<MVPolytope> polytopes_;
  std::map<Coweight, std::size_t> by_weight_;
};

/// The x in W^lambda_min with P = P_{x.lambda}, or nothing.
inline std::optional<WeylElt> is_extremal(const RootSystem& rs, const MVPolytope& P) {
  const WeylGroup& W = rs.weyl();
  for (WeylElt x : W.min_coset_reps(P.lambda)) {
    if (W.act(x, P.lambda) != wt(P)) continue;
    if (extremal_polytope(rs, x, P.lambda, false).datum == P.datum) return x;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace mvcr
