#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/parallel.hpp"
#include "mvcr/polytope.hpp"
#include "mvcr/root_system.hpp"

namespace mvcr {

/// Edge lengths along one reduced word of w0 (given by its index in RootSystem::words()).
struct LusztigDatum {
  std::size_t word = 0;
  std::vector<Int> n;
  friend bool operator==(const LusztigDatum&, const LusztigDatum&) = default;
};

/// An MV polytope in MV(lambda): its GGMS datum together with the highest vertex lambda.
struct MVPolytope {
  GGMSDatum datum;
  Coweight lambda;
  friend bool operator==(const MVPolytope&, const MVPolytope&) = default;
};

/// The length transformation of a 2-move (swap) or 3-move (tropical Plucker relation) at offset k.
inline std::vector<Int> transform_lengths(MoveKind kind, std::size_t k, std::vector<Int> n) {
  if (kind == MoveKind::Two) {
    if (k + 2 > n.size()) throw InvalidMove("2-move offset out of range");
    std::swap(n[k], n[k + 1]);
    return n;
  }
  if (k + 3 > n.size()) throw InvalidMove("3-move offset out of range");
  const Int a = n[k], b = n[k + 1], c = n[k + 2];
  const Int m = std::min(a, c);
  n[k] = b + c - m;
  n[k + 1] = m;
  n[k + 2] = a + b - m;
  return n;
}

inline LusztigDatum apply_move(const RootSystem& rs, const LusztigDatum& L, const MoveEdge& edge) {
  if (edge.from != L.word) throw InvalidMove("move edge does not start at the datum's word");
  if (L.n.size() != rs.num_positive_roots()) throw InvalidMove("Lusztig datum has wrong length");
  return LusztigDatum{edge.to, transform_lengths(edge.kind, edge.k, L.n)};
}

/// Move transport: carries L to every word of R(w0) and reads off all vertices with mu_{w0} fixed
/// to `top`. No hull check. Throws InconsistentTransport on conflicting vertices.
inline GGMSDatum transport_datum(const RootSystem& rs, const Coweight& top, const LusztigDatum& L) {
  const std::size_t m = rs.num_positive_roots();
  if (L.n.size() != m) throw InvalidMove("Lusztig datum has wrong length");
  if (top.rank() != rs.rank()) throw RankMismatch("highest vertex has wrong rank");
  for (Int x : L.n)
    if (x < 0) throw InvalidMove("Lusztig datum entries must be nonnegative");
  const WeylGroup& W = rs.weyl();
  std::vector<std::optional<Coweight>> mu(W.size());
  std::vector<std::vector<Int>> lengths(rs.words().size());
  for (const auto& [u, e] : rs.bfs_from(L.word)) {
    if (e == static_cast<std::size_t>(-1)) {
      lengths[u] = L.n;
    } else {
      const MoveEdge& edge = rs.edges()[e];
      lengths[u] = transform_lengths(edge.kind, edge.k, lengths[edge.from]);
    }
    const auto& pre = rs.prefixes(u);
    const auto& dir = rs.edge_directions(u);
    Coweight cur = top;
    for (std::size_t l = m + 1; l-- > 0;) {
      if (l < m) cur -= lengths[u][l] * dir[l];
      auto& slot = mu[pre[l].id];
      if (!slot) {
        slot = cur;
      } else if (*slot != cur) {
        throw InconsistentTransport("move transport assigns two vertices to Weyl element " +
                                    W.word_string(pre[l]));
      }
    }
  }
  GGMSDatum d;
  d.mu.reserve(W.size());
  for (auto& v : mu) d.mu.push_back(std::move(*v));
  return d;
}

inline bool inside_orbit_hull(const WeylGroup& W, const GGMSDatum& d, const Coweight& lambda) {
  for (const auto& v : d.vertices())
    if (!in_worbit_hull(W, v, lambda)) return false;
  return true;
}

/// Builds the MV polytope in MV(lambda) with Lusztig datum L.
inline MVPolytope polytope_from_lusztig(const RootSystem& rs, const Coweight& lambda, const LusztigDatum& L) {
  if (!lambda.is_dominant()) throw NotDominant("polytope_from_lusztig: " + lambda.str() + " is not dominant");
  GGMSDatum d = transport_datum(rs, lambda, L);
  if (!inside_orbit_hull(rs.weyl(), d, lambda))
    throw OutsideHull("Lusztig datum does not define an element of MV(" + lambda.str() + ")");
  return MVPolytope{std::move(d), lambda};
}

/// GGMS datum whose edge lengths satisfy the 2-/3-move relations across the whole move graph.
inline bool is_mv_datum(const RootSystem& rs, const GGMSDatum& d) {
  if (!is_ggms(rs.weyl(), d)) return false;
  std::vector<std::vector<Int>> lengths;
  lengths.reserve(rs.words().size());
  for (std::size_t u = 0; u < rs.words().size(); ++u) {
    try {
      lengths.push_back(edge_lengths(rs, d, u));
    } catch (const NotProportional&) {
      return false;
    }
  }
  for (const MoveEdge& e : rs.edges())
    if (transform_lengths(e.kind, e.k, lengths[e.from]) != lengths[e.to]) return false;
  return true;
}

inline LusztigDatum lusztig_datum(const RootSystem& rs, const MVPolytope& P, std::size_t word) {
  return LusztigDatum{word, edge_lengths(rs, P.datum, word)};
}

inline const Coweight& wt(const MVPolytope& P) { return P.datum.mu.front(); }

/// mu_{s_j} - mu_e = epsilon_j h_j.
inline Int epsilon(const RootSystem& rs, const MVPolytope& P, int j) {
  const WeylGroup& W = rs.weyl();
  const auto c = proportional_coefficient(P.datum[W.generator(j)] - P.datum[W.identity()],
                                          rs.cartan().simple_coroot(j));
  if (!c || *c < 0) throw NotProportional("mu_{s_j} - mu_e is not a nonnegative multiple of h_j");
  return *c;
}

inline Int phi(const RootSystem& rs, const MVPolytope& P, int j) { return wt(P).pair(j) + epsilon(rs, P, j); }

namespace detail {
inline MVPolytope shift_first_length(const RootSystem& rs, const MVPolytope& P, int j, Int delta) {
  const std::size_t word = rs.first_word_starting_with(j);
  LusztigDatum L = lusztig_datum(rs, P, word);
  L.n.front() += delta;
  return MVPolytope{transport_datum(rs, P.lambda, L), P.lambda};
}
}  // namespace detail

/// Lowering operator: +1 on the first Lusztig coordinate of the least word of w0 starting with j.
/// Null iff phi_j(P) = 0.
inline std::optional<MVPolytope> f(const RootSystem& rs, const MVPolytope& P, int j) {
  if (phi(rs, P, j) == 0) return std::nullopt;
  return detail::shift_first_length(rs, P, j, +1);
}

/// Raising operator; null iff epsilon_j(P) = 0.
inline std::optional<MVPolytope> e(const RootSystem& rs, const MVPolytope& P, int j) {
  if (epsilon(rs, P, j) == 0) return std::nullopt;
  return detail::shift_first_length(rs, P, j, -1);
}

/// f_j decided geometrically: null iff the rebuilt polytope leaves Conv(W . lambda).
inline std::optional<MVPolytope> f_geometric(const RootSystem& rs, const MVPolytope& P, int j) {
  MVPolytope Q = detail::shift_first_length(rs, P, j, +1);
  if (!inside_orbit_hull(rs.weyl(), Q.datum, P.lambda)) return std::nullopt;
  return Q;
}

/// f_j with an explicit choice of reduced word (which must start with j).
inline std::optional<MVPolytope> f_via_word(const RootSystem& rs, const MVPolytope& P, int j, std::size_t word) {
  if (rs.words()[word].front() != j) throw NoWordStartingWith("f_via_word: word does not start with j");
  if (phi(rs, P, j) == 0) return std::nullopt;
  LusztigDatum L = lusztig_datum(rs, P, word);
  L.n.front() += 1;
  return MVPolytope{transport_datum(rs, P.lambda, L), P.lambda};
}

inline std::optional<MVPolytope> f_power(const RootSystem& rs, std::optional<MVPolytope> P, int j, Int k) {
  for (Int t = 0; t < k && P; ++t) P = f(rs, *P, j);
  return P;
}

inline std::optional<MVPolytope> e_power(const RootSystem& rs, std::optional<MVPolytope> P, int j, Int k) {
  for (Int t = 0; t < k && P; ++t) P = e(rs, *P, j);
  return P;
}

/// The highest weight element P_lambda = {lambda}.
inline MVPolytope highest_polytope(const RootSystem& rs, const Coweight& lambda) {
  if (!lambda.is_dominant()) throw NotDominant(lambda.str() + " is not dominant");
  return MVPolytope{constant_datum(rs.weyl(), lambda), lambda};
}

/// The lowest weight element Conv(W . lambda).
inline MVPolytope lowest_polytope(const RootSystem& rs, const Coweight& lambda) {
  return MVPolytope{orbit_hull_datum(rs.weyl(), lambda), lambda};
}

/// MV(lambda) as a crystal graph. Node 0 is P_lambda; nodes are in breadth-first discovery order
/// (by depth, then by parent and colour), which does not depend on the number of threads.
class MVCrystal {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  MVCrystal(RootSystemPtr rs, Coweight lambda) : rs_(std::move(rs)), lambda_(std::move(lambda)) {}

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const Coweight& lambda() const { return lambda_; }
  std::size_t size() const { return nodes_.size(); }
  const MVPolytope& node(std::size_t k) const { return nodes_[k]; }
  const std::vector<MVPolytope>& nodes() const { return nodes_; }

  /// Target of the j-coloured f-edge out of node k, or npos.
  std::size_t f_edge(std::size_t k, int j) const { return f_[k * rs_->rank() + j]; }
  std::size_t e_edge(std::size_t k, int j) const { return e_[k * rs_->rank() + j]; }

  std::optional<std::size_t> find(const GGMSDatum& d) const {
    auto it = index_.find(d);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find(const MVPolytope& P) const { return find(P.datum); }

  std::size_t highest() const { return 0; }
  std::size_t lowest() const { return *find(orbit_hull_datum(rs_->weyl(), lambda_)); }

  /// Appends a node (used by generate_mv and the JSON importer).
  std::size_t add(MVPolytope P) {
    auto [it, fresh] = index_.try_emplace(P.datum, nodes_.size());
    if (fresh) {
      nodes_.push_back(std::move(P));
      f_.resize(nodes_.size() * rs_->rank(), npos);
      e_.resize(nodes_.size() * rs_->rank(), npos);
    }
    return it->second;
  }
  void link(std::size_t from, int j, std::size_t to) {
    f_[from * rs_->rank() + j] = to;
    e_[to * rs_->rank() + j] = from;
  }

 private:
  RootSystemPtr rs_;
  Coweight lambda_;
  std::vector<MVPolytope> nodes_;
  std::vector<std::size_t> f_;
  std::vector<std::size_t> e_;
  std::unordered_map<GGMSDatum, std::size_t, GGMSDatumHash> index_;
};

/// Closure of {P_lambda} under all f_j. Each breadth-first level is expanded in parallel and
/// merged in (parent, colour) order.
inline MVCrystal generate_mv(RootSystemPtr rsp, const Coweight& lambda, unsigned jobs = 1) {
  const RootSystem& rs = *rsp;
  if (!lambda.is_dominant()) throw NotDominant("generate_mv: " + lambda.str() + " is not dominant");
  if (lambda.rank() != rs.rank()) throw RankMismatch("generate_mv: lambda has wrong rank");
  MVCrystal cr(rsp, lambda);
  cr.add(highest_polytope(rs, lambda));
  const std::size_t r = rs.rank();
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::optional<MVPolytope>> out(frontier.size() * r);
    parallel_for(out.size(), jobs, [&](std::size_t k) {
      out[k] = f(rs, cr.node(frontier[k / r]), static_cast<int>(k % r));
    });
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!out[k]) continue;
      const std::size_t before = cr.size();
      const std::size_t id = cr.add(std::move(*out[k]));
      if (id == before) next.push_back(id);
      cr.link(frontier[k / r], static_cast<int>(k % r), id);
    }
    frontier = std::move(next);
  }
  return cr;
}

}  // namespace mvcr
