#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvcr/character.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/extremal.hpp"
#include "mvcr/mvcrystal.hpp"
#include "mvcr/polytope.hpp"

namespace mvcr {

/// b_1 (x) b_2 (x) ... (x) b_N, with factors[0] leftmost. MV(lambda_2) (x) MV(lambda_1) is stored
/// with the lambda_2 factor first. Operators follow Kashiwara's rule, nested to the right:
/// b_1 (x) (b_2 (x) (... (x) b_N)).
struct TensorNode {
  std::vector<MVPolytope> factors;
  friend bool operator==(const TensorNode&, const TensorNode&) = default;
};

namespace detail {

struct StringData {
  Int eps;
  Int phi;
};

/// (epsilon, phi) of b (x) b' from those of b and b'.
inline StringData tensor_pair(StringData left, StringData right) {
  return {std::max(left.eps, left.eps + right.eps - left.phi), std::max(right.phi, left.phi + right.phi - right.eps)};
}

/// suffix[k] = string data of b_k (x) ... (x) b_N; suffix[N] is the empty product (0, 0).
inline std::vector<StringData> suffix_strings(const RootSystem& rs, const TensorNode& b, int j) {
  const std::size_t n = b.factors.size();
  std::vector<StringData> s(n + 1, StringData{0, 0});
  for (std::size_t k = n; k-- > 0;) {
    const StringData own{epsilon(rs, b.factors[k], j), phi(rs, b.factors[k], j)};
    s[k] = k + 1 == n ? own : tensor_pair(own, s[k + 1]);
  }
  return s;
}

}  // namespace detail

inline Coweight tensor_wt(const TensorNode& b) {
  Coweight w = wt(b.factors.front());
  for (std::size_t k = 1; k < b.factors.size(); ++k) w += wt(b.factors[k]);
  return w;
}

inline Int tensor_epsilon(const RootSystem& rs, const TensorNode& b, int j) {
  return detail::suffix_strings(rs, b, j).front().eps;
}

inline Int tensor_phi(const RootSystem& rs, const TensorNode& b, int j) {
  return detail::suffix_strings(rs, b, j).front().phi;
}

/// f_j acts on b_k for the first k with phi_j(b_k) > epsilon_j(b_{k+1} (x) ... (x) b_N).
inline std::optional<TensorNode> tensor_f(const RootSystem& rs, const TensorNode& b, int j) {
  const auto s = detail::suffix_strings(rs, b, j);
  const std::size_t n = b.factors.size();
  std::size_t k = 0;
  while (k + 1 < n && phi(rs, b.factors[k], j) <= s[k + 1].eps) ++k;
  auto moved = f(rs, b.factors[k], j);
  if (!moved) return std::nullopt;
  TensorNode out = b;
  out.factors[k] = std::move(*moved);
  return out;
}

/// e_j acts on b_k for the first k with phi_j(b_k) >= epsilon_j(b_{k+1} (x) ... (x) b_N).
inline std::optional<TensorNode> tensor_e(const RootSystem& rs, const TensorNode& b, int j) {
  const auto s = detail::suffix_strings(rs, b, j);
  const std::size_t n = b.factors.size();
  std::size_t k = 0;
  while (k + 1 < n && phi(rs, b.factors[k], j) < s[k + 1].eps) ++k;
  auto moved = e(rs, b.factors[k], j);
  if (!moved) return std::nullopt;
  TensorNode out = b;
  out.factors[k] = std::move(*moved);
  return out;
}

inline bool is_tensor_highest(const RootSystem& rs, const TensorNode& b) {
  for (std::size_t j = 0; j < rs.rank(); ++j)
    if (tensor_epsilon(rs, b, static_cast<int>(j)) > 0) return false;
  return true;
}

/// A connected component of a tensor product: its highest weight, highest element and its index
/// among the components of the same highest weight.
struct ComponentEmbedding {
  Coweight lambda;
  TensorNode highest;
  std::size_t index = 0;
};

/// All components of MV(lambda2) (x) MV(lambda1) (lambda2 factor on the left), ordered by the
/// scan over (left node, right node) in crystal order. The dimension count is checked.
inline std::vector<ComponentEmbedding> decompose(const MVCrystal& left, const MVCrystal& right) {
  const RootSystem& rs = left.root_system();
  const WeylGroup& W = rs.weyl();
  std::vector<ComponentEmbedding> out;
  std::map<Coweight, std::size_t> seen;
  for (const auto& P2 : left.nodes()) {
    bool top = true;
    for (std::size_t j = 0; j < rs.rank() && top; ++j) top = epsilon(rs, P2, static_cast<int>(j)) == 0;
    if (!top) continue;
    for (const auto& P1 : right.nodes()) {
      bool ok = true;
      for (std::size_t j = 0; j < rs.rank() && ok; ++j)
        ok = epsilon(rs, P1, static_cast<int>(j)) <= phi(rs, P2, static_cast<int>(j));
      if (!ok) continue;
      TensorNode b{{P2, P1}};
      const Coweight lam = tensor_wt(b);
      out.push_back(ComponentEmbedding{lam, std::move(b), seen[lam]++});
    }
  }
  Int total = 0;
  for (const auto& c : out) total += weyl_dimension(W, c.lambda);
  if (total != static_cast<Int>(left.size() * right.size()))
    throw Error("decompose: component dimensions do not add up to the product dimension");
  return out;
}

enum class PathChoice { Smallest, Largest };

/// Colours j_1, j_2, ... of a raising path e_{j_k} ... e_{j_1} P = P_lambda.
inline std::vector<int> raising_path(const RootSystem& rs, MVPolytope P, PathChoice choice = PathChoice::Smallest) {
  std::vector<int> path;
  for (;;) {
    int pick = -1;
    for (std::size_t jj = 0; jj < rs.rank(); ++jj) {
      const int j = static_cast<int>(choice == PathChoice::Smallest ? jj : rs.rank() - 1 - jj);
      if (epsilon(rs, P, j) > 0) {
        pick = j;
        break;
      }
    }
    if (pick < 0) break;
    auto up = e(rs, P, pick);
    if (!up) throw PathDeadEnd("raising path: e_j vanished although epsilon_j > 0");
    P = std::move(*up);
    path.push_back(pick);
  }
  if (P.datum != highest_polytope(rs, P.lambda).datum) throw PathDeadEnd("raising path did not end at P_lambda");
  return path;
}

/// Applies the reverse of a raising path to a tensor node with the tensor rule.
inline TensorNode apply_lowering(const RootSystem& rs, TensorNode b, const std::vector<int>& path) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto next = tensor_f(rs, b, *it);
    if (!next) throw PathDeadEnd("tensor f_j vanished along a lowering path");
    b = std::move(*next);
  }
  return b;
}

/// The image of P in MV(lambda) under the component embedding sending P_lambda to emb.highest.
inline TensorNode embed(const RootSystem& rs, const MVPolytope& P, const ComponentEmbedding& emb,
                        PathChoice choice = PathChoice::Smallest) {
  if (P.lambda != emb.lambda) throw RankMismatch("embed: polytope and component have different highest weights");
  return apply_lowering(rs, emb.highest, raising_path(rs, P, choice));
}

/// S_N: P -> N . P in MV(N lambda).
inline MVPolytope s_multiple(const MVPolytope& P, Int n) { return MVPolytope{scale(P.datum, n), n * P.lambda}; }

/// G_N: MV(N lambda) -> MV(lambda)^{(x) N}, sending P_{N lambda} to P_lambda^{(x) N}.
inline TensorNode g_embed(const RootSystem& rs, const MVPolytope& Q, Int n, PathChoice choice = PathChoice::Smallest) {
  if (n < 1) throw Error("g_embed: N must be positive");
  Coweight lam(Q.lambda.rank());
  for (std::size_t k = 0; k < lam.rank(); ++k) {
    if (Q.lambda[k] % n != 0) throw NotDominant("g_embed: highest weight is not divisible by N");
    lam[k] = Q.lambda[k] / n;
  }
  TensorNode top{std::vector<MVPolytope>(static_cast<std::size_t>(n), highest_polytope(rs, lam))};
  return apply_lowering(rs, std::move(top), raising_path(rs, Q, choice));
}

/// K_N = G_N o S_N.
inline TensorNode k_multiple(const RootSystem& rs, const MVPolytope& P, Int n, PathChoice choice = PathChoice::Smallest) {
  return g_embed(rs, s_multiple(P, n), n, choice);
}

/// K_N(P) = P_{x_1.lambda} (x) ... (x) P_{x_N.lambda}.
struct Factorization {
  Int n = 0;
  std::vector<WeylElt> xs;
};

/// Smallest N <= nmax with every factor of K_N(P) extremal. Throws NotFound if there is none, and
/// Error if the factors are not weakly decreasing in the Bruhat order.
inline Factorization extremal_factorization(const RootSystem& rs, const MVPolytope& P, const ExtremalFamily& family,
                                            Int nmax) {
  if (nmax < 1) throw Error("extremal_factorization: nmax must be positive");
  const WeylGroup& W = rs.weyl();
  for (Int n = 1; n <= nmax; ++n) {
    const TensorNode b = k_multiple(rs, P, n);
    Factorization fz{n, {}};
    for (const auto& Q : b.factors) {
      auto x = family.find(Q);
      if (!x) break;
      fz.xs.push_back(*x);
    }
    if (fz.xs.size() != b.factors.size()) continue;
    for (std::size_t k = 1; k < fz.xs.size(); ++k)
      if (!W.bruhat_leq(fz.xs[k], fz.xs[k - 1])) throw Error("extremal factorization is not Bruhat-decreasing");
    return fz;
  }
  throw NotFound("no extremal factorization with N <= " + std::to_string(nmax), static_cast<long>(nmax));
}

/// The piecewise-linear path t -> sum of (1/N) x_l . lambda over the factors: the distinct
/// directions in order and the breakpoints 0 = t_0 < t_1 < ... < t_s = 1 between them.
struct LSPath {
  Int n = 0;
  std::vector<Coweight> directions;
  std::vector<Rational> breaks;
  Coweight endpoint;  // pi(1)
};

/// Builds the path of a factorization of P and checks pi(1) = wt(P), weakly decreasing
/// directions, and pi(k/N) in (k/N) Conv(W . lambda) for every k.
inline LSPath ls_path(const RootSystem& rs, const MVPolytope& P, const Factorization& fz) {
  const WeylGroup& W = rs.weyl();
  LSPath path;
  path.n = fz.n;
  path.breaks.push_back(Rational(0));
  Coweight sum(P.lambda.rank());
  for (std::size_t k = 0; k < fz.xs.size(); ++k) {
    const Coweight dir = W.act(fz.xs[k], P.lambda);
    if (path.directions.empty() || path.directions.back() != dir) {
      if (!path.directions.empty()) path.breaks.push_back(Rational(static_cast<Int>(k), fz.n));
      path.directions.push_back(dir);
    }
    if (k > 0 && !W.bruhat_leq(fz.xs[k], fz.xs[k - 1])) throw Error("ls_path: directions are not decreasing");
    sum += dir;
    if (!in_worbit_hull_scaled(W, sum, static_cast<Int>(k + 1), P.lambda))
      throw OutsideHull("ls_path: path point leaves the scaled orbit hull");
  }
  path.breaks.push_back(Rational(1));
  if (sum != fz.n * wt(P)) throw Error("ls_path: endpoint differs from wt(P)");
  path.endpoint = wt(P);
  return path;
}

}  // namespace mvcr
