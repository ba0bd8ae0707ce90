#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/root_system.hpp"
#include "mvcr/weyl.hpp"

namespace mvcr {

/// GGMS datum: one coweight per Weyl element, indexed by WeylElt::id. A pseudo-Weyl polytope is
/// identified with its datum; the datum determines the polytope and vice versa.
struct GGMSDatum {
  std::vector<Coweight> mu;

  const Coweight& operator[](WeylElt w) const { return mu[w.id]; }
  Coweight& operator[](WeylElt w) { return mu[w.id]; }
  std::size_t size() const { return mu.size(); }

  /// Vertex set without repetitions, sorted.
  std::vector<Coweight> vertices() const {
    std::set<Coweight> s(mu.begin(), mu.end());
    return {s.begin(), s.end()};
  }

  friend bool operator==(const GGMSDatum&, const GGMSDatum&) = default;
  friend auto operator<=>(const GGMSDatum&, const GGMSDatum&) = default;
};

struct GGMSDatumHash {
  std::size_t operator()(const GGMSDatum& d) const noexcept {
    std::size_t h = 0;
    CoweightHash ch;
    for (const auto& v : d.mu) h = h * 1000003u ^ ch(v);
    return h;
  }
};

inline GGMSDatum constant_datum(const WeylGroup& W, const Coweight& v) {
  return GGMSDatum{std::vector<Coweight>(W.size(), v)};
}

/// Datum of Conv(W . lambda) for dominant lambda: mu_w = w w0 . lambda.
inline GGMSDatum orbit_hull_datum(const WeylGroup& W, const Coweight& lambda) {
  if (!lambda.is_dominant()) throw NotDominant("orbit hull needs a dominant coweight, got " + lambda.str());
  const Coweight low = W.act(W.longest(), lambda);
  GGMSDatum d;
  d.mu.reserve(W.size());
  for (WeylElt w : W.elements()) d.mu.push_back(W.act(w, low));
  return d;
}

/// c with diff = c * dir, if one exists. `dir` must be nonzero.
inline std::optional<Int> proportional_coefficient(const Coweight& diff, const Coweight& dir) {
  std::size_t k = 0;
  while (k < dir.rank() && dir[k] == 0) ++k;
  if (k == dir.rank()) return std::nullopt;
  if (diff[k] % dir[k] != 0) return std::nullopt;
  const Int c = diff[k] / dir[k];
  if (diff != c * dir) return std::nullopt;
  return c;
}

/// mu_{w s_i} - mu_w in Z_{>=0} (w . h_i) for all w, i (checked in the direction l(w s_i) > l(w)).
inline bool is_ggms(const WeylGroup& W, const GGMSDatum& d) {
  if (d.size() != W.size()) return false;
  const CartanDatum& cd = W.cartan();
  for (WeylElt w : W.elements()) {
    for (std::size_t i = 0; i < W.rank(); ++i) {
      const WeylElt ws = W.right_mul(w, static_cast<int>(i));
      if (W.length(ws) < W.length(w)) continue;
      const auto c = proportional_coefficient(d[ws] - d[w], W.act(w, cd.simple_coroot(i)));
      if (!c || *c < 0) return false;
    }
  }
  return true;
}

/// Lusztig datum (N^i_1, ..., N^i_m) of a GGMS datum along the reduced word with the given index.
inline std::vector<Int> edge_lengths(const RootSystem& rs, const GGMSDatum& d, std::size_t word) {
  const auto& pre = rs.prefixes(word);
  const auto& dir = rs.edge_directions(word);
  std::vector<Int> n(dir.size());
  for (std::size_t l = 0; l < dir.size(); ++l) {
    const auto c = proportional_coefficient(d[pre[l + 1]] - d[pre[l]], dir[l]);
    if (!c || *c < 0)
      throw NotProportional("edge " + std::to_string(l + 1) + " of word " + std::to_string(word) +
                            " is not a nonnegative multiple of its coroot direction");
    n[l] = *c;
  }
  return n;
}

inline GGMSDatum minkowski_sum(const GGMSDatum& a, const GGMSDatum& b) {
  if (a.size() != b.size()) throw RankMismatch("Minkowski sum of data over different Weyl groups");
  GGMSDatum out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.mu[k] += b.mu[k];
  return out;
}

inline GGMSDatum scale(const GGMSDatum& d, Int n) {
  if (n < 1) throw Error("scale factor must be a positive integer");
  GGMSDatum out = d;
  for (auto& v : out.mu) v *= n;
  return out;
}

/// A vertex of the inner polytope (at chamber `vertex`) lying outside the cone of the outer
/// polytope at chamber `chamber`.
struct ContainmentWitness {
  WeylElt vertex;
  WeylElt chamber;
  Coweight point;
};

/// Cone test: inner is contained in outer iff every vertex v of inner satisfies
/// w^{-1}(v - mu^outer_w) in sum_j R_{>=0} h_j for every chamber w. Returns the first violation in
/// (chamber, vertex) order, or nothing if inner is contained in outer.
inline std::optional<ContainmentWitness> containment_witness(const WeylGroup& W, const GGMSDatum& outer,
                                                             const GGMSDatum& inner) {
  const CartanDatum& cd = W.cartan();
  // First chamber at which each distinct vertex occurs.
  std::vector<std::pair<Coweight, WeylElt>> verts;
  {
    std::set<Coweight> seen;
    for (WeylElt w : W.elements())
      if (seen.insert(inner[w]).second) verts.emplace_back(inner[w], w);
  }
  for (WeylElt w : W.elements()) {
    const WeylElt winv = W.inverse(w);
    for (const auto& [v, at] : verts) {
      if (!cd.in_positive_coroot_cone(W.act(winv, v - outer[w]))) return ContainmentWitness{at, w, v};
    }
  }
  return std::nullopt;
}

inline bool contains(const WeylGroup& W, const GGMSDatum& outer, const GGMSDatum& inner) {
  return !containment_witness(W, outer, inner).has_value();
}

/// Dominant element of the W-orbit of v, by repeated simple reflections.
inline Coweight dominant_translate(const WeylGroup& W, Coweight v) {
  const CartanDatum& cd = W.cartan();
  for (;;) {
    std::size_t i = 0;
    while (i < v.rank() && v[i] >= 0) ++i;
    if (i == v.rank()) return v;
    v = v - v[i] * cd.simple_coroot(i);
  }
}

/// Exact membership of the rational point numerator/denominator in Conv(W . lambda).
inline bool in_worbit_hull_scaled(const WeylGroup& W, const Coweight& numerator, Int denominator,
                                  const Coweight& lambda) {
  if (!lambda.is_dominant()) throw NotDominant("in_worbit_hull: " + lambda.str() + " is not dominant");
  if (denominator <= 0) throw Error("in_worbit_hull: denominator must be positive");
  return W.cartan().in_positive_coroot_cone(denominator * lambda - dominant_translate(W, numerator));
}

/// v in Conv(W . lambda) iff lambda - dom(v) lies in the positive coroot cone.
inline bool in_worbit_hull(const WeylGroup& W, const Coweight& v, const Coweight& lambda) {
  return in_worbit_hull_scaled(W, v, 1, lambda);
}

/// Rational point given coordinatewise; scaled to a common denominator internally.
inline bool in_worbit_hull(const WeylGroup& W, const std::vector<Rational>& v, const Coweight& lambda) {
  Int den = 1;
  for (const auto& c : v) den = std::lcm(den, c.denominator());
  Coweight num(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) num[k] = (v[k] * den).numerator();
  return in_worbit_hull_scaled(W, num, den, lambda);
}

}  // namespace mvcr
