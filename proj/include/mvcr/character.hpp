#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "mvcr/cartan.hpp"
#include "mvcr/coweight.hpp"
#include "mvcr/errors.hpp"
#include "mvcr/polytope.hpp"
#include "mvcr/weyl.hpp"

namespace mvcr {

/// Element of the group ring of the coweight lattice: coefficient of e^mu for each mu.
/// Zero coefficients are never stored.
using Character = std::map<Coweight, Int>;

inline void add_term(Character& ch, const Coweight& mu, Int c) {
  if (c == 0) return;
  auto [it, fresh] = ch.try_emplace(mu, c);
  if (!fresh && (it->second += c) == 0) ch.erase(it);
}

/// Demazure operator D_j e^mu = (e^mu - e^{s_j mu - h_j}) / (1 - e^{-h_j}), extended linearly.
inline Character demazure_operator(const CartanDatum& cd, const Character& ch, int j) {
  const Coweight h = cd.simple_coroot(j);
  Character out;
  for (const auto& [mu, c] : ch) {
    const Int n = mu.pair(j);
    if (n >= 0) {
      for (Int k = 0; k <= n; ++k) add_term(out, mu - k * h, c);
    } else {
      for (Int k = 1; k <= -n - 1; ++k) add_term(out, mu + k * h, -c);
    }
  }
  return out;
}

/// D_{j_1} ... D_{j_r} e^lambda along the ShortLex-least word of x (D_{j_r} applied first).
inline Character demazure_character(const WeylGroup& W, WeylElt x, const Coweight& lambda) {
  if (!lambda.is_dominant()) throw NotDominant("demazure_character: " + lambda.str() + " is not dominant");
  Character ch{{lambda, 1}};
  const Word& w = W.word(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it) ch = demazure_operator(W.cartan(), ch, *it);
  return ch;
}

/// prod over positive roots beta of <lambda + rho, beta> / <rho, beta>.
inline Int weyl_dimension(const WeylGroup& W, const Coweight& lambda) {
  Rational d = 1;
  for (const auto& beta : W.positive_roots()) {
    Int num = 0, ht = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) {
      num += beta[k] * (lambda[k] + 1);
      ht += beta[k];
    }
    d *= Rational(num, ht);
  }
  return boost::rational_cast<Int>(d);
}

/// Weight multiplicities of the irreducible module of highest weight lambda by Freudenthal's
/// recursion, with (h_i, h_j) = a_ij.
inline Character freudenthal(const WeylGroup& W, const Coweight& lambda) {
  if (!lambda.is_dominant()) throw NotDominant("freudenthal: " + lambda.str() + " is not dominant");
  const CartanDatum& cd = W.cartan();
  const std::size_t n = W.rank();
  // (u, v) = u^T A^{-1} v in fundamental coordinates; scaled by det to stay integral.
  auto form = [&](const Coweight& u, const Coweight& v) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += u[i] * cd.adjugate()[i][j] * v[j];
    return s;
  };
  Coweight rho(n);
  for (std::size_t k = 0; k < n; ++k) rho[k] = 1;
  std::vector<Coweight> roots;
  for (const auto& beta : W.positive_roots()) roots.push_back(W.coroot(beta));
  const Int top = form(lambda + rho, lambda + rho);

  Character mult{{lambda, 1}};
  std::set<Coweight> seen{lambda};
  std::vector<Coweight> level{lambda};
  while (!level.empty()) {
    std::vector<Coweight> next;
    for (const auto& mu : level)
      for (std::size_t i = 0; i < n; ++i) {
        const Coweight nu = mu - cd.simple_coroot(i);
        if (seen.count(nu) || !in_worbit_hull(W, nu, lambda)) continue;
        seen.insert(nu);
        next.push_back(nu);
      }
    for (const auto& mu : next) {
      Int s = 0;
      for (const auto& beta : roots)
        for (Coweight up = mu + beta; seen.count(up); up += beta) {
          auto it = mult.find(up);
          if (it != mult.end()) s += 2 * it->second * form(up, beta);
        }
      const Int denom = top - form(mu + rho, mu + rho);
      if (denom == 0 || s % denom != 0) throw Error("freudenthal: non-integral multiplicity");
      add_term(mult, mu, s / denom);
    }
    level = std::move(next);
  }
  return mult;
}

}  // namespace mvcr
