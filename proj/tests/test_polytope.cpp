#include <gtest/gtest.h>

#include <random>

#include "mvcr/mvcrystal.hpp"
#include "mvcr/polytope.hpp"
#include "oracles.hpp"

using namespace mvcr;

TEST(Polytope, OrbitHullIsGGMS) {
  const WeylGroup W(build_cartan("A2"));
  const auto d = orbit_hull_datum(W, Coweight{1, 1});
  EXPECT_TRUE(is_ggms(W, d));
  EXPECT_EQ(d.vertices().size(), 6u);
  EXPECT_EQ(d[W.longest()], (Coweight{1, 1}));
  EXPECT_EQ(d[W.identity()], (Coweight{-1, -1}));
  EXPECT_TRUE(is_ggms(W, constant_datum(W, Coweight{3, -7})));
  EXPECT_THROW(orbit_hull_datum(W, Coweight{1, -1}), NotDominant);
}

TEST(Polytope, PerturbedDatumIsNotGGMS) {
  const WeylGroup W(build_cartan("A2"));
  auto d = orbit_hull_datum(W, Coweight{1, 1});
  d[W.generator(0)] += Coweight{1, 0};
  EXPECT_FALSE(is_ggms(W, d));
  // Reversed orientation: mu_{s_i} - mu_e a negative multiple of h_i.
  const auto rev = orbit_hull_datum(W, Coweight{1, 1});
  GGMSDatum flipped = rev;
  for (auto& v : flipped.mu) v = -v;
  EXPECT_FALSE(is_ggms(W, flipped));
}

TEST(Polytope, ProportionalCoefficient) {
  EXPECT_EQ(proportional_coefficient(Coweight{4, -2}, Coweight{2, -1}), 2);
  EXPECT_EQ(proportional_coefficient(Coweight{-2, 1}, Coweight{2, -1}), -1);
  EXPECT_EQ(proportional_coefficient(Coweight{0, 0}, Coweight{2, -1}), 0);
  EXPECT_FALSE(proportional_coefficient(Coweight{1, 0}, Coweight{2, -1}));
  EXPECT_FALSE(proportional_coefficient(Coweight{3, -1}, Coweight{2, -1}));
  EXPECT_FALSE(proportional_coefficient(Coweight{1, 1}, Coweight{0, 0}));
}

TEST(Polytope, HexagonLusztigDatum) {
  const auto rs = RootSystem::make("A2");
  const auto d = orbit_hull_datum(rs->weyl(), Coweight{1, 1});
  for (std::size_t u = 0; u < rs->words().size(); ++u) EXPECT_EQ(edge_lengths(*rs, d, u), (std::vector<Int>{1, 1, 1}));
}

TEST(Polytope, WOrbitHullMatchesCaratheodory) {
  for (const char* type : {"A2", "A1xA1"}) {
    const WeylGroup W(build_cartan(type));
    for (const Coweight lam : {Coweight{1, 1}, Coweight{2, 0}, Coweight{0, 1}, Coweight{0, 0}}) {
      std::vector<Coweight> orbit;
      for (WeylElt w : W.elements()) orbit.push_back(W.act(w, lam));
      for (Int a = -4; a <= 4; ++a)
        for (Int b = -4; b <= 4; ++b) {
          const Coweight v{a, b};
          ASSERT_EQ(in_worbit_hull(W, v, lam), oracle::in_convex_hull(orbit, v)) << type << lam << v;
        }
      // Rational points with denominator 3.
      for (Int a = -6; a <= 6; ++a)
        for (Int b = -6; b <= 6; ++b) {
          const std::vector<Rational> p{Rational(a, 3), Rational(b, 3)};
          ASSERT_EQ(in_worbit_hull(W, p, lam), oracle::in_convex_hull(orbit, p));
        }
    }
  }
}

TEST(Polytope, DominantTranslate) {
  const WeylGroup W(build_cartan("A3"));
  const Coweight lam{2, 0, 1};
  for (WeylElt w : W.elements()) EXPECT_EQ(dominant_translate(W, W.act(w, lam)), lam);
}

TEST(Polytope, ContainmentMatchesCaratheodory) {
  const auto rs = RootSystem::make("A2");
  const WeylGroup& W = rs->weyl();
  std::vector<GGMSDatum> data;
  for (const Coweight lam : {Coweight{1, 1}, Coweight{2, 0}, Coweight{1, 0}}) {
    const auto cr = generate_mv(rs, lam);
    for (const auto& P : cr.nodes()) data.push_back(P.datum);
  }
  for (const auto& outer : data) {
    const auto ov = outer.vertices();
    for (const auto& inner : data) {
      bool expect = true;
      for (const auto& v : inner.vertices()) expect = expect && oracle::in_convex_hull(ov, v);
      const auto wit = containment_witness(W, outer, inner);
      ASSERT_EQ(!wit.has_value(), expect);
      if (wit) {
        // The certificate is a vertex of inner outside the shifted cone at the named chamber.
        EXPECT_EQ(inner[wit->vertex], wit->point);
        EXPECT_FALSE(W.cartan().in_positive_coroot_cone(
            W.act(W.inverse(wit->chamber), wit->point - outer[wit->chamber])));
        EXPECT_FALSE(oracle::in_convex_hull(ov, wit->point));
      }
    }
  }
}

TEST(Polytope, MinkowskiSumLaws) {
  const auto rs = RootSystem::make("A2");
  const auto cr = generate_mv(rs, Coweight{1, 1});
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, cr.size() - 1);
  for (int t = 0; t < 40; ++t) {
    const auto& a = cr.node(pick(rng)).datum;
    const auto& b = cr.node(pick(rng)).datum;
    const auto& c = cr.node(pick(rng)).datum;
    EXPECT_EQ(minkowski_sum(a, b), minkowski_sum(b, a));
    EXPECT_EQ(minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c)));
    EXPECT_TRUE(is_ggms(rs->weyl(), minkowski_sum(a, b)));
  }
  for (const auto& P : cr.nodes()) {
    GGMSDatum acc = P.datum;
    for (Int n = 2; n <= 4; ++n) {
      acc = minkowski_sum(acc, P.datum);
      EXPECT_EQ(scale(P.datum, n), acc);
    }
  }
  EXPECT_THROW(scale(cr.node(0).datum, 0), Error);
}

TEST(Polytope, SumOfHullsIsHullOfSum) {
  // Vertexwise sum of the two orbit hulls equals the orbit hull of the sum, as point sets.
  const WeylGroup W(build_cartan("A2"));
  const auto s = minkowski_sum(orbit_hull_datum(W, Coweight{1, 0}), orbit_hull_datum(W, Coweight{0, 1}));
  EXPECT_EQ(s, orbit_hull_datum(W, Coweight{1, 1}));
}
