#include <gtest/gtest.h>

#include <map>
#include <queue>

#include "mvcr/mvcrystal.hpp"
#include "oracles.hpp"

using namespace mvcr;

namespace {

std::map<Coweight, Int> weights(const MVCrystal& cr) {
  std::map<Coweight, Int> m;
  for (const auto& P : cr.nodes()) ++m[wt(P)];
  return m;
}

}  // namespace

TEST(MVCrystal, SizesMatchWeylDimension) {
  const std::vector<std::pair<const char*, Coweight>> cases{
      {"A1", Coweight{2}},           {"A2", Coweight{1, 0}},    {"A2", Coweight{0, 1}},
      {"A2", Coweight{1, 1}},        {"A2", Coweight{2, 0}},    {"A2", Coweight{2, 1}},
      {"A3", Coweight{1, 0, 0}},     {"A3", Coweight{0, 1, 0}}, {"A3", Coweight{1, 0, 1}},
      {"A1xA1", Coweight{1, 1}},     {"A1xA2", Coweight{1, 1, 0}},
      {"D4", Coweight{1, 0, 0, 0}},
  };
  for (const auto& [type, lam] : cases) {
    const auto rs = RootSystem::make(type);
    const auto cr = generate_mv(rs, lam);
    EXPECT_EQ(static_cast<Int>(cr.size()), oracle::weyl_dimension(rs->weyl(), lam)) << type << lam;
    EXPECT_EQ(weights(cr), oracle::freudenthal(rs->weyl(), lam)) << type << lam;
  }
}

TEST(MVCrystal, TrivialAndA1) {
  const auto rs = RootSystem::make("A2");
  EXPECT_EQ(generate_mv(rs, Coweight{0, 0}).size(), 1u);
  const auto a1 = RootSystem::make("A1");
  const auto cr = generate_mv(a1, Coweight{2});
  ASSERT_EQ(cr.size(), 3u);
  EXPECT_EQ(wt(cr.node(cr.f_edge(0, 0))), Coweight{0});
  EXPECT_EQ(cr.lowest(), cr.f_edge(cr.f_edge(0, 0), 0));
}

TEST(MVCrystal, HexagonFromLusztigDatum) {
  const auto rs = RootSystem::make("A2");
  const Coweight lam{1, 1};
  const auto P = polytope_from_lusztig(*rs, lam, LusztigDatum{0, {1, 1, 1}});
  EXPECT_EQ(P, lowest_polytope(*rs, lam));
  EXPECT_THROW(polytope_from_lusztig(*rs, lam, LusztigDatum{0, {2, 2, 2}}), OutsideHull);
  EXPECT_THROW(polytope_from_lusztig(*rs, Coweight{-1, 1}, LusztigDatum{0, {0, 0, 0}}), NotDominant);
  EXPECT_THROW(polytope_from_lusztig(*rs, lam, LusztigDatum{0, {1, 1}}), InvalidMove);
  EXPECT_THROW(polytope_from_lusztig(*rs, lam, LusztigDatum{0, {-1, 0, 0}}), InvalidMove);
}

TEST(MVCrystal, ThreeMoveIsInvolution) {
  for (Int a = 0; a < 4; ++a)
    for (Int b = 0; b < 4; ++b)
      for (Int c = 0; c < 4; ++c) {
        const std::vector<Int> n{a, b, c};
        EXPECT_EQ(transform_lengths(MoveKind::Three, 0, transform_lengths(MoveKind::Three, 0, n)), n);
        // Total length a+b+c is not preserved in general, but the outer sums are.
        const auto t = transform_lengths(MoveKind::Three, 0, n);
        EXPECT_EQ(t[0] + t[1], b + c);
        EXPECT_EQ(t[1] + t[2], a + b);
      }
  EXPECT_EQ(transform_lengths(MoveKind::Two, 1, {1, 2, 3}), (std::vector<Int>{1, 3, 2}));
  EXPECT_THROW(transform_lengths(MoveKind::Three, 1, {1, 2, 3}), InvalidMove);
}

TEST(MVCrystal, EveryNodeIsAnMVDatum) {
  for (const auto& [type, lam] : std::vector<std::pair<const char*, Coweight>>{
           {"A2", Coweight{2, 1}}, {"A3", Coweight{0, 1, 0}}, {"A3", Coweight{1, 0, 1}}}) {
    const auto rs = RootSystem::make(type);
    const auto cr = generate_mv(rs, lam);
    for (const auto& P : cr.nodes()) {
      EXPECT_TRUE(is_mv_datum(*rs, P.datum));
      EXPECT_TRUE(inside_orbit_hull(rs->weyl(), P.datum, lam));
      EXPECT_EQ(P.datum[rs->weyl().longest()], lam);
    }
  }
}

TEST(MVCrystal, FundamentalCyclesReturnLusztigData) {
  const auto rs = RootSystem::make("A3");
  const auto cr = generate_mv(rs, Coweight{0, 1, 0});
  const auto tree = rs->bfs_from(0);
  std::vector<bool> tree_edge(rs->edges().size(), false);
  for (const auto& [u, e] : tree)
    if (e != static_cast<std::size_t>(-1)) tree_edge[e] = true;
  for (const auto& P : cr.nodes()) {
    std::vector<LusztigDatum> at(rs->words().size());
    at[0] = lusztig_datum(*rs, P, 0);
    for (const auto& [u, e] : tree)
      if (e != static_cast<std::size_t>(-1)) at[u] = apply_move(*rs, at[rs->edges()[e].from], rs->edges()[e]);
    for (std::size_t e = 0; e < rs->edges().size(); ++e) {
      if (tree_edge[e]) continue;
      const auto& edge = rs->edges()[e];
      EXPECT_EQ(apply_move(*rs, at[edge.from], edge), at[edge.to]);
    }
  }
}

TEST(MVCrystal, StringAxioms) {
  const auto rs = RootSystem::make("A3");
  const auto cr = generate_mv(rs, Coweight{1, 1, 0});
  for (std::size_t k = 0; k < cr.size(); ++k) {
    const auto& P = cr.node(k);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(phi(*rs, P, j) - epsilon(*rs, P, j), wt(P).pair(j));
      const auto down = f(*rs, P, j);
      EXPECT_EQ(down.has_value(), f_geometric(*rs, P, j).has_value());
      if (down) {
        EXPECT_EQ(*f_geometric(*rs, P, j), *down);
        EXPECT_EQ(wt(*down), wt(P) - rs->cartan().simple_coroot(j));
        EXPECT_EQ(epsilon(*rs, *down, j), epsilon(*rs, P, j) + 1);
        EXPECT_EQ(*e(*rs, *down, j), P);
        EXPECT_EQ(cr.f_edge(k, j), *cr.find(*down));
      } else {
        EXPECT_EQ(cr.f_edge(k, j), MVCrystal::npos);
      }
      // String length: phi_j counts the remaining f_j steps.
      const auto end = f_power(*rs, P, j, phi(*rs, P, j));
      ASSERT_TRUE(end);
      EXPECT_FALSE(f(*rs, *end, j));
      EXPECT_TRUE(e_power(*rs, P, j, epsilon(*rs, P, j)).has_value());
      EXPECT_FALSE(e_power(*rs, P, j, epsilon(*rs, P, j) + 1).has_value());
    }
  }
}

TEST(MVCrystal, LoweringIsIndependentOfTheWordStartingWithJ) {
  const auto rs = RootSystem::make("A3");
  const auto cr = generate_mv(rs, Coweight{0, 1, 0});
  for (const auto& P : cr.nodes())
    for (int j = 0; j < 3; ++j) {
      const auto ref = f(*rs, P, j);
      for (std::size_t u = 0; u < rs->words().size(); ++u)
        if (rs->words()[u].front() == j) EXPECT_EQ(f_via_word(*rs, P, j, u), ref);
    }
  EXPECT_THROW(f_via_word(*rs, cr.node(0), 1, 0), NoWordStartingWith);
}

TEST(MVCrystal, HighestAndLowest) {
  const auto rs = RootSystem::make("A2");
  const Coweight lam{2, 1};
  const auto cr = generate_mv(rs, lam);
  for (int j = 0; j < 2; ++j) {
    EXPECT_EQ(epsilon(*rs, cr.node(0), j), 0);
    EXPECT_EQ(phi(*rs, cr.node(0), j), lam.pair(j));
    EXPECT_EQ(phi(*rs, cr.node(cr.lowest()), j), 0);
    EXPECT_FALSE(e(*rs, cr.node(0), j));
  }
  EXPECT_EQ(cr.node(cr.lowest()), lowest_polytope(*rs, lam));
}

TEST(MVCrystal, GenerationIsThreadIndependent) {
  const auto rs = RootSystem::make("A3");
  const auto a = generate_mv(rs, Coweight{1, 0, 1}, 1);
  const auto b = generate_mv(rs, Coweight{1, 0, 1}, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a.node(k), b.node(k));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(a.f_edge(k, j), b.f_edge(k, j));
  }
}

TEST(MVCrystal, InputErrors) {
  const auto rs = RootSystem::make("A2");
  EXPECT_THROW(generate_mv(rs, Coweight{-1, 0}), NotDominant);
  EXPECT_THROW(generate_mv(rs, Coweight{1, 0, 0}), RankMismatch);
  EXPECT_THROW(RootSystem::make("B3"), NonSimplyLaced);
}
