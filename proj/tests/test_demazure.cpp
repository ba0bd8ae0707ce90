#include <gtest/gtest.h>

#include "mvcr/demazure.hpp"
#include "oracles.hpp"

using namespace mvcr;

TEST(Demazure, SmallCases) {
  const auto rs = RootSystem::make("A2");
  const WeylGroup& W = rs->weyl();
  const auto cr = generate_mv(rs, Coweight{1, 1});
  EXPECT_EQ(demazure_set(cr, W.identity()).members, (std::vector<std::size_t>{0}));
  EXPECT_EQ(demazure_set(cr, W.longest()).members.size(), cr.size());
  const auto s1 = demazure_set(cr, W.generator(0));
  EXPECT_EQ(s1.members, (std::vector<std::size_t>{0, cr.f_edge(0, 0)}));

  const auto cr10 = generate_mv(rs, Coweight{1, 0});
  const auto d = demazure_set_recursive(cr10, W.from_word(Word{1, 0}));
  EXPECT_EQ(d.members.size(), 3u);
}

TEST(Demazure, CharacterOperatorExamples) {
  const WeylGroup W(build_cartan("A2"));
  const Character ch = demazure_character(W, W.generator(0), Coweight{1, 1});
  EXPECT_EQ(ch, (Character{{Coweight{1, 1}, 1}, {Coweight{-1, 2}, 1}}));
  EXPECT_EQ(demazure_character(W, W.identity(), Coweight{2, 1}), (Character{{Coweight{2, 1}, 1}}));
  // <mu, alpha_1> = -1 gives zero; <mu, alpha_1> = -3 gives -(e^{mu+h} + e^{mu+2h}).
  const CartanDatum& cd = W.cartan();
  EXPECT_TRUE(demazure_operator(cd, Character{{Coweight{-1, 0}, 1}}, 0).empty());
  const Coweight mu{-3, 1};
  const Coweight h = cd.simple_coroot(0);
  EXPECT_EQ(demazure_operator(cd, Character{{mu, 1}}, 0), (Character{{mu + h, -1}, {mu + 2 * h, -1}}));
}

TEST(Demazure, FullCharacterMatchesFreudenthal) {
  for (const auto& [type, lam] : std::vector<std::pair<const char*, Coweight>>{
           {"A2", Coweight{2, 1}}, {"A3", Coweight{0, 1, 0}}, {"A3", Coweight{1, 0, 1}}, {"A1xA2", Coweight{2, 1, 0}}}) {
    const WeylGroup W(build_cartan(type));
    EXPECT_EQ(demazure_character(W, W.longest(), lam), oracle::freudenthal(W, lam)) << type;
    EXPECT_EQ(freudenthal(W, lam), oracle::freudenthal(W, lam)) << type;
    EXPECT_EQ(weyl_dimension(W, lam), oracle::weyl_dimension(W, lam));
  }
}

TEST(Demazure, ThreeDefinitionsAgree) {
  for (const auto& [type, lams] : std::vector<std::pair<const char*, std::vector<Coweight>>>{
           {"A2", {Coweight{1, 0}, Coweight{1, 1}, Coweight{2, 1}}},
           {"A3", {Coweight{0, 1, 0}, Coweight{1, 1, 0}}}}) {
    const auto rs = RootSystem::make(type);
    const WeylGroup& W = rs->weyl();
    for (const auto& lam : lams) {
      const auto cr = generate_mv(rs, lam);
      for (WeylElt x : W.elements()) {
        const auto a = demazure_set(cr, x);
        const auto b = demazure_set_recursive(cr, x);
        ASSERT_EQ(a.members, b.members) << type << lam << W.word_string(x);
        EXPECT_EQ(weight_character(cr, a.members), demazure_character(W, x, lam));
        // Every reduced word of x gives the same set, and so does x itself when not minimal.
        for (const auto& word : W.reduced_words(x)) EXPECT_EQ(demazure_members_along(cr, word), a.members);
      }
    }
  }
}

TEST(Demazure, MonotoneAndContainsExtremal) {
  const auto rs = RootSystem::make("A3");
  const WeylGroup& W = rs->weyl();
  const Coweight lam{1, 0, 1};
  const auto cr = generate_mv(rs, lam);
  std::vector<std::vector<std::size_t>> sets;
  for (WeylElt x : W.elements()) sets.push_back(demazure_members_along(cr, W.word(x)));
  for (WeylElt x : W.elements()) {
    const auto P = extremal_polytope(*rs, x, lam);
    EXPECT_TRUE(in_demazure(cr, P, x));
    EXPECT_TRUE(in_demazure(cr, cr.node(0), x));
    for (WeylElt y : W.elements())
      if (W.bruhat_leq(x, y))
        EXPECT_TRUE(std::includes(sets[y.id].begin(), sets[y.id].end(), sets[x.id].begin(), sets[x.id].end()));
  }
}

TEST(Demazure, CosetInvariance) {
  const auto rs = RootSystem::make("A3");
  const WeylGroup& W = rs->weyl();
  const Coweight lam{0, 1, 0};
  const auto cr = generate_mv(rs, lam);
  for (WeylElt x : W.elements())
    for (WeylElt y : W.elements())
      if (W.act(x, lam) == W.act(y, lam))
        EXPECT_EQ(demazure_members_along(cr, W.word(x)), demazure_members_along(cr, W.word(y)));
}

TEST(Demazure, Membership) {
  const auto rs = RootSystem::make("A2");
  const WeylGroup& W = rs->weyl();
  const Coweight lam{1, 1};
  const auto cr = generate_mv(rs, lam);
  const auto hexagon = lowest_polytope(*rs, lam);
  EXPECT_FALSE(in_demazure(cr, hexagon, W.generator(0)));
  EXPECT_TRUE(in_demazure(cr, hexagon, W.longest()));
  for (WeylElt x : W.elements()) {
    EXPECT_TRUE(opposite_demazure_member(*rs, hexagon, x));
    EXPECT_TRUE(opposite_demazure_member(*rs, extremal_polytope(*rs, x, lam), x));
    if (x != W.identity()) EXPECT_FALSE(opposite_demazure_member(*rs, cr.node(0), x));
  }
}
