#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "weyl_ising/permgrp.hpp"

using namespace weyl_ising;

TEST(Permutation, Basics) {
  const Permutation p{1, 2, 0, 3}, q{0, 1, 3, 2};
  EXPECT_EQ(p * q, (Permutation{1, 3, 0, 2}));  // p first, then q
  EXPECT_TRUE(is_identity(p * inverse(p)));
  EXPECT_EQ(permutation_order(p), 3);
  EXPECT_EQ(permutation_order(p * q), 4);
  EXPECT_FALSE(is_permutation(Permutation{0, 0, 1}));
  EXPECT_THROW(to_permutation({0, 2}), Error);
  const Permutation r{2, 0, 3, 1};
  EXPECT_EQ((p * q) * r, p * (q * r));
}

TEST(PermGroup, SmallGroups) {
  EXPECT_EQ(PermGroup(2, {{1, 0}}).order(), 2);
  EXPECT_EQ(PermGroup(5, {}).order(), 1);
  const PermGroup s5(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
  EXPECT_EQ(s5.order(), 120);
  EXPECT_TRUE(s5.contains({4, 3, 2, 1, 0}));
  const PermGroup a4(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  EXPECT_EQ(a4.order(), 12);
  EXPECT_FALSE(a4.contains({1, 0, 2, 3}));
  EXPECT_THROW(PermGroup(3, {{0, 1}}), Error);
}

TEST(PermGroup, AgreesWithClosureOnRandomGroups) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 5;
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      Permutation p = identity_permutation(n);
      std::shuffle(p.begin(), p.end(), rng);
      // keep some groups small by sometimes using a transposition
      if (trial % 3 == 0 && g == 1) {
        p = identity_permutation(n);
        std::swap(p[0], p[n - 1]);
      }
      gens.push_back(p);
    }
    const PermGroup group(n, gens);
    EXPECT_EQ(group.order(), oracle::closure_order(gens)) << trial;
    for (const auto& g : gens) EXPECT_TRUE(group.contains(g));
    Integer prod = 1;
    for (auto o : group.orbit_lengths()) prod *= static_cast<unsigned long>(o);
    EXPECT_EQ(prod, group.order());
  }
}

TEST(PermGroup, EnumerationRespectsLimit) {
  const std::vector<Permutation> s4{{1, 2, 3, 0}, {1, 0, 2, 3}};
  EXPECT_EQ(enumerate_group_order(4, s4), 24u);
  EXPECT_EQ(enumerate_group_order(4, s4, 10), std::nullopt);
}

TEST(Weyl, Orders) {
  for (auto [kind, rank, order, minus] :
       {std::tuple{RootKind::A, 2, 6L, false}, std::tuple{RootKind::A, 3, 24L, false},
        std::tuple{RootKind::D, 4, 192L, true}, std::tuple{RootKind::D, 5, 1920L, false},
        std::tuple{RootKind::E, 6, 51840L, false}, std::tuple{RootKind::E, 7, 2903040L, true},
        std::tuple{RootKind::E, 8, 696729600L, true}}) {
    const auto rs = RootSystem::build(kind, rank);
    const auto w = weyl_group(rs);
    EXPECT_EQ(w.order(), order) << rs.name();
    EXPECT_EQ(contains_minus_one(rs, w), minus) << rs.name();
  }
  const auto a3 = RootSystem::build(RootKind::A, 3);
  std::vector<oracle::Perm> gens;
  for (const auto& a : a3.positive_roots()) gens.push_back(reflection_permutation(a3, a));
  EXPECT_EQ(oracle::closure_order(gens), 24u);
}

TEST(Miyamoto, Orders) {
  for (auto [kind, rank, order] :
       {std::tuple{RootKind::A, 2, 6L}, std::tuple{RootKind::A, 3, 24L}, std::tuple{RootKind::A, 4, 120L},
        std::tuple{RootKind::D, 4, 96L}, std::tuple{RootKind::E, 6, 51840L}, std::tuple{RootKind::E, 7, 1451520L},
        std::tuple{RootKind::E, 8, 348364800L}}) {
    const auto rs = RootSystem::build(kind, rank);
    const auto alg = AxisAlgebra::from_root_system(rs);
    const auto g = miyamoto_group(alg);
    EXPECT_EQ(g.order(), order) << rs.name();
    const auto w = weyl_group(rs);
    EXPECT_EQ(g.order() * (contains_minus_one(rs, w) ? 2 : 1), w.order()) << rs.name();
    if (g.order() <= 10000) {
      EXPECT_EQ(oracle::closure_order(miyamoto_generators(alg)), g.order().get_ui());
    }
  }
}

TEST(Miyamoto, TranspositionProfiles) {
  const auto a2 = AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 2));
  EXPECT_EQ(transposition_profile(a2), (std::map<unsigned long, std::size_t>{{3, 3}}));
  const auto rs = RootSystem::build(RootKind::A, 3);
  const auto a3 = AxisAlgebra::from_root_system(rs);
  const auto gens = miyamoto_generators(a3);
  for (std::size_t i = 0; i < a3.size(); ++i)
    for (std::size_t j = i + 1; j < a3.size(); ++j)
      if (a3.relation(i, j).kind == Relation::TwoB) {
        EXPECT_LE(permutation_order(gens[i] * gens[j]), 2);
      }
  const auto e8 = transposition_profile(AxisAlgebra::from_root_system(RootSystem::build(RootKind::E, 8)));
  for (const auto& [o, c] : e8) EXPECT_TRUE(o == 2 || o == 3) << o;
  EXPECT_EQ(e8.at(3), 56u * 120u / 2u);
}
