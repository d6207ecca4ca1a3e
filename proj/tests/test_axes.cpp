#include <gtest/gtest.h>

#include "weyl_ising/axes.hpp"
#include "weyl_ising/matrix.hpp"
#include "weyl_ising/triality.hpp"

using namespace weyl_ising;

namespace {

// Dense reference product straight from the roots.
AxisElement reference_product(const RootSystem& rs, std::size_t i, std::size_t j) {
  const auto& pos = rs.positive_roots();
  AxisElement out(pos.size(), Rational(0));
  if (i == j) {
    out[i] = 2;
    return out;
  }
  const int ip = inner(pos[i], pos[j]);
  if (ip == 0) return out;
  HalfVec third = pos[i] - scale(pos[j], ip);
  std::size_t k = pos.size();
  for (std::size_t m = 0; m < pos.size(); ++m)
    if (pos[m] == third || pos[m] == negate(third)) k = m;
  EXPECT_LT(k, pos.size());
  out[i] += make_rational(1, 32);
  out[j] += make_rational(1, 32);
  out[k] -= make_rational(1, 32);
  return out;
}

AxisElement permute(const AxisElement& x, const std::vector<std::size_t>& p) {
  AxisElement y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[p[i]] = x[i];
  return y;
}

}  // namespace

TEST(Axes, RelationTables) {
  const auto a2 = AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 2));
  ASSERT_EQ(a2.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(a2.relation(i, j).kind, i == j ? Relation::Same : Relation::ThreeC);

  const auto e8 = AxisAlgebra::from_root_system(RootSystem::build(RootKind::E, 8));
  ASSERT_EQ(e8.size(), 120u);
  for (std::size_t i = 0; i < e8.size(); ++i) EXPECT_EQ(e8.partners(i).size(), 56u);

  const auto rs = RootSystem::build(RootKind::A, 3);
  const auto a3 = AxisAlgebra::from_root_system(rs);
  const auto& pos = rs.positive_roots();
  const auto find = [&](HalfVec v) { return std::size_t(std::find(pos.begin(), pos.end(), v) - pos.begin()); };
  EXPECT_EQ(a3.relation(find({2, -2, 0, 0}), find({0, 0, 2, -2})).kind, Relation::TwoB);
}

TEST(Axes, ProductsAndPairingsMatchReference) {
  for (auto [kind, rank] : {std::pair{RootKind::A, 3}, std::pair{RootKind::D, 4}, std::pair{RootKind::E, 6}}) {
    const auto rs = RootSystem::build(kind, rank);
    const auto alg = AxisAlgebra::from_root_system(rs);
    for (std::size_t i = 0; i < alg.size(); ++i)
      for (std::size_t j = 0; j < alg.size(); ++j) {
        EXPECT_EQ(alg.product(alg.basis(i), alg.basis(j)), reference_product(rs, i, j));
        const int ip = inner(rs.positive_roots()[i], rs.positive_roots()[j]);
        const Rational expected = i == j ? make_rational(1, 4) : ip == 0 ? Rational(0) : make_rational(1, 256);
        EXPECT_EQ(alg.basis_pairing(i, j), expected);
      }
  }
}

TEST(Axes, InvalidTablesAreRejected) {
  std::vector<std::vector<RelationEntry>> t(2, std::vector<RelationEntry>(2));
  EXPECT_THROW(AxisAlgebra({"a", "b"}, t), Error);  // diagonal not Same
  t[0][0].kind = t[1][1].kind = Relation::Same;
  t[0][1] = RelationEntry{Relation::ThreeC, 0};
  t[1][0] = RelationEntry{Relation::ThreeC, 0};
  EXPECT_THROW(AxisAlgebra({"a", "b"}, t), Error);  // third axis is one of the pair
  t[0][1] = RelationEntry{Relation::TwoB, 0};
  EXPECT_THROW(AxisAlgebra({"a", "b"}, t), Error);  // asymmetric
}

TEST(Axes, VirasoroVectors) {
  const auto a2 = AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 2));
  const auto v = virasoro(a2);
  EXPECT_EQ(v.vector, make_rational(32, 33) * a2.sum_of_axes());
  EXPECT_EQ(v.central_charge, make_rational(16, 11));
  EXPECT_TRUE(v.is_conformal);
  for (auto [kind, rank, c] : {std::tuple{RootKind::A, 3, make_rational(48, 17)}, std::tuple{RootKind::D, 4, make_rational(16, 3)},
                               std::tuple{RootKind::A, 4, make_rational(32, 7)},
                               std::tuple{RootKind::E, 6, make_rational(96, 7)}, std::tuple{RootKind::E, 7, Rational(21)},
                               std::tuple{RootKind::E, 8, Rational(32)}}) {
    const auto rs = RootSystem::build(kind, rank);
    const auto alg = AxisAlgebra::from_root_system(rs);
    const auto r = virasoro(alg);
    EXPECT_EQ(r.central_charge, c) << rs.name();
    EXPECT_EQ(r.central_charge, central_charge_formula(rs));
    const Rational coeff = make_rational(32, rs.coxeter_number() + 30);
    EXPECT_EQ(r.vector, coeff * alg.sum_of_axes());
    // w·e = 2e against the reference product, smaller systems only
    if (alg.size() <= 36)
      for (std::size_t k = 0; k < alg.size(); ++k) {
        AxisElement acc = alg.zero();
        for (std::size_t j = 0; j < alg.size(); ++j) acc = acc + coeff * reference_product(rs, j, k);
        EXPECT_EQ(acc, Rational(2) * alg.basis(k));
      }
  }
}

TEST(Axes, VirasoroOnATwoBPair) {
  // two commuting Ising vectors: w = e + f, c = 1/2 + 1/2
  std::vector<std::vector<RelationEntry>> t(2, std::vector<RelationEntry>(2));
  t[0][0].kind = t[1][1].kind = Relation::Same;
  const AxisAlgebra two_b({"e", "f"}, t);
  const auto v = virasoro(two_b);
  EXPECT_EQ(v.vector, two_b.sum_of_axes());
  EXPECT_EQ(v.central_charge, 1);
}

TEST(Axes, SubVirasoro) {
  const auto a2 = AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 2));
  for (std::size_t e = 0; e < 3; ++e)
    for (std::size_t f = 0; f < 3; ++f) {
      if (e == f) {
        EXPECT_THROW(sub_virasoro_3c(a2, e, f), Error);
        continue;
      }
      const auto r = sub_virasoro_3c(a2, e, f);
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.norm, make_rational(21, 44));
      EXPECT_EQ(r.pairing_with_e, 0);
      EXPECT_TRUE(is_zero(a2.product(r.a, r.a) - Rational(2) * r.a));
    }
  const auto rs = RootSystem::build(RootKind::A, 3);
  const auto a3 = AxisAlgebra::from_root_system(rs);
  for (std::size_t e = 0; e < a3.size(); ++e)
    for (std::size_t f = 0; f < a3.size(); ++f)
      if (e != f && a3.relation(e, f).kind == Relation::TwoB) {
        EXPECT_THROW(sub_virasoro_3c(a3, e, f), Error);
      }
}

TEST(Axes, MiyamotoPermutations) {
  const auto a2 = AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 2));
  EXPECT_EQ(miyamoto_permutation(a2, 0), (std::vector<std::size_t>{0, 2, 1}));
  const auto rs = RootSystem::build(RootKind::A, 3);
  const auto a3 = AxisAlgebra::from_root_system(rs);
  for (std::size_t e = 0; e < a3.size(); ++e) {
    const auto p = miyamoto_permutation(a3, e);
    EXPECT_EQ(p[e], e);
    for (std::size_t f = 0; f < a3.size(); ++f)
      if (a3.relation(e, f).kind == Relation::TwoB) {
        EXPECT_EQ(p[f], f);
      }
    // τ_e(x·y) = τ_e(x)·τ_e(y) and the form is preserved
    for (std::size_t i = 0; i < a3.size(); ++i)
      for (std::size_t j = 0; j < a3.size(); ++j) {
        const auto x = a3.basis(i), y = a3.basis(j);
        EXPECT_EQ(permute(a3.product(x, y), p), a3.product(permute(x, p), permute(y, p)));
        EXPECT_EQ(a3.pairing(x, y), a3.pairing(permute(x, p), permute(y, p)));
      }
  }
  EXPECT_TRUE(check_miyamoto_automorphisms(AxisAlgebra::from_root_system(RootSystem::build(RootKind::E, 6))));
}

TEST(Axes, GramPositivity) {
  EXPECT_TRUE(gram_positive_definite(AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 2))));
  EXPECT_TRUE(gram_positive_definite(AxisAlgebra::from_root_system(RootSystem::build(RootKind::E, 6))));
  // a duplicated axis gives two equal rows
  QMatrix g(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g(i, j) = make_rational(1, 4);
  EXPECT_FALSE(is_positive_definite(g));
}

TEST(Axes, FormAssociativity) {
  EXPECT_TRUE(check_form_associativity(AxisAlgebra::from_root_system(RootSystem::build(RootKind::A, 3))));
  EXPECT_TRUE(check_form_associativity(AxisAlgebra::from_root_system(RootSystem::build(RootKind::E, 8)), 12, 1000));
}
