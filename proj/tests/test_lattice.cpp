#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "weyl_ising/lattice.hpp"

using namespace weyl_ising;

namespace {

QMatrix gram_of(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix g(rows.size(), rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) g(i, j++) = x;
    ++i;
  }
  return g;
}

std::vector<std::vector<long long>> to_ll(const QMatrix& g) {
  std::vector<std::vector<long long>> m(g.rows(), std::vector<long long>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m[i][j] = g(i, j).get_num().get_si();
  return m;
}

HalfVec root(std::size_t dim, int i, int j) {
  HalfVec v(dim, 0);
  v[i] = 2;
  v[j] = -2;
  return v;
}

}  // namespace

TEST(Lattice, RejectsDependentOrIndefiniteBases) {
  EXPECT_THROW(Lattice::from_gram(gram_of({{1, 2}, {2, 1}})), Error);
  QMatrix b(2, 2);
  b(0, 0) = 1;
  b(1, 0) = 2;
  EXPECT_THROW(Lattice::from_basis(b), Error);
  QMatrix gens(3, 2);
  gens(0, 0) = 2;
  gens(1, 0) = 3;
  gens(2, 1) = 1;
  const auto l = Lattice::span(gens);
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_EQ(l.determinant(), 1);
}

TEST(Lattice, TensorWithA1DoublesTheE8Gram) {
  const auto a1 = Lattice::from_gram(gram_of({{2}}));
  const auto t = tensor(a1, e8_lattice());
  EXPECT_EQ(t.gram(), Rational(2) * e8_gram());
  EXPECT_EQ(t.determinant(), 256);
  EXPECT_TRUE(t.is_even());
}

TEST(Lattice, TensorDeterminants) {
  const auto a2 = Lattice::from_gram(gram_of({{2, -1}, {-1, 2}}));
  EXPECT_EQ(tensor(a2, e8_lattice()).determinant(), 6561);
  const auto e8e8 = tensor(e8_lattice(), e8_lattice());
  EXPECT_EQ(e8e8.determinant(), 1);
  EXPECT_TRUE(e8e8.is_even());
}

TEST(Lattice, DiscriminantGroupsMatchMinorOracle) {
  EXPECT_EQ(discriminant_group(Lattice::from_gram(gram_of({{2, -1}, {-1, 2}}))).divisors, std::vector<Integer>{3});
  const auto sqrt2e8 = scaled(e8_lattice(), Rational(2));
  EXPECT_EQ(discriminant_group(sqrt2e8).divisors, std::vector<Integer>(8, 2));
  EXPECT_TRUE(discriminant_group(tensor(e8_lattice(), e8_lattice())).divisors.empty());
  for (const auto& g : {gram_of({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), gram_of({{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}}),
                        gram_of({{4, 2, 0}, {2, 6, 2}, {0, 2, 8}})}) {
    const auto inv = discriminant_group(Lattice::from_gram(g));
    std::vector<Integer> expected;
    for (auto d : oracle::smith_by_minors(to_ll(g)))
      if (d > 1) expected.push_back(Integer(static_cast<long>(d)));
    EXPECT_EQ(inv.divisors, expected);
    EXPECT_EQ(Rational(inv.order()), Lattice::from_gram(g).determinant());
  }
  QMatrix half(1, 1);
  half(0, 0) = Rational(1, 2);
  EXPECT_THROW(discriminant_group(Lattice::from_gram(half)), Error);
}

TEST(Lattice, SelfDualityConditions) {
  EXPECT_TRUE(is_ssd(scaled(e8_lattice(), Rational(2))));
  EXPECT_FALSE(is_ssd(Lattice::from_gram(gram_of({{2, -1}, {-1, 2}}))));
  const auto a1 = Lattice::from_gram(gram_of({{2}}));
  EXPECT_TRUE(is_rssd(a1, a1));
  const auto a2 = RootSystem::build(RootKind::A, 2);
  const auto l = tensor_model(a2);
  const auto m = m_alpha_lattice(a2.positive_roots()[0]);
  EXPECT_TRUE(is_sublattice(m, l));
  EXPECT_TRUE(is_rssd(m, l));
  EXPECT_TRUE(is_ssd(m));
  EXPECT_EQ(discriminant_group(m).order(), 256);
}

TEST(Lattice, TInvolutions) {
  const auto a3 = RootSystem::build(RootKind::A, 3);
  const auto l = tensor_model(a3);
  const auto whole = t_involution(l, l);
  EXPECT_EQ(whole.in_basis, Integer(-1) * ZMatrix::identity(l.rank()));
  const auto& pos = a3.positive_roots();
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      const auto ti = t_involution(m_alpha_lattice(pos[i]), l);
      const auto tj = t_involution(m_alpha_lattice(pos[j]), l);
      EXPECT_EQ(matrix_order(ti.in_basis), 2);
      const int ip = inner(pos[i], pos[j]);
      EXPECT_EQ(matrix_order(ti.in_basis * tj.in_basis), ip == 0 ? 2 : 3);
    }
}

TEST(Lattice, ShellsAgainstAmbientEnumeration) {
  const auto e8 = e8_lattice();
  for (int norm : {2, 4}) {
    const auto s = shell(e8, Rational(norm));
    std::set<HalfVec> mine;
    for (const auto& v : s.vectors) {
      HalfVec h;
      for (const auto& x : v) h.push_back(static_cast<int>(Rational(2 * x).get_num().get_si()));
      mine.insert(h);
    }
    EXPECT_EQ(mine, oracle::e8_vectors(norm)) << norm;
  }
  EXPECT_EQ(shell(e8, Rational(4)).size(), 2160u);
  EXPECT_EQ(shell(scaled(e8, Rational(2)), Rational(4)).size(), 240u);
  EXPECT_EQ(shell(scaled(e8, Rational(2)), Rational(2)).size(), 0u);
}

TEST(Lattice, TensorModelShells) {
  const auto a2 = RootSystem::build(RootKind::A, 2);
  const auto l = tensor_model(a2);
  EXPECT_EQ(shell(l, Rational(2)).size(), 0u);
  const auto s4 = shell(l, Rational(4));
  // the norm-4 vectors are exactly the alpha (x) gamma
  std::set<QVector> expected;
  for (const auto& a : a2.roots())
    for (const auto& g : e8_roots()) expected.insert(realize(a, g));
  const std::set<QVector> mine(s4.vectors.begin(), s4.vectors.end());
  EXPECT_EQ(expected.size(), 720u);
  EXPECT_EQ(mine, expected);
}

TEST(Lattice, ShellRefusesLargeRank) {
  const auto e7 = RootSystem::build(RootKind::E, 7);
  EXPECT_THROW(shell(tensor_model(e7), Rational(2)), Error);
}

TEST(Lattice, SumAndIntersectionOfRootLattices) {
  const auto a2 = RootSystem::build(RootKind::A, 2);
  const HalfVec a = root(3, 0, 1), b = root(3, 1, 2);  // <a,b> = -1
  const auto ma = m_alpha_lattice(a), mb = m_alpha_lattice(b);
  EXPECT_FALSE(lattice_intersection(ma, mb).has_value());
  const auto sum = lattice_sum(ma, mb);
  const auto model = tensor_model(a2);
  EXPECT_EQ(sum.rank(), 16u);
  EXPECT_EQ(sum.determinant(), model.determinant());
  EXPECT_EQ(sum, model);
  EXPECT_EQ(discriminant_group(sum).divisors, discriminant_group(model).divisors);
  EXPECT_EQ(shell(sum, Rational(2)).size(), 0u);
  EXPECT_EQ(shell(sum, Rational(4)).size(), 720u);
}

TEST(Lattice, AnnihilatorContainsOrthogonalRootLattice) {
  const auto a3 = RootSystem::build(RootKind::A, 3);
  const auto l = tensor_model(a3);
  const auto ann = annihilator(m_alpha_lattice(root(4, 0, 1)), l);
  ASSERT_TRUE(ann.has_value());
  EXPECT_TRUE(is_sublattice(m_alpha_lattice(root(4, 2, 3)), *ann));
  EXPECT_FALSE(is_sublattice(m_alpha_lattice(root(4, 1, 2)), *ann));
  EXPECT_THROW(is_sublattice(m_alpha_lattice(root(3, 0, 1)), l), Error);
}

TEST(Lattice, Identifications) {
  for (auto [name, n, det] : {std::tuple{"A", 2, Rational(256)}, std::tuple{"A", 3, Rational(6561)},
                              std::tuple{"A", 4, Rational(65536)}, std::tuple{"D", 4, Rational(65536)},
                              std::tuple{"E8", 0, Rational(1)}, std::tuple{"E7", 0, Rational(256)},
                              std::tuple{"E6", 0, Rational(6561)}}) {
    const auto rep = verify_identification(name, n);
    EXPECT_TRUE(rep.ok()) << name << n;
    EXPECT_EQ(rep.determinant, det) << name << n;
  }
  EXPECT_THROW(verify_identification("A", 1), Error);
  EXPECT_THROW(verify_identification("D", 3), Error);
  EXPECT_THROW(verify_identification("F4"), Error);
}
