#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "weyl_ising/triality.hpp"

using namespace weyl_ising;

namespace {

oracle::Axis as_oracle(const TwistedAxis& t) { return {t.i, t.j, t.l}; }

}  // namespace

TEST(Delta, SearchResult) {
  const auto d = find_delta();
  EXPECT_TRUE(d.ok());
  EXPECT_EQ(d.delta, (HalfVec{-5, -1, -1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(d.norm, 8);
  // brute force: 72 roots of E8 pair with δ in 3Z
  int count = 0;
  for (const auto& r : oracle::e8_vectors(2)) count += oracle::dot2(r, d.delta) % 12 == 0;
  EXPECT_EQ(count, 72);
  EXPECT_EQ(d.k.determinant(), 9);
  EXPECT_EQ(shell(d.k, Rational(2)).size(), 72u);
}

TEST(Delta, DivisibleDeltaGivesWholeE8) {
  const HalfVec three_root{6, 6, 0, 0, 0, 0, 0, 0};  // 3(e1 + e2)
  const auto k = delta_kernel(three_root);
  EXPECT_EQ(k.determinant(), 1);
  EXPECT_EQ(lattice_index(k, e8_lattice()), Integer(1));
}

TEST(TwistedAxes, Enumeration) {
  for (int n = 2; n <= 7; ++n) {
    const TwistedAxes axes(n);
    EXPECT_EQ(axes.size(), static_cast<std::size_t>(3 * n * (n - 1) / 2));
    for (std::size_t k = 0; k < axes.size(); ++k) EXPECT_EQ(axes.index_of(axes[k]), k);
  }
  EXPECT_EQ(canonical_axis(2, 0, 1), (TwistedAxis{0, 2, 2}));
  EXPECT_THROW(canonical_axis(1, 1, 0), Error);
  EXPECT_THROW(TwistedAxes(1), Error);
}

TEST(TwistedAxes, TauMatchesLetterByLetterRewriting) {
  for (int n = 3; n <= 5; ++n) {
    const TwistedAxes axes(n);
    for (std::size_t e = 0; e < axes.size(); ++e) {
      const auto p = twisted_tau(axes, e);
      for (std::size_t f = 0; f < axes.size(); ++f) {
        const auto expected = oracle::tau(as_oracle(axes[e]), as_oracle(axes[f]));
        EXPECT_TRUE(as_oracle(axes[p[f]]) == expected) << axes[e].label() << " on " << axes[f].label();
      }
    }
  }
}

TEST(TwistedAxes, TauClosedForms) {
  const int n = 4;
  const TwistedAxes axes(n);
  for (std::size_t e = 0; e < axes.size(); ++e) {
    const auto& x = axes[e];
    const auto g = TwistedGroupElement::tau(n, x);
    for (std::size_t f = 0; f < axes.size(); ++f) {
      const auto& y = axes[f];
      const auto img = g.act(y);
      if (y.i == x.i && y.j == x.j) {
        EXPECT_EQ(img, (TwistedAxis{x.i, x.j, mod3(2 * x.l - y.l)}));
      }
      const bool disjoint = y.i != x.i && y.i != x.j && y.j != x.i && y.j != x.j;
      if (disjoint) {
        EXPECT_EQ(img, y);
      }
    }
  }
  // τ_(1,2,0) sends (1,3,s) to a twist of (2,3)
  const auto g = TwistedGroupElement::tau(n, {0, 1, 0});
  for (int s = 0; s < 3; ++s) {
    const auto img = g.act({0, 2, s});
    EXPECT_EQ(img.i, 1);
    EXPECT_EQ(img.j, 2);
    EXPECT_TRUE(as_oracle(img) == oracle::tau({0, 1, 0}, {0, 2, s}));
  }
}

TEST(TwistedGroupElement, CompositionMatchesAction) {
  const int n = 4;
  const TwistedAxes axes(n);
  for (std::size_t e = 0; e < axes.size(); e += 2)
    for (std::size_t f = 1; f < axes.size(); f += 3) {
      const auto g = TwistedGroupElement::tau(n, axes[e]);
      const auto h = TwistedGroupElement::tau(n, axes[f]);
      for (const auto& t : axes.axes()) EXPECT_EQ((g * h).act(t), g.act(h.act(t)));
      EXPECT_TRUE((g * g).is_identity());
    }
}

TEST(TwistedGroupElement, ConstantShiftIsTrivialWhenThreeDividesN) {
  auto g = TwistedGroupElement::identity(3);
  g.a = {1, 1, 1};
  EXPECT_TRUE(g.is_identity());
  auto h = TwistedGroupElement::identity(4);
  h.a = {1, 1, 1, 1};
  EXPECT_FALSE(h.is_identity());
  // but it still fixes every axis, since only differences of exponents act
  const TwistedAxes axes(4);
  for (const auto& t : axes.axes()) EXPECT_EQ(h.act(t), t);
}

TEST(TwistedAlgebra, SmallCases) {
  const auto a2 = twisted_axis_algebra(2);
  ASSERT_EQ(a2.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        EXPECT_EQ(a2.relation(i, j).kind, Relation::ThreeC);
      }
  EXPECT_EQ(virasoro(a2).central_charge, make_rational(16, 11));
  for (int n = 3; n <= 7; ++n) {
    const auto alg = twisted_axis_algebra(n);
    EXPECT_EQ(virasoro(alg).central_charge, twisted_central_charge_formula(n)) << n;
    EXPECT_TRUE(gram_positive_definite(alg));
  }
  EXPECT_EQ(twisted_central_charge_formula(3), 4);
  EXPECT_EQ(twisted_central_charge_formula(4), make_rational(96, 13));
}

TEST(TwistedGroup, Orders) {
  const long expected[] = {0, 0, 0, 18, 648, 9720, 58320, 3674160};
  const long kernels[] = {0, 0, 0, 3, 27, 81, 81, 729};
  for (int n = 3; n <= 7; ++n) {
    const auto r = twisted_group(n);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_EQ(r.order, expected[n]);
    EXPECT_EQ(r.kernel_order, kernels[n]);
    EXPECT_EQ(r.untwisted_order, factorial(n));
  }
  EXPECT_THROW(twisted_group(2), Error);
}

TEST(TwistedGroup, ClosureOracleOnSmallN) {
  for (int n = 3; n <= 4; ++n) {
    const TwistedAxes axes(n);
    std::vector<oracle::Perm> gens;
    for (std::size_t k = 0; k < axes.size(); ++k) gens.push_back(twisted_tau(axes, k));
    EXPECT_EQ(Integer(static_cast<unsigned long>(oracle::closure_order(gens))), twisted_group(n).order);
  }
}

TEST(TwistedGroup, AbstractModel) {
  for (int n = 3; n <= 6; ++n) {
    const auto ab = abstract_twisted_group(n);
    const auto r = twisted_group(n);
    EXPECT_EQ(ab.order, r.order) << n;
    EXPECT_EQ(ab.kernel_order, r.kernel_order) << n;
  }
  EXPECT_THROW(abstract_twisted_group(9), Error);
}

TEST(TwistedGroup, AbstractModelN7) {
  const auto ab = abstract_twisted_group(7);
  EXPECT_EQ(ab.order, 3674160);
  EXPECT_EQ(ab.kernel_order, 729);
}
