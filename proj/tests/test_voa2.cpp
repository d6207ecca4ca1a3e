#include <gtest/gtest.h>

#include "weyl_ising/voa2.hpp"

using namespace weyl_ising;

namespace {

HalfVec root(std::size_t dim, int i, int j) {
  HalfVec v(dim, 0);
  v[i] = 2;
  v[j] = -2;
  return v;
}

const CycInt8Scalar kQuarter{make_rational(1, 4)};

}  // namespace

TEST(Weight2, IsingVectorShape) {
  const auto e = ising_vector_for_root(root(3, 0, 1));
  EXPECT_EQ(e.dim(), 24u);
  EXPECT_EQ(e.exps().size(), 120u);
  for (const auto& [x, c] : e.exps()) {
    EXPECT_EQ(quarter_dot(x, x), 64);
    EXPECT_EQ(canonical_label(x), x);
    EXPECT_EQ(c, CycInt8Scalar(make_rational(1, 32)));
  }
  EXPECT_TRUE(e.all_rational());
}

TEST(Weight2, RejectsBadLabelsAndDimensions) {
  Weight2Element w(8);
  EXPECT_THROW(w.add_exp(QuarterVec{4, 4, 0, 0, 0, 0, 0, 0}, CycInt8Scalar(1)), Error);
  EXPECT_THROW(w + Weight2Element(16), Error);
  const Oracle o(1);
  EXPECT_THROW(o.product(w, Weight2Element(16)), Error);
}

TEST(Weight2, CancellingExponentialsDisappear) {
  Weight2Element w(8);
  const QuarterVec x{8, 0, 0, 0, 0, 0, 0, 0};
  w.add_exp(x, CycInt8Scalar(1));
  w.add_exp(negate(x), CycInt8Scalar(-1));
  EXPECT_TRUE(w.is_zero());
}

TEST(Oracle, IsingIdempotentAndNormalised) {
  const Oracle o(3);
  const auto a = root(3, 0, 1);
  const auto e = ising_vector_for_root(a);
  EXPECT_EQ(o.product(e, e), CycInt8Scalar(2) * e);
  EXPECT_EQ(o.pairing(e, e), kQuarter);
  // ⟨e,e⟩ = (1/256)⟨ω,ω⟩ + 120·2·(1/32)², with ⟨ω,ω⟩ = 4 (central charge 8)
  const auto w = conformal_quadratic(m_alpha_lattice(a));
  EXPECT_EQ(o.pairing(w, w), CycInt8Scalar(4));
  EXPECT_EQ(o.product(w, e), CycInt8Scalar(2) * e);
  EXPECT_EQ(o.product(w, w), CycInt8Scalar(2) * w);
}

TEST(Oracle, ThreeCProductInA2) {
  const Oracle o(3);
  const auto a = root(3, 0, 1), b = root(3, 1, 2), c = root(3, 0, 2);
  const auto ea = ising_vector_for_root(a), eb = ising_vector_for_root(b);
  const auto ec = ising_vector_for_root(c);
  const auto expected = CycInt8Scalar(make_rational(1, 32)) * (ea + eb - ec);
  const auto ab = o.product(ea, eb);
  EXPECT_EQ(ab, expected);
  EXPECT_EQ(o.product(eb, ea), ab);
  EXPECT_EQ(o.pairing(ea, eb), CycInt8Scalar(make_rational(1, 256)));
  EXPECT_EQ(o.pairing(ea, eb), o.pairing(eb, ea));
  EXPECT_TRUE(ab.all_rational());
  const auto wa = conformal_quadratic(m_alpha_lattice(a)), wb = conformal_quadratic(m_alpha_lattice(b));
  EXPECT_EQ(o.pairing(wa, wb), CycInt8Scalar(1));
}

TEST(Oracle, TwoBProductInA3) {
  const Oracle o(4);
  const auto ea = ising_vector_for_root(root(4, 0, 1)), eb = ising_vector_for_root(root(4, 2, 3));
  EXPECT_TRUE(o.product(ea, eb).is_zero());
  EXPECT_TRUE(o.pairing(ea, eb).is_zero());
}

TEST(Oracle, ProductsCommuteOnA3Axes) {
  const Oracle o(4);
  const auto a3 = RootSystem::build(RootKind::A, 3);
  std::vector<Weight2Element> e;
  for (const auto& a : a3.positive_roots()) e.push_back(ising_vector_for_root(a));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      EXPECT_EQ(o.product(e[i], e[j]), o.product(e[j], e[i]));
      const int ip = inner(a3.positive_roots()[i], a3.positive_roots()[j]);
      EXPECT_EQ(o.pairing(e[i], e[j]), CycInt8Scalar(ip == 0 ? Rational(0) : make_rational(1, 256)));
    }
}

TEST(Oracle, RootCreatingPairIsRejected) {
  const Oracle o(1);
  Weight2Element u(8), v(8);
  u.add_exp(QuarterVec{8, 0, 0, 0, 0, 0, 0, 0}, CycInt8Scalar(1));      // 2e1
  v.add_exp(QuarterVec{6, 2, 2, 2, 2, 2, 2, -2}, CycInt8Scalar(1));     // inner product 3 with 2e1
  try {
    o.product(u, v);
    FAIL() << "expected RootCreated";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::RootCreated);
  }
}

TEST(Oracle, WrongShellSizeIsReported) {
  // a rank-8 lattice with more than 240 norm-4 vectors
  try {
    ising_vector(e8_lattice());
    FAIL() << "expected WrongShellSize";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::WrongShellSize);
  }
}
