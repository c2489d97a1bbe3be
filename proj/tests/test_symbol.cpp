#include <gtest/gtest.h>

#include <random>

#include "cliffloc/symbol.hpp"

using namespace cliffloc;

namespace {

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix a(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(j, i) = m(i, j).conj();
  return a;
}

ComplexMatrix scaled(const ComplexMatrix& m, const QComplex& z) { return m * z; }

std::vector<FiberPoint> sample_points(int dim_y, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto pts = axis_points(dim_y);
  const auto rnd = random_fiber_points(dim_y, count, rng);
  pts.insert(pts.end(), rnd.begin(), rnd.end());
  return pts;
}

}  // namespace

class Symbol : public ::testing::TestWithParam<int> {};

TEST_P(Symbol, UnitCovectorSquaresToOne) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::vector<Rational> xi(static_cast<std::size_t>(ext.layout.dim_x));
  xi[0] = 1;
  const SymbolOperator s = symbol(ext, xi, QComplex(0));
  EXPECT_EQ(s.norm2, Rational(1));
  EXPECT_EQ(s.matrix, complexify(ext.rep.image(0)) * QComplex::i());
  EXPECT_EQ(s.matrix * s.matrix, ComplexMatrix::identity(s.matrix.rows()));
}

TEST_P(Symbol, PureHPart) {
  const int tau = GetParam();
  const Cl3Extension ext = extend_to_cl3(0, tau);
  const std::vector<Rational> xi(static_cast<std::size_t>(ext.layout.dim_x));
  const SymbolOperator s = symbol(ext, xi, QComplex(0, 2));
  const QComplex phase = tau == 0 ? QComplex(1) : QComplex::i();
  EXPECT_EQ(s.matrix, complexify(ext.eta(2)) * (phase * QComplex(2)));
  EXPECT_EQ(s.matrix * s.matrix, ComplexMatrix::identity(s.matrix.rows()) * QComplex(4));
}

TEST_P(Symbol, SupportIdentityOnRandomSamples) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::mt19937_64 rng(17);
  auto samples = axis_symbol_samples(ext.layout.dim_x);
  const auto rnd = random_symbol_samples(ext.layout.dim_x, 60, rng);
  samples.insert(samples.end(), rnd.begin(), rnd.end());
  const CheckReport r = support_identity_check(ext, samples);
  EXPECT_EQ(r.checked, static_cast<int>(samples.size()));
  EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front());
}

TEST_P(Symbol, Homogeneous) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::mt19937_64 rng(23);
  for (const auto& smp : random_symbol_samples(ext.layout.dim_x, 10, rng)) {
    const Rational t = ratio(-5, 3);
    std::vector<Rational> xi = smp.xi;
    for (auto& x : xi) x *= t;
    const auto a = symbol(ext, xi, smp.h * QComplex(t));
    const auto b = symbol(ext, smp.xi, smp.h);
    EXPECT_EQ(a.matrix, b.matrix * QComplex(t));
    EXPECT_EQ(a.norm2, b.norm2 * t * t);
  }
}

TEST_P(Symbol, OnlyZeroIsOutsideSupport) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  const std::vector<Rational> zero(static_cast<std::size_t>(ext.layout.dim_x));
  EXPECT_FALSE(is_invertible(symbol(ext, zero, QComplex(0)).matrix));
  EXPECT_TRUE(is_invertible(symbol(ext, zero, QComplex(ratio(1, 7), -1)).matrix));
}

TEST_P(Symbol, DoubledIsRealForm) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::vector<Rational> xi(static_cast<std::size_t>(ext.layout.dim_x));
  xi[1] = 2;
  const SymbolOperator s = symbol(ext, xi, QComplex(1, 1));
  const RealMatrix d = s.doubled();
  EXPECT_EQ(d * d, RealMatrix::identity(d.rows()) * s.norm2);
}

TEST_P(Symbol, TwistedSupport) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::mt19937_64 rng(29);
  const auto samples = random_symbol_samples(ext.layout.dim_x, 15, rng);
  for (std::size_t dim : {1u, 2u}) {
    Twist tw = Twist::trivial(dim);
    if (dim == 2) {
      tw.grading(2, 2) = -1;
      tw.grading(3, 3) = -1;
    }
    ASSERT_TRUE(tw.violations().empty());
    for (const Rational& f : {Rational(0), Rational(1), ratio(-2, 3)}) {
      const CheckReport r = twisted_support_check(ext, tw, f, samples);
      EXPECT_TRUE(r.ok()) << dim << " " << f << (r.ok() ? "" : r.failures.front());
    }
  }
}

TEST_P(Symbol, TwistedWithVanishingFLosesH) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  const std::vector<Rational> zero(static_cast<std::size_t>(ext.layout.dim_x));
  const SymbolOperator s = twisted_symbol(ext, zero, QComplex(1), Twist::trivial(1), 0);
  EXPECT_TRUE(s.matrix.is_zero());
  const SymbolOperator t = twisted_symbol(ext, zero, QComplex(1), Twist::trivial(1), 1);
  EXPECT_TRUE(is_invertible(t.matrix));
}

TEST_P(Symbol, ProductFiberModels) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  for (const auto& p : sample_points(ext.layout.dim_y(), 31, 20)) {
    const RealMatrix s1 = fiber_clifford_model(ext, p);
    const RealMatrix s2 = fiber_eta_model(ext, p);
    EXPECT_EQ(s1, clifford_action(ext, p));
    EXPECT_EQ(s2, ext.eta(1) * p.ub[0] + ext.eta(2) * p.ub[1]);
    EXPECT_TRUE(anticommutator(s1, s2).is_zero());
  }
}

TEST_P(Symbol, ThetaAndThomSquares) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  for (const auto& p : sample_points(ext.layout.dim_y(), 37, 20)) {
    const ComplexMatrix th = theta(ext, p);
    const ComplexMatrix id = ComplexMatrix::identity(th.rows()) * QComplex(p.norm2());
    EXPECT_EQ(th * th, id);
    const ComplexMatrix tp = thom_symbol(ext, p);
    EXPECT_EQ(tp * tp, id);
    const ComplexMatrix ls = localized_symbol(ext, p);
    EXPECT_EQ(ls * ls, ComplexMatrix::identity(ls.rows()) * QComplex(p.norm2()));
  }
}

TEST_P(Symbol, LocalizationIntertwiner) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  const auto pts = sample_points(ext.layout.dim_y(), 41, 30);
  const auto phi = localization_intertwiner(ext, pts);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_invertible(*phi));
  // fresh points not used in the solve
  for (const auto& p : sample_points(ext.layout.dim_y(), 43, 10))
    EXPECT_EQ(*phi * localized_symbol(ext, p), thom_symbol(ext, p) * *phi);
  EXPECT_FALSE(localization_intertwiner(ext, pts, ThomVariant::flipped_contraction).has_value());
}

TEST_P(Symbol, PlainSignFlipIsStillIntertwinable) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::vector<ComplexMatrix> lhs, rhs;
  for (const auto& p : sample_points(ext.layout.dim_y(), 47, 10)) {
    lhs.push_back(localized_symbol(ext, p));
    rhs.push_back(scaled(lhs.back(), QComplex(-1)));
  }
  EXPECT_TRUE(simultaneous_intertwiner(lhs, rhs).has_value());
}

TEST_P(Symbol, SigmaConjugateToTheta) {
  const Cl3Extension ext = extend_to_cl3(0, GetParam());
  std::vector<ComplexMatrix> lhs, rhs;
  for (const auto& p : sample_points(ext.layout.dim_y(), 53, 20)) {
    lhs.push_back(localized_symbol(ext, p));
    rhs.push_back(theta(ext, p));
  }
  EXPECT_TRUE(simultaneous_intertwiner(lhs, rhs).has_value());
}

TEST_P(Symbol, CliffordFourActionsAreEquivalent) {
  const auto [lambda, thom] = clifford4_actions(GetParam());
  EXPECT_TRUE(lambda.relations().ok());
  EXPECT_TRUE(thom.relations().ok());
  const auto psi = intertwiner(lambda, thom);
  ASSERT_TRUE(psi.has_value());
  const RealMatrix inv = inverse(*psi);
  for (int g = 0; g < 4; ++g) EXPECT_EQ(*psi * lambda.image(g) * inv, thom.image(g));
}

INSTANTIATE_TEST_SUITE_P(BothTwists, Symbol, ::testing::Values(0, 1));

TEST(Thom, ContractionIsAdjointOfWedge) {
  const std::array<QComplex, 2> w{QComplex(1, 2), QComplex(ratio(-1, 2), 3)};
  EXPECT_EQ(thom_contraction(w), adjoint(thom_wedge(w)));
  EXPECT_TRUE((thom_wedge(w) * thom_wedge(w)).is_zero());
  const ComplexMatrix t = thom_wedge(w) + thom_contraction(w);
  EXPECT_EQ(t * t, ComplexMatrix::identity(4) * QComplex(w[0].norm2() + w[1].norm2()));
}

TEST(Thom, FlippedContractionSquaresNegative) {
  FiberPoint p{{}, {Rational(1), Rational(0)}, {Rational(0), Rational(2)}};
  const ComplexMatrix t = thom_operator(p, ThomVariant::flipped_contraction);
  EXPECT_EQ(t * t, ComplexMatrix::identity(4) * QComplex(-p.norm2()));
}

TEST(Thom, RotationMultipliesWByI) {
  std::mt19937_64 rng(59);
  for (const auto& p : random_fiber_points(0, 10, rng)) {
    const std::array<QComplex, 2> w{QComplex(p.ub[0], p.uf[0]), QComplex(p.ub[1], p.uf[1])};
    const ComplexMatrix expected = thom_wedge(w) * QComplex::i() + thom_contraction(w) * QComplex(0, -1);
    EXPECT_EQ(thom_operator(p.rotated()), expected);
    EXPECT_EQ(p.rotated().rotated().ub[0], -p.ub[0]);
    EXPECT_EQ(p.scaled(2).norm2(), p.norm2() * 4);
  }
}

TEST(SimultaneousIntertwiner, RejectsMismatchedFamilies) {
  const std::vector<ComplexMatrix> one{ComplexMatrix::identity(2)};
  const std::vector<ComplexMatrix> none;
  EXPECT_THROW(simultaneous_intertwiner(one, none), std::invalid_argument);
}

TEST(Twist, ViolationsAreReported) {
  Twist t = Twist::trivial(1);
  t.conjugation = RealMatrix::identity(2);
  EXPECT_FALSE(t.violations().empty());
  Twist u = Twist::trivial(1);
  u.grading = RealMatrix::identity(2) * Rational(2);
  EXPECT_FALSE(u.violations().empty());
}
