#include <gtest/gtest.h>

#include "cliffloc/cl3.hpp"
#include "cliffloc/rep.hpp"

using namespace cliffloc;

namespace {

GradedRep direct_sum(const GradedRep& a) {
  GradedRep out = a;
  auto twice = [](const RealMatrix& m) { return kron(RealMatrix::identity(2), m); };
  for (auto& img : out.images) img = twice(img);
  out.grading = twice(a.grading);
  out.complex_structure = twice(a.jc());
  return out;
}

}  // namespace

TEST(SpinorRep, DimensionsAndRelations) {
  for (int two_n : {2, 4, 6, 8}) {
    const GradedRep s = build_spinor_rep(two_n);
    EXPECT_EQ(s.dim(), std::size_t{2} << (two_n / 2)) << two_n;
    EXPECT_TRUE(s.relations().ok()) << two_n;
    EXPECT_TRUE(s.invariant_violations().empty()) << two_n;
    for (const auto& img : s.images) EXPECT_EQ(img * img, -RealMatrix::identity(s.dim()));
  }
  EXPECT_THROW(build_spinor_rep(3), std::invalid_argument);
  EXPECT_THROW(build_spinor_rep(10), std::invalid_argument);
}

TEST(SpinorRep, ComplexIrreducible) {
  for (int two_n : {2, 4, 6}) EXPECT_EQ(commutant_dimension(build_spinor_rep(two_n), Field::complex), 2u) << two_n;
}

TEST(SpinorRep, DirectSumCommutant) {
  EXPECT_EQ(commutant_dimension(direct_sum(build_spinor_rep(2)), Field::complex), 8u);
}

TEST(Grading, S2EqualsFormDegreeParity) {
  const RealMatrix g = grading_operator(build_spinor_rep(2));
  RealMatrix expected(4, 4);
  expected(0, 0) = 1;
  expected(1, 1) = -1;
  expected(2, 2) = -1;
  expected(3, 3) = 1;
  EXPECT_EQ(g, expected);
  EXPECT_EQ(g * g, RealMatrix::identity(4));
  const GradedRep s2 = build_spinor_rep(2);
  EXPECT_EQ(g * s2.image(0) * g, -s2.image(0));
}

TEST(Grading, RequiresComplexStructure) {
  GradedRep r = build_spinor_rep(2);
  r.complex_structure.reset();
  EXPECT_THROW(grading_operator(r), std::invalid_argument);
}

TEST(GradedTensor, S4TimesS2) {
  const GradedRep t = graded_tensor(build_spinor_rep(4), build_spinor_rep(2));
  EXPECT_EQ(t.sig, Signature(6, 0));
  EXPECT_TRUE(t.relations().ok());
  EXPECT_TRUE(t.invariant_violations().empty());
  // first-factor and second-factor generators anticommute
  EXPECT_TRUE(anticommutator(t.image(0), t.image(5)).is_zero());
  EXPECT_EQ(grading_operator(t), t.grading);
}

TEST(GradedTensor, GradingIsBalancedAndOdd) {
  const GradedRep t = graded_tensor(build_spinor_rep(2), build_spinor_rep(2));
  EXPECT_EQ(t.grading * t.grading, RealMatrix::identity(t.dim()));
  Rational trace = 0;
  for (std::size_t k = 0; k < t.dim(); ++k) trace += t.grading(k, k);
  EXPECT_EQ(trace, 0);
  for (const auto& img : t.images) EXPECT_TRUE(anticommutator(t.grading, img).is_zero());
}

TEST(StructureJ, QuaternionicOnS4) {
  const GradedRep s4 = build_spinor_rep(4);
  const AntiLinearMap j = find_structure_J(s4, StructureKind::quaternionic);
  EXPECT_TRUE(j.is_anti_linear());
  EXPECT_EQ(j.matrix * j.matrix, -RealMatrix::identity(s4.dim()));
  EXPECT_TRUE(commutator(j.matrix, s4.grading).is_zero());
  for (const auto& img : s4.images) EXPECT_TRUE(anticommutator(j.matrix, img).is_zero());
}

TEST(StructureJ, RealOnS8) {
  const GradedRep s8 = build_spinor_rep(8);
  const AntiLinearMap j = find_structure_J(s8, StructureKind::real);
  EXPECT_TRUE(j.is_anti_linear());
  EXPECT_EQ(j.matrix * j.matrix, RealMatrix::identity(s8.dim()));
  EXPECT_TRUE(commutator(j.matrix, s8.grading).is_zero());
  for (const auto& img : s8.images) EXPECT_TRUE(anticommutator(j.matrix, img).is_zero());
}

TEST(StructureJ, NegativeControls) {
  EXPECT_THROW(find_structure_J(build_spinor_rep(2), StructureKind::real), StructureNotFound);
  EXPECT_THROW(find_structure_J(build_spinor_rep(4), StructureKind::real), StructureNotFound);
}

TEST(StructureJ, CommutantContainsJ) {
  const GradedRep s4 = build_spinor_rep(4);
  const auto basis = solve_commutant(s4, {Relation::anticommute, Relation::anticommute, Relation::commute});
  ASSERT_FALSE(basis.empty());
  const AntiLinearMap j = find_structure_J(s4, StructureKind::quaternionic);
  SparseEchelon<Rational> ech(s4.dim() * s4.dim());
  for (const auto& b : basis) ech.add(flatten(b));
  EXPECT_TRUE(ech.in_span(flatten(j.matrix)));
}

TEST(TwoSquares, Examples) {
  auto check = [](const Rational& s) {
    const auto xy = rational_two_squares(s);
    ASSERT_TRUE(xy.has_value());
    EXPECT_EQ(xy->first * xy->first + xy->second * xy->second, s);
  };
  check(2);
  check(ratio(25, 9));
  check(5);
  check(ratio(1, 2));
  EXPECT_FALSE(rational_two_squares(3).has_value());
  EXPECT_FALSE(rational_two_squares(-1).has_value());
}

TEST(Intertwiner, SelfAndConjugate) {
  const GradedRep s4 = build_spinor_rep(4);
  const auto self = intertwiner(s4, s4);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(is_invertible(*self));
  for (int g = 0; g < 4; ++g) EXPECT_EQ(*self * s4.image(g), s4.image(g) * *self);

  RealMatrix p = RealMatrix::identity(s4.dim());
  for (std::size_t k = 0; k + 1 < s4.dim(); ++k) p(k, k + 1) = 2;
  const RealMatrix pinv = inverse(p);
  GradedRep c = s4;
  for (auto& img : c.images) img = p * img * pinv;
  c.grading = p * s4.grading * pinv;
  c.complex_structure = p * s4.jc() * pinv;
  const auto t = intertwiner(s4, c);
  ASSERT_TRUE(t.has_value());
  const RealMatrix tinv = inverse(*t);
  for (int g = 0; g < 4; ++g) EXPECT_EQ(*t * s4.image(g) * tinv, c.image(g));
  EXPECT_EQ(*t * s4.jc(), c.jc() * *t);
}

TEST(Intertwiner, SignFlipAndDegenerateTarget) {
  GradedRep a = build_spinor_rep(2);
  GradedRep b = a;
  b.images[0] = -a.images[0];
  b.images[1] = -a.images[1];
  // conjugating by the grading flips both generators, so this is equivalent
  EXPECT_TRUE(intertwiner(a, b).has_value());
  // two generators sent to the same matrix cannot be intertwined invertibly
  b = a;
  b.images[0] = a.images[1];
  EXPECT_FALSE(intertwiner(a, b).has_value());
}

TEST(SpinC, Examples) {
  const GradedRep s2 = build_spinor_rep(2);
  const Signature sig(2, 0);
  const auto e1 = AlgebraElement::generator(sig, 0), e2 = AlgebraElement::generator(sig, 1);
  EXPECT_EQ(spin_c_matrix(s2, SpinCElement::identity(sig)), RealMatrix::identity(4));
  const RealMatrix r = spin_c_matrix(s2, SpinCElement::make(sig, {e1, e2}, Phase::one()));
  EXPECT_EQ(r * r, -RealMatrix::identity(4));
  EXPECT_EQ(r * r * r * r, RealMatrix::identity(4));
  const RealMatrix u = spin_c_matrix(s2, SpinCElement::identity(sig, Phase::from_slope(ratio(1, 3))));
  for (const auto& img : s2.images) EXPECT_TRUE(commutator(u, img).is_zero());
  const std::vector<Rational> v{1, 2, 3, 4};
  const auto w = spin_c_apply(s2, SpinCElement::identity(sig), v);
  EXPECT_EQ(w, v);
}

TEST(SpinC, RejectsBadElements) {
  const Signature sig(2, 0);
  const auto e1 = AlgebraElement::generator(sig, 0);
  EXPECT_THROW(SpinCElement::make(sig, {e1}, Phase::one()), std::invalid_argument);
  EXPECT_THROW(SpinCElement::make(sig, {e1 * Rational(2), e1}, Phase::one()), std::invalid_argument);
  EXPECT_THROW(SpinCElement::make(sig, {e1, e1}, {Rational(1), Rational(1)}), std::invalid_argument);
  const Signature mixed(1, 1);
  EXPECT_THROW(SpinCElement::make(mixed, {AlgebraElement::generator(mixed, 1), AlgebraElement::generator(mixed, 1)}, Phase::one()),
               std::invalid_argument);
}

TEST(SpinC, InverseIsInverse) {
  const Signature sig(4, 0);
  const Phase r = Phase::from_slope(ratio(1, 2));
  const auto v = r.c * AlgebraElement::generator(sig, 0) + r.s * AlgebraElement::generator(sig, 2);
  const auto lam = SpinCElement::make(sig, {v, AlgebraElement::generator(sig, 1)}, Phase::i());
  EXPECT_EQ(lam.even_part() * lam.even_part_inverse(), AlgebraElement::scalar(sig, 1));
}

TEST(ComplexFrame, RoundTrips) {
  const GradedRep s2 = build_spinor_rep(2);
  const ComplexFrame f(s2.jc());
  for (const auto& img : s2.images) EXPECT_EQ(f.from_linear(f.linear(img)), img);
  const Rho23Rep rho = build_rho23();
  EXPECT_EQ(f.from_antilinear(f.antilinear(rho.rep.image(3))), rho.rep.image(3));
  EXPECT_THROW(f.linear(rho.rep.image(3)), std::invalid_argument);
  EXPECT_THROW(f.antilinear(rho.rep.image(0)), std::invalid_argument);
}
