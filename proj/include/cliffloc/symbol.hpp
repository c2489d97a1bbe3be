#pragma once

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cliffloc/cl3.hpp"

namespace cliffloc {

// Operator on the complexification of a real carrier, stored as a complex matrix
// acting on C^N where N is the real dimension of the carrier.
struct SymbolOperator {
  ComplexMatrix matrix;
  ComplexMatrix grading;
  Rational norm2;  // |xi|^2 + |h|^2, the expected value of the square

  RealMatrix doubled() const;  // [[A, -B], [B, A]] for matrix = A + iB
};

// sigma(xi, h) = i c(xi) + i^tau (Re h rho~(eta1) + Im h rho~(eta2)); xi has dim X entries.
SymbolOperator symbol(const Cl3Extension& ext, std::span<const Rational> xi, const QComplex& h);

struct SymbolSample {
  std::vector<Rational> xi;
  QComplex h;
};

struct CheckReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// sigma^2 = (|xi|^2 + |h|^2) Id, sigma odd, and sigma invertible iff (xi, h) != 0.
CheckReport support_identity_check(const Cl3Extension& ext, std::span<const SymbolSample> samples);

// Coefficient bundle E at a point: complex dimension, grading and a real conjugation s, all
// in the standard frame of R^{2 dim}.
struct Twist {
  std::size_t complex_dim = 1;
  RealMatrix grading;
  RealMatrix conjugation;

  static Twist trivial(std::size_t complex_dim);
  // Violations of: s anti-linear, s even, s^2 = Id, grading an even involution.
  std::vector<std::string> violations() const;
};

// Symbol on (S (x)_C E) (x)_R C with h' = h (x) f s. The S factor is taken in its standard frame.
SymbolOperator twisted_symbol(const Cl3Extension& ext, std::span<const Rational> xi, const QComplex& h,
                              const Twist& twist, const Rational& f);

CheckReport twisted_support_check(const Cl3Extension& ext, const Twist& twist, const Rational& f,
                                  std::span<const SymbolSample> samples);

// ---------------------------------------------------------------------------
// Fiber points near Y: xi along Y, u_b along the base direction of nu, u_f along its fiber.

struct FiberPoint {
  std::vector<Rational> xi;
  std::array<Rational, 2> ub{};
  std::array<Rational, 2> uf{};

  FiberPoint rotated() const;  // i (u_b, u_f) = (-u_f, u_b)
  FiberPoint scaled(const Rational& t) const;
  Rational norm2() const;
};

std::vector<FiberPoint> axis_points(int dim_y);
// Coordinates drawn from {-2..2}/{1,2}.
std::vector<FiberPoint> random_fiber_points(int dim_y, std::size_t count, std::mt19937_64& rng);
std::vector<SymbolSample> random_symbol_samples(int dim_x, std::size_t count, std::mt19937_64& rng);
std::vector<SymbolSample> axis_symbol_samples(int dim_x);

// c_X(u) = c_Y(xi) (x) 1 + (-1)^deg (x) (u_f^ - u_f_|), assembled on S(Y) (x) S_2 and
// returned in carrier coordinates.
RealMatrix fiber_clifford_model(const Cl3Extension& ext, const FiberPoint& p);
// The same operator read off the Cl3 images.
RealMatrix clifford_action(const Cl3Extension& ext, const FiberPoint& p);
// J (x) (u_b^ + u_b_|), carrier coordinates.
RealMatrix fiber_eta_model(const Cl3Extension& ext, const FiberPoint& p);

// sigma at a fiber point: i c_X(xi, u_f) + i^tau h(u_b) on the complexified carrier.
ComplexMatrix localized_symbol(const Cl3Extension& ext, const FiberPoint& p);

// Operator on S(Y) (x)_C (Lambda R^2 (x)_R C):
// i c_Y (x) 1 + (-1)^deg (x) (i_L^tau (u_b^ + u_b_|) + (u_f^ - u_f_|) i).
ComplexMatrix theta(const Cl3Extension& ext, const FiberPoint& p);

enum class ThomVariant { standard, flipped_contraction };

// w^ + w_| on Lambda_C(C^2), basis {1, f1, f2, f1f2}, w_k = u_b,k + i u_f,k.
ComplexMatrix thom_operator(const FiberPoint& p, ThomVariant variant = ThomVariant::standard);
ComplexMatrix thom_wedge(const std::array<QComplex, 2>& w);
ComplexMatrix thom_contraction(const std::array<QComplex, 2>& w);

// i c_Y (x) 1 + (-1)^deg (x) thom_operator.
ComplexMatrix thom_symbol(const Cl3Extension& ext, const FiberPoint& p, ThomVariant variant = ThomVariant::standard);

// Invertible Phi with Phi lhs[k] = rhs[k] Phi for all k. Constraints come from a linearly
// independent subset of the lhs family; the result is then checked on every pair.
std::optional<ComplexMatrix> simultaneous_intertwiner(std::span<const ComplexMatrix> lhs,
                                                      std::span<const ComplexMatrix> rhs);

std::optional<ComplexMatrix> localization_intertwiner(const Cl3Extension& ext, std::span<const FiberPoint> samples,
                                                      ThomVariant variant = ThomVariant::standard);

// The two Cl(0,4) actions on 4-dimensional complex spaces indexed by (u_b, u_f): the
// exterior-algebra one from rho23 and the Thom one. Returned as real representations.
std::pair<GradedRep, GradedRep> clifford4_actions(int tau);

}  // namespace cliffloc
