#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffloc/clifford.hpp"
#include "cliffloc/rep.hpp"

namespace cliffloc {

// Cl(2,3) acting on the exterior algebra of R^2, basis {1, e1, e2, e1e2}.
// Generator order: e1, e2, eps1, eps2, eps3.
struct Rho23Rep {
  GradedRep rep;
  std::array<RealMatrix, 2> wedge;
  std::array<RealMatrix, 2> contraction;
};

Rho23Rep build_rho23();

// Where the pieces of Cl3 sit inside the Signature used for it.
//   tau = 0: Cl(d, 3) with generators e_1..e_d, eps1, eta1, eta2
//   tau = 1: Cl(d + 2, 1) with generators e_1..e_d, eta1, eta2, eps1
// where d = 8n + 2 + 4 tau is the dimension of X.
struct Cl3Layout {
  int n = 0;
  int tau = 0;
  Signature sig;
  int dim_x = 0;
  int eps1 = 0;
  int eta1 = 0;
  int eta2 = 0;

  static Cl3Layout for_case(int n, int tau);

  int dim_y() const { return dim_x - 2; }
  std::vector<int> clifford() const;  // indices of e_1..e_d

  // Cl2 (the subalgebra generated by the e's, eps1 and eta1) as its own signature,
  // and the Cl3 indices of its generators in that signature's order.
  Signature cl2_signature() const;
  std::vector<int> cl2_generators() const;
};

struct Cl3Extension {
  Cl3Layout layout;
  GradedRep rep;           // rho~ of Cl3 on S
  GradedRep base;          // S(Y): the spinor rep of Cl(8n + 4 tau, 0), standard frame
  AntiLinearMap structure_j;  // on base; complex conjugation when base is a point
  ComplexFrame frame;      // carrier coordinates <-> S(Y) (x)_C S_2 in the standard frame

  const RealMatrix& eta(int k) const { return rep.image(k == 1 ? layout.eta1 : layout.eta2); }
};

// Only n = 0 is built unless allow_large is set.
Cl3Extension extend_to_cl3(int n, int tau, bool allow_large = false);

// Candidate eta image taken literally as J (-1)^deg (x) rho23(eps_{k+1}) with J anticommuting
// with Clifford multiplication (tau = 1 only). Kept to show why it is not used.
RealMatrix literal_eta_candidate(const Cl3Extension& ext, int k);

// Ad (x) z^2: e_i conjugated by mu, eps1 fixed, eta's rotated by u^2 with i eta1 = eta2;
// extended multiplicatively over blades.
AlgebraElement ad_z2(const SpinCElement& lam, const AlgebraElement& v, const Cl3Layout& layout);

bool check_equivariance(const SpinCElement& lam, const AlgebraElement& v, const Cl3Extension& ext);

struct LHFiber {
  std::vector<RealMatrix> basis;
  RealMatrix complex_structure;
  int symmetry = 1;  // +1 symmetric, -1 skew

  std::size_t dim() const { return basis.size(); }
  bool contains(const RealMatrix& m) const;
  bool closed_under_i() const;
};

class FiberDimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Odd, (skew-)symmetric for the Euclidean metric of the carrier, anticommuting with every
// e_i image. Throws FiberDimensionError if the solution space is not 2-dimensional.
LHFiber lh_fiber_basis(const Cl3Extension& ext);

struct FiberCorrespondence {
  bool eta_in_fiber = false;
  bool independent = false;
  bool i_compatible = false;  // rho~(eta2) = i rho~(eta1)
  bool ok() const { return eta_in_fiber && independent && i_compatible; }
};

FiberCorrespondence fiberwise_correspondence(const Cl3Extension& ext, const LHFiber& fiber);

struct EndIsoResult {
  std::size_t image_dim = 0;
  std::size_t expected = 0;
  RelationReport relations;
  bool ok() const { return relations.ok() && image_dim == expected; }
};

// The Cl2 images generate all of End_R(S).
EndIsoResult end_iso_check(const Cl3Extension& ext);

// Basis of the anticommutant of {eps1, e_1..e_{d}} inside Cl2 computed in the algebra.
std::vector<AlgebraElement> cl2_anticommutant(int n, int tau);

struct SignRow {
  int n = 0;
  int tau = 0;
  std::optional<Rational> eta1_square;
  std::optional<Rational> eta2_square;
  std::vector<std::string> anticommutant_basis;
  std::vector<std::string> anticommutant_squares;
  int signature_square = 0;  // what the Cl3 signature prescribes for eta_k
  int claimed_square = 0;    // (-1)^(tau + 1)
  bool agrees_with_claim() const;
};

SignRow sign_row(int n, int tau);

}  // namespace cliffloc
