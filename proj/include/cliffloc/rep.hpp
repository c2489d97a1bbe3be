#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffloc/clifford.hpp"
#include "cliffloc/exact.hpp"
#include "cliffloc/matrix.hpp"

namespace cliffloc {

enum class Linearity { complex_linear, anti_linear };

// Representation of Cl(p, q) by exact real matrices on a Z2-graded space,
// optionally carrying a complex structure Jc (Jc^2 = -Id).
struct GradedRep {
  Signature sig;
  std::vector<RealMatrix> images;  // one per generator, indexed as in Signature
  RealMatrix grading;
  std::optional<RealMatrix> complex_structure;
  std::vector<Linearity> linearity;       // per generator; relative to complex_structure
  std::optional<int> grading_generator;   // generator whose image is the grading itself

  std::size_t dim() const { return grading.rows(); }
  bool is_complex() const { return complex_structure.has_value(); }
  const RealMatrix& image(int gen) const { return images.at(static_cast<std::size_t>(gen)); }
  const RealMatrix& jc() const;

  // Image of an arbitrary algebra element.
  RealMatrix act(const AlgebraElement& x) const;

  RelationReport relations() const;
  // Every violated structural invariant, human readable; empty when valid.
  std::vector<std::string> invariant_violations() const;
};

// Restriction to a subset of generators, reindexed as Cl(sig).
GradedRep restrict_rep(const GradedRep& rep, std::span<const int> gens, Signature sig);

struct AntiLinearMap {
  RealMatrix matrix;
  RealMatrix complex_structure;

  bool is_anti_linear() const { return matrix * complex_structure == -(complex_structure * matrix); }
};

// ---------------------------------------------------------------------------
// Complex coordinates. The standard frame on R^{2m} pairs coordinates
// (2k, 2k+1) as (Re, Im) of the k-th complex coordinate.

RealMatrix standard_complex_structure(std::size_t complex_dim);
RealMatrix real_form(const ComplexMatrix& m);             // v -> M v
RealMatrix real_form_antilinear(const ComplexMatrix& m);  // v -> M conj(v)

// Adapted real basis (v1, Jc v1, v2, Jc v2, ...) for a complex structure.
class ComplexFrame {
 public:
  ComplexFrame() = default;
  explicit ComplexFrame(const RealMatrix& jc);

  std::size_t complex_dim() const { return basis_.rows() / 2; }
  // Columns are the adapted basis vectors in original coordinates.
  const RealMatrix& basis() const { return basis_; }
  const RealMatrix& basis_inverse() const { return inverse_; }

  // Throw std::invalid_argument if t is not (anti-)linear.
  ComplexMatrix linear(const RealMatrix& t) const;
  ComplexMatrix antilinear(const RealMatrix& t) const;
  RealMatrix from_linear(const ComplexMatrix& m) const;
  RealMatrix from_antilinear(const ComplexMatrix& m) const;

 private:
  RealMatrix basis_;
  RealMatrix inverse_;
};

// ---------------------------------------------------------------------------
// Spin^c elements [mu, u]: mu a product of an even number of unit vectors.

class SpinCElement {
 public:
  // Throws std::invalid_argument if a factor is not a unit vector of sig or the count is odd.
  static SpinCElement make(Signature sig, std::vector<AlgebraElement> unit_vectors, Phase phase);
  static SpinCElement identity(Signature sig, Phase phase = Phase::one());

  const Signature& signature() const { return sig_; }
  const std::vector<AlgebraElement>& factors() const { return factors_; }
  const AlgebraElement& even_part() const { return mu_; }
  const AlgebraElement& even_part_inverse() const { return mu_inv_; }
  const Phase& phase() const { return phase_; }

 private:
  Signature sig_;
  std::vector<AlgebraElement> factors_;
  AlgebraElement mu_;
  AlgebraElement mu_inv_;
  Phase phase_;
};

// ---------------------------------------------------------------------------

// Complex spinor representation of Cl(two_n, 0); two_n in {2, 4, 6, 8}.
GradedRep build_spinor_rep(int two_n);
// Same construction for any even two_n >= 0 (two_n = 0 gives the trivial complex line).
GradedRep spinor_rep_any(int two_n);

// Jc^n rho(e_1) ... rho(e_{2n}).
RealMatrix grading_operator(const GradedRep& rep);

// Z2-graded tensor product over C: first factor acts as rho_a (x) 1, second as
// grading_a (x) rho_b. Result is in the standard frame.
GradedRep graded_tensor(const GradedRep& a, const GradedRep& b);

enum class Field { complex, real };

// Relation of the unknown T with each generator image / the complex structure / the grading.
enum class Relation { none, commute, anticommute };

struct CommutantSpec {
  Relation generators = Relation::commute;
  Relation complex_structure = Relation::none;
  Relation grading = Relation::none;
};

std::vector<RealMatrix> solve_commutant(const GradedRep& rep, const CommutantSpec& spec);
std::size_t commutant_dimension(const GradedRep& rep, Field linearity);

enum class StructureKind { real, quaternionic };

class StructureNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Anti-linear J anticommuting with every generator, commuting with the grading,
// with J^2 = +Id (real) or -Id (quaternionic).
AntiLinearMap find_structure_J(const GradedRep& rep, StructureKind kind);

// Rational x, y with x^2 + y^2 = s, if one exists.
std::optional<std::pair<Rational, Rational>> rational_two_squares(const Rational& s);

// Invertible T with T rho1(g) = rho2(g) T (and T Jc1 = Jc2 T when both complex).
std::optional<RealMatrix> intertwiner(const GradedRep& rep1, const GradedRep& rep2);

// rho(mu) followed by multiplication by u through Jc.
RealMatrix spin_c_matrix(const GradedRep& rep, const SpinCElement& lam);
std::vector<Rational> spin_c_apply(const GradedRep& rep, const SpinCElement& lam, std::span<const Rational> v);

}  // namespace cliffloc
