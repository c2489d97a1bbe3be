#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliffloc/exact.hpp"
#include "cliffloc/matrix.hpp"

namespace cliffloc {

// Cl(p, q): p generators squaring to -1 (e_1..e_p), then q squaring to +1
// (eps_1..eps_q). Generator indices are 0-based in that order.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_);

  int generators() const { return p + q; }
  std::size_t algebra_dim() const { return std::size_t{1} << (p + q); }
  int square(int gen) const;  // -1 or +1
  int e(int k) const;         // index of e_k, 1-based k
  int eps(int k) const;       // index of eps_k, 1-based k
  std::string generator_name(int gen) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

// Basis blade: ascending product of the generators in the mask.
struct Blade {
  std::uint32_t mask = 0;

  int grade() const { return std::popcount(mask); }
  friend auto operator<=>(const Blade&, const Blade&) = default;
};

struct BladeProduct {
  int sign = 1;
  Blade blade;
};

BladeProduct blade_product(Blade a, Blade b, const Signature& sig);

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Signature sig) : sig_(sig) {}

  static AlgebraElement scalar(Signature sig, const Rational& value);
  static AlgebraElement generator(Signature sig, int gen);
  static AlgebraElement blade(Signature sig, Blade b, const Rational& coeff = 1);
  // Ordered product of the listed generators (need not be ascending).
  static AlgebraElement word(Signature sig, std::span<const int> gens);

  const Signature& signature() const { return sig_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }
  Rational coeff(Blade b) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  int max_grade() const;

  AlgebraElement grade_involution() const;
  AlgebraElement reverse() const;
  // Same masks read in a signature with at least as many generators of each kind.
  AlgebraElement embed(const Signature& target) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(Blade b, const Rational& c);

  Signature sig_;
  std::map<Blade, Rational> terms_;
};

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement grade_involution(const AlgebraElement& x);

// Basis of {v : v g + g v = 0 for every g in constraints}.
std::vector<AlgebraElement> anticommutant_basis(const Signature& sig, std::span<const AlgebraElement> constraints);

// Coordinates of an element in the blade basis (column = mask).
SparseRow<Rational> coordinates(const AlgebraElement& x);

// Ordinary (ungraded) tensor product Cl(a) (x) Cl(b): (x1 (x) y1)(x2 (x) y2) = x1 x2 (x) y1 y2.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(Signature left, Signature right) : left_(left), right_(right) {}

  static TensorElement pure(const AlgebraElement& a, const AlgebraElement& b);
  static TensorElement one(Signature left, Signature right);

  const Signature& left() const { return left_; }
  const Signature& right() const { return right_; }
  const std::map<std::pair<Blade, Blade>, Rational>& terms() const { return terms_; }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a) { return a *= Rational(-1); }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(std::pair<Blade, Blade> key, const Rational& c);

  Signature left_;
  Signature right_;
  std::map<std::pair<Blade, Blade>, Rational> terms_;
};

SparseRow<Rational> coordinates(const TensorElement& x);
SparseRow<Rational> coordinates(const RealMatrix& m);

// ---------------------------------------------------------------------------
// Generator relations.

struct RelationFailure {
  int i = 0;
  int j = 0;  // equal to i for a square relation
  std::string what;
};

struct RelationReport {
  std::vector<RelationFailure> failures;
  int checked = 0;

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

namespace detail {
inline AlgebraElement identity_like(const AlgebraElement& x) { return AlgebraElement::scalar(x.signature(), 1); }
inline TensorElement identity_like(const TensorElement& x) { return TensorElement::one(x.left(), x.right()); }
inline RealMatrix identity_like(const RealMatrix& m) { return RealMatrix::identity(m.rows()); }
inline bool is_zero_like(const AlgebraElement& x) { return x.is_zero(); }
inline bool is_zero_like(const TensorElement& x) { return x.terms().empty(); }
inline bool is_zero_like(const RealMatrix& m) { return m.is_zero(); }
}  // namespace detail

// g_i^2 = square(i) * 1 and g_i g_j + g_j g_i = 0 for i != j.
template <typename E>
RelationReport check_generator_relations(std::span<const E> images, const Signature& sig) {
  RelationReport report;
  if (static_cast<int>(images.size()) != sig.generators()) {
    report.failures.push_back({-1, -1, "expected " + std::to_string(sig.generators()) + " images, got " +
                                           std::to_string(images.size())});
    return report;
  }
  for (int i = 0; i < sig.generators(); ++i) {
    const E& g = images[i];
    E expected = detail::identity_like(g);
    if (sig.square(i) < 0) expected = -expected;
    ++report.checked;
    if (!(g * g == expected))
      report.failures.push_back({i, i, "square of " + sig.generator_name(i) + " is not " +
                                           (sig.square(i) < 0 ? "-1" : "+1")});
    for (int j = i + 1; j < sig.generators(); ++j) {
      ++report.checked;
      if (!detail::is_zero_like(g * images[j] + images[j] * g))
        report.failures.push_back({i, j, sig.generator_name(i) + " and " + sig.generator_name(j) + " do not anticommute"});
    }
  }
  return report;
}

// Dimension of the span of all ordered subset products g_{i1} ... g_{ik} (i1 < ... < ik).
template <typename E>
std::size_t generated_dimension(std::span<const E> images, std::size_t ncoords) {
  SparseEchelon<Rational> ech(ncoords);
  const std::size_t k = images.size();
  const E one = detail::identity_like(images.front());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    E prod = one;
    for (std::size_t g = 0; g < k; ++g)
      if (mask >> g & 1) prod = prod * images[g];
    ech.add(coordinates(prod));
  }
  return ech.rank();
}

// Images of the generators of Cl(8n+2+4tau, 1) in Cl(8n+4tau, 0) (x) Cl(2, 1): e_i -> e'_i (x) 1,
// the last two e's -> w (x) e''_j and eps_1 -> w (x) eps''_1, with w = e'_1 ... e'_{8n+4tau}
// standing in for the grading of the left factor.
std::vector<TensorElement> splitting_images(int n, int tau);

}  // namespace cliffloc
