#include "cliffloc/rep.hpp"

#include "cliffloc/cl3.hpp"

namespace cliffloc {

const RealMatrix& GradedRep::jc() const {
  if (!complex_structure) throw std::logic_error("representation has no complex structure");
  return *complex_structure;
}

RealMatrix GradedRep::act(const AlgebraElement& x) const {
  if (!(x.signature() == sig)) throw std::invalid_argument("act: element over " + to_string(x.signature()) + ", rep of " + to_string(sig));
  RealMatrix out(dim(), dim());
  for (const auto& [b, c] : x.terms()) {
    RealMatrix prod = RealMatrix::identity(dim());
    for (int g = 0; g < sig.generators(); ++g)
      if (b.mask >> g & 1) prod = prod * images[static_cast<std::size_t>(g)];
    out += prod * c;
  }
  return out;
}

RelationReport GradedRep::relations() const { return check_generator_relations<RealMatrix>(images, sig); }

std::vector<std::string> GradedRep::invariant_violations() const {
  std::vector<std::string> out;
  const RelationReport rel = relations();
  for (const auto& f : rel.failures) out.push_back(f.what);
  const RealMatrix id = RealMatrix::identity(dim());
  if (!(grading * grading == id)) out.push_back("grading does not square to Id");
  for (int g = 0; g < sig.generators() && static_cast<std::size_t>(g) < images.size(); ++g) {
    const RealMatrix& img = images[static_cast<std::size_t>(g)];
    if (grading_generator && *grading_generator == g) {
      if (!(img == grading)) out.push_back(sig.generator_name(g) + " is declared to be the grading but differs from it");
    } else if (!anticommutator(img, grading).is_zero()) {
      out.push_back(sig.generator_name(g) + " is not odd");
    }
  }
  if (complex_structure) {
    const RealMatrix& jc = *complex_structure;
    if (!(jc * jc == -id)) out.push_back("complex structure does not square to -Id");
    if (!commutator(jc, grading).is_zero()) out.push_back("grading is not complex-linear");
    for (int g = 0; g < sig.generators() && static_cast<std::size_t>(g) < images.size(); ++g) {
      const RealMatrix& img = images[static_cast<std::size_t>(g)];
      const Linearity lin = static_cast<std::size_t>(g) < linearity.size() ? linearity[static_cast<std::size_t>(g)] : Linearity::complex_linear;
      if (lin == Linearity::complex_linear && !commutator(img, jc).is_zero())
        out.push_back(sig.generator_name(g) + " is not complex-linear");
      if (lin == Linearity::anti_linear && !anticommutator(img, jc).is_zero())
        out.push_back(sig.generator_name(g) + " is not anti-linear");
    }
  }
  return out;
}

GradedRep restrict_rep(const GradedRep& rep, std::span<const int> gens, Signature sig) {
  if (static_cast<int>(gens.size()) != sig.generators()) throw std::invalid_argument("restrict_rep: generator count mismatch");
  GradedRep out;
  out.sig = sig;
  out.grading = rep.grading;
  out.complex_structure = rep.complex_structure;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    out.images.push_back(rep.image(gens[k]));
    out.linearity.push_back(static_cast<std::size_t>(gens[k]) < rep.linearity.size() ? rep.linearity[static_cast<std::size_t>(gens[k])]
                                                                                      : Linearity::complex_linear);
    if (rep.grading_generator && *rep.grading_generator == gens[k]) out.grading_generator = static_cast<int>(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

RealMatrix standard_complex_structure(std::size_t complex_dim) {
  RealMatrix jc(2 * complex_dim, 2 * complex_dim);
  for (std::size_t k = 0; k < complex_dim; ++k) {
    jc(2 * k + 1, 2 * k) = 1;
    jc(2 * k, 2 * k + 1) = -1;
  }
  return jc;
}

RealMatrix real_form(const ComplexMatrix& m) {
  RealMatrix r(2 * m.rows(), 2 * m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const QComplex& z = m(j, k);
      r(2 * j, 2 * k) = z.re;
      r(2 * j, 2 * k + 1) = -z.im;
      r(2 * j + 1, 2 * k) = z.im;
      r(2 * j + 1, 2 * k + 1) = z.re;
    }
  return r;
}

RealMatrix real_form_antilinear(const ComplexMatrix& m) {
  RealMatrix r(2 * m.rows(), 2 * m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const QComplex& z = m(j, k);
      r(2 * j, 2 * k) = z.re;
      r(2 * j, 2 * k + 1) = z.im;
      r(2 * j + 1, 2 * k) = z.im;
      r(2 * j + 1, 2 * k + 1) = -z.re;
    }
  return r;
}

ComplexFrame::ComplexFrame(const RealMatrix& jc) {
  const std::size_t n = jc.rows();
  if (!jc.is_square() || n % 2 || !(jc * jc == -RealMatrix::identity(n)))
    throw std::invalid_argument("ComplexFrame: not a complex structure");
  basis_ = RealMatrix(n, n);
  SparseEchelon<Rational> span(n);
  std::size_t filled = 0;
  for (std::size_t k = 0; k < n && filled < n; ++k) {
    SparseRow<Rational> ek{{k, Rational(1)}};
    if (span.in_span(ek)) continue;
    std::vector<Rational> jv(n);
    for (std::size_t r = 0; r < n; ++r) jv[r] = jc(r, k);
    span.add(ek);
    span.add(to_sparse(jv));
    basis_(k, filled) = 1;
    for (std::size_t r = 0; r < n; ++r) basis_(r, filled + 1) = jv[r];
    filled += 2;
  }
  inverse_ = inverse(basis_);
}

ComplexMatrix ComplexFrame::linear(const RealMatrix& t) const {
  const RealMatrix s = inverse_ * t * basis_;
  ComplexMatrix m(s.rows() / 2, s.cols() / 2);
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& a = s(2 * j, 2 * k);
      const Rational& b = s(2 * j + 1, 2 * k);
      if (s(2 * j, 2 * k + 1) != -b || s(2 * j + 1, 2 * k + 1) != a)
        throw std::invalid_argument("ComplexFrame::linear: map is not complex-linear");
      m(j, k) = QComplex(a, b);
    }
  return m;
}

ComplexMatrix ComplexFrame::antilinear(const RealMatrix& t) const {
  const RealMatrix s = inverse_ * t * basis_;
  ComplexMatrix m(s.rows() / 2, s.cols() / 2);
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& a = s(2 * j, 2 * k);
      const Rational& b = s(2 * j + 1, 2 * k);
      if (s(2 * j, 2 * k + 1) != b || s(2 * j + 1, 2 * k + 1) != -a)
        throw std::invalid_argument("ComplexFrame::antilinear: map is not anti-linear");
      m(j, k) = QComplex(a, b);
    }
  return m;
}

RealMatrix ComplexFrame::from_linear(const ComplexMatrix& m) const { return basis_ * real_form(m) * inverse_; }

RealMatrix ComplexFrame::from_antilinear(const ComplexMatrix& m) const {
  return basis_ * real_form_antilinear(m) * inverse_;
}

// ---------------------------------------------------------------------------

SpinCElement SpinCElement::make(Signature sig, std::vector<AlgebraElement> unit_vectors, Phase phase) {
  if (unit_vectors.size() % 2) throw std::invalid_argument("spin^c element: odd number of vector factors");
  if (!phase.on_unit_circle()) throw std::invalid_argument("spin^c element: phase is not on the unit circle");
  SpinCElement lam;
  lam.sig_ = sig;
  lam.phase_ = phase;
  lam.mu_ = AlgebraElement::scalar(sig, 1);
  lam.mu_inv_ = AlgebraElement::scalar(sig, 1);
  const AlgebraElement minus_one = AlgebraElement::scalar(sig, -1);
  for (const auto& v : unit_vectors) {
    if (!(v.signature() == sig)) throw std::invalid_argument("spin^c element: factor over a different signature");
    for (const auto& [b, c] : v.terms())
      if (b.grade() != 1 || b.mask >> sig.p) throw std::invalid_argument("spin^c element: factor is not a vector in the span of the e_i");
    if (!(v * v == minus_one)) throw std::invalid_argument("spin^c element: factor is not unit-normalized");
    lam.mu_ = lam.mu_ * v;
    lam.mu_inv_ = (-v) * lam.mu_inv_;
  }
  lam.factors_ = std::move(unit_vectors);
  return lam;
}

SpinCElement SpinCElement::identity(Signature sig, Phase phase) { return make(sig, {}, phase); }

// ---------------------------------------------------------------------------

GradedRep spinor_rep_any(int two_n) {
  if (two_n < 0 || two_n % 2) throw std::invalid_argument("spinor rep: dimension must be even and non-negative");
  if (two_n == 0) {
    GradedRep s0;
    s0.sig = Signature(0, 0);
    s0.grading = RealMatrix::identity(2);
    s0.complex_structure = standard_complex_structure(1);
    return s0;
  }
  if (two_n == 2) {
    const Rho23Rep rho = build_rho23();
    const int gens[] = {0, 1};
    GradedRep s2 = restrict_rep(rho.rep, gens, Signature(2, 0));
    s2.grading = grading_operator(s2);
    s2.grading_generator.reset();
    return s2;
  }
  return graded_tensor(spinor_rep_any(two_n - 2), spinor_rep_any(2));
}

GradedRep build_spinor_rep(int two_n) {
  if (two_n != 2 && two_n != 4 && two_n != 6 && two_n != 8)
    throw std::invalid_argument("build_spinor_rep: unsupported dimension " + std::to_string(two_n) + " (expected 2, 4, 6 or 8)");
  return spinor_rep_any(two_n);
}

RealMatrix grading_operator(const GradedRep& rep) {
  if (!rep.is_complex()) throw std::invalid_argument("grading_operator: representation has no complex structure");
  if (rep.sig.q != 0 || rep.sig.p % 2) throw std::invalid_argument("grading_operator: expected Cl(2n, 0)");
  RealMatrix out = RealMatrix::identity(rep.dim());
  for (int k = 0; k < rep.sig.p / 2; ++k) out = out * rep.jc();
  for (int g = 0; g < rep.sig.p; ++g) out = out * rep.image(g);
  return out;
}

GradedRep graded_tensor(const GradedRep& a, const GradedRep& b) {
  if (!a.is_complex() || !b.is_complex()) throw std::invalid_argument("graded_tensor: both factors must be complex");
  for (const auto* r : {&a, &b})
    for (const auto lin : r->linearity)
      if (lin != Linearity::complex_linear) throw std::invalid_argument("graded_tensor: anti-linear generator images cannot be tensored over C");
  const ComplexFrame fa(a.jc());
  const ComplexFrame fb(b.jc());
  const ComplexMatrix ga = fa.linear(a.grading);
  const ComplexMatrix gb = fb.linear(b.grading);
  const ComplexMatrix ida = ComplexMatrix::identity(fa.complex_dim());
  const ComplexMatrix idb = ComplexMatrix::identity(fb.complex_dim());

  GradedRep out;
  out.sig = Signature(a.sig.p + b.sig.p, a.sig.q + b.sig.q);
  out.images.resize(static_cast<std::size_t>(out.sig.generators()));
  // e's of a, e's of b, eps's of a, eps's of b
  for (int g = 0; g < a.sig.generators(); ++g) {
    const int target = g < a.sig.p ? g : out.sig.p + (g - a.sig.p);
    out.images[static_cast<std::size_t>(target)] = real_form(kron(fa.linear(a.image(g)), idb));
  }
  for (int g = 0; g < b.sig.generators(); ++g) {
    const int target = g < b.sig.p ? a.sig.p + g : out.sig.p + a.sig.q + (g - b.sig.p);
    out.images[static_cast<std::size_t>(target)] = real_form(kron(ga, fb.linear(b.image(g))));
  }
  out.grading = real_form(kron(ga, gb));
  out.complex_structure = standard_complex_structure(fa.complex_dim() * fb.complex_dim());
  out.linearity.assign(out.images.size(), Linearity::complex_linear);
  (void)ida;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void add_relation(MatrixEquations<Rational>& eqs, const RealMatrix& m, Relation rel) {
  if (rel == Relation::none) return;
  eqs.intertwine(m, m, rel == Relation::commute ? 1 : -1);
}

}  // namespace

std::vector<RealMatrix> solve_commutant(const GradedRep& rep, const CommutantSpec& spec) {
  MatrixEquations<Rational> eqs(rep.dim(), rep.dim());
  for (const auto& img : rep.images) add_relation(eqs, img, spec.generators);
  if (spec.complex_structure != Relation::none) add_relation(eqs, rep.jc(), spec.complex_structure);
  add_relation(eqs, rep.grading, spec.grading);
  return eqs.solve();
}

std::size_t commutant_dimension(const GradedRep& rep, Field linearity) {
  CommutantSpec spec;
  spec.complex_structure = linearity == Field::complex ? Relation::commute : Relation::none;
  return solve_commutant(rep, spec).size();
}

std::optional<std::pair<Rational, Rational>> rational_two_squares(const Rational& s) {
  if (sgn(s) < 0) return std::nullopt;
  if (sgn(s) == 0) return std::make_pair(Rational(0), Rational(0));
  // x^2 + y^2 = n/d  <=>  (xd)^2 + (yd)^2 = n d
  const mpz_class target = s.get_num() * s.get_den();
  const mpz_class limit = sqrt(target);
  if (limit > 1000000) return std::nullopt;
  for (mpz_class x = 0; x <= limit; ++x) {
    const mpz_class rest = target - x * x;
    const mpz_class y = sqrt(rest);
    if (y * y == rest) return std::make_pair(ratio(x, s.get_den()), ratio(y, s.get_den()));
  }
  return std::nullopt;
}

AntiLinearMap find_structure_J(const GradedRep& rep, StructureKind kind) {
  if (!rep.is_complex()) throw std::invalid_argument("find_structure_J: representation has no complex structure");
  const std::vector<RealMatrix> basis =
      solve_commutant(rep, {Relation::anticommute, Relation::anticommute, Relation::commute});
  const char* wanted = kind == StructureKind::real ? "+Id" : "-Id";
  if (basis.empty())
    throw StructureNotFound(std::string("no even anti-linear map anticommuting with Clifford multiplication exists ") +
                            "(constraint space has dimension 0); J^2 = " + wanted + " is unattainable");
  SmallIntegerScan scan(basis.size());
  std::vector<int> c;
  while (scan.next(c)) {
    const RealMatrix j0 = combine<Rational>(basis, c);
    const auto s = scalar_value<Rational>(j0 * j0);
    if (!s || is_zero(*s)) continue;
    const bool positive = sgn(*s) > 0;
    if (positive != (kind == StructureKind::real))
      throw StructureNotFound(std::string("constraint space (dimension ") + std::to_string(basis.size()) +
                              ") only admits J^2 of sign " + (positive ? "+" : "-") + ", wanted " + wanted);
    // (J0 (a + b Jc))^2 = (a^2 + b^2) J0^2
    const Rational mag = abs(*s);
    const auto xy = rational_two_squares(mag);
    if (!xy) continue;
    const Rational a = xy->first / mag;
    const Rational b = xy->second / mag;
    RealMatrix j = j0 * (RealMatrix::identity(rep.dim()) * a + rep.jc() * b);
    const RealMatrix target = kind == StructureKind::real ? RealMatrix::identity(rep.dim()) : -RealMatrix::identity(rep.dim());
    if (!(j * j == target)) continue;
    return {std::move(j), rep.jc()};
  }
  throw StructureNotFound("no rationally normalizable J in the constraint space");
}

std::optional<RealMatrix> intertwiner(const GradedRep& rep1, const GradedRep& rep2) {
  if (!(rep1.sig == rep2.sig)) throw std::invalid_argument("intertwiner: signatures differ");
  if (rep1.dim() != rep2.dim()) throw std::invalid_argument("intertwiner: carrier dimensions differ");
  MatrixEquations<Rational> eqs(rep2.dim(), rep1.dim());
  for (int g = 0; g < rep1.sig.generators(); ++g) eqs.intertwine(rep1.image(g), rep2.image(g));
  if (rep1.is_complex() && rep2.is_complex()) eqs.intertwine(rep1.jc(), rep2.jc());
  const std::vector<RealMatrix> basis = eqs.solve();
  return first_invertible<Rational>(basis);
}

RealMatrix spin_c_matrix(const GradedRep& rep, const SpinCElement& lam) {
  if (!rep.is_complex()) throw std::invalid_argument("spin_c: representation has no complex structure");
  const Signature& ls = lam.signature();
  if (ls.q != 0 || ls.p > rep.sig.p) throw std::invalid_argument("spin^c element does not act on this representation");
  const RealMatrix mu = rep.act(lam.even_part().embed(rep.sig));
  const RealMatrix u = RealMatrix::identity(rep.dim()) * lam.phase().c + rep.jc() * lam.phase().s;
  return mu * u;
}

std::vector<Rational> spin_c_apply(const GradedRep& rep, const SpinCElement& lam, std::span<const Rational> v) {
  if (v.size() != rep.dim()) throw std::invalid_argument("spin_c_apply: vector dimension mismatch");
  const RealMatrix m = spin_c_matrix(rep, lam);
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace cliffloc
