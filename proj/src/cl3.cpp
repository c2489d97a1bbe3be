#include "cliffloc/cl3.hpp"

#include <stdexcept>

namespace cliffloc {

namespace {

RealMatrix form_map(std::initializer_list<std::tuple<int, int, int>> entries) {
  // (source, target, sign) on the basis {1, e1, e2, e1e2}
  RealMatrix m(4, 4);
  for (const auto& [src, dst, s] : entries) m(static_cast<std::size_t>(dst), static_cast<std::size_t>(src)) = s;
  return m;
}

}  // namespace

Rho23Rep build_rho23() {
  enum { one = 0, e1 = 1, e2 = 2, e12 = 3 };
  Rho23Rep r;
  r.wedge[0] = form_map({{one, e1, 1}, {e2, e12, 1}});
  r.wedge[1] = form_map({{one, e2, 1}, {e1, e12, -1}});
  r.contraction[0] = form_map({{e1, one, 1}, {e12, e2, 1}});
  r.contraction[1] = form_map({{e2, one, 1}, {e12, e1, -1}});

  GradedRep& rep = r.rep;
  rep.sig = Signature(2, 3);
  rep.grading = form_map({{one, one, 1}, {e1, e1, -1}, {e2, e2, -1}, {e12, e12, 1}});
  rep.images = {r.wedge[0] - r.contraction[0], r.wedge[1] - r.contraction[1], rep.grading,
                r.wedge[0] + r.contraction[0], r.wedge[1] + r.contraction[1]};
  rep.complex_structure = -(rep.images[0] * rep.images[1] * rep.images[2]);
  rep.linearity = {Linearity::complex_linear, Linearity::complex_linear, Linearity::complex_linear,
                   Linearity::anti_linear, Linearity::anti_linear};
  rep.grading_generator = 2;

  const auto bad = rep.invariant_violations();
  if (!bad.empty()) throw std::logic_error("rho23: " + bad.front());
  return r;
}

// ---------------------------------------------------------------------------

Cl3Layout Cl3Layout::for_case(int n, int tau) {
  if (n < 0 || (tau != 0 && tau != 1)) throw std::invalid_argument("Cl3 layout: need n >= 0 and tau in {0, 1}");
  Cl3Layout l;
  l.n = n;
  l.tau = tau;
  l.dim_x = 8 * n + 2 + 4 * tau;
  if (tau == 0) {
    l.sig = Signature(l.dim_x, 3);
    l.eps1 = l.dim_x;
    l.eta1 = l.dim_x + 1;
    l.eta2 = l.dim_x + 2;
  } else {
    l.sig = Signature(l.dim_x + 2, 1);
    l.eta1 = l.dim_x;
    l.eta2 = l.dim_x + 1;
    l.eps1 = l.dim_x + 2;
  }
  return l;
}

std::vector<int> Cl3Layout::clifford() const {
  std::vector<int> out(static_cast<std::size_t>(dim_x));
  for (int k = 0; k < dim_x; ++k) out[static_cast<std::size_t>(k)] = k;
  return out;
}

Signature Cl3Layout::cl2_signature() const { return tau == 0 ? Signature(dim_x, 2) : Signature(dim_x + 1, 1); }

std::vector<int> Cl3Layout::cl2_generators() const {
  std::vector<int> out = clifford();
  if (tau == 0) {
    out.push_back(eps1);
    out.push_back(eta1);
  } else {
    out.push_back(eta1);
    out.push_back(eps1);
  }
  return out;
}

// ---------------------------------------------------------------------------

Cl3Extension extend_to_cl3(int n, int tau, bool allow_large) {
  if (n != 0 && !allow_large)
    throw std::invalid_argument("extend_to_cl3: n = " + std::to_string(n) + " needs the large-case override");
  Cl3Extension ext;
  ext.layout = Cl3Layout::for_case(n, tau);
  const Cl3Layout& l = ext.layout;
  const Rho23Rep rho = build_rho23();
  const int base_dim = 8 * n + 4 * tau;
  ext.base = spinor_rep_any(base_dim);

  if (base_dim == 0) {
    // S(Y) is a point; J is complex conjugation on C and S is rho23 itself.
    ext.structure_j = {RealMatrix(2, 2), ext.base.jc()};
    ext.structure_j.matrix(0, 0) = 1;
    ext.structure_j.matrix(1, 1) = -1;
    ext.rep = rho.rep;
    ext.frame = ComplexFrame(ext.rep.jc());
    return ext;
  }

  ext.structure_j = find_structure_J(ext.base, tau == 0 ? StructureKind::real : StructureKind::quaternionic);
  const ComplexFrame fb(ext.base.jc());
  const ComplexFrame f2(rho.rep.jc());
  const ComplexMatrix gb = fb.linear(ext.base.grading);
  const ComplexMatrix jb = fb.antilinear(ext.structure_j.matrix);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);

  GradedRep& rep = ext.rep;
  rep.sig = l.sig;
  rep.images.resize(static_cast<std::size_t>(l.sig.generators()));
  rep.linearity.assign(rep.images.size(), Linearity::complex_linear);
  for (int g = 0; g < base_dim; ++g) rep.images[static_cast<std::size_t>(g)] = real_form(kron(fb.linear(ext.base.image(g)), id2));
  for (int k = 0; k < 2; ++k)
    rep.images[static_cast<std::size_t>(base_dim + k)] = real_form(kron(gb, f2.linear(rho.rep.image(k))));
  rep.images[static_cast<std::size_t>(l.eps1)] = real_form(kron(gb, f2.linear(rho.rep.image(2))));
  // eta_k = J (x) rho23(eps_{k+1}), both anti-linear
  rep.images[static_cast<std::size_t>(l.eta1)] = real_form_antilinear(kron(jb, f2.antilinear(rho.rep.image(3))));
  rep.images[static_cast<std::size_t>(l.eta2)] = real_form_antilinear(kron(jb, f2.antilinear(rho.rep.image(4))));
  rep.linearity[static_cast<std::size_t>(l.eta1)] = Linearity::anti_linear;
  rep.linearity[static_cast<std::size_t>(l.eta2)] = Linearity::anti_linear;
  rep.grading = rep.images[static_cast<std::size_t>(l.eps1)];
  rep.grading_generator = l.eps1;
  rep.complex_structure = standard_complex_structure(fb.complex_dim() * 2);
  ext.frame = ComplexFrame(rep.jc());

  const auto bad = rep.invariant_violations();
  if (!bad.empty()) throw std::logic_error("extend_to_cl3: " + bad.front());
  return ext;
}

RealMatrix literal_eta_candidate(const Cl3Extension& ext, int k) {
  if (ext.base.dim() <= 2) throw std::invalid_argument("literal_eta_candidate: S(Y) is a point");
  const Rho23Rep rho = build_rho23();
  const ComplexFrame fb(ext.base.jc());
  const ComplexFrame f2(rho.rep.jc());
  const ComplexMatrix jg = fb.antilinear(ext.structure_j.matrix * ext.base.grading);
  return real_form_antilinear(kron(jg, f2.antilinear(rho.rep.image(k == 1 ? 3 : 4))));
}

// ---------------------------------------------------------------------------

AlgebraElement ad_z2(const SpinCElement& lam, const AlgebraElement& v, const Cl3Layout& layout) {
  const Signature& sig = layout.sig;
  if (!(v.signature() == sig)) throw std::invalid_argument("ad_z2: element is not in Cl3");
  const AlgebraElement mu = lam.even_part().embed(sig);
  const AlgebraElement mu_inv = lam.even_part_inverse().embed(sig);
  const Phase u2 = lam.phase().squared();

  std::vector<AlgebraElement> image(static_cast<std::size_t>(sig.generators()));
  for (int g = 0; g < sig.generators(); ++g) {
    const AlgebraElement x = AlgebraElement::generator(sig, g);
    if (g < layout.dim_x)
      image[static_cast<std::size_t>(g)] = mu * x * mu_inv;
    else
      image[static_cast<std::size_t>(g)] = x;
  }
  const AlgebraElement eta1 = AlgebraElement::generator(sig, layout.eta1);
  const AlgebraElement eta2 = AlgebraElement::generator(sig, layout.eta2);
  image[static_cast<std::size_t>(layout.eta1)] = u2.c * eta1 + u2.s * eta2;
  image[static_cast<std::size_t>(layout.eta2)] = u2.c * eta2 - u2.s * eta1;

  AlgebraElement out(sig);
  for (const auto& [b, c] : v.terms()) {
    AlgebraElement prod = AlgebraElement::scalar(sig, c);
    for (int g = 0; g < sig.generators(); ++g)
      if (b.mask >> g & 1) prod = prod * image[static_cast<std::size_t>(g)];
    out += prod;
  }
  return out;
}

bool check_equivariance(const SpinCElement& lam, const AlgebraElement& v, const Cl3Extension& ext) {
  const RealMatrix delta = spin_c_matrix(ext.rep, lam);
  return delta * ext.rep.act(v) == ext.rep.act(ad_z2(lam, v, ext.layout)) * delta;
}

// ---------------------------------------------------------------------------

bool LHFiber::contains(const RealMatrix& m) const {
  SparseEchelon<Rational> ech(m.rows() * m.cols());
  for (const auto& b : basis) ech.add(flatten(b));
  return ech.in_span(flatten(m));
}

bool LHFiber::closed_under_i() const {
  for (const auto& b : basis)
    if (!contains(complex_structure * b)) return false;
  return true;
}

LHFiber lh_fiber_basis(const Cl3Extension& ext) {
  const GradedRep& rep = ext.rep;
  MatrixEquations<Rational> eqs(rep.dim(), rep.dim());
  eqs.intertwine(rep.grading, rep.grading, -1);
  for (int g : ext.layout.clifford()) eqs.intertwine(rep.image(g), rep.image(g), -1);
  const int symmetry = ext.layout.tau == 0 ? 1 : -1;
  eqs.symmetry(symmetry);
  LHFiber fiber{eqs.solve(), rep.jc(), symmetry};
  if (fiber.dim() != 2)
    throw FiberDimensionError("L_H fiber has dimension " + std::to_string(fiber.dim()) + ", expected 2");
  return fiber;
}

FiberCorrespondence fiberwise_correspondence(const Cl3Extension& ext, const LHFiber& fiber) {
  FiberCorrespondence r;
  const RealMatrix& e1 = ext.eta(1);
  const RealMatrix& e2 = ext.eta(2);
  r.eta_in_fiber = fiber.contains(e1) && fiber.contains(e2);
  SparseEchelon<Rational> ech(e1.rows() * e1.cols());
  ech.add(flatten(e1));
  ech.add(flatten(e2));
  r.independent = ech.rank() == 2 && fiber.dim() == 2;
  r.i_compatible = ext.rep.jc() * e1 == e2;
  return r;
}

EndIsoResult end_iso_check(const Cl3Extension& ext) {
  EndIsoResult r;
  std::vector<RealMatrix> images;
  for (int g : ext.layout.cl2_generators()) images.push_back(ext.rep.image(g));
  r.relations = check_generator_relations<RealMatrix>(images, ext.layout.cl2_signature());
  const std::size_t d = ext.rep.dim();
  r.expected = d * d;
  r.image_dim = generated_dimension<RealMatrix>(images, d * d);
  return r;
}

std::vector<AlgebraElement> cl2_anticommutant(int n, int tau) {
  const Cl3Layout l = Cl3Layout::for_case(n, tau);
  const Signature sig = l.cl2_signature();
  std::vector<AlgebraElement> constraints{AlgebraElement::generator(sig, sig.eps(1))};
  for (int k = 0; k < l.dim_x; ++k) constraints.push_back(AlgebraElement::generator(sig, k));
  return anticommutant_basis(sig, constraints);
}

bool SignRow::agrees_with_claim() const {
  return eta1_square && eta2_square && *eta1_square == claimed_square && *eta2_square == claimed_square;
}

SignRow sign_row(int n, int tau) {
  SignRow row;
  row.n = n;
  row.tau = tau;
  const Cl3Extension ext = extend_to_cl3(n, tau, true);
  row.eta1_square = scalar_value<Rational>(ext.eta(1) * ext.eta(1));
  row.eta2_square = scalar_value<Rational>(ext.eta(2) * ext.eta(2));
  for (const auto& v : cl2_anticommutant(n, tau)) {
    row.anticommutant_basis.push_back(v.to_string());
    row.anticommutant_squares.push_back((v * v).to_string());
  }
  row.signature_square = ext.layout.sig.square(ext.layout.eta1);
  row.claimed_square = tau == 0 ? -1 : 1;
  return row;
}

}  // namespace cliffloc
