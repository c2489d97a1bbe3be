#include "cliffloc/symbol.hpp"

#include <stdexcept>

namespace cliffloc {

namespace {

ComplexMatrix times_i(const RealMatrix& m) { return complexify(m) * QComplex::i(); }

QComplex i_power(int tau) { return tau == 0 ? QComplex(1) : QComplex::i(); }

Rational sum_squares(std::span<const Rational> v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

Rational random_coordinate(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 5) - 2;
  const long den = static_cast<long>(rng() % 2) + 1;
  return ratio(num, den);
}

// The S(Y) factor as complex matrices.
struct BaseFactor {
  ComplexFrame frame;
  std::vector<ComplexMatrix> images;
  ComplexMatrix grading;
  ComplexMatrix j;  // anti-linear matrix of the structure J

  explicit BaseFactor(const Cl3Extension& ext) : frame(ext.base.jc()) {
    for (const auto& img : ext.base.images) images.push_back(frame.linear(img));
    grading = frame.linear(ext.base.grading);
    j = frame.antilinear(ext.structure_j.matrix);
  }

  ComplexMatrix clifford(std::span<const Rational> xi) const {
    if (xi.size() != images.size()) throw std::invalid_argument("xi has the wrong dimension for Y");
    ComplexMatrix c(frame.complex_dim(), frame.complex_dim());
    for (std::size_t k = 0; k < xi.size(); ++k)
      if (!is_zero(xi[k])) c += images[k] * QComplex(xi[k]);
    return c;
  }
};

ComplexMatrix symbol_matrix(const GradedRep& rep, const Cl3Layout& l, std::span<const Rational> xi, const QComplex& h) {
  if (static_cast<int>(xi.size()) != l.dim_x) throw std::invalid_argument("symbol: xi has the wrong dimension");
  RealMatrix c(rep.dim(), rep.dim());
  for (int k = 0; k < l.dim_x; ++k)
    if (!is_zero(xi[static_cast<std::size_t>(k)])) c += rep.image(k) * xi[static_cast<std::size_t>(k)];
  const RealMatrix hm = rep.image(l.eta1) * h.re + rep.image(l.eta2) * h.im;
  return times_i(c) + complexify(hm) * i_power(l.tau);
}

void check_symbol(const SymbolOperator& s, const std::string& label, CheckReport& r) {
  ++r.checked;
  const std::size_t n = s.matrix.rows();
  if (!(s.matrix * s.matrix == ComplexMatrix::identity(n) * QComplex(s.norm2)))
    r.failures.push_back(label + ": square is not (|xi|^2 + |h|^2) Id");
  if (!anticommutator(s.matrix, s.grading).is_zero()) r.failures.push_back(label + ": not odd");
  if (is_invertible(s.matrix) != !is_zero(s.norm2))
    r.failures.push_back(label + ": invertibility does not match (xi, h) != 0");
}

std::string sample_label(std::size_t k) { return "sample " + std::to_string(k); }

}  // namespace

RealMatrix SymbolOperator::doubled() const {
  const std::size_t n = matrix.rows();
  RealMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QComplex& z = matrix(i, j);
      r(i, j) = z.re;
      r(i, j + n) = -z.im;
      r(i + n, j) = z.im;
      r(i + n, j + n) = z.re;
    }
  return r;
}

SymbolOperator symbol(const Cl3Extension& ext, std::span<const Rational> xi, const QComplex& h) {
  SymbolOperator s;
  s.matrix = symbol_matrix(ext.rep, ext.layout, xi, h);
  s.grading = complexify(ext.rep.grading);
  s.norm2 = sum_squares(xi) + h.norm2();
  return s;
}

CheckReport support_identity_check(const Cl3Extension& ext, std::span<const SymbolSample> samples) {
  CheckReport r;
  for (std::size_t k = 0; k < samples.size(); ++k) check_symbol(symbol(ext, samples[k].xi, samples[k].h), sample_label(k), r);
  return r;
}

// ---------------------------------------------------------------------------

Twist Twist::trivial(std::size_t complex_dim) {
  Twist t;
  t.complex_dim = complex_dim;
  t.grading = RealMatrix::identity(2 * complex_dim);
  t.conjugation = real_form_antilinear(ComplexMatrix::identity(complex_dim));
  return t;
}

std::vector<std::string> Twist::violations() const {
  std::vector<std::string> out;
  const std::size_t d = 2 * complex_dim;
  if (grading.rows() != d || conjugation.rows() != d || !grading.is_square() || !conjugation.is_square()) {
    out.push_back("twist matrices do not have size " + std::to_string(d));
    return out;
  }
  const RealMatrix jc = standard_complex_structure(complex_dim);
  const RealMatrix id = RealMatrix::identity(d);
  if (!(grading * grading == id)) out.push_back("grading of E is not an involution");
  if (!commutator(grading, jc).is_zero()) out.push_back("grading of E is not complex-linear");
  if (!anticommutator(conjugation, jc).is_zero()) out.push_back("conjugation is not anti-linear");
  if (!commutator(conjugation, grading).is_zero()) out.push_back("conjugation is not even");
  if (!(conjugation * conjugation == id)) out.push_back("conjugation does not square to Id");
  return out;
}

SymbolOperator twisted_symbol(const Cl3Extension& ext, std::span<const Rational> xi, const QComplex& h,
                              const Twist& twist, const Rational& f) {
  const auto bad = twist.violations();
  if (!bad.empty()) throw std::invalid_argument("twisted_symbol: " + bad.front());
  const Cl3Layout& l = ext.layout;
  if (static_cast<int>(xi.size()) != l.dim_x) throw std::invalid_argument("twisted_symbol: xi has the wrong dimension");
  const GradedRep& rep = ext.rep;
  RealMatrix c(rep.dim(), rep.dim());
  for (int k = 0; k < l.dim_x; ++k) c += rep.image(k) * xi[static_cast<std::size_t>(k)];
  const RealMatrix hm = rep.image(l.eta1) * h.re + rep.image(l.eta2) * h.im;

  const ComplexFrame fe(standard_complex_structure(twist.complex_dim));
  const ComplexMatrix ide = ComplexMatrix::identity(twist.complex_dim);
  const RealMatrix c2 = real_form(kron(ext.frame.linear(c), ide));
  const RealMatrix h2 = real_form_antilinear(kron(ext.frame.antilinear(hm), fe.antilinear(twist.conjugation))) * f;

  SymbolOperator s;
  s.matrix = times_i(c2) + complexify(h2) * i_power(l.tau);
  s.grading = complexify(real_form(kron(ext.frame.linear(rep.grading), fe.linear(twist.grading))));
  s.norm2 = sum_squares(xi) + f * f * h.norm2();
  return s;
}

CheckReport twisted_support_check(const Cl3Extension& ext, const Twist& twist, const Rational& f,
                                  std::span<const SymbolSample> samples) {
  CheckReport r;
  for (std::size_t k = 0; k < samples.size(); ++k)
    check_symbol(twisted_symbol(ext, samples[k].xi, samples[k].h, twist, f), sample_label(k), r);
  return r;
}

// ---------------------------------------------------------------------------

FiberPoint FiberPoint::rotated() const {
  FiberPoint p = *this;
  p.ub = {-uf[0], -uf[1]};
  p.uf = ub;
  return p;
}

FiberPoint FiberPoint::scaled(const Rational& t) const {
  FiberPoint p = *this;
  for (auto& x : p.xi) x *= t;
  for (auto* a : {&p.ub, &p.uf})
    for (auto& x : *a) x *= t;
  return p;
}

Rational FiberPoint::norm2() const { return sum_squares(xi) + sum_squares(ub) + sum_squares(uf); }

std::vector<FiberPoint> axis_points(int dim_y) {
  const std::size_t d = static_cast<std::size_t>(dim_y);
  std::vector<FiberPoint> out;
  const FiberPoint zero{std::vector<Rational>(d), {}, {}};
  out.push_back(zero);
  for (std::size_t k = 0; k < d; ++k) {
    FiberPoint p = zero;
    p.xi[k] = 1;
    out.push_back(p);
  }
  for (int k = 0; k < 2; ++k) {
    FiberPoint b = zero;
    b.ub[static_cast<std::size_t>(k)] = 1;
    out.push_back(b);
    FiberPoint f = zero;
    f.uf[static_cast<std::size_t>(k)] = 1;
    out.push_back(f);
  }
  return out;
}

std::vector<FiberPoint> random_fiber_points(int dim_y, std::size_t count, std::mt19937_64& rng) {
  std::vector<FiberPoint> out(count);
  for (auto& p : out) {
    p.xi.resize(static_cast<std::size_t>(dim_y));
    for (auto& x : p.xi) x = random_coordinate(rng);
    for (auto& x : p.ub) x = random_coordinate(rng);
    for (auto& x : p.uf) x = random_coordinate(rng);
  }
  return out;
}

std::vector<SymbolSample> random_symbol_samples(int dim_x, std::size_t count, std::mt19937_64& rng) {
  std::vector<SymbolSample> out(count);
  for (auto& s : out) {
    s.xi.resize(static_cast<std::size_t>(dim_x));
    for (auto& x : s.xi) x = random_coordinate(rng);
    s.h.re = random_coordinate(rng);
    s.h.im = random_coordinate(rng);
  }
  return out;
}

std::vector<SymbolSample> axis_symbol_samples(int dim_x) {
  const std::size_t d = static_cast<std::size_t>(dim_x);
  std::vector<SymbolSample> out;
  out.push_back({std::vector<Rational>(d), QComplex(0)});
  for (std::size_t k = 0; k < d; ++k) {
    SymbolSample s{std::vector<Rational>(d), QComplex(0)};
    s.xi[k] = 1;
    out.push_back(s);
  }
  out.push_back({std::vector<Rational>(d), QComplex(1)});
  out.push_back({std::vector<Rational>(d), QComplex::i()});
  return out;
}

// ---------------------------------------------------------------------------

RealMatrix fiber_clifford_model(const Cl3Extension& ext, const FiberPoint& p) {
  const BaseFactor base(ext);
  const Rho23Rep rho = build_rho23();
  const ComplexFrame f2(rho.rep.jc());
  const RealMatrix a = rho.rep.image(0) * p.uf[0] + rho.rep.image(1) * p.uf[1];
  const ComplexMatrix m = kron(base.clifford(p.xi), ComplexMatrix::identity(2)) + kron(base.grading, f2.linear(a));
  return ext.frame.from_linear(m);
}

RealMatrix clifford_action(const Cl3Extension& ext, const FiberPoint& p) {
  const int dy = ext.layout.dim_y();
  if (static_cast<int>(p.xi.size()) != dy) throw std::invalid_argument("fiber point: xi has the wrong dimension");
  RealMatrix c(ext.rep.dim(), ext.rep.dim());
  for (int k = 0; k < dy; ++k) c += ext.rep.image(k) * p.xi[static_cast<std::size_t>(k)];
  c += ext.rep.image(dy) * p.uf[0];
  c += ext.rep.image(dy + 1) * p.uf[1];
  return c;
}

RealMatrix fiber_eta_model(const Cl3Extension& ext, const FiberPoint& p) {
  const BaseFactor base(ext);
  const Rho23Rep rho = build_rho23();
  const ComplexFrame f2(rho.rep.jc());
  const RealMatrix b = rho.rep.image(3) * p.ub[0] + rho.rep.image(4) * p.ub[1];
  return ext.frame.from_antilinear(kron(base.j, f2.antilinear(b)));
}

ComplexMatrix localized_symbol(const Cl3Extension& ext, const FiberPoint& p) {
  std::vector<Rational> xi = p.xi;
  xi.push_back(p.uf[0]);
  xi.push_back(p.uf[1]);
  return symbol_matrix(ext.rep, ext.layout, xi, QComplex(p.ub[0], p.ub[1]));
}

ComplexMatrix theta(const Cl3Extension& ext, const FiberPoint& p) {
  const BaseFactor base(ext);
  const Rho23Rep rho = build_rho23();
  RealMatrix b = rho.rep.image(3) * p.ub[0] + rho.rep.image(4) * p.ub[1];
  if (ext.layout.tau == 1) b = rho.rep.jc() * b;
  const RealMatrix a = rho.rep.image(0) * p.uf[0] + rho.rep.image(1) * p.uf[1];
  const ComplexMatrix t = complexify(b) + times_i(a);
  return kron(base.clifford(p.xi) * QComplex::i(), ComplexMatrix::identity(4)) + kron(base.grading, t);
}

ComplexMatrix thom_wedge(const std::array<QComplex, 2>& w) {
  ComplexMatrix m(4, 4);
  m(1, 0) = w[0];
  m(2, 0) = w[1];
  m(3, 1) = -w[1];
  m(3, 2) = w[0];
  return m;
}

ComplexMatrix thom_contraction(const std::array<QComplex, 2>& w) {
  ComplexMatrix m(4, 4);
  m(0, 1) = w[0].conj();
  m(0, 2) = w[1].conj();
  m(1, 3) = -w[1].conj();
  m(2, 3) = w[0].conj();
  return m;
}

ComplexMatrix thom_operator(const FiberPoint& p, ThomVariant variant) {
  const std::array<QComplex, 2> w{QComplex(p.ub[0], p.uf[0]), QComplex(p.ub[1], p.uf[1])};
  return variant == ThomVariant::standard ? thom_wedge(w) + thom_contraction(w) : thom_wedge(w) - thom_contraction(w);
}

ComplexMatrix thom_symbol(const Cl3Extension& ext, const FiberPoint& p, ThomVariant variant) {
  const BaseFactor base(ext);
  return kron(base.clifford(p.xi) * QComplex::i(), ComplexMatrix::identity(4)) + kron(base.grading, thom_operator(p, variant));
}

// ---------------------------------------------------------------------------

std::optional<ComplexMatrix> simultaneous_intertwiner(std::span<const ComplexMatrix> lhs, std::span<const ComplexMatrix> rhs) {
  if (lhs.size() != rhs.size() || lhs.empty()) throw std::invalid_argument("simultaneous_intertwiner: need matching non-empty families");
  const std::size_t n = lhs.front().rows();
  const std::size_t m = rhs.front().rows();
  SparseEchelon<QComplex> seen(n * n);
  MatrixEquations<QComplex> eqs(m, n);
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (seen.add(flatten(lhs[k]))) eqs.intertwine(lhs[k], rhs[k]);
  const std::vector<ComplexMatrix> basis = eqs.solve();
  auto phi = first_invertible<QComplex>(basis);
  if (!phi) return std::nullopt;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (!(*phi * lhs[k] == rhs[k] * *phi)) return std::nullopt;
  return phi;
}

std::optional<ComplexMatrix> localization_intertwiner(const Cl3Extension& ext, std::span<const FiberPoint> samples,
                                                      ThomVariant variant) {
  std::vector<ComplexMatrix> lhs;
  std::vector<ComplexMatrix> rhs;
  for (const auto& p : samples) {
    lhs.push_back(localized_symbol(ext, p));
    rhs.push_back(thom_symbol(ext, p, variant));
  }
  return simultaneous_intertwiner(lhs, rhs);
}

std::pair<GradedRep, GradedRep> clifford4_actions(int tau) {
  const Rho23Rep rho = build_rho23();
  GradedRep lambda;
  GradedRep thom;
  for (GradedRep* r : {&lambda, &thom}) {
    r->sig = Signature(0, 4);
    r->complex_structure = standard_complex_structure(4);
    r->linearity.assign(4, Linearity::complex_linear);
    r->grading = real_form(complexify(rho.rep.grading));
  }
  for (int k = 0; k < 4; ++k) {
    FiberPoint p{{}, {}, {}};
    if (k < 2)
      p.ub[static_cast<std::size_t>(k)] = 1;
    else
      p.uf[static_cast<std::size_t>(k - 2)] = 1;
    RealMatrix b = rho.rep.image(3) * p.ub[0] + rho.rep.image(4) * p.ub[1];
    if (tau == 1) b = rho.rep.jc() * b;
    const RealMatrix a = rho.rep.image(0) * p.uf[0] + rho.rep.image(1) * p.uf[1];
    lambda.images.push_back(real_form(complexify(b) + times_i(a)));
    thom.images.push_back(real_form(thom_operator(p)));
  }
  return {lambda, thom};
}

}  // namespace cliffloc
