#include "cliffloc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cliffloc/genus.hpp"
#include "cliffloc/symbol.hpp"

namespace cliffloc {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n != 0 && !allow_large_n) throw std::invalid_argument("n = " + std::to_string(n) + " needs --allow-large-n");
  if (taus.empty()) throw std::invalid_argument("no tau selected");
  for (int t : taus)
    if (t != 0 && t != 1) throw std::invalid_argument("tau must be 0 or 1");
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (order < 1 || order > 50) throw std::invalid_argument("order must be in [1, 50]");
}

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::expected_failure: return "expected-failure";
  }
  return "?";
}

bool VerificationReport::ok() const { return count(CaseStatus::fail) == 0; }

std::size_t VerificationReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "rep", "cl3", "localization", "genus", "all"};
  return names;
}

const std::vector<std::string>& anchor_registry() {
  static const std::vector<std::string> anchors{
      "generator-conventions",   "anticommutant-of-clifford", "tensor-splitting",     "spinor-representation",
      "chirality-grading",       "graded-tensor-product",     "schur-commutant",      "real-quaternionic-structure",
      "intertwiner-uniqueness",  "spin-c-action",             "rho23-construction",   "cl3-extension",
      "twisted-adjoint",         "equivariance-diagram",      "lh-fiber",             "lh-complex-line",
      "fiberwise-correspondence", "end-algebra-iso",          "eta-square-signs",     "support-identity",
      "twisted-symbol",          "product-fiber-models",  "theta-operator",       "thom-symbol",
      "localization-intertwiner", "clifford4-uniqueness",     "index-formula",        "odd-part-identity",
      "index-doubling"};
  return anchors;
}

namespace {

json matrix_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json strings_json(const std::vector<std::string>& v, std::size_t limit = 10) {
  json a = json::array();
  for (std::size_t k = 0; k < v.size() && k < limit; ++k) a.push_back(v[k]);
  return a;
}

class Recorder {
 public:
  explicit Recorder(std::vector<CaseResult>& out) : out_(out) {}

  void add(std::string id, std::string anchor, bool ok, std::string detail = {}, json witness = json::object()) {
    record(std::move(id), std::move(anchor), ok ? CaseStatus::pass : CaseStatus::fail, std::move(detail), std::move(witness));
  }

  void expected_failure(std::string id, std::string anchor, bool failed_as_expected, std::string detail,
                        json witness = json::object()) {
    record(std::move(id), std::move(anchor), failed_as_expected ? CaseStatus::expected_failure : CaseStatus::fail,
           std::move(detail), std::move(witness));
  }

 private:
  void record(std::string id, std::string anchor, CaseStatus status, std::string detail, json witness) {
    const auto& reg = anchor_registry();
    if (std::find(reg.begin(), reg.end(), anchor) == reg.end()) throw std::logic_error("unregistered anchor '" + anchor + "'");
    out_.push_back({std::move(id), std::move(anchor), status, std::move(detail), std::move(witness)});
  }

  std::vector<CaseResult>& out_;
};

std::string tau_tag(int tau) { return "tau" + std::to_string(tau); }

// ---------------------------------------------------------------------------

AlgebraElement random_element(const Signature& sig, std::mt19937_64& rng) {
  AlgebraElement x(sig);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    const Blade b{static_cast<std::uint32_t>(rng() % sig.algebra_dim())};
    x += AlgebraElement::blade(sig, b, ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
  }
  return x;
}

void clifford_suite(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed);
  {
    const Signature s20(2, 0);
    const auto sq = blade_product(Blade{1}, Blade{1}, s20);
    rec.add("e1-squared", "generator-conventions", sq.sign == -1 && sq.blade.mask == 0);
    const auto se = blade_product(Blade{1}, Blade{1}, Signature(0, 1));
    rec.add("eps1-squared", "generator-conventions", se.sign == 1 && se.blade.mask == 0);
    const auto ab = blade_product(Blade{1}, Blade{2}, s20);
    const auto ba = blade_product(Blade{2}, Blade{1}, s20);
    rec.add("e1e2-anticommute", "generator-conventions", ab.sign == -ba.sign && ab.blade.mask == 3 && ba.blade.mask == 3);
  }
  {
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
      const int p = static_cast<int>(rng() % 5);
      const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(7 - p));
      const Signature sig(p, q);
      const AlgebraElement x = random_element(sig, rng), y = random_element(sig, rng), z = random_element(sig, rng);
      if (!((x * y) * z == x * (y * z))) ++bad;
      if (!(grade_involution(x * y) == grade_involution(x) * grade_involution(y))) ++bad;
      if (!(grade_involution(grade_involution(x)) == x)) ++bad;
    }
    rec.add("associativity-and-involution", "generator-conventions", bad == 0, std::to_string(bad) + " failures in 200 triples");
  }
  for (int tau : {0, 1}) {
    const auto basis = cl2_anticommutant(0, tau);
    const Cl3Layout l = Cl3Layout::for_case(0, tau);
    const Signature sig = l.cl2_signature();
    // expected span: the extra vector and (product of all e's) eps1 times it
    const int extra = tau == 0 ? sig.eps(2) : sig.e(sig.p);
    std::vector<int> word;
    for (int k = 0; k < l.dim_x; ++k) word.push_back(k);
    word.push_back(sig.eps(1));
    word.push_back(extra);
    const std::vector<AlgebraElement> pattern{AlgebraElement::generator(sig, extra), AlgebraElement::word(sig, word)};
    SparseEchelon<Rational> ech(sig.algebra_dim());
    for (const auto& v : basis) ech.add(coordinates(v));
    bool same = basis.size() == 2;
    for (const auto& v : pattern) same = same && ech.in_span(coordinates(v));
    json w = json::array();
    for (const auto& v : basis) w.push_back(v.to_string());
    rec.add("anticommutant-" + to_string(sig), "anticommutant-of-clifford", same,
            "dimension " + std::to_string(basis.size()), json{{"basis", w}});
  }
  {
    const auto images = splitting_images(0, 1);
    const auto rel = check_generator_relations<TensorElement>(images, Signature(6, 1));
    const std::size_t dim = generated_dimension<TensorElement>(images, std::size_t{1} << 7);
    rec.add("splitting-cl61", "tensor-splitting", rel.ok() && dim == 128,
            "relations " + rel.summary() + ", image dimension " + std::to_string(dim));
  }
  {
    bool ok = true;
    for (const Signature sig : {Signature(2, 1), Signature(3, 2), Signature(0, 4)}) {
      std::vector<AlgebraElement> gens;
      for (int g = 0; g < sig.generators(); ++g) gens.push_back(AlgebraElement::generator(sig, g));
      ok = ok && check_generator_relations<AlgebraElement>(gens, sig).ok() &&
           generated_dimension<AlgebraElement>(gens, sig.algebra_dim()) == sig.algebra_dim();
    }
    rec.add("algebra-dimension", "generator-conventions", ok);
  }
}

// ---------------------------------------------------------------------------

void rep_suite(const RunConfig& cfg, Recorder& rec) {
  for (int two_n : {2, 4, 6, 8}) {
    const GradedRep s = build_spinor_rep(two_n);
    const auto bad = s.invariant_violations();
    rec.add("spinor-S" + std::to_string(two_n), "spinor-representation", bad.empty() && s.dim() == (std::size_t{2} << (two_n / 2)),
            bad.empty() ? "real dimension " + std::to_string(s.dim()) : bad.front());
    if (two_n <= 6) {
      const std::size_t c = commutant_dimension(s, Field::complex);
      rec.add("commutant-S" + std::to_string(two_n), "schur-commutant", c == 2, "dimension " + std::to_string(c));
    }
  }
  {
    const GradedRep s2 = build_spinor_rep(2);
    const Rho23Rep rho = build_rho23();
    const RealMatrix g = grading_operator(s2);
    rec.add("grading-S2", "chirality-grading", g == rho.rep.image(2) && g * g == RealMatrix::identity(4));
  }
  {
    const GradedRep s4 = build_spinor_rep(4);
    const AntiLinearMap j = find_structure_J(s4, StructureKind::quaternionic);
    rec.add("J-S4-quaternionic", "real-quaternionic-structure",
            j.is_anti_linear() && j.matrix * j.matrix == -RealMatrix::identity(s4.dim()), "", json{{"J", matrix_json(j.matrix)}});
    const GradedRep s8 = build_spinor_rep(8);
    const AntiLinearMap j8 = find_structure_J(s8, StructureKind::real);
    bool ok = j8.is_anti_linear() && j8.matrix * j8.matrix == RealMatrix::identity(s8.dim()) &&
              commutator(j8.matrix, s8.grading).is_zero();
    for (const auto& img : s8.images) ok = ok && anticommutator(j8.matrix, img).is_zero();
    rec.add("J-S8-real", "real-quaternionic-structure", ok);
    const GradedRep s2 = build_spinor_rep(2);
    std::string why;
    try {
      find_structure_J(s2, StructureKind::real);
    } catch (const StructureNotFound& e) {
      why = e.what();
    }
    rec.expected_failure("J-S2-real", "real-quaternionic-structure", !why.empty(), why.empty() ? "unexpectedly found" : why);
  }
  {
    const GradedRep s4 = build_spinor_rep(4);
    const auto self = intertwiner(s4, s4);
    rec.add("intertwiner-self", "intertwiner-uniqueness", self.has_value() && is_invertible(*self));
    RealMatrix p = RealMatrix::identity(s4.dim());
    for (std::size_t k = 0; k + 1 < s4.dim(); ++k) p(k, k + 1) = static_cast<long>(k % 3) - 1;
    GradedRep conj = s4;
    const RealMatrix pinv = inverse(p);
    for (auto& img : conj.images) img = p * img * pinv;
    conj.grading = p * conj.grading * pinv;
    conj.complex_structure = p * s4.jc() * pinv;
    const auto t = intertwiner(s4, conj);
    bool ok = t.has_value();
    for (int g = 0; ok && g < s4.sig.generators(); ++g) ok = *t * s4.image(g) == conj.image(g) * *t;
    rec.add("intertwiner-conjugate", "intertwiner-uniqueness", ok);
  }
  {
    const GradedRep s2 = build_spinor_rep(2);
    const Signature sig(2, 0);
    const auto e1 = AlgebraElement::generator(sig, 0), e2 = AlgebraElement::generator(sig, 1);
    const RealMatrix m = spin_c_matrix(s2, SpinCElement::make(sig, {e1, e2}, Phase::one()));
    const RealMatrix m2 = m * m;
    rec.add("spin-c-e1e2", "spin-c-action", m2 * m2 == RealMatrix::identity(4) && !(m2 == RealMatrix::identity(4)));
    const RealMatrix u = spin_c_matrix(s2, SpinCElement::identity(sig, Phase::from_slope(Rational(1, 2))));
    bool central = true;
    for (const auto& img : s2.images) central = central && commutator(u, img).is_zero();
    rec.add("spin-c-phase-central", "spin-c-action", central);
  }
  (void)cfg;
}

// ---------------------------------------------------------------------------

std::vector<SpinCElement> sample_spin_c(int dim_x, std::size_t count, std::mt19937_64& rng) {
  const Signature sig(dim_x, 0);
  std::vector<SpinCElement> out;
  const Phase fixed[] = {Phase::one(), Phase::i(), {Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
  while (out.size() < count) {
    std::vector<AlgebraElement> vs;
    for (int f = 0; f < 2; ++f) {
      const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(dim_x));
      int b = static_cast<int>(rng() % static_cast<std::uint64_t>(dim_x - 1));
      if (b >= a) ++b;
      const Phase rot = Phase::from_slope(ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
      vs.push_back(rot.c * AlgebraElement::generator(sig, a) + rot.s * AlgebraElement::generator(sig, b));
    }
    const Phase u = out.size() % 3 == 0 ? fixed[out.size() / 3 % 4]
                                         : Phase::from_slope(ratio(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1));
    out.push_back(SpinCElement::make(sig, vs, u));
  }
  return out;
}

void cl3_suite(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed);
  {
    const Rho23Rep rho = build_rho23();
    const auto bad = rho.rep.invariant_violations();
    rec.add("rho23", "rho23-construction", bad.empty(), bad.empty() ? rho.rep.relations().summary() : bad.front(),
            json{{"complex_structure", matrix_json(rho.rep.jc())}});
  }
  for (int tau : cfg.taus) {
    const std::string tag = tau_tag(tau);
    const Cl3Extension ext = extend_to_cl3(cfg.n, tau, cfg.allow_large_n);
    const Cl3Layout& l = ext.layout;
    const auto rel = ext.rep.relations();
    const auto bad = ext.rep.invariant_violations();
    rec.add("extension-" + tag, "cl3-extension", rel.ok() && bad.empty(),
            to_string(l.sig) + ": " + rel.summary() + (bad.empty() ? "" : "; " + bad.front()));

    const std::vector<int> cl = l.clifford();
    const GradedRep restricted = restrict_rep(ext.rep, cl, Signature(l.dim_x, 0));
    const auto t = intertwiner(build_spinor_rep(l.dim_x), restricted);
    rec.add("restriction-" + tag, "cl3-extension", t.has_value(), "restriction to the e's vs the spinor rep of Cl(" + std::to_string(l.dim_x) + ",0)");
    rec.add("grading-" + tag, "chirality-grading", grading_operator(restricted) == ext.rep.grading);

    // equivariance over every generator for sampled spin^c elements
    const auto lams = sample_spin_c(l.dim_x, std::max<std::size_t>(20, cfg.samples / 4), rng);
    std::size_t failures = 0, checks = 0;
    for (const auto& lam : lams)
      for (int g = 0; g < l.sig.generators(); ++g) {
        ++checks;
        if (!check_equivariance(lam, AlgebraElement::generator(l.sig, g), ext)) ++failures;
      }
    rec.add("equivariance-" + tag, "equivariance-diagram", failures == 0,
            std::to_string(lams.size()) + " elements, " + std::to_string(checks) + " checks, " + std::to_string(failures) + " failures");

    const LHFiber fiber = lh_fiber_basis(ext);
    rec.add("lh-fiber-" + tag, "lh-fiber", fiber.dim() == 2, "dimension " + std::to_string(fiber.dim()));
    bool anti = true;
    for (const auto& b : fiber.basis) anti = anti && anticommutator(b, ext.rep.jc()).is_zero();
    rec.add("lh-complex-line-" + tag, "lh-complex-line", fiber.closed_under_i() && anti);
    const FiberCorrespondence fc = fiberwise_correspondence(ext, fiber);
    rec.add("lh-correspondence-" + tag, "fiberwise-correspondence", fc.ok(),
            std::string("in fiber ") + (fc.eta_in_fiber ? "yes" : "no") + ", independent " + (fc.independent ? "yes" : "no") +
                ", i-compatible " + (fc.i_compatible ? "yes" : "no"));
    const EndIsoResult iso = end_iso_check(ext);
    rec.add("end-iso-" + tag, "end-algebra-iso", iso.ok(),
            "image dimension " + std::to_string(iso.image_dim) + " of " + std::to_string(iso.expected));

    const SignRow row = sign_row(cfg.n, tau);
    rec.add("eta-squares-" + tag, "eta-square-signs", row.eta1_square.has_value() && row.eta2_square.has_value(),
            "eta^2 = " + (row.eta1_square ? to_string(*row.eta1_square) : std::string("non-scalar")) +
                (row.agrees_with_claim() ? ", agrees with " : ", differs from ") + "the stated sign " +
                std::to_string(row.claimed_square),
            json{{"eta1_square", row.eta1_square ? to_string(*row.eta1_square) : "non-scalar"},
                 {"signature_square", row.signature_square},
                 {"claimed_square", row.claimed_square},
                 {"anticommutant_squares", strings_json(row.anticommutant_squares)}});
  }
}

// ---------------------------------------------------------------------------

void localization_suite(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed);
  for (int tau : cfg.taus) {
    const std::string tag = tau_tag(tau);
    const Cl3Extension ext = extend_to_cl3(cfg.n, tau, cfg.allow_large_n);
    const int dx = ext.layout.dim_x;
    const int dy = ext.layout.dim_y();

    std::vector<SymbolSample> samples = axis_symbol_samples(dx);
    const auto rnd = random_symbol_samples(dx, cfg.samples, rng);
    samples.insert(samples.end(), rnd.begin(), rnd.end());
    const CheckReport support = support_identity_check(ext, samples);
    rec.add("support-" + tag, "support-identity", support.ok(),
            std::to_string(support.checked) + " samples" + (support.ok() ? "" : ", first failure: " + support.failures.front()),
            json{{"failures", strings_json(support.failures)}});

    Twist twist;
    twist.complex_dim = 2;
    twist.grading = real_form(ComplexMatrix::identity(2));
    twist.grading(2, 2) = -1;
    twist.grading(3, 3) = -1;
    twist.conjugation = real_form_antilinear(ComplexMatrix::identity(2));
    const auto tw_samples = random_symbol_samples(dx, std::max<std::size_t>(10, cfg.samples / 5), rng);
    const CheckReport twisted = twisted_support_check(ext, twist, Rational(3, 2), tw_samples);
    rec.add("twisted-support-" + tag, "twisted-symbol", twisted.ok(), std::to_string(twisted.checked) + " samples, E of dimension 2");
    const std::vector<Rational> xi0(static_cast<std::size_t>(dx));
    const SymbolOperator f0 = twisted_symbol(ext, xi0, QComplex(1), twist, 0);
    rec.add("twisted-f-zero-" + tag, "twisted-symbol", !is_invertible(f0.matrix), "f = 0 and xi = 0 leaves the support");

    std::vector<FiberPoint> points = axis_points(dy);
    const auto rp = random_fiber_points(dy, std::max<std::size_t>(50, cfg.samples / 2), rng);
    points.insert(points.end(), rp.begin(), rp.end());
    std::size_t bad_step = 0, bad_theta = 0;
    for (const auto& p : points) {
      const RealMatrix s1 = fiber_clifford_model(ext, p);
      const RealMatrix s2 = fiber_eta_model(ext, p);
      const RealMatrix eta = ext.eta(1) * p.ub[0] + ext.eta(2) * p.ub[1];
      if (!(s1 == clifford_action(ext, p)) || !(s2 == eta) || !anticommutator(s1, s2).is_zero()) ++bad_step;
      const ComplexMatrix th = theta(ext, p);
      const ComplexMatrix tp = thom_symbol(ext, p);
      const ComplexMatrix id = ComplexMatrix::identity(th.rows()) * QComplex(p.norm2());
      if (!(th * th == id) || !(tp * tp == id)) ++bad_theta;
    }
    rec.add("fiber-models-" + tag, "product-fiber-models", bad_step == 0, std::to_string(points.size()) + " points");
    rec.add("theta-square-" + tag, "theta-operator", bad_theta == 0, std::to_string(points.size()) + " points");

    const auto phi = localization_intertwiner(ext, points);
    rec.add("intertwiner-" + tag, "localization-intertwiner", phi.has_value(),
            std::to_string(points.size()) + " fiber points", phi ? json{{"phi", matrix_json(*phi)}} : json::object());
    const auto neg = localization_intertwiner(ext, points, ThomVariant::flipped_contraction);
    rec.expected_failure("intertwiner-negative-" + tag, "localization-intertwiner", !neg.has_value(),
                         neg ? "flipped Thom operator was intertwined" : "no intertwiner for the flipped Thom operator");

    std::vector<ComplexMatrix> lhs, rhs;
    for (const auto& p : points) {
      lhs.push_back(localized_symbol(ext, p));
      rhs.push_back(theta(ext, p));
    }
    rec.add("sigma-theta-" + tag, "theta-operator", simultaneous_intertwiner(lhs, rhs).has_value());

    const auto [lambda, thom] = clifford4_actions(tau);
    const auto psi = intertwiner(lambda, thom);
    rec.add("clifford4-" + tag, "clifford4-uniqueness", psi.has_value() && lambda.relations().ok() && thom.relations().ok(),
            "", psi ? json{{"psi", matrix_json(*psi)}} : json::object());
  }
}

// ---------------------------------------------------------------------------

void genus_suite(const RunConfig& cfg, Recorder& rec) {
  std::mt19937_64 rng(cfg.seed);
  rec.add("odd-part-" + std::to_string(cfg.order), "odd-part-identity", odd_part_identity(cfg.order));
  for (const auto& [name, model] : {std::pair{std::string("cp1"), cp1_model()}, std::pair{std::string("cp3"), cp3_model()}}) {
    const IndexCheck c = index_doubling_check(model.ring, model.ch, model.x, model.a_hat);
    rec.add("model-" + name, "index-doubling", c.holds() && c.index_x == 1 && c.index_y == 2,
            "index_X = " + to_string(c.index_x) + ", index_Y = " + to_string(c.index_y),
            json{{"index_x", to_string(c.index_x)}, {"index_y", to_string(c.index_y)}});
  }
  std::size_t bad = 0;
  for (int t = 0; t < 200; ++t) {
    const int d = 2 * static_cast<int>(rng() % 5) + 1;
    auto rnd = [&rng] { return ratio(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1); };
    TruncatedClass ch(d), a_hat(d);
    a_hat[0] = 1;
    for (int k = 0; k <= d; k += 2) {
      ch[k] = rnd();
      if (k > 0) a_hat[k] = rnd();
    }
    const TruncatedClass x = TruncatedClass::monomial(d, 1, static_cast<long>(rng() % 9) - 4);
    if (!index_doubling_check(TruncatedRing(d, rnd() + 6), ch, x, a_hat).holds()) ++bad;
  }
  rec.add("random-instances", "index-doubling", bad == 0, "200 instances, " + std::to_string(bad) + " failures");
  {
    IndexModel m = cp1_model();
    m.ch = m.ch + TruncatedClass::monomial(1, 1, 1);
    const IndexCheck c = index_doubling_check(m.ring, m.ch, m.x, m.a_hat);
    rec.expected_failure("odd-ch-injected", "index-doubling", !c.holds() && !c.violations.empty(),
                         c.violations.empty() ? "no violation flagged" : c.violations.front());
  }
  {
    const IndexModel m = cp3_model();
    const TruncatedClass c = TruncatedClass::monomial(3, 1, 1);
    const TruncatedClass ch = ch_line(c) + ch_line(-c);
    const TruncatedClass ch_neg = ch_line(-c) + ch_line(c);
    rec.add("self-conjugate-invariance", "index-formula",
            index_X(m.ring, ch, m.x, m.a_hat) == index_X(m.ring, ch_neg, m.x, m.a_hat) && ch.even_only());
  }
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UnknownSuite("unknown suite '" + suite + "'");
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  report.config = config;
  Recorder rec(report.cases);
  const std::vector<std::pair<std::string, std::function<void(const RunConfig&, Recorder&)>>> suites{
      {"clifford", clifford_suite}, {"rep", rep_suite}, {"cl3", cl3_suite}, {"localization", localization_suite}, {"genus", genus_suite}};
  for (const auto& [name, fn] : suites)
    if (suite == "all" || suite == name) fn(config, rec);
  if (config.include_timing)
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const VerificationReport& r) {
  json doc;
  doc["version"] = kToolkitVersion;
  doc["suite"] = r.suite;
  doc["config"] = {{"n", r.config.n},          {"tau", r.config.taus},   {"samples", r.config.samples},
                   {"seed", r.config.seed},    {"order", r.config.order}};
  json cases = json::array();
  for (const auto& c : r.cases) {
    json j;
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    j["status"] = to_string(c.status);
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    cases.push_back(std::move(j));
  }
  doc["cases"] = std::move(cases);
  doc["summary"] = {{"passed", r.count(CaseStatus::pass)},
                    {"failed", r.count(CaseStatus::fail)},
                    {"expected_failures", r.count(CaseStatus::expected_failure)},
                    {"status", r.ok() ? "pass" : "fail"}};
  if (r.seconds) doc["seconds"] = *r.seconds;
  return doc;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.config.seed << ", n " << r.config.n << ")\n";
  for (const auto& c : r.cases) {
    const char* tag = c.status == CaseStatus::pass ? "PASS" : c.status == CaseStatus::fail ? "FAIL" : "XFAIL";
    os << "[" << tag << "] " << c.id << "  (" << c.anchor << ")";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << r.count(CaseStatus::pass) << " passed, " << r.count(CaseStatus::fail) << " failed, "
     << r.count(CaseStatus::expected_failure) << " expected failures";
  if (r.seconds) os << " in " << *r.seconds << " s";
  os << "\n";
  return os.str();
}

std::vector<SignRow> report_signs(int n) { return {sign_row(n, 0), sign_row(n, 1)}; }

std::string format_sign_table(const std::vector<SignRow>& rows) {
  std::ostringstream os;
  os << "n  tau  eta1^2  eta2^2  signature  stated (-1)^(tau+1)  verdict\n";
  for (const auto& r : rows) {
    auto sq = [](const std::optional<Rational>& s) { return s ? to_string(*s) : std::string("non-scalar"); };
    os << r.n << "  " << r.tau << "    " << sq(r.eta1_square) << "      " << sq(r.eta2_square) << "      "
       << (r.signature_square > 0 ? "+1" : "-1") << "         " << (r.claimed_square > 0 ? "+1" : "-1") << "                  "
       << (r.agrees_with_claim() ? "agree" : "DISCREPANCY") << "\n";
    for (std::size_t k = 0; k < r.anticommutant_basis.size(); ++k)
      os << "     anticommutant " << r.anticommutant_basis[k] << "  squares to " << r.anticommutant_squares[k] << "\n";
  }
  return os.str();
}

}  // namespace cliffloc
