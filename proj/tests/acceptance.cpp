// Acceptance run: one line per criterion with its time bound.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cliffloc/clifford.hpp"
#include "cliffloc/genus.hpp"
#include "cliffloc/symbol.hpp"
#include "cliffloc/verify.hpp"

using namespace cliffloc;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, double bound_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = bound_s <= 0 || s < bound_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %-28s %8.3fs", pass ? "PASS" : "FAIL", name, s);
  if (bound_s > 0) std::printf(" (bound %gs)", bound_s);
  std::printf("  %s%s\n", o.detail.c_str(), in_time ? "" : " [time bound exceeded]");
  std::fflush(stdout);
}

bool spans(const Signature& sig, const std::vector<AlgebraElement>& basis, const std::vector<AlgebraElement>& expected) {
  SparseEchelon<Rational> a(sig.algebra_dim()), b(sig.algebra_dim());
  for (const auto& v : basis) a.add(coordinates(v));
  for (const auto& v : expected) b.add(coordinates(v));
  if (a.rank() != b.rank()) return false;
  for (const auto& v : expected)
    if (!a.in_span(coordinates(v))) return false;
  return true;
}

Outcome anticommutant() {
  const Signature s22(2, 2);
  const std::vector<AlgebraElement> c22{AlgebraElement::generator(s22, s22.eps(1)), AlgebraElement::generator(s22, 0),
                                        AlgebraElement::generator(s22, 1)};
  const auto b22 = anticommutant_basis(s22, c22);
  const bool ok22 = b22.size() == 2 && spans(s22, b22, {AlgebraElement::generator(s22, s22.eps(2)), AlgebraElement::blade(s22, Blade{15})});
  const Signature s71(7, 1);
  std::vector<AlgebraElement> c71{AlgebraElement::generator(s71, s71.eps(1))};
  for (int k = 0; k < 6; ++k) c71.push_back(AlgebraElement::generator(s71, k));
  const auto b71 = anticommutant_basis(s71, c71);
  return {ok22 && b71.size() == 2,
          "Cl(2,2) dim " + std::to_string(b22.size()) + (ok22 ? " (matches)" : "") + ", Cl(7,1) dim " + std::to_string(b71.size())};
}

Outcome construction() {
  const Rho23Rep rho = build_rho23();
  const bool r23 = rho.rep.relations().ok() && rho.rep.invariant_violations().empty();
  const Cl3Extension ext = extend_to_cl3(0, 1);
  const bool r81 = ext.layout.sig == Signature(8, 1) && ext.rep.relations().ok() && ext.rep.invariant_violations().empty();
  const auto cl = ext.layout.clifford();
  const auto t = intertwiner(build_spinor_rep(6), restrict_rep(ext.rep, cl, Signature(6, 0)));
  return {r23 && r81 && t.has_value(), std::string("rho23 ") + (r23 ? "ok" : "bad") + ", Cl(8,1) on S6 " + (r81 ? "ok" : "bad") +
                                           ", restriction " + (t ? "intertwined" : "not intertwined")};
}

bool j_ok(const GradedRep& s, const AntiLinearMap& j, int square) {
  bool anti = true;
  for (const auto& img : s.images) anti = anti && anticommutator(j.matrix, img).is_zero();
  return anti && j.is_anti_linear() && commutator(j.matrix, s.grading).is_zero() &&
         j.matrix * j.matrix == RealMatrix::identity(s.dim()) * Rational(square);
}

Outcome structure_j() {
  const GradedRep s4 = build_spinor_rep(4), s8 = build_spinor_rep(8);
  const bool q = j_ok(s4, find_structure_J(s4, StructureKind::quaternionic), -1);
  const bool r = j_ok(s8, find_structure_J(s8, StructureKind::real), 1);
  return {q && r, std::string("S4 J^2=-Id ") + (q ? "ok" : "bad") + ", S8 J^2=+Id " + (r ? "ok" : "bad")};
}

Outcome splitting() {
  const auto images = splitting_images(0, 1);
  const bool rel = check_generator_relations<TensorElement>(images, Signature(6, 1)).ok();
  const std::size_t dim = generated_dimension<TensorElement>(images, 128);
  return {rel && dim == 128, std::string("relations ") + (rel ? "ok" : "bad") + ", image dimension " + std::to_string(dim)};
}

std::vector<SpinCElement> sample_spin_c(int dim_x, int count, std::mt19937_64& rng) {
  const Signature sig(dim_x, 0);
  std::vector<SpinCElement> out;
  for (int t = 0; t < count; ++t) {
    std::vector<AlgebraElement> factors;
    const int count_factors = 2 * (1 + static_cast<int>(rng() % 2));
    for (int f = 0; f < count_factors; ++f) {
      const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(dim_x));
      const int b = (a + 1) % dim_x;
      const Phase r = Phase::from_slope(ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
      factors.push_back(r.c * AlgebraElement::generator(sig, a) + r.s * AlgebraElement::generator(sig, b));
    }
    out.push_back(SpinCElement::make(sig, std::move(factors), Phase::from_slope(ratio(static_cast<long>(rng() % 9) - 4, 2))));
  }
  return out;
}

Outcome equivariance() {
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t checks = 0, bad = 0;
  for (int tau : {0, 1}) {
    const Cl3Extension ext = extend_to_cl3(0, tau);
    for (const auto& lam : sample_spin_c(ext.layout.dim_x, 24, rng))
      for (int g = 0; g < ext.layout.sig.generators(); ++g) {
        ++checks;
        if (!check_equivariance(lam, AlgebraElement::generator(ext.layout.sig, g), ext)) ++bad;
      }
  }
  return {bad == 0, "24 elements per tau, " + std::to_string(checks) + " checks, " + std::to_string(bad) + " failures"};
}

Outcome lh_fiber() {
  std::string detail;
  bool ok = true;
  for (int tau : {0, 1}) {
    const Cl3Extension ext = extend_to_cl3(0, tau);
    const LHFiber f = lh_fiber_basis(ext);
    const bool this_ok = f.dim() == 2 && f.closed_under_i() && fiberwise_correspondence(ext, f).ok();
    ok = ok && this_ok;
    detail += "tau=" + std::to_string(tau) + " dim " + std::to_string(f.dim()) + (this_ok ? " ok; " : " bad; ");
  }
  return {ok, detail};
}

Outcome support() {
  std::mt19937_64 rng(kDefaultSeed);
  bool ok = true;
  int checked = 0;
  for (int tau : {0, 1}) {
    const Cl3Extension ext = extend_to_cl3(0, tau);
    auto samples = axis_symbol_samples(ext.layout.dim_x);
    const auto rnd = random_symbol_samples(ext.layout.dim_x, 100, rng);
    samples.insert(samples.end(), rnd.begin(), rnd.end());
    const CheckReport r = support_identity_check(ext, samples);
    Twist tw = Twist::trivial(2);
    tw.grading(2, 2) = -1;
    tw.grading(3, 3) = -1;
    const CheckReport t = twisted_support_check(ext, tw, ratio(3, 2), samples);
    ok = ok && r.ok() && t.ok();
    checked += r.checked + t.checked;
  }
  return {ok, std::to_string(checked) + " symbol checks including E of dimension 2"};
}

Outcome localization() {
  std::mt19937_64 rng(kDefaultSeed);
  std::string detail;
  bool ok = true;
  for (int tau : {0, 1}) {
    const Cl3Extension ext = extend_to_cl3(0, tau);
    auto pts = axis_points(ext.layout.dim_y());
    const auto rnd = random_fiber_points(ext.layout.dim_y(), 50, rng);
    pts.insert(pts.end(), rnd.begin(), rnd.end());
    const auto phi = localization_intertwiner(ext, pts);
    const auto neg = localization_intertwiner(ext, pts, ThomVariant::flipped_contraction);
    ok = ok && phi.has_value() && !neg.has_value();
    detail += "tau=" + std::to_string(tau) + " S(Y) complex dim " + std::to_string(ext.base.dim() / 2) + ", " +
              std::to_string(pts.size()) + " points, phi " + (phi ? "found" : "missing") + ", control " +
              (neg ? "intertwined" : "rejected") + "; ";
  }
  return {ok, detail};
}

Outcome genus() {
  bool ok = odd_part_identity(20);
  for (const IndexModel& m : {cp1_model(), cp3_model()}) {
    const IndexCheck c = index_doubling_check(m.ring, m.ch, m.x, m.a_hat);
    ok = ok && c.holds() && c.index_x == 1 && c.index_y == 2;
  }
  std::mt19937_64 rng(kDefaultSeed);
  auto rnd = [&rng] { return ratio(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1); };
  int bad = 0;
  for (int t = 0; t < 200; ++t) {
    const int d = 2 * static_cast<int>(rng() % 5) + 1;
    TruncatedClass ch(d), a_hat(d);
    a_hat[0] = 1;
    for (int k = 0; k <= d; k += 2) {
      ch[k] = rnd();
      if (k > 0) a_hat[k] = rnd();
    }
    const TruncatedClass x = TruncatedClass::monomial(d, 1, static_cast<long>(rng() % 9) - 4);
    if (!index_doubling_check(TruncatedRing(d, rnd() + 6), ch, x, a_hat).holds()) ++bad;
  }
  return {ok && bad == 0, "series identity, CP1 and CP3 give (1, 2), " + std::to_string(bad) + " of 200 random instances fail"};
}

Outcome determinism() {
  RunConfig cfg;
  const std::string a = to_json(run_suite("all", cfg)).dump();
  const std::string b = to_json(run_suite("all", cfg)).dump();
  return {a == b, std::to_string(a.size()) + " byte reports " + (a == b ? "identical" : "differ")};
}

}  // namespace

int main() {
  criterion("anticommutant-dimension", 10, anticommutant);
  criterion("cl3-construction", 60, construction);
  criterion("structure-J", 120, structure_j);
  criterion("tensor-splitting", 60, splitting);
  criterion("equivariance", 0, equivariance);
  criterion("lh-fiber", 0, lh_fiber);
  criterion("support-identity", 0, support);
  criterion("localization-intertwiner", 600, localization);
  criterion("index-doubling", 10, genus);
  criterion("deterministic-report", 0, determinism);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
