#include "cliffloc/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffloc {

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || p + q > 16) throw std::invalid_argument("signature out of range: Cl(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

int Signature::square(int gen) const {
  if (gen < 0 || gen >= p + q) throw std::out_of_range("generator index " + std::to_string(gen) + " outside " + cliffloc::to_string(*this));
  return gen < p ? -1 : 1;
}

int Signature::e(int k) const {
  if (k < 1 || k > p) throw std::out_of_range("e_" + std::to_string(k) + " not in " + cliffloc::to_string(*this));
  return k - 1;
}

int Signature::eps(int k) const {
  if (k < 1 || k > q) throw std::out_of_range("eps_" + std::to_string(k) + " not in " + cliffloc::to_string(*this));
  return p + k - 1;
}

std::string Signature::generator_name(int gen) const {
  return gen < p ? "e" + std::to_string(gen + 1) : "eps" + std::to_string(gen - p + 1);
}

std::string to_string(const Signature& sig) { return "Cl(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")"; }

BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  const std::uint32_t limit = sig.generators() == 32 ? ~0u : ((1u << sig.generators()) - 1);
  if ((a.mask & ~limit) || (b.mask & ~limit)) throw std::out_of_range("blade outside " + to_string(sig));
  // transpositions needed to sort the concatenated word
  int swaps = 0;
  for (std::uint32_t s = a.mask >> 1; s; s >>= 1) swaps += std::popcount(s & b.mask);
  int sign = (swaps & 1) ? -1 : 1;
  // contracted generators: e's square to -1
  const std::uint32_t e_mask = (1u << sig.p) - 1;
  if (std::popcount(a.mask & b.mask & e_mask) & 1) sign = -sign;
  return {sign, Blade{a.mask ^ b.mask}};
}

AlgebraElement AlgebraElement::scalar(Signature sig, const Rational& value) {
  AlgebraElement x(sig);
  x.add_term(Blade{0}, value);
  return x;
}

AlgebraElement AlgebraElement::generator(Signature sig, int gen) {
  sig.square(gen);
  return blade(sig, Blade{1u << gen});
}

AlgebraElement AlgebraElement::blade(Signature sig, Blade b, const Rational& coeff) {
  if (b.mask >> sig.generators()) throw std::out_of_range("blade outside " + cliffloc::to_string(sig));
  AlgebraElement x(sig);
  x.add_term(b, coeff);
  return x;
}

AlgebraElement AlgebraElement::word(Signature sig, std::span<const int> gens) {
  AlgebraElement x = scalar(sig, 1);
  for (int g : gens) x = x * generator(sig, g);
  return x;
}

Rational AlgebraElement::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.mask == 0); }

int AlgebraElement::max_grade() const {
  int g = -1;
  for (const auto& [b, c] : terms_) g = std::max(g, b.grade());
  return g;
}

void AlgebraElement::add_term(Blade b, const Rational& c) {
  if (cliffloc::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (cliffloc::is_zero(it->second)) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::grade_involution() const {
  AlgebraElement out(sig_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, b.grade() % 2 ? Rational(-c) : c);
  return out;
}

AlgebraElement AlgebraElement::reverse() const {
  AlgebraElement out(sig_);
  for (const auto& [b, c] : terms_) {
    const int k = b.grade();
    out.terms_.emplace(b, (k * (k - 1) / 2) % 2 ? Rational(-c) : c);
  }
  return out;
}

AlgebraElement AlgebraElement::embed(const Signature& target) const {
  if (target.p < sig_.p || target.q < sig_.q) throw std::invalid_argument("embed: target signature too small");
  AlgebraElement out(target);
  const std::uint32_t e_mask = (1u << sig_.p) - 1;
  for (const auto& [b, c] : terms_) {
    std::uint32_t m = b.mask & e_mask;
    m |= (b.mask >> sig_.p) << target.p;
    out.terms_.emplace(Blade{m}, c);
  }
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("algebra elements over different signatures");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("algebra elements over different signatures");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  if (cliffloc::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.sig_ == b.sig_)) throw std::invalid_argument("algebra_mul: signature mismatch " + to_string(a.sig_) + " vs " + to_string(b.sig_));
  AlgebraElement out(a.sig_);
  for (const auto& [ba, ca] : a.terms_)
    for (const auto& [bb, cb] : b.terms_) {
      const BladeProduct bp = blade_product(ba, bb, a.sig_);
      Rational c = ca * cb;
      if (bp.sign < 0) c = -c;
      out.add_term(bp.blade, c);
    }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (b.mask == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    bool lead = true;
    for (int g = 0; g < sig_.generators(); ++g)
      if (b.mask >> g & 1) {
        os << (lead ? "" : "*") << sig_.generator_name(g);
        lead = false;
      }
  }
  return os.str();
}

AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AlgebraElement grade_involution(const AlgebraElement& x) { return x.grade_involution(); }

SparseRow<Rational> coordinates(const AlgebraElement& x) {
  SparseRow<Rational> row;
  for (const auto& [b, c] : x.terms()) row.emplace_back(b.mask, c);
  return row;
}

std::vector<AlgebraElement> anticommutant_basis(const Signature& sig, std::span<const AlgebraElement> constraints) {
  const std::size_t dim = sig.algebra_dim();
  // equation (constraint k, output blade C) collects sum_B x_B [B g_k + g_k B]_C
  std::map<std::pair<std::size_t, std::uint32_t>, SparseRow<Rational>> equations;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (!(constraints[k].signature() == sig)) throw std::invalid_argument("anticommutant_basis: constraint over a different signature");
    for (std::uint32_t m = 0; m < dim; ++m) {
      const AlgebraElement b = AlgebraElement::blade(sig, Blade{m});
      const AlgebraElement ac = b * constraints[k] + constraints[k] * b;
      for (const auto& [out, c] : ac.terms()) equations[{k, out.mask}].emplace_back(m, c);
    }
  }
  SparseEchelon<Rational> ech(dim);
  for (auto& [key, row] : equations) ech.add(canonical_row(std::move(row)));
  std::vector<AlgebraElement> basis;
  for (const auto& v : ech.nullspace()) {
    AlgebraElement x(sig);
    for (std::uint32_t m = 0; m < dim; ++m)
      if (!cliffloc::is_zero(v[m])) x += AlgebraElement::blade(sig, Blade{m}, v[m]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------

TensorElement TensorElement::pure(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement t(a.signature(), b.signature());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) t.add_term({ba, bb}, Rational(ca * cb));
  return t;
}

TensorElement TensorElement::one(Signature left, Signature right) {
  return pure(AlgebraElement::scalar(left, 1), AlgebraElement::scalar(right, 1));
}

void TensorElement::add_term(std::pair<Blade, Blade> key, const Rational& c) {
  if (cliffloc::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (cliffloc::is_zero(it->second)) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (!(left_ == o.left_ && right_ == o.right_)) throw std::invalid_argument("tensor elements over different algebras");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  if (cliffloc::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (!(a.left_ == b.left_ && a.right_ == b.right_)) throw std::invalid_argument("tensor product: algebra mismatch");
  TensorElement out(a.left_, a.right_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const BladeProduct l = blade_product(ka.first, kb.first, a.left_);
      const BladeProduct r = blade_product(ka.second, kb.second, a.right_);
      Rational c = ca * cb;
      if (l.sign * r.sign < 0) c = -c;
      out.add_term({l.blade, r.blade}, c);
    }
  return out;
}

SparseRow<Rational> coordinates(const TensorElement& x) {
  const std::size_t right_dim = x.right().algebra_dim();
  SparseRow<Rational> row;
  for (const auto& [k, c] : x.terms()) row.emplace_back(k.first.mask * right_dim + k.second.mask, c);
  return canonical_row(std::move(row));
}

SparseRow<Rational> coordinates(const RealMatrix& m) { return flatten(m); }

std::string RelationReport::summary() const {
  if (ok()) return "all " + std::to_string(checked) + " relations hold";
  std::string out = std::to_string(failures.size()) + " of " + std::to_string(checked) + " relations fail:";
  for (const auto& f : failures) out += " [" + f.what + "]";
  return out;
}

std::vector<TensorElement> splitting_images(int n, int tau) {
  if (n < 0 || (tau != 0 && tau != 1)) throw std::invalid_argument("splitting_images: need n >= 0, tau in {0,1}");
  const int m = 8 * n + 4 * tau;
  const Signature left(m, 0);
  const Signature right(2, 1);
  AlgebraElement vol = AlgebraElement::scalar(left, 1);
  for (int i = 0; i < m; ++i) vol = vol * AlgebraElement::generator(left, i);
  const AlgebraElement one_right = AlgebraElement::scalar(right, 1);

  std::vector<TensorElement> images;
  for (int i = 0; i < m; ++i) images.push_back(TensorElement::pure(AlgebraElement::generator(left, i), one_right));
  for (int j = 1; j <= 2; ++j) images.push_back(TensorElement::pure(vol, AlgebraElement::generator(right, right.e(j))));
  images.push_back(TensorElement::pure(vol, AlgebraElement::generator(right, right.eps(1))));
  return images;
}

}  // namespace cliffloc
