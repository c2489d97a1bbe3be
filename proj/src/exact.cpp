#include "cliffloc/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace cliffloc {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const QComplex& z) {
  if (is_zero(z.im)) return z.re.get_str();
  std::string im = z.im == 1 ? "i" : (z.im == -1 ? "-i" : z.im.get_str() + "i");
  if (is_zero(z.re)) return im;
  if (sgn(z.im) > 0) return z.re.get_str() + "+" + im;
  return z.re.get_str() + im;
}

std::ostream& operator<<(std::ostream& os, const QComplex& z) { return os << to_string(z); }

Phase Phase::from_slope(const Rational& t) {
  Rational d = 1 + t * t;
  return {Rational((1 - t * t) / d), Rational(2 * t / d)};
}

}  // namespace cliffloc
