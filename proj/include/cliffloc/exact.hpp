#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace cliffloc {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// p/q in canonical form; mpq_class(p, q) alone does not reduce.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
inline Rational ratio(const mpz_class& p, const mpz_class& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

// Gaussian rational a + b i.
struct QComplex {
  Rational re;
  Rational im;

  QComplex() : re(0), im(0) {}
  QComplex(const Rational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  QComplex(int r) : re(r), im(0) {}              // NOLINT(google-explicit-constructor)
  QComplex(const Rational& r, const Rational& i) : re(r), im(i) {}

  static QComplex i() { return {Rational(0), Rational(1)}; }

  QComplex conj() const { return {re, -im}; }
  Rational norm2() const { return Rational(re * re + im * im); }

  QComplex& operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QComplex& operator-=(const QComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QComplex& operator*=(const QComplex& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  QComplex& operator/=(const QComplex& o) {
    Rational n = o.norm2();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
  friend QComplex operator-(const QComplex& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }
};

inline bool is_zero(const QComplex& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

std::string to_string(const QComplex& z);

std::ostream& operator<<(std::ostream& os, const QComplex& z);

// A point (c, s) on the unit circle with rational coordinates, read as u = c + i s.
struct Phase {
  Rational c{1};
  Rational s{0};

  static Phase one() { return {Rational(1), Rational(0)}; }
  static Phase i() { return {Rational(0), Rational(1)}; }
  // Rational point from the Pythagorean parametrisation ((1-t^2)/(1+t^2), 2t/(1+t^2)).
  static Phase from_slope(const Rational& t);

  bool on_unit_circle() const { return c * c + s * s == 1; }
  QComplex value() const { return {c, s}; }
  Phase squared() const { return {Rational(c * c - s * s), Rational(2 * c * s)}; }
};

}  // namespace cliffloc
