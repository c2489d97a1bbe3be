#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cliffloc/exact.hpp"

namespace cliffloc {

// Q[h] / (h^{d+1}) with deg h = 2 and <h^d, [X]> = pairing.
struct TruncatedRing {
  int top_power = 1;
  Rational pairing = 1;

  TruncatedRing() = default;
  TruncatedRing(int d, Rational pair);
};

class TruncatedClass {
 public:
  TruncatedClass() = default;
  explicit TruncatedClass(int top_power);
  TruncatedClass(int top_power, std::vector<Rational> coeffs);

  static TruncatedClass one(int top_power) { return constant(top_power, 1); }
  static TruncatedClass constant(int top_power, const Rational& c);
  static TruncatedClass monomial(int top_power, int k, const Rational& c = 1);

  int top_power() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool has_constant_term() const { return !is_zero(c_.front()); }
  bool even_only() const;             // no odd powers of h
  bool degrees_in_4z() const { return even_only(); }  // cohomological degree 2k with k even

  TruncatedClass& operator+=(const TruncatedClass& o);
  TruncatedClass& operator-=(const TruncatedClass& o);
  TruncatedClass& operator*=(const Rational& s);
  friend TruncatedClass operator+(TruncatedClass a, const TruncatedClass& b) { return a += b; }
  friend TruncatedClass operator-(TruncatedClass a, const TruncatedClass& b) { return a -= b; }
  friend TruncatedClass operator-(TruncatedClass a) { return a *= Rational(-1); }
  friend TruncatedClass operator*(TruncatedClass a, const Rational& s) { return a *= s; }
  friend TruncatedClass operator*(const TruncatedClass& a, const TruncatedClass& b);
  friend bool operator==(const TruncatedClass& a, const TruncatedClass& b) { return a.c_ == b.c_; }

  TruncatedClass pow(int k) const;
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// exp(x), exp(x/2); x must have zero constant term.
TruncatedClass series_exp(const TruncatedClass& x);
TruncatedClass series_exp_half(const TruncatedClass& x);
// x / (e^{x/2} - e^{-x/2})
TruncatedClass a_hat_line(const TruncatedClass& x);
TruncatedClass ch_line(const TruncatedClass& c1);

Rational evaluate(const TruncatedRing& ring, const TruncatedClass& top);

Rational index_X(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x, const TruncatedClass& a_hat);
Rational index_Y(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x, const TruncatedClass& a_hat);

struct IndexCheck {
  Rational index_x;
  Rational index_y;
  bool equality = false;                    // 2 index_X == index_Y
  std::vector<std::string> violations;      // hypotheses that fail
  bool holds() const { return equality && violations.empty(); }
};

// Hypotheses: top power odd, ch even-only, A-hat in degrees 4Z, x a multiple of h.
std::vector<std::string> index_preconditions(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x,
                                             const TruncatedClass& a_hat);
IndexCheck index_doubling_check(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x,
                           const TruncatedClass& a_hat);

// 2 odd(e^{x/2}) = e^{x/2} - e^{-x/2} coefficientwise up to x^order.
bool odd_part_identity(int order);

// A manifold model: ring plus the classes entering the index.
struct IndexModel {
  TruncatedRing ring;
  TruncatedClass x;
  TruncatedClass a_hat;
  TruncatedClass ch;
};

class ModelParseError : public std::runtime_error {
 public:
  ModelParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// key = value lines, '#' comments. Keys: top_power, pairing, x_multiple,
// ahat (one | line_pow:k), ch (one | exp:k | sum:item,item,...); items are one or exp:k.
IndexModel parse_model(const std::string& text);
IndexModel load_model(const std::string& path);

IndexModel cp1_model();
IndexModel cp3_model();

}  // namespace cliffloc
