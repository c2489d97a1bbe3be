#include "cliffloc/genus.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace cliffloc {

TruncatedRing::TruncatedRing(int d, Rational pair) : top_power(d), pairing(std::move(pair)) {
  if (d < 0) throw std::invalid_argument("truncated ring: top power must be non-negative");
}

TruncatedClass::TruncatedClass(int top_power) : c_(static_cast<std::size_t>(top_power) + 1, Rational(0)) {
  if (top_power < 0) throw std::invalid_argument("truncated class: top power must be non-negative");
}

TruncatedClass::TruncatedClass(int top_power, std::vector<Rational> coeffs) : TruncatedClass(top_power) {
  if (coeffs.size() > c_.size()) throw std::invalid_argument("truncated class: more coefficients than the ring holds");
  for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k] = coeffs[k];
}

TruncatedClass TruncatedClass::constant(int top_power, const Rational& c) {
  TruncatedClass t(top_power);
  t.c_[0] = c;
  return t;
}

TruncatedClass TruncatedClass::monomial(int top_power, int k, const Rational& c) {
  TruncatedClass t(top_power);
  if (k < 0) throw std::invalid_argument("truncated class: negative power");
  if (k <= top_power) t.c_[static_cast<std::size_t>(k)] = c;
  return t;
}

bool TruncatedClass::even_only() const {
  for (std::size_t k = 1; k < c_.size(); k += 2)
    if (!is_zero(c_[k])) return false;
  return true;
}

TruncatedClass& TruncatedClass::operator+=(const TruncatedClass& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("truncated class: ring mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncatedClass& TruncatedClass::operator-=(const TruncatedClass& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("truncated class: ring mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncatedClass& TruncatedClass::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncatedClass operator*(const TruncatedClass& a, const TruncatedClass& b) {
  if (a.c_.size() != b.c_.size()) throw std::invalid_argument("truncated class: ring mismatch");
  TruncatedClass out(a.top_power());
  const std::size_t n = a.c_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncatedClass TruncatedClass::pow(int k) const {
  if (k < 0) throw std::invalid_argument("truncated class: negative exponent");
  TruncatedClass out = one(top_power());
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string TruncatedClass::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (is_zero(c_[k])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + cliffloc::to_string(c_[k]) + ")";
    if (k == 1) s += "h";
    if (k > 1) s += "h^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

namespace {

// sum_m coeffs[m] x^m in the ring of x
TruncatedClass substitute(const std::vector<Rational>& coeffs, const TruncatedClass& x) {
  if (x.has_constant_term()) throw std::invalid_argument("series argument has a nonzero constant term");
  const int d = x.top_power();
  TruncatedClass out(d);
  TruncatedClass power = TruncatedClass::one(d);
  for (std::size_t m = 0; m < coeffs.size() && static_cast<int>(m) <= d; ++m) {
    out += power * coeffs[m];
    power = power * x;
  }
  return out;
}

std::vector<Rational> exp_coeffs(int order, const Rational& scale) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  Rational term = 1;
  for (int m = 0; m <= order; ++m) {
    c[static_cast<std::size_t>(m)] = term;
    term = term * scale / (m + 1);
  }
  return c;
}

std::vector<Rational> invert_series(const std::vector<Rational>& a) {
  std::vector<Rational> b(a.size());
  b[0] = 1 / a[0];
  for (std::size_t m = 1; m < a.size(); ++m) {
    Rational s = 0;
    for (std::size_t j = 1; j <= m; ++j) s += a[j] * b[m - j];
    b[m] = -s / a[0];
  }
  return b;
}

}  // namespace

TruncatedClass series_exp(const TruncatedClass& x) { return substitute(exp_coeffs(x.top_power(), 1), x); }

TruncatedClass series_exp_half(const TruncatedClass& x) {
  return substitute(exp_coeffs(x.top_power(), Rational(1, 2)), x);
}

TruncatedClass a_hat_line(const TruncatedClass& x) {
  // (e^{t/2} - e^{-t/2}) / t = sum over odd j of 2 (1/2)^j t^{j-1} / j!
  const int d = x.top_power();
  const std::vector<Rational> e = exp_coeffs(d + 1, Rational(1, 2));
  std::vector<Rational> q(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m)
    if ((m + 1) % 2 == 1) q[static_cast<std::size_t>(m)] = 2 * e[static_cast<std::size_t>(m + 1)];
  return substitute(invert_series(q), x);
}

TruncatedClass ch_line(const TruncatedClass& c1) { return series_exp(c1); }

Rational evaluate(const TruncatedRing& ring, const TruncatedClass& top) {
  if (top.top_power() != ring.top_power) throw std::invalid_argument("evaluate: class lives in a different ring");
  return top[ring.top_power] * ring.pairing;
}

Rational index_X(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x, const TruncatedClass& a_hat) {
  return evaluate(ring, ch * series_exp_half(x) * a_hat);
}

Rational index_Y(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x, const TruncatedClass& a_hat) {
  return evaluate(ring, ch * (series_exp_half(x) - series_exp_half(-x)) * a_hat);
}

std::vector<std::string> index_preconditions(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x,
                                             const TruncatedClass& a_hat) {
  std::vector<std::string> out;
  if (ring.top_power % 2 == 0) out.push_back("top power is even; [X] must have degree 4n+2");
  if (!ch.even_only()) out.push_back("ch(E) has an odd power of h");
  if (!a_hat.degrees_in_4z()) out.push_back("A-hat(X) has a component outside degrees 4Z");
  for (int k = 0; k <= x.top_power(); ++k)
    if (k != 1 && !is_zero(x[k])) {
      out.push_back("x is not a multiple of h");
      break;
    }
  return out;
}

IndexCheck index_doubling_check(const TruncatedRing& ring, const TruncatedClass& ch, const TruncatedClass& x,
                           const TruncatedClass& a_hat) {
  IndexCheck r;
  r.violations = index_preconditions(ring, ch, x, a_hat);
  r.index_x = index_X(ring, ch, x, a_hat);
  r.index_y = index_Y(ring, ch, x, a_hat);
  r.equality = 2 * r.index_x == r.index_y;
  return r;
}

bool odd_part_identity(int order) {
  if (order < 0 || order > 50) throw std::invalid_argument("odd_part_identity: order must be in [0, 50]");
  const std::vector<Rational> plus = exp_coeffs(order, Rational(1, 2));
  const std::vector<Rational> minus = exp_coeffs(order, Rational(-1, 2));
  for (int m = 0; m <= order; ++m) {
    const Rational odd = m % 2 == 1 ? plus[static_cast<std::size_t>(m)] : Rational(0);
    if (2 * odd != plus[static_cast<std::size_t>(m)] - minus[static_cast<std::size_t>(m)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ModelParseError::ModelParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Field {
  std::string value;
  int line = 0;
  int column = 0;
};

std::string trim(const std::string& s, std::size_t& offset) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    offset = s.size();
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  offset = b;
  return s.substr(b, e - b + 1);
}

Rational field_rational(const Field& f, const std::string& text, int column) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ModelParseError(f.line, column, "expected a rational p or p/q, got '" + text + "'");
  }
}

int field_int(const Field& f, const std::string& text, int column) {
  const Rational r = field_rational(f, text, column);
  if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw ModelParseError(f.line, column, "expected an integer, got '" + text + "'");
  return static_cast<int>(r.get_num().get_si());
}

// one | exp:k
TruncatedClass ch_item(const Field& f, const std::string& item, int column, int d, const TruncatedClass& h) {
  if (item == "one") return TruncatedClass::one(d);
  if (item.rfind("exp:", 0) == 0) return ch_line(h * field_rational(f, item.substr(4), column + 4));
  throw ModelParseError(f.line, column, "unknown ch item '" + item + "' (expected one or exp:<k>)");
}

}  // namespace

IndexModel parse_model(const std::string& text) {
  static const char* const keys[] = {"top_power", "pairing", "x_multiple", "ahat", "ch"};
  std::map<std::string, Field> fields;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    std::size_t off = 0;
    if (trim(line, off).empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ModelParseError(line_no, static_cast<int>(off) + 1, "expected key = value");
    std::size_t koff = 0;
    const std::string key = trim(line.substr(0, eq), koff);
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ModelParseError(line_no, static_cast<int>(koff) + 1, "unknown key '" + key + "'");
    if (fields.count(key)) throw ModelParseError(line_no, static_cast<int>(koff) + 1, "duplicate key '" + key + "'");
    std::size_t voff = 0;
    const std::string value = trim(line.substr(eq + 1), voff);
    const int column = static_cast<int>(eq + 1 + voff) + 1;
    if (value.empty()) throw ModelParseError(line_no, column, "missing value for '" + key + "'");
    fields[key] = {value, line_no, column};
  }
  for (const char* k : keys)
    if (!fields.count(k)) throw ModelParseError(line_no + 1, 1, std::string("missing key '") + k + "'");

  IndexModel m;
  const Field& fd = fields["top_power"];
  const int d = field_int(fd, fd.value, fd.column);
  if (d < 0 || d > 64) throw ModelParseError(fd.line, fd.column, "top_power must be in [0, 64]");
  const Field& fp = fields["pairing"];
  m.ring = TruncatedRing(d, field_rational(fp, fp.value, fp.column));
  const TruncatedClass h = TruncatedClass::monomial(d, 1);
  const Field& fx = fields["x_multiple"];
  m.x = h * field_rational(fx, fx.value, fx.column);

  const Field& fa = fields["ahat"];
  if (fa.value == "one") {
    m.a_hat = TruncatedClass::one(d);
  } else if (fa.value.rfind("line_pow:", 0) == 0) {
    const int k = field_int(fa, fa.value.substr(9), fa.column + 9);
    if (k < 0) throw ModelParseError(fa.line, fa.column + 9, "line_pow exponent must be non-negative");
    m.a_hat = a_hat_line(h).pow(k);
  } else {
    throw ModelParseError(fa.line, fa.column, "unknown ahat recipe '" + fa.value + "' (expected one or line_pow:<k>)");
  }

  const Field& fc = fields["ch"];
  if (fc.value.rfind("sum:", 0) == 0) {
    m.ch = TruncatedClass(d);
    const std::string body = fc.value.substr(4);
    std::size_t start = 0;
    while (start < body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      std::size_t ioff = 0;
      const std::string item = trim(body.substr(start, comma - start), ioff);
      const int column = fc.column + 4 + static_cast<int>(start + ioff);
      if (item.empty()) throw ModelParseError(fc.line, column, "empty item in ch sum");
      m.ch += ch_item(fc, item, column, d, h);
      start = comma + 1;
    }
  } else {
    m.ch = ch_item(fc, fc.value, fc.column, d, h);
  }
  return m;
}

IndexModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

IndexModel cp1_model() {
  IndexModel m;
  m.ring = TruncatedRing(1, 1);
  m.x = TruncatedClass::monomial(1, 1, 2);
  m.a_hat = TruncatedClass::one(1);
  m.ch = TruncatedClass::one(1);
  return m;
}

IndexModel cp3_model() {
  IndexModel m;
  m.ring = TruncatedRing(3, 1);
  m.x = TruncatedClass::monomial(3, 1, 4);
  m.a_hat = a_hat_line(TruncatedClass::monomial(3, 1)).pow(4);
  m.ch = TruncatedClass::one(3);
  return m;
}

}  // namespace cliffloc
