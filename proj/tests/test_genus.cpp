#include <gtest/gtest.h>

#include <random>

#include "cliffloc/genus.hpp"

using namespace cliffloc;

namespace {

using Poly = std::vector<Rational>;

// naive truncated product
Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// exp(c h) with coefficients c^k / k!
Poly exp_oracle(int d, const Rational& c) {
  Poly out(static_cast<std::size_t>(d) + 1);
  Rational term = 1;
  for (int k = 0; k <= d; ++k) {
    out[static_cast<std::size_t>(k)] = term;
    term = term * c / (k + 1);
  }
  return out;
}

TruncatedClass as_class(const Poly& p) { return TruncatedClass(static_cast<int>(p.size()) - 1, p); }

TruncatedClass h_poly(int d, std::initializer_list<Rational> c) { return TruncatedClass(d, std::vector<Rational>(c)); }

const char* const kCp1 = "top_power = 1\npairing = 1\nx_multiple = 2\nahat = one\nch = one\n";

int error_line(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Series, ExpHalfOfH) {
  const TruncatedClass h = TruncatedClass::monomial(3, 1);
  EXPECT_EQ(series_exp_half(h), h_poly(3, {1, ratio(1, 2), ratio(1, 8), ratio(1, 48)}));
}

TEST(Series, LineCharacter) {
  const TruncatedClass c1 = TruncatedClass::monomial(3, 1, 2);
  EXPECT_EQ(ch_line(c1), h_poly(3, {1, 2, 2, ratio(4, 3)}));
  EXPECT_EQ(series_exp(c1), as_class(exp_oracle(3, 2)));
}

TEST(Series, AHatOfLine) {
  const TruncatedClass x = TruncatedClass::monomial(6, 1);
  EXPECT_EQ(a_hat_line(x), h_poly(6, {1, 0, ratio(-1, 24), 0, ratio(7, 5760), 0, ratio(-31, 967680)}));
}

TEST(Series, AHatTimesSinhIsX) {
  for (int d : {1, 4, 9}) {
    const TruncatedClass x = TruncatedClass::monomial(d, 1, ratio(3, 2));
    EXPECT_EQ(a_hat_line(x) * (series_exp_half(x) - series_exp_half(-x)), x) << d;
    EXPECT_TRUE(a_hat_line(x).even_only());
  }
}

TEST(Series, RejectsConstantTerm) { EXPECT_THROW(series_exp(TruncatedClass::one(2)), std::invalid_argument); }

TEST(Series, OddPartIdentity) {
  for (int order : {0, 1, 7, 20, 50}) EXPECT_TRUE(odd_part_identity(order)) << order;
  EXPECT_THROW(odd_part_identity(51), std::invalid_argument);
}

TEST(TruncatedClass, ProductMatchesNaiveOracle) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 50; ++t) {
    const int d = static_cast<int>(rng() % 8);
    Poly a(static_cast<std::size_t>(d) + 1), b(a.size());
    for (auto& x : a) x = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    for (auto& x : b) x = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    EXPECT_EQ(as_class(a) * as_class(b), as_class(mul(a, b)));
    EXPECT_EQ(as_class(a).pow(2), as_class(mul(a, a)));
  }
  EXPECT_THROW(TruncatedClass::one(2) * TruncatedClass::one(3), std::invalid_argument);
}

TEST(Index, ProjectiveLine) {
  const IndexModel m = cp1_model();
  const IndexCheck c = index_doubling_check(m.ring, m.ch, m.x, m.a_hat);
  EXPECT_EQ(c.index_x, Rational(1));
  EXPECT_EQ(c.index_y, Rational(2));
  EXPECT_TRUE(c.holds());
}

TEST(Index, ProjectiveThreeSpace) {
  const IndexModel m = cp3_model();
  const IndexCheck c = index_doubling_check(m.ring, m.ch, m.x, m.a_hat);
  EXPECT_EQ(c.index_x, Rational(1));
  EXPECT_EQ(c.index_y, Rational(2));
  EXPECT_TRUE(c.holds());
  // independent: coefficient of h^3 in e^{2h} (h / (2 sinh(h/2)))^4
  const Poly ahat{1, 0, ratio(-1, 24), 0};
  const Poly p = mul(exp_oracle(3, 2), mul(mul(ahat, ahat), mul(ahat, ahat)));
  EXPECT_EQ(p[3], Rational(1));
}

// Property: under the hypotheses the Y-index is twice the X-index.
TEST(Index, RandomInstancesDouble) {
  std::mt19937_64 rng(67);
  auto rnd = [&rng] { return ratio(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1); };
  for (int t = 0; t < 200; ++t) {
    const int d = 2 * static_cast<int>(rng() % 5) + 1;
    Poly ch(static_cast<std::size_t>(d) + 1), ah(ch.size());
    ah[0] = 1;
    for (int k = 0; k <= d; k += 2) {
      ch[static_cast<std::size_t>(k)] = rnd();
      if (k > 0) ah[static_cast<std::size_t>(k)] = rnd();
    }
    const Rational c = static_cast<long>(rng() % 9) - 4;
    const Rational pairing = rnd() + 6;
    const TruncatedRing ring(d, pairing);
    const TruncatedClass x = TruncatedClass::monomial(d, 1, c);
    const IndexCheck chk = index_doubling_check(ring, as_class(ch), x, as_class(ah));
    EXPECT_TRUE(chk.holds());
    // oracle evaluation
    const Poly px = mul(mul(ch, exp_oracle(d, c / 2)), ah);
    EXPECT_EQ(chk.index_x, px[static_cast<std::size_t>(d)] * pairing);
  }
}

TEST(Index, OddChBreaksHypotheses) {
  IndexModel m = cp1_model();
  m.ch = m.ch + TruncatedClass::monomial(1, 1, 1);
  const IndexCheck c = index_doubling_check(m.ring, m.ch, m.x, m.a_hat);
  EXPECT_FALSE(c.violations.empty());
  EXPECT_FALSE(c.holds());
}

TEST(Index, EvenTopPowerIsFlagged) {
  const TruncatedRing ring(2, 1);
  EXPECT_FALSE(index_preconditions(ring, TruncatedClass::one(2), TruncatedClass::monomial(2, 1), TruncatedClass::one(2)).empty());
  EXPECT_FALSE(
      index_preconditions(TruncatedRing(3, 1), TruncatedClass::one(3), TruncatedClass::one(3), TruncatedClass::one(3)).empty());
}

TEST(Index, SelfConjugateSumIsSymmetric) {
  const IndexModel m = cp3_model();
  const TruncatedClass c = TruncatedClass::monomial(3, 1, 1);
  const TruncatedClass ch = ch_line(c) + ch_line(-c);
  EXPECT_TRUE(ch.even_only());
  EXPECT_EQ(index_X(m.ring, ch, m.x, m.a_hat), index_X(m.ring, ch_line(-c) + ch_line(c), m.x, m.a_hat));
  EXPECT_TRUE(index_doubling_check(m.ring, ch, m.x, m.a_hat).holds());
}

TEST(ModelParser, ParsesProjectiveLine) {
  const IndexModel m = parse_model(kCp1);
  const IndexModel ref = cp1_model();
  EXPECT_EQ(m.x, ref.x);
  EXPECT_EQ(m.ch, ref.ch);
  EXPECT_EQ(m.a_hat, ref.a_hat);
  EXPECT_EQ(m.ring.top_power, 1);
}

TEST(ModelParser, CommentsSumsAndPowers) {
  const IndexModel m = parse_model(
      "# projective three-space\ntop_power = 3\npairing = 1\nx_multiple = 4  # c1\nahat = line_pow:4\nch = sum: one , exp:1\n");
  EXPECT_EQ(m.a_hat, cp3_model().a_hat);
  EXPECT_EQ(m.ch, TruncatedClass::one(3) + ch_line(TruncatedClass::monomial(3, 1)));
  const IndexModel z = parse_model("top_power = 1\npairing = 1\nx_multiple = 2\nahat = one\nch = sum:\n");
  EXPECT_EQ(z.ch, TruncatedClass(1));
  EXPECT_EQ(index_X(z.ring, z.ch, z.x, z.a_hat), Rational(0));
}

TEST(ModelParser, ErrorsCarryPosition) {
  try {
    parse_model("top_power = 1\npairing = 1\nx_multiple = 2\nahat = one\nch = bogus\n");
    FAIL() << "no error";
  } catch (const ModelParseError& e) {
    EXPECT_EQ(e.line(), 5);
    EXPECT_EQ(e.column(), 6);
    EXPECT_NE(std::string(e.what()).find("line 5, column 6"), std::string::npos);
  }
  EXPECT_EQ(error_line("foo = 1\n"), 1);
  EXPECT_EQ(error_line(std::string(kCp1) + "ch = one\n"), 6);
  EXPECT_EQ(error_line("top_power = 1\npairing = 1\n"), 3);
  EXPECT_EQ(error_line("top_power = x\npairing = 1\nx_multiple = 2\nahat = one\nch = one\n"), 1);
  EXPECT_EQ(error_line("top_power = 1\npairing = 1/0\nx_multiple = 2\nahat = one\nch = one\n"), 2);
  EXPECT_EQ(error_line("top_power = 1\npairing\n"), 2);
  EXPECT_EQ(error_line("top_power = 1\npairing = 1\nx_multiple = 2\nahat = line_pow:-1\nch = one\n"), 4);
}

TEST(ModelParser, MissingFile) { EXPECT_THROW(load_model("/nonexistent/model.txt"), std::runtime_error); }
