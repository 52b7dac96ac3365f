#include <gtest/gtest.h>

#include <random>

#include "jslope/error.hpp"
#include "jslope/laurent.hpp"
#include "test_support.hpp"

namespace jslope {
namespace {

using testing::random_nonzero_poly;
using testing::random_poly;

LaurentPoly mono(long c, long e) { return LaurentPoly::monomial(Integer(c), e); }
LaurentPoly P(const char* text) { return LaurentPoly::parse_text(text); }

// q-integer as the explicit geometric sum v^{2(k-1)} + v^{2(k-1)-4} + ... + v^{-2(k-1)}.
LaurentPoly qint_sum(int k) {
  LaurentPoly out;
  for (int i = 0; i < k; ++i) out += mono(1, 2 * (k - 1) - 4 * i);
  return out;
}

// Symmetric q-Pascal rule: [n k] = q^k [n-1 k] + q^{-(n-k)} [n-1 k-1] with q = v^2.
LaurentPoly qbinom_pascal(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return LaurentPoly::constant(1);
  return qbinom_pascal(n - 1, k).shifted(2 * k) + qbinom_pascal(n - 1, k - 1).shifted(-2 * (n - k));
}

TEST(LaurentPoly, ConstructionDropsZerosAndMergesTerms) {
  const LaurentPoly p = LaurentPoly::from_terms({{3, 2}, {-1, 5}, {3, -2}, {0, 0}, {-1, 1}});
  EXPECT_EQ(p, mono(6, -1));
  EXPECT_TRUE(LaurentPoly::from_terms({{1, 1}, {1, -1}}).is_zero());
}

TEST(LaurentPoly, DegreesAndCoefficients) {
  const LaurentPoly p = P("3*v^5 - 2*v^-3 + 1*v^0");
  EXPECT_EQ(p.max_deg(), 5);
  EXPECT_EQ(p.min_deg(), -3);
  EXPECT_EQ(p.leading_coeff(), 3);
  EXPECT_EQ(p.trailing_coeff(), -2);
  EXPECT_EQ(p.coeff(0), 1);
  EXPECT_EQ(p.coeff(2), 0);
  EXPECT_THROW(LaurentPoly{}.max_deg(), Error);
  try {
    (void)LaurentPoly{}.leading_coeff();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

TEST(LaurentPoly, TextRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng);
    EXPECT_EQ(LaurentPoly::parse_text(p.to_text()), p) << p.to_text();
  }
  EXPECT_EQ(LaurentPoly{}.to_text(), "0");
  EXPECT_EQ(qint(3).to_text(), "1*v^4 + 1*v^0 + 1*v^-4");
  EXPECT_THROW(LaurentPoly::parse_text("1*x^2"), Error);
}

TEST(LaurentPoly, ShiftAndUnits) {
  EXPECT_EQ(P("1*v^2 + 1*v^0").shifted(-3, -1), P("-1*v^-1 - 1*v^-3"));
  EXPECT_TRUE(mono(-1, 7).is_unit());
  EXPECT_FALSE(mono(2, 0).is_unit());
  EXPECT_FALSE(qint(2).is_unit());
}

TEST(LaurentPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(20240917);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * LaurentPoly::constant(1), a);
    EXPECT_EQ(evaluate_at_one(a * b), evaluate_at_one(a) * evaluate_at_one(b));
  }
}

TEST(LaurentPoly, MultiplicationMatchesSchoolbook) {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng, 8, 40), b = random_poly(rng, 8, 40);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& x : a.terms())
      for (const auto& y : b.terms()) terms.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
    EXPECT_EQ(a * b, LaurentPoly::from_terms(terms));
  }
}

TEST(QuantumIntegers, MatchGeometricSum) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), LaurentPoly::constant(1));
  EXPECT_EQ(qint(2), P("1*v^2 + 1*v^-2"));
  for (int k = 1; k <= 25; ++k) {
    EXPECT_EQ(qint(k), qint_sum(k)) << k;
    EXPECT_EQ(evaluate_at_one(qint(k)), k);
  }
}

TEST(QuantumIntegers, DefiningQuotient) {
  const LaurentPoly den = P("1*v^2 - 1*v^-2");
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(qint(k) * den, mono(1, 2 * k) - mono(1, -2 * k));
}

TEST(QuantumIntegers, FactorialAndBinomial) {
  EXPECT_EQ(qfact(0), LaurentPoly::constant(1));
  EXPECT_EQ(qfact(3), qint(3) * qint(2));
  for (int n = 0; n <= 14; ++n) {
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(qbinom(n, k), qbinom_pascal(n, k)) << n << " " << k;
  }
  EXPECT_EQ(evaluate_at_one(qbinom(10, 4)), 210);
  EXPECT_EQ(qbinom(6, 2).max_deg(), 2 * 2 * (6 - 2));
}

TEST(QuantumIntegers, Multinomial) {
  EXPECT_EQ(qmultinom({2, 1}), qbinom(3, 1));
  EXPECT_EQ(qmultinom({1, 1, 1}), qfact(3));
  EXPECT_EQ(qmultinom({3, 2, 4}), qbinom(9, 3) * qbinom(6, 2));
  EXPECT_EQ(evaluate_at_one(qmultinom({2, 2, 2})), 90);
}

TEST(ExactDivision, QuotientOfQuantumIntegers) {
  EXPECT_EQ(exact_div(qint(4), qint(2)), P("1*v^4 + 1*v^-4"));
  EXPECT_EQ(exact_div(qint(9), qint(3)), P("1*v^12 + 1*v^0 + 1*v^-12"));
}

TEST(ExactDivision, RecoversRandomFactors) {
  std::mt19937 rng(77);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_nonzero_poly(rng);
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(ExactDivision, Errors) {
  try {
    exact_div(qint(3), qint(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonExactDivision);
  }
  try {
    exact_div(qint(3), LaurentPoly{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  LaurentPoly q;
  EXPECT_FALSE(try_exact_div(qint(3), qint(2), &q));
  EXPECT_TRUE(try_exact_div(qint(6), qint(3), &q));
  EXPECT_EQ(q * qint(3), qint(6));
}

TEST(Gcd, AgreesWithPrimitiveRemainderSequence) {
  std::mt19937 rng(314159);
  for (int i = 0; i < 250; ++i) {
    const LaurentPoly common = random_nonzero_poly(rng, 4, 6);
    const LaurentPoly a = random_nonzero_poly(rng, 5, 8) * common;
    const LaurentPoly b = random_nonzero_poly(rng, 5, 8) * common;
    const LaurentPoly g = poly_gcd(a, b);
    EXPECT_EQ(g, testing::prs_gcd(a, b)) << a.to_text() << " | " << b.to_text();
    LaurentPoly q;
    EXPECT_TRUE(try_exact_div(a, g, &q));
    EXPECT_TRUE(try_exact_div(b, g, &q));
  }
}

TEST(Gcd, QuantumIntegersAndEdgeCases) {
  // gcd([6], [4]) = [2] up to units.
  EXPECT_EQ(poly_gcd(qint(6), qint(4)), qint(2).shifted(2));
  EXPECT_TRUE(poly_gcd(LaurentPoly{}, LaurentPoly{}).is_zero());
  EXPECT_EQ(poly_gcd(LaurentPoly{}, mono(-3, 5)), mono(3, 0));
  EXPECT_EQ(poly_gcd(mono(4, 2), mono(6, -1)), mono(2, 0));
}

TEST(Fractions, AddReduceAndConvert) {
  const PolyFraction half(LaurentPoly::constant(1), qint(2));
  const PolyFraction sum = frac_reduce(frac_add(half, half));
  EXPECT_EQ(sum.numerator(), LaurentPoly::constant(2));
  EXPECT_EQ(sum.denominator(), qint(2));
  try {
    frac_to_poly(sum);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPolynomial);
  }
  const PolyFraction whole(qint(4), qint(2));
  EXPECT_EQ(frac_to_poly(whole), P("1*v^4 + 1*v^-4"));
  EXPECT_EQ(frac_to_poly(PolyFraction(qint(2), mono(-1, 3))), -qint(2).shifted(-3));
  EXPECT_THROW(PolyFraction(qint(2), LaurentPoly{}), Error);
}

TEST(Fractions, FieldLawsOnRandomFractions) {
  std::mt19937 rng(99);
  for (int i = 0; i < 120; ++i) {
    const PolyFraction x(random_poly(rng, 4, 6), random_nonzero_poly(rng, 3, 5));
    const PolyFraction y(random_poly(rng, 4, 6), random_nonzero_poly(rng, 3, 5));
    const PolyFraction z(random_poly(rng, 4, 6), random_nonzero_poly(rng, 3, 5));
    EXPECT_TRUE(frac_add(x, y).equals(frac_add(y, x)));
    EXPECT_TRUE(frac_add(frac_add(x, y), z).equals(frac_add(x, frac_add(y, z))));
    EXPECT_TRUE(frac_mul(x, frac_add(y, z)).equals(frac_add(frac_mul(x, y), frac_mul(x, z))));
    const PolyFraction r = frac_reduce(x);
    EXPECT_TRUE(r.equals(x));
    const PolyFraction rr = frac_reduce(r);
    EXPECT_EQ(rr.numerator(), r.numerator());
    EXPECT_EQ(rr.denominator(), r.denominator());
    EXPECT_GT(r.denominator().leading_coeff(), 0);
    const auto centre = r.denominator().max_deg() + r.denominator().min_deg();
    EXPECT_TRUE(centre == 0 || centre == 1);
    EXPECT_TRUE(poly_gcd(r.numerator(), r.denominator()).is_unit() || r.numerator().is_zero());
  }
}

}  // namespace
}  // namespace jslope
