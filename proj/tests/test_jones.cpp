#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <random>

#include "jslope/error.hpp"
#include "jslope/jones.hpp"
#include "jslope/ktg.hpp"
#include "test_support.hpp"

namespace jslope {
namespace {

// |J(2)/[2]| at v = exp(i pi/4), i.e. the Jones polynomial at t = -1.
long jones_at_minus_one(const LaurentPoly& j2) {
  const LaurentPoly v = exact_div(j2, qint(2));
  std::complex<double> sum = 0;
  for (const auto& t : v.terms()) sum += t.coeff.get_d() * std::polar(1.0, M_PI / 4 * static_cast<double>(t.exponent));
  return std::lround(std::abs(sum));
}

// Knot determinant from the rational tangles 1/r, u/(su-1), 1/t.
long montesinos_determinant(const KnotParams& k) {
  const long q = k.s * k.u - 1;
  return std::labs(q * k.t + k.r * k.u * k.t + k.r * q);
}

TEST(Params, Validation) {
  EXPECT_TRUE(KnotParams::valid(-3, 2, 3, -1));
  EXPECT_FALSE(KnotParams::valid(-3, 3, 3, -1));
  EXPECT_FALSE(KnotParams::valid(-1, 2, 3, -1));
  EXPECT_FALSE(KnotParams::valid(-3, 2, 3, 1));
  EXPECT_FALSE(KnotParams::valid(-3, 2, 1, -1));
  try {
    KnotParams::make(-3, 3, 3, -3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParams);
    EXPECT_NE(std::string(e.what()).find("s must be even"), std::string::npos);
  }
  EXPECT_EQ(KnotParams::make(-5, 4, 7, -3).key(), "-5_4_7_-3");
}

TEST(Domain, EnumerationOrderAndMembership) {
  EXPECT_EQ(domain_points(0).size(), 1u);
  const auto pts = domain_points(2);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
  std::size_t expected = 0;
  for (int a = 0; a <= 4; a += 2)
    for (int b = 0; b <= 4; b += 2)
      for (int c = 0; c <= 4; c += 2)
        if (AdmissibleTriple::admissible(a, b, c)) expected += 3;
  EXPECT_EQ(pts.size(), expected);
  for (const auto& p : pts) EXPECT_TRUE(in_domain(p));
  EXPECT_FALSE(in_domain({2, 2, 2, 6, 2}));
  EXPECT_FALSE(in_domain({1, 1, 0, 0, 2}));
  EXPECT_THROW(domain_points(-1), Error);
}

TEST(ColoredJones, TrivialColourIsOne) {
  for (const auto& k : testing::small_grid(-9, 8, 9, -5)) {
    EXPECT_EQ(colored_jones(k, 1), LaurentPoly::constant(1)) << k.key();
  }
}

TEST(ColoredJones, UnknotNormalisationChecks) {
  for (const auto& k : testing::small_grid(-5, 4, 5, -3)) {
    for (int N = 2; N <= 4; ++N) {
      const LaurentPoly j = colored_jones(k, N);
      EXPECT_EQ(evaluate_at_one(j), N) << k.key() << " N=" << N;
      LaurentPoly q;
      EXPECT_TRUE(try_exact_div(j, qint(N), &q)) << k.key() << " N=" << N;
    }
  }
}

TEST(ColoredJones, DeterminantAtMinusOne) {
  for (const auto& k : testing::small_grid(-7, 6, 7, -5)) {
    EXPECT_EQ(jones_at_minus_one(colored_jones(k, 2)), montesinos_determinant(k)) << k.key();
  }
  EXPECT_EQ(montesinos_determinant(KnotParams::make(-3, 2, 3, -3)), 27);
}

TEST(ColoredJones, ThreadCountDoesNotChangeResult) {
  const KnotParams k = KnotParams::make(-5, 4, 5, -3);
  EXPECT_EQ(colored_jones(k, 4, 1), colored_jones(k, 4, 4));
}

TEST(StateSum, OrderIndependent) {
  const KnotParams k = KnotParams::make(-3, 2, 5, -3);
  std::vector<ColorTuple> pts = domain_points(3);
  const PolyFraction reference = state_sum(k, 3, pts);
  std::mt19937 rng(8);
  for (int i = 0; i < 3; ++i) {
    std::shuffle(pts.begin(), pts.end(), rng);
    const PolyFraction s = state_sum(k, 3, pts);
    EXPECT_EQ(s.numerator(), reference.numerator());
    EXPECT_EQ(s.denominator(), reference.denominator());
  }
}

TEST(StateSum, MatchesTermByTermFractionSum) {
  for (const auto& k : {KnotParams::make(-3, 2, 3, -3), KnotParams::make(-5, 4, 3, -1)}) {
    for (int n = 0; n <= 2; ++n) {
      const auto pts = domain_points(n);
      PolyFraction acc;
      for (const auto& p : pts) acc = frac_reduce(frac_add(acc, summand(k, p)));
      EXPECT_TRUE(acc.equals(state_sum(k, n, pts))) << k.key() << " n=" << n;
    }
  }
}

TEST(StateSum, SummandStructure) {
  const KnotParams k = KnotParams::make(-3, 2, 3, -3);
  const ColorTuple p{2, 2, 2, 4, 2};
  const PolyFraction s = summand(k, p);
  EXPECT_EQ(s.denominator(), theta(2, 2, 2) * theta(2, 2, 2) * theta(2, 2, 2) * theta(4, 2, 2));
  EXPECT_THROW(summand(k, {2, 2, 6, 0, 2}), Error);
  const std::vector<ColorTuple> wrong_n{{0, 0, 0, 0, 1}};
  EXPECT_THROW(state_sum(k, 2, wrong_n), Error);
}

TEST(ExactDegree, ExtractsDegreeAndLeadingCoefficient) {
  const DegreeLead d = exact_dplus(LaurentPoly::parse_text("3*v^7 - 1*v^2"));
  EXPECT_EQ(d.degree, 7);
  EXPECT_EQ(d.leading, 3);
  EXPECT_THROW(exact_dplus(LaurentPoly{}), Error);
  EXPECT_THROW(colored_jones(KnotParams::make(-3, 2, 3, -3), 0), Error);
}

}  // namespace
}  // namespace jslope
