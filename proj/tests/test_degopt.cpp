#include <gtest/gtest.h>

#include <functional>

#include "jslope/degopt.hpp"
#include "jslope/error.hpp"
#include "test_support.hpp"

namespace jslope {
namespace {

KnotParams K(long r, long s, long t, long u) { return KnotParams::make(r, s, t, u); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Classify, CaseTags) {
  EXPECT_EQ(classify(K(-3, 2, 3, -3)).tag, CaseTag::Case1);
  EXPECT_EQ(classify(K(-3, 4, 5, -1)).tag, CaseTag::Case2_4);
  EXPECT_EQ(classify(K(-3, 6, 5, -3)).tag, CaseTag::Case2_2);
  EXPECT_EQ(classify(K(-5, 6, 7, -1)).tag, CaseTag::Case2_1);
  EXPECT_EQ(classify(K(-5, 8, 9, -1)).tag, CaseTag::Case2_3);
  const Classification c = classify(K(-5, 6, 7, -3));
  EXPECT_EQ(c.A, make_rational(-1, 1));
  EXPECT_EQ(c.B, 4);
  EXPECT_EQ(c.C, -1);
  EXPECT_EQ(c.Delta, 4 * c.A * c.C - c.B * c.B);
  EXPECT_TRUE(c.quadratic_case());
  EXPECT_FALSE(classify(K(-3, 6, 5, -3)).quadratic_case());
}

TEST(Phi, HandComputedValues) {
  // Phi(0,0,0,2n) = 2un.
  for (const auto& k : {K(-3, 2, 3, -3), K(-7, 4, 9, -5)})
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(phi(k, {0, 0, 0, 2 * n, n}), 2 * k.u * n);
  EXPECT_EQ(phi_exact(K(-3, 2, 3, -3), {0, 0, 0, 0, 0}), 0);
  EXPECT_EQ(kind_of([] { phi(K(-3, 2, 3, -3), {2, 2, 6, 0, 2}); }), ErrorKind::InadmissibleColoring);
}

// Phi equals the maximal degree of the summand it models.
TEST(Phi, EqualsSummandDegree) {
  for (const auto& k : {K(-3, 2, 3, -3), K(-5, 4, 5, -1), K(-3, 6, 5, -3)}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& p : domain_points(n)) {
        const PolyFraction s = summand(k, p);
        const auto deg = s.numerator().max_deg() - s.denominator().max_deg();
        // Degree of the f(n)^{-4u} prefactor of J.
        const std::int64_t shift = 2 * k.u * n * (n + 2);
        EXPECT_EQ(phi(k, p), deg + shift) << k.key() << " " << p.a << p.b << p.c << p.d;
      }
    }
  }
}

TEST(Restricted, RMatchesPhiOnFace) {
  for (const auto& k : testing::small_grid(-9, 8, 9, -5)) {
    for (int n = 1; n <= 4; ++n)
      for (int b = 0; b <= 2 * n; b += 2)
        for (int c = 0; b + c <= 2 * n; c += 2) {
          EXPECT_EQ(restricted_R(k, n, b, c), phi_exact(k, {b + c, b, c, 2 * n, n})) << k.key();
        }
  }
}

TEST(Restricted, QIsRAlongTheEdge) {
  for (const auto& k : testing::small_grid(-9, 8, 9, -5))
    for (int n = 1; n <= 5; ++n)
      for (int b = -3; b <= 2 * n + 3; ++b) {
        EXPECT_EQ(restricted_Q(k, n, b), restricted_R(k, n, b, 2 * n - b));
      }
}

TEST(Profile, MaximiserAndStationaryPoint) {
  for (const auto& k : testing::small_grid(-11, 10, 11, -3)) {
    for (int n = 1; n <= 6; ++n) {
      const DegreeProfile d = degree_profile(k, n);
      // Q is a concave parabola with vertex b_m.
      EXPECT_EQ(restricted_Q(k, n, d.b_m + 1), restricted_Q(k, n, d.b_m - 1));
      EXPECT_GE(restricted_Q(k, n, d.b_m), restricted_Q(k, n, d.b_m + Rational(1, 3)));
      EXPECT_EQ(d.b0 % 2, 0);
      EXPECT_LE(abs(Rational(d.b0) - d.b_m), 1);
      const Classification c = classify(k);
      if (c.Delta == 0) {
        EXPECT_FALSE(d.b_p.has_value());
        continue;
      }
      ASSERT_TRUE(d.b_p && d.c_p);
      // Gradient of R vanishes at P.
      const Rational h(1, 7);
      const Rational r0 = restricted_R(k, n, *d.b_p, *d.c_p);
      EXPECT_EQ(restricted_R(k, n, *d.b_p + h, *d.c_p) + restricted_R(k, n, *d.b_p - h, *d.c_p), 2 * r0 - 2 * c.A * h * h * -1);
      EXPECT_EQ(restricted_R(k, n, *d.b_p + h, *d.c_p) - restricted_R(k, n, *d.b_p - h, *d.c_p), 0);
      EXPECT_EQ(restricted_R(k, n, *d.b_p, *d.c_p + h) - restricted_R(k, n, *d.b_p, *d.c_p - h), 0);
    }
  }
}

TEST(Maxima, BruteArgmaxAttainsValue) {
  const KnotParams k = K(-3, 2, 3, -3);
  const PhiMaximum m = brute_max_phi(k, 3);
  ASSERT_FALSE(m.argmax.empty());
  for (const auto& p : m.argmax) EXPECT_EQ(phi(k, p), m.value);
  for (const auto& p : domain_points(3)) EXPECT_LE(phi(k, p), m.value);
  EXPECT_EQ(brute_max_phi(k, 5, 3).value, brute_max_phi(k, 5, 1).value);
}

TEST(Maxima, FastEqualsBruteAcrossCases) {
  int seen[5] = {0, 0, 0, 0, 0};
  for (long r = -11; r <= -3; r += 2)
    for (long s = 2; s <= 12; s += 2)
      for (long t = 3; t <= 13; t += 2)
        for (long u : {-3L, -1L}) {
          const KnotParams k = K(r, s, t, u);
          ++seen[static_cast<int>(classify(k).tag)];
          for (int n = 0; n <= 8; ++n) EXPECT_EQ(fast_max_phi(k, n), brute_max_phi(k, n).value) << k.key() << " n=" << n;
        }
  for (int c = 0; c < 5; ++c) EXPECT_GT(seen[c], 0) << "case " << c << " not covered";
}

TEST(ClosedForm, ResidueTableOfExample) {
  const KnotParams k = K(-3, 2, 3, -3);
  EXPECT_EQ(degree_period(k), 2);
  EXPECT_EQ(closed_form_slope(k), 2);
  EXPECT_EQ(closed_form_linear(k), -6);
  const auto table = residue_table(k);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].c_j, 2);
  EXPECT_EQ(table[1].c_j, 4);
  for (int N = 1; N <= 9; ++N) EXPECT_EQ(closed_form_dplus(k, N), 2 * N * N - 6 * N + (N % 2 == 0 ? 2 : 4));
}

TEST(ClosedForm, Case2IsLinear) {
  for (const auto& k : {K(-3, 4, 5, -1), K(-3, 6, 5, -3), K(-5, 8, 9, -3)}) {
    EXPECT_EQ(degree_period(k), 1);
    EXPECT_EQ(closed_form_slope(k), 0);
    EXPECT_TRUE(residue_table(k).empty());
    for (int N = 1; N <= 10; ++N) EXPECT_EQ(closed_form_dplus(k, N), 2 * k.u * (N - 1));
  }
}

TEST(ClosedForm, ResidueTies) {
  for (const auto& k : testing::small_grid(-9, 10, 11, -3)) {
    for (const auto& r : residue_table(k)) {
      const Rational x = make_rational(2 * (k.t - 1) * r.j, k.s + k.t - 1);
      EXPECT_EQ(r.v_j % 2 != 0, true);
      EXPECT_LE(abs(Rational(r.v_j) - x), 1);
      EXPECT_EQ(r.tie, is_integral(x) && x.get_num() % 2 == 0);
    }
  }
}

TEST(ClosedForm, AgreesWithMaximumAboveThreshold) {
  for (const auto& k : testing::small_grid(-9, 8, 9, -3)) {
    const int p = degree_period(k);
    int last_bad = 0;
    const int top = 12 + 3 * p;
    for (int N = 1; N <= top; ++N) {
      // brute force for small N, the fast maximiser (checked against brute force above) beyond.
      const std::int64_t truth = N <= 9 ? brute_max_phi(k, N - 1).value : fast_max_phi(k, N - 1);
      if (closed_form_dplus(k, N) != truth) last_bad = N;
    }
    EXPECT_LE(last_bad, top - 2 * p) << k.key();
    if (classify(k).tag == CaseTag::Case1) {
      EXPECT_EQ(last_bad, 0) << k.key();
    }
  }
}

TEST(ClosedForm, Threshold) {
  const KnotParams k = K(-3, 2, 3, -3);
  EXPECT_EQ(closed_form_dplus(k, 5, 3), 24);
  EXPECT_EQ(kind_of([&] { closed_form_dplus(k, 2, 3); }), ErrorKind::BelowThreshold);
  EXPECT_EQ(kind_of([&] { closed_form_dplus(k, 0); }), ErrorKind::InvalidArgument);
}

std::vector<DegreeSample> sequence(int from, int to, const std::function<std::int64_t(int)>& f) {
  std::vector<DegreeSample> out;
  for (int N = from; N <= to; ++N) out.push_back({N, f(N)});
  return out;
}

TEST(Fit, RecoversQuasiPolynomialAndOnset) {
  // Period 3 quadratics with a perturbed prefix up to N = 5.
  const auto f = [](int N) -> std::int64_t {
    const std::int64_t base = 3 * N * N - 4 * N + (N % 3 == 0 ? 1 : N % 3 == 1 ? 5 : -2);
    return N <= 5 ? base + 7 : base;
  };
  const auto samples = sequence(1, 24, f);
  const QuasiPolynomial q = fit_quasi(samples, 3, FitOptions{4});
  EXPECT_EQ(q.period, 3);
  EXPECT_EQ(q.N0, 6);
  EXPECT_EQ(least_period(q), 3);
  ASSERT_EQ(q.residues.size(), 3u);
  EXPECT_EQ(q.residues[0].a, 3);
  EXPECT_EQ(q.residues[0].two_b, -4);
  EXPECT_EQ(q.residues[1].c, 5);
  EXPECT_EQ(q.residues[2].c, -2);
  for (int N = 6; N <= 30; ++N) EXPECT_EQ(q.evaluate(N), f(N));
}

TEST(Fit, LeastPeriodDetectsCollapsedClasses) {
  const auto samples = sequence(1, 20, [](int N) -> std::int64_t { return N * N + (N % 2 ? 1 : 0); });
  EXPECT_EQ(least_period(fit_quasi(samples, 4)), 2);
  const auto linear = sequence(1, 20, [](int N) -> std::int64_t { return -6 * (N - 1); });
  const QuasiPolynomial q = fit_quasi(linear, 6);
  EXPECT_EQ(least_period(q), 1);
  EXPECT_EQ(q.residues[0].a, 0);
  EXPECT_EQ(q.N0, 1);
}

TEST(Fit, Errors) {
  const auto few = sequence(1, 5, [](int N) -> std::int64_t { return N * N; });
  EXPECT_EQ(kind_of([&] { fit_quasi(few, 2); }), ErrorKind::InsufficientSamples);
  const auto cubic = sequence(1, 20, [](int N) -> std::int64_t { return N * N * N; });
  EXPECT_EQ(kind_of([&] { fit_quasi(cubic, 1, FitOptions{4}); }), ErrorKind::NoQuadraticFit);
  std::vector<DegreeSample> dup{{1, 0}, {1, 0}, {2, 0}, {3, 0}};
  EXPECT_EQ(kind_of([&] { fit_quasi(dup, 1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { fit_quasi(few, 0); }), ErrorKind::InvalidArgument);
}

}  // namespace
}  // namespace jslope
