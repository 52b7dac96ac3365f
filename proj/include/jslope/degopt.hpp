#pragma once

// The degree objective Phi on D_n, its exhaustive and case-analysis maxima,
// the closed-form quadratic quasi-polynomial, and quasi-polynomial fitting.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jslope/jones.hpp"
#include "jslope/rational.hpp"

namespace jslope {

enum class CaseTag { Case1, Case2_1, Case2_2, Case2_3, Case2_4 };

std::string_view to_string(CaseTag tag);

struct Classification {
  Rational A;
  Rational B;
  Rational C;
  Rational Delta;  // 4AC - B^2
  CaseTag tag = CaseTag::Case1;

  // Case2_1 concludes like Case1: quadratic growth with the residue table.
  bool quadratic_case() const noexcept { return tag == CaseTag::Case1 || tag == CaseTag::Case2_1; }
};

Classification classify(const KnotParams& params);

// Phi at a point of D_n as an exact rational (half-integer building blocks).
Rational phi_exact(const KnotParams& params, const ColorTuple& p);
// Phi with the integrality assertion.
std::int64_t phi(const KnotParams& params, const ColorTuple& p);

// R(b, c) = Phi(b + c, b, c, 2n), closed form.
Rational restricted_R(const KnotParams& params, int n, const Rational& b, const Rational& c);
// Q(b) = R(b, 2n - b), closed form.
Rational restricted_Q(const KnotParams& params, int n, const Rational& b);

struct DegreeProfile {
  Rational b_m;                   // real maximiser of Q
  std::int64_t b0 = 0;            // an even integer nearest to b_m (the smaller on ties)
  std::optional<Rational> b_p;    // stationary point of R; absent when Delta = 0
  std::optional<Rational> c_p;
};

DegreeProfile degree_profile(const KnotParams& params, int n);

struct PhiMaximum {
  std::int64_t value = 0;
  std::vector<ColorTuple> argmax;  // enumeration order
};

PhiMaximum brute_max_phi(const KnotParams& params, int n, int jobs = 1);
std::int64_t fast_max_phi(const KnotParams& params, int n);

struct ResidueData {
  int j = 0;
  std::int64_t v_j = 0;            // canonical (smaller) nearest odd integer
  Rational beta_j;
  Rational c_j;
  bool tie = false;                // 2(t-1)j/(s+t-1) was an even integer
};

// (s + t - 1) / 2 in the quadratic case, 1 otherwise.
int degree_period(const KnotParams& params);
// Leading coefficient 2(t-1)^2/(s+t-1) - 2(r+t), or 0.
Rational closed_form_slope(const KnotParams& params);
// Linear coefficient 2(r+u+3), or 2u.
Rational closed_form_linear(const KnotParams& params);

ResidueData residue_data(const KnotParams& params, int j);
std::vector<ResidueData> residue_table(const KnotParams& params);

// d+ J_K(N) by the closed form. Throws BelowThreshold for N < threshold when a
// threshold is given.
std::int64_t closed_form_dplus(const KnotParams& params, int N, std::optional<int> threshold = std::nullopt);

struct DegreeSample {
  int N = 0;
  std::int64_t degree = 0;
};

struct QuasiPolynomial {
  struct Residue {
    int j = 0;
    Rational a;
    Rational two_b;
    Rational c;
    int first_exact = 0;  // least sample N in this class from which the fit is exact
  };
  int period = 1;
  std::vector<Residue> residues;  // indexed by j = N mod period
  int N0 = 1;                     // least N from which every sample fits

  Rational evaluate(int N) const;
};

struct FitOptions {
  // Trailing samples per residue class that must agree with the fit; the
  // quadratic is determined by 3, so 4 or more means it is confirmed.
  int min_exact = 3;
};

QuasiPolynomial fit_quasi(std::span<const DegreeSample> samples, int period, FitOptions options = {});

// Smallest divisor p' of the period with identical quadratics on classes
// congruent mod p'.
int least_period(const QuasiPolynomial& q);

}  // namespace jslope
