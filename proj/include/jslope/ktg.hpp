#pragma once

// Evaluators for the theta graph, the coloured unknot, the framing twist and
// the 6j/theta quotient, together with their maximal v-degrees.

#include <array>
#include <cstdint>

#include "jslope/laurent.hpp"
#include "jslope/rational.hpp"

namespace jslope {

// Colours x, y, z with even sum satisfying the triangle inequality.
struct AdmissibleTriple {
  int x = 0;
  int y = 0;
  int z = 0;

  static bool admissible(int x, int y, int z) noexcept;
  // Throws InadmissibleColoring.
  static AdmissibleTriple make(int x, int y, int z);
};

// sign * v^exponent.
struct SignedMonomial {
  int sign = 1;
  std::int64_t exponent = 0;

  LaurentPoly to_poly() const { return LaurentPoly::monomial(sign, exponent); }
  friend SignedMonomial operator*(SignedMonomial a, SignedMonomial b) {
    return {a.sign * b.sign, a.exponent + b.exponent};
  }
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

// <Theta; a, b, c> = O^{(a+b+c)/2} [ (a+b+c)/2 ; (-a+b+c)/2, (a-b+c)/2, (a+b-c)/2 ].
LaurentPoly theta(int a, int b, int c);

// O^k = (-1)^k [k+1].
LaurentPoly circle(int k);

// f(a)^w with f(a) = i^{-a} v^{-a(a+2)/2}. Only real phases are representable.
SignedMonomial framing_power(int a, std::int64_t w);

struct ZRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const noexcept { return lo > hi; }
};

// Interval of z on which every binomial of the 6j sum has 0 <= k <= n.
ZRange delta6j_z_range(int a, int b, int c, int alpha, int beta, int gamma);

// Alternating z-sum of four quantum binomials; zero when the z-range is empty.
LaurentPoly delta6j(int a, int b, int c, int alpha, int beta, int gamma);

std::int64_t dplus_theta(int a, int b, int c);

struct DeltaDegreeData {
  std::int64_t m = 0;
  std::array<std::int64_t, 4> g_terms{};
  ZRange z_range;
};

struct DeltaDegree {
  std::int64_t value = 0;
  DeltaDegreeData data;
};

// g(n, k) = 2k(n - k): the degree of the quantum binomial [n choose k].
constexpr std::int64_t g_degree(std::int64_t n, std::int64_t k) { return 2 * k * (n - k); }

DeltaDegree dplus_delta6j(int a, int b, int c, int alpha, int beta, int gamma);

enum class AtomKind { Framing, Circle };

// d+ f(a) = -a(a+2)/2 (a half-integer for odd a); d+ O^k = 2k.
Rational dplus_atom(AtomKind kind, int arg);

}  // namespace jslope
