#pragma once

// Coloured Jones polynomials of the Montesinos knots M(1/r, 1/(s - 1/u), 1/t)
// by the knotted-trivalent-graph state sum.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jslope/laurent.hpp"

namespace jslope {

// r, u, t odd; s even; u <= -1; r < -1 < 1 < s, t.
struct KnotParams {
  long r = -3;
  long s = 2;
  long t = 3;
  long u = -3;

  static bool valid(long r, long s, long t, long u) noexcept;
  // Throws InvalidParams naming the violated constraint.
  static KnotParams make(long r, long s, long t, long u);

  // "r_s_t_u"
  std::string key() const;

  friend bool operator==(const KnotParams&, const KnotParams&) = default;
  friend auto operator<=>(const KnotParams&, const KnotParams&) = default;
};

// A point of the summation domain D_n: even colours in [0, 2n] with (a, b, c)
// admissible.
struct ColorTuple {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int n = 0;

  friend bool operator==(const ColorTuple&, const ColorTuple&) = default;
  friend auto operator<=>(const ColorTuple&, const ColorTuple&) = default;
};

bool in_domain(const ColorTuple& p);

// D_n in lexicographic (a, b, c, d) order.
std::vector<ColorTuple> domain_points(int n);

// One term of the state sum, as an unreduced fraction over the product of the
// four <Theta; x, n, n>.
PolyFraction summand(const KnotParams& params, const ColorTuple& colors);

// Sum of the summands over `points` (all with colour n) as a reduced fraction.
// The result does not depend on the order of `points`.
PolyFraction state_sum(const KnotParams& params, int n, std::span<const ColorTuple> points, int jobs = 1);

// J_K(N), normalised so the unknot gives [N].
LaurentPoly colored_jones(const KnotParams& params, int N, int jobs = 1);

struct DegreeLead {
  std::int64_t degree = 0;
  Integer leading;
};

DegreeLead exact_dplus(const LaurentPoly& jones);
DegreeLead exact_dplus(const KnotParams& params, int N, int jobs = 1);

}  // namespace jslope
