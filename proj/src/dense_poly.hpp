#pragma once

// Internal dense representation used by division and gcd. A Laurent
// polynomial p is written as v^shift * P(v^stride) with P an ordinary integer
// polynomial whose constant term is nonzero.

#include <cstdint>
#include <vector>

#include "jslope/laurent.hpp"

namespace jslope::detail {

using Coeffs = std::vector<Integer>;  // low to high

// gcd of (e - min_deg) over the terms; 0 for a single term.
std::int64_t exponent_stride(const LaurentPoly& p);

struct Dense {
  std::int64_t shift = 0;
  Coeffs coeffs;
};

Dense to_dense(const LaurentPoly& p, std::int64_t stride);
LaurentPoly from_dense(const Coeffs& coeffs, std::int64_t shift, std::int64_t stride);

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }
void trim(Coeffs& a);

// Ordinary long division over Z. False when b does not divide a exactly.
bool divide_exact(const Coeffs& a, const Coeffs& b, Coeffs* quotient);

Integer content(const Coeffs& a);
Coeffs primitive_part(const Coeffs& a);

// gcd over Z[x] by the modular (CRT) algorithm; primitive part times the gcd
// of contents, positive leading coefficient.
Coeffs modular_gcd(const Coeffs& a, const Coeffs& b);

}  // namespace jslope::detail
