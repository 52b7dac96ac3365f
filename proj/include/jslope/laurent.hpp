#pragma once

// Exact integer Laurent polynomials in v, quantum integers, and the
// field-of-fractions arithmetic used by the state sum.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "jslope/rational.hpp"

namespace jslope {

class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  struct Term {
    Exponent exponent;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);
  // Sorts, merges equal exponents and drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Ascending by exponent, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Exponent max_deg() const;
  Exponent min_deg() const;
  const Integer& leading_coeff() const;
  const Integer& trailing_coeff() const;
  Integer coeff(Exponent e) const;

  // True for +-v^e.
  bool is_unit() const noexcept;

  // Multiplies by sign * v^e.
  LaurentPoly shifted(Exponent e, int sign = 1) const;

  // Descending "c*v^e" terms, e.g. "1*v^4 + 1*v^0 + 1*v^-4"; "0" for zero.
  std::string to_text() const;
  static LaurentPoly parse_text(const std::string& text);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);

 private:
  std::vector<Term> terms_;
};

// Named ring operations.
inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
inline LaurentPoly negate(const LaurentPoly& p) { return -p; }
inline LaurentPoly shift(const LaurentPoly& p, LaurentPoly::Exponent e, int sign) {
  return p.shifted(e, sign);
}

// Evaluation at v = 1.
Integer evaluate_at_one(const LaurentPoly& p);

// [k] = (v^{2k} - v^{-2k}) / (v^2 - v^{-2}).
LaurentPoly qint(int k);
// [k]! = [k][k-1]...[1]; memoised.
LaurentPoly qfact(int k);
// [sum parts]! / prod [part]!, by exact division.
LaurentPoly qmultinom(std::span<const int> parts);
inline LaurentPoly qmultinom(std::initializer_list<int> parts) {
  return qmultinom(std::span<const int>(parts.begin(), parts.size()));
}
// Quantum binomial [n choose k]; zero outside 0 <= k <= n.
LaurentPoly qbinom(int n, int k);

// p / q; throws NonExactDivision when q does not divide p, DivisionByZero for q = 0.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
// Non-throwing variant: false when the division leaves a remainder.
bool try_exact_div(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly* quotient);

// Greatest common divisor up to units +-v^e, normalised to min exponent 0 and
// positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q);

class PolyFraction {
 public:
  PolyFraction() : den_(LaurentPoly::constant(1)) {}
  explicit PolyFraction(LaurentPoly num);
  PolyFraction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // Cross-multiplied equality; independent of reduction state.
  bool equals(const PolyFraction& other) const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// Sum over the least common multiple of the denominators; the numerator is
// left unreduced against it.
PolyFraction frac_add(const PolyFraction& x, const PolyFraction& y);
PolyFraction frac_mul(const PolyFraction& x, const PolyFraction& y);
// Divides out gcd(num, den). The denominator ends with positive leading
// coefficient and is centred: max_deg + min_deg is 0 or 1.
PolyFraction frac_reduce(const PolyFraction& x);
// Throws NotPolynomial when the reduced denominator is not +-v^e.
LaurentPoly frac_to_poly(const PolyFraction& x);

}  // namespace jslope
