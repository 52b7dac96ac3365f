#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace jslope {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Exact "p/q" text; integers keep the "/1" so every rational field has one shape.
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text);

// Largest integer not above q.
Integer floor_of(const Rational& q);

std::int64_t to_int64(const Integer& z);

}  // namespace jslope
