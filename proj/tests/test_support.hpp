#pragma once

// Shared generators and independent reference implementations for the tests.

#include <ostream>
#include <random>
#include <vector>

#include "jslope/jones.hpp"
#include "jslope/laurent.hpp"

namespace jslope {

// Readable gtest failure messages.
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_text(); }

}  // namespace jslope

namespace jslope::testing {

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 6, int exp_range = 12, int coeff_range = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> ex(-exp_range, exp_range);
  std::uniform_int_distribution<int> co(-coeff_range, coeff_range);
  std::vector<LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({ex(rng), Integer(co(rng))});
  return LaurentPoly::from_terms(std::move(terms));
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, int max_terms = 6, int exp_range = 12) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms, exp_range);
    if (!p.is_zero()) return p;
  }
}

// Dense coefficient vector of v^{-min} p, low degree first.
inline std::vector<Integer> dense(const LaurentPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  out.assign(static_cast<std::size_t>(p.max_deg() - p.min_deg() + 1), Integer(0));
  for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.exponent - p.min_deg())] = t.coeff;
  return out;
}

inline LaurentPoly from_dense(const std::vector<Integer>& c) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({static_cast<std::int64_t>(i), c[i]});
  return LaurentPoly::from_terms(std::move(terms));
}

inline Integer content(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

inline void trim(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

inline std::vector<Integer> primitive(std::vector<Integer> c) {
  trim(c);
  if (c.empty()) return c;
  Integer g = content(c);
  if (c.back() < 0) g = -g;
  for (auto& x : c) x /= g;
  return c;
}

// Pseudo-remainder of a by b (dense, low degree first).
inline std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
  const Integer lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

// gcd by the primitive polynomial remainder sequence over Z[v], normalised to
// min exponent 0 and positive leading coefficient.
inline LaurentPoly prs_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<Integer> a = primitive(dense(p));
  std::vector<Integer> b = primitive(dense(q));
  if (a.empty()) return from_dense(b);
  if (b.empty()) return from_dense(a);
  Integer ca = content(dense(p));
  Integer cb = content(dense(q));
  Integer g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  while (!b.empty()) {
    std::vector<Integer> r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& x : a) x *= g;
  return from_dense(a);
}

// Valid parameter tuples over small ranges.
inline std::vector<KnotParams> small_grid(long r_lo, long s_hi, long t_hi, long u_lo) {
  std::vector<KnotParams> out;
  for (long r = r_lo; r <= -3; r += 2)
    for (long s = 2; s <= s_hi; s += 2)
      for (long t = 3; t <= t_hi; t += 2)
        for (long u = u_lo; u <= -1; u += 2) out.push_back(KnotParams::make(r, s, t, u));
  return out;
}

}  // namespace jslope::testing
