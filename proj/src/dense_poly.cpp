#include "dense_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>

#include "jslope/error.hpp"

namespace jslope::detail {

std::int64_t exponent_stride(const LaurentPoly& p) {
  std::int64_t g = 0;
  if (p.is_zero()) return 0;
  const auto base = p.min_deg();
  for (const auto& t : p.terms()) g = std::gcd(g, t.exponent - base);
  return g;
}

Dense to_dense(const LaurentPoly& p, std::int64_t stride) {
  Dense d;
  if (p.is_zero()) return d;
  d.shift = p.min_deg();
  d.coeffs.resize(static_cast<std::size_t>((p.max_deg() - d.shift) / stride + 1));
  for (const auto& t : p.terms()) d.coeffs[static_cast<std::size_t>((t.exponent - d.shift) / stride)] = t.coeff;
  return d;
}

LaurentPoly from_dense(const Coeffs& coeffs, std::int64_t shift, std::int64_t stride) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms.push_back({shift + static_cast<std::int64_t>(i) * stride, coeffs[i]});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool divide_exact(const Coeffs& a, const Coeffs& b, Coeffs* quotient) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  const int da = degree(a);
  const int db = degree(b);
  if (da < db) return false;
  Coeffs rem = a;
  Coeffs q(static_cast<std::size_t>(da - db + 1));
  const mpz_srcptr lc = b.back().get_mpz_t();
  for (int i = da - db; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc)) return false;
    Integer& qi = q[static_cast<std::size_t>(i)];
    mpz_divexact(qi.get_mpz_t(), top.get_mpz_t(), lc);
    for (int j = 0; j <= db; ++j) {
      const auto& bj = b[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qi.get_mpz_t(), bj.get_mpz_t());
    }
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  }
  trim(q);
  if (quotient) *quotient = std::move(q);
  return true;
}

Integer content(const Coeffs& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Coeffs primitive_part(const Coeffs& a) {
  Coeffs out = a;
  trim(out);
  if (out.empty()) return out;
  Integer g = content(out);
  if (out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

using Residues = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void trim(Residues& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Residues reduce_mod(const Coeffs& a, std::uint64_t p) {
  Residues out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  return out;
}

// Monic gcd over F_p.
Residues gcd_mod(Residues a, Residues b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv_lc = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      const std::uint64_t f = mul_mod(a.back(), inv_lc, p);
      const std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[off + j] = (a[off + j] + p - mul_mod(f, b[j], p)) % p;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv_lc = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv_lc, p);
  }
  return a;
}

// 31-bit primes, ascending from 2^30, generated once.
std::uint64_t nth_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mu);
  while (primes.size() <= i) {
    Integer z = primes.empty() ? Integer(1UL << 30) : Integer(static_cast<unsigned long>(primes.back()));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    primes.push_back(z.get_ui());
  }
  return primes[i];
}

}  // namespace

Coeffs modular_gcd(const Coeffs& a_in, const Coeffs& b_in) {
  Coeffs a = a_in;
  Coeffs b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) {
    Coeffs out = a.empty() ? b : a;
    if (!out.empty() && out.back() < 0)
      for (auto& c : out) c = -c;
    return out;
  }

  Integer cont;
  {
    const Integer ca = content(a);
    const Integer cb = content(b);
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = primitive_part(a);
  b = primitive_part(b);
  if (degree(a) == 0 || degree(b) == 0) return Coeffs{cont};

  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  std::optional<int> current_degree;
  Coeffs image;       // symmetric residues modulo `modulus`
  Integer modulus;
  Coeffs previous;

  for (std::size_t pi = 0;; ++pi) {
    const std::uint64_t p = nth_prime(pi);
    if (mpz_fdiv_ui(gamma.get_mpz_t(), p) == 0) continue;
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;

    Residues g = gcd_mod(reduce_mod(a, p), reduce_mod(b, p), p);
    const int d = static_cast<int>(g.size()) - 1;
    if (d == 0) return Coeffs{cont};

    const std::uint64_t gamma_p = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = mul_mod(c, gamma_p, p);

    if (!current_degree || d < *current_degree) {
      // First image, or every earlier prime was unlucky.
      current_degree = d;
      modulus = static_cast<unsigned long>(p);
      image.assign(g.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) {
        image[i] = static_cast<unsigned long>(g[i]);
        if (image[i] > modulus / 2) image[i] -= modulus;
      }
      previous.clear();
    } else if (d > *current_degree) {
      continue;
    } else {
      const std::uint64_t m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
      const std::uint64_t m_inv = inv_mod(m_mod_p, p);
      Integer next_modulus = modulus * static_cast<unsigned long>(p);
      Integer half = next_modulus / 2;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::uint64_t h = mpz_fdiv_ui(image[i].get_mpz_t(), p);
        const std::uint64_t t = mul_mod((g[i] + p - h) % p, m_inv, p);
        Integer& c = image[i];
        mpz_addmul_ui(c.get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), next_modulus.get_mpz_t());
        if (c > half) c -= next_modulus;
      }
      modulus = std::move(next_modulus);
    }

    if (image == previous) {
      Coeffs candidate = primitive_part(image);
      if (divide_exact(a, candidate, nullptr) && divide_exact(b, candidate, nullptr)) {
        for (auto& c : candidate) c *= cont;
        return candidate;
      }
    }
    previous = image;
  }
}

}  // namespace jslope::detail
