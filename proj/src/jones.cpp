#include "jslope/jones.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "jslope/error.hpp"
#include "jslope/ktg.hpp"
#include "parallel.hpp"

namespace jslope {

bool KnotParams::valid(long r, long s, long t, long u) noexcept {
  const auto odd = [](long x) { return x % 2 != 0; };
  return odd(r) && odd(u) && odd(t) && !odd(s) && u <= -1 && r < -1 && s > 1 && t > 1;
}

KnotParams KnotParams::make(long r, long s, long t, long u) {
  const auto odd = [](long x) { return x % 2 != 0; };
  std::string why;
  if (!odd(r)) why = "r must be odd";
  else if (!odd(t)) why = "t must be odd";
  else if (!odd(u)) why = "u must be odd";
  else if (odd(s)) why = "s must be even";
  else if (u > -1) why = "u must be <= -1";
  else if (r >= -1) why = "r must be < -1";
  else if (s <= 1) why = "s must be > 1";
  else if (t <= 1) why = "t must be > 1";
  if (!why.empty()) {
    fail(ErrorKind::InvalidParams, why + " (got r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                       " t=" + std::to_string(t) + " u=" + std::to_string(u) + ")");
  }
  return {r, s, t, u};
}

std::string KnotParams::key() const {
  return std::to_string(r) + "_" + std::to_string(s) + "_" + std::to_string(t) + "_" + std::to_string(u);
}

bool in_domain(const ColorTuple& p) {
  const auto ok = [&](int x) { return x >= 0 && x <= 2 * p.n && x % 2 == 0; };
  return p.n >= 0 && ok(p.a) && ok(p.b) && ok(p.c) && ok(p.d) && AdmissibleTriple::admissible(p.a, p.b, p.c);
}

std::vector<ColorTuple> domain_points(int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative colour n");
  std::vector<ColorTuple> out;
  for (int a = 0; a <= 2 * n; a += 2)
    for (int b = 0; b <= 2 * n; b += 2)
      for (int c = 0; c <= 2 * n; c += 2) {
        if (!AdmissibleTriple::admissible(a, b, c)) continue;
        for (int d = 0; d <= 2 * n; d += 2) out.push_back({a, b, c, d, n});
      }
  return out;
}

namespace {

SignedMonomial framing_of(const KnotParams& k, const ColorTuple& p) {
  return framing_power(p.a, k.r) * framing_power(p.b, k.s) * framing_power(p.c, k.t) * framing_power(p.d, k.u);
}

void require_domain(const ColorTuple& p) {
  if (!in_domain(p)) {
    fail(ErrorKind::InadmissibleColoring,
         "colours (" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
             std::to_string(p.d) + ") outside D_" + std::to_string(p.n));
  }
}

// Caches for one colour n. Everything is filled before any parallel section
// and is read-only afterwards.
class StateSumTables {
 public:
  StateSumTables(const KnotParams& params, int n, std::span<const ColorTuple> points) : params_(params), n_(n) {
    for (int x = 0; x <= 2 * n; x += 2) theta_nn_.push_back(theta(x, n, n));
    for (const auto& p : points) {
      main_.try_emplace({p.a, p.b, p.c}, LaurentPoly{});
      side_.try_emplace({p.b, p.d}, LaurentPoly{});
    }
    for (auto& [k, v] : main_) v = delta6j(k[0], k[1], k[2], n, n, n);
    for (auto& [k, v] : side_) v = delta6j(k[0], n, n, k[1], n, n);
  }

  int n() const { return n_; }
  const LaurentPoly& theta_nn(int x) const { return theta_nn_[static_cast<std::size_t>(x / 2)]; }
  const std::vector<LaurentPoly>& all_theta_nn() const { return theta_nn_; }

  // Numerator of the summand; the denominator is prod theta_nn.
  LaurentPoly numerator(const ColorTuple& p) const {
    const LaurentPoly& dm = main_.at({p.a, p.b, p.c});
    const LaurentPoly& ds = side_.at({p.b, p.d});
    if (dm.is_zero() || ds.is_zero()) return {};
    const SignedMonomial f = framing_of(params_, p);
    LaurentPoly out = theta(p.a, p.b, p.c) * dm * dm * ds;
    out *= circle(p.a) * circle(p.b) * circle(p.c) * circle(p.d);
    return out.shifted(f.exponent, f.sign);
  }

 private:
  KnotParams params_;
  int n_;
  std::vector<LaurentPoly> theta_nn_;
  std::map<std::array<int, 3>, LaurentPoly> main_;
  std::map<std::array<int, 2>, LaurentPoly> side_;
};

using DenKey = std::array<int, 4>;

DenKey den_key(const ColorTuple& p) {
  DenKey k{p.a, p.b, p.c, p.d};
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

PolyFraction summand(const KnotParams& params, const ColorTuple& p) {
  require_domain(p);
  const int n = p.n;
  const LaurentPoly dm = delta6j(p.a, p.b, p.c, n, n, n);
  const LaurentPoly ds = delta6j(p.b, n, n, p.d, n, n);
  LaurentPoly den = theta(p.a, n, n) * theta(p.b, n, n) * theta(p.c, n, n) * theta(p.d, n, n);
  if (dm.is_zero() || ds.is_zero()) return PolyFraction(LaurentPoly{}, std::move(den));
  const SignedMonomial f = framing_of(params, p);
  LaurentPoly num = theta(p.a, p.b, p.c) * dm * dm * ds;
  num *= circle(p.a) * circle(p.b) * circle(p.c) * circle(p.d);
  return PolyFraction(num.shifted(f.exponent, f.sign), std::move(den));
}

PolyFraction state_sum(const KnotParams& params, int n, std::span<const ColorTuple> points, int jobs) {
  for (const auto& p : points) {
    require_domain(p);
    if (p.n != n) fail(ErrorKind::InvalidArgument, "state-sum point with colour n != " + std::to_string(n));
  }
  const StateSumTables tables(params, n, points);

  // Every summand denominator divides lcm(theta_nn)^4, so one common
  // denominator carries the whole sum.
  LaurentPoly lcm = LaurentPoly::constant(1);
  for (const auto& th : tables.all_theta_nn()) lcm = lcm * exact_div(th, poly_gcd(lcm, th));
  const LaurentPoly lcm2 = lcm * lcm;
  const LaurentPoly common = lcm2 * lcm2;

  std::vector<LaurentPoly> numerators(points.size());
  detail::parallel_for(points.size(), jobs, [&](std::size_t i) { numerators[i] = tables.numerator(points[i]); });

  // Group by denominator; numerators of one group share the multiplier.
  std::map<DenKey, LaurentPoly> grouped;
  for (std::size_t i = 0; i < points.size(); ++i) grouped[den_key(points[i])] += numerators[i];

  std::vector<std::pair<DenKey, LaurentPoly>> groups(grouped.begin(), grouped.end());
  std::vector<LaurentPoly> scaled(groups.size());
  detail::parallel_for(groups.size(), jobs, [&](std::size_t i) {
    const auto& [key, num] = groups[i];
    if (num.is_zero()) return;
    LaurentPoly den = LaurentPoly::constant(1);
    for (int x : key) den *= tables.theta_nn(x);
    scaled[i] = num * exact_div(common, den);
  });

  LaurentPoly total;
  for (const auto& s : scaled) total += s;
  return frac_reduce(PolyFraction(std::move(total), common));
}

LaurentPoly colored_jones(const KnotParams& params, int N, int jobs) {
  if (N < 1) fail(ErrorKind::InvalidArgument, "colour N must be >= 1");
  const int n = N - 1;
  const auto points = domain_points(n);
  const LaurentPoly sum = frac_to_poly(state_sum(params, n, points, jobs));
  // (-1)^n f(n)^{-4u}
  SignedMonomial prefactor = framing_power(n, -4 * params.u);
  if (n % 2 != 0) prefactor.sign = -prefactor.sign;
  return sum.shifted(prefactor.exponent, prefactor.sign);
}

DegreeLead exact_dplus(const LaurentPoly& jones) { return {jones.max_deg(), jones.leading_coeff()}; }

DegreeLead exact_dplus(const KnotParams& params, int N, int jobs) {
  return exact_dplus(colored_jones(params, N, jobs));
}

}  // namespace jslope
