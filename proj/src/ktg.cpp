#include "jslope/ktg.hpp"

#include <algorithm>
#include <string>

#include "jslope/error.hpp"

namespace jslope {

namespace {

std::string colours(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

// (x) / 2 for even x, otherwise an inadmissible colouring.
int half(int x, const char* what) {
  if (x % 2 != 0) fail(ErrorKind::InadmissibleColoring, std::string(what) + " has odd colour sum");
  return x / 2;
}

}  // namespace

bool AdmissibleTriple::admissible(int x, int y, int z) noexcept {
  if (x < 0 || y < 0 || z < 0) return false;
  if ((x + y + z) % 2 != 0) return false;
  return x <= y + z && y <= x + z && z <= x + y;
}

AdmissibleTriple AdmissibleTriple::make(int x, int y, int z) {
  if (!admissible(x, y, z)) fail(ErrorKind::InadmissibleColoring, "triple " + colours({x, y, z}));
  return {x, y, z};
}

LaurentPoly circle(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative unknot colour");
  return k % 2 == 0 ? qint(k + 1) : -qint(k + 1);
}

LaurentPoly theta(int a, int b, int c) {
  AdmissibleTriple::make(a, b, c);
  const int total = (a + b + c) / 2;
  return circle(total) * qmultinom({(-a + b + c) / 2, (a - b + c) / 2, (a + b - c) / 2});
}

SignedMonomial framing_power(int a, std::int64_t w) {
  if (a < 0) fail(ErrorKind::InvalidArgument, "negative framing colour");
  const std::int64_t aw = static_cast<std::int64_t>(a) * w;
  // i^{-aw} is real iff aw is even, and then equals (-1)^{aw/2}.
  if (aw % 2 != 0) fail(ErrorKind::NonRealPhase, "f(" + std::to_string(a) + ")^" + std::to_string(w));
  const std::int64_t twice_exp = -w * a * (a + 2);
  if (twice_exp % 2 != 0) {
    fail(ErrorKind::FractionalExponent, "f(" + std::to_string(a) + ")^" + std::to_string(w));
  }
  const int sign = ((aw / 2) % 2 == 0) ? 1 : -1;
  return {sign, twice_exp / 2};
}

namespace {

struct DeltaShape {
  int top;                  // (a+b+c)/2 + 1, lower index of [z+1 choose top]
  std::array<int, 3> n;     // (-a+b+c)/2, (a-b+c)/2, (a+b-c)/2
  std::array<int, 3> off;   // (a+beta+gamma)/2, (alpha+b+gamma)/2, (alpha+beta+c)/2
  int sign_half;            // (a+b+c)/2
};

DeltaShape delta_shape(int a, int b, int c, int alpha, int beta, int gamma) {
  if (std::min({a, b, c, alpha, beta, gamma}) < 0) {
    fail(ErrorKind::InadmissibleColoring, "negative colour in 6j " + colours({a, b, c, alpha, beta, gamma}));
  }
  const char* what = "6j symbol";
  DeltaShape s;
  s.sign_half = half(a + b + c, what);
  s.top = s.sign_half + 1;
  s.n = {half(-a + b + c, what), half(a - b + c, what), half(a + b - c, what)};
  s.off = {half(a + beta + gamma, what), half(alpha + b + gamma, what), half(alpha + beta + c, what)};
  if (std::min({s.n[0], s.n[1], s.n[2]}) < 0) {
    fail(ErrorKind::InadmissibleColoring, "(a,b,c) of 6j " + colours({a, b, c, alpha, beta, gamma}));
  }
  return s;
}

}  // namespace

ZRange delta6j_z_range(int a, int b, int c, int alpha, int beta, int gamma) {
  const DeltaShape s = delta_shape(a, b, c, alpha, beta, gamma);
  // [z+1 choose top] needs z + 1 >= top; [n_i choose z - off_i] needs off_i <= z <= off_i + n_i.
  ZRange r{s.top - 1, s.off[0] + s.n[0]};
  for (int i = 0; i < 3; ++i) {
    r.lo = std::max<std::int64_t>(r.lo, s.off[i]);
    r.hi = std::min<std::int64_t>(r.hi, s.off[i] + s.n[i]);
  }
  return r;
}

LaurentPoly delta6j(int a, int b, int c, int alpha, int beta, int gamma) {
  const DeltaShape s = delta_shape(a, b, c, alpha, beta, gamma);
  const ZRange range = delta6j_z_range(a, b, c, alpha, beta, gamma);
  LaurentPoly sum;
  for (auto z = range.lo; z <= range.hi; ++z) {
    const int zi = static_cast<int>(z);
    LaurentPoly term = qbinom(zi + 1, s.top);
    for (int i = 0; i < 3; ++i) term *= qbinom(s.n[i], zi - s.off[i]);
    // (-1)^z / (-1)^{(a+b+c)/2}
    sum += ((zi + s.sign_half) % 2 == 0) ? term : -term;
  }
  return sum;
}

std::int64_t dplus_theta(int a, int b, int c) {
  AdmissibleTriple::make(a, b, c);
  const std::int64_t A = a, B = b, C = c;
  const std::int64_t sum = A + B + C;
  return A * (1 - A) + B * (1 - B) + C * (1 - C) + sum * sum / 2;
}

DeltaDegree dplus_delta6j(int a, int b, int c, int alpha, int beta, int gamma) {
  const DeltaShape s = delta_shape(a, b, c, alpha, beta, gamma);
  const std::int64_t twice_m =
      static_cast<std::int64_t>(a) + b + c + alpha + beta + gamma - std::max({a + alpha, b + beta, c + gamma});
  if (twice_m % 2 != 0) fail(ErrorKind::InadmissibleColoring, "odd 2m in 6j degree");
  DeltaDegree d;
  d.data.m = twice_m / 2;
  d.data.z_range = delta6j_z_range(a, b, c, alpha, beta, gamma);
  const auto m = d.data.m;
  d.data.g_terms = {g_degree(m + 1, s.top), g_degree(s.n[0], m - s.off[0]), g_degree(s.n[1], m - s.off[1]),
                    g_degree(s.n[2], m - s.off[2])};
  for (auto g : d.data.g_terms) d.value += g;
  return d;
}

Rational dplus_atom(AtomKind kind, int arg) {
  if (arg < 0) fail(ErrorKind::InvalidArgument, "negative colour");
  switch (kind) {
    case AtomKind::Framing: return make_rational(-static_cast<std::int64_t>(arg) * (arg + 2), 2);
    case AtomKind::Circle: return make_rational(2 * static_cast<std::int64_t>(arg));
  }
  return 0;
}

}  // namespace jslope
