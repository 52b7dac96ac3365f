#include "jslope/degopt.hpp"

#include <algorithm>
#include <map>

#include "jslope/error.hpp"
#include "jslope/ktg.hpp"
#include "parallel.hpp"

namespace jslope {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2_1: return "Case2_1";
    case CaseTag::Case2_2: return "Case2_2";
    case CaseTag::Case2_3: return "Case2_3";
    case CaseTag::Case2_4: return "Case2_4";
  }
  return "?";
}

Classification classify(const KnotParams& k) {
  Classification c;
  c.A = make_rational(-(k.r + k.s + 1), 2);
  c.B = make_rational(-(k.r + 1));
  c.C = make_rational(-(k.r + k.t), 2);
  c.Delta = 4 * c.A * c.C - c.B * c.B;
  if (c.A >= 0 || c.C >= 0) {
    c.tag = CaseTag::Case1;
  } else if (c.Delta < 0) {
    c.tag = CaseTag::Case2_1;
  } else if (c.Delta > 0) {
    c.tag = CaseTag::Case2_2;
  } else {
    const long e1 = k.r + k.s - 1;
    const long e2 = k.r + k.t - 2;
    c.tag = (e1 * e1 + e2 * e2 != 0) ? CaseTag::Case2_3 : CaseTag::Case2_4;
  }
  return c;
}

namespace {

// 2 * Phi; every building block is a half-integer, so doubling keeps the
// arithmetic exact in 64 bits.
std::int64_t twice_phi(const KnotParams& k, const ColorTuple& p) {
  if (!in_domain(p)) fail(ErrorKind::InadmissibleColoring, "Phi evaluated outside D_n");
  const int n = p.n;
  const auto twice_f = [](std::int64_t a) { return -a * (a + 2); };  // 2 d+ f(a)
  std::int64_t v = 0;
  v += 2 * dplus_theta(p.a, p.b, p.c);
  v += 4 * dplus_delta6j(p.a, p.b, p.c, n, n, n).value;
  v += 2 * dplus_delta6j(p.b, n, n, p.d, n, n).value;
  v += k.r * twice_f(p.a) + k.s * twice_f(p.b) + k.t * twice_f(p.c) + k.u * twice_f(p.d);
  v += 4 * (static_cast<std::int64_t>(p.a) + p.b + p.c + p.d);  // 2 d+ O^x = 4x
  for (int x : {p.a, p.b, p.c, p.d}) v -= 2 * dplus_theta(x, n, n);
  v -= 4 * k.u * twice_f(n);
  return v;
}

std::int64_t integral(const Rational& q, const char* what) {
  if (!is_integral(q)) fail(ErrorKind::ConstructionFault, std::string(what) + " is not an integer: " + format_rational(q));
  return to_int64(q.get_num());
}

// Even integers nearest to x within [lo, hi] (both neighbours, clamped).
std::vector<std::int64_t> even_candidates(const Rational& x, std::int64_t lo, std::int64_t hi) {
  const std::int64_t f = to_int64(floor_of(x / 2)) * 2;
  std::vector<std::int64_t> out;
  for (std::int64_t b : {f, f + 2}) out.push_back(std::clamp(b, lo, hi));
  return out;
}

}  // namespace

Rational phi_exact(const KnotParams& params, const ColorTuple& p) {
  return make_rational(twice_phi(params, p), 2);
}

std::int64_t phi(const KnotParams& params, const ColorTuple& p) {
  const std::int64_t v = twice_phi(params, p);
  if (v % 2 != 0) fail(ErrorKind::ConstructionFault, "Phi is a half-integer");
  return v / 2;
}

Rational restricted_R(const KnotParams& k, int n, const Rational& b, const Rational& c) {
  return -Rational(k.r + k.s + 1) / 2 * b * b - (k.r + k.s - 1) * b - (k.r + 1) * b * c -
         Rational(k.r + k.t) / 2 * c * c - (k.r + k.t - 2) * c + 2 * k.u * n;
}

Rational restricted_Q(const KnotParams& k, int n, const Rational& b) {
  const Rational N(n);
  return -Rational(k.s + k.t - 1) / 2 * b * b + (2 * (k.t - 1) * N - k.s + k.t - 1) * b -
         2 * (k.r + k.t) * N * N - 2 * (k.r - k.u + k.t - 2) * N;
}

DegreeProfile degree_profile(const KnotParams& k, int n) {
  DegreeProfile d;
  d.b_m = make_rational(2 * (k.t - 1) * n - k.s + k.t - 1, k.s + k.t - 1);
  // nearest even, ties to the smaller: 2 * ceil(b_m/2 - 1/2)
  const Rational half_b = d.b_m / 2 - Rational(1, 2);
  Integer up = -floor_of(-half_b);
  d.b0 = 2 * to_int64(up);
  const Classification c = classify(k);
  if (c.Delta != 0) {
    const long r = k.r, s = k.s, t = k.t;
    d.b_p = Rational((r + 1) * (r + t - 2) - (r + t) * (r + s - 1)) / c.Delta;
    d.c_p = Rational((r + 1) * (r + s - 1) - (r + s + 1) * (r + t - 2)) / c.Delta;
  }
  return d;
}

PhiMaximum brute_max_phi(const KnotParams& params, int n, int jobs) {
  const auto points = domain_points(n);
  std::vector<std::int64_t> values(points.size());
  detail::parallel_for(points.size(), jobs, [&](std::size_t i) { values[i] = phi(params, points[i]); });
  PhiMaximum best;
  best.value = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (values[i] == best.value) best.argmax.push_back(points[i]);
  return best;
}

std::int64_t fast_max_phi(const KnotParams& k, int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative colour n");
  const Classification cls = classify(k);
  const std::int64_t two_n = 2 * static_cast<std::int64_t>(n);
  switch (cls.tag) {
    case CaseTag::Case1: {
      // Maximum on a = b + c = 2n - ... restricted to the segment b + c = 2n.
      const Rational b_m = degree_profile(k, n).b_m;
      Rational best;
      bool first = true;
      for (auto b : even_candidates(b_m, 0, two_n)) {
        const Rational q = restricted_Q(k, n, Rational(b));
        if (first || q > best) best = q;
        first = false;
      }
      return integral(best, "Q(b0)");
    }
    case CaseTag::Case2_1: {
      // R is concave in b for fixed c (A < 0); scan c, take the nearest evens
      // to the axis in b.
      Rational best;
      bool first = true;
      for (std::int64_t c = 0; c <= two_n; c += 2) {
        const Rational axis = Rational(-(k.r + k.s - 1) - (k.r + 1) * c) / (k.r + k.s + 1);
        for (auto b : even_candidates(axis, 0, two_n - c)) {
          const Rational val = restricted_R(k, n, Rational(b), Rational(c));
          if (first || val > best) best = val;
          first = false;
        }
      }
      return integral(best, "max R");
    }
    case CaseTag::Case2_2:
    case CaseTag::Case2_3:
    case CaseTag::Case2_4:
      return 2 * k.u * n;
  }
  return 0;
}

int degree_period(const KnotParams& k) {
  return classify(k).quadratic_case() ? static_cast<int>((k.s + k.t - 1) / 2) : 1;
}

Rational closed_form_slope(const KnotParams& k) {
  if (!classify(k).quadratic_case()) return 0;
  return make_rational(2 * (k.t - 1) * (k.t - 1), k.s + k.t - 1) - 2 * (k.r + k.t);
}

Rational closed_form_linear(const KnotParams& k) {
  if (!classify(k).quadratic_case()) return 2 * k.u;
  return 2 * (k.r + k.u + 3);
}

namespace {

Rational c_of_v(const KnotParams& k, std::int64_t v, const Rational& x) {
  const Rational beta = Rational(v - 1) - x;
  return -Rational(k.s + k.t - 1) / 2 * beta * beta - (k.s + k.t - 1) * beta - 2 * (k.u + 2);
}

}  // namespace

ResidueData residue_data(const KnotParams& k, int j) {
  const int p = static_cast<int>((k.s + k.t - 1) / 2);
  if (j < 0 || j >= p) fail(ErrorKind::InvalidArgument, "residue out of range");
  const Rational x = make_rational(2 * (k.t - 1) * j, k.s + k.t - 1);
  std::int64_t lower = to_int64(floor_of(x));
  if (lower % 2 == 0) lower -= 1;  // largest odd <= x
  const std::int64_t upper = lower + 2;
  const Rational dl = x - lower;
  const Rational du = upper - x;
  ResidueData r;
  r.j = j;
  r.tie = (dl == du);
  r.v_j = (du < dl) ? upper : lower;
  r.beta_j = Rational(r.v_j - 1) - x;
  r.c_j = c_of_v(k, r.v_j, x);
  if (r.tie && c_of_v(k, upper, x) != r.c_j) {
    fail(ErrorKind::ConstructionFault, "tied odd neighbours give different c_j");
  }
  return r;
}

std::vector<ResidueData> residue_table(const KnotParams& k) {
  std::vector<ResidueData> out;
  if (!classify(k).quadratic_case()) return out;
  const int p = static_cast<int>((k.s + k.t - 1) / 2);
  for (int j = 0; j < p; ++j) out.push_back(residue_data(k, j));
  return out;
}

std::int64_t closed_form_dplus(const KnotParams& k, int N, std::optional<int> threshold) {
  if (N < 1) fail(ErrorKind::InvalidArgument, "N must be >= 1");
  if (threshold && N < *threshold) {
    fail(ErrorKind::BelowThreshold, "N=" + std::to_string(N) + " is below the threshold " + std::to_string(*threshold));
  }
  if (!classify(k).quadratic_case()) return 2 * k.u * (N - 1);
  const int p = degree_period(k);
  const ResidueData res = residue_data(k, N % p);
  const Rational NN(N);
  return integral(closed_form_slope(k) * NN * NN + closed_form_linear(k) * NN + res.c_j, "closed form");
}

Rational QuasiPolynomial::evaluate(int N) const {
  const auto& r = residues.at(static_cast<std::size_t>(N % period));
  const Rational x(N);
  return r.a * x * x + r.two_b * x + r.c;
}

QuasiPolynomial fit_quasi(std::span<const DegreeSample> samples, int period, FitOptions options) {
  if (period < 1) fail(ErrorKind::InvalidArgument, "period must be positive");
  std::map<int, std::vector<DegreeSample>> classes;
  std::map<int, int> seen;
  for (const auto& s : samples) {
    if (s.N < 0) fail(ErrorKind::InvalidArgument, "negative sample index");
    if (seen[s.N]++) fail(ErrorKind::InvalidArgument, "duplicate sample N=" + std::to_string(s.N));
    classes[s.N % period].push_back(s);
  }
  const int needed = std::max(3, options.min_exact);
  QuasiPolynomial q;
  q.period = period;
  int last_mismatch = -1;
  int first_sample = samples.empty() ? 0 : samples.front().N;
  for (const auto& s : samples) first_sample = std::min(first_sample, s.N);
  for (int j = 0; j < period; ++j) {
    auto& cls = classes[j];
    if (static_cast<int>(cls.size()) < needed) {
      fail(ErrorKind::InsufficientSamples, "residue class " + std::to_string(j) + " has " +
                                               std::to_string(cls.size()) + " samples, need " + std::to_string(needed));
    }
    std::sort(cls.begin(), cls.end(), [](const auto& x, const auto& y) { return x.N < y.N; });
    const auto& s1 = cls[cls.size() - 3];
    const auto& s2 = cls[cls.size() - 2];
    const auto& s3 = cls[cls.size() - 1];
    const Rational x1(s1.N), x2(s2.N), x3(s3.N);
    const Rational d1 = Rational(s2.degree - s1.degree) / (x2 - x1);
    const Rational d2 = Rational(s3.degree - s2.degree) / (x3 - x2);
    QuasiPolynomial::Residue r;
    r.j = j;
    r.a = (d2 - d1) / (x3 - x1);
    r.two_b = d1 - r.a * (x1 + x2);
    r.c = Rational(s1.degree) - r.a * x1 * x1 - r.two_b * x1;
    int run = 0;
    r.first_exact = s3.N;
    for (auto it = cls.rbegin(); it != cls.rend(); ++it) {
      const Rational x(it->N);
      if (r.a * x * x + r.two_b * x + r.c != it->degree) {
        last_mismatch = std::max(last_mismatch, it->N);
        break;
      }
      ++run;
      r.first_exact = it->N;
    }
    if (run < needed) {
      fail(ErrorKind::NoQuadraticFit, "residue class " + std::to_string(j) + " agrees on only " +
                                          std::to_string(run) + " trailing samples");
    }
    q.residues.push_back(r);
  }
  q.N0 = last_mismatch >= 0 ? last_mismatch + 1 : first_sample;
  return q;
}

int least_period(const QuasiPolynomial& q) {
  for (int p = 1; p <= q.period; ++p) {
    if (q.period % p != 0) continue;
    bool same = true;
    for (const auto& r : q.residues) {
      const auto& base = q.residues[static_cast<std::size_t>(r.j % p)];
      if (r.a != base.a || r.two_b != base.two_b || r.c != base.c) {
        same = false;
        break;
      }
    }
    if (same) return p;
  }
  return q.period;
}

}  // namespace jslope
