#include "jslope/edgepath.hpp"

#include "jslope/degopt.hpp"
#include "jslope/error.hpp"

namespace jslope {

Rational ProjCurveSystem::u() const {
  const Integer ab = a + b;
  if (ab == 0) fail(ErrorKind::InvalidArgument, "u undefined for a curve system with a + b = 0");
  return make_rational(b, ab);
}

Rational ProjCurveSystem::v() const {
  const Integer ab = a + b;
  if (ab == 0) fail(ErrorKind::InvalidArgument, "v undefined for a curve system with a + b = 0");
  return make_rational(c, ab);
}

std::string DiagramVertex::to_string() const {
  const std::string pq = slope.get_den() == 1 ? slope.get_num().get_str() : slope.get_str();
  switch (kind) {
    case VertexKind::Arc: return "<" + pq + ">";
    case VertexKind::Circle: return "<" + pq + ">o";
    case VertexKind::InfinityArc: return "<inf>";
  }
  return "?";
}

UV vertex_uv(const DiagramVertex& v) {
  switch (v.kind) {
    case VertexKind::Arc: {
      const Integer& q = v.slope.get_den();
      return {make_rational(q - 1, q), v.slope};
    }
    case VertexKind::Circle: return {1, v.slope};
    case VertexKind::InfinityArc: return {-1, 0};
  }
  return {};
}

ProjCurveSystem vertex_curve(const DiagramVertex& v) {
  const Integer& p = v.slope.get_num();
  const Integer& q = v.slope.get_den();
  switch (v.kind) {
    case VertexKind::Arc: return {1, q - 1, p};
    case VertexKind::Circle: return {0, q, p};
    case VertexKind::InfinityArc: break;
  }
  fail(ErrorKind::UnsupportedEdgepath, "the infinity vertex has no finite curve system");
}

namespace {

void require_arc(const DiagramVertex& v) {
  if (v.kind != VertexKind::Arc) fail(ErrorKind::UnsupportedEdgepath, "interpolation needs arc vertices, got " + v.to_string());
}

Integer det(const DiagramVertex& x, const DiagramVertex& y) {
  return x.slope.get_num() * y.slope.get_den() - x.slope.get_den() * y.slope.get_num();
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

DiagramEdge complete(const Rational& right, const Rational& left) {
  return {EdgeKind::NonHorizontal, DiagramVertex::arc(right), DiagramVertex::arc(left), 1};
}

DiagramEdge partial(const Rational& right, const Rational& left, const Rational& fraction) {
  if (fraction == 1) return complete(right, left);
  return {EdgeKind::Partial, DiagramVertex::arc(right), DiagramVertex::arc(left), fraction};
}

// <(w-i)/(s(w-i)+1)>, i = 0..w, the vertices of the middle tangle's chain.
Rational chain_vertex(const KnotParams& k, long i) {
  const long w = -k.u;
  return make_rational(w - i, k.s * (w - i) + 1);
}

std::array<Rational, 3> tangle_fractions(const KnotParams& k) {
  return {make_rational(1, k.r), chain_vertex(k, 0), make_rational(1, k.t)};
}

}  // namespace

InterpPoint interp_point(const DiagramVertex& from, const DiagramVertex& to, const Rational& k_over_m) {
  require_arc(from);
  require_arc(to);
  if (k_over_m < 0 || k_over_m > 1) fail(ErrorKind::InvalidArgument, "interpolation fraction outside [0, 1]");
  const Integer& k = k_over_m.get_num();
  const Integer& m = k_over_m.get_den();
  const ProjCurveSystem f = vertex_curve(from);
  const ProjCurveSystem t = vertex_curve(to);
  ProjCurveSystem sum{k * t.a + (m - k) * f.a, k * t.b + (m - k) * f.b, k * t.c + (m - k) * f.c};
  return {sum, {sum.u(), sum.v()}};
}

Rational partial_fraction_from_u(const DiagramVertex& from, const DiagramVertex& to, const Rational& u0) {
  require_arc(from);
  require_arc(to);
  const Rational uf = vertex_uv(from).u;
  const Rational ut = vertex_uv(to).u;
  if (u0 == uf) return 0;
  if (u0 == ut) return 1;
  if (u0 < std::min(uf, ut) || u0 > std::max(uf, ut)) {
    fail(ErrorKind::InvalidArgument, "u0 = " + format_rational(u0) + " is outside the edge " + from.to_string() +
                                         " - " + to.to_string());
  }
  // alpha * q_to + (1 - alpha) * q_from = 1 / (1 - u0)
  const Rational qf(from.slope.get_den());
  const Rational qt(to.slope.get_den());
  return (1 / (1 - u0) - qf) / (qt - qf);
}

UV DiagramEdge::start() const { return vertex_uv(right); }

UV DiagramEdge::end() const {
  switch (kind) {
    case EdgeKind::Partial: return interp_point(right, left, fraction).uv;
    case EdgeKind::Constant: return vertex_uv(right);
    default: return vertex_uv(left);
  }
}

EdgeMeasure edge_measure(const DiagramEdge& e) {
  switch (e.kind) {
    case EdgeKind::Constant: return {0, 0};
    case EdgeKind::Infinity: return {0, 1};
    case EdgeKind::Partial: return {sign_of(vertex_uv(e.left).v - vertex_uv(e.right).v), e.fraction};
    default: return {sign_of(vertex_uv(e.left).v - vertex_uv(e.right).v), 1};
  }
}

UV Edgepath::ending() const {
  if (edges.empty()) fail(ErrorKind::UnsupportedEdgepath, "empty edgepath");
  return edges.front().end();
}

Rational Edgepath::length() const {
  Rational total;
  for (const auto& e : edges) total += edge_measure(e).length;
  return total;
}

Rational twist(const EdgepathSystem& system) {
  Rational tau;
  for (const auto& path : system.paths)
    for (const auto& e : path.edges) {
      if (e.kind == EdgeKind::Constant) continue;
      const EdgeMeasure m = edge_measure(e);
      tau -= 2 * m.sigma * m.length;
    }
  return tau;
}

EdgepathSystem seifert_system(const KnotParams& k) {
  const KnotParams params = KnotParams::make(k.r, k.s, k.t, k.u);
  EdgepathSystem sys;
  sys.tangles = tangle_fractions(params);
  sys.paths[0].edges.push_back(complete(sys.tangles[0], 0));
  const long w = -params.u;
  for (long i = w - 1; i >= 0; --i) sys.paths[1].edges.push_back(complete(chain_vertex(params, i), chain_vertex(params, i + 1)));
  sys.paths[2].edges.push_back(complete(sys.tangles[2], 0));
  sys.u0 = 0;
  sys.ending = EndingKind::AtZeroVertex;
  return sys;
}

GammaParameters gamma_parameters(const KnotParams& k) {
  GammaParameters g;
  g.lambda = make_rational((k.t - 1) * (k.t - 1), k.s + k.t - 1) - k.r - k.t;
  g.k = to_int64(floor_of(g.lambda));
  if (g.lambda == g.k) --g.k;
  g.alpha = g.lambda - g.k;
  return g;
}

Rational u_zero(const KnotParams& k) { return make_rational((k.t - 1) * k.s, k.t * k.s + k.t - 1); }

EdgepathSystem gamma_system(const KnotParams& k) {
  const KnotParams params = KnotParams::make(k.r, k.s, k.t, k.u);
  if (!classify(params).quadratic_case()) {
    fail(ErrorKind::UnsupportedEdgepath, "no Gamma system for " + params.key() + " (Delta >= 0)");
  }
  const GammaParameters g = gamma_parameters(params);
  if (g.k < 0 || g.k > -params.r - 2) {
    fail(ErrorKind::ConstructionFault, "k = " + std::to_string(g.k) + " outside [0, " + std::to_string(-params.r - 2) + "]");
  }
  const long r = params.r, s = params.s, t = params.t;
  EdgepathSystem sys;
  sys.tangles = tangle_fractions(params);
  sys.u0 = u_zero(params);
  sys.ending = EndingKind::InteriorU;

  auto& g1 = sys.paths[0].edges;
  g1.push_back(partial(make_rational(1, r + g.k), make_rational(1, r + g.k + 1), g.alpha));
  for (long i = g.k - 1; i >= 0; --i) g1.push_back(complete(make_rational(1, r + i), make_rational(1, r + i + 1)));

  auto& g2 = sys.paths[1].edges;
  const long w = -params.u;
  g2.push_back(partial(chain_vertex(params, w - 1), 0, make_rational(s, s + t - 1)));
  for (long i = w - 2; i >= 0; --i) g2.push_back(complete(chain_vertex(params, i), chain_vertex(params, i + 1)));

  sys.paths[2].edges.push_back(partial(sys.tangles[2], 0, make_rational(t - 1, s + t - 1)));

  for (const auto& path : sys.paths) {
    const DiagramEdge& last = path.edges.front();
    if (partial_fraction_from_u(last.right, last.left, sys.u0) != last.fraction) {
      fail(ErrorKind::ConstructionFault, "partial edge " + last.right.to_string() + " -> " + last.left.to_string() +
                                             " does not end at u0");
    }
  }
  return sys;
}

bool line_check(const KnotParams& k) {
  const Rational u0 = u_zero(k);
  const long r = k.r, s = k.s, t = k.t;
  const Rational v1 = u0 - 1;
  const Rational v2 = u0 / s;
  const Rational v3 = u0 / (t - 1);
  if (v1 + v2 + v3 != 0) return false;
  const Rational den(s * t + t - 1);
  const Rational u_t = make_rational(t - 1, t);
  const Rational u_s1 = make_rational(s, s + 1);
  const Rational u_r = 1 + make_rational(1, r);
  const Rational delta = classify(k).Delta;
  const bool identities = u0 - u_t == -Rational((t - 1) * (t - 1)) / (t * den) &&
                          u0 - u_s1 == -Rational(s * s) / ((s + 1) * den) && u0 - u_r == -delta / (r * den);
  return identities && u0 < u_t && u0 < u_s1 && u0 < u_r;
}

AdmissibilityReport check_admissible(const EdgepathSystem& sys) {
  AdmissibilityReport rep;
  rep.E1 = rep.E2 = rep.E4 = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& edges = sys.paths[i].edges;
    if (edges.empty()) {
      rep.E1 = rep.E2 = rep.E4 = false;
      continue;
    }
    if (!(edges.back().right == DiagramVertex::arc(sys.tangles[i]))) rep.E1 = false;

    for (std::size_t j = 0; j < edges.size(); ++j) {
      const DiagramEdge& e = edges[j];
      if (e.kind == EdgeKind::NonHorizontal || e.kind == EdgeKind::Partial) {
        if (e.right.kind != VertexKind::Arc || e.left.kind != VertexKind::Arc || abs(det(e.right, e.left)) != 1) {
          rep.E2 = false;
        }
      }
      if (e.kind == EdgeKind::Partial && (j != 0 || e.fraction <= 0 || e.fraction > 1)) rep.E2 = false;
      if (e.kind != EdgeKind::Constant && edge_measure(e).length <= 0) rep.E2 = false;
      if (j + 1 < edges.size()) {
        const DiagramEdge& prev = edges[j + 1];  // traversed just before e
        if (!(prev.left == e.right)) rep.E2 = false;
        if (prev.right == e.left) rep.E2 = false;
        if (prev.right.kind == VertexKind::Arc && e.left.kind == VertexKind::Arc && abs(det(prev.right, e.left)) == 1) {
          rep.E2 = false;
        }
      }
      const Rational du = e.start().u - e.end().u;
      const bool strict = e.kind != EdgeKind::Vertical && e.kind != EdgeKind::Constant;
      if (du < 0 || (strict && du == 0)) rep.E4 = false;
    }
  }

  rep.E3 = true;
  Rational vsum;
  int final_sigma = 0;
  rep.same_direction = sys.u0 > 0;
  for (const auto& path : sys.paths) {
    if (path.edges.empty()) {
      rep.E3 = rep.same_direction = false;
      continue;
    }
    const UV end = path.ending();
    if (end.u != sys.u0) rep.E3 = false;
    vsum += end.v;
    const int sigma = edge_measure(path.edges.front()).sigma;
    if (sigma == 0 || (final_sigma != 0 && sigma != final_sigma)) rep.same_direction = false;
    final_sigma = sigma;
  }
  if (vsum != 0) rep.E3 = false;
  return rep;
}

Rational euler_ratio(const EdgepathSystem& sys) {
  Rational total;
  int n_const = 0;
  Rational inv_q_const;
  for (const auto& path : sys.paths) {
    if (path.edges.size() == 1 && path.edges.front().kind == EdgeKind::Constant) {
      ++n_const;
      inv_q_const += Rational(1) / Rational(path.edges.front().right.slope.get_den());
      continue;
    }
    total += path.length();
  }
  const int n = static_cast<int>(sys.paths.size());
  switch (sys.ending) {
    case EndingKind::AtZeroVertex:
      if (sys.u0 != 0 || n_const != 0) fail(ErrorKind::UnsupportedEdgepath, "zero-vertex ending with u0 != 0 or constants");
      return 2 - total;
    case EndingKind::InteriorU: {
      if (sys.u0 <= 0 || sys.u0 >= 1) fail(ErrorKind::UnsupportedEdgepath, "interior ending needs 0 < u0 < 1");
      const Rational minus = total + n_const - n + (n - 2 - inv_q_const) / (1 - sys.u0);
      return -minus;
    }
  }
  fail(ErrorKind::UnsupportedEdgepath, "unknown ending kind");
}

Rational boundary_slope(const KnotParams& k) {
  if (!classify(k).quadratic_case()) return 0;
  return twist(gamma_system(k)) - twist(seifert_system(k));
}

EdgepathReport edgepath_report(const KnotParams& params) {
  EdgepathReport rep;
  const EdgepathSystem seifert = seifert_system(params);
  rep.twist_seifert = twist(seifert);
  rep.euler_ratio_seifert = euler_ratio(seifert);
  rep.seifert_admissibility = check_admissible(seifert);
  rep.slope = 0;
  if (classify(params).quadratic_case()) {
    const EdgepathSystem gamma = gamma_system(params);
    rep.u0 = gamma.u0;
    rep.k = gamma_parameters(params).k;
    for (const auto& p : gamma.paths) rep.gamma_lengths.push_back(p.length());
    rep.twist_gamma = twist(gamma);
    rep.slope = *rep.twist_gamma - rep.twist_seifert;
    rep.euler_ratio_gamma = euler_ratio(gamma);
    rep.gamma_admissibility = check_admissible(gamma);
    for (const auto& p : gamma.paths) {
      const DiagramEdge& last = p.edges.front();
      if (partial_fraction_from_u(last.right, last.left, gamma.u0) != last.fraction) rep.partial_fractions_match = false;
    }
    rep.lines_ok = line_check(params);
  }
  return rep;
}

}  // namespace jslope
