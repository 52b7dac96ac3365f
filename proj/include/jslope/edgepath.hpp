#pragma once

// Hatcher–Oertel uv-diagram model for the three-tangle Montesinos knots
// M(1/r, 1/(s - 1/u), 1/t): Seifert and Gamma edgepath systems, twists,
// boundary slopes and Euler-characteristic ratios.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jslope/jones.hpp"
#include "jslope/rational.hpp"

namespace jslope {

// Projective class [a, b, c] of a curve system; c carries the sign of the
// slope numerator.
struct ProjCurveSystem {
  Integer a;
  Integer b;
  Integer c;

  Rational u() const;  // b / (a + b)
  Rational v() const;  // c / (a + b)
};

struct UV {
  Rational u;
  Rational v;
  friend bool operator==(const UV&, const UV&) = default;
};

enum class VertexKind { Arc, Circle, InfinityArc };

struct DiagramVertex {
  VertexKind kind = VertexKind::Arc;
  Rational slope;  // p/q in lowest terms, q > 0; unused for InfinityArc

  static DiagramVertex arc(const Rational& pq) { return {VertexKind::Arc, pq}; }
  static DiagramVertex circle(const Rational& pq) { return {VertexKind::Circle, pq}; }
  static DiagramVertex infinity() { return {VertexKind::InfinityArc, 0}; }

  std::string to_string() const;
  friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

UV vertex_uv(const DiagramVertex& v);
// Curve system of an Arc or Circle vertex.
ProjCurveSystem vertex_curve(const DiagramVertex& v);

struct InterpPoint {
  ProjCurveSystem curve;
  UV uv;
};

// k/m <to> + (m-k)/m <from> for two Arc vertices.
InterpPoint interp_point(const DiagramVertex& from, const DiagramVertex& to, const Rational& k_over_m);

// The coefficient on `to` at which the interpolated point has u = u0.
Rational partial_fraction_from_u(const DiagramVertex& from, const DiagramVertex& to, const Rational& u0);

enum class EdgeKind { NonHorizontal, Horizontal, Vertical, Infinity, Constant, Partial };

// An edge traversed from `right` towards `left`. For a Partial edge only the
// portion with coefficient `fraction` on `left` is travelled.
struct DiagramEdge {
  EdgeKind kind = EdgeKind::NonHorizontal;
  DiagramVertex right;
  DiagramVertex left;
  Rational fraction = 1;

  UV start() const;
  UV end() const;
};

struct EdgeMeasure {
  int sigma = 0;
  Rational length;
};

EdgeMeasure edge_measure(const DiagramEdge& e);

// Edges in listing order: front() is the last edge traversed, back() the first.
struct Edgepath {
  std::vector<DiagramEdge> edges;

  UV ending() const;
  Rational length() const;
};

enum class EndingKind { AtZeroVertex, InteriorU };

struct EdgepathSystem {
  std::array<Edgepath, 3> paths;
  std::array<Rational, 3> tangles;  // 1/r, u/(su - 1), 1/t
  Rational u0;
  EndingKind ending = EndingKind::AtZeroVertex;
};

Rational twist(const EdgepathSystem& system);

EdgepathSystem seifert_system(const KnotParams& params);

struct GammaParameters {
  Rational lambda;     // (t-1)^2/(s+t-1) - r - t
  std::int64_t k = 0;  // number of complete edges in gamma_1
  Rational alpha;      // length of the last gamma_1 edge, in (0, 1]
};

GammaParameters gamma_parameters(const KnotParams& params);
// Requires the quadratic case; throws UnsupportedEdgepath otherwise and
// ConstructionFault if k leaves [0, -r-2].
EdgepathSystem gamma_system(const KnotParams& params);

Rational u_zero(const KnotParams& params);
bool line_check(const KnotParams& params);

struct AdmissibilityReport {
  bool E1 = false;
  bool E2 = false;
  bool E3 = false;
  bool E4 = false;
  bool same_direction = false;  // u0 > 0 and all final edges change v in one direction

  bool admissible() const noexcept { return E1 && E2 && E3 && E4; }
};

AdmissibilityReport check_admissible(const EdgepathSystem& system);

// chi(S) / #S.
Rational euler_ratio(const EdgepathSystem& system);

Rational boundary_slope(const KnotParams& params);

// Everything the slope report needs, computed once.
struct EdgepathReport {
  std::optional<Rational> u0;
  std::optional<std::int64_t> k;
  std::vector<Rational> gamma_lengths;
  Rational twist_seifert;
  std::optional<Rational> twist_gamma;
  Rational slope;
  Rational euler_ratio_seifert;
  std::optional<Rational> euler_ratio_gamma;
  AdmissibilityReport seifert_admissibility;
  std::optional<AdmissibilityReport> gamma_admissibility;
  bool partial_fractions_match = true;
  bool lines_ok = true;
};

EdgepathReport edgepath_report(const KnotParams& params);

}  // namespace jslope
