#include "report_json.hpp"

#include <sstream>

namespace jslope::detail {

using nlohmann::json;

namespace {

json rat(const Rational& q) { return format_rational(q); }

template <class T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return rat(*v);
  } else {
    return *v;
  }
}

json admissibility_json(const AdmissibilityReport& a) {
  return {{"E1", a.E1}, {"E2", a.E2}, {"E3", a.E3}, {"E4", a.E4}, {"same_direction", a.same_direction}};
}

json prediction_json(const Prediction& p) {
  json residues = json::array();
  for (const auto& r : p.residues) {
    residues.push_back({{"j", r.j}, {"v", r.v_j}, {"beta", rat(r.beta_j)}, {"c", rat(r.c_j)}, {"tie", r.tie}});
  }
  return {{"case", std::string(to_string(p.tag))},
          {"slope", rat(p.slope)},
          {"linear", rat(p.linear)},
          {"period", p.period},
          {"residues", residues},
          {"edgepath_slope", rat(p.edgepath_slope)},
          {"euler_ratio", rat(p.euler_ratio)},
          {"slope_match", p.slope_match},
          {"euler_match", p.euler_match}};
}

json fit_json(const Report& r) {
  if (!r.fit) return {{"error", r.fit_error}};
  json residues = json::array();
  for (const auto& q : r.fit->residues) {
    residues.push_back({{"j", q.j}, {"a", rat(q.a)}, {"two_b", rat(q.two_b)}, {"c", rat(q.c)}, {"first_exact", q.first_exact}});
  }
  return {{"period", r.fit->period}, {"least_period", r.least_period}, {"N0", r.fit->N0}, {"residues", residues}};
}

std::string csv_rat(const std::optional<Rational>& q) { return q ? format_rational(*q) : ""; }
const char* csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

json params_json(const KnotParams& k) { return {{"r", k.r}, {"s", k.s}, {"t", k.t}, {"u", k.u}}; }

json edgepath_json(const KnotParams& params, const EdgepathReport& rep) {
  json lengths = json::array();
  for (const auto& l : rep.gamma_lengths) lengths.push_back(rat(l));
  const AdmissibilityReport& main = rep.gamma_admissibility ? *rep.gamma_admissibility : rep.seifert_admissibility;
  return {{"params", params_json(params)},
          {"case", std::string(to_string(classify(params).tag))},
          {"u0", opt(rep.u0)},
          {"k", opt(rep.k)},
          {"gamma_lengths", lengths},
          {"twists", {{"seifert", rat(rep.twist_seifert)}, {"gamma", opt(rep.twist_gamma)}}},
          {"slope", rat(rep.slope)},
          {"euler_ratio_seifert", rat(rep.euler_ratio_seifert)},
          {"euler_ratio_gamma", opt(rep.euler_ratio_gamma)},
          {"admissibility", admissibility_json(main)},
          {"seifert_admissibility", admissibility_json(rep.seifert_admissibility)},
          {"partial_fractions_match", rep.partial_fractions_match},
          {"line_check", rep.lines_ok}};
}

json report_json(const Report& r) {
  json exact = json::array();
  for (const auto& e : r.exact) exact.push_back({{"N", e.N}, {"degree", e.degree}, {"leading_coeff", e.leading.get_str()}});
  json phi = json::array();
  for (const auto& p : r.phi) phi.push_back({{"N", p.N}, {"brute", p.brute}, {"fast", p.fast}, {"closed", p.closed}});
  const Flags& f = r.flags;
  json out = {{"params", params_json(r.params)},
              {"n_max", r.n_max},
              {"n_ext", r.n_ext},
              {"exact", exact},
              {"phi_max", phi},
              {"fit", fit_json(r)},
              {"closed_form_from", r.closed_form_from},
              {"prediction", prediction_json(r.prediction)},
              {"edgepath", edgepath_json(r.params, r.edgepath)},
              {"flags",
               {{"no_cancellation", f.no_cancellation},
                {"oracles_agree", f.oracles_agree},
                {"closed_form_match", f.closed_form_match},
                {"slope_match", f.slope_match},
                {"euler_match", f.euler_match},
                {"prediction_match", f.prediction_match}}},
              {"verified", r.verified()}};
  if (r.seconds) out["seconds"] = *r.seconds;
  return out;
}

std::string grid_json(const GridSpec& grid, const VerifyOptions& options, const GridSummary& s,
                      const std::vector<ReportEntry>& entries) {
  json reports = json::array();
  for (const auto& e : entries) {
    if (e.report) {
      reports.push_back(report_json(*e.report));
    } else {
      reports.push_back({{"params", params_json(e.params)}, {"error", {{"kind", e.error_kind}, {"message", e.error}}}});
    }
  }
  json out = {{"grid", grid.text},
              {"n_max", options.n_max},
              {"summary",
               {{"tuples", s.tuples},
                {"verified", s.verified},
                {"mismatched", s.mismatched},
                {"faults", s.faults},
                {"skipped", s.skipped}}},
              {"reports", reports}};
  return out.dump(2) + "\n";
}

std::string grid_csv(const std::vector<ReportEntry>& entries) {
  std::ostringstream os;
  os << "r,s,t,u,case,slope,two_b,period,N0,closed_form_from,no_cancellation,oracles_agree,closed_form_match,"
        "slope_match,euler_match,verified,error\n";
  for (const auto& e : entries) {
    const KnotParams& k = e.params;
    os << k.r << ',' << k.s << ',' << k.t << ',' << k.u << ',' << to_string(classify(k).tag) << ',';
    if (!e.report) {
      os << ",,,,,,,,,,false," << e.error_kind << '\n';
      continue;
    }
    const Report& r = *e.report;
    const Flags& f = r.flags;
    os << csv_rat(r.prediction.slope) << ',' << csv_rat(r.prediction.linear) << ',' << r.prediction.period << ','
       << (r.fit ? std::to_string(r.fit->N0) : "") << ',' << r.closed_form_from << ',' << csv_bool(f.no_cancellation)
       << ',' << csv_bool(f.oracles_agree) << ',' << csv_bool(f.closed_form_match) << ',' << csv_bool(f.slope_match)
       << ',' << csv_bool(f.euler_match) << ',' << csv_bool(r.verified()) << ",\n";
  }
  return os.str();
}

}  // namespace jslope::detail

namespace jslope {

std::string report_to_json(const Report& report) { return detail::report_json(report).dump(2) + "\n"; }

std::string edgepath_report_json(const KnotParams& params) {
  const KnotParams k = KnotParams::make(params.r, params.s, params.t, params.u);
  return detail::edgepath_json(k, edgepath_report(k)).dump(2) + "\n";
}

}  // namespace jslope
