#include "jslope/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "jslope/error.hpp"
#include "parallel.hpp"
#include "report_json.hpp"

namespace jslope {

namespace {

Prediction predict_with(const KnotParams& params, const EdgepathReport& ep) {
  Prediction p;
  const Classification cls = classify(params);
  p.tag = cls.tag;
  p.slope = closed_form_slope(params);
  p.linear = closed_form_linear(params);
  p.period = degree_period(params);
  p.residues = residue_table(params);
  p.edgepath_slope = ep.slope;
  p.euler_ratio = cls.quadratic_case() ? *ep.euler_ratio_gamma : ep.euler_ratio_seifert;
  p.slope_match = p.slope == p.edgepath_slope;
  p.euler_match = p.linear / 2 == p.euler_ratio;
  return p;
}

// Constant term of the closed form on residue class j.
Rational closed_constant(const Prediction& p, const KnotParams& k, int j) {
  if (p.residues.empty()) return -2 * Rational(k.u);
  return p.residues.at(static_cast<std::size_t>(j)).c_j;
}

}  // namespace

Prediction predict(const KnotParams& params) { return predict_with(params, edgepath_report(params)); }

Report run_verification(const KnotParams& params, const VerifyOptions& options) {
  if (options.n_max < 4) fail(ErrorKind::InvalidArgument, "n_max must be >= 4");
  if (options.n_max > options.n_limit) {
    fail(ErrorKind::LimitExceeded,
         "n_max=" + std::to_string(options.n_max) + " exceeds the state-sum limit " + std::to_string(options.n_limit));
  }
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.params = KnotParams::make(params.r, params.s, params.t, params.u);
  rep.edgepath = edgepath_report(rep.params);
  rep.prediction = predict_with(rep.params, rep.edgepath);
  rep.n_max = options.n_max;
  const int p = rep.prediction.period;
  rep.n_ext = std::max(options.n_max, 8) + 4 * p;

  std::optional<PolyCache> cache;
  if (options.cache_dir) cache.emplace(*options.cache_dir, options.warn);
  for (int N = 1; N <= options.n_max; ++N) {
    const LaurentPoly j = jones_cached(rep.params, N, cache ? &*cache : nullptr, options.jobs, options.n_limit);
    rep.exact.push_back({N, j.max_deg(), j.leading_coeff()});
  }
  for (int N = 1; N <= rep.n_ext; ++N) {
    rep.phi.push_back({N, brute_max_phi(rep.params, N - 1, options.jobs).value, fast_max_phi(rep.params, N - 1),
                       closed_form_dplus(rep.params, N)});
  }

  Flags& f = rep.flags;
  f.no_cancellation = std::all_of(rep.exact.begin(), rep.exact.end(), [&](const ExactRecord& e) {
    return e.degree == rep.phi[static_cast<std::size_t>(e.N - 1)].brute && e.leading > 0;
  });
  f.oracles_agree = std::all_of(rep.phi.begin(), rep.phi.end(), [](const PhiRecord& r) { return r.brute == r.fast; });

  std::vector<DegreeSample> samples;
  for (const auto& e : rep.exact) samples.push_back({e.N, e.degree});
  for (const auto& r : rep.phi)
    if (r.N > options.n_max) samples.push_back({r.N, r.brute});

  rep.closed_form_from = 1;
  for (const auto& s : samples) {
    if (rep.phi[static_cast<std::size_t>(s.N - 1)].closed != s.degree) rep.closed_form_from = s.N + 1;
  }

  try {
    rep.fit = fit_quasi(samples, p, FitOptions{4});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoQuadraticFit && e.kind() != ErrorKind::InsufficientSamples) throw;
    rep.fit_error = e.what();
  }
  if (rep.fit) {
    rep.least_period = least_period(*rep.fit);
    f.closed_form_match = f.slope_match = f.euler_match = true;
    for (const auto& r : rep.fit->residues) {
      if (r.a != rep.prediction.slope || r.two_b != rep.prediction.linear ||
          r.c != closed_constant(rep.prediction, rep.params, r.j)) {
        f.closed_form_match = false;
      }
      if (r.a != rep.edgepath.slope) f.slope_match = false;
      if (r.two_b / 2 != rep.prediction.euler_ratio) f.euler_match = false;
    }
  }
  f.prediction_match = rep.prediction.slope_match && rep.prediction.euler_match;
  if (options.timing) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

std::vector<long> parse_values(const std::string& name, const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  const auto to_long = [&](const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (s.empty() || pos != s.size()) fail(ErrorKind::InvalidArgument, "bad value '" + s + "' for " + name);
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_long(item));
      continue;
    }
    const long lo = to_long(item.substr(0, dots));
    const long hi = to_long(item.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  g.text = text;
  std::set<std::string> seen;
  std::string clean;
  for (char c : text)
    if (c != ' ' && c != '\t') clean += c;
  std::stringstream ss(clean);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "grid component '" + part + "' lacks '='");
    const std::string name = part.substr(0, eq);
    std::vector<long>* dst = name == "r" ? &g.r : name == "s" ? &g.s : name == "t" ? &g.t : name == "u" ? &g.u : nullptr;
    if (!dst) fail(ErrorKind::InvalidArgument, "unknown grid parameter '" + name + "'");
    if (!seen.insert(name).second) fail(ErrorKind::InvalidArgument, "grid parameter '" + name + "' given twice");
    *dst = parse_values(name, part.substr(eq + 1));
  }
  if (seen.size() != 4) fail(ErrorKind::InvalidArgument, "grid must give all of r, s, t, u");
  return g;
}

GridTuples expand_grid(const GridSpec& g) {
  GridTuples out;
  for (long r : g.r)
    for (long s : g.s)
      for (long t : g.t)
        for (long u : g.u) {
          if (KnotParams::valid(r, s, t, u)) {
            out.tuples.push_back({r, s, t, u});
          } else {
            ++out.skipped;
          }
        }
  return out;
}

GridOutput grid_run(const GridSpec& grid, const VerifyOptions& options) {
  const GridTuples tuples = expand_grid(grid);
  struct Outcome {
    std::optional<Report> report;
    std::string error_kind;
    std::string error;
  };
  std::vector<Outcome> outcomes(tuples.tuples.size());
  VerifyOptions inner = options;
  inner.jobs = 1;
  detail::parallel_for(outcomes.size(), options.jobs, [&](std::size_t i) {
    try {
      outcomes[i].report = run_verification(tuples.tuples[i], inner);
    } catch (const Error& e) {
      outcomes[i].error_kind = std::string(to_string(e.kind()));
      outcomes[i].error = e.what();
    } catch (const std::exception& e) {
      outcomes[i].error_kind = "Internal";
      outcomes[i].error = e.what();
    }
  });

  GridOutput out;
  out.summary.tuples = tuples.tuples.size();
  out.summary.skipped = tuples.skipped;
  std::vector<detail::ReportEntry> entries;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.report) {
      (o.report->verified() ? out.summary.verified : out.summary.mismatched)++;
    } else {
      ++out.summary.faults;
    }
    entries.push_back({tuples.tuples[i], o.report ? &*o.report : nullptr, o.error_kind, o.error});
  }
  out.json = detail::grid_json(grid, options, out.summary, entries);
  out.csv = detail::grid_csv(entries);
  return out;
}

GridSummary grid_run_to_files(const GridSpec& grid, const VerifyOptions& options, const std::filesystem::path& json_out,
                              const std::optional<std::filesystem::path>& csv_out) {
  const GridOutput out = grid_run(grid, options);
  const auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    f << text;
    if (!f) fail(ErrorKind::Io, "cannot write " + path.string());
  };
  write(json_out, out.json);
  if (csv_out) write(*csv_out, out.csv);
  return out.summary;
}

}  // namespace jslope
