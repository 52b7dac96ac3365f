#pragma once

// Verification runs: exact degrees, the three degree maxima, quasi-polynomial
// fits and edgepath predictions per parameter tuple, over grids, with an
// on-disk polynomial cache and JSON/CSV reports.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jslope/degopt.hpp"
#include "jslope/edgepath.hpp"
#include "jslope/jones.hpp"

namespace jslope {

using WarningSink = std::function<void(const std::string&)>;

// Writes "warning: <msg>" to stderr.
WarningSink stderr_warnings();

struct Prediction {
  CaseTag tag = CaseTag::Case1;
  Rational slope;    // a
  Rational linear;   // 2b
  int period = 1;
  std::vector<ResidueData> residues;
  Rational edgepath_slope;
  Rational euler_ratio;  // chi/#S of the surface paired with the case
  bool slope_match = false;
  bool euler_match = false;
};

Prediction predict(const KnotParams& params);

// Polynomial records under <dir>/<r_s_t_u>/<N>.json.
class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir, WarningSink warn = stderr_warnings());

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path record_path(const KnotParams& params, int N) const;

  // Absent on a cold cache; corrupt records are reported and treated as absent.
  std::optional<LaurentPoly> load(const KnotParams& params, int N) const;
  // Atomic replace (temporary file + rename).
  void store(const KnotParams& params, int N, const LaurentPoly& jones) const;

 private:
  std::filesystem::path dir_;
  WarningSink warn_;
};

// Cache-aware J_K(N). Enforces n_limit.
LaurentPoly jones_cached(const KnotParams& params, int N, const PolyCache* cache, int jobs, int n_limit);

// {"params", "N", "polynomial", "max_deg", "leading_coeff"}; indent < 0 is compact.
std::string jones_record_json(const KnotParams& params, int N, const LaurentPoly& jones, int indent = -1);

std::string poly_to_json(const LaurentPoly& p);  // [[exp, "coef"], ...] by descending exponent
LaurentPoly poly_from_json(const std::string& text);

struct VerifyOptions {
  int n_max = 6;
  int n_limit = 9;  // ceiling for state-sum colours
  int jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool timing = false;  // adds wall-clock seconds to reports (breaks byte-identity)
  WarningSink warn = stderr_warnings();
};

struct ExactRecord {
  int N = 0;
  std::int64_t degree = 0;
  Integer leading;
};

struct PhiRecord {
  int N = 0;
  std::int64_t brute = 0;
  std::int64_t fast = 0;
  std::int64_t closed = 0;
};

struct Flags {
  bool no_cancellation = false;    // exact degree = brute maximum, positive leading coefficient
  bool oracles_agree = false;      // brute = fast for every N
  bool closed_form_match = false;  // fitted quadratics = closed form
  bool slope_match = false;        // fitted a_j = edgepath slope
  bool euler_match = false;        // fitted b_j = chi/#S
  bool prediction_match = false;   // closed-form coefficients = edgepath data

  bool all() const noexcept {
    return no_cancellation && oracles_agree && closed_form_match && slope_match && euler_match && prediction_match;
  }
};

struct Report {
  KnotParams params;
  Prediction prediction;
  EdgepathReport edgepath;
  int n_max = 0;
  int n_ext = 0;  // last N of the fitted sequence
  std::vector<ExactRecord> exact;
  std::vector<PhiRecord> phi;
  std::optional<QuasiPolynomial> fit;  // absent when no quadratic fits
  std::string fit_error;
  int least_period = 1;
  int closed_form_from = 1;  // least N from which the closed form matches every sample
  Flags flags;
  std::optional<double> seconds;

  bool verified() const noexcept { return flags.all(); }
};

// Exact degrees for N <= n_max, brute-force Phi maxima (which the exact
// degrees must equal) extend the sequence so every residue class has enough
// samples to fit and confirm a quadratic.
Report run_verification(const KnotParams& params, const VerifyOptions& options);

std::string report_to_json(const Report& report);  // one object, keys sorted
std::string edgepath_report_json(const KnotParams& params);

struct GridSpec {
  std::vector<long> r;
  std::vector<long> s;
  std::vector<long> t;
  std::vector<long> u;
  std::string text;
};

// "r=-9..-3;s=2..6;t=3..7;u=-5..-1"; each value list is a comma-separated mix
// of integers and inclusive ranges a..b (empty when a > b).
GridSpec parse_grid(const std::string& text);

struct GridTuples {
  std::vector<KnotParams> tuples;  // lexicographic
  std::size_t skipped = 0;         // constraint-violating combinations
};

GridTuples expand_grid(const GridSpec& grid);

struct GridSummary {
  std::size_t tuples = 0;
  std::size_t verified = 0;
  std::size_t mismatched = 0;
  std::size_t faults = 0;
  std::size_t skipped = 0;
};

struct GridOutput {
  GridSummary summary;
  std::string json;
  std::string csv;
};

// Tuples run in parallel (options.jobs); output order is the grid order.
GridOutput grid_run(const GridSpec& grid, const VerifyOptions& options);

// grid_run plus writing the JSON report and optional CSV summary.
GridSummary grid_run_to_files(const GridSpec& grid, const VerifyOptions& options, const std::filesystem::path& json_out,
                              const std::optional<std::filesystem::path>& csv_out);

}  // namespace jslope
