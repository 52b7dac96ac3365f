// Command-line front end over the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jslope/jslope.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct KnotArgs {
  long r = 0, s = 0, t = 0, u = 0;

  void add_to(CLI::App* app) {
    app->add_option("-r", r, "first tangle 1/r (odd, < -1)")->required();
    app->add_option("-s", s, "middle tangle 1/(s - 1/u) (even, > 1)")->required();
    app->add_option("-t", t, "third tangle 1/t (odd, > 1)")->required();
    app->add_option("-u", u, "middle tangle parameter (odd, <= -1)")->required();
  }
};

struct KnotDeleter {
  void operator()(jslope_knot* k) const { jslope_knot_destroy(k); }
};
using KnotPtr = std::unique_ptr<jslope_knot, KnotDeleter>;

struct StringDeleter {
  void operator()(char* s) const { jslope_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int report_error(jslope_status status) {
  std::cerr << "error: " << jslope_last_error() << " (" << jslope_status_name(status) << ")\n";
  return kExitError;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::optional<KnotPtr> make_knot(const KnotArgs& a, int* code) {
  jslope_knot* raw = nullptr;
  if (jslope_status st = jslope_knot_create(a.r, a.s, a.t, a.u, &raw); st != JSLOPE_OK) {
    *code = report_error(st);
    return std::nullopt;
  }
  return KnotPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured Jones degrees, boundary slopes and slope-conjecture checks for M(1/r, 1/(s-1/u), 1/t)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(jslope_version()));

  KnotArgs jk;
  int jN = 1;
  std::string jformat = "text";
  std::string jcache;
  int jlimit = 9;
  int jjobs = 1;
  auto* jones = app.add_subcommand("jones", "print J_K(N)");
  jk.add_to(jones);
  jones->add_option("-N", jN, "colour (N >= 1)")->required()->check(CLI::PositiveNumber);
  jones->add_option("--format", jformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  jones->add_option("--cache", jcache, "polynomial cache directory");
  jones->add_option("--n-limit", jlimit, "largest colour computed by state sum")->check(CLI::PositiveNumber);
  jones->add_option("--jobs", jjobs, "worker threads")->check(CLI::PositiveNumber);

  KnotArgs dk;
  int dn_max = 6;
  std::string dmethod = "exact";
  std::string dformat = "text";
  std::string dcache;
  int dlimit = 9;
  int djobs = 1;
  auto* degree = app.add_subcommand("degree", "maximal degrees for N = 1..n-max");
  dk.add_to(degree);
  degree->add_option("--n-max", dn_max, "largest colour")->check(CLI::PositiveNumber);
  degree->add_option("--method", dmethod, "exact, brute, fast or closed")
      ->check(CLI::IsMember({"exact", "brute", "fast", "closed"}));
  degree->add_option("--format", dformat, "text or json")->check(CLI::IsMember({"text", "json"}));
  degree->add_option("--cache", dcache, "polynomial cache directory (exact method)");
  degree->add_option("--n-limit", dlimit, "largest colour computed by state sum")->check(CLI::PositiveNumber);
  degree->add_option("--jobs", djobs, "worker threads")->check(CLI::PositiveNumber);

  KnotArgs sk;
  auto* slope = app.add_subcommand("slope", "edgepath report (JSON)");
  sk.add_to(slope);

  std::string grid;
  std::string out_path;
  std::string csv_path;
  std::string vcache;
  int vn_max = 6;
  int vlimit = 9;
  int vjobs = 1;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "verify the slope identities over a parameter grid");
  verify->add_option("--grid", grid, "e.g. \"r=-9..-3;s=2..6;t=3..7;u=-5..-1\"")->required();
  verify->add_option("--n-max", vn_max, "largest colour computed exactly (>= 4)")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "JSON report path")->required();
  verify->add_option("--csv", csv_path, "CSV summary path");
  verify->add_option("--jobs", vjobs, "parameter tuples processed in parallel")->check(CLI::PositiveNumber);
  verify->add_option("--cache", vcache, "polynomial cache directory");
  verify->add_option("--n-limit", vlimit, "largest colour computed by state sum")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "record wall-clock seconds per tuple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  int code = kExitOk;
  if (*jones) {
    auto knot = make_knot(jk, &code);
    if (!knot) return code;
    jslope_jones_options o;
    jslope_jones_options_init(&o);
    o.format = jformat == "json" ? JSLOPE_FORMAT_JSON : JSLOPE_FORMAT_TEXT;
    o.cache_dir = jcache.empty() ? nullptr : jcache.c_str();
    o.n_limit = jlimit;
    o.jobs = jjobs;
    char* text = nullptr;
    if (jslope_status st = jslope_colored_jones(knot->get(), jN, &o, &text); st != JSLOPE_OK) return report_error(st);
    CString owned(text);
    std::cout << owned.get();
    return kExitOk;
  }

  if (*degree) {
    auto knot = make_knot(dk, &code);
    if (!knot) return code;
    static const std::map<std::string, jslope_method> methods = {{"exact", JSLOPE_METHOD_EXACT},
                                                                 {"brute", JSLOPE_METHOD_BRUTE},
                                                                 {"fast", JSLOPE_METHOD_FAST},
                                                                 {"closed", JSLOPE_METHOD_CLOSED}};
    jslope_jones_options o;
    jslope_jones_options_init(&o);
    o.cache_dir = dcache.empty() ? nullptr : dcache.c_str();
    o.n_limit = dlimit;
    o.jobs = djobs;
    std::vector<int64_t> degrees(static_cast<std::size_t>(dn_max));
    if (jslope_status st = jslope_degrees(knot->get(), dn_max, methods.at(dmethod), &o, degrees.data()); st != JSLOPE_OK) {
      return report_error(st);
    }
    if (dformat == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (int N = 1; N <= dn_max; ++N) arr.push_back({{"N", N}, {"degree", degrees[static_cast<std::size_t>(N - 1)]}});
      const nlohmann::json out = {{"params", {{"r", dk.r}, {"s", dk.s}, {"t", dk.t}, {"u", dk.u}}},
                                  {"method", dmethod},
                                  {"degrees", arr}};
      std::cout << out.dump(2) << '\n';
    } else {
      for (int N = 1; N <= dn_max; ++N) std::cout << N << ' ' << degrees[static_cast<std::size_t>(N - 1)] << '\n';
    }
    return kExitOk;
  }

  if (*slope) {
    auto knot = make_knot(sk, &code);
    if (!knot) return code;
    char* json = nullptr;
    if (jslope_status st = jslope_slope_report(knot->get(), &json); st != JSLOPE_OK) return report_error(st);
    CString owned(json);
    std::cout << owned.get();
    return kExitOk;
  }

  jslope_verify_options o;
  jslope_verify_options_init(&o);
  o.n_max = vn_max;
  o.n_limit = vlimit;
  o.jobs = vjobs;
  o.cache_dir = vcache.empty() ? nullptr : vcache.c_str();
  o.timing = timing ? 1 : 0;
  char* json = nullptr;
  char* csv = nullptr;
  jslope_grid_summary summary{};
  if (jslope_status st = jslope_verify_grid(grid.c_str(), &o, &json, csv_path.empty() ? nullptr : &csv, &summary);
      st != JSLOPE_OK) {
    return report_error(st);
  }
  CString owned_json(json);
  CString owned_csv(csv);
  if (!write_file(out_path, owned_json.get())) return kExitError;
  if (!csv_path.empty() && !write_file(csv_path, owned_csv.get())) return kExitError;
  std::cerr << "tuples " << summary.tuples << ", verified " << summary.verified << ", mismatched " << summary.mismatched
            << ", faults " << summary.faults << ", skipped " << summary.skipped << '\n';
  if (summary.faults > 0) return kExitError;
  return summary.mismatched > 0 ? kExitMismatch : kExitOk;
}
