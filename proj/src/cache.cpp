#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "jslope/error.hpp"
#include "jslope/pipeline.hpp"
#include "report_json.hpp"

namespace jslope {

namespace fs = std::filesystem;
using nlohmann::json;
using detail::params_json;

WarningSink stderr_warnings() {
  return [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
}

namespace {

json poly_array(const LaurentPoly& p) {
  json arr = json::array();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) arr.push_back(json::array({it->exponent, it->coeff.get_str()}));
  return arr;
}

LaurentPoly poly_from_array(const json& arr) {
  if (!arr.is_array()) fail(ErrorKind::InvalidArgument, "polynomial must be an array of [exponent, \"coefficient\"]");
  std::vector<LaurentPoly::Term> terms;
  std::optional<std::int64_t> prev;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      fail(ErrorKind::InvalidArgument, "malformed polynomial term " + t.dump());
    }
    const auto e = t[0].get<std::int64_t>();
    if (prev && e >= *prev) fail(ErrorKind::InvalidArgument, "exponents must be strictly descending");
    prev = e;
    Integer c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0 || c == 0) {
      fail(ErrorKind::InvalidArgument, "bad coefficient " + t[1].dump());
    }
    terms.push_back({e, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::string unique_suffix() {
  static std::atomic<unsigned long> counter{0};
  std::ostringstream os;
  os << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter.fetch_add(1);
  return os.str();
}

}  // namespace

std::string poly_to_json(const LaurentPoly& p) { return poly_array(p).dump(); }

LaurentPoly poly_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("invalid polynomial JSON: ") + e.what());
  }
  return poly_from_array(j);
}

PolyCache::PolyCache(fs::path dir, WarningSink warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

fs::path PolyCache::record_path(const KnotParams& params, int N) const {
  return dir_ / params.key() / (std::to_string(N) + ".json");
}

std::optional<LaurentPoly> PolyCache::load(const KnotParams& params, int N) const {
  const fs::path path = record_path(params, N);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  try {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open");
    const json rec = json::parse(in);
    if (rec.at("params") != params_json(params)) fail(ErrorKind::InvalidArgument, "parameter mismatch");
    if (rec.at("N").get<int>() != N) fail(ErrorKind::InvalidArgument, "colour mismatch");
    LaurentPoly p = poly_from_array(rec.at("polynomial"));
    if (p.is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial");
    if (rec.at("max_deg").get<std::int64_t>() != p.max_deg() ||
        rec.at("leading_coeff").get<std::string>() != p.leading_coeff().get_str()) {
      fail(ErrorKind::InvalidArgument, "summary fields disagree with the polynomial");
    }
    return p;
  } catch (const std::exception& e) {
    if (warn_) warn_("discarding corrupt cache record " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

std::string jones_record_json(const KnotParams& params, int N, const LaurentPoly& jones, int indent) {
  if (jones.is_zero()) fail(ErrorKind::ZeroPolynomial, "J_K(N) is never zero");
  const json rec = {{"params", params_json(params)},
                    {"N", N},
                    {"polynomial", poly_array(jones)},
                    {"max_deg", jones.max_deg()},
                    {"leading_coeff", jones.leading_coeff().get_str()}};
  return rec.dump(indent) + "\n";
}

void PolyCache::store(const KnotParams& params, int N, const LaurentPoly& jones) const {
  const std::string text = jones_record_json(params, N, jones);
  const fs::path path = record_path(params, N);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) fail(ErrorKind::Io, "cannot create " + path.parent_path().string() + ": " + ec.message());
  const fs::path tmp = path.string() + unique_suffix();
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
    if (!out) fail(ErrorKind::Io, "cannot write " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot replace " + path.string());
  }
}

LaurentPoly jones_cached(const KnotParams& params, int N, const PolyCache* cache, int jobs, int n_limit) {
  if (N < 1) fail(ErrorKind::InvalidArgument, "colour N must be >= 1");
  if (N > n_limit) {
    fail(ErrorKind::LimitExceeded, "N=" + std::to_string(N) + " exceeds the state-sum limit " + std::to_string(n_limit));
  }
  if (cache) {
    if (auto hit = cache->load(params, N)) return *std::move(hit);
  }
  LaurentPoly j = colored_jones(params, N, jobs);
  if (cache) cache->store(params, N, j);
  return j;
}

}  // namespace jslope
