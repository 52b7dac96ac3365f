#include "jslope/jslope.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "jslope/degopt.hpp"
#include "jslope/edgepath.hpp"
#include "jslope/error.hpp"
#include "jslope/pipeline.hpp"

struct jslope_knot {
  jslope::KnotParams params;
};

namespace {

thread_local std::string last_error;

jslope_status status_of(jslope::ErrorKind kind) {
  using jslope::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::BelowThreshold:
    case ErrorKind::InsufficientSamples:
      return JSLOPE_ERR_INVALID_ARGUMENT;
    case ErrorKind::InvalidParams: return JSLOPE_ERR_INVALID_PARAMS;
    case ErrorKind::Io: return JSLOPE_ERR_IO;
    case ErrorKind::LimitExceeded: return JSLOPE_ERR_LIMIT;
    default: return JSLOPE_ERR_ARITHMETIC;
  }
}

template <class Fn>
jslope_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return JSLOPE_OK;
  } catch (const jslope::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return JSLOPE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return JSLOPE_ERR_INTERNAL;
  }
}

jslope_status null_argument(const char* name) {
  last_error = std::string("InvalidArgument: ") + name + " is NULL";
  return JSLOPE_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

jslope::VerifyOptions verify_options(const jslope_verify_options* o) {
  jslope_verify_options defaults;
  jslope_verify_options_init(&defaults);
  if (!o) o = &defaults;
  jslope::VerifyOptions v;
  v.n_max = o->n_max;
  v.n_limit = o->n_limit;
  v.jobs = o->jobs;
  if (o->cache_dir) v.cache_dir = o->cache_dir;
  v.timing = o->timing != 0;
  return v;
}

}  // namespace

extern "C" {

const char* jslope_version(void) { return "0.1.0"; }

const char* jslope_last_error(void) { return last_error.c_str(); }

const char* jslope_status_name(jslope_status status) {
  switch (status) {
    case JSLOPE_OK: return "ok";
    case JSLOPE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case JSLOPE_ERR_INVALID_PARAMS: return "invalid parameters";
    case JSLOPE_ERR_ARITHMETIC: return "arithmetic error";
    case JSLOPE_ERR_IO: return "I/O error";
    case JSLOPE_ERR_LIMIT: return "limit exceeded";
    case JSLOPE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void jslope_string_free(char* s) { std::free(s); }

void jslope_jones_options_init(jslope_jones_options* o) {
  if (!o) return;
  o->format = JSLOPE_FORMAT_TEXT;
  o->cache_dir = nullptr;
  o->n_limit = 9;
  o->jobs = 1;
}

void jslope_verify_options_init(jslope_verify_options* o) {
  if (!o) return;
  o->n_max = 6;
  o->n_limit = 9;
  o->jobs = 1;
  o->cache_dir = nullptr;
  o->timing = 0;
}

jslope_status jslope_knot_create(long r, long s, long t, long u, jslope_knot** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new jslope_knot{jslope::KnotParams::make(r, s, t, u)}; });
}

void jslope_knot_destroy(jslope_knot* knot) { delete knot; }

jslope_status jslope_knot_case(const jslope_knot* knot, const char** tag) {
  if (!knot) return null_argument("knot");
  if (!tag) return null_argument("tag");
  return guarded([&] { *tag = jslope::to_string(jslope::classify(knot->params).tag).data(); });
}

jslope_status jslope_colored_jones(const jslope_knot* knot, int N, const jslope_jones_options* options, char** out) {
  if (!knot) return null_argument("knot");
  if (!out) return null_argument("out");
  *out = nullptr;
  jslope_jones_options o;
  jslope_jones_options_init(&o);
  if (options) o = *options;
  return guarded([&] {
    std::optional<jslope::PolyCache> cache;
    if (o.cache_dir) cache.emplace(o.cache_dir);
    const jslope::LaurentPoly j = jslope::jones_cached(knot->params, N, cache ? &*cache : nullptr, o.jobs, o.n_limit);
    *out = dup(o.format == JSLOPE_FORMAT_JSON ? jslope::jones_record_json(knot->params, N, j, 2) : j.to_text() + "\n");
  });
}

jslope_status jslope_degrees(const jslope_knot* knot, int n_max, jslope_method method,
                             const jslope_jones_options* options, int64_t* out) {
  if (!knot) return null_argument("knot");
  if (!out) return null_argument("out");
  jslope_jones_options o;
  jslope_jones_options_init(&o);
  if (options) o = *options;
  return guarded([&] {
    if (n_max < 1) jslope::fail(jslope::ErrorKind::InvalidArgument, "n_max must be >= 1");
    std::optional<jslope::PolyCache> cache;
    if (o.cache_dir) cache.emplace(o.cache_dir);
    for (int N = 1; N <= n_max; ++N) {
      int64_t d = 0;
      switch (method) {
        case JSLOPE_METHOD_EXACT:
          d = jslope::jones_cached(knot->params, N, cache ? &*cache : nullptr, o.jobs, o.n_limit).max_deg();
          break;
        case JSLOPE_METHOD_BRUTE: d = jslope::brute_max_phi(knot->params, N - 1, o.jobs).value; break;
        case JSLOPE_METHOD_FAST: d = jslope::fast_max_phi(knot->params, N - 1); break;
        case JSLOPE_METHOD_CLOSED: d = jslope::closed_form_dplus(knot->params, N); break;
        default: jslope::fail(jslope::ErrorKind::InvalidArgument, "unknown degree method");
      }
      out[N - 1] = d;
    }
  });
}

jslope_status jslope_slope_report(const jslope_knot* knot, char** json) {
  if (!knot) return null_argument("knot");
  if (!json) return null_argument("json");
  *json = nullptr;
  return guarded([&] { *json = dup(jslope::edgepath_report_json(knot->params)); });
}

jslope_status jslope_verify_knot(const jslope_knot* knot, const jslope_verify_options* options, char** json,
                                 int* verified) {
  if (!knot) return null_argument("knot");
  if (!json) return null_argument("json");
  *json = nullptr;
  return guarded([&] {
    const jslope::Report rep = jslope::run_verification(knot->params, verify_options(options));
    *json = dup(jslope::report_to_json(rep));
    if (verified) *verified = rep.verified() ? 1 : 0;
  });
}

jslope_status jslope_verify_grid(const char* grid, const jslope_verify_options* options, char** json, char** csv,
                                 jslope_grid_summary* summary) {
  if (!grid) return null_argument("grid");
  if (json) *json = nullptr;
  if (csv) *csv = nullptr;
  return guarded([&] {
    const jslope::GridOutput out = jslope::grid_run(jslope::parse_grid(grid), verify_options(options));
    char* j = json ? dup(out.json) : nullptr;
    char* c = nullptr;
    try {
      c = csv ? dup(out.csv) : nullptr;
    } catch (...) {
      std::free(j);
      throw;
    }
    if (json) *json = j;
    if (csv) *csv = c;
    if (summary) {
      summary->tuples = out.summary.tuples;
      summary->verified = out.summary.verified;
      summary->mismatched = out.summary.mismatched;
      summary->faults = out.summary.faults;
      summary->skipped = out.summary.skipped;
    }
  });
}

}  // extern "C"
