#ifndef JSLOPE_JSLOPE_H
#define JSLOPE_JSLOPE_H

/*
 * C interface to the jslope engine: coloured Jones polynomials, degree
 * maxima, edgepath slope reports and grid verification for the Montesinos
 * knots M(1/r, 1/(s - 1/u), 1/t).
 *
 * Every function returns a jslope_status. On failure the message is available
 * from jslope_last_error() on the same thread until the next call. Strings
 * returned through char** outputs are owned by the caller and released with
 * jslope_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JSLOPE_API __declspec(dllexport)
#else
#define JSLOPE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jslope_status {
  JSLOPE_OK = 0,
  JSLOPE_ERR_INVALID_ARGUMENT = 1,
  JSLOPE_ERR_INVALID_PARAMS = 2,
  JSLOPE_ERR_ARITHMETIC = 3,
  JSLOPE_ERR_IO = 4,
  JSLOPE_ERR_LIMIT = 5,
  JSLOPE_ERR_INTERNAL = 6
} jslope_status;

typedef enum jslope_format { JSLOPE_FORMAT_TEXT = 0, JSLOPE_FORMAT_JSON = 1 } jslope_format;

typedef enum jslope_method {
  JSLOPE_METHOD_EXACT = 0, /* maximal degree of the state-sum polynomial */
  JSLOPE_METHOD_BRUTE = 1, /* exhaustive maximum of the degree objective */
  JSLOPE_METHOD_FAST = 2,  /* case-analysis maximum */
  JSLOPE_METHOD_CLOSED = 3 /* closed-form quasi-polynomial */
} jslope_method;

typedef struct jslope_knot jslope_knot;

typedef struct jslope_jones_options {
  jslope_format format;
  const char* cache_dir; /* NULL disables the cache */
  int n_limit;           /* largest colour computed by state sum */
  int jobs;
} jslope_jones_options;

typedef struct jslope_verify_options {
  int n_max;
  int n_limit;
  int jobs;
  const char* cache_dir;
  int timing; /* nonzero adds wall-clock seconds to reports */
} jslope_verify_options;

typedef struct jslope_grid_summary {
  size_t tuples;
  size_t verified;
  size_t mismatched;
  size_t faults;
  size_t skipped;
} jslope_grid_summary;

JSLOPE_API const char* jslope_version(void);
JSLOPE_API const char* jslope_last_error(void);
JSLOPE_API const char* jslope_status_name(jslope_status status);
JSLOPE_API void jslope_string_free(char* s);

JSLOPE_API void jslope_jones_options_init(jslope_jones_options* options);
JSLOPE_API void jslope_verify_options_init(jslope_verify_options* options);

/* r, u, t odd, s even, u <= -1, r < -1, s > 1, t > 1. */
JSLOPE_API jslope_status jslope_knot_create(long r, long s, long t, long u, jslope_knot** out);
JSLOPE_API void jslope_knot_destroy(jslope_knot* knot);
/* Static string: "Case1", "Case2_1", ... */
JSLOPE_API jslope_status jslope_knot_case(const jslope_knot* knot, const char** tag);

/* J_K(N) as text ("c*v^e + ...") or a JSON record. */
JSLOPE_API jslope_status jslope_colored_jones(const jslope_knot* knot, int N, const jslope_jones_options* options,
                                              char** out);

/* Degrees for N = 1..n_max written to out[0..n_max-1]. options may be NULL. */
JSLOPE_API jslope_status jslope_degrees(const jslope_knot* knot, int n_max, jslope_method method,
                                        const jslope_jones_options* options, int64_t* out);

/* Edgepath report as JSON. */
JSLOPE_API jslope_status jslope_slope_report(const jslope_knot* knot, char** json);

/* Single-tuple verification report as JSON; *verified set to 0 or 1. */
JSLOPE_API jslope_status jslope_verify_knot(const jslope_knot* knot, const jslope_verify_options* options, char** json,
                                            int* verified);

/* Grid verification; json and csv may be NULL when not wanted. */
JSLOPE_API jslope_status jslope_verify_grid(const char* grid, const jslope_verify_options* options, char** json,
                                            char** csv, jslope_grid_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* JSLOPE_JSLOPE_H */
