#ifndef SOCLE_SOCLE_H
#define SOCLE_SOCLE_H

/* C interface to the socle engine. Every call returns a status; on failure
 * socle_last_error() holds the message for the calling thread. Strings
 * handed out are released with socle_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(SOCLE_BUILDING_LIBRARY)
#define SOCLE_API __attribute__((visibility("default")))
#else
#define SOCLE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum socle_status {
  SOCLE_OK = 0,
  SOCLE_INPUT_ERROR = 1,  /* syntax, unknown names, not a system of parameters */
  SOCLE_BUDGET_ERROR = 2, /* step or truncation budget exhausted */
  SOCLE_INTERNAL_ERROR = 3
} socle_status;

typedef struct socle_ring socle_ring;
typedef struct socle_report socle_report;

typedef struct socle_options {
  const char* field; /* "qq" or "fp:P"; NULL means fp:32003 */
  uint64_t seed;
  uint64_t step_budget; /* 0 keeps the default */
  unsigned trunc_budget; /* 0 keeps the default */
  size_t oracle_cap;
  unsigned samples;
} socle_options;

SOCLE_API void socle_options_init(socle_options* opts);
SOCLE_API const char* socle_version(void);
SOCLE_API const char* socle_last_error(void);
SOCLE_API void socle_string_free(char* s);

/* field may be NULL to keep the field of the file. */
SOCLE_API socle_status socle_ring_parse(const char* text, const char* label, const char* field, socle_ring** out);
SOCLE_API socle_status socle_ring_zoo(const char* id, const char* field, socle_ring** out);
SOCLE_API socle_status socle_ring_print(const socle_ring* ring, char** out);
SOCLE_API void socle_ring_free(socle_ring* ring);

/* One line per entry: id, a tab, the presentation. */
SOCLE_API socle_status socle_zoo_list(char** out);
/* One line per experiment: name, a tab, the prediction. */
SOCLE_API socle_status socle_experiment_list(char** out);

/* q is a comma-separated list or the name of an ideal in the ring file.
 * expect: -1 for no expectation, else 0 or 1. */
SOCLE_API socle_status socle_check_i2qi(const socle_ring* ring, const char* q, int expect, const socle_options* opts,
                                        socle_report** out);
/* cap 0 picks the default. */
SOCLE_API socle_status socle_rednum(const socle_ring* ring, const char* q, unsigned cap, const socle_options* opts,
                                    socle_report** out);
SOCLE_API socle_status socle_invariants(const socle_ring* ring, const socle_options* opts, socle_report** out);
SOCLE_API socle_status socle_zoo_verify(const char* id, const socle_options* opts, socle_report** out);
/* only: n_only experiment names, or all of them when n_only is 0. */
SOCLE_API socle_status socle_repro(const char* const* only, size_t n_only, const socle_options* opts,
                                   socle_report** out);
SOCLE_API socle_status socle_verify_colon_split(unsigned instances, const socle_options* opts, socle_report** out);

SOCLE_API int socle_report_pass(const socle_report* report);
SOCLE_API socle_status socle_report_json(const socle_report* report, int with_timings, char** out);
SOCLE_API socle_status socle_report_text(const socle_report* report, char** out);
SOCLE_API void socle_report_free(socle_report* report);

/* A report holding only an error record. */
SOCLE_API socle_status socle_error_json(socle_status status, const char* message, const socle_options* opts,
                                        char** out);

#ifdef __cplusplus
}
#endif

#endif
