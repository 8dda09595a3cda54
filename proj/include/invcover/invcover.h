/*
 * C interface to the invcover library.
 *
 * Instances are opaque handles. Every call returns an invcover_status; on
 * failure a message is available from invcover_last_error() on the same
 * thread. Results are JSON documents returned through `char **out` and
 * released with invcover_string_free(). Rationals in results are always
 * {"num": "<digits>", "den": "<digits>"}; a + b·√2 values are {"a": ..., "b": ...}.
 */
#ifndef INVCOVER_INVCOVER_H
#define INVCOVER_INVCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(INVCOVER_BUILDING)
#    define INVCOVER_API __declspec(dllexport)
#  else
#    define INVCOVER_API __declspec(dllimport)
#  endif
#else
#  define INVCOVER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes for the command-line tool. */
typedef enum invcover_status {
  INVCOVER_OK = 0,
  INVCOVER_INVALID_INPUT = 1,
  INVCOVER_UNCOVERABLE = 2,
  INVCOVER_CAP_EXCEEDED = 3,
  INVCOVER_INTERNAL = 4
} invcover_status;

typedef struct invcover_instance invcover_instance;

typedef struct invcover_options {
  uint64_t cap;        /* closure and group-enumeration cap */
  uint64_t oracle_cap; /* vertex / orbit cap of the exhaustive oracles */
  int use_oracle;      /* nonzero: integer optima by exhaustive enumeration */
} invcover_options;

#define INVCOVER_MAX_GROUP_ORDERS 16

typedef struct invcover_search_config {
  uint64_t seed;
  uint64_t budget;
  uint32_t parts;
  uint32_t rank;
  uint32_t part_size_min;
  uint32_t part_size_max;
  uint32_t group_orders[INVCOVER_MAX_GROUP_ORDERS];
  uint32_t group_order_count;
  uint32_t density_permille_min;
  uint32_t density_permille_max;
  uint32_t workers;
  uint64_t enumeration_cap;
} invcover_search_config;

INVCOVER_API const char *invcover_version(void);
INVCOVER_API const char *invcover_status_name(invcover_status status);
INVCOVER_API const char *invcover_last_error(void);
INVCOVER_API void invcover_string_free(char *text);

/* Defaults; `cap` honours the INVCOVER_CAP environment variable. */
INVCOVER_API void invcover_options_init(invcover_options *options);
INVCOVER_API void invcover_search_config_init(invcover_search_config *config);

INVCOVER_API invcover_status invcover_instance_parse(const char *json, invcover_instance **out);
INVCOVER_API invcover_status invcover_instance_load(const char *path, invcover_instance **out);
INVCOVER_API invcover_status invcover_fixture(const char *name, invcover_instance **out);
INVCOVER_API void invcover_instance_free(invcover_instance *instance);

INVCOVER_API size_t invcover_fixture_count(void);
INVCOVER_API const char *invcover_fixture_name(size_t index);

/* Canonical instance JSON (sorted keys and ids). */
INVCOVER_API invcover_status invcover_instance_serialize(const invcover_instance *instance,
                                                         char **out);
/* Validation entries collected while parsing: [{"severity", "kind", "message"}]. */
INVCOVER_API invcover_status invcover_instance_diagnostics(const invcover_instance *instance,
                                                           char **out);

/* `options` may be NULL for defaults. */
INVCOVER_API invcover_status invcover_tau(const invcover_instance *instance,
                                          const invcover_options *options, char **out);
INVCOVER_API invcover_status invcover_tau_star(const invcover_instance *instance, char **out);
INVCOVER_API invcover_status invcover_tau_g(const invcover_instance *instance,
                                            const invcover_options *options, char **out);
INVCOVER_API invcover_status invcover_tau_g_star(const invcover_instance *instance, char **out);
INVCOVER_API invcover_status invcover_closure(const invcover_instance *instance,
                                              const invcover_options *options, char **out);

/* `cover_json` maps ids to rationals ("p/q" or {num, den}); NULL uses the
 * optimal fractional cover. */
INVCOVER_API invcover_status invcover_cut(const invcover_instance *instance,
                                          const char *cover_json, char **out);

/* `keep_json` is an array of ids; NULL uses a minimum cover plus the support
 * of a minimum fractional cover. */
INVCOVER_API invcover_status invcover_trace(const invcover_instance *instance,
                                            const char *keep_json, char **out);

/* Full bounds report. `out` is set whenever a report was produced, also when
 * the status is INVCOVER_UNCOVERABLE (empty edge), INVCOVER_INVALID_INPUT
 * (generator is not an automorphism) or INVCOVER_INTERNAL (violated clause). */
INVCOVER_API invcover_status invcover_verify(const invcover_instance *instance,
                                             const invcover_options *options, char **out);

INVCOVER_API invcover_status invcover_search(const invcover_search_config *config, char **out);
INVCOVER_API invcover_status invcover_replay(const invcover_instance *const *instances,
                                             size_t count, char **out);
INVCOVER_API invcover_status invcover_exhaustive(const invcover_instance *template_instance,
                                                 const invcover_search_config *config,
                                                 char **out);

#ifdef __cplusplus
}
#endif

#endif
