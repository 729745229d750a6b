/*
 * hookpoly C API.
 *
 * Opaque handles own their data and are released with the matching *_free
 * function. Every call returns an hp_status; on anything other than HP_OK the
 * message is available from hp_last_error() on the same thread. Strings
 * returned through char** are heap-allocated and released with
 * hp_string_free.
 */
#ifndef HOOKPOLY_H
#define HOOKPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(HOOKPOLY_BUILDING_LIBRARY)
#define HP_API __attribute__((visibility("default")))
#else
#define HP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp_status {
  HP_OK = 0,
  HP_ERR_PARSE = 1,
  HP_ERR_INVALID_ARGUMENT = 2,
  HP_ERR_BOUND_EXCEEDED = 3,
  HP_ERR_UNKNOWN_IDENTITY = 4,
  HP_ERR_UNKNOWN_FORMAT = 5,
  HP_ERR_INTERNAL = 6
} hp_status;

typedef enum hp_format { HP_FORMAT_JSON = 0, HP_FORMAT_CSV = 1, HP_FORMAT_TEXT = 2 } hp_format;

typedef enum hp_poly_style {
  HP_POLY_PRETTY = 0,    /* 17x^2-38x-75 */
  HP_POLY_SERIALIZED = 1 /* [(2,"17/1"),(1,"-38/1"),(0,"-75/1")] */
} hp_poly_style;

typedef struct hp_partition hp_partition;
typedef struct hp_poly hp_poly;
typedef struct hp_sweep_config hp_sweep_config;
typedef struct hp_report hp_report;

HP_API const char* hp_last_error(void);
HP_API const char* hp_status_name(hp_status status);
HP_API void hp_string_free(char* s);

/* Partitions: "5,5,3,3,1", compact "55331", or "0"/"" for the empty one. */
HP_API hp_status hp_partition_parse(const char* text, hp_partition** out);
HP_API void hp_partition_free(hp_partition* p);
HP_API hp_status hp_partition_format(const hp_partition* p, char** out);
HP_API size_t hp_partition_size(const hp_partition* p);
HP_API size_t hp_partition_length(const hp_partition* p);

/* row and col are 1-based. */
HP_API hp_status hp_hook_length(const hp_partition* p, size_t row, size_t col, uint64_t* out);
/* Hook grid, one diagram row per line. */
HP_API hp_status hp_hook_grid(const hp_partition* p, char** out);
/* Decimal strings. */
HP_API hp_status hp_hook_product(const hp_partition* p, char** out);
HP_API hp_status hp_syt_count(const hp_partition* p, char** out);
/* {"T":[...],"B":[...],"removals":{"2":"5,4,3,3,1",...}} */
HP_API hp_status hp_corner_sets_json(const hp_partition* p, char** out);

/* Polynomials. */
HP_API hp_status hp_g_poly(const hp_partition* p, hp_poly** out);
HP_API void hp_poly_free(hp_poly* poly);
/* -1 for the zero polynomial. */
HP_API long hp_poly_degree(const hp_poly* poly);
HP_API hp_status hp_poly_format(const hp_poly* poly, hp_poly_style style, char** out);
/* Coefficient at `power` as "num/den". */
HP_API hp_status hp_poly_coefficient(const hp_poly* poly, size_t power, char** out);

/* Schur expansions of the two sides of the p1/e identity, as JSON. */
HP_API hp_status hp_schur_lhs_json(unsigned n, char** out);
HP_API hp_status hp_schur_rhs_json(unsigned n, char** out);

/* Checks one identity by name ("THM_1_1", ..., "COR_4_4") with witness
 * capture on. *all_passed is 1 when every outcome passed; *json receives an
 * array of outcome objects. */
HP_API hp_status hp_check_identity(const char* identity, const hp_partition* p, int* all_passed,
                                   char** json);

/* Sweep configuration; defaults match the library defaults. */
HP_API hp_sweep_config* hp_sweep_config_new(void);
HP_API void hp_sweep_config_free(hp_sweep_config* c);
HP_API hp_status hp_sweep_config_set_max_n(hp_sweep_config* c, int max_n);
HP_API hp_status hp_sweep_config_set_max_n_theorem_1_2(hp_sweep_config* c, int max_n);
HP_API hp_status hp_sweep_config_set_max_n_oracles(hp_sweep_config* c, int max_n);
/* Comma-separated identity names, or "all". */
HP_API hp_status hp_sweep_config_set_identities(hp_sweep_config* c, const char* list);
/* 0 selects hardware concurrency. */
HP_API hp_status hp_sweep_config_set_jobs(hp_sweep_config* c, unsigned jobs);
HP_API hp_status hp_sweep_config_set_fail_fast(hp_sweep_config* c, int fail_fast);
HP_API hp_status hp_sweep_config_set_capture_witnesses(hp_sweep_config* c, int capture);
/* Fault injection for self-tests: add `delta` to the hook length at
 * (row, col) of `shape`, or to the constant of g-factor `factor`. */
HP_API hp_status hp_sweep_config_perturb_hook(hp_sweep_config* c, const hp_partition* shape,
                                              size_t row, size_t col, int delta);
HP_API hp_status hp_sweep_config_perturb_g_factor(hp_sweep_config* c, const hp_partition* shape,
                                                  size_t factor, int delta);

HP_API hp_status hp_run_sweep(const hp_sweep_config* c, hp_report** out);
HP_API void hp_report_free(hp_report* r);
HP_API size_t hp_report_failure_count(const hp_report* r);
HP_API size_t hp_report_checked_count(const hp_report* r);
HP_API hp_status hp_report_render(const hp_report* r, hp_format format, char** out);
/* "json", "csv", "text" */
HP_API hp_status hp_format_from_name(const char* name, hp_format* out);

/* Annotated walkthrough of the 5,5,3,3,1 example. */
HP_API hp_status hp_example_55331(char** out);

#ifdef __cplusplus
}
#endif

#endif /* HOOKPOLY_H */
