/* Copyright The feabc Authors */
/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface of the feabc scattering solver. All objects are opaque handles;
 * every call returns a status code and, on failure, records a message that
 * feabc_last_error() returns (per thread).
 */

#ifndef FEABC_FEABC_H
#define FEABC_FEABC_H

#include <stddef.h>

#if defined(FEABC_BUILDING_LIBRARY)
#define FEABC_API __attribute__((visibility("default")))
#else
#define FEABC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum feabc_status
{
  FEABC_OK = 0,
  FEABC_ERR_INTERNAL = 1,     /* I/O or unexpected failure */
  FEABC_ERR_CONFIG = 2,       /* invalid configuration or argument */
  FEABC_ERR_CONDITIONING = 3, /* ill-conditioned setup */
  FEABC_ERR_SOLVER = 4,       /* linear solve missed the residual bound */
  FEABC_ERR_CHECK = 5         /* an acceptance check failed */
} feabc_status;

typedef struct feabc_config feabc_config;
typedef struct feabc_result feabc_result;
typedef struct feabc_report feabc_report;

/* Message of the last failed call on this thread ("" if none). */
FEABC_API const char *feabc_last_error(void);

/* Configuration: load from a file or text, override single keys. */
FEABC_API feabc_status feabc_config_load(const char *path, feabc_config **out);
FEABC_API feabc_status feabc_config_parse(const char *text, feabc_config **out);
FEABC_API feabc_status feabc_config_set(feabc_config *cfg, const char *key, const char *value);
FEABC_API feabc_status feabc_config_validate(const feabc_config *cfg);
FEABC_API void feabc_config_free(feabc_config *cfg);

/*
 * Solve one scenario (sweep entries are ignored) and write "<name>.csv" to
 * out_dir, or to the configured directory when out_dir is NULL.
 */
FEABC_API feabc_status feabc_solve(const feabc_config *cfg, const char *out_dir,
                                   feabc_result **out);

/* Run every sweep combination and write "<name>.csv" (and "<name>_fit.csv"). */
FEABC_API feabc_status feabc_sweep(const feabc_config *cfg, const char *out_dir,
                                   feabc_result **out);

/* Rows of a result, and per-row accessors. */
FEABC_API size_t feabc_result_rows(const feabc_result *res);
FEABC_API int feabc_result_failures(const feabc_result *res);
FEABC_API feabc_status feabc_result_errors(const feabc_result *res, size_t row, double *domain,
                                           double *boundary, double *ffp);
FEABC_API feabc_status feabc_result_mesh(const feabc_result *res, size_t row, int *radial,
                                         int *angular, int *dofs, double *h);
FEABC_API feabc_status feabc_result_residual(const feabc_result *res, size_t row,
                                             double *residual);
/* Path of the CSV written by the call that produced the result. */
FEABC_API const char *feabc_result_csv(const feabc_result *res);
FEABC_API void feabc_result_free(feabc_result *res);

/* SVG plots from a sweep CSV into out_dir; *count receives the file count. */
FEABC_API feabc_status feabc_plot(const char *csv_path, const char *out_dir, size_t *count);

/*
 * Run a named acceptance suite ("tables", "lowfreq", "closeboundary", "sphere",
 * "bgt", "properties"). Returns FEABC_ERR_CHECK if any line failed; the report
 * is produced either way.
 */
FEABC_API size_t feabc_check_suite_count(void);
FEABC_API const char *feabc_check_suite_name(size_t index);
FEABC_API feabc_status feabc_check(const char *suite, feabc_report **out);
FEABC_API size_t feabc_report_lines(const feabc_report *rep);
FEABC_API feabc_status feabc_report_line(const feabc_report *rep, size_t line, const char **id,
                                         int *pass, const char **description,
                                         const char **detail);
FEABC_API void feabc_report_free(feabc_report *rep);

#ifdef __cplusplus
}
#endif

#endif /* FEABC_FEABC_H */
