/* Copyright The feabc Authors */
/* SPDX-License-Identifier: Apache-2.0 */

/* Exercises the shared library through its C interface only. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "feabc/feabc.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do                                                                 \
  {                                                                  \
    if (!(cond))                                                     \
    {                                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static const char *kScenario = "name = capi\n"
                               "dimension = 2d\n"
                               "scatterer = cylinder\n"
                               "bc = soft\n"
                               "k = 6.283185307179586\n"
                               "r0 = 1\n"
                               "R = 2\n"
                               "abc = kfe\n"
                               "terms = 6\n"
                               "degree = 2\n"
                               "n_lambda = 8\n"
                               "record_time = false\n";

static void test_solve(void)
{
  feabc_config *cfg = NULL;
  EXPECT(feabc_config_parse(kScenario, &cfg) == FEABC_OK);
  EXPECT(feabc_config_validate(cfg) == FEABC_OK);

  feabc_result *res = NULL;
  EXPECT(feabc_solve(cfg, NULL, &res) == FEABC_OK);
  EXPECT(feabc_result_rows(res) == 1);
  double ed = -1, eb = -1, ef = -1, r = -1, h = 0;
  int n = 0, m = 0, dofs = 0;
  EXPECT(feabc_result_errors(res, 0, &ed, &eb, &ef) == FEABC_OK);
  EXPECT(feabc_result_mesh(res, 0, &n, &m, &dofs, &h) == FEABC_OK);
  EXPECT(feabc_result_residual(res, 0, &r) == FEABC_OK);
  EXPECT(ed > 0 && ed < 0.05);
  EXPECT(eb > 0 && eb < 0.05);
  EXPECT(ef > 0 && ef < 0.05);
  EXPECT(r <= 1e-10);
  EXPECT(n > 0 && m > 0 && dofs > n * m && h > 0);
  EXPECT(strstr(feabc_result_csv(res), "capi.csv") != NULL);
  EXPECT(feabc_result_errors(res, 1, &ed, NULL, NULL) == FEABC_ERR_CONFIG);
  EXPECT(strlen(feabc_last_error()) > 0);

  FILE *f = fopen(feabc_result_csv(res), "r");
  EXPECT(f != NULL);
  if (f)
  {
    char line[512];
    EXPECT(fgets(line, sizeof line, f) != NULL);
    EXPECT(strncmp(line, "dimension,", 10) == 0);
    fclose(f);
  }
  feabc_result_free(res);
  feabc_config_free(cfg);
}

static void test_rejections(void)
{
  feabc_config *cfg = NULL;
  EXPECT(feabc_config_parse(kScenario, &cfg) == FEABC_OK);
  EXPECT(feabc_config_set(cfg, "k", "0") == FEABC_OK);
  feabc_result *res = NULL;
  EXPECT(feabc_solve(cfg, NULL, &res) == FEABC_ERR_CONFIG);
  EXPECT(res == NULL);
  EXPECT(strstr(feabc_last_error(), "k") != NULL);
  EXPECT(feabc_config_set(cfg, "no_such_key", "1") == FEABC_ERR_CONFIG);
  EXPECT(feabc_config_set(cfg, "degree", "two") == FEABC_ERR_CONFIG);
  EXPECT(feabc_config_set(NULL, "k", "1") == FEABC_ERR_CONFIG);
  feabc_config_free(cfg);

  feabc_config *bad = NULL;
  EXPECT(feabc_config_parse("k = 1\nthis line has no equals sign\n", &bad) == FEABC_ERR_CONFIG);
  EXPECT(bad == NULL);
  EXPECT(feabc_config_load("/nonexistent/feabc.cfg", &bad) != FEABC_OK);
  EXPECT(feabc_plot("/nonexistent/feabc.csv", "plots", NULL) != FEABC_OK);
  feabc_config_free(NULL);
  feabc_result_free(NULL);
  feabc_report_free(NULL);
}

static void test_sweep_and_plot(void)
{
  feabc_config *cfg = NULL;
  EXPECT(feabc_config_parse(kScenario, &cfg) == FEABC_OK);
  EXPECT(feabc_config_set(cfg, "name", "capi_sweep") == FEABC_OK);
  EXPECT(feabc_config_set(cfg, "sweep.n_lambda", "6, 8, 10") == FEABC_OK);
  feabc_result *res = NULL;
  EXPECT(feabc_sweep(cfg, NULL, &res) == FEABC_OK);
  EXPECT(feabc_result_rows(res) == 3);
  EXPECT(feabc_result_failures(res) == 0);
  double e[3];
  for (size_t i = 0; i < 3; ++i)
  {
    EXPECT(feabc_result_errors(res, i, NULL, &e[i], NULL) == FEABC_OK);
  }
  EXPECT(e[2] < e[1] && e[1] < e[0]);

  const char *dir = getenv("FEABC_OUTPUT_DIR");
  char plots[1024];
  snprintf(plots, sizeof plots, "%s/plots", dir ? dir : ".");
  size_t count = 0;
  EXPECT(feabc_plot(feabc_result_csv(res), plots, &count) == FEABC_OK);
  EXPECT(count >= 3);
  feabc_result_free(res);
  feabc_config_free(cfg);
}

static void test_check(void)
{
  EXPECT(feabc_check_suite_count() >= 6);
  EXPECT(feabc_check_suite_name(feabc_check_suite_count()) == NULL);
  feabc_report *rep = NULL;
  EXPECT(feabc_check("properties", &rep) == FEABC_OK);
  EXPECT(feabc_report_lines(rep) == 1);
  const char *id = NULL, *desc = NULL, *detail = NULL;
  int pass = 0;
  EXPECT(feabc_report_line(rep, 0, &id, &pass, &desc, &detail) == FEABC_OK);
  EXPECT(id && strcmp(id, "A7") == 0);
  EXPECT(pass == 1);
  EXPECT(feabc_report_line(rep, 1, &id, &pass, &desc, &detail) == FEABC_ERR_CONFIG);
  feabc_report_free(rep);

  rep = NULL;
  EXPECT(feabc_check("no_such_suite", &rep) == FEABC_ERR_CONFIG);
  EXPECT(rep == NULL);
}

int main(void)
{
  test_solve();
  test_rejections();
  test_sweep_and_plot();
  test_check();
  if (failures)
  {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("test_capi: all expectations passed\n");
  return 0;
}
