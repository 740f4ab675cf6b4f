// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/feabc.h"

#include <exception>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "feabc/error.hpp"
#include "feabc/harness.hpp"

struct feabc_config
{
  feabc::harness::ScatterConfig cfg;
};

struct feabc_result
{
  std::vector<feabc::harness::RunRecord> rows;
  int failures = 0;
  std::string csv;
};

struct feabc_report
{
  std::vector<feabc::harness::CheckResult> lines;
};

namespace
{

thread_local std::string last_error;

feabc_status fail(feabc_status code, const std::string &msg)
{
  last_error = msg;
  return code;
}

// Run f and translate exceptions into status codes.
template <class F>
feabc_status guard(F &&f)
{
  try
  {
    last_error.clear();
    return f();
  }
  catch (const feabc::ConfigError &e)
  {
    return fail(FEABC_ERR_CONFIG, e.what());
  }
  catch (const feabc::DomainError &e)
  {
    return fail(FEABC_ERR_CONFIG, e.what());
  }
  catch (const feabc::ConditioningError &e)
  {
    return fail(FEABC_ERR_CONDITIONING, e.what());
  }
  catch (const feabc::SolverError &e)
  {
    return fail(FEABC_ERR_SOLVER, e.what());
  }
  catch (const std::bad_alloc &)
  {
    return fail(FEABC_ERR_INTERNAL, "out of memory");
  }
  catch (const std::exception &e)
  {
    return fail(FEABC_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return fail(FEABC_ERR_INTERNAL, "unknown error");
  }
}

std::filesystem::path target_dir(const feabc::harness::ScatterConfig &cfg, const char *out_dir)
{
  return out_dir && *out_dir ? std::filesystem::path(out_dir) : feabc::harness::output_dir(cfg);
}

const feabc::harness::RunRecord *row_at(const feabc_result *res, size_t row)
{
  return res && row < res->rows.size() ? &res->rows[row] : nullptr;
}

}  // namespace

extern "C" {

const char *feabc_last_error(void)
{
  return last_error.c_str();
}

feabc_status feabc_config_load(const char *path, feabc_config **out)
{
  if (!path || !out)
  {
    return fail(FEABC_ERR_CONFIG, "config_load: null argument");
  }
  *out = nullptr;
  return guard([&] {
    auto *c = new feabc_config{feabc::harness::load_config(path)};
    *out = c;
    return FEABC_OK;
  });
}

feabc_status feabc_config_parse(const char *text, feabc_config **out)
{
  if (!text || !out)
  {
    return fail(FEABC_ERR_CONFIG, "config_parse: null argument");
  }
  *out = nullptr;
  return guard([&] {
    *out = new feabc_config{feabc::harness::parse_config(text)};
    return FEABC_OK;
  });
}

feabc_status feabc_config_set(feabc_config *cfg, const char *key, const char *value)
{
  if (!cfg || !key || !value)
  {
    return fail(FEABC_ERR_CONFIG, "config_set: null argument");
  }
  return guard([&] {
    const std::string k = key;
    feabc::harness::apply_setting(cfg->cfg, k, value);
    if (k.rfind("sweep.", 0) != 0 && k.rfind("case.", 0) != 0)
    {
      // A scalar override replaces any sweep over the same key.
      cfg->cfg.sweep.erase(k);
    }
    return FEABC_OK;
  });
}

feabc_status feabc_config_validate(const feabc_config *cfg)
{
  if (!cfg)
  {
    return fail(FEABC_ERR_CONFIG, "config_validate: null argument");
  }
  return guard([&] {
    feabc::harness::validate(cfg->cfg);
    return FEABC_OK;
  });
}

void feabc_config_free(feabc_config *cfg)
{
  delete cfg;
}

feabc_status feabc_solve(const feabc_config *cfg, const char *out_dir, feabc_result **out)
{
  if (!cfg || !out)
  {
    return fail(FEABC_ERR_CONFIG, "solve: null argument");
  }
  *out = nullptr;
  return guard([&] {
    auto single = cfg->cfg;
    single.sweep.clear();
    single.cases.clear();
    const auto dir = target_dir(single, out_dir);
    auto res = std::make_unique<feabc_result>();
    res->rows.push_back(feabc::harness::run_and_record(single, dir));
    res->csv = (dir / (single.name + ".csv")).string();
    *out = res.release();
    return FEABC_OK;
  });
}

feabc_status feabc_sweep(const feabc_config *cfg, const char *out_dir, feabc_result **out)
{
  if (!cfg || !out)
  {
    return fail(FEABC_ERR_CONFIG, "sweep: null argument");
  }
  *out = nullptr;
  return guard([&] {
    const auto dir = target_dir(cfg->cfg, out_dir);
    auto sw = feabc::harness::run_sweep(cfg->cfg, dir);
    auto res = std::make_unique<feabc_result>();
    res->rows = std::move(sw.rows);
    res->failures = sw.failures;
    res->csv = (dir / (cfg->cfg.name + ".csv")).string();
    *out = res.release();
    return FEABC_OK;
  });
}

size_t feabc_result_rows(const feabc_result *res)
{
  return res ? res->rows.size() : 0;
}

int feabc_result_failures(const feabc_result *res)
{
  return res ? res->failures : 0;
}

feabc_status feabc_result_errors(const feabc_result *res, size_t row, double *domain,
                                 double *boundary, double *ffp)
{
  const auto *r = row_at(res, row);
  if (!r)
  {
    return fail(FEABC_ERR_CONFIG, "result_errors: row out of range");
  }
  if (domain)
  {
    *domain = r->errors.domain;
  }
  if (boundary)
  {
    *boundary = r->errors.boundary;
  }
  if (ffp)
  {
    *ffp = r->errors.ffp;
  }
  return FEABC_OK;
}

feabc_status feabc_result_mesh(const feabc_result *res, size_t row, int *radial, int *angular,
                               int *dofs, double *h)
{
  const auto *r = row_at(res, row);
  if (!r)
  {
    return fail(FEABC_ERR_CONFIG, "result_mesh: row out of range");
  }
  if (radial)
  {
    *radial = r->N;
  }
  if (angular)
  {
    *angular = r->m;
  }
  if (dofs)
  {
    *dofs = r->dofs;
  }
  if (h)
  {
    *h = r->h;
  }
  return FEABC_OK;
}

feabc_status feabc_result_residual(const feabc_result *res, size_t row, double *residual)
{
  const auto *r = row_at(res, row);
  if (!r || !residual)
  {
    return fail(FEABC_ERR_CONFIG, "result_residual: bad argument");
  }
  *residual = r->residual;
  return FEABC_OK;
}

const char *feabc_result_csv(const feabc_result *res)
{
  return res ? res->csv.c_str() : "";
}

void feabc_result_free(feabc_result *res)
{
  delete res;
}

feabc_status feabc_plot(const char *csv_path, const char *out_dir, size_t *count)
{
  if (!csv_path || !out_dir)
  {
    return fail(FEABC_ERR_CONFIG, "plot: null argument");
  }
  return guard([&] {
    const auto files = feabc::harness::emit_plots(csv_path, out_dir);
    if (count)
    {
      *count = files.size();
    }
    return FEABC_OK;
  });
}

size_t feabc_check_suite_count(void)
{
  return feabc::harness::check_suites().size();
}

const char *feabc_check_suite_name(size_t index)
{
  static const std::vector<std::string> names = feabc::harness::check_suites();
  return index < names.size() ? names[index].c_str() : nullptr;
}

feabc_status feabc_check(const char *suite, feabc_report **out)
{
  if (!suite || !out)
  {
    return fail(FEABC_ERR_CONFIG, "check: null argument");
  }
  *out = nullptr;
  return guard([&] {
    auto rep = std::make_unique<feabc_report>();
    rep->lines = feabc::harness::run_check(suite);
    bool all = true;
    for (const auto &l : rep->lines)
    {
      all = all && l.pass;
    }
    *out = rep.release();
    return all ? FEABC_OK : fail(FEABC_ERR_CHECK, std::string("check '") + suite + "' failed");
  });
}

size_t feabc_report_lines(const feabc_report *rep)
{
  return rep ? rep->lines.size() : 0;
}

feabc_status feabc_report_line(const feabc_report *rep, size_t line, const char **id, int *pass,
                               const char **description, const char **detail)
{
  if (!rep || line >= rep->lines.size())
  {
    return fail(FEABC_ERR_CONFIG, "report_line: line out of range");
  }
  const auto &l = rep->lines[line];
  if (id)
  {
    *id = l.id.c_str();
  }
  if (pass)
  {
    *pass = l.pass ? 1 : 0;
  }
  if (description)
  {
    *description = l.description.c_str();
  }
  if (detail)
  {
    *detail = l.detail.c_str();
  }
  return FEABC_OK;
}

void feabc_report_free(feabc_report *rep)
{
  delete rep;
}

}  // extern "C"
