// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Talks to the solver only through the C interface.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "feabc/feabc.h"

namespace
{

int report(feabc_status st)
{
  if (st != FEABC_OK)
  {
    std::fprintf(stderr, "feabc: %s\n", feabc_last_error());
  }
  return static_cast<int>(st);
}

// Load a configuration and apply "key=value" overrides in order.
feabc_status load(const std::string &path, const std::vector<std::string> &sets,
                  feabc_config **cfg)
{
  if (const feabc_status st = feabc_config_load(path.c_str(), cfg); st != FEABC_OK)
  {
    return st;
  }
  for (const auto &s : sets)
  {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
    {
      feabc_config_free(*cfg);
      *cfg = nullptr;
      std::fprintf(stderr, "feabc: --set expects key=value, got '%s'\n", s.c_str());
      return FEABC_ERR_CONFIG;
    }
    const std::string key = s.substr(0, eq);
    const std::string value = s.substr(eq + 1);
    if (const feabc_status st = feabc_config_set(*cfg, key.c_str(), value.c_str()); st != FEABC_OK)
    {
      feabc_config_free(*cfg);
      *cfg = nullptr;
      return st;
    }
  }
  return FEABC_OK;
}

void print_rows(const feabc_result *res)
{
  std::printf("%6s %6s %8s %12s %12s %12s %12s %10s\n", "N", "m", "DOF", "h", "err_domain",
              "err_boundary", "err_ffp", "residual");
  for (size_t i = 0; i < feabc_result_rows(res); ++i)
  {
    int n = 0, m = 0, dofs = 0;
    double h = 0, ed = 0, eb = 0, ef = 0, res_norm = 0;
    feabc_result_mesh(res, i, &n, &m, &dofs, &h);
    feabc_result_errors(res, i, &ed, &eb, &ef);
    feabc_result_residual(res, i, &res_norm);
    std::printf("%6d %6d %8d %12.4e %12.4e %12.4e %12.4e %10.2e\n", n, m, dofs, h, ed, eb, ef,
                res_norm);
  }
  std::printf("wrote %s\n", feabc_result_csv(res));
}

int run_solve(const std::string &path, const std::vector<std::string> &sets,
              const std::string &out, bool sweep)
{
  feabc_config *cfg = nullptr;
  if (const feabc_status st = load(path, sets, &cfg); st != FEABC_OK)
  {
    return report(st);
  }
  feabc_result *res = nullptr;
  const char *dir = out.empty() ? nullptr : out.c_str();
  feabc_status st = sweep ? feabc_sweep(cfg, dir, &res) : feabc_solve(cfg, dir, &res);
  feabc_config_free(cfg);
  if (st != FEABC_OK)
  {
    return report(st);
  }
  print_rows(res);
  const int failures = feabc_result_failures(res);
  feabc_result_free(res);
  if (failures > 0)
  {
    std::fprintf(stderr, "feabc: %d sweep row(s) failed; see the status column\n", failures);
    return FEABC_ERR_SOLVER;
  }
  return FEABC_OK;
}

int run_plot(const std::string &csv, const std::string &out)
{
  size_t count = 0;
  if (const feabc_status st = feabc_plot(csv.c_str(), out.c_str(), &count); st != FEABC_OK)
  {
    return report(st);
  }
  std::printf("wrote %zu plot(s) to %s\n", count, out.c_str());
  return FEABC_OK;
}

int run_checks(std::vector<std::string> suites)
{
  if (suites.empty())
  {
    for (size_t i = 0; i < feabc_check_suite_count(); ++i)
    {
      suites.emplace_back(feabc_check_suite_name(i));
    }
  }
  int worst = FEABC_OK;
  for (const auto &s : suites)
  {
    feabc_report *rep = nullptr;
    const feabc_status st = feabc_check(s.c_str(), &rep);
    if (!rep)
    {
      return report(st);
    }
    for (size_t i = 0; i < feabc_report_lines(rep); ++i)
    {
      const char *id = nullptr, *desc = nullptr, *detail = nullptr;
      int pass = 0;
      feabc_report_line(rep, i, &id, &pass, &desc, &detail);
      std::printf("%s %s: %s (%s)\n", id, pass ? "PASS" : "FAIL", desc, detail);
      std::fflush(stdout);
    }
    feabc_report_free(rep);
    if (st != FEABC_OK)
    {
      worst = st;
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"feabc: exterior Helmholtz scattering with NURBS finite elements and "
               "farfield boundary conditions"};
  app.require_subcommand(1);

  std::string config, out, csv;
  std::vector<std::string> sets, suites;

  auto *solve = app.add_subcommand("solve", "solve one scenario (sweep entries are ignored)");
  solve->add_option("-c,--config", config, "scenario file")->required()->check(CLI::ExistingFile);
  solve->add_option("-s,--set", sets, "override, key=value (repeatable)");
  solve->add_option("-o,--out", out, "output directory");

  auto *sweep = app.add_subcommand("sweep", "run every sweep combination of a scenario");
  sweep->add_option("-c,--config", config, "scenario file")->required()->check(CLI::ExistingFile);
  sweep->add_option("-s,--set", sets, "override, key=value (repeatable)");
  sweep->add_option("-o,--out", out, "output directory");

  auto *plot = app.add_subcommand("plot", "SVG convergence plots and heatmaps from a sweep CSV");
  plot->add_option("csv", csv, "sweep CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("-o,--out", out, "output directory")->default_val("plots");

  auto *check = app.add_subcommand("check", "run acceptance suites (all if none given)");
  check->add_option("suites", suites, "suite names");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : FEABC_ERR_CONFIG;
  }

  if (*solve)
  {
    return run_solve(config, sets, out, false);
  }
  if (*sweep)
  {
    return run_solve(config, sets, out, true);
  }
  if (*plot)
  {
    return run_plot(csv, out);
  }
  return run_checks(suites);
}
