// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_HARNESS_HPP
#define FEABC_HARNESS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "feabc/assembly.hpp"
#include "feabc/reference.hpp"

namespace feabc::harness
{

enum class Dimension
{
  Planar,        // 2D annulus around a cylinder
  Axisymmetric,  // meridian of a sphere
};

//
// One scattering scenario. Parsed from flat "key = value" text; see
// config_keys() for the accepted keys. Sweeps are written as
//   sweep.<key> = v1, v2, ...       (Cartesian product over all sweep keys)
//   sweep.method = abc:p:NT, ...    (one entry per method column)
//   case.<label> = key=value ...    (joint overrides, one row group per case)
//
struct ScatterConfig
{
  std::string name = "run";
  Dimension dimension = Dimension::Planar;
  reference::Scatterer scatterer = reference::Scatterer::Cylinder;
  assembly::BoundaryKind bc = assembly::BoundaryKind::Soft;
  double k = 6.283185307179586;
  double r0 = 1.0;
  double R = 2.0;
  assembly::AbcKind abc = assembly::AbcKind::Kfe;
  int terms = 1;
  int degree = 2;
  double n_lambda = 10.0;  // used when both element counts are zero
  int radial_elements = 0;
  int angular_elements = 0;
  int quad_order = 0;
  double amplitude = 1.0;
  int ffp_samples = 720;
  bool record_time = true;  // false writes 0 seconds, for byte-identical output
  std::string output_dir = "out";

  // Sweep specification, kept as raw text and expanded by expand_sweep().
  std::map<std::string, std::vector<std::string>> sweep;
  std::vector<std::pair<std::string, std::string>> cases;
};

// Names of the scalar keys understood by apply_setting().
std::vector<std::string> config_keys();

// Set one scalar key from text. Throws ConfigError on unknown keys or bad values.
void apply_setting(ScatterConfig &cfg, const std::string &key, const std::string &value);

// Parse "key = value" lines ('#' starts a comment). Throws ConfigError.
ScatterConfig parse_config(const std::string &text);
ScatterConfig load_config(const std::filesystem::path &path);

// Check the invariants of a single scenario. Throws ConfigError.
void validate(const ScatterConfig &cfg);

// One scenario per sweep combination, in deterministic order: cases outermost,
// then methods, then the sweep keys in alphabetical order.
std::vector<ScatterConfig> expand_sweep(const ScatterConfig &cfg);

struct RunRecord
{
  ScatterConfig config;
  int N = 0;      // radial control points
  int m = 0;      // angular control points (unrolled)
  int dofs = 0;   // total unknowns
  double h = 0.0;
  reference::ErrorReport errors;
  double residual = 0.0;
  double seconds = 0.0;        // wall time of the whole run
  double solve_seconds = 0.0;  // wall time of the linear solve
  std::string status = "ok";   // "ok" or the error message of a failed row
};

// Build, assemble, solve and measure one scenario. Errors propagate.
RunRecord run_single(const ScatterConfig &cfg);

// CSV header and row in the fixed column order.
std::string csv_header();
std::string csv_row(const RunRecord &r);

// Output directory: the FEABC_OUTPUT_DIR environment variable if set, else the
// configured one.
std::filesystem::path output_dir(const ScatterConfig &cfg);

// run_single plus "<name>.csv" with one row in the output directory.
RunRecord run_and_record(const ScatterConfig &cfg, const std::filesystem::path &dir);

struct FitRecord
{
  std::string group;  // configuration columns shared by the rows of the fit
  std::string metric;
  reference::ConvergenceFit fit;
};

struct SweepResult
{
  std::vector<RunRecord> rows;
  std::vector<FitRecord> fits;  // h-sweeps with >= 3 successful rows
  int failures = 0;
};

// Run every combination; failed rows are recorded and the sweep continues.
// Writes "<name>.csv" and, when fits exist, "<name>_fit.csv".
SweepResult run_sweep(const ScatterConfig &cfg, const std::filesystem::path &dir);

// Least-squares orders for groups of rows that differ only in the mesh.
std::vector<FitRecord> fit_groups(const std::vector<RunRecord> &rows);

// Parsed CSV: header names and string cells.
struct CsvTable
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int column(const std::string &name) const;  // -1 if absent
};

CsvTable read_csv(const std::filesystem::path &path);

// SVG plots from a sweep CSV: log-log error against h per series, and heatmaps
// of the FFP error over (NT, n_lambda) and (NT, p) when the table spans such a
// grid. Returns the written files. Throws ConfigError on empty input.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path &csv,
                                              const std::filesystem::path &dir);

struct CheckResult
{
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

// Canonical scenario files shipped in configs/, by stem (table1, table2, ...).
std::vector<std::string> canonical_config_names();
std::string canonical_config_text(const std::string &name);

// Named acceptance suites: tables, lowfreq, closeboundary, sphere, bgt, properties.
std::vector<std::string> check_suites();
std::vector<CheckResult> run_check(const std::string &suite);

}  // namespace feabc::harness

#endif  // FEABC_HARNESS_HPP
