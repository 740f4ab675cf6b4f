// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "feabc/error.hpp"
#include "feabc/geometry.hpp"
#include "feabc/harness.hpp"

namespace feabc::harness
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *spec, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

const char *abc_name(assembly::AbcKind a)
{
  switch (a)
  {
  case assembly::AbcKind::Kfe:
    return "KFE";
  case assembly::AbcKind::Wfe:
    return "WFE";
  case assembly::AbcKind::Bgt1:
    return "BGT1";
  case assembly::AbcKind::Bgt2:
    return "BGT2";
  }
  return "?";
}

std::string csv_escape(const std::string &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
  {
    return s;
  }
  std::string out = "\"";
  for (char c : s)
  {
    out += c == '"' ? std::string("\"\"") : std::string(1, c == '\n' ? ' ' : c);
  }
  return out + "\"";
}

// Configuration columns that identify a scenario up to its mesh.
std::string group_key(const RunRecord &r)
{
  const auto &c = r.config;
  std::ostringstream os;
  os << (c.dimension == Dimension::Planar ? "2d" : "axisym") << ' '
     << (c.scatterer == reference::Scatterer::Cylinder ? "cylinder" : "sphere") << " Z="
     << (c.bc == assembly::BoundaryKind::Soft ? 0 : 1) << " k=" << fmt("%.10g", c.k)
     << " r0=" << fmt("%.10g", c.r0) << " R=" << fmt("%.10g", c.R) << ' ' << abc_name(c.abc)
     << " NT=" << c.terms << " p=" << c.degree;
  return os.str();
}

void write_text(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw Error("cannot write '" + path.string() + "'");
  }
  out << text;
  if (!out)
  {
    throw Error("write failed for '" + path.string() + "'");
  }
}

}  // namespace

RunRecord run_single(const ScatterConfig &cfg)
{
  if (!cfg.sweep.empty() || !cfg.cases.empty())
  {
    throw ConfigError("run_single: configuration contains sweep entries; use run_sweep");
  }
  validate(cfg);
  const auto t0 = Clock::now();

  geometry::GridRequest g;
  g.kind = cfg.dimension == Dimension::Planar ? geometry::PatchKind::Annulus
                                              : geometry::PatchKind::Meridian;
  g.r0 = cfg.r0;
  g.R = cfg.R;
  g.k = cfg.k;
  g.degree = cfg.degree;
  if (cfg.radial_elements > 0)
  {
    g.radial_elements = cfg.radial_elements;
    g.angular_elements = cfg.angular_elements;
  }
  else
  {
    g.n_lambda = cfg.n_lambda;
  }
  const geometry::Patch patch(g);

  assembly::Problem pb;
  pb.patch = &patch;
  pb.k = cfg.k;
  pb.abc = cfg.abc;
  pb.terms = cfg.terms;
  pb.bc = cfg.bc;
  pb.quad_order = cfg.quad_order;
  pb.amplitude = cfg.amplitude;

  const auto sys = assembly::assemble_system(pb);
  linsolve::SolveReport rep;
  const auto ts = Clock::now();
  const Eigen::VectorXcd x = assembly::solve_system(pb, sys, &rep);
  const double solve_seconds = seconds_since(ts);

  RunRecord r;
  r.config = cfg;
  r.N = patch.radial_count();
  r.m = patch.angular_count();
  r.dofs = sys.layout.total();
  r.h = patch.h();
  r.residual = rep.residual;
  if (cfg.amplitude == 0.0)
  {
    // The exact field vanishes: report absolute errors, i.e. the size of u_h.
    const double a = x.cwiseAbs().maxCoeff();
    r.errors = {a, a, a};
  }
  else
  {
    const reference::ExactSolution exact(cfg.scatterer, cfg.bc, cfg.k, cfg.r0, cfg.amplitude);
    r.errors = reference::l2_errors(pb, sys.layout, x, exact, 0, cfg.ffp_samples);
  }
  r.seconds = cfg.record_time ? seconds_since(t0) : 0.0;
  r.solve_seconds = cfg.record_time ? solve_seconds : 0.0;
  return r;
}

std::string csv_header()
{
  return "dimension,scatterer,Z,k,r_0,R,abc,NT,p,n_lambda,N,m,DOF,h,"
         "err_domain,err_boundary,err_ffp,residual,seconds,solve_seconds,status";
}

std::string csv_row(const RunRecord &r)
{
  const auto &c = r.config;
  const bool explicit_grid = c.radial_elements > 0;
  std::ostringstream os;
  os << (c.dimension == Dimension::Planar ? "2d" : "axisym") << ','
     << (c.scatterer == reference::Scatterer::Cylinder ? "cylinder" : "sphere") << ','
     << (c.bc == assembly::BoundaryKind::Soft ? 0 : 1) << ',' << fmt("%.10g", c.k) << ','
     << fmt("%.10g", c.r0) << ',' << fmt("%.10g", c.R) << ',' << abc_name(c.abc) << ',' << c.terms
     << ',' << c.degree << ',' << (explicit_grid ? std::string() : fmt("%.10g", c.n_lambda)) << ','
     << r.N << ',' << r.m << ',' << r.dofs << ',' << fmt("%.6e", r.h) << ','
     << fmt("%.6e", r.errors.domain) << ',' << fmt("%.6e", r.errors.boundary) << ','
     << fmt("%.6e", r.errors.ffp) << ',' << fmt("%.3e", r.residual) << ','
     << fmt("%.4f", r.seconds) << ',' << fmt("%.4f", r.solve_seconds) << ','
     << csv_escape(r.status);
  return os.str();
}

std::filesystem::path output_dir(const ScatterConfig &cfg)
{
  if (const char *env = std::getenv("FEABC_OUTPUT_DIR"); env && *env)
  {
    return env;
  }
  return cfg.output_dir;
}

RunRecord run_and_record(const ScatterConfig &cfg, const std::filesystem::path &dir)
{
  RunRecord r = run_single(cfg);
  std::filesystem::create_directories(dir);
  write_text(dir / (cfg.name + ".csv"), csv_header() + "\n" + csv_row(r) + "\n");
  return r;
}

std::vector<FitRecord> fit_groups(const std::vector<RunRecord> &rows)
{
  std::map<std::string, std::vector<const RunRecord *>> groups;
  std::vector<std::string> order;
  for (const auto &r : rows)
  {
    if (r.status != "ok")
    {
      continue;
    }
    const std::string key = group_key(r);
    if (!groups.count(key))
    {
      order.push_back(key);
    }
    groups[key].push_back(&r);
  }
  std::vector<FitRecord> fits;
  for (const auto &key : order)
  {
    const auto &g = groups[key];
    std::set<double> distinct;
    for (const auto *r : g)
    {
      distinct.insert(r->h);
    }
    if (distinct.size() < 3 || distinct.size() != g.size())
    {
      continue;
    }
    const std::pair<const char *, double reference::ErrorReport::*> metrics[] = {
      {"err_domain", &reference::ErrorReport::domain},
      {"err_boundary", &reference::ErrorReport::boundary},
      {"err_ffp", &reference::ErrorReport::ffp},
    };
    for (const auto &[name, member] : metrics)
    {
      std::vector<double> h, e;
      for (const auto *r : g)
      {
        h.push_back(r->h);
        e.push_back(r->errors.*member);
      }
      try
      {
        fits.push_back({key, name, reference::fit_order(h, e)});
      }
      catch (const DomainError &)
      {
        // Zero errors (exact reproduction) have no order.
      }
    }
  }
  return fits;
}

SweepResult run_sweep(const ScatterConfig &cfg, const std::filesystem::path &dir)
{
  validate(cfg);
  const auto configs = expand_sweep(cfg);
  if (configs.empty())
  {
    throw ConfigError("sweep: no combinations");
  }
  SweepResult out;
  for (const auto &c : configs)
  {
    try
    {
      out.rows.push_back(run_single(c));
    }
    catch (const Error &e)
    {
      RunRecord r;
      r.config = c;
      r.errors = {std::nan(""), std::nan(""), std::nan("")};
      r.residual = std::nan("");
      r.status = e.what();
      out.rows.push_back(r);
      ++out.failures;
    }
  }
  out.fits = fit_groups(out.rows);

  std::filesystem::create_directories(dir);
  std::string text = csv_header() + "\n";
  for (const auto &r : out.rows)
  {
    text += csv_row(r) + "\n";
  }
  write_text(dir / (cfg.name + ".csv"), text);
  if (!out.fits.empty())
  {
    std::string ft = "group,metric,slope,intercept,fit_residual,pairwise\n";
    for (const auto &f : out.fits)
    {
      std::string pw;
      for (std::size_t i = 0; i < f.fit.pairwise.size(); ++i)
      {
        pw += (i ? ";" : "") + fmt("%.3f", f.fit.pairwise[i]);
      }
      ft += csv_escape(f.group) + ',' + f.metric + ',' + fmt("%.4f", f.fit.slope) + ',' +
            fmt("%.4f", f.fit.intercept) + ',' + fmt("%.3e", f.fit.residual) + ',' + pw + "\n";
    }
    write_text(dir / (cfg.name + "_fit.csv"), ft);
  }
  return out;
}

}  // namespace feabc::harness
