// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SparseLU>

#include "feabc/error.hpp"
#include "feabc/geometry.hpp"
#include "feabc/harness.hpp"
#include "feabc/specfun.hpp"
#include "feabc/splines.hpp"

namespace feabc::harness
{

namespace
{

constexpr double kPi = std::numbers::pi;
using complex = std::complex<double>;

struct Canonical
{
  const char *name;
  const char *text;
};

// Kept byte-identical with configs/<name>.cfg (checked by the harness tests).
const Canonical kCanonical[] = {
  {"table1", R"(# Soft cylinder, degree 2, eleven Karp terms: boundary error against n_lambda.
name = table1
dimension = 2d
scatterer = cylinder
bc = soft
k = 6.283185307179586
r0 = 1
R = 2
abc = kfe
terms = 11
degree = 2
sweep.n_lambda = 20, 23, 25, 29, 32
)"},
  {"table2", R"(# Soft cylinder, degree 3, ten Karp terms.
name = table2
dimension = 2d
scatterer = cylinder
bc = soft
k = 6.283185307179586
r0 = 1
R = 2
abc = kfe
terms = 10
degree = 3
sweep.n_lambda = 28, 30, 32, 34, 36
)"},
  {"table3", R"(# Soft cylinder, degree 4, eleven Karp terms.
name = table3
dimension = 2d
scatterer = cylinder
bc = soft
k = 6.283185307179586
r0 = 1
R = 2
abc = kfe
terms = 11
degree = 4
sweep.n_lambda = 26, 28, 30, 32, 34
)"},
  {"table4", R"(# Very low frequency soft cylinder: domain error per boundary radius and method.
name = table4
dimension = 2d
scatterer = cylinder
bc = soft
k = 0.01
r0 = 1
case.R1.1 = R=1.1 radial_elements=10 angular_elements=60
case.R2 = R=2 radial_elements=10 angular_elements=60
case.R3 = R=3 radial_elements=20 angular_elements=60
case.R5 = R=5 radial_elements=40 angular_elements=60
sweep.method = bgt2:1:1, kfe:1:1, kfe:2:1, kfe:2:3, kfe:5:3, kfe:10:3
)"},
  {"close_boundary", R"(# Artificial boundary at R = 1.05: farfield error against angular elements.
name = close_boundary
dimension = 2d
scatterer = cylinder
bc = soft
k = 6.283185307179586
r0 = 1
R = 1.05
abc = kfe
terms = 24
degree = 6
radial_elements = 3
angular_elements = 100
sweep.angular_elements = 100, 200, 300, 400, 500, 600, 700
)"},
  {"close_boundary_timing", R"(# Same accuracy target, close and distant artificial boundary.
name = close_boundary_timing
dimension = 2d
scatterer = cylinder
bc = soft
k = 6.283185307179586
r0 = 1
abc = kfe
degree = 5
n_lambda = 20
case.near = R=1.05 terms=15
case.far = R=5 terms=5
)"},
  {"bgt1_stagnation", R"(# First-order local condition at k = 10: farfield error stagnates.
name = bgt1_stagnation
dimension = 2d
scatterer = cylinder
bc = soft
k = 10
r0 = 1
R = 2
abc = bgt1
terms = 1
degree = 1
sweep.n_lambda = 15, 30, 50
)"},
  {"kfe4_order", R"(# Degree 1 with four Karp terms at k = 10: second-order convergence.
name = kfe4_order
dimension = 2d
scatterer = cylinder
bc = soft
k = 10
r0 = 1
R = 2
abc = kfe
terms = 4
degree = 1
sweep.n_lambda = 10, 13, 16, 19, 22
)"},
  {"kfe10_ffp", R"(# Degree 2 with ten Karp terms at k = 10, n_lambda = 50.
name = kfe10_ffp
dimension = 2d
scatterer = cylinder
bc = soft
k = 10
r0 = 1
R = 2
abc = kfe
terms = 10
degree = 2
n_lambda = 50
)"},
  {"sphere", R"(# Soft sphere, axisymmetric, twelve Wilcox terms.
name = sphere
dimension = axisym
scatterer = sphere
bc = soft
k = 6.283185307179586
r0 = 1
R = 2
abc = wfe
terms = 12
degree = 5
n_lambda = 16
)"},
};

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v, int digits = 2)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<RunRecord> run_all(const ScatterConfig &cfg)
{
  std::vector<RunRecord> out;
  for (const auto &c : expand_sweep(cfg))
  {
    out.push_back(run_single(c));
  }
  return out;
}

std::vector<RunRecord> run_canonical(const std::string &name)
{
  return run_all(parse_config(canonical_config_text(name)));
}

// Boundary errors within a factor of target values plus a fitted order.
CheckResult table_check(const std::string &id, const std::string &what,
                        const std::vector<RunRecord> &rows, const std::vector<double> &target,
                        double factor, double order, double order_tol)
{
  CheckResult r{id, what, true, {}};
  std::vector<double> h, e;
  std::string ratios;
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    h.push_back(rows[i].h);
    e.push_back(rows[i].errors.boundary);
    const double q = rows[i].errors.boundary / target[i];
    ratios += (i ? " " : "") + fixed(q);
    if (!(q <= factor && q >= 1.0 / factor))
    {
      r.pass = false;
    }
  }
  const double slope = reference::fit_order(h, e).slope;
  if (!(std::abs(slope - order) <= order_tol))
  {
    r.pass = false;
  }
  r.detail = "err/target = [" + ratios + "] (limit x" + fixed(factor, 0) + "), order " +
             fixed(slope) + " (want " + fixed(order) + " +- " + fixed(order_tol, 1) + ")";
  return r;
}

CheckResult check_table1()
{
  return table_check("A1", "degree 2, NT=11 boundary errors and order",
                     run_canonical("table1"), {2.95e-5, 1.86e-5, 1.47e-5, 9.65e-6, 6.94e-6}, 2.0,
                     3.03, 0.3);
}

CheckResult check_tables23()
{
  const auto a = table_check("A2", "", run_canonical("table2"),
                             {1.35e-6, 9.33e-7, 7.25e-7, 5.73e-7, 4.59e-7}, 3.0, 4.04, 0.3);
  const auto b = table_check("A2", "", run_canonical("table3"),
                             {6.14e-8, 4.15e-8, 2.59e-8, 1.88e-8, 1.42e-8}, 3.0, 5.25, 0.5);
  return {"A2", "degree 3 and 4 boundary errors and orders", a.pass && b.pass,
          "p=3: " + a.detail + "; p=4: " + b.detail};
}

CheckResult check_lowfreq()
{
  struct Column
  {
    assembly::AbcKind abc;
    int p;
    int terms;
    double lo;
    double hi;
    double target[4];  // R = 1.1, 2, 3, 5
  };
  // A cell matches if it lies in the band or within a decade of the target
  // value; the target values themselves do not all sit inside the bands.
  const Column columns[] = {
    {assembly::AbcKind::Bgt2, 1, 1, 1e-3, 1e0, {1.05e-2, 6.11e-2, 8.17e-2, 9.58e-2}},
    {assembly::AbcKind::Kfe, 1, 1, 1e-7, 1e-4, {3.69e-6, 5.66e-5, 6.62e-5, 7.38e-5}},
    {assembly::AbcKind::Kfe, 2, 3, 1e-9, 1e-6, {7.41e-8, 1.37e-6, 7.67e-7, 3.97e-7}},
    {assembly::AbcKind::Kfe, 10, 3, 0.0, 1e-10, {1.26e-12, 8.68e-13, 7.36e-13, 3.75e-13}},
  };
  const double radii[] = {1.1, 2.0, 3.0, 5.0};
  CheckResult r{"A3", "k=0.01 domain errors per method and radius", true, {}};
  int cells = 0;
  for (const auto &row : run_canonical("table4"))
  {
    const auto &c = row.config;
    for (const auto &col : columns)
    {
      if (c.abc != col.abc || c.degree != col.p || c.terms != col.terms)
      {
        continue;
      }
      int i = 0;
      while (i < 4 && std::abs(radii[i] - c.R) > 1e-9)
      {
        ++i;
      }
      if (i == 4)
      {
        continue;
      }
      ++cells;
      const double e = row.errors.domain;
      const double ref = col.target[i];
      const bool in_band = e >= col.lo && e <= col.hi;
      const bool near_ref = e >= ref / 10.0 && e <= ref * 10.0;
      // The highest degree must meet its bound outright.
      const bool ok = row.status == "ok" && (col.lo == 0.0 ? in_band : in_band || near_ref);
      r.pass = r.pass && ok;
      r.detail += (r.detail.empty() ? "" : " ") + std::string(ok ? "" : "!") + "R=" +
                  fixed(c.R, 1) + "/" + (col.abc == assembly::AbcKind::Bgt2 ? "BGT2" : "KFE") +
                  "-p" + std::to_string(col.p) + "-NT" + std::to_string(col.terms) + ":" + sci(e) +
                  (in_band ? "" : "(band)");
    }
  }
  r.pass = r.pass && cells == 16;
  return r;
}

CheckResult check_close_boundary()
{
  const auto rows = run_canonical("close_boundary");
  CheckResult r{"A4", "R=1.05 farfield error against m_e", true, {}};
  std::vector<double> lm, le;
  double running_min = INFINITY;
  bool trend = true;
  for (const auto &row : rows)
  {
    const double e = row.errors.ffp;
    lm.push_back(row.config.angular_elements);
    le.push_back(e);
    // Below the required level the error sits at the solver floor and may wander;
    // above it, allow at most a decade over the best so far.
    if (e > 10.0 * running_min && e > 1e-10)
    {
      trend = false;
    }
    running_min = std::min(running_min, e);
    r.detail += (r.detail.empty() ? "" : " ") + std::to_string(row.config.angular_elements) + ":" +
                sci(e);
  }
  // Decreasing in the least-squares sense: error against 1/m_e has positive slope.
  std::vector<double> inv;
  for (double m : lm)
  {
    inv.push_back(1.0 / m);
  }
  const double slope = reference::fit_order(inv, le).slope;
  trend = trend && slope > 0.0;
  const bool first = le.front() <= 1e-8;
  const bool last = le.back() <= 1e-10;
  r.pass = first && last && trend;
  r.detail += "; m_e=100 <= 1e-8: " + std::string(first ? "yes" : "no") +
              ", m_e=700 <= 1e-10: " + (last ? "yes" : "no") + ", trend slope " + fixed(slope) +
              (trend ? "" : " (not decreasing)");
  return r;
}

CheckResult check_close_boundary_timing()
{
  const auto rows = run_canonical("close_boundary_timing");
  const auto &near = rows.at(0);
  const auto &far = rows.at(1);
  CheckResult r{"T1", "R=1.05 solve faster than R=5", near.solve_seconds < far.solve_seconds, {}};
  r.detail = "R=1.05: DOF " + std::to_string(near.dofs) + ", " + fixed(near.solve_seconds, 3) +
             " s, boundary " + sci(near.errors.boundary) + "; R=5: DOF " +
             std::to_string(far.dofs) + ", " + fixed(far.solve_seconds, 3) + " s, boundary " +
             sci(far.errors.boundary);
  return r;
}

CheckResult check_bgt()
{
  CheckResult r{"A5", "k=10 local condition stagnation and expansion convergence", true, {}};
  const auto bgt = run_canonical("bgt1_stagnation");
  const double e15 = bgt.front().errors.ffp;
  const double e50 = bgt.back().errors.ffp;
  const bool stagnates = e50 > 0.5 * e15;

  const auto kfe4 = run_canonical("kfe4_order");
  std::vector<double> h, ed, ef;
  for (const auto &row : kfe4)
  {
    h.push_back(row.h);
    ed.push_back(row.errors.domain);
    ef.push_back(row.errors.ffp);
  }
  const double order = reference::fit_order(h, ed).slope;
  const double order_ffp = reference::fit_order(h, ef).slope;
  const bool quadratic = std::abs(order - 2.0) <= 0.4;

  const double e10 = run_canonical("kfe10_ffp").front().errors.ffp;
  const bool reaches = e10 <= 1e-4;

  r.pass = stagnates && quadratic && reaches;
  r.detail = "BGT1 ffp n15 " + sci(e15) + " n50 " + sci(e50) + " ratio " + fixed(e50 / e15) +
             " (> 0.5); KFE-4 domain order " + fixed(order) + " (2.0 +- 0.4, ffp order " +
             fixed(order_ffp) + "); p2 KFE-10 ffp " + sci(e10) + " (<= 1e-4)";
  return r;
}

CheckResult check_sphere()
{
  const auto row = run_canonical("sphere").front();
  return {"A6", "sphere boundary error", row.errors.boundary <= 3.5e-6,
          "boundary " + sci(row.errors.boundary) + " (<= 3.5e-6), DOF " + std::to_string(row.dofs)};
}

// ---- property suite ----

struct Property
{
  std::string name;
  double value;
  double limit;
};

double partition_of_unity()
{
  double worst = 0.0;
  for (auto kind : {geometry::PatchKind::Annulus, geometry::PatchKind::Meridian})
  {
    for (int p : {1, 2, 3, 5})
    {
      geometry::GridRequest g;
      g.kind = kind;
      g.k = 2.0 * kPi;
      g.degree = p;
      g.n_lambda = 8.0;
      const geometry::Patch patch(g);
      for (const auto *basis : {&patch.radial(), &patch.angular()})
      {
        const double a = basis->knots().front();
        const double b = basis->knots().back();
        for (int s = 0; s <= 997; ++s)
        {
          const auto v = basis->eval(a + (b - a) * s / 997.0);
          double sum = 0.0, dsum = 0.0;
          for (std::size_t i = 0; i < v.value.size(); ++i)
          {
            sum += v.value[i];
            dsum += v.d1[i];
          }
          worst = std::max({worst, std::abs(sum - 1.0), std::abs(dsum) / (1.0 + basis->size())});
        }
      }
    }
  }
  return worst;
}

double wronskians()
{
  double worst = 0.0;
  for (double x : {0.05, 0.7, 3.0, 12.5, 40.0, 150.0, 600.0})
  {
    const int nmax = static_cast<int>(x) + 30;
    const auto c = specfun::bessel_jy_sequence(nmax, x);
    const auto s = specfun::sph_bessel_jy_sequence(nmax, x);
    for (int n = 0; n < nmax; ++n)
    {
      if (std::isfinite(c.y[n + 1]))
      {
        const double w = c.j[n + 1] * c.y[n] - c.j[n] * c.y[n + 1];
        const double want = 2.0 / (kPi * x);
        worst = std::max(worst, std::abs(w - want) / want);
      }
      if (std::isfinite(s.y[n + 1]))
      {
        const double w = s.j[n + 1] * s.y[n] - s.j[n] * s.y[n + 1];
        const double want = 1.0 / (x * x);
        worst = std::max(worst, std::abs(w - want) / want);
      }
    }
  }
  return worst;
}

double circle_radius()
{
  double worst = 0.0;
  for (auto kind : {geometry::PatchKind::Annulus, geometry::PatchKind::Meridian})
  {
    geometry::GridRequest g;
    g.kind = kind;
    g.k = 2.0 * kPi;
    g.degree = 4;
    g.n_lambda = 12.0;
    const geometry::Patch patch(g);
    const auto &c = patch.boundary_curve();
    for (int s = 0; s <= 1000; ++s)
    {
      const double eta = c.knots.front() + (c.knots.back() - c.knots.front()) * s / 1000.0;
      worst = std::max(worst, std::abs(c.point(eta).norm() - 1.0));
      worst = std::max(worst, std::abs(patch.point(1.0, eta).norm() - patch.R()) / patch.R());
    }
  }
  return worst;
}

double refinement_invariance()
{
  double worst = 0.0;
  for (const auto &base : {splines::unit_circle(), splines::unit_meridian()})
  {
    splines::RefinementSpec spec;
    spec.target_degree = 5;
    const double a = base.knots.front();
    const double b = base.knots.back();
    for (int i = 1; i < 23; ++i)
    {
      spec.inserted_knots.push_back(a + (b - a) * i / 23.0);
    }
    const auto fine = splines::refine(base, spec);
    const auto split = splines::subdivide(splines::elevate_order(base), 3);
    for (int s = 0; s <= 1000; ++s)
    {
      const double eta = a + (b - a) * s / 1000.0;
      worst = std::max(worst, (fine.point(eta) - base.point(eta)).norm());
      worst = std::max(worst, (split.point(eta) - base.point(eta)).norm());
    }
  }
  return worst;
}

// Relative size of the discrete F_1 produced by the first recurrence from an
// angular eigenfunction, against its exact value.
std::pair<double, double> recurrence_identities()
{
  using SparseMatrix = assembly::SparseMatrix;
  auto solve_mass = [](const SparseMatrix &M, const Eigen::VectorXcd &rhs)
  {
    Eigen::SparseLU<SparseMatrix> lu(M);
    return Eigen::VectorXcd(lu.solve(rhs));
  };

  geometry::GridRequest g;
  g.k = 2.0 * kPi;
  g.degree = 4;
  g.n_lambda = 10.0;
  // Planar: 2 M F_1 + (M - K) G_0 = 0 with G_0 = cos(theta) gives F_1 = 0.
  const geometry::Patch annulus(g);
  const auto ta = geometry::boundary_trace(annulus, geometry::Edge::Outer);
  const auto ma = assembly::assemble_trace(ta, 0);
  const Eigen::VectorXcd g0 = assembly::trace_project(
    ta, [&](double eta) { return complex(std::cos(annulus.angle(eta))); }, 0);
  const Eigen::VectorXcd f1 = solve_mass(ma.M, -0.5 * ((ma.M - ma.K) * g0));
  const double planar = f1.norm() / g0.norm();

  // Axisymmetric: 2i M F_1 + K F_0 = 0 with F_0 = P_1 gives F_1 = i P_1.
  g.kind = geometry::PatchKind::Meridian;
  const geometry::Patch meridian(g);
  const auto tm = geometry::boundary_trace(meridian, geometry::Edge::Outer);
  const auto mm = assembly::assemble_trace(tm, 0);
  const Eigen::VectorXcd p1 = assembly::trace_project(
    tm, [&](double eta) { return complex(std::cos(meridian.angle(eta))); }, 0);
  const Eigen::VectorXcd s1 = solve_mass(mm.M, (mm.K * p1) / complex(0.0, -2.0));
  const double sphere = (s1 - complex(0.0, 1.0) * p1).norm() / p1.norm();
  return {planar, sphere};
}

double solver_residuals()
{
  struct Case
  {
    geometry::PatchKind kind;
    assembly::AbcKind abc;
    assembly::BoundaryKind bc;
    int p;
    int terms;
    double k;
    double R;
    double n_lambda;
  };
  const Case cases[] = {
    {geometry::PatchKind::Annulus, assembly::AbcKind::Kfe, assembly::BoundaryKind::Soft, 2, 1, 2 * kPi, 2.0, 8},
    {geometry::PatchKind::Annulus, assembly::AbcKind::Kfe, assembly::BoundaryKind::Soft, 3, 8, 2 * kPi, 2.0, 10},
    {geometry::PatchKind::Annulus, assembly::AbcKind::Kfe, assembly::BoundaryKind::Hard, 2, 5, 2 * kPi, 2.0, 8},
    {geometry::PatchKind::Annulus, assembly::AbcKind::Kfe, assembly::BoundaryKind::Soft, 4, 20, 2 * kPi, 1.1, 10},
    {geometry::PatchKind::Annulus, assembly::AbcKind::Kfe, assembly::BoundaryKind::Soft, 2, 3, 0.01, 2.0, 3000},
    {geometry::PatchKind::Annulus, assembly::AbcKind::Bgt1, assembly::BoundaryKind::Soft, 1, 1, 10.0, 2.0, 8},
    {geometry::PatchKind::Annulus, assembly::AbcKind::Bgt2, assembly::BoundaryKind::Hard, 2, 1, 10.0, 2.0, 8},
    {geometry::PatchKind::Meridian, assembly::AbcKind::Wfe, assembly::BoundaryKind::Soft, 3, 6, 2 * kPi, 2.0, 8},
    {geometry::PatchKind::Meridian, assembly::AbcKind::Wfe, assembly::BoundaryKind::Hard, 2, 10, 2 * kPi, 1.5, 8},
  };
  double worst = 0.0;
  for (const auto &c : cases)
  {
    geometry::GridRequest g;
    g.kind = c.kind;
    g.k = c.k;
    g.R = c.R;
    g.degree = c.p;
    g.n_lambda = c.n_lambda;
    const geometry::Patch patch(g);
    assembly::Problem pb;
    pb.patch = &patch;
    pb.k = c.k;
    pb.abc = c.abc;
    pb.bc = c.bc;
    pb.terms = c.terms;
    const auto sys = assembly::assemble_system(pb);
    linsolve::SolveReport rep;
    const Eigen::VectorXcd x = assembly::solve_system(pb, sys, &rep);
    worst = std::max(worst, (sys.A * x - sys.b).norm() / sys.b.norm());
  }
  return worst;
}

double exact_boundary_condition()
{
  double worst = 0.0;
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (double k : {0.01, 1.0, 2.0 * kPi, 20.0})
  {
    const reference::ExactSolution cyl(reference::Scatterer::Cylinder, assembly::BoundaryKind::Soft, k, 1.0);
    const reference::ExactSolution sph(reference::Scatterer::Sphere, assembly::BoundaryKind::Soft, k, 1.0);
    for (int s = 0; s < 100; ++s)
    {
      const double th = angle(gen);
      const complex uinc = std::exp(complex(0.0, k * std::cos(th)));
      worst = std::max(worst, std::abs(cyl.field(1.0, th) + uinc));
      worst = std::max(worst, std::abs(cyl.field(1.0, -th) + uinc));
      worst = std::max(worst, std::abs(sph.field(1.0, th) + uinc));
    }
  }
  return worst;
}

CheckResult check_properties()
{
  const auto [planar, sphere] = recurrence_identities();
  const std::vector<Property> props = {
    {"partition of unity", partition_of_unity(), 1e-13},
    {"Bessel Wronskians", wronskians(), 1e-11},
    {"exact circle radius", circle_radius(), 1e-12},
    {"refinement invariance", refinement_invariance(), 1e-12},
    {"planar F_1 from cos", planar, 1e-8},
    {"sphere F_1 = i P_1", sphere, 1e-8},
    {"solver residual", solver_residuals(), 1e-10},
    {"exact boundary condition", exact_boundary_condition(), 1e-12},
  };
  CheckResult r{"A7", "property suite", true, {}};
  for (const auto &p : props)
  {
    const bool ok = p.value <= p.limit;
    r.pass = r.pass && ok;
    r.detail += (r.detail.empty() ? "" : "; ") + p.name + " " + sci(p.value) + (ok ? " <= " : " > ") +
                sci(p.limit);
  }
  return r;
}

// Runs one check; a library error turns into a failed line instead of an abort.
template <class F>
CheckResult guarded(const char *id, const char *what, F &&f)
{
  try
  {
    return f();
  }
  catch (const std::exception &e)
  {
    return {id, what, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

std::vector<std::string> canonical_config_names()
{
  std::vector<std::string> names;
  for (const auto &c : kCanonical)
  {
    names.push_back(c.name);
  }
  return names;
}

std::string canonical_config_text(const std::string &name)
{
  for (const auto &c : kCanonical)
  {
    if (name == c.name)
    {
      return c.text;
    }
  }
  throw ConfigError("no canonical configuration named '" + name + "'");
}

std::vector<std::string> check_suites()
{
  return {"tables", "lowfreq", "closeboundary", "sphere", "bgt", "properties"};
}

std::vector<CheckResult> run_check(const std::string &suite)
{
  if (suite == "tables")
  {
    return {guarded("A1", "degree 2 table", check_table1),
            guarded("A2", "degree 3 and 4 tables", check_tables23)};
  }
  if (suite == "lowfreq")
  {
    return {guarded("A3", "low frequency table", check_lowfreq)};
  }
  if (suite == "closeboundary")
  {
    return {guarded("A4", "close boundary", check_close_boundary),
            guarded("T1", "close boundary timing", check_close_boundary_timing)};
  }
  if (suite == "sphere")
  {
    return {guarded("A6", "sphere", check_sphere)};
  }
  if (suite == "bgt")
  {
    return {guarded("A5", "local conditions", check_bgt)};
  }
  if (suite == "properties")
  {
    return {guarded("A7", "property suite", check_properties)};
  }
  throw ConfigError("unknown check suite '" + suite + "'");
}

}  // namespace feabc::harness
