// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_REFERENCE_HPP
#define FEABC_REFERENCE_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "feabc/assembly.hpp"

namespace feabc::reference
{

using complex = std::complex<double>;
using assembly::BoundaryKind;

enum class Scatterer
{
  Cylinder,
  Sphere,
};

//
// Eigenfunction series of the field scattered by a plane wave A e^{ikx}
// (cylinder) or A e^{ikz} (sphere):
//   cylinder: u = sum_n a_n H_n(kr) cos(n theta), a_n = -A eps_n i^n J_n(kr0)/H_n(kr0)
//   sphere:   u = sum_n a_n h_n(kr) P_n(cos theta), a_n = -A (2n+1) i^n j_n(kr0)/h_n(kr0)
// with derivative ratios for the hard case. The series runs to ceil(k r0) +
// extra_terms and stops early once the term size at r0 drops below
// tail_tolerance times its peak.
//
class ExactSolution
{
public:
  ExactSolution(Scatterer s, BoundaryKind bc, double k, double r0, double amplitude = 1.0,
                int extra_terms = 40, double tail_tolerance = 1e-18);

  Scatterer scatterer() const { return scatterer_; }
  double k() const { return k_; }
  double r0() const { return r0_; }
  int n_max() const { return static_cast<int>(a_.size()) - 1; }
  const std::vector<complex> &coefficients() const { return a_; }

  // r >= r0; theta measured from +x (cylinder) or +z (sphere).
  complex field(double r, double theta) const;

  // Point of the computational plane: (x, y) or (rho, z).
  complex field(const Eigen::Vector2d &x) const;

  // Farfield pattern with u ~ e^{ikr} f / sqrt(r) (cylinder) or e^{ikr} f / r (sphere).
  complex ffp(double theta) const;

  // Exact Karp coefficients (F_l(theta), G_l(theta)) of the cylinder field.
  std::pair<complex, complex> karp(int l, double theta) const;

private:
  Scatterer scatterer_;
  double k_;
  double r0_;
  std::vector<complex> a_;
};

// Incident plane wave in the same coordinates as ExactSolution::field.
complex incident_wave(Scatterer s, double k, double amplitude, const Eigen::Vector2d &x);

// Discrete field u_h at a parametric point from the solution vector.
complex field_value(const geometry::Patch &patch, const Eigen::VectorXcd &x, double xi, double eta);

// Discrete radial derivative d_r u_h at a parametric point.
complex field_dr(const geometry::Patch &patch, const Eigen::VectorXcd &x, double xi, double eta);

// Angle samples theta_s = s * span / n (span 2 pi on the plane, pi on the meridian;
// the meridian includes both poles).
std::vector<double> ffp_angles(geometry::PatchKind kind, int samples);

// Farfield pattern of the outgoing field whose trace on S_R is u_h(R, theta):
// Fourier coefficients of the trace, each mode continued with H_n(kr)/H_n(kR).
std::vector<complex> trace_ffp(const geometry::Patch &patch, double k, const Eigen::VectorXcd &x,
                               std::span<const double> angles);

// Numerical farfield pattern at the given angles: from F_0, G_0 (KFE), F_0 (WFE),
// or the exterior continuation of the discrete trace on S_R (BGT).
std::vector<complex> numeric_ffp(const assembly::Problem &pb, const assembly::DofLayout &layout,
                                 const Eigen::VectorXcd &x, std::span<const double> angles);

struct ErrorReport
{
  double domain = 0.0;    // relative L2 over the computational domain
  double boundary = 0.0;  // relative L2 over S_R
  double ffp = 0.0;       // relative discrete L2 over the FFP samples
};

// Relative errors of the solution vector against the exact field. quad_order
// 0 selects p + 2 Gauss points per direction.
ErrorReport l2_errors(const assembly::Problem &pb, const assembly::DofLayout &layout,
                      const Eigen::VectorXcd &x, const ExactSolution &exact, int quad_order = 0,
                      int ffp_samples = 720);

struct ConvergenceFit
{
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;         // root mean square of the log-log fit residuals
  std::vector<double> pairwise;  // log(e_i/e_{i+1}) / log(h_i/h_{i+1})
};

// Least-squares slope of log(error) against log(h). Needs >= 3 pairs with
// positive values; throws DomainError otherwise.
ConvergenceFit fit_order(std::span<const double> h, std::span<const double> error);

}  // namespace feabc::reference

#endif  // FEABC_REFERENCE_HPP
