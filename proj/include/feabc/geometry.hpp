// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_GEOMETRY_HPP
#define FEABC_GEOMETRY_HPP

#include <vector>

#include <Eigen/Core>

#include "feabc/splines.hpp"

namespace feabc::geometry
{

enum class PatchKind
{
  Annulus,   // planar ring r0 <= |x| <= R
  Meridian,  // (rho, z) half ring of an axisymmetric body, 0 <= theta <= pi
};

enum class Edge
{
  Inner,  // scatterer surface r = r0
  Outer,  // artificial boundary r = R
};

// Discretisation request. With n_lambda > 0 the grid follows the
// control-points-per-wavelength rule; otherwise the element counts are used
// verbatim (angular_elements counts elements over the whole angular range).
struct GridRequest
{
  PatchKind kind = PatchKind::Annulus;
  double r0 = 1.0;
  double R = 2.0;
  double k = 1.0;
  int degree = 2;
  double n_lambda = 0.0;
  int radial_elements = 0;
  int angular_elements = 0;
};

struct MapPoint
{
  Eigen::Vector2d x;
  Eigen::Matrix2d J;  // columns d/dxi, d/deta
  double det = 0.0;
  Eigen::Matrix2d inv;
};

//
// Tensor-product patch x(xi, eta) = r(xi) c(eta) with r linear from r0 to R and
// c the exact unit circle (or meridian half circle). The solution space is the
// product of an open polynomial radial basis and the refined angular basis.
//
class Patch
{
public:
  explicit Patch(const GridRequest &req);

  PatchKind kind() const { return kind_; }
  double r0() const { return r0_; }
  double R() const { return R_; }
  int degree() const { return radial_.degree(); }

  const splines::NurbsBasis &radial() const { return radial_; }
  const splines::NurbsBasis &angular() const { return angular_; }
  const splines::NurbsCurve &boundary_curve() const { return curve_; }

  // Radial control points N, unrolled angular control points m, and unique
  // angular DOFs (m - 1 on the closed annulus, m on the meridian).
  int radial_count() const { return radial_.size(); }
  int angular_count() const { return angular_.size(); }
  int angular_unique() const { return angular_unique_; }
  int num_dofs() const { return radial_count() * angular_unique_; }

  // Global DOF of radial function i and unrolled angular function j.
  int dof(int i, int j) const { return i * angular_unique_ + angular_map_[j]; }
  const std::vector<int> &angular_map() const { return angular_map_; }

  // Mesh size along the scatterer: arc length over the angular control count.
  double h() const;

  Eigen::Vector2d point(double xi, double eta) const;
  MapPoint jacobian(double xi, double eta) const;

  // Polar angle of the boundary point c(eta): atan2 on the annulus, the angle
  // from the positive z axis on the meridian.
  double angle(double eta) const;

  // Inverse of angle(): the boundary parameter of polar angle theta.
  double eta_of_angle(double theta) const;

private:
  PatchKind kind_;
  double r0_;
  double R_;
  splines::NurbsBasis radial_;
  splines::NurbsBasis angular_;
  splines::NurbsCurve curve_;
  std::vector<int> angular_map_;
  int angular_unique_;
};

struct Element
{
  int radial_span;
  int angular_span;
  double xi0, xi1;
  double eta0, eta1;
  std::vector<int> dofs;  // (p+1)^2 entries, radial-major: a * (p+1) + b
};

struct ElementMesh
{
  std::vector<Element> elements;
};

ElementMesh build_mesh(const Patch &patch);

// Planar annulus.
Patch build_annulus(const GridRequest &req);

// Axisymmetric meridian half annulus.
Patch build_meridian(const GridRequest &req);

//
// Angular basis restricted to one circular edge with its DOF numbering and
// surface measure. On the annulus ds = r |c'| deta; on the meridian the
// axisymmetric factor r^2 sin(theta) |c'| deta (2 pi dropped) is used.
//
struct BoundaryTrace
{
  Edge edge;
  double radius;
  const Patch *patch;
  std::vector<int> dofs;  // unrolled angular index -> global DOF

  double measure(double eta) const;
};

BoundaryTrace boundary_trace(const Patch &patch, Edge edge);

}  // namespace feabc::geometry

#endif  // FEABC_GEOMETRY_HPP
