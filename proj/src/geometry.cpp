// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "feabc/error.hpp"

namespace feabc::geometry
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Counts
{
  int radial_basis;
  int arc_elements;
};

// Arcs making up the boundary curve.
int arc_count(PatchKind kind) { return kind == PatchKind::Annulus ? 4 : 2; }

Counts grid_counts(const GridRequest &req)
{
  const int p = req.degree;
  const int arcs = arc_count(req.kind);
  Counts c{};
  if (req.n_lambda > 0.0)
  {
    // Angular control spacing lambda / n_lambda along the scatterer, rounded
    // down to a whole number of control points per arc.
    const double perimeter_points = req.k * req.r0 * req.n_lambda * (arcs / 4.0);
    const int q = static_cast<int>(std::floor(perimeter_points / arcs));
    c.arc_elements = q - p + 1;
    const double radial = (req.R - req.r0) * req.k * req.n_lambda / kTwoPi;
    c.radial_basis = std::max(p + 1, static_cast<int>(std::ceil(radial - 1e-9)));
    if (c.arc_elements < 1)
    {
      throw DomainError("build: n_lambda too small for degree " + std::to_string(p) +
                        " (fewer than one element per arc)");
    }
  }
  else
  {
    if (req.radial_elements < 1 || req.angular_elements < arcs)
    {
      throw DomainError("build: element counts must be >= 1 radially and >= " +
                        std::to_string(arcs) + " angularly");
    }
    if (req.angular_elements % arcs != 0)
    {
      throw DomainError("build: angular element count must be a multiple of " +
                        std::to_string(arcs));
    }
    c.radial_basis = req.radial_elements + p;
    c.arc_elements = req.angular_elements / arcs;
  }
  return c;
}

splines::NurbsBasis angular_basis(const splines::NurbsCurve &curve, int p, int arc_elements)
{
  if (p >= 2)
  {
    splines::RefinementSpec spec;
    spec.target_degree = p;
    return splines::subdivide(splines::refine(curve, spec), arc_elements).basis();
  }
  // Linear basis on the same breakpoints; the geometry stays exactly quadratic.
  const auto breaks = splines::subdivide(curve, arc_elements).knots.breakpoints();
  std::vector<double> knots;
  knots.push_back(breaks.front());
  knots.insert(knots.end(), breaks.begin(), breaks.end());
  knots.push_back(breaks.back());
  return splines::NurbsBasis::polynomial(splines::KnotVector(std::move(knots), 1));
}

void validate(const GridRequest &req)
{
  if (!(req.r0 > 0.0) || !(req.R > req.r0))
  {
    throw DomainError("build: need R > r0 > 0");
  }
  if (req.degree < 1)
  {
    throw DomainError("build: degree must be >= 1");
  }
  if (req.n_lambda > 0.0 && !(req.k > 0.0))
  {
    throw DomainError("build: wavenumber must be positive");
  }
}

}  // namespace

Patch::Patch(const GridRequest &req)
  : kind_(req.kind),
    r0_(req.r0),
    R_(req.R),
    radial_(splines::NurbsBasis::polynomial(splines::KnotVector::open_uniform(1, 2))),
    angular_(radial_),
    curve_(req.kind == PatchKind::Annulus ? splines::unit_circle() : splines::unit_meridian()),
    angular_unique_(0)
{
  validate(req);
  const Counts c = grid_counts(req);
  radial_ = splines::NurbsBasis::polynomial(
    splines::KnotVector::open_uniform(req.degree, c.radial_basis));
  angular_ = angular_basis(curve_, req.degree, c.arc_elements);
  const int m = angular_.size();
  angular_map_.resize(m);
  if (kind_ == PatchKind::Annulus)
  {
    // The end basis functions of the unrolled circle are both interpolatory
    // at the seam point, so identifying them gives a C0 periodic space.
    for (int j = 0; j < m - 1; ++j)
    {
      angular_map_[j] = j;
    }
    angular_map_[m - 1] = 0;
    angular_unique_ = m - 1;
  }
  else
  {
    for (int j = 0; j < m; ++j)
    {
      angular_map_[j] = j;
    }
    angular_unique_ = m;
  }
}

double Patch::h() const
{
  const double arc = kind_ == PatchKind::Annulus ? kTwoPi * r0_ : std::numbers::pi * r0_;
  return arc / angular_count();
}

Eigen::Vector2d Patch::point(double xi, double eta) const
{
  return (r0_ + (R_ - r0_) * xi) * curve_.point(eta);
}

MapPoint Patch::jacobian(double xi, double eta) const
{
  const splines::BasisValues b = curve_.basis().eval(eta);
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  Eigen::Vector2d dc = Eigen::Vector2d::Zero();
  for (std::size_t a = 0; a < b.value.size(); ++a)
  {
    c += b.value[a] * curve_.points[b.first + a];
    dc += b.d1[a] * curve_.points[b.first + a];
  }
  const double r = r0_ + (R_ - r0_) * xi;
  MapPoint mp;
  mp.x = r * c;
  mp.J.col(0) = (R_ - r0_) * c;
  mp.J.col(1) = r * dc;
  mp.det = mp.J.determinant();
  if (!(mp.det > 0.0))
  {
    throw DomainError("jacobian: nonpositive determinant");
  }
  mp.inv = mp.J.inverse();
  return mp;
}

double Patch::angle(double eta) const
{
  const Eigen::Vector2d c = curve_.point(eta);
  if (kind_ == PatchKind::Annulus)
  {
    double t = std::atan2(c.y(), c.x());
    return t < 0.0 ? t + kTwoPi : t;
  }
  return std::atan2(c.x(), c.y());
}

double Patch::eta_of_angle(double theta) const
{
  const double span = kind_ == PatchKind::Annulus ? kTwoPi : std::numbers::pi;
  // Tolerate rounding at the ends of the range.
  if (!(theta >= -1e-12 && theta <= span + 1e-12))
  {
    throw DomainError("eta_of_angle: angle outside the boundary range");
  }
  theta = std::clamp(theta, 0.0, span);
  // On the annulus the angle grows with eta; on the meridian it decreases
  // from pi at the south pole. Bisection on the monotone map.
  const double target = kind_ == PatchKind::Annulus ? theta : std::numbers::pi - theta;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it)
  {
    const double mid = 0.5 * (lo + hi);
    const double a = kind_ == PatchKind::Annulus ? angle(mid) : std::numbers::pi - angle(mid);
    // angle() wraps to [0, 2 pi): the end of the circle reads as 0.
    const double v = (kind_ == PatchKind::Annulus && mid > 0.5 && a < 1.0) ? a + kTwoPi : a;
    (v < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ElementMesh build_mesh(const Patch &patch)
{
  const int p = patch.degree();
  const auto &rk = patch.radial().knots();
  const auto &ak = patch.angular().knots();
  const int q = patch.angular().degree();
  ElementMesh mesh;
  for (int rs : rk.element_spans())
  {
    for (int as : ak.element_spans())
    {
      Element e{rs, as, rk[rs], rk[rs + 1], ak[as], ak[as + 1], {}};
      e.dofs.reserve((p + 1) * (q + 1));
      for (int a = 0; a <= p; ++a)
      {
        for (int b = 0; b <= q; ++b)
        {
          e.dofs.push_back(patch.dof(rs - p + a, as - q + b));
        }
      }
      mesh.elements.push_back(std::move(e));
    }
  }
  return mesh;
}

Patch build_annulus(const GridRequest &req)
{
  GridRequest r = req;
  r.kind = PatchKind::Annulus;
  return Patch(r);
}

Patch build_meridian(const GridRequest &req)
{
  GridRequest r = req;
  r.kind = PatchKind::Meridian;
  return Patch(r);
}

double BoundaryTrace::measure(double eta) const
{
  const auto &curve = patch->boundary_curve();
  const Eigen::Vector2d c = curve.point(eta);
  const double speed = curve.tangent(eta).norm();
  if (patch->kind() == PatchKind::Annulus)
  {
    return radius * speed;
  }
  // sin(theta) is the rho component of the unit meridian point.
  return radius * radius * c.x() * speed;
}

BoundaryTrace boundary_trace(const Patch &patch, Edge edge)
{
  BoundaryTrace t{edge, edge == Edge::Inner ? patch.r0() : patch.R(), &patch, {}};
  const int i = edge == Edge::Inner ? 0 : patch.radial_count() - 1;
  t.dofs.resize(patch.angular_count());
  for (int j = 0; j < patch.angular_count(); ++j)
  {
    t.dofs[j] = patch.dof(i, j);
  }
  return t;
}

}  // namespace feabc::geometry
