// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_SPLINES_HPP
#define FEABC_SPLINES_HPP

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace feabc::splines
{

//
// Nondecreasing knot sequence of a degree-p spline space with n = size - p - 1
// basis functions.
//
class KnotVector
{
public:
  KnotVector(std::vector<double> knots, int degree);

  // Open knot vector on [a, b] with uniformly spaced interior knots.
  static KnotVector open_uniform(int degree, int num_basis, double a = 0.0, double b = 1.0);

  int degree() const { return degree_; }
  int num_basis() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
  std::span<const double> knots() const { return knots_; }
  double operator[](int i) const { return knots_[i]; }
  double front() const { return knots_[degree_]; }
  double back() const { return knots_[knots_.size() - degree_ - 1]; }

  // Index s with knots[s] <= x < knots[s+1]; the right end maps to the last
  // nonempty span. Throws DomainError outside [front, back].
  int find_span(double x) const;

  int multiplicity(double x) const;
  bool is_open() const;

  // Distinct knot values in increasing order.
  std::vector<double> breakpoints() const;

  // Span indices s of the nonempty intervals [knots[s], knots[s+1]).
  std::vector<int> element_spans() const;

  // Greville abscissae (knot averages), one per basis function.
  std::vector<double> greville() const;

private:
  std::vector<double> knots_;
  int degree_;
};

// Values and first two derivatives of the p+1 basis functions that are nonzero
// in one knot span. Entry a belongs to global basis function `first + a`.
struct BasisValues
{
  int first = 0;
  std::vector<double> value;
  std::vector<double> d1;
  std::vector<double> d2;
};

// Cox-de Boor evaluation of the B-spline basis at x.
BasisValues eval_bspline(const KnotVector &kv, double x);

// As above, but in a prescribed span (x may sit on either end of the span).
BasisValues eval_bspline_in_span(const KnotVector &kv, int span, double x);

//
// Rational basis R_i = N_i w_i / sum_j N_j w_j with positive weights.
//
class NurbsBasis
{
public:
  NurbsBasis(KnotVector kv, std::vector<double> weights);

  // Polynomial B-spline basis viewed as a NURBS basis with unit weights.
  static NurbsBasis polynomial(KnotVector kv);

  const KnotVector &knots() const { return kv_; }
  std::span<const double> weights() const { return weights_; }
  int degree() const { return kv_.degree(); }
  int size() const { return kv_.num_basis(); }

  BasisValues eval(double x) const;
  BasisValues eval_in_span(int span, double x) const;

private:
  KnotVector kv_;
  std::vector<double> weights_;
};

// Rationalise B-spline values with the given weights.
BasisValues rationalize(const BasisValues &b, std::span<const double> weights);

//
// Planar NURBS curve C(x) = sum R_i(x) P_i.
//
struct NurbsCurve
{
  KnotVector knots;
  std::vector<double> weights;
  std::vector<Eigen::Vector2d> points;

  NurbsBasis basis() const { return {knots, weights}; }
  int degree() const { return knots.degree(); }
  Eigen::Vector2d point(double x) const;
  Eigen::Vector2d tangent(double x) const;
};

// Boehm knot insertion of x (strictly interior). The curve is unchanged as a map.
NurbsCurve insert_knot(const NurbsCurve &curve, double x);

// Split every nonempty span into `parts` equal parameter intervals.
NurbsCurve subdivide(const NurbsCurve &curve, int parts);

// Degree p -> p+1 with every distinct knot gaining one multiplicity, so the
// continuity class is preserved. Computed by interpolating the homogeneous
// curve in the elevated space at its Greville abscissae, which reproduces the
// curve exactly because it lies in that space.
NurbsCurve elevate_order(const NurbsCurve &curve);

struct RefinementSpec
{
  int target_degree = 2;
  std::vector<double> inserted_knots;
  bool periodic = false;
};

// Elevate to spec.target_degree, then insert spec.inserted_knots.
NurbsCurve refine(const NurbsCurve &curve, const RefinementSpec &spec);

// Exact unit circle from four rational quadratic arcs (9 control points, middle
// weights sqrt(2)/2, double interior knots), counterclockwise from (1, 0).
NurbsCurve unit_circle();

// Exact unit half circle in the (rho, z) meridian plane from two quadratic arcs,
// running counterclockwise from the south pole (0, -1) through (1, 0) to the
// north pole (0, 1).
NurbsCurve unit_meridian();

// For a closed curve (first and last control points coincide) returns the map
// from the n unrolled basis indices onto n - 1 periodic indices: the last
// function is identified with the first. Throws DomainError when the end
// control points or weights differ by more than tol.
std::vector<int> periodic_couple(const NurbsCurve &curve, double tol = 1e-12);

}  // namespace feabc::splines

#endif  // FEABC_SPLINES_HPP
