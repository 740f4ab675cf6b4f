// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "feabc/error.hpp"
#include "feabc/splines.hpp"

using namespace feabc;
using namespace feabc::splines;

namespace
{

// Direct Cox-de Boor recursion, used as an independent reference.
double cox_de_boor(std::span<const double> U, int i, int p, double x)
{
  if (p == 0)
  {
    return (U[i] <= x && x < U[i + 1]) ? 1.0 : 0.0;
  }
  double v = 0.0;
  if (U[i + p] > U[i])
  {
    v += (x - U[i]) / (U[i + p] - U[i]) * cox_de_boor(U, i, p - 1, x);
  }
  if (U[i + p + 1] > U[i + 1])
  {
    v += (U[i + p + 1] - x) / (U[i + p + 1] - U[i + 1]) * cox_de_boor(U, i + 1, p - 1, x);
  }
  return v;
}

double max_radius_error(const NurbsCurve &c, int samples)
{
  double err = 0.0;
  for (int s = 0; s <= samples; ++s)
  {
    err = std::max(err, std::abs(c.point(static_cast<double>(s) / samples).norm() - 1.0));
  }
  return err;
}

double max_point_gap(const NurbsCurve &a, const NurbsCurve &b, int samples)
{
  double err = 0.0;
  for (int s = 0; s <= samples; ++s)
  {
    const double x = static_cast<double>(s) / samples;
    err = std::max(err, (a.point(x) - b.point(x)).norm());
  }
  return err;
}

}  // namespace

TEST_CASE("knot vector validation")
{
  CHECK_THROWS_AS(KnotVector({0, 0, 1, 0.5, 1, 1}, 2), DomainError);
  CHECK_THROWS_AS(KnotVector({0, 0, 0, 0, 1, 1, 1}, 2), DomainError);
  CHECK_THROWS_AS(KnotVector({0, 1}, 2), DomainError);
  const KnotVector kv({0, 0, 0, 0.5, 1, 1, 1}, 2);
  CHECK(kv.num_basis() == 4);
  CHECK(kv.is_open());
  CHECK(kv.find_span(0.0) == 2);
  CHECK(kv.find_span(0.5) == 3);
  CHECK(kv.find_span(1.0) == 3);
  CHECK_THROWS_AS(kv.find_span(1.5), DomainError);
  CHECK(kv.element_spans() == std::vector<int>{2, 3});
  const auto g = kv.greville();
  CHECK(g[0] == 0.0);
  CHECK(g[1] == doctest::Approx(0.25));
  CHECK(g[2] == doctest::Approx(0.75));
  CHECK(g[3] == 1.0);
}

TEST_CASE("quadratic basis at 0.25 matches the hand recursion")
{
  // On [0, 0.5): N_0 = (1-2x)^2, N_1 = 4x - 6x^2, N_2 = 2x^2.
  const KnotVector kv({0, 0, 0, 0.5, 1, 1, 1}, 2);
  const auto b = eval_bspline(kv, 0.25);
  CHECK(b.first == 0);
  CHECK(b.value[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(b.value[1] == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(b.value[2] == doctest::Approx(0.125).epsilon(1e-15));
  for (int a = 0; a < 3; ++a)
  {
    CHECK(b.value[a] == doctest::Approx(cox_de_boor(kv.knots(), a, 2, 0.25)).epsilon(1e-15));
  }
}

TEST_CASE("partition of unity and derivatives against finite differences")
{
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  const NurbsCurve circle = elevate_order(elevate_order(unit_circle()));
  const NurbsBasis bases[] = {NurbsBasis::polynomial(KnotVector::open_uniform(4, 11)),
                              circle.basis(), unit_meridian().basis()};
  for (const auto &basis : bases)
  {
    for (int trial = 0; trial < 60; ++trial)
    {
      const double x = u(gen);
      const auto b = basis.eval(x);
      const double h = 1e-5;
      const auto bp = basis.eval_in_span(basis.knots().find_span(x), x + h);
      const auto bm = basis.eval_in_span(basis.knots().find_span(x), x - h);
      double sum = 0.0, dsum = 0.0;
      for (std::size_t a = 0; a < b.value.size(); ++a)
      {
        sum += b.value[a];
        dsum += b.d1[a];
        CHECK(b.value[a] >= -1e-15);
        CHECK(b.d1[a] == doctest::Approx((bp.value[a] - bm.value[a]) / (2 * h)).epsilon(1e-6));
        CHECK(b.d2[a] ==
              doctest::Approx((bp.value[a] - 2 * b.value[a] + bm.value[a]) / (h * h)).epsilon(1e-4));
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(dsum) < 1e-11);
    }
  }
}

TEST_CASE("quadratic circle and meridian are exact")
{
  CHECK(max_radius_error(unit_circle(), 997) < 1e-15);
  CHECK(max_radius_error(unit_meridian(), 997) < 1e-15);
  const auto c = unit_circle();
  CHECK((c.point(0.25) - Eigen::Vector2d(0, 1)).norm() < 1e-15);
  CHECK((c.point(0.125) - Eigen::Vector2d(std::sqrt(0.5), std::sqrt(0.5))).norm() < 1e-15);
  const auto m = unit_meridian();
  CHECK((m.point(0.0) - Eigen::Vector2d(0, -1)).norm() < 1e-15);
  CHECK((m.point(0.5) - Eigen::Vector2d(1, 0)).norm() < 1e-15);
  CHECK((m.point(1.0) - Eigen::Vector2d(0, 1)).norm() < 1e-15);
}

TEST_CASE("knot insertion leaves the curve unchanged")
{
  const NurbsCurve c = unit_circle();
  NurbsCurve r = c;
  for (double x : {0.1, 0.3, 0.3, 0.61, 0.9})
  {
    r = insert_knot(r, x);
  }
  CHECK(r.points.size() == c.points.size() + 5);
  CHECK(max_point_gap(c, r, 1001) < 1e-13);
  CHECK_THROWS_AS(insert_knot(r, 0.3), DomainError);
  CHECK_THROWS_AS(insert_knot(r, 1.0), DomainError);

  const NurbsCurve s = subdivide(c, 3);
  CHECK(s.points.size() == 9 + 4 * 2);
  CHECK(s.knots.element_spans().size() == 12);
  CHECK(max_point_gap(c, s, 1001) < 1e-13);
}

TEST_CASE("degree elevation keeps the circle exact up to degree 6")
{
  const NurbsCurve c = unit_circle();
  NurbsCurve e = c;
  for (int p = 3; p <= 6; ++p)
  {
    e = elevate_order(e);
    CHECK(e.degree() == p);
    // Each arc junction keeps multiplicity p, giving 4p + 1 control points.
    CHECK(e.points.size() == static_cast<std::size_t>(4 * p + 1));
    CHECK(max_point_gap(c, e, 1001) < 1e-12);
    CHECK(max_radius_error(e, 1001) < 1e-12);
    for (double w : e.weights)
    {
      CHECK(w > 0.0);
    }
  }
  // Elevated then refined: 4p + 4e - 3 unrolled functions.
  RefinementSpec spec;
  spec.target_degree = 4;
  spec.periodic = true;
  const NurbsCurve r = subdivide(refine(c, spec), 5);
  CHECK(r.points.size() == static_cast<std::size_t>(4 * 4 + 4 * 5 - 3));
  CHECK(max_radius_error(r, 1001) < 1e-12);
}

TEST_CASE("periodic coupling of the closed circle")
{
  // Quadratic, one element per arc after collapsing: 5 unrolled -> 4 unique.
  const NurbsCurve half{KnotVector({0, 0, 0, 0.5, 1, 1, 1}, 2), {1, 1, 1, 1}, {}};
  NurbsCurve closed = half;
  closed.points = {{1, 0}, {0, 2}, {-2, 0}, {1, 0}};
  const auto map4 = periodic_couple(closed);
  CHECK(map4 == std::vector<int>{0, 1, 2, 0});

  const auto map = periodic_couple(unit_circle());
  CHECK(map.size() == 9);
  CHECK(map.back() == 0);
  CHECK(*std::max_element(map.begin(), map.end()) == 7);

  // A coupled field takes the same value on both sides of the seam.
  const NurbsBasis basis = unit_circle().basis();
  std::vector<double> coef(8);
  std::iota(coef.begin(), coef.end(), 1.0);
  auto field = [&](double x)
  {
    const auto b = basis.eval(x);
    double v = 0.0;
    for (std::size_t a = 0; a < b.value.size(); ++a)
    {
      v += b.value[a] * coef[map[b.first + a]];
    }
    return v;
  };
  CHECK(field(0.0) == doctest::Approx(field(1.0)).epsilon(1e-15));

  NurbsCurve open = unit_circle();
  open.points.back() = {1.0, 1e-6};
  CHECK_THROWS_AS(periodic_couple(open), DomainError);
}
