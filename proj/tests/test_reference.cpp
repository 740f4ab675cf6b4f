// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "feabc/error.hpp"
#include "feabc/geometry.hpp"
#include "feabc/reference.hpp"

using namespace feabc;
using namespace feabc::reference;

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

// Values frozen from a 50-digit mpmath evaluation of the eigenfunction series
// (120 terms, mpmath besselj/bessely/legendre).
constexpr complex kCylSoft{0.031963973801314116344, -0.4953171599671618227};   // r = 2, theta = pi/3
constexpr complex kCylHard{0.073049152339348256043, 0.1068812808343426584};    // r = 2, theta = pi/3
constexpr complex kSphSoft{0.46507672575462645537, 0.025528244595730664694};   // r = 2, theta = pi/4
constexpr complex kCylFfp0{-1.9800192206517295173, 1.2585021334644033239};     // theta = 0
constexpr complex kCylFfp120{0.12526414525108574574, -0.66029267779953004599}; // theta = 2 pi/3
constexpr complex kCylHardFfp90{-0.50780891319693606921, -0.27824022801747692979};
constexpr complex kSphFfp60{-0.57419452517392600371, -0.12751173974932432468};
constexpr complex kCylLowFreq{-0.92261568980627476923, -0.030828113770699486749};  // k = 0.01

double rel(complex got, complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("soft cylinder field cancels the incident wave on the scatterer")
{
  const double k = 2.0 * kPi;
  const ExactSolution ex(Scatterer::Cylinder, BoundaryKind::Soft, k, 1.0);
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  for (int s = 0; s < 100; ++s)
  {
    const double th = dist(gen);
    const complex uinc = std::exp(kI * k * std::cos(th));
    CHECK(std::abs(ex.field(1.0, th) + uinc) < 1e-12);
  }
}

TEST_CASE("soft sphere field cancels the incident wave on the scatterer")
{
  const double k = 2.0 * kPi;
  const ExactSolution ex(Scatterer::Sphere, BoundaryKind::Soft, k, 1.0);
  for (int s = 0; s <= 50; ++s)
  {
    const double th = kPi * s / 50.0;
    const complex uinc = std::exp(kI * k * std::cos(th));
    CHECK(std::abs(ex.field(1.0, th) + uinc) < 1e-12);
    // Point form in (rho, z) agrees with the polar form.
    const Eigen::Vector2d x(std::sin(th), std::cos(th));
    CHECK(std::abs(ex.field(x) - ex.field(1.0, th)) < 1e-13);
  }
}

TEST_CASE("hard cylinder field has vanishing total normal derivative")
{
  const double k = 2.0 * kPi;
  const ExactSolution ex(Scatterer::Cylinder, BoundaryKind::Hard, k, 1.0);
  const double d = 1e-5;
  for (double th : {0.0, 0.4, 1.3, 2.9})
  {
    auto total = [&](double r) { return ex.field(r, th) + std::exp(kI * k * r * std::cos(th)); };
    const complex dr = (total(1.0 + d) - total(1.0 - d)) / (2.0 * d);
    CHECK(std::abs(dr) < 1e-7);
  }
}

TEST_CASE("fields are symmetric about the incidence axis")
{
  const ExactSolution cyl(Scatterer::Cylinder, BoundaryKind::Soft, 2.0 * kPi, 1.0);
  for (double th : {0.3, 1.1, 2.5})
  {
    CHECK(std::abs(cyl.field(1.7, th) - cyl.field(1.7, -th)) < 1e-14);
    CHECK(std::abs(cyl.ffp(th) - cyl.ffp(-th)) < 1e-14);
  }
}

TEST_CASE("series values against the high-precision oracle")
{
  const double k = 2.0 * kPi;
  const ExactSolution soft(Scatterer::Cylinder, BoundaryKind::Soft, k, 1.0);
  const ExactSolution hard(Scatterer::Cylinder, BoundaryKind::Hard, k, 1.0);
  const ExactSolution sph(Scatterer::Sphere, BoundaryKind::Soft, k, 1.0);
  CHECK(rel(soft.field(2.0, kPi / 3.0), kCylSoft) < 1e-12);
  CHECK(rel(hard.field(2.0, kPi / 3.0), kCylHard) < 1e-12);
  CHECK(rel(sph.field(2.0, kPi / 4.0), kSphSoft) < 1e-12);
  CHECK(rel(soft.ffp(0.0), kCylFfp0) < 1e-12);
  CHECK(rel(soft.ffp(2.0 * kPi / 3.0), kCylFfp120) < 1e-12);
  CHECK(rel(hard.ffp(kPi / 2.0), kCylHardFfp90) < 1e-12);
  CHECK(rel(sph.ffp(kPi / 3.0), kSphFfp60) < 1e-12);

  const ExactSolution low(Scatterer::Cylinder, BoundaryKind::Soft, 0.01, 1.0);
  CHECK(rel(low.field(1.5, 0.7), kCylLowFreq) < 1e-12);
}

TEST_CASE("doubling the truncation does not change the series")
{
  const double k = 2.0 * kPi;
  for (auto s : {Scatterer::Cylinder, Scatterer::Sphere})
  {
    const ExactSolution a(s, BoundaryKind::Soft, k, 1.0);
    const ExactSolution b(s, BoundaryKind::Soft, k, 1.0, 1.0, 2 * (a.n_max() + 1), 0.0);
    REQUIRE(b.n_max() >= 2 * a.n_max());
    for (double th : {0.0, kPi / 4.0, kPi / 3.0, 2.0})
    {
      for (double r : {1.0, 2.0, 5.0})
      {
        CHECK(rel(a.field(r, th), b.field(r, th)) < 1e-13);
      }
      CHECK(rel(a.ffp(th), b.ffp(th)) < 1e-13);
    }
  }
}

TEST_CASE("scaled field approaches the farfield pattern at rate 1/r")
{
  const double k = 2.0 * kPi;
  const ExactSolution ex(Scatterer::Cylinder, BoundaryKind::Soft, k, 1.0);
  for (double th : {0.0, 1.0, 2.5})
  {
    auto gap = [&](double r)
    { return std::abs(std::sqrt(r) * std::exp(-kI * k * r) * ex.field(r, th) - ex.ffp(th)); };
    const double g3 = gap(1e3);
    const double g4 = gap(1e4);
    CHECK(g4 < 1e-3 * std::abs(ex.ffp(th)));
    CHECK(g3 / g4 > 7.0);
    CHECK(g3 / g4 < 14.0);
  }
}

TEST_CASE("forward amplitude matches the angular integral of |f|^2")
{
  const double k = 2.0 * kPi;
  const ExactSolution ex(Scatterer::Cylinder, BoundaryKind::Soft, k, 1.0);
  // Periodic trapezoid rule converges spectrally for the band-limited pattern.
  const int n = 720;
  double sigma = 0.0;
  for (int s = 0; s < n; ++s)
  {
    sigma += std::norm(ex.ffp(2.0 * kPi * s / n));
  }
  sigma *= 2.0 * kPi / n;
  const double forward =
    -std::sqrt(8.0 * kPi / k) * std::real(ex.ffp(0.0) * std::exp(kI * kPi / 4.0));
  CHECK(std::abs(sigma - forward) < 1e-8 * sigma);
  CHECK(std::abs(sigma - 4.5799608210259158697) < 1e-10);
}

TEST_CASE("exact Karp coefficients reproduce the pattern and the field")
{
  const double k = 2.0 * kPi;
  const ExactSolution ex(Scatterer::Cylinder, BoundaryKind::Soft, k, 1.0);
  // f = sqrt(2/(pi k)) e^{-i pi/4} (F_0 - i G_0)
  for (double th : {0.0, 0.8, 2.2})
  {
    const auto [F0, G0] = ex.karp(0, th);
    const complex f = std::sqrt(2.0 / (kPi * k)) * std::exp(-kI * kPi / 4.0) * (F0 - kI * G0);
    CHECK(rel(f, ex.ffp(th)) < 1e-12);
  }
  // u(r) = H_0(kr) sum F_l/(kr)^l + H_1(kr) sum G_l/(kr)^l converges for r > r0.
  const double r = 2.0;
  const double th = 0.6;
  const complex H0 = std::cyl_bessel_j(0.0, k * r) + kI * std::cyl_neumann(0.0, k * r);
  const complex H1 = std::cyl_bessel_j(1.0, k * r) + kI * std::cyl_neumann(1.0, k * r);
  complex u = 0.0;
  double scale = 1.0;
  for (int l = 0; l < 60; ++l)
  {
    const auto [F, G] = ex.karp(l, th);
    u += scale * (H0 * F + H1 * G);
    scale /= k * r;
  }
  CHECK(rel(u, ex.field(r, th)) < 1e-10);
}

TEST_CASE("farfield sample grids")
{
  const auto a = ffp_angles(geometry::PatchKind::Annulus, 720);
  REQUIRE(a.size() == 720u);
  CHECK(a.front() == 0.0);
  CHECK(std::abs(a[1] - 2.0 * kPi / 720.0) < 1e-15);
  const auto m = ffp_angles(geometry::PatchKind::Meridian, 721);
  REQUIRE(m.size() == 721u);
  CHECK(m.front() == 0.0);
  CHECK(std::abs(m.back() - kPi) < 1e-15);
}

TEST_CASE("zero numeric solution has unit relative error")
{
  geometry::GridRequest g;
  g.kind = geometry::PatchKind::Annulus;
  g.k = 2.0 * kPi;
  g.degree = 2;
  g.n_lambda = 6.0;
  const geometry::Patch patch(g);
  assembly::Problem pb;
  pb.patch = &patch;
  pb.k = g.k;
  pb.terms = 2;
  const assembly::DofLayout lay{patch.num_dofs(), patch.angular_unique(), 2, 2};
  const Eigen::VectorXcd x = Eigen::VectorXcd::Zero(lay.total());
  const ExactSolution ex(Scatterer::Cylinder, BoundaryKind::Soft, g.k, 1.0);
  const auto e = l2_errors(pb, lay, x, ex);
  CHECK(std::abs(e.domain - 1.0) < 1e-14);
  CHECK(std::abs(e.boundary - 1.0) < 1e-14);
  CHECK(std::abs(e.ffp - 1.0) < 1e-14);
}

TEST_CASE("order fit")
{
  SUBCASE("exact power law")
  {
    const std::vector<double> h{0.1, 0.05, 0.03, 0.02};
    std::vector<double> e;
    for (double v : h)
    {
      e.push_back(v * v * v);
    }
    const auto fit = fit_order(h, e);
    CHECK(std::abs(fit.slope - 3.0) < 1e-12);
    CHECK(fit.residual < 1e-12);
    REQUIRE(fit.pairwise.size() == 3u);
    for (double q : fit.pairwise)
    {
      CHECK(std::abs(q - 3.0) < 1e-12);
    }
  }
  SUBCASE("degree-2 convergence table")
  {
    const std::vector<double> h{0.05027, 0.04333, 0.04002, 0.03471, 0.03126};
    const std::vector<double> e{2.95e-5, 1.86e-5, 1.47e-5, 9.65e-6, 6.94e-6};
    const auto fit = fit_order(h, e);
    CHECK(std::abs(fit.slope - 3.03) < 0.02);
    CHECK(std::abs(fit.pairwise[0] - 3.12) < 0.02);
    CHECK(std::abs(fit.pairwise[3] - 3.15) < 0.02);
  }
  SUBCASE("degree-4 convergence table")
  {
    const std::vector<double> h{0.03903, 0.03632, 0.03324, 0.03126, 0.02950};
    const std::vector<double> e{6.14e-8, 4.15e-8, 2.59e-8, 1.88e-8, 1.42e-8};
    CHECK(std::abs(fit_order(h, e).slope - 5.25) < 0.05);
  }
  SUBCASE("invalid input")
  {
    const std::vector<double> h{0.1, 0.05};
    const std::vector<double> e{1e-3, 1e-4};
    CHECK_THROWS_AS(fit_order(h, e), DomainError);
    const std::vector<double> h3{0.1, 0.05, 0.02};
    const std::vector<double> e3{1e-3, 0.0, 1e-5};
    CHECK_THROWS_AS(fit_order(h3, e3), DomainError);
  }
}
