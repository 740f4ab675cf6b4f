// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "feabc/error.hpp"
#include "feabc/farfield_abc.hpp"
#include "feabc/specfun.hpp"
#include "kfe_oracle_values.hpp"

using namespace feabc;
using namespace feabc::abc;

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr complex kI{0.0, 1.0};

void check_row(const KfeCoefficients &c, int l, const std::complex<double> (&want)[6], double tol)
{
  const complex got[6] = {c.A[l], c.B[l], c.E[l], c.I[l], c.P[l], c.Q[l]};
  // P_0 vanishes identically; compare every entry on the scale of its row.
  double scale = 0.0;
  for (const auto &w : want)
  {
    scale = std::max(scale, std::abs(w));
  }
  for (int q = 0; q < 6; ++q)
  {
    INFO("l = ", l, ", entry ", q, ": ", got[q], " vs ", want[q]);
    CHECK(std::abs(got[q] - want[q]) < tol * scale);
  }
}

// Relative mismatch of d_r u = (alpha - beta n^2) u for the outgoing mode H_n(kr) cos(n theta).
double bgt_mode_residual(const BgtCoefficients &b, double k, double R, int n)
{
  const auto s = specfun::bessel_jy_sequence(n + 1, k * R);
  const complex Hn = s.hankel(n);
  const complex dH = n == 0 ? -s.hankel(1) : s.hankel(n - 1) - (n / (k * R)) * Hn;
  return std::abs(k * dH - (b.alpha - b.beta * double(n * n)) * Hn) / std::abs(Hn);
}

}  // namespace

TEST_CASE("KFE scalars at k = 2 pi, R = 2, L = 11 against the frozen oracle")
{
  const auto c = kfe_coeffs(2.0 * kPi, 2.0, 11);
  REQUIRE(c.A.size() == 11u);
  for (int l = 0; l < 11; ++l)
  {
    check_row(c, l, oracle::kTwoPiR2[l], 1e-12);
  }
  const complex H1 = specfun::hankel1(1, 4.0 * kPi);
  const complex H0 = specfun::hankel1(0, 4.0 * kPi);
  CHECK(std::abs(c.A[0] + 2.0 * kPi * H1) < 1e-15);
  CHECK(std::abs(c.B[0] - (2.0 * kPi * H0 - 2.0 * kPi * H1 / (4.0 * kPi))) < 1e-14);
}

TEST_CASE("KFE scalars at low frequency stay finite")
{
  const auto c = kfe_coeffs(0.01, 2.0, 3);
  for (int l = 0; l < 3; ++l)
  {
    check_row(c, l, oracle::kLowFreq[l], 1e-11);
  }
  CHECK_NOTHROW(kfe_coeffs(0.01, 1.1, 3));
  CHECK_THROWS_AS(kfe_coeffs(0.01, 2.0, 200), ConditioningError);
  CHECK_THROWS_AS(kfe_coeffs(0.0, 2.0, 3), DomainError);
  CHECK_THROWS_AS(kfe_coeffs(1.0, 2.0, 0), DomainError);
}

TEST_CASE("P and Q are consistent with their constituents")
{
  for (double k : {0.5, 2.0 * kPi, 10.0})
  {
    const double R = 1.7;
    const auto c = kfe_coeffs(k, R, 12);
    for (int l = 0; l < 12; ++l)
    {
      const complex P = c.E[l] + c.A[l] / R + k * k * c.trace0[l];
      const complex Q = c.I[l] + c.B[l] / R + k * k * c.trace1[l];
      CHECK(std::abs(c.P[l] - P) <= 1e-13 * std::abs(P) + 1e-300);
      CHECK(std::abs(c.Q[l] - Q) <= 1e-13 * std::abs(Q));
      CHECK(std::abs(c.curv0[l] * R * R - c.trace0[l]) <= 1e-15 * std::abs(c.trace0[l]));
    }
  }
}

TEST_CASE("WFE scalars")
{
  const double k = 2.0 * kPi, R = 2.0;
  const auto c = wfe_coeffs(k, R, 12);
  for (int l = 0; l < 12; ++l)
  {
    // d/dr of e^{ikr}/(kr)^{l+1} by central differences.
    const double h = 1e-5;
    auto f = [&](double r) { return std::exp(kI * k * r) * std::pow(k * r, -(l + 1.0)); };
    const complex fd = (f(R + h) - f(R - h)) / (2.0 * h);
    CHECK(std::abs(c.c[l] - fd) < 1e-8 * std::abs(fd));
    CHECK(std::abs(c.trace[l] - f(R)) < 1e-15 * std::abs(f(R)));
    if (l > 0)
    {
      CHECK(std::abs(c.trace[l]) < std::abs(c.trace[l - 1]));
    }
  }
}

TEST_CASE("Karp recurrence factors")
{
  const auto r1 = karp_recurrence_rhs(1);
  // Constant G_0 = c: 2 F_1 = -c.
  const double c = 3.0;
  CHECK(-(r1.y_mass * c) / r1.x_mass == doctest::Approx(-c / 2));
  // Constant F_0 = c: G_1 = 0.
  CHECK(r1.t_mass * c == 0.0);
  // G_0 = cos(theta): stiffness acts as +1 times the mass on the n = 1 mode.
  CHECK(r1.y_mass + r1.y_stiff * 1.0 == 0.0);
  const auto r4 = karp_recurrence_rhs(4);
  CHECK(r4.x_mass == 8.0);
  CHECK(r4.y_mass == 16.0);
  CHECK(r4.t_mass == -9.0);
  CHECK(r4.r_mass == 8.0);
  CHECK(r4.t_stiff == 1.0);
  CHECK_THROWS_AS(karp_recurrence_rhs(0), DomainError);
}

TEST_CASE("Wilcox recurrence factors")
{
  // F_0 = P_n(cos theta): the stiffness form contributes n(n+1) times the mass form.
  auto F1 = [](int n)
  {
    const auto w = wfe_recurrence_rhs(1);
    return -(w.prev_mass + w.prev_stiff * n * (n + 1.0)) / w.f_mass;
  };
  CHECK(std::abs(F1(0)) == 0.0);
  CHECK(std::abs(F1(1) - kI) < 1e-15);
  CHECK(std::abs(F1(2) - 3.0 * kI) < 1e-15);
  const auto w3 = wfe_recurrence_rhs(3);
  CHECK(w3.f_mass == 6.0 * kI);
  CHECK(w3.prev_mass == -6.0);
}

TEST_CASE("BGT operators")
{
  const double k = 10.0, R = 2.0;
  const auto b1 = bgt_coeffs(1, k, R);
  CHECK(b1.beta == 0.0);
  CHECK(std::abs(b1.alpha - (kI * k - 0.25)) < 1e-15);
  const auto b2 = bgt_coeffs(2, k, R);
  const complex d = 0.5 - 10.0 * kI;
  CHECK(std::abs(b2.alpha - (10.0 * kI - 0.25 + 1.0 / (32.0 * d))) < 1e-15);
  CHECK(std::abs(b2.beta - 1.0 / (8.0 * d)) < 1e-15);
  CHECK_THROWS_AS(bgt_coeffs(3, k, R), DomainError);

  // Sommerfeld limit.
  CHECK(std::abs(bgt_coeffs(2, k, 1e8).alpha - kI * k) < 1e-7);
  CHECK(std::abs(bgt_coeffs(1, k, 1e8).alpha - kI * k) < 1e-7);

  // On outgoing cylindrical modes BGT-2 is accurate to O(R^-4) and BGT-1 to O(R^-2).
  for (int n = 0; n <= 3; ++n)
  {
    const double e1 = bgt_mode_residual(bgt_coeffs(2, k, 4.0), k, 4.0, n);
    const double e2 = bgt_mode_residual(bgt_coeffs(2, k, 8.0), k, 8.0, n);
    CHECK(e1 / e2 > 12.0);
    CHECK(e2 < bgt_mode_residual(bgt_coeffs(1, k, 8.0), k, 8.0, n) / 100.0);
  }
}

TEST_CASE("farfield pattern from the leading Karp coefficients")
{
  const std::vector<complex> one(5, 1.0), zero(5, 0.0);
  const auto f = ffp_from_karp(one, zero, kPi / 2.0);
  for (const auto &v : f)
  {
    CHECK(std::abs(v - (2.0 / kPi) * std::exp(-kI * kPi / 4.0)) < 1e-15);
  }
  const auto g = ffp_from_karp(zero, one, 3.0);
  for (const auto &v : g)
  {
    CHECK(std::abs(v + kI * std::sqrt(2.0 / (3.0 * kPi)) * std::exp(-kI * kPi / 4.0)) < 1e-15);
  }
  CHECK_THROWS_AS(ffp_from_karp(one, std::vector<complex>(4), 1.0), DomainError);
}
