// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "feabc/error.hpp"
#include "feabc/specfun.hpp"
#include "oracle_mpfr.hpp"

using namespace feabc;
using namespace feabc::specfun;

namespace
{

constexpr double kPi = std::numbers::pi;

// Relative error of a value whose natural scale is `scale`.
double rel(double got, double want, double scale)
{
  return std::abs(got - want) / scale;
}

void check_against_oracle(int n, double x, double tol)
{
  const auto ref = oracle::bessel_series(n, x);
  const auto got = bessel_jy(n, x);
  const double envelope = std::hypot(ref.j, ref.y);
  // Past the turning point J_n decays monotonically and is compared to itself;
  // in the oscillatory region both are compared to the Hankel modulus.
  const double scale_j = n > x ? std::abs(ref.j) : envelope;
  const double scale_y = n > x ? std::abs(ref.y) : envelope;
  INFO("n = ", n, ", x = ", x, ", J = ", got.j, " vs ", ref.j, ", Y = ", got.y, " vs ", ref.y);
  CHECK(rel(got.j, ref.j, scale_j) < tol);
  CHECK(rel(got.y, ref.y, scale_y) < tol);
}

}  // namespace

TEST_CASE("J_0 vanishes at its first zero")
{
  // First zero of J_0 to double precision.
  const auto b = bessel_jy(0, 2.404825557695773);
  CHECK(std::abs(b.j) < 1e-12);
  const auto ref = oracle::bessel_series(0, 2.404825557695773);
  CHECK(std::abs(ref.j) < 1e-15);
}

TEST_CASE("Wronskian at x = 1")
{
  const auto b0 = bessel_jy(0, 1.0);
  const auto b1 = bessel_jy(1, 1.0);
  CHECK(b1.j * b0.y - b0.j * b1.y == doctest::Approx(2.0 / kPi).epsilon(1e-14));
}

TEST_CASE("domain errors")
{
  CHECK_THROWS_AS(bessel_jy(0, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_jy(0, -1.0), DomainError);
  CHECK_THROWS_AS(bessel_jy(-1, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_jy(201, 1.0), DomainError);
  CHECK_THROWS_AS(hankel1(0, 0.0), DomainError);
  CHECK_THROWS_AS(sph_hankel1(0, 0.0), DomainError);
  CHECK_THROWS_AS(legendre_p(2, 1.5), DomainError);
  CHECK_NOTHROW(bessel_jy(200, 1.0));
}

TEST_CASE("hankel1 is J + iY")
{
  for (double x : {0.01, 0.3, 2.0, 12.566370614359172, 40.0, 700.0})
  {
    for (int n : {0, 1, 5, 17})
    {
      const auto b = bessel_jy(n, x);
      const auto h = hankel1(n, x);
      CHECK(h.real() == b.j);
      CHECK(h.imag() == b.y);
    }
  }
}

TEST_CASE("pinned Hankel values used by the low-frequency and k = 2 pi paths")
{
  // Frozen values from a 40-digit evaluation, cross-checked by the MPFR oracle.
  const auto o1 = oracle::bessel_series(1, 0.02);
  const auto h1 = hankel1(1, 0.02);
  CHECK(h1.real() == doctest::Approx(o1.j).epsilon(1e-13));
  CHECK(h1.imag() == doctest::Approx(o1.y).epsilon(1e-13));
  CHECK(std::abs(h1.imag() + 2.0 / (kPi * 0.02)) / std::abs(h1.imag()) < 1e-3);
  CHECK(h1.real() == doctest::Approx(0.009999500008333264).epsilon(1e-13));
  CHECK(h1.imag() == doctest::Approx(-31.85981279214922).epsilon(1e-13));

  const double x = 4.0 * kPi;
  const auto o0 = oracle::bessel_series(0, x);
  const auto h0 = hankel1(0, x);
  CHECK(h0.real() == doctest::Approx(o0.j).epsilon(1e-12));
  CHECK(h0.imag() == doctest::Approx(o0.y).epsilon(1e-12));
  CHECK(h0.real() == doctest::Approx(0.1575073924821384).epsilon(1e-12));
  CHECK(h0.imag() == doctest::Approx(-0.1606621514397428).epsilon(1e-12));
}

TEST_CASE("agreement with the high-precision oracle over the experiment range")
{
  std::mt19937 gen(20261019);
  std::uniform_real_distribution<double> logx(std::log(0.01), std::log(1000.0));
  std::uniform_int_distribution<int> order(0, 60);
  for (int trial = 0; trial < 150; ++trial)
  {
    check_against_oracle(order(gen), std::exp(logx(gen)), 1e-11);
  }
  // Edges of the documented range.
  for (double x : {0.01, 0.02, 1.0, 24.999, 25.0, 30.0, 1050.0, 2500.0})
  {
    for (int n : {0, 1, 2, 10, 60})
    {
      check_against_oracle(n, x, 1e-12);
    }
  }
  check_against_oracle(200, 50.0, 1e-12);
  check_against_oracle(200, 150.0, 1e-12);
  check_against_oracle(150, 300.0, 1e-12);
}

TEST_CASE("cylindrical Wronskian over the full argument range")
{
  for (double x = 0.01; x <= 1000.0; x *= 1.37)
  {
    const auto s = bessel_jy_sequence(61, x);
    for (int n = 0; n <= 60; ++n)
    {
      const double w = s.j[n + 1] * s.y[n] - s.j[n] * s.y[n + 1];
      if (!std::isfinite(w))
      {
        continue;  // Y_n overflow for tiny x and large n
      }
      INFO("n = ", n, ", x = ", x);
      CHECK(std::abs(w * kPi * x / 2.0 - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("sequence and single-order entry points agree")
{
  for (double x : {0.05, 3.0, 26.0, 333.0})
  {
    const auto s = bessel_jy_sequence(40, x);
    for (int n : {0, 3, 40})
    {
      const auto b = bessel_jy(n, x);
      CHECK(s.j[n] == doctest::Approx(b.j).epsilon(1e-14));
      CHECK(s.y[n] == doctest::Approx(b.y).epsilon(1e-14));
    }
  }
}

TEST_CASE("spherical Hankel closed form")
{
  for (double x : {0.01, 0.5, 3.0, 12.566370614359172, 100.0})
  {
    const std::complex<double> want = std::complex<double>(0.0, -1.0) *
                                      std::exp(std::complex<double>(0.0, x)) / x;
    CHECK(std::abs(sph_hankel1(0, x) - want) / std::abs(want) < 1e-13);
  }
}

TEST_CASE("spherical Bessel functions against the oracle and the Wronskian")
{
  for (double x : {0.01, 0.2, 1.0, 3.3, 6.283185307179586, 12.566370614359172, 40.0})
  {
    const auto s = sph_bessel_jy_sequence(61, x);
    for (int n = 0; n <= 60; n += 3)
    {
      const auto ref = oracle::sph_bessel_series(n, x);
      const double envelope = std::hypot(ref.j, ref.y);
      const double scale_j = n > x ? std::abs(ref.j) : envelope;
      const double scale_y = n > x ? std::abs(ref.y) : envelope;
      if (!std::isfinite(ref.y) || !std::isfinite(s.y[n]))
      {
        continue;
      }
      INFO("n = ", n, ", x = ", x);
      CHECK(rel(s.j[n], ref.j, scale_j) < 1e-11);
      CHECK(rel(s.y[n], ref.y, scale_y) < 1e-11);
    }
    for (int n = 1; n <= 60; ++n)
    {
      // j_n y_n' - j_n' y_n = j_n y_{n-1} - j_{n-1} y_n = 1/x^2
      const double w = s.j[n] * s.y[n - 1] - s.j[n - 1] * s.y[n];
      if (!std::isfinite(w))
      {
        continue;
      }
      INFO("n = ", n, ", x = ", x);
      CHECK(std::abs(w * x * x - 1.0) < 1e-11);
    }
  }
}

TEST_CASE("Legendre polynomials")
{
  CHECK(legendre_p(3, 1.0) == 1.0);
  CHECK(legendre_p(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  for (int n = 0; n <= 50; ++n)
  {
    CHECK(legendre_p(n, 1.0) == 1.0);
  }
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial)
  {
    const auto p = legendre_p_sequence(40, u(gen));
    for (double v : p)
    {
      CHECK(std::abs(v) <= 1.0 + 1e-15);
    }
  }
}
