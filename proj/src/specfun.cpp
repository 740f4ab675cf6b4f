// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "feabc/error.hpp"

namespace feabc::specfun
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// Above this argument J_0, J_1, Y_0, Y_1 come from the Hankel asymptotic series.
constexpr double kAsymptoticThreshold = 25.0;

// Largest order accepted by the sequence entry points.
constexpr int kMaxSequenceOrder = 20000;

void check_argument(int n, double x, int nmax_allowed, const char *fn)
{
  if (!(x > 0.0) || !std::isfinite(x))
  {
    throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                      std::to_string(x));
  }
  if (n < 0 || n > nmax_allowed)
  {
    throw DomainError(std::string(fn) + ": order " + std::to_string(n) + " outside [0, " +
                      std::to_string(nmax_allowed) + "]");
  }
}

int miller_start(int nmax, double x)
{
  const int top = std::max(nmax, static_cast<int>(x) + 1);
  int start = top + 20 + static_cast<int>(std::sqrt(160.0 * top));
  return start + (start % 2);
}

// Unnormalised minimal solution of f_{n-1} = (2n + shift)/x f_n - f_{n+1} for
// orders 0..nkeep, started at `start` with f_{start+1} = 0. shift = 0 gives the
// cylindrical recurrence, shift = 1 the spherical one. Also accumulates
// f_0 + 2 sum_{k>=1} f_{2k}, the Neumann normalisation sum of the cylindrical case.
std::vector<double> backward_recurrence(int nkeep, int start, double x, int shift,
                                        double &norm_sum)
{
  std::vector<double> out(nkeep + 1, 0.0);
  constexpr double kBig = 1e250;
  constexpr double kRescale = 1e-250;
  double next = 0.0;
  double cur = 1e-30;
  norm_sum = 0.0;
  for (int n = start; n >= 1; --n)
  {
    if (n <= nkeep)
    {
      out[n] = cur;
    }
    if (n % 2 == 0)
    {
      norm_sum += 2.0 * cur;
    }
    const double prev = (2.0 * n + shift) / x * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > kBig)
    {
      cur *= kRescale;
      next *= kRescale;
      norm_sum *= kRescale;
      for (int k = n; k <= nkeep; ++k)
      {
        out[k] *= kRescale;
      }
    }
  }
  out[0] = cur;
  norm_sum += cur;
  return out;
}

// Hankel asymptotic expansion for J_nu, Y_nu with nu in {0, 1}.
BesselPair hankel_asymptotic(int nu, double x)
{
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 400; ++k)
  {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > last)
    {
      break;  // series started to diverge
    }
    last = mag;
    const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0)
    {
      p += sign * term;
    }
    else
    {
      q += (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    if (mag < 1e-18)
    {
      break;
    }
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double r2 = std::numbers::sqrt2 / 2.0;
  double cchi, schi;
  if (nu == 0)
  {
    cchi = r2 * (c + s);
    schi = r2 * (s - c);
  }
  else
  {
    cchi = r2 * (s - c);
    schi = -r2 * (s + c);
  }
  const double amp = std::sqrt(2.0 / (kPi * x));
  return {amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)};
}

void upward_second_kind(std::vector<double> &y, double x, int shift)
{
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n + 1 < y.size(); ++n)
  {
    if (!std::isfinite(y[n]) || std::abs(y[n]) > 1e300)
    {
      std::fill(y.begin() + static_cast<std::ptrdiff_t>(n) + 1, y.end(), -inf);
      return;
    }
    y[n + 1] = (2.0 * n + shift) / x * y[n] - y[n - 1];
  }
}

}  // namespace

BesselSequence bessel_jy_sequence(int nmax, double x)
{
  check_argument(nmax, x, kMaxSequenceOrder, "bessel_jy_sequence");
  const int start = miller_start(nmax, x);
  BesselSequence out;
  out.y.assign(std::max(nmax, 1) + 1, 0.0);

  if (x < kAsymptoticThreshold)
  {
    // Keep every order: the Neumann series for Y_0, Y_1 needs them all.
    double norm = 0.0;
    std::vector<double> j = backward_recurrence(start, start, x, 0, norm);
    for (double &v : j)
    {
      v /= norm;
    }
    const double lg = std::log(0.5 * x) + kEulerGamma;
    double s0 = 0.0;
    double s1 = 0.0;
    for (int k = 1; 2 * k + 1 <= start; ++k)
    {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      s0 += sign * j[2 * k] / k;
      s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / k;
    }
    out.y[0] = 2.0 / kPi * lg * j[0] - 4.0 / kPi * s0;
    out.y[1] = 2.0 / kPi * lg * j[1] - 2.0 / (kPi * x) * j[0] + 2.0 / kPi * s1;
    j.resize(nmax + 1);
    out.j = std::move(j);
  }
  else
  {
    const BesselPair b0 = hankel_asymptotic(0, x);
    const BesselPair b1 = hankel_asymptotic(1, x);
    double norm = 0.0;
    std::vector<double> j = backward_recurrence(std::max(nmax, 1), start, x, 0, norm);
    const double scale = std::abs(b0.j) >= std::abs(b1.j) ? b0.j / j[0] : b1.j / j[1];
    for (double &v : j)
    {
      v *= scale;
    }
    j[0] = b0.j;
    j[1] = b1.j;
    j.resize(nmax + 1);
    out.j = std::move(j);
    out.y[0] = b0.y;
    out.y[1] = b1.y;
  }
  upward_second_kind(out.y, x, 0);
  out.y.resize(nmax + 1);
  return out;
}

BesselPair bessel_jy(int n, double x)
{
  check_argument(n, x, kMaxSingleOrder, "bessel_jy");
  const BesselSequence s = bessel_jy_sequence(n, x);
  return {s.j[n], s.y[n]};
}

complex hankel1(int n, double x)
{
  const BesselPair b = bessel_jy(n, x);
  return {b.j, b.y};
}

BesselSequence sph_bessel_jy_sequence(int nmax, double x)
{
  check_argument(nmax, x, kMaxSequenceOrder, "sph_bessel_jy_sequence");
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double j0 = s / x;
  const double j1 = (s / x - c) / x;

  const int start = miller_start(nmax, x);
  double unused = 0.0;
  std::vector<double> j = backward_recurrence(std::max(nmax, 1), start, x, 1, unused);
  // Closed-form j_1 cancels for small x, where j_0 ~ 1 is the safe reference.
  const bool use_j0 = x < 1.0 || std::abs(j0) >= std::abs(j1);
  const double scale = use_j0 ? j0 / j[0] : j1 / j[1];
  for (double &v : j)
  {
    v *= scale;
  }
  j[0] = j0;
  if (!use_j0)
  {
    j[1] = j1;
  }

  BesselSequence out;
  out.y.assign(std::max(nmax, 1) + 1, 0.0);
  out.y[0] = -c / x;
  out.y[1] = -c / (x * x) - s / x;
  upward_second_kind(out.y, x, 1);
  j.resize(nmax + 1);
  out.y.resize(nmax + 1);
  out.j = std::move(j);
  return out;
}

BesselPair sph_bessel_jy(int n, double x)
{
  check_argument(n, x, kMaxSingleOrder, "sph_bessel_jy");
  const BesselSequence s = sph_bessel_jy_sequence(n, x);
  return {s.j[n], s.y[n]};
}

complex sph_hankel1(int n, double x)
{
  const BesselPair b = sph_bessel_jy(n, x);
  return {b.j, b.y};
}

std::vector<double> legendre_p_sequence(int nmax, double x)
{
  if (!(std::abs(x) <= 1.0))
  {
    throw DomainError("legendre_p: argument must lie in [-1, 1]");
  }
  if (nmax < 0)
  {
    throw DomainError("legendre_p: degree must be nonnegative");
  }
  std::vector<double> p(nmax + 1);
  p[0] = 1.0;
  if (nmax >= 1)
  {
    p[1] = x;
  }
  for (int n = 1; n < nmax; ++n)
  {
    p[n + 1] = ((2.0 * n + 1.0) * x * p[n] - n * p[n - 1]) / (n + 1.0);
  }
  return p;
}

double legendre_p(int n, double x)
{
  return legendre_p_sequence(n, x).back();
}

}  // namespace feabc::specfun
