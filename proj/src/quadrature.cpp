// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "feabc/error.hpp"

namespace feabc::quadrature
{

Rule gauss_legendre(int g)
{
  if (g < 1 || g > 200)
  {
    throw DomainError("gauss_legendre: point count must be in [1, 200]");
  }
  Rule r;
  r.points.resize(g);
  r.weights.resize(g);
  // Newton iteration on P_g from the Chebyshev-like initial guesses; the rule
  // is symmetric so only half the roots are computed.
  for (int i = 0; i < (g + 1) / 2; ++i)
  {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (g + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it)
    {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= g; ++n)
      {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      if (g == 1)
      {
        p0 = 1.0;
      }
      dp = g * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
      {
        break;
      }
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = x;
    for (int n = 2; n <= g; ++n)
    {
      const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
      p0 = p1;
      p1 = p2;
    }
    dp = g == 1 ? 1.0 : g * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.points[i] = -x;
    r.points[g - 1 - i] = x;
    r.weights[i] = w;
    r.weights[g - 1 - i] = w;
  }
  if (g % 2 == 1)
  {
    r.points[g / 2] = 0.0;
  }
  return r;
}

Rule gauss_legendre(int g, double a, double b)
{
  Rule r = gauss_legendre(g);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < g; ++i)
  {
    r.points[i] = mid + half * r.points[i];
    r.weights[i] *= half;
  }
  return r;
}

}  // namespace feabc::quadrature
