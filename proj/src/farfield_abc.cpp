// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/farfield_abc.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "feabc/error.hpp"
#include "feabc/specfun.hpp"

namespace feabc::abc
{

namespace
{

constexpr complex kI{0.0, 1.0};

void validate(double k, double R, int L)
{
  if (!(k > 0.0) || !std::isfinite(k))
  {
    throw DomainError("wavenumber must be positive and finite");
  }
  if (!(R > 0.0) || !std::isfinite(R))
  {
    throw DomainError("boundary radius must be positive and finite");
  }
  if (L < 1)
  {
    throw DomainError("number of expansion terms must be >= 1");
  }
}

}  // namespace

KfeCoefficients kfe_coeffs(double k, double R, int L)
{
  validate(k, R, L);
  const double x = k * R;
  const auto b0 = specfun::bessel_jy(0, x);
  const auto b1 = specfun::bessel_jy(1, x);
  const double guard = std::log10(std::abs(b1.y)) - (L + 1) * std::log10(x);
  if (!(guard <= 290.0))
  {
    throw ConditioningError("KFE with L = " + std::to_string(L) + " at kR = " + std::to_string(x) +
                            " would need scalars beyond 1e290; reduce NT or increase kR");
  }
  const complex H0{b0.j, b0.y};
  const complex H1{b1.j, b1.y};
  const double k2 = k * k;

  KfeCoefficients c;
  c.k = k;
  c.R = R;
  c.L = L;
  for (int l = 0; l < L; ++l)
  {
    const double xl = std::pow(x, -l);
    const double xl1 = xl / x;
    const double xl2 = xl1 / x;
    const complex A = -k * H1 * xl - k * l * H0 * xl1;
    const complex B = -k * (l + 1.0) * H1 * xl1 + k * H0 * xl;
    const complex E = -k2 * ((xl - l * (l + 1.0) * xl2) * H0 - (2.0 * l + 1.0) * xl1 * H1);
    const complex I = -k2 * ((2.0 * l + 1.0) * xl1 * H0 + (xl - (l + 1.0) * (l + 2.0) * xl2) * H1);
    c.A.push_back(A);
    c.B.push_back(B);
    c.E.push_back(E);
    c.I.push_back(I);
    c.P.push_back(E + A / R + k2 * H0 * xl);
    c.Q.push_back(I + B / R + k2 * H1 * xl);
    c.trace0.push_back(H0 * xl);
    c.trace1.push_back(H1 * xl);
    c.curv0.push_back(H0 * xl / (R * R));
    c.curv1.push_back(H1 * xl / (R * R));
  }
  return c;
}

WfeCoefficients wfe_coeffs(double k, double R, int L)
{
  validate(k, R, L);
  const double x = k * R;
  if (!((L + 1) * std::log10(1.0 / x) <= 290.0))
  {
    throw ConditioningError("WFE with L = " + std::to_string(L) + " at kR = " + std::to_string(x) +
                            " would need scalars beyond 1e290");
  }
  const complex e = std::exp(kI * x);
  WfeCoefficients c;
  c.k = k;
  c.R = R;
  c.L = L;
  for (int l = 0; l < L; ++l)
  {
    const complex t = e * std::pow(x, -(l + 1.0));
    c.trace.push_back(t);
    c.c.push_back(t * (kI * k - (l + 1.0) / R));
  }
  return c;
}

KarpRecurrence karp_recurrence_rhs(int l)
{
  if (l < 1)
  {
    throw DomainError("Karp recurrence index must be >= 1");
  }
  // 2l F_l = -l^2 G_{l-1} - G_{l-1}'' and 2l G_l = (l-1)^2 F_{l-1} + F_{l-1}'';
  // integrating the angular second derivative by parts flips its sign.
  const double dl = l;
  return {2.0 * dl, dl * dl, -1.0, 2.0 * dl, -(dl - 1.0) * (dl - 1.0), 1.0};
}

WfeRecurrence wfe_recurrence_rhs(int l)
{
  if (l < 1)
  {
    throw DomainError("Wilcox recurrence index must be >= 1");
  }
  // 2il F_l = l(l-1) F_{l-1} + Laplace-Beltrami F_{l-1}.
  const double dl = l;
  return {2.0 * kI * dl, -dl * (dl - 1.0), 1.0};
}

BgtCoefficients bgt_coeffs(int order, double k, double R)
{
  validate(k, R, 1);
  BgtCoefficients c;
  c.order = order;
  if (order == 1)
  {
    c.alpha = kI * k - 1.0 / (2.0 * R);
    c.beta = 0.0;
  }
  else if (order == 2)
  {
    const complex d = 1.0 / R - kI * k;
    c.alpha = kI * k - 1.0 / (2.0 * R) + 1.0 / (8.0 * R * R * d);
    c.beta = 1.0 / (2.0 * R * R * d);
  }
  else
  {
    throw DomainError("BGT order must be 1 or 2");
  }
  return c;
}

std::vector<complex> ffp_from_karp(std::span<const complex> F0, std::span<const complex> G0,
                                   double k)
{
  if (F0.size() != G0.size())
  {
    throw DomainError("ffp_from_karp: F_0 and G_0 sample counts differ");
  }
  if (!(k > 0.0))
  {
    throw DomainError("ffp_from_karp: wavenumber must be positive");
  }
  // H_n(kr) ~ sqrt(2/(pi k r)) e^{i(kr - n pi/2 - pi/4)}.
  const complex scale =
    std::sqrt(2.0 / (std::numbers::pi * k)) * std::exp(-kI * (std::numbers::pi / 4.0));
  std::vector<complex> f(F0.size());
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    f[i] = scale * (F0[i] - kI * G0[i]);
  }
  return f;
}

}  // namespace feabc::abc
