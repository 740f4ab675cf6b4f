// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_FARFIELD_ABC_HPP
#define FEABC_FARFIELD_ABC_HPP

#include <complex>
#include <span>
#include <vector>

namespace feabc::abc
{

using complex = std::complex<double>;

//
// Scalars of the Karp farfield expansion
//   u = H_0(kr) sum_l F_l / (kr)^l + H_1(kr) sum_l G_l / (kr)^l
// evaluated on r = R, l = 0..L-1.
//
struct KfeCoefficients
{
  double k = 0.0;
  double R = 0.0;
  int L = 0;
  std::vector<complex> A;       // d/dr of H_0(kr)/(kr)^l at R
  std::vector<complex> B;       // d/dr of H_1(kr)/(kr)^l at R
  std::vector<complex> E;       // d2/dr2 of H_0(kr)/(kr)^l at R
  std::vector<complex> I;       // d2/dr2 of H_1(kr)/(kr)^l at R
  std::vector<complex> P;       // E + A/R + k^2 H_0/(kR)^l
  std::vector<complex> Q;       // I + B/R + k^2 H_1/(kR)^l
  std::vector<complex> trace0;  // H_0(kR)/(kR)^l
  std::vector<complex> trace1;  // H_1(kR)/(kR)^l
  std::vector<complex> curv0;   // H_0(kR)/(R^2 (kR)^l)
  std::vector<complex> curv1;   // H_1(kR)/(R^2 (kR)^l)
};

// Throws ConditioningError when (kR)^-(L+1) |Y_1(kR)| exceeds 1e290 and
// DomainError for k <= 0, R <= 0 or L < 1.
KfeCoefficients kfe_coeffs(double k, double R, int L);

//
// Scalars of the Wilcox expansion u = e^{ikr} sum_l F_l / (kr)^{l+1}.
//
struct WfeCoefficients
{
  double k = 0.0;
  double R = 0.0;
  int L = 0;
  std::vector<complex> c;      // d/dr of e^{ikr}/(kr)^{l+1} at R
  std::vector<complex> trace;  // e^{ikR}/(kR)^{l+1}
};

WfeCoefficients wfe_coeffs(double k, double R, int L);

// Weak-form factors of the two Karp recurrences for l >= 1:
//   x M F_l + (y_mass M + y_stiff K) G_{l-1} = 0
//   r M G_l + (t_mass M + t_stiff K) F_{l-1} = 0
// where M is the boundary mass matrix and K the angular stiffness.
struct KarpRecurrence
{
  double x_mass;
  double y_mass;
  double y_stiff;
  double r_mass;
  double t_mass;
  double t_stiff;
};

KarpRecurrence karp_recurrence_rhs(int l);

// Weak-form factors of the Wilcox recurrence for l >= 1:
//   f_mass M F_l + (prev_mass M + prev_stiff K) F_{l-1} = 0
struct WfeRecurrence
{
  complex f_mass;
  double prev_mass;
  double prev_stiff;
};

WfeRecurrence wfe_recurrence_rhs(int l);

// Boundary operator d_r u = alpha u + beta d2_theta u on r = R.
struct BgtCoefficients
{
  int order = 1;
  complex alpha;
  complex beta;
};

BgtCoefficients bgt_coeffs(int order, double k, double R);

// Farfield pattern f(theta) with u ~ e^{ikr} f(theta) / sqrt(r), from the
// leading Karp coefficients F_0, G_0 sampled at the same angles.
std::vector<complex> ffp_from_karp(std::span<const complex> F0, std::span<const complex> G0,
                                   double k);

}  // namespace feabc::abc

#endif  // FEABC_FARFIELD_ABC_HPP
