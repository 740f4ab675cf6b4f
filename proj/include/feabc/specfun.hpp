// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_SPECFUN_HPP
#define FEABC_SPECFUN_HPP

#include <complex>
#include <vector>

namespace feabc::specfun
{

using complex = std::complex<double>;

// Largest order accepted by the single-order entry points.
inline constexpr int kMaxSingleOrder = 200;

struct BesselPair
{
  double j;
  double y;
};

// Cylindrical Bessel functions of the first and second kind, J_n(x) and Y_n(x).
// Requires x > 0 and 0 <= n <= kMaxSingleOrder; throws DomainError otherwise.
BesselPair bessel_jy(int n, double x);

// H_n^{(1)}(x) = J_n(x) + i Y_n(x).
complex hankel1(int n, double x);

// J_0..J_nmax and Y_0..Y_nmax from one recurrence sweep. Y_n is allowed to
// overflow to -inf for very small x and large n; callers must check.
struct BesselSequence
{
  std::vector<double> j;
  std::vector<double> y;

  complex hankel(int n) const { return {j[n], y[n]}; }
};
BesselSequence bessel_jy_sequence(int nmax, double x);

// Spherical Bessel functions j_n, y_n and h_n^{(1)} = j_n + i y_n.
BesselPair sph_bessel_jy(int n, double x);
complex sph_hankel1(int n, double x);
BesselSequence sph_bessel_jy_sequence(int nmax, double x);

// Legendre polynomial P_n(x) for |x| <= 1.
double legendre_p(int n, double x);

// P_0(x)..P_nmax(x).
std::vector<double> legendre_p_sequence(int nmax, double x);

}  // namespace feabc::specfun

#endif  // FEABC_SPECFUN_HPP
