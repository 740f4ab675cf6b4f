// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_QUADRATURE_HPP
#define FEABC_QUADRATURE_HPP

#include <vector>

namespace feabc::quadrature
{

// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2g - 1.
struct Rule
{
  std::vector<double> points;
  std::vector<double> weights;
};

Rule gauss_legendre(int g);

// The same rule mapped affinely onto [a, b].
Rule gauss_legendre(int g, double a, double b);

}  // namespace feabc::quadrature

#endif  // FEABC_QUADRATURE_HPP
