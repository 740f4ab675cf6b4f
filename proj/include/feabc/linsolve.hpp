// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_LINSOLVE_HPP
#define FEABC_LINSOLVE_HPP

#include <complex>
#include <memory>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace feabc::linsolve
{

using complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<complex, Eigen::ColMajor, int>;

struct SolveReport
{
  double residual = 0.0;  // ||A u - b|| / ||b|| (0 for b = 0)
  double rcond = 0.0;     // reciprocal condition estimate of the scaled factor
};

// Residual bound every solve must meet.
inline constexpr double kResidualTolerance = 1e-10;

// Sparse LU factors of a column-equilibrated matrix, reusable for several
// right-hand sides. Throws DomainError for non-square or empty input and
// SolverError when the factorization is singular.
class Factorization
{
public:
  explicit Factorization(const SparseMatrix &A);
  ~Factorization();
  Factorization(const Factorization &) = delete;
  Factorization &operator=(const Factorization &) = delete;

  int size() const;
  double rcond() const;

  // One forward/backward substitution, no refinement.
  Eigen::VectorXcd apply(const Eigen::VectorXcd &b) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Sparse LU with fill-reducing ordering, column equilibration and iterative
// refinement. Throws DomainError for non-square or empty input and SolverError
// (carrying rcond) when the factorization is singular or the residual bound
// is not met.
Eigen::VectorXcd solve(const SparseMatrix &A, const Eigen::VectorXcd &b,
                       SolveReport *report = nullptr);

}  // namespace feabc::linsolve

#endif  // FEABC_LINSOLVE_HPP
