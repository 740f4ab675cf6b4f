// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/linsolve.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include <umfpack.h>

#include "feabc/error.hpp"

namespace feabc::linsolve
{

namespace
{

struct SymbolicDeleter
{
  void operator()(void *p) const { umfpack_zi_free_symbolic(&p); }
};

struct NumericDeleter
{
  void operator()(void *p) const { umfpack_zi_free_numeric(&p); }
};

using SymbolicPtr = std::unique_ptr<void, SymbolicDeleter>;
using NumericPtr = std::unique_ptr<void, NumericDeleter>;

// Extra refinement sweeps beyond UMFPACK's own, used only if the bound is missed.
constexpr int kExtraRefinements = 4;

double relative_residual(const SparseMatrix &A, const Eigen::VectorXcd &x,
                         const Eigen::VectorXcd &b)
{
  const double nb = b.norm();
  const double nr = (A * x - b).norm();
  return nb > 0.0 ? nr / nb : nr;
}

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

struct Factorization::Impl
{
  SparseMatrix A;  // column-scaled copy referenced by the factors
  Eigen::VectorXd colscale;
  SymbolicPtr symbolic;
  NumericPtr numeric;
  double control[UMFPACK_CONTROL];
  double rcond = 0.0;
};

Factorization::Factorization(const SparseMatrix &A_in) : impl_(std::make_unique<Impl>())
{
  const int n = static_cast<int>(A_in.rows());
  if (n == 0)
  {
    throw DomainError("solve: empty system");
  }
  if (A_in.cols() != n)
  {
    throw DomainError("solve: matrix must be square");
  }

  // Column equilibration: unknown families can differ by many orders of magnitude.
  auto &A = impl_->A;
  A = A_in;
  A.makeCompressed();
  impl_->colscale = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j)
  {
    double m = 0.0;
    for (SparseMatrix::InnerIterator it(A, j); it; ++it)
    {
      m = std::max(m, std::abs(it.value()));
    }
    if (m > 0.0)
    {
      impl_->colscale[j] = 1.0 / m;
      for (SparseMatrix::InnerIterator it(A, j); it; ++it)
      {
        it.valueRef() *= impl_->colscale[j];
      }
    }
  }

  const int *Ap = A.outerIndexPtr();
  const int *Ai = A.innerIndexPtr();
  const double *Ax = reinterpret_cast<const double *>(A.valuePtr());
  double info[UMFPACK_INFO];
  umfpack_zi_defaults(impl_->control);

  void *raw = nullptr;
  int status = umfpack_zi_symbolic(n, n, Ap, Ai, Ax, nullptr, &raw, impl_->control, info);
  impl_->symbolic.reset(raw);
  if (status != UMFPACK_OK)
  {
    throw SolverError("solve: symbolic factorization failed (status " + std::to_string(status) +
                      ")");
  }
  raw = nullptr;
  status = umfpack_zi_numeric(Ap, Ai, Ax, nullptr, impl_->symbolic.get(), &raw, impl_->control, info);
  impl_->numeric.reset(raw);
  impl_->rcond = info[UMFPACK_RCOND];
  if (status != UMFPACK_OK)
  {
    throw SolverError("solve: matrix is singular (status " + std::to_string(status) + ", rcond " +
                        sci(impl_->rcond) + ")",
                      impl_->rcond);
  }
}

Factorization::~Factorization() = default;

int Factorization::size() const { return static_cast<int>(impl_->A.rows()); }

double Factorization::rcond() const { return impl_->rcond; }

Eigen::VectorXcd Factorization::apply(const Eigen::VectorXcd &b) const
{
  const int n = size();
  if (b.size() != n)
  {
    throw DomainError("solve: right-hand side size does not match the matrix");
  }
  const auto &A = impl_->A;
  Eigen::VectorXcd y(n);
  double info[UMFPACK_INFO];
  const int s = umfpack_zi_solve(UMFPACK_A, A.outerIndexPtr(), A.innerIndexPtr(),
                                 reinterpret_cast<const double *>(A.valuePtr()), nullptr,
                                 reinterpret_cast<double *>(y.data()), nullptr,
                                 reinterpret_cast<const double *>(b.data()), nullptr,
                                 impl_->numeric.get(), impl_->control, info);
  if (s != UMFPACK_OK)
  {
    throw SolverError("solve: triangular solve failed (status " + std::to_string(s) + ")",
                      impl_->rcond);
  }
  return impl_->colscale.cast<complex>().cwiseProduct(y);
}

Eigen::VectorXcd solve(const SparseMatrix &A, const Eigen::VectorXcd &b, SolveReport *report)
{
  if (A.rows() == 0)
  {
    throw DomainError("solve: empty system");
  }
  if (A.cols() != A.rows() || b.size() != A.rows())
  {
    throw DomainError("solve: matrix must be square and match the right-hand side");
  }
  const Factorization lu(A);
  Eigen::VectorXcd x = lu.apply(b);
  double res = relative_residual(A, x, b);
  for (int it = 0; it < kExtraRefinements && !(res <= kResidualTolerance); ++it)
  {
    x += lu.apply(b - A * x);
    res = relative_residual(A, x, b);
  }
  if (report)
  {
    report->residual = res;
    report->rcond = lu.rcond();
  }
  if (!(res <= kResidualTolerance))
  {
    throw SolverError("solve: relative residual " + sci(res) + " exceeds bound (rcond " +
                        sci(lu.rcond()) + ")",
                      lu.rcond());
  }
  return x;
}

}  // namespace feabc::linsolve
