// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_ERROR_HPP
#define FEABC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace feabc
{

// Base of all library errors. Each subclass maps to one status code of the C API.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (x <= 0 for Y_n, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

// Invalid or inconsistent scenario configuration.
class ConfigError : public Error
{
public:
  using Error::Error;
};

// Coefficients of the boundary condition would overflow double precision.
class ConditioningError : public Error
{
public:
  using Error::Error;
};

// Factorization failed or the residual bound was not met.
class SolverError : public Error
{
public:
  SolverError(const std::string &what, double rcond = 0.0) : Error(what), rcond_(rcond) {}

  // Reciprocal condition estimate reported by the factorization (0 if unknown).
  double rcond() const { return rcond_; }

private:
  double rcond_;
};

}  // namespace feabc

#endif  // FEABC_ERROR_HPP
