// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "feabc/error.hpp"
#include "feabc/linsolve.hpp"

using namespace feabc;
using namespace feabc::linsolve;

namespace
{

constexpr complex kI{0.0, 1.0};

SparseMatrix from_triplets(int n, const std::vector<Eigen::Triplet<complex>> &t)
{
  SparseMatrix A(n, n);
  A.setFromTriplets(t.begin(), t.end());
  return A;
}

// Random sparse, diagonally weighted complex matrix.
SparseMatrix random_matrix(int n, std::mt19937 &gen)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> col(0, n - 1);
  std::vector<Eigen::Triplet<complex>> t;
  for (int i = 0; i < n; ++i)
  {
    t.emplace_back(i, i, complex(4.0 + u(gen), u(gen)));
    for (int q = 0; q < 4; ++q)
    {
      t.emplace_back(i, col(gen), complex(u(gen), u(gen)));
    }
  }
  return from_triplets(n, t);
}

}  // namespace

TEST_CASE("identity system returns the right-hand side")
{
  SparseMatrix A(5, 5);
  A.setIdentity();
  Eigen::VectorXcd b(5);
  b << 1.0, kI, -2.0, 3.0 + kI, 0.5;
  SolveReport rep;
  const auto x = solve(A, b, &rep);
  CHECK((x - b).norm() == 0.0);
  CHECK(rep.residual == 0.0);
  CHECK(rep.rcond > 0.0);
}

TEST_CASE("2x2 complex system solved by hand")
{
  const SparseMatrix A = from_triplets(2, {{0, 0, 2.0}, {0, 1, kI}, {1, 0, -kI}, {1, 1, 1.0}});
  Eigen::VectorXcd b(2);
  b << 1.0, 0.0;
  const auto x = solve(A, b);
  CHECK(std::abs(x[0] - 1.0) < 1e-15);
  CHECK(std::abs(x[1] - kI) < 1e-15);
}

TEST_CASE("input validation and singular systems")
{
  CHECK_THROWS_AS(solve(SparseMatrix(0, 0), Eigen::VectorXcd(0)), DomainError);
  CHECK_THROWS_AS(solve(SparseMatrix(2, 3), Eigen::VectorXcd(2)), DomainError);
  const SparseMatrix S = from_triplets(3, {{0, 0, 1.0}, {1, 1, 1.0}, {2, 0, 1.0}});
  CHECK_THROWS_AS(solve(S, Eigen::VectorXcd::Ones(3)), SolverError);
}

TEST_CASE("badly scaled columns are equilibrated")
{
  // Unknowns spanning thirty orders of magnitude.
  std::vector<Eigen::Triplet<complex>> t;
  const int n = 40;
  for (int i = 0; i < n; ++i)
  {
    const double s = std::pow(10.0, -30.0 * i / (n - 1));
    t.emplace_back(i, i, 2.0 * s);
    if (i + 1 < n)
    {
      t.emplace_back(i + 1, i, kI * s);
      t.emplace_back(i, i + 1, 0.5 * std::pow(10.0, -30.0 * (i + 1) / (n - 1)));
    }
  }
  const SparseMatrix A = from_triplets(n, t);
  SolveReport rep;
  const auto x = solve(A, Eigen::VectorXcd::Ones(n), &rep);
  CHECK(rep.residual <= kResidualTolerance);
  CHECK(x.allFinite());
}

TEST_CASE("permuted systems give permuted solutions")
{
  std::mt19937 gen(42);
  for (int trial = 0; trial < 5; ++trial)
  {
    const int n = 200;
    const SparseMatrix A = random_matrix(n, gen);
    Eigen::VectorXcd b = Eigen::VectorXcd::Random(n);
    SolveReport rep;
    const auto x = solve(A, b, &rep);
    CHECK(rep.residual <= kResidualTolerance);

    Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> P(n);
    P.setIdentity();
    std::shuffle(P.indices().data(), P.indices().data() + n, gen);
    const SparseMatrix PA = (P * A).eval();
    const auto y = solve(PA, P * b);
    CHECK((y - x).norm() <= 1e-13 * x.norm());

    // Deterministic for a fixed input.
    CHECK((solve(A, b) - x).norm() == 0.0);
  }
}
