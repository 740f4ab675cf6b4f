// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FEABC_ASSEMBLY_HPP
#define FEABC_ASSEMBLY_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "feabc/geometry.hpp"
#include "feabc/linsolve.hpp"

namespace feabc::assembly
{

using complex = std::complex<double>;
using SparseMatrix = linsolve::SparseMatrix;
using Triplet = Eigen::Triplet<complex>;

enum class AbcKind
{
  Kfe,   // Karp farfield expansion (planar)
  Wfe,   // Wilcox farfield expansion (axisymmetric)
  Bgt1,  // first-order Bayliss-Gunzburger-Turkel
  Bgt2,  // second-order Bayliss-Gunzburger-Turkel
};

enum class BoundaryKind
{
  Soft,  // u = -u_inc on the scatterer
  Hard,  // d_n u = -d_n u_inc on the scatterer
};

//
// Unknown ordering: field DOFs first, then the angular families
// F_0, G_0, F_1, G_1, ... (Karp) or F_0, F_1, ... (Wilcox), each with one
// entry per unique angular DOF.
//
struct DofLayout
{
  int field = 0;
  int trace = 0;
  int terms = 0;
  int families = 0;

  int total() const { return field + families * terms * trace; }
  int offset(int family, int l) const { return field + (l * families + family) * trace; }
};

struct BlockSystem
{
  SparseMatrix A;
  Eigen::VectorXcd b;
  DofLayout layout;
};

struct Problem
{
  const geometry::Patch *patch = nullptr;
  double k = 1.0;
  AbcKind abc = AbcKind::Kfe;
  int terms = 1;
  BoundaryKind bc = BoundaryKind::Soft;
  int quad_order = 0;  // Gauss points per direction; 0 selects p + 1
  double amplitude = 1.0;
};

// Incident plane wave A e^{ikx} (planar) or A e^{ikz} (axisymmetric) and its
// radial derivative at a point of the computational plane.
complex incident(const Problem &pb, const Eigen::Vector2d &x);
complex incident_dr(const Problem &pb, const Eigen::Vector2d &x);

// a(u, v) = int (grad u . grad v - k^2 u v) over the patch; on the meridian the
// integrand carries the axisymmetric weight rho.
std::vector<Triplet> assemble_interior(const geometry::Patch &patch, double k, int quad_order);

// Boundary mass M and angular stiffness K (int u_theta v_theta ds) on one
// circular edge, in unique angular numbering.
struct TraceMatrices
{
  SparseMatrix M;
  SparseMatrix K;
};

TraceMatrices assemble_trace(const geometry::BoundaryTrace &trace, int quad_order);

// int f v ds over one edge, in unique angular numbering.
Eigen::VectorXcd trace_load(const geometry::BoundaryTrace &trace,
                            const std::function<complex(double eta)> &f, int quad_order);

// L2 projection of f onto the edge basis, in unique angular numbering.
Eigen::VectorXcd trace_project(const geometry::BoundaryTrace &trace,
                               const std::function<complex(double eta)> &f, int quad_order);

// Factor (kR)^-(l-1) applied to the recurrence rows of order l. The family
// F_l enters every other row with a factor (kR)^-l, so the scaled rows keep
// all blocks of one column family on a common scale.
double recurrence_row_scale(const Problem &pb, int l);

BlockSystem assemble_system_2d(const Problem &pb);
BlockSystem assemble_system_3d_axisym(const Problem &pb);
BlockSystem assemble_bgt_system(const Problem &pb);

// Dispatch on pb.abc.
BlockSystem assemble_system(const Problem &pb);

//
// Direct solution of an assembled block system. The system first goes to
// linsolve as is. High angular modes make the coupled matrix too
// ill-conditioned for a plain sparse LU once L grows, so if the residual bound
// is missed the families are expanded in the eigenvectors of the boundary
// pencil K v = lambda M v, where the recurrences decouple; they are
// eliminated mode by mode, the remaining field system is factored, and the
// families are recovered afterwards. The report and the residual bound always
// refer to the full block system.
//
Eigen::VectorXcd solve_system(const Problem &pb, const BlockSystem &sys,
                              linsolve::SolveReport *report = nullptr);

}  // namespace feabc::assembly

#endif  // FEABC_ASSEMBLY_HPP
