// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/assembly.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "feabc/error.hpp"
#include "feabc/farfield_abc.hpp"
#include "feabc/quadrature.hpp"

namespace feabc::assembly
{

namespace
{

constexpr complex kI{0.0, 1.0};

using geometry::PatchKind;

int rule_size(const geometry::Patch &patch, int quad_order)
{
  const int g = quad_order > 0 ? quad_order : patch.degree() + 1;
  if (g < 1)
  {
    throw ConfigError("quadrature order must be >= 1");
  }
  return g;
}

// Basis values at the Gauss points of one knot span.
struct SpanSamples
{
  int span = 0;
  std::vector<double> points;
  std::vector<double> weights;
  std::vector<splines::BasisValues> basis;
};

std::vector<SpanSamples> sample_spans(const splines::NurbsBasis &basis, int g)
{
  std::vector<SpanSamples> out;
  const auto &kv = basis.knots();
  for (int s : kv.element_spans())
  {
    const auto rule = quadrature::gauss_legendre(g, kv[s], kv[s + 1]);
    SpanSamples ss{s, rule.points, rule.weights, {}};
    for (double x : rule.points)
    {
      ss.basis.push_back(basis.eval_in_span(s, x));
    }
    out.push_back(std::move(ss));
  }
  return out;
}

// Unit boundary curve point and derivative.
std::pair<Eigen::Vector2d, Eigen::Vector2d> curve_at(const splines::NurbsCurve &c, double eta)
{
  const auto b = c.basis().eval(eta);
  Eigen::Vector2d p = Eigen::Vector2d::Zero(), d = Eigen::Vector2d::Zero();
  for (std::size_t a = 0; a < b.value.size(); ++a)
  {
    p += b.value[a] * c.points[b.first + a];
    d += b.d1[a] * c.points[b.first + a];
  }
  return {p, d};
}

void add_block(std::vector<Triplet> &t, int row0, int col0, const SparseMatrix &B, complex s)
{
  if (s == 0.0)
  {
    return;
  }
  for (int j = 0; j < B.outerSize(); ++j)
  {
    for (SparseMatrix::InnerIterator it(B, j); it; ++it)
    {
      t.emplace_back(row0 + static_cast<int>(it.row()), col0 + j, s * it.value());
    }
  }
}

SparseMatrix build(int n, const std::vector<Triplet> &t)
{
  SparseMatrix A(n, n);
  A.setFromTriplets(t.begin(), t.end());
  A.makeCompressed();
  return A;
}

// Eliminate prescribed field DOFs 0..g.size()-1 by lifting: their columns move
// to the right-hand side and their rows become identity rows.
void apply_dirichlet(std::vector<Triplet> &t, Eigen::VectorXcd &b, const Eigen::VectorXcd &g)
{
  const int nd = static_cast<int>(g.size());
  std::vector<Triplet> kept;
  kept.reserve(t.size());
  for (const auto &e : t)
  {
    const bool row_fixed = e.row() < nd;
    const bool col_fixed = e.col() < nd;
    if (row_fixed)
    {
      continue;
    }
    if (col_fixed)
    {
      b[e.row()] -= e.value() * g[e.col()];
      continue;
    }
    kept.push_back(e);
  }
  for (int d = 0; d < nd; ++d)
  {
    kept.emplace_back(d, d, 1.0);
    b[d] = g[d];
  }
  t.swap(kept);
}

// Scatterer data: right-hand side contributions for the chosen condition.
void apply_scatterer(const Problem &pb, int g, std::vector<Triplet> &t, Eigen::VectorXcd &b)
{
  const auto &patch = *pb.patch;
  const auto inner = geometry::boundary_trace(patch, geometry::Edge::Inner);
  if (pb.bc == BoundaryKind::Hard)
  {
    // Integration by parts on the scatterer (outward normal -r) gives +int d_r u_inc v.
    const Eigen::VectorXcd load = trace_load(
      inner, [&](double eta) { return incident_dr(pb, patch.point(0.0, eta)); }, g);
    b.head(load.size()) += load;
  }
  else
  {
    const Eigen::VectorXcd data = trace_project(
      inner, [&](double eta) { return -incident(pb, patch.point(0.0, eta)); }, g);
    apply_dirichlet(t, b, data);
  }
}

void require_patch(const Problem &pb, PatchKind kind, const char *what)
{
  if (pb.patch == nullptr)
  {
    throw ConfigError(std::string(what) + ": no patch");
  }
  if (pb.patch->kind() != kind)
  {
    throw ConfigError(std::string(what) + ": wrong patch kind for this boundary condition");
  }
  if (pb.terms < 1)
  {
    throw ConfigError(std::string(what) + ": number of expansion terms must be >= 1");
  }
  if (!(pb.k > 0.0) || !std::isfinite(pb.k))
  {
    throw ConfigError(std::string(what) + ": wavenumber must be positive");
  }
}

}  // namespace

complex incident(const Problem &pb, const Eigen::Vector2d &x)
{
  // Propagation along +x on the plane and along the symmetry axis +z otherwise.
  const double s = pb.patch->kind() == PatchKind::Annulus ? x.x() : x.y();
  return pb.amplitude * std::exp(kI * pb.k * s);
}

complex incident_dr(const Problem &pb, const Eigen::Vector2d &x)
{
  const double s = pb.patch->kind() == PatchKind::Annulus ? x.x() : x.y();
  return kI * pb.k * (s / x.norm()) * pb.amplitude * std::exp(kI * pb.k * s);
}

std::vector<Triplet> assemble_interior(const geometry::Patch &patch, double k, int quad_order)
{
  const int g = rule_size(patch, quad_order);
  const auto radial = sample_spans(patch.radial(), g);
  const auto angular = sample_spans(patch.angular(), g);
  const int p = patch.radial().degree();
  const int q = patch.angular().degree();
  const int nloc = (p + 1) * (q + 1);
  const double r0 = patch.r0();
  const double dr = patch.R() - patch.r0();
  const bool axisym = patch.kind() == PatchKind::Meridian;
  const double k2 = k * k;

  // Boundary curve at the angular Gauss points, shared by all radial spans.
  std::vector<std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>>> curve(angular.size());
  for (std::size_t e = 0; e < angular.size(); ++e)
  {
    for (double eta : angular[e].points)
    {
      curve[e].push_back(curve_at(patch.boundary_curve(), eta));
    }
  }

  std::vector<Triplet> t;
  t.reserve(radial.size() * angular.size() * nloc * nloc);
  std::vector<int> dofs(nloc);
  Eigen::MatrixXd local(nloc, nloc);
  Eigen::VectorXd val(nloc);
  Eigen::Matrix2Xd grad(2, nloc);
  for (const auto &rs : radial)
  {
    for (std::size_t e = 0; e < angular.size(); ++e)
    {
      const auto &as = angular[e];
      local.setZero();
      for (int gi = 0; gi < g; ++gi)
      {
        const auto &bx = rs.basis[gi];
        const double r = r0 + dr * rs.points[gi];
        for (int gj = 0; gj < g; ++gj)
        {
          const auto &by = as.basis[gj];
          const auto &[c, dc] = curve[e][gj];
          Eigen::Matrix2d J;
          J.col(0) = dr * c;
          J.col(1) = r * dc;
          const double det = J.determinant();
          const Eigen::Matrix2d invT = J.inverse().transpose();
          double w = rs.weights[gi] * as.weights[gj] * det;
          if (axisym)
          {
            w *= r * c.x();
          }
          for (int a = 0; a <= p; ++a)
          {
            for (int b = 0; b <= q; ++b)
            {
              const int loc = a * (q + 1) + b;
              val[loc] = bx.value[a] * by.value[b];
              grad.col(loc) = invT * Eigen::Vector2d(bx.d1[a] * by.value[b], bx.value[a] * by.d1[b]);
            }
          }
          local.noalias() += w * (grad.transpose() * grad - k2 * val * val.transpose());
        }
      }
      for (int a = 0; a <= p; ++a)
      {
        for (int b = 0; b <= q; ++b)
        {
          dofs[a * (q + 1) + b] = patch.dof(rs.span - p + a, as.span - q + b);
        }
      }
      for (int i = 0; i < nloc; ++i)
      {
        for (int j = 0; j < nloc; ++j)
        {
          t.emplace_back(dofs[i], dofs[j], local(i, j));
        }
      }
    }
  }
  return t;
}

TraceMatrices assemble_trace(const geometry::BoundaryTrace &trace, int quad_order)
{
  const auto &patch = *trace.patch;
  const int g = rule_size(patch, quad_order);
  const auto angular = sample_spans(patch.angular(), g);
  const int q = patch.angular().degree();
  const int m = patch.angular_unique();
  const auto &map = patch.angular_map();
  std::vector<Eigen::Triplet<double>> tm, tk;
  Eigen::MatrixXd lm(q + 1, q + 1), lk(q + 1, q + 1);
  for (const auto &as : angular)
  {
    lm.setZero();
    lk.setZero();
    for (int gj = 0; gj < g; ++gj)
    {
      const double eta = as.points[gj];
      const double mu = trace.measure(eta) * as.weights[gj];
      const double speed = patch.boundary_curve().tangent(eta).norm();
      const auto &b = as.basis[gj];
      const Eigen::Map<const Eigen::VectorXd> v(b.value.data(), q + 1);
      const Eigen::Map<const Eigen::VectorXd> d(b.d1.data(), q + 1);
      lm.noalias() += mu * v * v.transpose();
      lk.noalias() += (mu / (speed * speed)) * d * d.transpose();
    }
    for (int a = 0; a <= q; ++a)
    {
      for (int c = 0; c <= q; ++c)
      {
        const int i = map[as.span - q + a];
        const int j = map[as.span - q + c];
        tm.emplace_back(i, j, lm(a, c));
        tk.emplace_back(i, j, lk(a, c));
      }
    }
  }
  Eigen::SparseMatrix<double> M(m, m), K(m, m);
  M.setFromTriplets(tm.begin(), tm.end());
  K.setFromTriplets(tk.begin(), tk.end());
  return {M.cast<complex>(), K.cast<complex>()};
}

Eigen::VectorXcd trace_load(const geometry::BoundaryTrace &trace,
                            const std::function<complex(double)> &f, int quad_order)
{
  const auto &patch = *trace.patch;
  const int g = rule_size(patch, quad_order);
  const auto angular = sample_spans(patch.angular(), g);
  const int q = patch.angular().degree();
  const auto &map = patch.angular_map();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(patch.angular_unique());
  for (const auto &as : angular)
  {
    for (int gj = 0; gj < g; ++gj)
    {
      const double eta = as.points[gj];
      const complex fw = f(eta) * trace.measure(eta) * as.weights[gj];
      for (int a = 0; a <= q; ++a)
      {
        out[map[as.span - q + a]] += fw * as.basis[gj].value[a];
      }
    }
  }
  return out;
}

Eigen::VectorXcd trace_project(const geometry::BoundaryTrace &trace,
                               const std::function<complex(double)> &f, int quad_order)
{
  // The data is generally not in the spline space; integrate it more accurately
  // than the field matrices.
  const int g = rule_size(*trace.patch, quad_order) + 2;
  const TraceMatrices tm = assemble_trace(trace, g);
  return linsolve::solve(tm.M, trace_load(trace, f, g));
}

double recurrence_row_scale(const Problem &pb, int l)
{
  return std::pow(pb.k * pb.patch->R(), -(l - 1.0));
}

BlockSystem assemble_system_2d(const Problem &pb)
{
  require_patch(pb, PatchKind::Annulus, "KFE system");
  const auto &patch = *pb.patch;
  const int g = rule_size(patch, pb.quad_order);
  const int L = pb.terms;
  const auto coef = abc::kfe_coeffs(pb.k, patch.R(), L);
  const auto outer = geometry::boundary_trace(patch, geometry::Edge::Outer);
  const TraceMatrices tm = assemble_trace(outer, g);
  const SparseMatrix &M = tm.M;
  const SparseMatrix &K = tm.K;

  DofLayout lay{patch.num_dofs(), patch.angular_unique(), L, 2};
  const int outer_row = (patch.radial_count() - 1) * patch.angular_unique();
  std::vector<Triplet> t = assemble_interior(patch, pb.k, g);

  for (int l = 0; l < L; ++l)
  {
    // Field rows on S_R: -(d_r u, v).
    add_block(t, outer_row, lay.offset(0, l), M, -coef.A[l]);
    add_block(t, outer_row, lay.offset(1, l), M, -coef.B[l]);
  }
  // Trace continuity u = sum H_0 F_l/(kR)^l + H_1 G_l/(kR)^l on S_R.
  const int row_trace = lay.offset(0, 0);
  add_block(t, row_trace, outer_row, M, 1.0);
  for (int l = 0; l < L; ++l)
  {
    add_block(t, row_trace, lay.offset(0, l), M, -coef.trace0[l]);
    add_block(t, row_trace, lay.offset(1, l), M, -coef.trace1[l]);
  }
  // The expansion satisfies the Helmholtz equation on S_R.
  const int row_helm = lay.offset(1, 0);
  for (int l = 0; l < L; ++l)
  {
    add_block(t, row_helm, lay.offset(0, l), M, coef.P[l]);
    add_block(t, row_helm, lay.offset(0, l), K, -coef.curv0[l]);
    add_block(t, row_helm, lay.offset(1, l), M, coef.Q[l]);
    add_block(t, row_helm, lay.offset(1, l), K, -coef.curv1[l]);
  }
  // Karp recurrences.
  for (int l = 1; l < L; ++l)
  {
    const auto r = abc::karp_recurrence_rhs(l);
    const double w = recurrence_row_scale(pb, l);
    add_block(t, lay.offset(0, l), lay.offset(0, l), M, w * r.x_mass);
    add_block(t, lay.offset(0, l), lay.offset(1, l - 1), M, w * r.y_mass);
    add_block(t, lay.offset(0, l), lay.offset(1, l - 1), K, w * r.y_stiff);
    add_block(t, lay.offset(1, l), lay.offset(1, l), M, w * r.r_mass);
    add_block(t, lay.offset(1, l), lay.offset(0, l - 1), M, w * r.t_mass);
    add_block(t, lay.offset(1, l), lay.offset(0, l - 1), K, w * r.t_stiff);
  }

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(lay.total());
  apply_scatterer(pb, g, t, b);
  return {build(lay.total(), t), std::move(b), lay};
}

BlockSystem assemble_system_3d_axisym(const Problem &pb)
{
  require_patch(pb, PatchKind::Meridian, "WFE system");
  const auto &patch = *pb.patch;
  const int g = rule_size(patch, pb.quad_order);
  const int L = pb.terms;
  const auto coef = abc::wfe_coeffs(pb.k, patch.R(), L);
  const auto outer = geometry::boundary_trace(patch, geometry::Edge::Outer);
  const TraceMatrices tm = assemble_trace(outer, g);
  const SparseMatrix &M = tm.M;
  const SparseMatrix &K = tm.K;

  DofLayout lay{patch.num_dofs(), patch.angular_unique(), L, 1};
  const int outer_row = (patch.radial_count() - 1) * patch.angular_unique();
  std::vector<Triplet> t = assemble_interior(patch, pb.k, g);

  for (int l = 0; l < L; ++l)
  {
    add_block(t, outer_row, lay.offset(0, l), M, -coef.c[l]);
  }
  const int row_trace = lay.offset(0, 0);
  add_block(t, row_trace, outer_row, M, 1.0);
  for (int l = 0; l < L; ++l)
  {
    add_block(t, row_trace, lay.offset(0, l), M, -coef.trace[l]);
  }
  for (int l = 1; l < L; ++l)
  {
    const auto r = abc::wfe_recurrence_rhs(l);
    const double w = recurrence_row_scale(pb, l);
    add_block(t, lay.offset(0, l), lay.offset(0, l), M, w * r.f_mass);
    add_block(t, lay.offset(0, l), lay.offset(0, l - 1), M, w * r.prev_mass);
    add_block(t, lay.offset(0, l), lay.offset(0, l - 1), K, w * r.prev_stiff);
  }

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(lay.total());
  apply_scatterer(pb, g, t, b);
  return {build(lay.total(), t), std::move(b), lay};
}

BlockSystem assemble_bgt_system(const Problem &pb)
{
  require_patch(pb, PatchKind::Annulus, "BGT system");
  const auto &patch = *pb.patch;
  const int g = rule_size(patch, pb.quad_order);
  const int order = pb.abc == AbcKind::Bgt2 ? 2 : 1;
  const auto coef = abc::bgt_coeffs(order, pb.k, patch.R());
  const auto outer = geometry::boundary_trace(patch, geometry::Edge::Outer);
  const TraceMatrices tm = assemble_trace(outer, g);

  DofLayout lay{patch.num_dofs(), patch.angular_unique(), 0, 0};
  const int outer_row = (patch.radial_count() - 1) * patch.angular_unique();
  std::vector<Triplet> t = assemble_interior(patch, pb.k, g);
  // -(d_r u, v) with d_r u = alpha u + beta u_theta_theta, integrated by parts.
  add_block(t, outer_row, outer_row, tm.M, -coef.alpha);
  add_block(t, outer_row, outer_row, tm.K, coef.beta);

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(lay.total());
  apply_scatterer(pb, g, t, b);
  return {build(lay.total(), t), std::move(b), lay};
}

BlockSystem assemble_system(const Problem &pb)
{
  switch (pb.abc)
  {
  case AbcKind::Kfe:
    return assemble_system_2d(pb);
  case AbcKind::Wfe:
    return assemble_system_3d_axisym(pb);
  case AbcKind::Bgt1:
  case AbcKind::Bgt2:
    return assemble_bgt_system(pb);
  }
  throw ConfigError("unknown boundary condition kind");
}

}  // namespace feabc::assembly
