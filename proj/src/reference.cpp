// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/reference.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "feabc/error.hpp"
#include "feabc/farfield_abc.hpp"
#include "feabc/quadrature.hpp"
#include "feabc/specfun.hpp"

namespace feabc::reference
{

namespace
{

constexpr complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// Relative size below which series terms are dropped.
complex ipow(int n)
{
  static const complex table[4] = {1.0, kI, -1.0, -kI};
  return table[n % 4];
}

// Derivative of a cylinder function from the sequence: C_n' = C_{n-1} - (n/x) C_n.
template <class V>
auto cyl_derivative(const V &c, int n, double x)
{
  return n == 0 ? -c[1] : c[n - 1] - (n / x) * c[n];
}

// Spherical analogue: c_n' = c_{n-1} - ((n+1)/x) c_n.
template <class V>
auto sph_derivative(const V &c, int n, double x)
{
  return n == 0 ? -c[1] : c[n - 1] - ((n + 1.0) / x) * c[n];
}

std::vector<complex> hankels(const specfun::BesselSequence &s)
{
  std::vector<complex> h(s.j.size());
  for (std::size_t n = 0; n < h.size(); ++n)
  {
    h[n] = {s.j[n], s.y[n]};
  }
  return h;
}

// Gauss points and basis values of one knot span.
struct Span
{
  int span;
  quadrature::Rule rule;
  std::vector<splines::BasisValues> basis;
};

std::vector<Span> spans_of(const splines::NurbsBasis &b, int g)
{
  std::vector<Span> out;
  const auto &kv = b.knots();
  for (int s : kv.element_spans())
  {
    Span sp{s, quadrature::gauss_legendre(g, kv[s], kv[s + 1]), {}};
    for (double x : sp.rule.points)
    {
      sp.basis.push_back(b.eval_in_span(s, x));
    }
    out.push_back(std::move(sp));
  }
  return out;
}

complex combine(const geometry::Patch &patch, const Eigen::VectorXcd &x,
                const splines::BasisValues &br, const splines::BasisValues &ba, bool radial_d1)
{
  complex u = 0.0;
  const int p = static_cast<int>(br.value.size()) - 1;
  const int q = static_cast<int>(ba.value.size()) - 1;
  for (int a = 0; a <= p; ++a)
  {
    const double rv = radial_d1 ? br.d1[a] : br.value[a];
    for (int b = 0; b <= q; ++b)
    {
      u += rv * ba.value[b] * x[patch.dof(br.first + a, ba.first + b)];
    }
  }
  return u;
}

// Values of one angular family sum_j R_j(eta) v[offset + map[j]].
complex trace_value(const geometry::Patch &patch, const Eigen::VectorXcd &x, int offset, double eta)
{
  const auto b = patch.angular().eval(eta);
  const auto &map = patch.angular_map();
  complex v = 0.0;
  for (std::size_t a = 0; a < b.value.size(); ++a)
  {
    v += b.value[a] * x[offset + map[b.first + a]];
  }
  return v;
}

}  // namespace

ExactSolution::ExactSolution(Scatterer s, BoundaryKind bc, double k, double r0, double amplitude,
                             int extra_terms, double tail_tolerance)
  : scatterer_(s), k_(k), r0_(r0)
{
  if (!(k > 0.0) || !(r0 > 0.0))
  {
    throw DomainError("exact solution: need k > 0 and r0 > 0");
  }
  const double x = k * r0;
  const int nmax = static_cast<int>(std::ceil(x)) + extra_terms;
  const auto seq = s == Scatterer::Cylinder ? specfun::bessel_jy_sequence(nmax + 1, x)
                                            : specfun::sph_bessel_jy_sequence(nmax + 1, x);
  const auto h = hankels(seq);
  double peak = 0.0;
  for (int n = 0; n <= nmax; ++n)
  {
    complex ratio;
    double size;
    if (bc == BoundaryKind::Soft)
    {
      ratio = seq.j[n] / h[n];
      size = std::abs(seq.j[n]);
    }
    else
    {
      const double dj = s == Scatterer::Cylinder ? cyl_derivative(seq.j, n, x) : sph_derivative(seq.j, n, x);
      const complex dh = s == Scatterer::Cylinder ? cyl_derivative(h, n, x) : sph_derivative(h, n, x);
      ratio = dj / dh;
      size = std::abs(ratio * h[n]);
    }
    if (!std::isfinite(size) || !std::isfinite(std::abs(ratio)))
    {
      break;
    }
    peak = std::max(peak, size);
    if (n > x && size < tail_tolerance * peak)
    {
      break;
    }
    const double mult = s == Scatterer::Cylinder ? (n == 0 ? 1.0 : 2.0) : 2.0 * n + 1.0;
    a_.push_back(-amplitude * mult * ipow(n) * ratio);
  }
}

complex ExactSolution::field(double r, double theta) const
{
  const int n = n_max();
  const double x = k_ * r;
  complex u = 0.0;
  if (scatterer_ == Scatterer::Cylinder)
  {
    const auto s = specfun::bessel_jy_sequence(n, x);
    for (int m = 0; m <= n; ++m)
    {
      u += a_[m] * s.hankel(m) * std::cos(m * theta);
    }
  }
  else
  {
    const auto s = specfun::sph_bessel_jy_sequence(n, x);
    const auto P = specfun::legendre_p_sequence(n, std::cos(theta));
    for (int m = 0; m <= n; ++m)
    {
      u += a_[m] * s.hankel(m) * P[m];
    }
  }
  return u;
}

complex ExactSolution::field(const Eigen::Vector2d &x) const
{
  const double r = x.norm();
  const double theta =
    scatterer_ == Scatterer::Cylinder ? std::atan2(x.y(), x.x()) : std::atan2(x.x(), x.y());
  return field(r, theta);
}

complex ExactSolution::ffp(double theta) const
{
  complex f = 0.0;
  if (scatterer_ == Scatterer::Cylinder)
  {
    // H_n(kr) ~ sqrt(2/(pi k r)) e^{i(kr - n pi/2 - pi/4)}.
    for (int n = 0; n <= n_max(); ++n)
    {
      f += a_[n] * std::conj(ipow(n)) * std::cos(n * theta);
    }
    return f * std::sqrt(2.0 / (kPi * k_)) * std::exp(-kI * (kPi / 4.0));
  }
  // h_n(kr) ~ (-i)^{n+1} e^{ikr} / (kr).
  const auto P = specfun::legendre_p_sequence(n_max(), std::cos(theta));
  for (int n = 0; n <= n_max(); ++n)
  {
    f += a_[n] * std::conj(ipow(n + 1)) * P[n];
  }
  return f / k_;
}

std::pair<complex, complex> ExactSolution::karp(int l, double theta) const
{
  if (scatterer_ != Scatterer::Cylinder)
  {
    throw DomainError("karp: only defined for the cylinder");
  }
  if (l < 0)
  {
    throw DomainError("karp: negative index");
  }
  // H_n = H_0 sum_l p_{n,l} x^-l + H_1 sum_l q_{n,l} x^-l from
  // H_{n+1} = (2n/x) H_n - H_{n-1}.
  const int N = n_max();
  std::vector<double> p_prev(l + 1, 0.0), q_prev(l + 1, 0.0), p_cur(l + 1, 0.0), q_cur(l + 1, 0.0);
  p_prev[0] = 1.0;  // H_0
  q_cur[0] = 1.0;   // H_1
  complex F = a_[0] * p_prev[l];
  complex G = a_[0] * q_prev[l];
  if (N >= 1)
  {
    F += a_[1] * p_cur[l] * std::cos(theta);
    G += a_[1] * q_cur[l] * std::cos(theta);
  }
  for (int n = 1; n < N; ++n)
  {
    std::vector<double> p_next(l + 1), q_next(l + 1);
    for (int j = 0; j <= l; ++j)
    {
      p_next[j] = (j > 0 ? 2.0 * n * p_cur[j - 1] : 0.0) - p_prev[j];
      q_next[j] = (j > 0 ? 2.0 * n * q_cur[j - 1] : 0.0) - q_prev[j];
    }
    p_prev.swap(p_cur);
    q_prev.swap(q_cur);
    p_cur.swap(p_next);
    q_cur.swap(q_next);
    F += a_[n + 1] * p_cur[l] * std::cos((n + 1) * theta);
    G += a_[n + 1] * q_cur[l] * std::cos((n + 1) * theta);
  }
  return {F, G};
}

complex incident_wave(Scatterer s, double k, double amplitude, const Eigen::Vector2d &x)
{
  const double d = s == Scatterer::Cylinder ? x.x() : x.y();
  return amplitude * std::exp(kI * k * d);
}

complex field_value(const geometry::Patch &patch, const Eigen::VectorXcd &x, double xi, double eta)
{
  return combine(patch, x, patch.radial().eval(xi), patch.angular().eval(eta), false);
}

complex field_dr(const geometry::Patch &patch, const Eigen::VectorXcd &x, double xi, double eta)
{
  // r = r0 + (R - r0) xi along each ray.
  return combine(patch, x, patch.radial().eval(xi), patch.angular().eval(eta), true) /
         (patch.R() - patch.r0());
}

std::vector<double> ffp_angles(geometry::PatchKind kind, int samples)
{
  if (samples < 1)
  {
    throw DomainError("ffp_angles: need at least one sample");
  }
  std::vector<double> t(samples);
  for (int s = 0; s < samples; ++s)
  {
    t[s] = kind == geometry::PatchKind::Annulus ? 2.0 * kPi * s / samples
                                                : (samples == 1 ? 0.0 : kPi * s / (samples - 1));
  }
  return t;
}

std::vector<complex> trace_ffp(const geometry::Patch &patch, double k, const Eigen::VectorXcd &x,
                               std::span<const double> angles)
{
  if (patch.kind() != geometry::PatchKind::Annulus)
  {
    throw DomainError("trace_ffp: planar patch required");
  }
  std::vector<complex> f(angles.size());
  const int g = patch.degree() + 4;
  const double kR = k * patch.R();
  const int nmax = static_cast<int>(std::ceil(kR)) + 40;
  std::vector<double> theta, w;
  std::vector<complex> u;
  for (const auto &sp : spans_of(patch.angular(), g))
  {
    for (std::size_t i = 0; i < sp.rule.points.size(); ++i)
    {
      const double eta = sp.rule.points[i];
      theta.push_back(patch.angle(eta));
      w.push_back(sp.rule.weights[i] * patch.boundary_curve().tangent(eta).norm());
      u.push_back(field_value(patch, x, 1.0, eta));
    }
  }
  const auto seq = specfun::bessel_jy_sequence(nmax, kR);
  std::vector<complex> ca, cb;
  for (int n = 0; n <= nmax; ++n)
  {
    const complex h = seq.hankel(n);
    if (!std::isfinite(std::abs(h)))
    {
      break;
    }
    complex a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
    {
      a += w[i] * u[i] * std::cos(n * theta[i]);
      b += w[i] * u[i] * std::sin(n * theta[i]);
    }
    const double norm = n == 0 ? 2.0 * kPi : kPi;
    const complex factor = std::conj(ipow(n)) / (norm * h);
    ca.push_back(a * factor);
    cb.push_back(b * factor);
  }
  const complex c = std::sqrt(2.0 / (kPi * k)) * std::exp(-kI * (kPi / 4.0));
  for (std::size_t s = 0; s < angles.size(); ++s)
  {
    complex acc = 0.0;
    for (std::size_t n = 0; n < ca.size(); ++n)
    {
      acc += ca[n] * std::cos(n * angles[s]) + cb[n] * std::sin(n * angles[s]);
    }
    f[s] = c * acc;
  }
  return f;
}


std::vector<complex> numeric_ffp(const assembly::Problem &pb, const assembly::DofLayout &layout,
                                 const Eigen::VectorXcd &x, std::span<const double> angles)
{
  const auto &patch = *pb.patch;
  std::vector<complex> f(angles.size());
  if (pb.abc == assembly::AbcKind::Kfe)
  {
    std::vector<complex> F0(angles.size()), G0(angles.size());
    for (std::size_t s = 0; s < angles.size(); ++s)
    {
      const double eta = patch.eta_of_angle(angles[s]);
      F0[s] = trace_value(patch, x, layout.offset(0, 0), eta);
      G0[s] = trace_value(patch, x, layout.offset(1, 0), eta);
    }
    return abc::ffp_from_karp(F0, G0, pb.k);
  }
  if (pb.abc == assembly::AbcKind::Wfe)
  {
    for (std::size_t s = 0; s < angles.size(); ++s)
    {
      f[s] = trace_value(patch, x, layout.offset(0, 0), patch.eta_of_angle(angles[s])) / pb.k;
    }
    return f;
  }
  return trace_ffp(patch, pb.k, x, angles);
}

ErrorReport l2_errors(const assembly::Problem &pb, const assembly::DofLayout &layout,
                      const Eigen::VectorXcd &x, const ExactSolution &exact, int quad_order,
                      int ffp_samples)
{
  const auto &patch = *pb.patch;
  const int g = quad_order > 0 ? quad_order : patch.degree() + 2;
  const bool axisym = patch.kind() == geometry::PatchKind::Meridian;
  const auto radial = spans_of(patch.radial(), g);
  const auto angular = spans_of(patch.angular(), g);
  const double dr = patch.R() - patch.r0();

  double num = 0.0, den = 0.0;
  for (const auto &as : angular)
  {
    for (std::size_t j = 0; j < as.rule.points.size(); ++j)
    {
      const double eta = as.rule.points[j];
      const Eigen::Vector2d c = patch.boundary_curve().point(eta);
      const double speed = patch.boundary_curve().tangent(eta).norm();
      for (const auto &rs : radial)
      {
        for (std::size_t i = 0; i < rs.rule.points.size(); ++i)
        {
          const double r = patch.r0() + dr * rs.rule.points[i];
          double w = rs.rule.weights[i] * as.rule.weights[j] * dr * r * speed;
          if (axisym)
          {
            w *= r * c.x();
          }
          const complex uh = combine(patch, x, rs.basis[i], as.basis[j], false);
          const complex ue = exact.field(r * c);
          num += w * std::norm(uh - ue);
          den += w * std::norm(ue);
        }
      }
    }
  }
  if (!(den > 0.0))
  {
    throw DomainError("l2_errors: exact solution has zero norm");
  }
  ErrorReport rep;
  rep.domain = std::sqrt(num / den);

  const auto outer = geometry::boundary_trace(patch, geometry::Edge::Outer);
  const auto rb = patch.radial().eval(1.0);
  num = den = 0.0;
  for (const auto &as : angular)
  {
    for (std::size_t j = 0; j < as.rule.points.size(); ++j)
    {
      const double eta = as.rule.points[j];
      const double w = as.rule.weights[j] * outer.measure(eta);
      const complex uh = combine(patch, x, rb, as.basis[j], false);
      const complex ue = exact.field(patch.point(1.0, eta));
      num += w * std::norm(uh - ue);
      den += w * std::norm(ue);
    }
  }
  rep.boundary = std::sqrt(num / den);

  const auto angles = ffp_angles(patch.kind(), ffp_samples);
  const auto fh = numeric_ffp(pb, layout, x, angles);
  num = den = 0.0;
  for (std::size_t s = 0; s < angles.size(); ++s)
  {
    const complex fe = exact.ffp(angles[s]);
    num += std::norm(fh[s] - fe);
    den += std::norm(fe);
  }
  rep.ffp = std::sqrt(num / den);
  return rep;
}

ConvergenceFit fit_order(std::span<const double> h, std::span<const double> error)
{
  if (h.size() != error.size() || h.size() < 3)
  {
    throw DomainError("fit_order: need at least three (h, error) pairs");
  }
  const std::size_t n = h.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!(h[i] > 0.0) || !(error[i] > 0.0))
    {
      throw DomainError("fit_order: mesh sizes and errors must be positive");
    }
    lx[i] = std::log(h[i]);
    ly[i] = std::log(error[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    mx += lx[i] / n;
    my += ly[i] / n;
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0))
  {
    throw DomainError("fit_order: mesh sizes must not all coincide");
  }
  ConvergenceFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    const double d = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += d * d;
  }
  fit.residual = std::sqrt(ss / n);
  for (std::size_t i = 0; i + 1 < n; ++i)
  {
    fit.pairwise.push_back(std::log(error[i] / error[i + 1]) / std::log(h[i] / h[i + 1]));
  }
  return fit;
}

}  // namespace feabc::reference
