// Copyright The feabc Authors
// SPDX-License-Identifier: Apache-2.0

#include "feabc/splines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "feabc/error.hpp"

namespace feabc::splines
{

KnotVector::KnotVector(std::vector<double> knots, int degree)
  : knots_(std::move(knots)), degree_(degree)
{
  if (degree_ < 0)
  {
    throw DomainError("KnotVector: negative degree");
  }
  if (static_cast<int>(knots_.size()) < 2 * degree_ + 2)
  {
    throw DomainError("KnotVector: need at least 2p+2 knots");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i)
  {
    if (!(knots_[i] >= knots_[i - 1]))
    {
      throw DomainError("KnotVector: knots must be nondecreasing");
    }
  }
  if (!(back() > front()))
  {
    throw DomainError("KnotVector: empty parametric domain");
  }
  for (double b : breakpoints())
  {
    const int m = multiplicity(b);
    if (m > degree_ + 1)
    {
      throw DomainError("KnotVector: knot multiplicity exceeds p+1");
    }
  }
}

KnotVector KnotVector::open_uniform(int degree, int num_basis, double a, double b)
{
  if (num_basis < degree + 1)
  {
    throw DomainError("open_uniform: need at least p+1 basis functions");
  }
  const int spans = num_basis - degree;
  std::vector<double> k;
  k.reserve(num_basis + degree + 1);
  k.insert(k.end(), degree + 1, a);
  for (int i = 1; i < spans; ++i)
  {
    k.push_back(a + (b - a) * i / spans);
  }
  k.insert(k.end(), degree + 1, b);
  return {std::move(k), degree};
}

int KnotVector::find_span(double x) const
{
  const double a = front();
  const double b = back();
  const double slack = 1e-14 * (b - a);
  if (!(x >= a - slack && x <= b + slack))
  {
    throw DomainError("find_span: parameter " + std::to_string(x) + " outside [" +
                      std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  const int n = num_basis();
  if (x >= b)
  {
    // Last nonempty span ending at b.
    int s = n - 1;
    while (s > degree_ && knots_[s] == knots_[s + 1])
    {
      --s;
    }
    return s;
  }
  if (x <= a)
  {
    int s = degree_;
    while (s < n - 1 && knots_[s] == knots_[s + 1])
    {
      ++s;
    }
    return s;
  }
  // upper_bound gives the first knot > x; the span starts one before it.
  const auto it = std::upper_bound(knots_.begin() + degree_, knots_.begin() + n + 1, x);
  return static_cast<int>(it - knots_.begin()) - 1;
}

int KnotVector::multiplicity(double x) const
{
  return static_cast<int>(std::count(knots_.begin(), knots_.end(), x));
}

bool KnotVector::is_open() const
{
  return multiplicity(knots_.front()) == degree_ + 1 && multiplicity(knots_.back()) == degree_ + 1;
}

std::vector<double> KnotVector::breakpoints() const
{
  std::vector<double> out;
  for (double k : knots_)
  {
    if (out.empty() || k != out.back())
    {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<int> KnotVector::element_spans() const
{
  std::vector<int> out;
  for (int s = degree_; s < num_basis(); ++s)
  {
    if (knots_[s + 1] > knots_[s])
    {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<double> KnotVector::greville() const
{
  std::vector<double> g(num_basis());
  for (int i = 0; i < num_basis(); ++i)
  {
    double s = 0.0;
    for (int j = 1; j <= degree_; ++j)
    {
      s += knots_[i + j];
    }
    g[i] = degree_ == 0 ? 0.5 * (knots_[i] + knots_[i + 1]) : s / degree_;
  }
  return g;
}

BasisValues eval_bspline_in_span(const KnotVector &kv, int span, double x)
{
  // Derivatives of the nonzero basis functions (Piegl & Tiller, algorithm A2.3).
  const int p = kv.degree();
  const auto U = kv.knots();
  std::vector<double> left(p + 1), right(p + 1);
  std::vector<std::vector<double>> ndu(p + 1, std::vector<double>(p + 1));
  ndu[0][0] = 1.0;
  for (int j = 1; j <= p; ++j)
  {
    left[j] = x - U[span + 1 - j];
    right[j] = U[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r)
    {
      ndu[j][r] = right[r + 1] + left[j - r];
      const double temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }

  constexpr int kOrder = 2;
  std::vector<std::vector<double>> ders(kOrder + 1, std::vector<double>(p + 1, 0.0));
  for (int j = 0; j <= p; ++j)
  {
    ders[0][j] = ndu[j][p];
  }
  std::vector<std::vector<double>> a(2, std::vector<double>(p + 1));
  for (int r = 0; r <= p; ++r)
  {
    int s1 = 0, s2 = 1;
    a[0][0] = 1.0;
    for (int k = 1; k <= std::min(kOrder, p); ++k)
    {
      double d = 0.0;
      const int rk = r - k;
      const int pk = p - k;
      if (r >= k)
      {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j)
      {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk)
      {
        a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
        d += a[s2][k] * ndu[r][pk];
      }
      ders[k][r] = d;
      std::swap(s1, s2);
    }
  }
  int r = p;
  for (int k = 1; k <= std::min(kOrder, p); ++k)
  {
    for (int j = 0; j <= p; ++j)
    {
      ders[k][j] *= r;
    }
    r *= (p - k);
  }

  BasisValues out;
  out.first = span - p;
  out.value = std::move(ders[0]);
  out.d1 = std::move(ders[1]);
  out.d2 = std::move(ders[2]);
  return out;
}

BasisValues eval_bspline(const KnotVector &kv, double x)
{
  return eval_bspline_in_span(kv, kv.find_span(x), x);
}

BasisValues rationalize(const BasisValues &b, std::span<const double> weights)
{
  const std::size_t n = b.value.size();
  double W = 0.0, W1 = 0.0, W2 = 0.0;
  for (std::size_t a = 0; a < n; ++a)
  {
    const double w = weights[b.first + a];
    W += b.value[a] * w;
    W1 += b.d1[a] * w;
    W2 += b.d2[a] * w;
  }
  // Positive weights and a partition of unity keep W strictly positive.
  if (!(W > 0.0))
  {
    throw DomainError("rationalize: nonpositive weight function");
  }
  BasisValues out;
  out.first = b.first;
  out.value.resize(n);
  out.d1.resize(n);
  out.d2.resize(n);
  for (std::size_t a = 0; a < n; ++a)
  {
    const double w = weights[b.first + a];
    const double R = b.value[a] * w / W;
    const double R1 = (b.d1[a] * w - R * W1) / W;
    out.value[a] = R;
    out.d1[a] = R1;
    out.d2[a] = (b.d2[a] * w - 2.0 * R1 * W1 - R * W2) / W;
  }
  return out;
}

NurbsBasis::NurbsBasis(KnotVector kv, std::vector<double> weights)
  : kv_(std::move(kv)), weights_(std::move(weights))
{
  if (static_cast<int>(weights_.size()) != kv_.num_basis())
  {
    throw DomainError("NurbsBasis: weight count does not match basis count");
  }
  for (double w : weights_)
  {
    if (!(w > 0.0))
    {
      throw DomainError("NurbsBasis: weights must be positive");
    }
  }
}

NurbsBasis NurbsBasis::polynomial(KnotVector kv)
{
  std::vector<double> w(kv.num_basis(), 1.0);
  return {std::move(kv), std::move(w)};
}

BasisValues NurbsBasis::eval(double x) const
{
  return rationalize(eval_bspline(kv_, x), weights_);
}

BasisValues NurbsBasis::eval_in_span(int span, double x) const
{
  return rationalize(eval_bspline_in_span(kv_, span, x), weights_);
}

Eigen::Vector2d NurbsCurve::point(double x) const
{
  const BasisValues b = basis().eval(x);
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (std::size_t a = 0; a < b.value.size(); ++a)
  {
    c += b.value[a] * points[b.first + a];
  }
  return c;
}

Eigen::Vector2d NurbsCurve::tangent(double x) const
{
  const BasisValues b = basis().eval(x);
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (std::size_t a = 0; a < b.d1.size(); ++a)
  {
    c += b.d1[a] * points[b.first + a];
  }
  return c;
}

namespace
{

struct Homogeneous
{
  Eigen::Vector3d v;  // (w x, w y, w)
};

std::vector<Eigen::Vector3d> to_homogeneous(const NurbsCurve &c)
{
  std::vector<Eigen::Vector3d> h(c.points.size());
  for (std::size_t i = 0; i < h.size(); ++i)
  {
    h[i] << c.weights[i] * c.points[i], c.weights[i];
  }
  return h;
}

NurbsCurve from_homogeneous(KnotVector kv, const std::vector<Eigen::Vector3d> &h)
{
  NurbsCurve out{std::move(kv), {}, {}};
  out.weights.resize(h.size());
  out.points.resize(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
  {
    out.weights[i] = h[i][2];
    out.points[i] = h[i].head<2>() / h[i][2];
  }
  return out;
}

}  // namespace

NurbsCurve insert_knot(const NurbsCurve &curve, double x)
{
  const KnotVector &kv = curve.knots;
  if (!(x > kv.front() && x < kv.back()))
  {
    throw DomainError("insert_knot: knot must lie strictly inside the parametric domain");
  }
  const int p = kv.degree();
  if (kv.multiplicity(x) >= p)
  {
    throw DomainError("insert_knot: knot multiplicity would exceed p");
  }
  const int k = kv.find_span(x);
  const auto U = kv.knots();
  const auto P = to_homogeneous(curve);
  const int n = kv.num_basis();

  std::vector<Eigen::Vector3d> Q(n + 1);
  for (int i = 0; i <= n; ++i)
  {
    if (i <= k - p)
    {
      Q[i] = P[i];
    }
    else if (i >= k + 1)
    {
      Q[i] = P[i - 1];
    }
    else
    {
      const double alpha = (x - U[i]) / (U[i + p] - U[i]);
      Q[i] = alpha * P[i] + (1.0 - alpha) * P[i - 1];
    }
  }
  std::vector<double> knots(U.begin(), U.end());
  knots.insert(knots.begin() + k + 1, x);
  return from_homogeneous(KnotVector(std::move(knots), p), Q);
}

NurbsCurve subdivide(const NurbsCurve &curve, int parts)
{
  if (parts < 1)
  {
    throw DomainError("subdivide: parts must be >= 1");
  }
  std::vector<double> inserted;
  const auto U = curve.knots.knots();
  for (int s : curve.knots.element_spans())
  {
    for (int q = 1; q < parts; ++q)
    {
      inserted.push_back(U[s] + (U[s + 1] - U[s]) * q / parts);
    }
  }
  NurbsCurve out = curve;
  for (double x : inserted)
  {
    out = insert_knot(out, x);
  }
  return out;
}

NurbsCurve elevate_order(const NurbsCurve &curve)
{
  const KnotVector &kv = curve.knots;
  if (!kv.is_open())
  {
    throw DomainError("elevate_order: requires an open knot vector");
  }
  const int p = kv.degree();
  std::vector<double> knots;
  for (double b : kv.breakpoints())
  {
    knots.insert(knots.end(), kv.multiplicity(b) + 1, b);
  }
  KnotVector elevated(std::move(knots), p + 1);
  const int n = elevated.num_basis();
  const std::vector<double> tau = elevated.greville();

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd rhs(n, 3);
  const auto P = to_homogeneous(curve);
  for (int i = 0; i < n; ++i)
  {
    const BasisValues nb = eval_bspline(elevated, tau[i]);
    for (std::size_t a = 0; a < nb.value.size(); ++a)
    {
      A(i, nb.first + static_cast<int>(a)) = nb.value[a];
    }
    const BasisValues ob = eval_bspline(kv, tau[i]);
    Eigen::Vector3d h = Eigen::Vector3d::Zero();
    for (std::size_t a = 0; a < ob.value.size(); ++a)
    {
      h += ob.value[a] * P[ob.first + a];
    }
    rhs.row(i) = h.transpose();
  }
  const Eigen::MatrixXd sol = A.partialPivLu().solve(rhs);
  std::vector<Eigen::Vector3d> Q(n);
  for (int i = 0; i < n; ++i)
  {
    Q[i] = sol.row(i).transpose();
  }
  return from_homogeneous(std::move(elevated), Q);
}

NurbsCurve refine(const NurbsCurve &curve, const RefinementSpec &spec)
{
  if (spec.target_degree < curve.degree())
  {
    throw DomainError("refine: target degree below current degree");
  }
  NurbsCurve out = curve;
  while (out.degree() < spec.target_degree)
  {
    out = elevate_order(out);
  }
  for (double x : spec.inserted_knots)
  {
    out = insert_knot(out, x);
  }
  if (spec.periodic)
  {
    periodic_couple(out);
  }
  return out;
}

NurbsCurve unit_circle()
{
  const double w = std::numbers::sqrt2 / 2.0;
  std::vector<double> knots{0, 0, 0, 0.25, 0.25, 0.5, 0.5, 0.75, 0.75, 1, 1, 1};
  NurbsCurve c{KnotVector(std::move(knots), 2), {1, w, 1, w, 1, w, 1, w, 1}, {}};
  c.points = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}};
  return c;
}

NurbsCurve unit_meridian()
{
  const double w = std::numbers::sqrt2 / 2.0;
  std::vector<double> knots{0, 0, 0, 0.5, 0.5, 1, 1, 1};
  NurbsCurve c{KnotVector(std::move(knots), 2), {1, w, 1, w, 1}, {}};
  c.points = {{0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}};
  return c;
}

std::vector<int> periodic_couple(const NurbsCurve &curve, double tol)
{
  const int n = static_cast<int>(curve.points.size());
  if (n < 3)
  {
    throw DomainError("periodic_couple: too few control points");
  }
  const double gap = (curve.points.front() - curve.points.back()).norm();
  const double wgap = std::abs(curve.weights.front() - curve.weights.back());
  if (gap > tol || wgap > tol)
  {
    throw DomainError("periodic_couple: curve end points do not coincide (gap " +
                      std::to_string(gap) + ")");
  }
  std::vector<int> map(n);
  for (int i = 0; i < n - 1; ++i)
  {
    map[i] = i;
  }
  map[n - 1] = 0;
  return map;
}

}  // namespace feabc::splines
