#include "holecap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holecap/errors.hpp"

namespace holecap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kCheckPoints = 512;

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

std::vector<Vec2> polygon(const ClosedCurve& c, int n) {
  std::vector<Vec2> p(n);
  for (int i = 0; i < n; ++i) p[i] = c.point(kTwoPi * i / n);
  return p;
}

bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

ClosedCurve ClosedCurve::circle(double radius, Vec2 center) {
  if (!(radius > 0.0)) throw DomainError("circle radius must be positive");
  ClosedCurve c;
  c.shape_ = Shape::Circle;
  c.p0_ = c.p1_ = radius;
  c.x0_ = center.x();
  c.y0_ = center.y();
  c.xc_ = {radius};
  c.xs_ = {0.0};
  c.yc_ = {0.0};
  c.ys_ = {radius};
  return c;
}

ClosedCurve ClosedCurve::ellipse(double a, double b, Vec2 center) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("ellipse semi-axes must be positive");
  ClosedCurve c = circle(1.0, center);
  c.shape_ = Shape::Ellipse;
  c.p0_ = a;
  c.p1_ = b;
  c.xc_ = {a};
  c.ys_ = {b};
  return c;
}

ClosedCurve ClosedCurve::trig(Vec2 center, std::vector<double> xc, std::vector<double> xs,
                              std::vector<double> yc, std::vector<double> ys) {
  const std::size_t m = std::max({xc.size(), xs.size(), yc.size(), ys.size()});
  if (m == 0) throw DomainError("trig curve needs at least one harmonic");
  ClosedCurve c;
  c.shape_ = Shape::Trig;
  c.x0_ = center.x();
  c.y0_ = center.y();
  xc.resize(m, 0.0);
  xs.resize(m, 0.0);
  yc.resize(m, 0.0);
  ys.resize(m, 0.0);
  c.xc_ = std::move(xc);
  c.xs_ = std::move(xs);
  c.yc_ = std::move(yc);
  c.ys_ = std::move(ys);
  c.validate();
  return c;
}

Vec2 ClosedCurve::point(double t) const {
  Vec2 p(x0_, y0_);
  for (std::size_t m = 0; m < xc_.size(); ++m) {
    const double ct = std::cos((m + 1) * t), st = std::sin((m + 1) * t);
    p.x() += xc_[m] * ct + xs_[m] * st;
    p.y() += yc_[m] * ct + ys_[m] * st;
  }
  return p;
}

Vec2 ClosedCurve::d1(double t) const {
  Vec2 p = Vec2::Zero();
  for (std::size_t m = 0; m < xc_.size(); ++m) {
    const double k = m + 1.0;
    const double ct = std::cos(k * t), st = std::sin(k * t);
    p.x() += k * (-xc_[m] * st + xs_[m] * ct);
    p.y() += k * (-yc_[m] * st + ys_[m] * ct);
  }
  return p;
}

Vec2 ClosedCurve::d2(double t) const {
  Vec2 p = Vec2::Zero();
  for (std::size_t m = 0; m < xc_.size(); ++m) {
    const double k = m + 1.0;
    const double ct = std::cos(k * t), st = std::sin(k * t);
    p.x() -= k * k * (xc_[m] * ct + xs_[m] * st);
    p.y() -= k * k * (yc_[m] * ct + ys_[m] * st);
  }
  return p;
}

ClosedCurve ClosedCurve::scaled(double eps) const {
  ClosedCurve c = *this;
  c.p0_ *= eps;
  c.p1_ *= eps;
  c.x0_ *= eps;
  c.y0_ *= eps;
  for (auto* v : {&c.xc_, &c.xs_, &c.yc_, &c.ys_})
    for (double& a : *v) a *= eps;
  return c;
}

void ClosedCurve::validate() const {
  double vmax = 0.0, vmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCheckPoints; ++i) {
    const double s = d1(kTwoPi * i / kCheckPoints).norm();
    vmax = std::max(vmax, s);
    vmin = std::min(vmin, s);
  }
  if (!(vmin > 1e-9 * vmax)) throw DomainError("curve speed vanishes");
  const auto p = polygon(*this, kCheckPoints);
  double twice_area = 0.0;
  for (int i = 0; i < kCheckPoints; ++i) twice_area += cross(p[i], p[(i + 1) % kCheckPoints]);
  if (!(twice_area > 0.0)) throw DomainError("curve must be counterclockwise");
  for (int i = 0; i < kCheckPoints; ++i) {
    for (int j = i + 2; j < kCheckPoints; ++j) {
      if (i == 0 && j == kCheckPoints - 1) continue;
      if (segments_cross(p[i], p[i + 1], p[j], p[(j + 1) % kCheckPoints]))
        throw DomainError("curve self-intersects");
    }
  }
}

bool ClosedCurve::contains(const Vec2& q) const {
  const int n = 2048;
  double winding = 0.0;
  Vec2 prev = point(0.0) - q;
  for (int i = 1; i <= n; ++i) {
    const Vec2 cur = point(kTwoPi * i / n) - q;
    winding += std::atan2(cross(prev, cur), prev.dot(cur));
    prev = cur;
  }
  return std::abs(winding) > std::numbers::pi;
}

QuadratureGrid make_grid(const ClosedCurve& c, int n) {
  if (n < 4 || n % 2) throw DomainError("node count must be even and >= 4");
  QuadratureGrid g;
  g.n = n;
  g.t.resize(n);
  g.x.resize(n, 2);
  g.nu.resize(n, 2);
  g.tau.resize(n, 2);
  g.speed.resize(n);
  g.w.resize(n);
  g.kappa.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    const Vec2 p = c.point(t), v = c.d1(t), a = c.d2(t);
    const double s = v.norm();
    g.t(i) = t;
    g.x.row(i) = p.transpose();
    g.speed(i) = s;
    g.w(i) = s * kTwoPi / n;
    g.tau.row(i) = (v / s).transpose();
    g.nu.row(i) << v.y() / s, -v.x() / s;
    g.kappa(i) = cross(v, a) / (s * s * s);
  }
  return g;
}

double curve_length(const ClosedCurve& c) {
  const int n = std::max(256, 64 * c.degree());
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += c.d1(kTwoPi * i / n).norm();
  return s * kTwoPi / n;
}

double area(const ClosedCurve& c) {
  // Integrand x y' is a trigonometric polynomial of degree 2M: exact rule.
  const int n = 4 * c.degree() + 16;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    s += c.point(t).x() * c.d1(t).y();
  }
  return s * kTwoPi / n;
}

double containment_limit(const ClosedCurve& outer, const ClosedCurve& hole) {
  if (!outer.contains(Vec2::Zero())) throw DomainError("origin must lie inside the outer curve");
  const int no = 2048;
  const auto po = polygon(outer, no);
  double limit = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCheckPoints; ++i) {
    const Vec2 p = hole.point(kTwoPi * i / kCheckPoints);
    const double r = p.norm();
    if (r == 0.0) continue;
    const Vec2 d = p / r;
    double reach = std::numeric_limits<double>::infinity();
    for (int j = 0; j < no; ++j) {
      const Vec2 a = po[j], e = po[(j + 1) % no] - po[j];
      const double den = cross(d, e);
      if (std::abs(den) < 1e-300) continue;
      const double s = cross(a, e) / den;   // distance along the ray
      const double u = cross(a, d) / den;   // position along the edge
      if (s > 0.0 && u >= 0.0 && u <= 1.0) reach = std::min(reach, s);
    }
    limit = std::min(limit, reach / r);
  }
  return limit;
}

ClosedCurve scale_curve(const ClosedCurve& c, double eps, const ClosedCurve* outer) {
  if (!(eps > 0.0)) throw DomainError("scale factor must be positive");
  if (outer && !(eps < containment_limit(*outer, c) * (1.0 - 1e-9)))
    throw ContainmentError("scaled hole touches or crosses the outer boundary");
  return c.scaled(eps);
}

EllipticCoords EllipticCoords::from_axes(double a, double b) {
  if (!(a > b && b > 0.0)) throw DomainError("elliptic coordinates need a > b > 0");
  EllipticCoords e;
  e.c = std::sqrt(a * a - b * b);
  e.xi_bar = std::atanh(b / a);
  return e;
}

Vec2 elliptic_map(const EllipticCoords& e, double xi, double eta) {
  return {e.c * std::cosh(xi) * std::cos(eta), e.c * std::sinh(xi) * std::sin(eta)};
}

}  // namespace holecap
