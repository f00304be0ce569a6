#pragma once

#include <Eigen/Dense>
#include <vector>

namespace holecap {

using Vec2 = Eigen::Vector2d;

// Smooth 2π-periodic Jordan curve stored as a trigonometric polynomial:
//   x(t) = x0 + sum_m xc[m-1] cos(mt) + xs[m-1] sin(mt), same for y.
class ClosedCurve {
 public:
  enum class Shape { Circle, Ellipse, Trig };

  static ClosedCurve circle(double radius, Vec2 center = Vec2::Zero());
  static ClosedCurve ellipse(double a, double b, Vec2 center = Vec2::Zero());
  static ClosedCurve trig(Vec2 center, std::vector<double> xc, std::vector<double> xs,
                          std::vector<double> yc, std::vector<double> ys);

  Vec2 point(double t) const;
  Vec2 d1(double t) const;
  Vec2 d2(double t) const;

  Shape shape() const { return shape_; }
  // Radius for circles, semi-axes for ellipses (undefined for Trig).
  double radius() const { return p0_; }
  double semi_a() const { return p0_; }
  double semi_b() const { return p1_; }
  Vec2 center() const { return {x0_, y0_}; }
  int degree() const { return static_cast<int>(xc_.size()); }

  const std::vector<double>& xc() const { return xc_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& yc() const { return yc_; }
  const std::vector<double>& ys() const { return ys_; }

  ClosedCurve scaled(double eps) const;

  // Throws DomainError on vanishing speed, self-intersection or clockwise
  // orientation.
  void validate() const;

  // Winding-number test against a dense polygon.
  bool contains(const Vec2& p) const;

 private:
  ClosedCurve() = default;
  Shape shape_ = Shape::Trig;
  double p0_ = 0.0, p1_ = 0.0;
  double x0_ = 0.0, y0_ = 0.0;
  std::vector<double> xc_, xs_, yc_, ys_;
};

// Nyström nodes on a curve.
struct QuadratureGrid {
  int n = 0;
  Eigen::VectorXd t;
  Eigen::MatrixXd x;    // n x 2 positions
  Eigen::MatrixXd nu;   // n x 2 outward unit normals
  Eigen::MatrixXd tau;  // n x 2 unit tangents (counterclockwise)
  Eigen::VectorXd speed;
  Eigen::VectorXd w;    // speed * 2π/n
  Eigen::VectorXd kappa;  // signed curvature, positive on convex parts

  double length() const { return w.sum(); }
  double integrate(const Eigen::VectorXd& f) const { return w.dot(f); }
  Vec2 node(int i) const { return x.row(i).transpose(); }
  Vec2 normal(int i) const { return nu.row(i).transpose(); }
};

QuadratureGrid make_grid(const ClosedCurve& c, int n);

double curve_length(const ClosedCurve& c);
double area(const ClosedCurve& c);

// Positions multiplied by eps.  When `outer` is given the scaled curve must
// lie strictly inside it.
ClosedCurve scale_curve(const ClosedCurve& c, double eps, const ClosedCurve* outer = nullptr);

// Largest eps with eps*hole inside outer, estimated by ray sampling from the
// origin.  Not guaranteed sharp.
double containment_limit(const ClosedCurve& outer, const ClosedCurve& hole);

// Elliptic coordinates x1 = c cosh(xi) cos(eta), x2 = c sinh(xi) sin(eta).
struct EllipticCoords {
  double c = 0.0;
  double xi_bar = 0.0;
  static EllipticCoords from_axes(double a, double b);
};

Vec2 elliptic_map(const EllipticCoords& e, double xi, double eta);

}  // namespace holecap
