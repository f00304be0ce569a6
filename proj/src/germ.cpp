#include "holecap/germ.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "holecap/errors.hpp"

namespace holecap {

AnalyticGerm::AnalyticGerm(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("germ degree must be non-negative");
  a_.assign((degree + 1) * (degree + 2) / 2, 0.0);
}

AnalyticGerm AnalyticGerm::from_terms(const std::vector<std::tuple<int, int, double>>& terms,
                                      int degree) {
  int d = std::max(degree, 0);
  for (const auto& [h, j, v] : terms) {
    if (h < 0 || j < 0) throw DomainError("germ exponents must be non-negative");
    if (degree < 0) d = std::max(d, h + j);
    else if (h + j > degree) throw DomainError("germ term exceeds stated degree");
  }
  AnalyticGerm g(d);
  for (const auto& [h, j, v] : terms) g.add(h, j, v);
  return g;
}

double AnalyticGerm::coeff(int h, int j) const {
  if (h < 0 || j < 0 || h + j > degree_) return 0.0;
  return a_[index(h, j)];
}

void AnalyticGerm::set(int h, int j, double v) {
  if (h < 0 || j < 0 || h + j > degree_) throw DomainError("germ index out of range");
  a_[index(h, j)] = v;
}

double AnalyticGerm::derivative(int h, int j) const {
  double f = 1.0;
  for (int i = 2; i <= h; ++i) f *= i;
  for (int i = 2; i <= j; ++i) f *= i;
  return coeff(h, j) * f;
}

double AnalyticGerm::eval(const Vec2& t) const {
  // Horner in t2 inside Horner in t1, by total degree.
  double s = 0.0;
  std::vector<double> p1(degree_ + 1, 1.0), p2(degree_ + 1, 1.0);
  for (int i = 1; i <= degree_; ++i) {
    p1[i] = p1[i - 1] * t.x();
    p2[i] = p2[i - 1] * t.y();
  }
  for (int k = 0; k <= degree_; ++k)
    for (int j = 0; j <= k; ++j) s += a_[index(k - j, j)] * p1[k - j] * p2[j];
  return s;
}

Vec2 AnalyticGerm::grad(const Vec2& t) const {
  return {d_dx1().eval(t), d_dx2().eval(t)};
}

double AnalyticGerm::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool AnalyticGerm::is_zero() const { return max_abs() == 0.0; }

int AnalyticGerm::order() const {
  const double tol = 1e-12 * max_abs();
  for (int k = 0; k <= degree_; ++k)
    for (int j = 0; j <= k; ++j)
      if (std::abs(a_[index(k - j, j)]) > tol) return k;
  return degree_ + 1;
}

AnalyticGerm AnalyticGerm::homogeneous(int k) const {
  AnalyticGerm g(std::max(k, 0));
  if (k >= 0 && k <= degree_)
    for (int j = 0; j <= k; ++j) g.set(k - j, j, coeff(k - j, j));
  return g;
}

AnalyticGerm AnalyticGerm::truncated(int k) const {
  AnalyticGerm g(std::max(k, 0));
  for (int d = 0; d <= std::min(k, degree_); ++d)
    for (int j = 0; j <= d; ++j) g.set(d - j, j, coeff(d - j, j));
  return g;
}

AnalyticGerm AnalyticGerm::d_dx1() const {
  AnalyticGerm g(std::max(degree_ - 1, 0));
  for (int k = 1; k <= degree_; ++k)
    for (int j = 0; j < k; ++j) g.add(k - j - 1, j, (k - j) * coeff(k - j, j));
  return g;
}

AnalyticGerm AnalyticGerm::d_dx2() const {
  AnalyticGerm g(std::max(degree_ - 1, 0));
  for (int k = 1; k <= degree_; ++k)
    for (int j = 1; j <= k; ++j) g.add(k - j, j - 1, j * coeff(k - j, j));
  return g;
}

AnalyticGerm AnalyticGerm::laplacian() const {
  AnalyticGerm a = d_dx1().d_dx1();
  a += d_dx2().d_dx2();
  return a;
}

AnalyticGerm AnalyticGerm::integral_x1() const {
  AnalyticGerm g(degree_ + 1);
  for (int k = 0; k <= degree_; ++k)
    for (int j = 0; j <= k; ++j) g.set(k - j + 1, j, coeff(k - j, j) / (k - j + 1));
  return g;
}

AnalyticGerm AnalyticGerm::dilated(double eps) const {
  AnalyticGerm g = *this;
  double p = 1.0;
  for (int k = 0; k <= degree_; ++k, p *= eps)
    for (int j = 0; j <= k; ++j) g.a_[index(k - j, j)] *= p;
  return g;
}

AnalyticGerm& AnalyticGerm::operator+=(const AnalyticGerm& o) {
  if (o.degree_ > degree_) {
    AnalyticGerm g(o.degree_);
    for (int k = 0; k <= degree_; ++k)
      for (int j = 0; j <= k; ++j) g.set(k - j, j, coeff(k - j, j));
    g.label = label;
    *this = std::move(g);
  }
  for (int k = 0; k <= o.degree_; ++k)
    for (int j = 0; j <= k; ++j) a_[index(k - j, j)] += o.coeff(k - j, j);
  return *this;
}

AnalyticGerm& AnalyticGerm::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

AnalyticGerm operator*(const AnalyticGerm& a, const AnalyticGerm& b) {
  AnalyticGerm g(a.degree() + b.degree());
  for (int ka = 0; ka <= a.degree(); ++ka)
    for (int ja = 0; ja <= ka; ++ja) {
      const double ca = a.coeff(ka - ja, ja);
      if (ca == 0.0) continue;
      for (int kb = 0; kb <= b.degree(); ++kb)
        for (int jb = 0; jb <= kb; ++jb)
          g.add(ka - ja + kb - jb, ja + jb, ca * b.coeff(kb - jb, jb));
    }
  return g;
}

double integrate_over_region(const QuadratureGrid& g, const AnalyticGerm& p) {
  const AnalyticGerm F = p.integral_x1();
  double s = 0.0;
  for (int i = 0; i < g.n; ++i) s += F.eval(g.node(i)) * g.nu(i, 0) * g.w(i);
  return s;
}

Eigen::VectorXd eval_on(const QuadratureGrid& g, const AnalyticGerm& p) {
  Eigen::VectorXd v(g.n);
  for (int i = 0; i < g.n; ++i) v(i) = p.eval(g.node(i));
  return v;
}

}  // namespace holecap
