#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "holecap/geometry.hpp"

namespace holecap {

// Taylor data of a function at the concentration point:
//   u(t) ~ sum_{h+j<=D} a(h,j) t1^h t2^j,  a(h,j) = d1^h d2^j u(0) / (h! j!).
class AnalyticGerm {
 public:
  AnalyticGerm() : AnalyticGerm(0) {}
  explicit AnalyticGerm(int degree);

  // Entries (h, j, value); degree is the largest h+j unless given.
  static AnalyticGerm from_terms(const std::vector<std::tuple<int, int, double>>& terms,
                                 int degree = -1);

  int degree() const { return degree_; }
  double coeff(int h, int j) const;
  void set(int h, int j, double v);
  void add(int h, int j, double v) { set(h, j, coeff(h, j) + v); }

  // d1^h d2^j u(0).
  double derivative(int h, int j) const;

  double eval(const Vec2& t) const;
  Vec2 grad(const Vec2& t) const;

  // Vanishing order: first degree with a coefficient above 1e-12 * max|a|.
  // Returns degree()+1 for the zero germ.
  int order() const;
  AnalyticGerm homogeneous(int k) const;
  AnalyticGerm truncated(int k) const;
  AnalyticGerm laplacian() const;
  AnalyticGerm d_dx1() const;
  AnalyticGerm d_dx2() const;
  // Antiderivative in t1 vanishing on t1 = 0.
  AnalyticGerm integral_x1() const;
  // Coefficients times eps^(h+j): the germ of t -> u(eps t).
  AnalyticGerm dilated(double eps) const;
  bool is_zero() const;
  double max_abs() const;

  AnalyticGerm& operator+=(const AnalyticGerm& o);
  AnalyticGerm& operator*=(double s);
  friend AnalyticGerm operator+(AnalyticGerm a, const AnalyticGerm& b) { return a += b; }
  friend AnalyticGerm operator*(double s, AnalyticGerm a) { return a *= s; }
  friend AnalyticGerm operator*(const AnalyticGerm& a, const AnalyticGerm& b);

  std::string label;

 private:
  int degree_;
  std::vector<double> a_;  // packed by total degree
  static int index(int h, int j) { return (h + j) * (h + j + 1) / 2 + j; }
};

// Exact area integral of a polynomial over the region bounded by a grid's
// curve (Green's identity, spectrally accurate boundary rule).
double integrate_over_region(const QuadratureGrid& g, const AnalyticGerm& p);

// Germ values on the grid nodes.
Eigen::VectorXd eval_on(const QuadratureGrid& g, const AnalyticGerm& p);

}  // namespace holecap
