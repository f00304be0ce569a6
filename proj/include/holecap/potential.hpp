#pragma once

#include <Eigen/Dense>

#include "holecap/geometry.hpp"

namespace holecap::potential {

// S(x) = log|x| / (2π) and its partial derivatives d1^h d2^j S, h + j >= 0.
double S(const Vec2& x);
Vec2 grad_S(const Vec2& x);
Eigen::Matrix2d hess_S(const Vec2& x);
double dS(int h, int j, const Vec2& x);
inline Vec2 grad_dS(int h, int j, const Vec2& x) { return {dS(h + 1, j, x), dS(h, j + 1, x)}; }

// Off-curve layer potentials
//   v[phi](x) =  int phi(y) S(x-y) dsigma_y
//   w[psi](x) = -int psi(y) nu(y).grad S(x-y) dsigma_y
double single_layer_eval(const QuadratureGrid& g, const Eigen::VectorXd& phi, const Vec2& x);
double double_layer_eval(const QuadratureGrid& g, const Eigen::VectorXd& psi, const Vec2& x);
Vec2 single_layer_grad(const QuadratureGrid& g, const Eigen::VectorXd& phi, const Vec2& x);
Vec2 double_layer_grad(const QuadratureGrid& g, const Eigen::VectorXd& psi, const Vec2& x);

// True when x is closer to the curve than the node spacing suggests is safe.
bool near_curve(const QuadratureGrid& g, const Vec2& x);

enum class Kind {
  W,          // -nu(y).grad S(x-y), same curve
  WStar,      //  nu(x).grad S(x-y), same curve
  STrace,     //  S(x-y), same curve, log-corrected weights
  Hyper,      //  normal derivative of the double layer, same curve
  CrossS,     //  S(x-y), distinct curves
  CrossW,     // -nu(y).grad S(x-y), distinct curves
  CrossWStar  //  nu(x).grad S(x-y), distinct curves
};

// Nyström matrix: (A * density)(i) approximates the operator at target node i.
Eigen::MatrixXd assemble(Kind kind, const QuadratureGrid& source, const QuadratureGrid& target);
inline Eigen::MatrixXd assemble(Kind kind, const QuadratureGrid& g) { return assemble(kind, g, g); }

// Periodic spectral differentiation in the parameter t (even n).
Eigen::MatrixXd periodic_diff_matrix(int n);

// Trigonometric interpolation of nodal values onto m equispaced nodes.
Eigen::VectorXd trig_resample(const Eigen::VectorXd& f, int m);

}  // namespace holecap::potential
