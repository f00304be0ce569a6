#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "holecap/geometry.hpp"
#include "holecap/germ.hpp"

namespace holecap {

// Discretised outer boundary and unit-scale hole, with the operator matrices
// and factorisations shared by every germ and every eps.
class HoleSetting {
 public:
  HoleSetting(const ClosedCurve& outer, const ClosedCurve& hole, int n = 256);

  const ClosedCurve& outer_curve() const { return outer_; }
  const ClosedCurve& hole_curve() const { return hole_; }
  const QuadratureGrid& outer() const { return go_; }
  const QuadratureGrid& hole() const { return gi_; }
  int nodes() const { return go_.n; }
  double eps0() const { return eps0_; }
  double hole_length() const { return gi_.length(); }
  double hole_area() const { return hole_area_; }

  // Same-curve operators.
  const Eigen::MatrixXd& W_outer() const { return w_o_; }
  const Eigen::MatrixXd& Wstar_outer() const { return ws_o_; }
  const Eigen::MatrixXd& W_hole() const { return w_i_; }
  const Eigen::MatrixXd& Wstar_hole() const { return ws_i_; }
  const Eigen::MatrixXd& V_hole() const { return v_i_; }
  const Eigen::MatrixXd& V_outer() const { return v_o_; }
  const Eigen::MatrixXd& T_hole() const { return t_i_; }

  // (1/2 + W*_outer) rho = f
  Eigen::VectorXd solve_outer_adjoint(const Eigen::VectorXd& f) const;
  // (1/2 + W_outer) theta = f
  Eigen::VectorXd solve_outer_double(const Eigen::VectorXd& f) const;
  // (1/2 - W*_hole) rho = f with int rho = mass (f must be orthogonal to 1)
  Eigen::VectorXd solve_hole_adjoint(const Eigen::VectorXd& f, double mass) const;
  // (1/2 - W_hole) theta = f with int theta = 0
  Eigen::VectorXd solve_hole_double(const Eigen::VectorXd& f) const;
  // Exterior bounded harmonic function with trace g: v[phi] + c, int phi = 0.
  std::pair<Eigen::VectorXd, double> solve_hole_exterior(const Eigen::VectorXd& g) const;

  // Equilibrium density of the hole: (1/2 - W*) rho = 0, int rho = 1.
  const Eigen::VectorXd& equilibrium() const { return rho_eq_; }

 private:
  ClosedCurve outer_, hole_;
  QuadratureGrid go_, gi_;
  double eps0_ = 0.0, hole_area_ = 0.0;
  Eigen::MatrixXd w_o_, ws_o_, w_i_, ws_i_, v_i_, v_o_, t_i_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_ws_o_, lu_w_o_, lu_ws_i_, lu_w_i_, lu_ext_;
  Eigen::VectorXd rho_eq_;
};

// Densities of the two coupled systems at a fixed eps.
struct DensitySolution {
  double eps = 0.0;
  Eigen::VectorXd rho_o, rho_i;      // single-layer system
  Eigen::VectorXd theta_o, theta_i;  // double-layer system, theta_i zero-mean
  double residual_rho = 0.0, residual_theta = 0.0;
  double cond_estimate = 0.0;
  // Quantities of the rescaled representation.
  double g = 0.0;      // int_{hole} U rho_i
  double denom = 0.0;  // mean of the single layers on the hole + log(eps)/2π
};

DensitySolution solve_densities(const HoleSetting& s, const AnalyticGerm& ua, double eps);

// Residuals of both systems evaluated at given densities (max norm).
std::pair<double, double> density_residuals(const HoleSetting& s, const AnalyticGerm& ua,
                                            const DensitySolution& d);

// Normal derivative, in rescaled variables, of the solution on the hole nodes.
Eigen::VectorXd hole_flux(const HoleSetting& s, const DensitySolution& d);

// Value of the solution u^a_eps at x in Omega outside eps*hole.
double solution_value(const HoleSetting& s, const DensitySolution& d, const Vec2& x);

double direct_capacity(const HoleSetting& s, const AnalyticGerm& ua, const AnalyticGerm& ub,
                       double eps);
// Reuses densities already solved for ua.
double direct_capacity(const HoleSetting& s, const DensitySolution& da, const AnalyticGerm& ua,
                       const AnalyticGerm& ub);

// Limit at infinity of the bounded exterior solution with trace S on the
// hole, minus the interior solution with trace S on the outer curve at 0.
double r0(const HoleSetting& s);

// Coefficient sequences of the small-eps expansion to order N.
struct DensitySeries {
  int order = 0;
  AnalyticGerm germ_a;
  std::vector<Eigen::VectorXd> rho_o, rho_i, theta_o, theta_i;
  std::vector<double> g_a;             // scalar numerator sequence
  std::vector<double> r;               // denominator sequence, r[0] = r0
  std::vector<Eigen::VectorXd> dn_um;  // normal derivative of regular parts
  std::vector<Eigen::VectorXd> dn_vm;  // normal derivative of single-layer parts
};

DensitySeries series_densities(const HoleSetting& s, const AnalyticGerm& ua, int order);

struct CapacityExpansion {
  int order = 0;
  double r0 = 0.0;
  std::map<std::pair<int, int>, double> c;  // (n, l) -> coefficient
  std::vector<double> xi;                   // area-term sequence
  double eps_valid = 0.0;
  bool cancellation = false;
  double coeff(int n, int l) const;
};

CapacityExpansion series_coefficients(const HoleSetting& s, const DensitySeries& ser,
                                      const AnalyticGerm& ub);

double eval_series(const CapacityExpansion& e, double eps, int n_max, int l_max);

// Largest eps of a dyadic sweep at which truncations n_max-1 and n_max
// agree to 1%.
double estimate_eps_valid(const CapacityExpansion& e, double eps_start = 0.5, int count = 40);

struct ExteriorSolution {
  Eigen::VectorXd density;  // zero-mean single-layer density
  double limit = 0.0;       // value at infinity
  double energy = 0.0;      // exterior Dirichlet energy
  Eigen::VectorXd flux;     // exterior normal derivative on hole nodes
  Eigen::VectorXd trace;    // boundary values
};

ExteriorSolution exterior_solution(const HoleSetting& s, const AnalyticGerm& u_sharp);

// Energy form of the principal parts (exterior extension plus interior).
double Q_form(const HoleSetting& s, const AnalyticGerm& ua, const AnalyticGerm& ub);

struct VanishingLeading {
  int power = 0;          // order(ua) + order(ub)
  double q = 0.0;         // energy-form coefficient
  double log_term = 0.0;  // -(lim ua_ext)(lim ub_ext), divided by (r0 + log eps / 2π)
  double r0 = 0.0;
  double evaluate(double eps) const;
};

VanishingLeading vanishing_expansion(const HoleSetting& s, const AnalyticGerm& ua,
                                     const AnalyticGerm& ub);

}  // namespace holecap
