#include "holecap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "holecap/errors.hpp"
#include "holecap/potential.hpp"

namespace holecap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using potential::Kind;

Eigen::MatrixXd bordered(const Eigen::MatrixXd& a, const Eigen::VectorXd& w) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n + 1, n + 1);
  b.topLeftCorner(n, n) = a;
  b.col(n).head(n).setOnes();
  b.row(n).head(n) = w.transpose();
  return b;
}

template <class LU>
Eigen::VectorXd refined_solve(const LU& lu, const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd x = lu.solve(b);
  x += lu.solve(b - a * x);
  return x;
}

Eigen::MatrixXd half_plus(const Eigen::MatrixXd& a, double sign) {
  return 0.5 * Eigen::MatrixXd::Identity(a.rows(), a.cols()) + sign * a;
}

}  // namespace

HoleSetting::HoleSetting(const ClosedCurve& outer, const ClosedCurve& hole, int n)
    : outer_(outer), hole_(hole) {
  outer_.validate();
  hole_.validate();
  if (!hole_.contains(Vec2::Zero())) throw DomainError("origin must lie inside the hole curve");
  eps0_ = containment_limit(outer_, hole_);
  go_ = make_grid(outer_, n);
  gi_ = make_grid(hole_, n);
  hole_area_ = area(hole_);
  w_o_ = potential::assemble(Kind::W, go_);
  ws_o_ = potential::assemble(Kind::WStar, go_);
  w_i_ = potential::assemble(Kind::W, gi_);
  ws_i_ = potential::assemble(Kind::WStar, gi_);
  v_i_ = potential::assemble(Kind::STrace, gi_);
  v_o_ = potential::assemble(Kind::STrace, go_);
  t_i_ = potential::assemble(Kind::Hyper, gi_);
  lu_ws_o_.compute(half_plus(ws_o_, 1.0));
  lu_w_o_.compute(half_plus(w_o_, 1.0));
  lu_ws_i_.compute(bordered(half_plus(ws_i_, -1.0), gi_.w));
  lu_w_i_.compute(bordered(half_plus(w_i_, -1.0), gi_.w));
  lu_ext_.compute(bordered(v_i_, gi_.w));
  rho_eq_ = solve_hole_adjoint(Eigen::VectorXd::Zero(n), 1.0);
}

Eigen::VectorXd HoleSetting::solve_outer_adjoint(const Eigen::VectorXd& f) const {
  return refined_solve(lu_ws_o_, half_plus(ws_o_, 1.0), f);
}

Eigen::VectorXd HoleSetting::solve_outer_double(const Eigen::VectorXd& f) const {
  return refined_solve(lu_w_o_, half_plus(w_o_, 1.0), f);
}

Eigen::VectorXd HoleSetting::solve_hole_adjoint(const Eigen::VectorXd& f, double mass) const {
  const int n = gi_.n;
  Eigen::VectorXd b(n + 1);
  b << f, mass;
  return refined_solve(lu_ws_i_, bordered(half_plus(ws_i_, -1.0), gi_.w), b).head(n);
}

Eigen::VectorXd HoleSetting::solve_hole_double(const Eigen::VectorXd& f) const {
  const int n = gi_.n;
  Eigen::VectorXd b(n + 1);
  b << f, 0.0;
  return refined_solve(lu_w_i_, bordered(half_plus(w_i_, -1.0), gi_.w), b).head(n);
}

std::pair<Eigen::VectorXd, double> HoleSetting::solve_hole_exterior(const Eigen::VectorXd& g) const {
  const int n = gi_.n;
  Eigen::VectorXd b(n + 1);
  b << g, 0.0;
  const Eigen::VectorXd x = refined_solve(lu_ext_, bordered(v_i_, gi_.w), b);
  return {x.head(n), x(n)};
}

namespace {

// Coupling blocks between the outer curve and the scaled hole.
struct Coupling {
  Eigen::MatrixXd o_from_i_adj;  // nu_O(x).grad S(x - eps s) w_s
  Eigen::MatrixXd i_from_o_adj;  // eps nu_w(t).grad S(eps t - y) w_y
  Eigen::MatrixXd o_from_i_dbl;  // eps nu_w(s).grad S(x - eps s) w_s
  Eigen::MatrixXd i_from_o_dbl;  // -nu_O(y).grad S(eps t - y) w_y
};

Coupling coupling(const HoleSetting& s, double eps) {
  const QuadratureGrid& go = s.outer();
  const QuadratureGrid& gi = s.hole();
  Coupling c;
  c.o_from_i_adj.resize(go.n, gi.n);
  c.o_from_i_dbl.resize(go.n, gi.n);
  c.i_from_o_adj.resize(gi.n, go.n);
  c.i_from_o_dbl.resize(gi.n, go.n);
  for (int p = 0; p < go.n; ++p) {
    const Vec2 x = go.node(p);
    for (int q = 0; q < gi.n; ++q) {
      const Vec2 gs = potential::grad_S(x - eps * gi.node(q));
      c.o_from_i_adj(p, q) = go.normal(p).dot(gs) * gi.w(q);
      c.o_from_i_dbl(p, q) = eps * gi.normal(q).dot(gs) * gi.w(q);
      // grad S is odd: grad S(eps t - y) = -gs evaluated with roles swapped.
      c.i_from_o_adj(q, p) = -eps * gi.normal(q).dot(gs) * go.w(p);
      c.i_from_o_dbl(q, p) = go.normal(p).dot(gs) * go.w(p);
    }
  }
  return c;
}

}  // namespace

DensitySolution solve_densities(const HoleSetting& s, const AnalyticGerm& ua, double eps) {
  if (!(eps > 0.0 && eps < s.eps0())) throw ContainmentError("eps outside ]0, eps0[");
  const QuadratureGrid& go = s.outer();
  const QuadratureGrid& gi = s.hole();
  const int no = go.n, ni = gi.n, nt = no + ni + 1;
  const Coupling c = coupling(s, eps);
  const Eigen::MatrixXd Io = Eigen::MatrixXd::Identity(no, no);
  const Eigen::MatrixXd Ii = Eigen::MatrixXd::Identity(ni, ni);

  DensitySolution d;
  d.eps = eps;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nt, nt);
  a.block(0, 0, no, no) = 0.5 * Io + s.Wstar_outer();
  a.block(0, no, no, ni) = c.o_from_i_adj;
  a.block(no, 0, ni, no) = -c.i_from_o_adj;
  a.block(no, no, ni, ni) = 0.5 * Ii - s.Wstar_hole();
  a.block(no, nt - 1, ni, 1).setOnes();
  a.block(nt - 1, no, 1, ni) = gi.w.transpose();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(nt);
  b(nt - 1) = 1.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  d.cond_estimate = 1.0 / lu.rcond();
  if (!std::isfinite(d.cond_estimate) || d.cond_estimate > 1e13)
    throw SolverError("single-layer system is numerically singular (cond ~ " +
                      std::to_string(d.cond_estimate) + ")");
  Eigen::VectorXd x = refined_solve(lu, a, b);
  d.rho_o = x.head(no);
  d.rho_i = x.segment(no, ni);

  const Eigen::VectorXd U = eval_on(gi, ua.dilated(eps));
  d.g = gi.w.dot((U.array() * d.rho_i.array()).matrix());

  a.setZero();
  a.block(0, 0, no, no) = 0.5 * Io + s.W_outer();
  a.block(0, no, no, ni) = c.o_from_i_dbl;
  a.block(no, 0, ni, no) = c.i_from_o_dbl;
  a.block(no, no, ni, ni) = 0.5 * Ii - s.W_hole();
  a.block(no, nt - 1, ni, 1).setOnes();
  a.block(nt - 1, no, 1, ni) = gi.w.transpose();
  b.setZero();
  b.segment(no, ni) = U.array() - d.g;
  lu.compute(a);
  x = refined_solve(lu, a, b);
  d.theta_o = x.head(no);
  d.theta_i = x.segment(no, ni);

  double mean = 0.0;
  for (int q = 0; q < ni; ++q)
    mean += gi.w(q) * potential::single_layer_eval(go, d.rho_o, eps * gi.node(q));
  mean += gi.w.dot(s.V_hole() * d.rho_i);
  d.denom = mean / gi.length() + std::log(eps) / kTwoPi;

  std::tie(d.residual_rho, d.residual_theta) = density_residuals(s, ua, d);
  return d;
}

std::pair<double, double> density_residuals(const HoleSetting& s, const AnalyticGerm& ua,
                                            const DensitySolution& d) {
  const QuadratureGrid& gi = s.hole();
  const Coupling c = coupling(s, d.eps);
  const Eigen::VectorXd mo = 0.5 * d.rho_o + s.Wstar_outer() * d.rho_o + c.o_from_i_adj * d.rho_i;
  const Eigen::VectorXd mi = 0.5 * d.rho_i - s.Wstar_hole() * d.rho_i - c.i_from_o_adj * d.rho_o;
  const double mc = gi.w.dot(d.rho_i) - 1.0;
  const double res_rho = std::max({mo.lpNorm<Eigen::Infinity>(), mi.lpNorm<Eigen::Infinity>(),
                                   std::abs(mc)});

  const Eigen::VectorXd U = eval_on(gi, ua.dilated(d.eps));
  const double g = gi.w.dot((U.array() * d.rho_i.array()).matrix());
  const Eigen::VectorXd lo =
      0.5 * d.theta_o + s.W_outer() * d.theta_o + c.o_from_i_dbl * d.theta_i;
  Eigen::VectorXd li = 0.5 * d.theta_i - s.W_hole() * d.theta_i + c.i_from_o_dbl * d.theta_o;
  li.array() -= U.array() - g;
  const double scale = std::max(1.0, U.lpNorm<Eigen::Infinity>());
  const double res_theta =
      std::max({lo.lpNorm<Eigen::Infinity>(), li.lpNorm<Eigen::Infinity>(),
                std::abs(gi.w.dot(d.theta_i))}) / scale;
  return {res_rho, res_theta};
}

Eigen::VectorXd hole_flux(const HoleSetting& s, const DensitySolution& d) {
  const QuadratureGrid& go = s.outer();
  const QuadratureGrid& gi = s.hole();
  const double eps = d.eps;
  Eigen::VectorXd flux = -(s.T_hole() * d.theta_i);
  const Eigen::VectorXd sl = 0.5 * d.rho_i + s.Wstar_hole() * d.rho_i;
  const double ratio = d.g / d.denom;
  for (int q = 0; q < gi.n; ++q) {
    const Vec2 x = eps * gi.node(q);
    const Vec2 nu = gi.normal(q);
    flux(q) += eps * nu.dot(potential::double_layer_grad(go, d.theta_o, x));
    flux(q) += ratio * (eps * nu.dot(potential::single_layer_grad(go, d.rho_o, x)) + sl(q));
  }
  return flux;
}

double solution_value(const HoleSetting& s, const DensitySolution& d, const Vec2& x) {
  const double eps = d.eps;
  const Vec2 t = x / eps;
  const double dl = potential::double_layer_eval(s.outer(), d.theta_o, x) -
                    potential::double_layer_eval(s.hole(), d.theta_i, t);
  const double sl = potential::single_layer_eval(s.outer(), d.rho_o, x) +
                    potential::single_layer_eval(s.hole(), d.rho_i, t) + std::log(eps) / kTwoPi;
  return dl + d.g * sl / d.denom;
}

double direct_capacity(const HoleSetting& s, const DensitySolution& da, const AnalyticGerm& ua,
                       const AnalyticGerm& ub) {
  const QuadratureGrid& gi = s.hole();
  const AnalyticGerm ua_e = ua.dilated(da.eps), ub_e = ub.dilated(da.eps);
  const Eigen::VectorXd flux = hole_flux(s, da);
  const Eigen::VectorXd vb = eval_on(gi, ub_e);
  const double exterior = -gi.w.dot((flux.array() * vb.array()).matrix());
  const AnalyticGerm inner = ua_e.d_dx1() * ub_e.d_dx1() + ua_e.d_dx2() * ub_e.d_dx2();
  return exterior + integrate_over_region(gi, inner);
}

double direct_capacity(const HoleSetting& s, const AnalyticGerm& ua, const AnalyticGerm& ub,
                       double eps) {
  return direct_capacity(s, solve_densities(s, ua, eps), ua, ub);
}

double r0(const HoleSetting& s) {
  const QuadratureGrid& go = s.outer();
  const QuadratureGrid& gi = s.hole();
  Eigen::VectorXd so(go.n), si(gi.n);
  for (int i = 0; i < go.n; ++i) so(i) = potential::S(go.node(i));
  for (int i = 0; i < gi.n; ++i) si(i) = potential::S(gi.node(i));
  const Eigen::VectorXd mu = s.solve_outer_double(so);
  const double inner_at_origin = potential::double_layer_eval(go, mu, Vec2::Zero());
  const double limit = s.solve_hole_exterior(si).second;
  return limit - inner_at_origin;
}

ExteriorSolution exterior_solution(const HoleSetting& s, const AnalyticGerm& u_sharp) {
  const AnalyticGerm lap = u_sharp.laplacian();
  if (lap.max_abs() > 1e-10 * std::max(1.0, u_sharp.max_abs()))
    throw DomainError("principal part is not harmonic");
  const QuadratureGrid& gi = s.hole();
  ExteriorSolution e;
  e.trace = eval_on(gi, u_sharp);
  std::tie(e.density, e.limit) = s.solve_hole_exterior(e.trace);
  e.flux = 0.5 * e.density + s.Wstar_hole() * e.density;
  e.energy = -gi.w.dot((e.flux.array() * e.trace.array()).matrix());
  return e;
}

double Q_form(const HoleSetting& s, const AnalyticGerm& ua, const AnalyticGerm& ub) {
  const int ka = ua.order(), kb = ub.order();
  if (ka < 1 || kb < 1) throw DomainError("energy form needs germs vanishing at the origin");
  if (ka > ua.degree() || kb > ub.degree()) throw DomainError("energy form of a zero germ");
  const AnalyticGerm pa = ua.homogeneous(ka), pb = ub.homogeneous(kb);
  const ExteriorSolution ea = exterior_solution(s, pa);
  const ExteriorSolution eb = exterior_solution(s, pb);
  const QuadratureGrid& gi = s.hole();
  // Symmetrised flux pairing; both orders agree up to discretisation error.
  const double ext = -0.5 * (gi.w.dot((ea.flux.array() * eb.trace.array()).matrix()) +
                             gi.w.dot((eb.flux.array() * ea.trace.array()).matrix()));
  const AnalyticGerm inner = pa.d_dx1() * pb.d_dx1() + pa.d_dx2() * pb.d_dx2();
  return ext + integrate_over_region(gi, inner);
}

double VanishingLeading::evaluate(double eps) const {
  return std::pow(eps, power) * (q + log_term / (r0 + std::log(eps) / kTwoPi));
}

VanishingLeading vanishing_expansion(const HoleSetting& s, const AnalyticGerm& ua,
                                     const AnalyticGerm& ub) {
  VanishingLeading v;
  const int ka = ua.order(), kb = ub.order();
  v.q = Q_form(s, ua, ub);
  v.power = ka + kb;
  const double la = exterior_solution(s, ua.homogeneous(ka)).limit;
  const double lb = exterior_solution(s, ub.homogeneous(kb)).limit;
  v.log_term = -la * lb;
  v.r0 = r0(s);
  return v;
}

}  // namespace holecap
