#include <algorithm>
#include <cmath>
#include <numbers>

#include "holecap/capacity.hpp"
#include "holecap/errors.hpp"
#include "holecap/potential.hpp"

namespace holecap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Multi-index beta = (h, j - h) of total degree j, stored by (j, h).
struct Tables {
  int top;  // largest total degree
  std::vector<std::vector<double>> binom;
  std::vector<double> fact;
  // Outer nodes: d^beta S(y_p) and grad d^beta S(y_p).
  std::vector<std::vector<Eigen::VectorXd>> ds;
  std::vector<std::vector<Eigen::MatrixXd>> gds;  // n x 2
  // Hole nodes: t^beta and nu.grad(t^beta).
  std::vector<std::vector<Eigen::VectorXd>> mono, dn_mono;

  Tables(const HoleSetting& s, int top_degree) : top(top_degree) {
    const int m = top + 2;
    binom.assign(m + 1, std::vector<double>(m + 1, 0.0));
    fact.assign(m + 1, 1.0);
    for (int i = 0; i <= m; ++i) {
      binom[i][0] = 1.0;
      for (int k = 1; k <= i; ++k) binom[i][k] = binom[i - 1][k - 1] + (k < i ? binom[i - 1][k] : 0.0);
      if (i > 0) fact[i] = fact[i - 1] * i;
    }
    const QuadratureGrid& go = s.outer();
    const QuadratureGrid& gi = s.hole();
    ds.resize(top + 1);
    gds.resize(top + 1);
    mono.resize(top + 1);
    dn_mono.resize(top + 1);
    for (int j = 0; j <= top; ++j) {
      for (int h = 0; h <= j; ++h) {
        const int e1 = h, e2 = j - h;
        Eigen::VectorXd d(go.n);
        Eigen::MatrixXd g(go.n, 2);
        for (int p = 0; p < go.n; ++p) {
          const Vec2 y = go.node(p);
          d(p) = potential::dS(e1, e2, y);
          g.row(p) = potential::grad_dS(e1, e2, y).transpose();
        }
        ds[j].push_back(d);
        gds[j].push_back(g);
        Eigen::VectorXd mv(gi.n), dv(gi.n);
        for (int q = 0; q < gi.n; ++q) {
          const Vec2 t = gi.node(q);
          mv(q) = std::pow(t.x(), e1) * std::pow(t.y(), e2);
          const Vec2 gr(e1 ? e1 * std::pow(t.x(), e1 - 1) * std::pow(t.y(), e2) : 0.0,
                        e2 ? e2 * std::pow(t.x(), e1) * std::pow(t.y(), e2 - 1) : 0.0);
          dv(q) = gi.normal(q).dot(gr);
        }
        mono[j].push_back(mv);
        dn_mono[j].push_back(dv);
      }
    }
  }
};

double weighted(const QuadratureGrid& g, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (g.w.array() * a.array() * b.array()).sum();
}

}  // namespace

DensitySeries series_densities(const HoleSetting& s, const AnalyticGerm& ua, int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  if (ua.degree() < order) throw DomainError("germ degree is below the series order");
  const QuadratureGrid& go = s.outer();
  const QuadratureGrid& gi = s.hole();
  const int N = order;
  const Tables tb(s, N + 1);
  const auto& C = tb.binom;

  DensitySeries ser;
  ser.order = N;
  ser.germ_a = ua;
  const Eigen::VectorXd zo = Eigen::VectorXd::Zero(go.n), zi = Eigen::VectorXd::Zero(gi.n);
  std::vector<Eigen::VectorXd> ua_k(N + 1);
  for (int k = 0; k <= N; ++k) ua_k[k] = eval_on(gi, ua.homogeneous(k));

  // Cached integrals against the outer kernel derivatives, indexed [m][j][h].
  std::vector<std::vector<std::vector<Vec2>>> rho_o_grad, theta_o_grad;
  std::vector<std::vector<std::vector<double>>> rho_o_val, theta_o_nu;
  auto outer_moments = [&](const Eigen::VectorXd& dens, bool with_normal) {
    std::vector<std::vector<Vec2>> gr(N + 1);
    std::vector<std::vector<double>> val(N + 1);
    const Eigen::VectorXd wd = go.w.cwiseProduct(dens);
    for (int j = 0; j <= N; ++j)
      for (int h = 0; h <= j; ++h) {
        const Eigen::MatrixXd& g = tb.gds[j][h];
        gr[j].push_back(Vec2(g.col(0).dot(wd), g.col(1).dot(wd)));
        if (with_normal) {
          Eigen::VectorXd nd(go.n);
          for (int p = 0; p < go.n; ++p) nd(p) = go.nu.row(p).dot(g.row(p));
          val[j].push_back(nd.dot(wd));
        } else {
          val[j].push_back(tb.ds[j][h].dot(wd));
        }
      }
    return std::make_pair(gr, val);
  };
  // Hole moments int rho s^beta and int theta nu s^beta.
  std::vector<std::vector<std::vector<double>>> rho_i_mom;
  std::vector<std::vector<std::vector<Vec2>>> theta_i_mom;
  auto hole_moments = [&](const Eigen::VectorXd& dens) {
    std::vector<std::vector<double>> m(N + 2);
    std::vector<std::vector<Vec2>> v(N + 2);
    for (int j = 0; j <= N + 1 && j <= tb.top; ++j)
      for (int h = 0; h <= j; ++h) {
        const Eigen::VectorXd wd = gi.w.cwiseProduct(dens).cwiseProduct(tb.mono[j][h]);
        m[j].push_back(wd.sum());
        v[j].push_back(Vec2(gi.nu.col(0).dot(wd), gi.nu.col(1).dot(wd)));
      }
    return std::make_pair(m, v);
  };

  for (int k = 0; k <= N; ++k) {
    // Hole single-layer density.
    Eigen::VectorXd f = zi;
    for (int j = 0; j <= k - 1; ++j) {
      const double sgn = (j % 2) ? 1.0 : -1.0;  // (-1)^(j+1)
      const int m = k - 1 - j;
      for (int h = 0; h <= j; ++h) {
        const Vec2 gvec = rho_o_grad[m][j][h];
        const double coef = k * C[k - 1][j] * sgn * C[j][h];
        for (int q = 0; q < gi.n; ++q)
          f(q) += coef * tb.mono[j][h](q) * gi.normal(q).dot(gvec);
      }
    }
    ser.rho_i.push_back(s.solve_hole_adjoint(f, k == 0 ? 1.0 : 0.0));
    {
      auto [mm, vv] = hole_moments(ser.rho_i.back());
      rho_i_mom.push_back(mm);
    }

    // Outer single-layer density.
    f = zo;
    for (int j = 0; j <= k; ++j) {
      const double sgn = (j % 2) ? 1.0 : -1.0;
      for (int h = 0; h <= j; ++h) {
        const double coef = C[k][j] * sgn * C[j][h] * rho_i_mom[k - j][j][h];
        const Eigen::MatrixXd& g = tb.gds[j][h];
        for (int p = 0; p < go.n; ++p) f(p) += coef * go.nu.row(p).dot(g.row(p));
      }
    }
    ser.rho_o.push_back(s.solve_outer_adjoint(f));
    {
      auto [gr, val] = outer_moments(ser.rho_o.back(), false);
      rho_o_grad.push_back(gr);
      rho_o_val.push_back(val);
    }

    double ga = 0.0;
    for (int l = 0; l <= k; ++l) ga += weighted(gi, ua_k[l], ser.rho_i[k - l]) / tb.fact[k - l];
    ser.g_a.push_back(ga);

    // Outer double-layer density.
    f = zo;
    for (int j = 0; j <= k - 2; ++j) {
      const double sgn = (j % 2) ? 1.0 : -1.0;
      const int m = k - 1 - j;
      for (int h = 0; h <= j; ++h) {
        const Vec2 nvec = theta_i_mom[m][j][h];
        const double coef = k * C[k - 1][j] * sgn * C[j][h];
        const Eigen::MatrixXd& g = tb.gds[j][h];
        for (int p = 0; p < go.n; ++p) f(p) += coef * g.row(p).dot(nvec);
      }
    }
    ser.theta_o.push_back(k < 2 ? zo : s.solve_outer_double(f));
    {
      auto [gr, val] = outer_moments(ser.theta_o.back(), true);
      theta_o_grad.push_back(gr);
      theta_o_nu.push_back(val);
    }

    // Hole double-layer density.
    if (k == 0) {
      ser.theta_i.push_back(zi);
    } else {
      f = tb.fact[k] * (ua_k[k].array() - ga).matrix();
      for (int j = 0; j <= k - 1; ++j) {
        const double sgn = (j % 2) ? 1.0 : -1.0;
        for (int h = 0; h <= j; ++h)
          f += (C[k][j] * sgn * C[j][h] * theta_o_nu[k - j][j][h]) * tb.mono[j][h];
      }
      ser.theta_i.push_back(s.solve_hole_double(f));
    }
    {
      auto [mm, vv] = hole_moments(ser.theta_i.back());
      theta_i_mom.push_back(vv);
    }

    // Denominator sequence.
    double acc = gi.w.dot(s.V_hole() * ser.rho_i[k]);
    for (int j = 0; j <= k; ++j) {
      const double sgn = (j % 2) ? -1.0 : 1.0;
      for (int h = 0; h <= j; ++h)
        acc += C[k][j] * sgn * C[j][h] * gi.w.dot(tb.mono[j][h]) * rho_o_val[k - j][j][h];
    }
    ser.r.push_back(acc / (tb.fact[k] * gi.length()));

    // Normal derivatives of the regular and single-layer parts on the hole.
    Eigen::VectorXd um = -(s.T_hole() * ser.theta_i[k]);
    for (int j = 1; j <= k - 1; ++j) {
      const double sgn = (j % 2) ? -1.0 : 1.0;
      for (int h = 0; h <= j; ++h)
        um += (C[k][j] * sgn * C[j][h] * theta_o_nu[k - j][j][h]) * tb.dn_mono[j][h];
    }
    ser.dn_um.push_back(um / tb.fact[k]);
    Eigen::VectorXd vm = 0.5 * ser.rho_i[k] + s.Wstar_hole() * ser.rho_i[k];
    for (int j = 1; j <= k; ++j) {
      const double sgn = (j % 2) ? -1.0 : 1.0;
      for (int h = 0; h <= j; ++h)
        vm += (C[k][j] * sgn * C[j][h] * rho_o_val[k - j][j][h]) * tb.dn_mono[j][h];
    }
    ser.dn_vm.push_back(vm / tb.fact[k]);
  }
  return ser;
}

double CapacityExpansion::coeff(int n, int l) const {
  const auto it = c.find({n, l});
  return it == c.end() ? 0.0 : it->second;
}

CapacityExpansion series_coefficients(const HoleSetting& s, const DensitySeries& ser,
                                      const AnalyticGerm& ub) {
  const int N = ser.order;
  if (ub.degree() < N) throw DomainError("germ degree is below the series order");
  const QuadratureGrid& gi = s.hole();
  CapacityExpansion e;
  e.order = N;
  e.r0 = ser.r[0];

  std::vector<Eigen::VectorXd> ub_k(N + 1);
  std::vector<AnalyticGerm> pa(N + 1), pb(N + 1);
  for (int k = 0; k <= N; ++k) {
    pa[k] = ser.germ_a.homogeneous(k);
    pb[k] = ub.homogeneous(k);
    ub_k[k] = eval_on(gi, pb[k]);
  }

  // Area term.
  e.xi.assign(N + 1, 0.0);
  for (int n = 2; n <= N; ++n)
    for (int l = 0; l <= n - 2; ++l) {
      const AnalyticGerm& a = pa[l + 1];
      const AnalyticGerm& b = pb[n - l - 1];
      e.xi[n] += integrate_over_region(gi, a.d_dx1() * b.d_dx1() + a.d_dx2() * b.d_dx2());
    }

  // Sequences on the hole and their integrals.
  std::vector<double> A(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    Eigen::VectorXd ut = Eigen::VectorXd::Zero(gi.n);
    for (int l = 0; l <= n; ++l) ut += ser.dn_um[l].cwiseProduct(ub_k[n - l]);
    e.c[{n, 0}] = -gi.w.dot(ut) + e.xi[n];
    Eigen::VectorXd at = Eigen::VectorXd::Zero(gi.n);
    for (int k = 0; k <= n; ++k) {
      Eigen::VectorXd gt = Eigen::VectorXd::Zero(gi.n);
      for (int l = 0; l <= n - k; ++l) gt += ser.g_a[l] * ub_k[n - k - l];
      at += gt.cwiseProduct(ser.dn_vm[k]);
    }
    A[n] = gi.w.dot(at);
  }

  // Convolution powers of (0, r1, r2, ...).
  std::vector<std::vector<double>> R(N + 2, std::vector<double>(N + 1, 0.0));
  R[0][0] = 1.0;
  for (int m = 1; m <= N + 1; ++m)
    for (int k = 0; k <= N; ++k)
      for (int i = 1; i <= k; ++i) R[m][k] += R[m - 1][k - i] * ser.r[i];

  for (int n = 0; n <= N; ++n)
    for (int l = 1; l <= n + 1; ++l) {
      double sum = 0.0, peak = 0.0;
      for (int k = l - 1; k <= n; ++k) {
        sum += A[n - k] * R[l - 1][k];
        peak = std::max(peak, std::abs(sum));
      }
      const double sgn = (l % 2) ? -1.0 : 1.0;  // -(-1)^(l-1)
      e.c[{n, l}] = sgn * sum;
      if (peak > 1e-12 && peak > 1e3 * std::abs(sum)) e.cancellation = true;
    }
  e.eps_valid = estimate_eps_valid(e, std::min(0.5, 0.999 * s.eps0()));
  return e;
}

double eval_series(const CapacityExpansion& e, double eps, int n_max, int l_max) {
  const double denom = e.r0 + std::log(eps) / kTwoPi;
  double total = 0.0, epsn = 1.0;
  for (int n = 0; n <= std::min(n_max, e.order); ++n, epsn *= eps) {
    double inner = 0.0, dl = 1.0;
    for (int l = 0; l <= std::min(l_max, n + 1); ++l, dl /= denom) inner += e.coeff(n, l) * dl;
    total += epsn * inner;
  }
  return total;
}

double estimate_eps_valid(const CapacityExpansion& e, double eps_start, int count) {
  if (e.order == 0) return eps_start;
  double eps = eps_start;
  for (int i = 0; i < count; ++i, eps *= 0.5) {
    const double hi = eval_series(e, eps, e.order, e.order + 1);
    const double lo = eval_series(e, eps, e.order - 1, e.order);
    if (std::abs(hi - lo) <= 0.01 * std::abs(hi)) return eps;
  }
  return 0.0;
}

}  // namespace holecap
