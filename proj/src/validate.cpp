#include "holecap/validate.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "holecap/capacity.hpp"
#include "holecap/eigenbasis.hpp"
#include "holecap/errors.hpp"
#include "holecap/reference.hpp"
#include "holecap/specfun.hpp"

namespace holecap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

Check check_le(std::string what, double value, double tol) {
  return {std::move(what), value, tol, value <= tol};
}

// Nonvanishing germ with |u(0)| >= 0.5.
AnalyticGerm random_germ(Rng& rng, int degree) {
  AnalyticGerm g(degree);
  for (int k = 0; k <= degree; ++k)
    for (int j = 0; j <= k; ++j) g.set(k - j, j, uniform(rng, -1.0, 1.0) / (1 + k));
  const double u0 = uniform(rng, 0.5, 1.5);
  g.set(0, 0, uniform(rng, 0, 1) < 0.5 ? -u0 : u0);
  return g;
}

// Harmonic principal part of order k plus small higher-degree terms.
AnalyticGerm random_vanishing_germ(Rng& rng, int k, int degree, double tail = 0.2) {
  PolarPrincipalPart p{k, uniform(rng, 0.5, 1.5), uniform(rng, -kPi / (2 * k), kPi / (2 * k))};
  AnalyticGerm g(degree);
  g += germ_from_polar(p);
  for (int d = k + 1; d <= degree; ++d)
    for (int j = 0; j <= d; ++j) g.add(d - j, j, uniform(rng, -tail, tail));
  return g;
}

ClosedCurve perturbed_hole() {
  return ClosedCurve::trig(Vec2(0.05, -0.03), {1.0, 0.1}, {0.0}, {0.0}, {0.8, 0.0, 0.05});
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> dyadic(double start, double stop) {
  std::vector<double> out;
  for (double e = start; e >= stop * (1 - 1e-12); e *= 0.5) out.push_back(e);
  return out;
}

CriterionResult concentric_exactness(const ValidateOptions&) {
  CriterionResult r{1, "concentric capacity exactness", {}, 0.0, 5.0, {}};
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 256);
  const AnalyticGerm one = AnalyticGerm::from_terms({{0, 0, 1.0}});
  double worst = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double c = direct_capacity(s, one, one, eps);
    worst = std::max(worst, std::abs(c / concentric_capacity(eps) - 1.0));
  }
  r.checks.push_back(check_le("max relative error", worst, 1e-6));
  return r;
}

CriterionResult series_leading_terms(const ValidateOptions& opts) {
  CriterionResult r{2, "series leading terms", {}, 0.0, 0.0, {}};
  Rng rng(opts.seed + 2);
  const HoleSetting s(ClosedCurve::ellipse(1.3, 1.1), perturbed_hole(), 256);
  constexpr int N = 3;
  double c00 = 0.0, c01 = 0.0;
  for (int t = 0; t < 5; ++t) {
    const AnalyticGerm a = random_germ(rng, N + 1), b = random_germ(rng, N + 1);
    const CapacityExpansion e = series_coefficients(s, series_densities(s, a, N), b);
    c00 = std::max(c00, std::abs(e.coeff(0, 0)));
    c01 = std::max(c01, std::abs(e.coeff(0, 1) + a.coeff(0, 0) * b.coeff(0, 0)));
  }
  double low = 0.0, c20 = 0.0;
  for (int t = 0; t < 5; ++t) {
    const AnalyticGerm a = random_vanishing_germ(rng, 1, N + 1, 0.5);
    const AnalyticGerm b = random_vanishing_germ(rng, 1, N + 1, 0.5);
    const CapacityExpansion e = series_coefficients(s, series_densities(s, a, N), b);
    for (int n = 0; n <= 1; ++n)
      for (int l = 0; l <= n + 1; ++l) low = std::max(low, std::abs(e.coeff(n, l)));
    const double q = Q_form(s, a, b);
    c20 = std::max(c20, std::abs(e.coeff(2, 0) - q) / std::abs(q));
  }
  r.checks.push_back(check_le("|c(0,0)|", c00, 1e-10));
  r.checks.push_back(check_le("|c(0,1) + ua(0)ub(0)|", c01, 1e-9));
  r.checks.push_back(check_le("max |c(n<=1,l)| order-1 germs", low, 1e-9));
  r.checks.push_back(check_le("c(2,0) vs energy form, relative", c20, 1e-7));
  return r;
}

CriterionResult capacity_rates(const ValidateOptions& opts) {
  CriterionResult r{3, "capacity rates", {}, 0.0, 0.0, {}};
  Rng rng(opts.seed + 3);
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 256);
  const std::vector<double> eps = dyadic(1e-1, 1e-4);
  std::vector<double> le;
  for (double e : eps) le.push_back(std::log(e));

  double ratio_dev = 0.0, flat = 0.0;
  for (int t = 0; t < 3; ++t) {
    const AnalyticGerm a = random_germ(rng, 4), b = random_germ(rng, 4);
    std::vector<double> y;
    for (double e : eps) y.push_back(std::log(std::abs(direct_capacity(s, a, b, e) * std::log(e))));
    flat = std::max(flat, std::abs(fit_slope(le, y)));
    const double e4 = eps.back();
    const double lead = kTwoPi * a.coeff(0, 0) * b.coeff(0, 0) / std::abs(std::log(e4));
    ratio_dev = std::max(ratio_dev, std::abs(direct_capacity(s, a, b, e4) / lead - 1.0));
  }
  r.checks.push_back(check_le("ratio to 2πu(0)v(0)/|log eps| at 1e-4, deviation", ratio_dev, 0.05));
  r.checks.push_back(check_le("|slope| of log(Cap |log eps|)", flat, 0.03));
  for (int k = 1; k <= 2; ++k) {
    double worst = 0.0;
    for (int t = 0; t < 2; ++t) {
      const AnalyticGerm a = random_vanishing_germ(rng, k, k + 3);
      const AnalyticGerm b = random_vanishing_germ(rng, k, k + 3);
      // Same-germ pairs keep the sign fixed.
      for (const auto* g : {&a, &b}) {
        std::vector<double> y;
        for (double e : eps) y.push_back(std::log(direct_capacity(s, *g, *g, e)));
        worst = std::max(worst, std::abs(fit_slope(le, y) - 2.0 * k));
      }
    }
    r.checks.push_back(check_le("slope deviation from " + std::to_string(2 * k), worst, 0.03));
  }
  return r;
}

CriterionResult disk_closed_form(const ValidateOptions& opts) {
  CriterionResult r{4, "disk-hole energy form", {}, 0.0, 0.0, {}};
  Rng rng(opts.seed + 4);
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 256);
  const int trials = opts.full ? 6 : 3;
  for (int k = 1; k <= 3; ++k) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      const PolarPrincipalPart p{k, uniform(rng, 0.5, 1.5), uniform(rng, -kPi / (2 * k), kPi / (2 * k))};
      const PolarPrincipalPart q{k, uniform(rng, 0.5, 1.5), uniform(rng, -kPi / (2 * k), kPi / (2 * k))};
      const double num = Q_form(s, germ_from_polar(p), germ_from_polar(q));
      const double scale = kTwoPi * k * std::abs(p.beta * q.beta);
      const double exact = scale * std::cos(k * (p.phi - q.phi));
      worst = std::max(worst, std::abs(num - exact) / scale);
    }
    r.checks.push_back(check_le("k=" + std::to_string(k) + " relative error", worst, 1e-7));
  }
  return r;
}

CriterionResult elliptic_oracle(const ValidateOptions& opts) {
  CriterionResult r{5, "elliptic closed form vs energy form", {}, 0.0, 0.0, {}};
  Rng rng(opts.seed + 5);
  const double a = 1.5, b = 0.7;
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::ellipse(a, b), 256);
  for (int k = 1; k <= 3; ++k) {
    double worst = 0.0;
    for (int t = 0; t < (opts.full ? 4 : 2); ++t) {
      const PolarPrincipalPart pN{k, uniform(rng, 0.5, 1.5), uniform(rng, -kPi / (2 * k), kPi / (2 * k))};
      const PolarPrincipalPart pN1{k, uniform(rng, 0.5, 1.5), uniform(rng, -kPi / (2 * k), kPi / (2 * k))};
      const Eigen::Matrix2d M = elliptic_M(a, b, k, pN, pN1, opts.elliptic);
      const AnalyticGerm gN = germ_from_polar(pN), gN1 = germ_from_polar(pN1);
      Eigen::Matrix2d Q;
      Q(0, 0) = Q_form(s, gN, gN);
      Q(1, 1) = Q_form(s, gN1, gN1);
      Q(0, 1) = Q(1, 0) = Q_form(s, gN, gN1);
      worst = std::max(worst, (M - Q).cwiseAbs().maxCoeff() / Q.cwiseAbs().maxCoeff());
    }
    r.checks.push_back(check_le("k=" + std::to_string(k) + " relative entry error", worst, 1e-6));
  }
  return r;
}

CriterionResult simple_shift(const ValidateOptions&) {
  CriterionResult r{6, "simple eigenvalue shift", {}, 0.0, 10.0, {}};
  const DiskEigenMode mode = DiskEigenMode::make(0, 1, Parity::Cos);
  const double u0 = germ_at(mode, Vec2::Zero(), 0).coeff(0, 0);
  std::vector<double> ratios;
  for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const auto roots = concentric_roots(0, eps, mode.root - 0.01, mode.root + 1.0);
    if (roots.empty()) throw SolverError("no perturbed root near the first eigenvalue");
    ratios.push_back((roots.front() - mode.lambda) * std::abs(std::log(eps)) / (kTwoPi * u0 * u0));
  }
  const double last = ratios.back();
  r.checks.push_back({"ratio at eps=1e-5 in [0.9, 1.1]", last, 0.1, std::abs(last - 1.0) <= 0.1});
  bool monotone = true;
  for (size_t i = 1; i < ratios.size(); ++i)
    monotone = monotone && std::abs(ratios[i] - 1.0) < std::abs(ratios[i - 1] - 1.0);
  r.checks.push_back({"|ratio - 1| decreasing over 1e-2..1e-5", monotone ? 1.0 : 0.0, 1.0, monotone});
  return r;
}

CriterionResult double_rate(const ValidateOptions&) {
  CriterionResult r{7, "double eigenvalue, centred hole", {}, 0.0, 0.0, {}};
  const DiskEigenMode mc = DiskEigenMode::make(1, 1, Parity::Cos);
  const DiskEigenMode ms = DiskEigenMode::make(1, 1, Parity::Sin);
  const OrderDecomposition dec =
      order_decomposition({germ_at(mc, Vec2::Zero(), 6), germ_at(ms, Vec2::Zero(), 6)});
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 256);
  const SplittingReport rep = predict_branches(dec, s, mc.lambda);
  if (rep.groups.size() != 1 || rep.groups[0].dim() != 2 || rep.groups[0].k != 1)
    throw SolverError("unexpected order decomposition at the centre");
  const double eps = 1e-3;
  const EccentricResult ref = eccentric_window(eps, Vec2::Zero(), mc.lambda - 0.5, mc.lambda + 0.5);
  if (ref.eigenvalues.size() != 2) throw SolverError("expected a pair of annulus roots");
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double rate = (ref.eigenvalues[i].lambda - mc.lambda) / (eps * eps);
    worst = std::max(worst, std::abs(rate / rep.groups[0].mu[i] - 1.0));
  }
  r.checks.push_back(check_le("prefactor vs predicted mu, relative", worst, 0.05));
  r.checks.push_back(check_le("|paired roots difference|",
                              std::abs(ref.eigenvalues[0].lambda - ref.eigenvalues[1].lambda), 1e-10));
  r.checks.push_back({"no-split verdict", rep.groups[0].split ? 0.0 : 1.0, 1.0, !rep.groups[0].split});
  return r;
}

CriterionResult off_centre_splitting(const ValidateOptions&) {
  CriterionResult r{8, "splitting at an off-centre point", {}, 0.0, 60.0, {}};
  const Vec2 x0(0.3, 0.2);
  const DiskEigenMode mc = DiskEigenMode::make(1, 1, Parity::Cos);
  const DiskEigenMode ms = DiskEigenMode::make(1, 1, Parity::Sin);
  const OrderDecomposition dec = order_decomposition({germ_at(mc, x0, 8), germ_at(ms, x0, 8)});
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 256);
  const SplittingReport rep = predict_branches(dec, s, mc.lambda);
  if (rep.groups.size() != 2 || rep.groups[0].k != 1 || rep.groups[1].k != 0)
    throw SolverError("expected orders (1, 0) at the off-centre point");
  const double mu_quad = rep.groups[0].mu[0], mu_log = rep.groups[1].mu[0];
  const double lam = mc.lambda;

  // Logarithmic branch, deep in the asymptotic regime.
  std::vector<double> shifts, logs;
  bool two = true;
  for (double eps : {1e-8, 1e-9, 1e-10, 1e-11}) {
    const auto ref = eccentric_window(eps, x0, lam - 0.5, lam + 3.0).eigenvalues;
    two = two && ref.size() == 2;
    if (ref.empty()) throw SolverError("no annulus root near the double eigenvalue");
    shifts.push_back(ref.back().lambda - lam);
    logs.push_back(std::abs(std::log(eps)));
  }
  double num = 0, den = 0;
  for (size_t i = 0; i < shifts.size(); ++i) {
    num += shifts[i] / logs[i];
    den += 1.0 / (logs[i] * logs[i]);
  }
  const double c = num / den;
  double resid = 0.0;
  for (size_t i = 0; i < shifts.size(); ++i)
    resid = std::max(resid, std::abs(shifts[i] - c / logs[i]) / shifts[i]);

  // Quadratic branch.
  std::vector<double> le, lq;
  double pref = 0.0;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const auto ref = eccentric_window(eps, x0, lam - 0.5, lam + 3.0).eigenvalues;
    if (ref.empty()) throw SolverError("no annulus root near the double eigenvalue");
    const double shift = ref.front().lambda - lam;
    le.push_back(std::log(eps));
    lq.push_back(std::log(shift));
    pref = shift / (eps * eps);
  }
  r.checks.push_back({"two roots near the double eigenvalue", two ? 1.0 : 0.0, 1.0, two});
  r.checks.push_back(check_le("c/|log eps| fit residual over 1e-8..1e-11", resid, 0.02));
  r.checks.push_back(check_le("|c / 2πu(x0)^2 - 1|", std::abs(c / mu_log - 1.0), 0.10));
  r.checks.push_back(check_le("|slope - 2| of the quadratic branch", std::abs(fit_slope(le, lq) - 2.0), 0.05));
  r.checks.push_back(check_le("|prefactor / Q - 1| at eps=1e-4", std::abs(pref / mu_quad - 1.0), 0.10));
  return r;
}

CriterionResult small_ev_trials(const ValidateOptions& opts) {
  CriterionResult r{9, "small-eigenvalue checker", {}, 0.0, 0.0, {}};
  Rng rng(opts.seed + 9);
  constexpr int n = 20, N = 5, m = 2;
  const double gamma = 1.0, eta = 1e-3;
  int passed = 0, hyp = 0, concl = 0;
  for (int t = 0; t < 1000; ++t) {
    Eigen::VectorXd nu(n);
    for (int i = 0; i < N - 1; ++i) nu(i) = uniform(rng, -5.0, -gamma);
    for (int i = N - 1; i < N - 1 + m; ++i) nu(i) = uniform(rng, -0.05, 0.05);
    for (int i = N - 1 + m; i < n; ++i) nu(i) = uniform(rng, gamma, 5.0);
    Eigen::MatrixXd X(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X(i, j) = std::normal_distribution<double>()(rng);
    const Eigen::MatrixXd U = Eigen::HouseholderQR<Eigen::MatrixXd>(X).householderQ();
    const Eigen::MatrixXd q = U * nu.asDiagonal() * U.transpose();
    Eigen::MatrixXd P(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) P(i, j) = std::normal_distribution<double>()(rng);
    const Eigen::MatrixXd F = U.middleCols(N - 1, m) + eta * P;
    const SmallEVReport rep = small_ev_check(q, F, N, m, gamma, 0.0);
    if (rep.status == SmallEVStatus::Pass) ++passed;
    else if (rep.status == SmallEVStatus::HypothesisViolated) ++hyp;
    else ++concl;
  }
  r.checks.push_back({"instances passing (of 1000)", double(passed), 1000.0, passed == 1000});
  r.checks.push_back(check_le("conclusion failures", concl, 0.0));

  // Random F far from the eigenspace: delta exceeds gamma/sqrt(2).
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) q(i, i) = i < N - 1 ? -2.0 : (i < N - 1 + m ? 0.0 : 2.0);
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(n, m);
  F(0, 0) = F(N - 1, 0) = 1.0;
  F(n - 1, 1) = F(N, 1) = 1.0;
  const SmallEVReport bad = small_ev_check(q, F, N, m, gamma, 0.0);
  const bool flagged = bad.status == SmallEVStatus::HypothesisViolated && !bad.h1;
  r.checks.push_back({"violating instance reported as hypothesis failure", flagged ? 1.0 : 0.0, 1.0, flagged});
  (void)hyp;
  return r;
}

CriterionResult structural_suite(const ValidateOptions& opts) {
  CriterionResult r{10, "structural invariants", {}, 0.0, 300.0, {}};
  Rng rng(opts.seed + 10);
  const HoleSetting s(ClosedCurve::circle(1.0), perturbed_hole(), 256);
  const double eps = 1e-2;
  const AnalyticGerm a = random_germ(rng, 4), b = random_germ(rng, 4), a2 = random_germ(rng, 4);
  const double alpha = uniform(rng, -2.0, 2.0);
  const double cab = direct_capacity(s, a, b, eps), cba = direct_capacity(s, b, a, eps);
  const double caa = direct_capacity(s, a, a, eps), cbb = direct_capacity(s, b, b, eps);
  const double scale = std::sqrt(caa * cbb);
  r.checks.push_back(check_le("symmetry, relative", std::abs(cab - cba) / scale, 1e-10));
  r.checks.push_back(check_le("Cauchy-Schwarz excess", cab * cab - caa * cbb, 1e-12));
  const double lhs = direct_capacity(s, alpha * a + a2, b, eps);
  const double rhs = alpha * cab + direct_capacity(s, a2, b, eps);
  r.checks.push_back(check_le("bilinearity, relative", std::abs(lhs - rhs) / scale, 1e-10));
  double most_negative = 0.0;
  for (double e : {1e-1, 1e-2, 1e-3})
    for (const AnalyticGerm& g : {a, random_vanishing_germ(rng, 1, 4), random_vanishing_germ(rng, 2, 5)})
      most_negative = std::min(most_negative, direct_capacity(s, g, g, e));
  r.checks.push_back(check_le("positivity, most negative capacity", -most_negative, 0.0));

  // Order decomposition under a random orthonormal change of basis.
  const Vec2 x0(0.3, 0.2);
  const std::vector<AnalyticGerm> base = {germ_at(DiskEigenMode::make(1, 1, Parity::Cos), x0, 8),
                                          germ_at(DiskEigenMode::make(1, 1, Parity::Sin), x0, 8)};
  const double th = uniform(rng, 0.0, kTwoPi);
  const std::vector<AnalyticGerm> rot = {std::cos(th) * base[0] + std::sin(th) * base[1],
                                         -std::sin(th) * base[0] + std::cos(th) * base[1]};
  const OrderDecomposition d1 = order_decomposition(base), d2 = order_decomposition(rot);
  bool same_shape = d1.groups.size() == d2.groups.size();
  double span_gap = 0.0;
  if (same_shape) {
    Eigen::Matrix2d R;
    R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);  // rot = base * R
    for (size_t g = 0; g < d1.groups.size(); ++g) {
      same_shape = same_shape && d1.groups[g].k == d2.groups[g].k && d1.groups[g].dim() == d2.groups[g].dim();
      const Eigen::MatrixXd c1 = d1.groups[g].coords, c2 = R * d2.groups[g].coords;
      span_gap = std::max(span_gap, (c1 * c1.transpose() - c2 * c2.transpose()).norm());
    }
  }
  r.checks.push_back({"re-basis keeps (k_j, m_j)", same_shape ? 1.0 : 0.0, 1.0, same_shape});
  r.checks.push_back(check_le("re-basis span difference", span_gap, 1e-8));

  bool dims_ok = true;
  for (const auto& x : {Vec2(0, 0), Vec2(0.3, 0.2), Vec2(-0.5, 0.1)})
    for (int k = 1; k <= 3; ++k) {
      const OrderDecomposition d = order_decomposition(
          {germ_at(DiskEigenMode::make(k, 1, Parity::Cos), x, 10),
           germ_at(DiskEigenMode::make(k, 1, Parity::Sin), x, 10)});
      for (const auto& g : d.groups) dims_ok = dims_ok && g.dim() <= 2;
      if (d.groups.back().k == 0) dims_ok = dims_ok && d.groups.back().dim() == 1;
    }
  r.checks.push_back({"m_j <= 2 and k_p = 0 implies m_p = 1", dims_ok ? 1.0 : 0.0, 1.0, dims_ok});

  // ||V||^2 / Cap decreasing over three decades.
  const HoleSetting disk(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 128);
  bool decreasing = true;
  for (const AnalyticGerm& g : {AnalyticGerm::from_terms({{0, 0, 1.0}}, 2), random_vanishing_germ(rng, 1, 3)}) {
    double prev = INFINITY;
    for (double e : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const REpsMatrix m = r_eps_matrix(disk, {g}, 0.0, e, true);
      const double ratio = m.l2(0, 0) / m.dirichlet(0, 0);
      decreasing = decreasing && ratio < prev;
      prev = ratio;
    }
  }
  r.checks.push_back({"L2/capacity ratio decreasing", decreasing ? 1.0 : 0.0, 1.0, decreasing});
  return r;
}

}  // namespace

bool CriterionResult::pass() const {
  if (!error.empty() || checks.empty()) return false;
  if (time_limit > 0.0 && seconds > time_limit) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string CriterionResult::summary_line() const {
  std::ostringstream os;
  os.precision(4);
  os << (pass() ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": ";
  if (!error.empty()) os << "error: " << error << "; ";
  for (size_t i = 0; i < checks.size(); ++i)
    os << (i ? "; " : "") << checks[i].what << " = " << checks[i].value << " (tol " << checks[i].tol
       << (checks[i].pass ? "" : ", FAILED") << ")";
  os << "; " << seconds << " s";
  if (time_limit > 0.0) os << " (limit " << time_limit << " s)";
  return os.str();
}

CriterionResult run_criterion(int id, const ValidateOptions& opts) {
  static const std::function<CriterionResult(const ValidateOptions&)> table[] = {
      concentric_exactness, series_leading_terms, capacity_rates,   disk_closed_form,
      elliptic_oracle,      simple_shift,         double_rate,      off_centre_splitting,
      small_ev_trials,      structural_suite};
  if (id < 1 || id > kCriterionCount) throw DomainError("no such criterion");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](opts);
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const ValidateOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

nlohmann::json results_to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"what", c.what}, {"value", c.value}, {"tol", c.tol}, {"pass", c.pass}});
    nlohmann::json item = {{"id", r.id},           {"name", r.name},        {"pass", r.pass()},
                           {"seconds", r.seconds}, {"checks", checks}};
    if (r.time_limit > 0.0) item["time_limit"] = r.time_limit;
    if (!r.error.empty()) item["error"] = r.error;
    arr.push_back(item);
    all = all && r.pass();
  }
  return {{"pass", all}, {"criteria", arr}};
}

}  // namespace holecap
