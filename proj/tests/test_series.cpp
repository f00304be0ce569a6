#include <doctest.h>

#include <cmath>
#include <numbers>

#include "holecap/capacity.hpp"

using namespace holecap;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

ClosedCurve wobbly() {
  return ClosedCurve::trig(Vec2(0.05, -0.03), {1.0, 0.1}, {0.0}, {0.0}, {0.8, 0.0, 0.05});
}

const HoleSetting& generic() {
  static const HoleSetting s(ClosedCurve::ellipse(1.3, 1.1), wobbly(), 256);
  return s;
}

const AnalyticGerm kA = AnalyticGerm::from_terms({{0, 0, 0.8}, {1, 0, 0.5}, {0, 1, -0.3}, {2, 0, 0.2}, {1, 1, 0.1}}, 6);
const AnalyticGerm kB = AnalyticGerm::from_terms({{0, 0, -0.6}, {1, 0, 0.2}, {0, 1, 0.7}, {0, 2, -0.4}, {3, 0, 0.1}}, 6);
}  // namespace

TEST_CASE("leading density terms on concentric disks") {
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 128);
  const DensitySeries ser = series_densities(s, kA, 3);
  CHECK((ser.rho_i[0].array() - 1.0 / kTwoPi).abs().maxCoeff() < 1e-10);
  // rho^o_0 solves (1/2 + W*) rho = -nu.grad S on the outer curve.
  const QuadratureGrid& go = s.outer();
  Eigen::VectorXd rhs(go.n);
  for (int i = 0; i < go.n; ++i) rhs(i) = -go.normal(i).dot(Eigen::Vector2d(go.node(i) / (kTwoPi * go.node(i).squaredNorm())));
  CHECK((0.5 * ser.rho_o[0] + s.Wstar_outer() * ser.rho_o[0] - rhs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("first double-layer terms vanish") {
  const DensitySeries ser = series_densities(generic(), kA, 3);
  CHECK(ser.theta_o[0].cwiseAbs().maxCoeff() < 1e-14);
  CHECK(ser.theta_i[0].cwiseAbs().maxCoeff() < 1e-14);
  CHECK(ser.theta_o[1].cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("area term of the x1 germ on an elliptic hole") {
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::ellipse(1.5, 0.7), 256);
  const AnalyticGerm x1 = AnalyticGerm::from_terms({{1, 0, 1.0}}, 4);
  const CapacityExpansion e = series_coefficients(s, series_densities(s, x1, 3), x1);
  CHECK(std::abs(e.xi[2] - std::numbers::pi * 1.5 * 0.7) < 1e-9);
}

TEST_CASE("leading coefficients") {
  const CapacityExpansion e = series_coefficients(generic(), series_densities(generic(), kA, 3), kB);
  CHECK(std::abs(e.coeff(0, 0)) < 1e-10);
  CHECK(std::abs(e.coeff(0, 1) + 0.8 * -0.6) < 1e-9);
  CHECK(std::abs(e.r0 - r0(generic())) < 1e-12);
  CHECK_FALSE(e.cancellation);
}

TEST_CASE("order-one germs start at eps^2 with the energy form") {
  const AnalyticGerm a = AnalyticGerm::from_terms({{1, 0, 0.6}, {0, 1, -0.2}, {2, 0, 0.3}, {0, 3, 0.2}}, 4);
  const AnalyticGerm b = AnalyticGerm::from_terms({{1, 0, 0.1}, {0, 1, 0.9}, {1, 1, -0.4}}, 4);
  const CapacityExpansion e = series_coefficients(generic(), series_densities(generic(), a, 3), b);
  for (int n = 0; n <= 1; ++n)
    for (int l = 0; l <= n + 1; ++l) CHECK(std::abs(e.coeff(n, l)) < 1e-9);
  const double q = Q_form(generic(), a, b);
  CHECK(std::abs(e.coeff(2, 0) - q) < 1e-8 * std::abs(q));
}

TEST_CASE("leading truncation on concentric disks") {
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 128);
  const AnalyticGerm one = AnalyticGerm::from_terms({{0, 0, 1.0}}, 3);
  const CapacityExpansion e = series_coefficients(s, series_densities(s, one, 2), one);
  for (double eps : {1e-1, 1e-3}) CHECK(std::abs(eval_series(e, eps, 0, 1) - kTwoPi / std::abs(std::log(eps))) < 1e-9);
}

TEST_CASE("series converges to the direct capacity") {
  const CapacityExpansion e = series_coefficients(generic(), series_densities(generic(), kA, 4), kB);
  // Leading truncation misses O(eps) terms.
  std::vector<double> le, lerr;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const double d = direct_capacity(generic(), kA, kB, eps);
    le.push_back(std::log(eps));
    lerr.push_back(std::log(std::abs(eval_series(e, eps, 0, 1) - d)));
  }
  const double slope = (lerr[2] - lerr[0]) / (le[2] - le[0]);
  CHECK(slope >= 0.9);
  // Each added order improves the match at eps = 1e-3.
  const double d = direct_capacity(generic(), kA, kB, 1e-3);
  double prev = INFINITY;
  for (int n = 0; n <= 3; ++n) {
    const double err = std::abs(eval_series(e, 1e-3, n, n + 1) - d);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(e.eps_valid > 0.0);
  CHECK(std::abs(eval_series(e, e.eps_valid, 4, 5) / direct_capacity(generic(), kA, kB, e.eps_valid) - 1.0) < 0.05);
}
