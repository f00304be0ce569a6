#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holecap/potential.hpp"

using namespace holecap;
using namespace holecap::potential;

namespace {
ClosedCurve wobbly() {
  return ClosedCurve::trig(Vec2(0.05, -0.03), {1.0, 0.1}, {0.0}, {0.0}, {0.8, 0.0, 0.05});
}
}  // namespace

TEST_CASE("single layer of the unit circle") {
  const QuadratureGrid g = make_grid(ClosedCurve::circle(1.0), 128);
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(g.n);
  CHECK(std::abs(single_layer_eval(g, one, Vec2(0, 0))) < 1e-12);
  CHECK(std::abs(single_layer_eval(g, one, Vec2(0.5, 0))) < 1e-10);
  CHECK(std::abs(single_layer_eval(g, one, Vec2(2, 0)) - std::log(2.0)) < 1e-10);
}

TEST_CASE("Gauss identity for the double layer") {
  for (const ClosedCurve& c : {ClosedCurve::ellipse(1.5, 0.7), wobbly()}) {
    const QuadratureGrid g = make_grid(c, 256);
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(g.n);
    CHECK(std::abs(double_layer_eval(g, one, Vec2(0.1, 0.05)) - 1.0) < 1e-10);
    CHECK(std::abs(double_layer_eval(g, one, Vec2(2.5, -1.0))) < 1e-10);
    CHECK((assemble(Kind::W, g) * one - 0.5 * one).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("double layer of cos on the unit circle") {
  // Interior limit of w[cos] solves the disk problem with data cos/2 + W[cos]
  // = cos/2 on the circle (W[cos] = 0 there), so w = r cos(θ)/2 inside.
  const QuadratureGrid g = make_grid(ClosedCurve::circle(1.0), 128);
  Eigen::VectorXd c(g.n);
  for (int i = 0; i < g.n; ++i) c(i) = std::cos(g.t(i));
  for (double r : {0.1, 0.5, 0.8}) CHECK(std::abs(double_layer_eval(g, c, Vec2(r, 0)) - 0.5 * r) < 1e-9);
}

TEST_CASE("adjoint pair on the unit circle") {
  const QuadratureGrid g = make_grid(ClosedCurve::circle(1.0), 64);
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(g.n);
  CHECK((assemble(Kind::WStar, g) * one - 0.5 * one).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("transposed duality") {
  const QuadratureGrid g = make_grid(wobbly(), 128);
  const Eigen::MatrixXd W = assemble(Kind::W, g), Ws = assemble(Kind::WStar, g);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd psi(g.n), phi(g.n);
    double a[4];
    for (double& x : a) x = n01(rng);
    for (int i = 0; i < g.n; ++i) {
      psi(i) = a[0] * std::cos(g.t(i)) + a[1] * std::sin(2 * g.t(i));
      phi(i) = a[2] + a[3] * std::cos(3 * g.t(i));
    }
    const double lhs = g.integrate((W * psi).cwiseProduct(phi));
    const double rhs = g.integrate(psi.cwiseProduct(Ws * phi));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("jump relations of the single layer") {
  // One-sided limits of the normal derivative, extrapolated from off-curve
  // values at h, h/2, h/4: outside -> (1/2 + W*)phi, jump = phi.
  // A fine grid for near-curve evaluation, a coarse one for the operator.
  const QuadratureGrid g = make_grid(ClosedCurve::ellipse(1.5, 0.7), 4096);
  const QuadratureGrid gc = make_grid(ClosedCurve::ellipse(1.5, 0.7), 256);
  auto density = [](const QuadratureGrid& q) {
    Eigen::VectorXd f(q.n);
    for (int i = 0; i < q.n; ++i) f(i) = 1.0 + 0.3 * std::cos(q.t(i));
    return f;
  };
  const Eigen::VectorXd phi = density(g), phic = density(gc);
  const Eigen::VectorXd trace = 0.5 * phic + assemble(Kind::WStar, gc) * phic;
  auto limit = [&](int i, double side) {
    const Vec2 x = g.node(i), nu = g.normal(i);
    double f[3];
    for (int s = 0; s < 3; ++s) f[s] = single_layer_grad(g, phi, x + side * (0.02 / (1 << s)) * nu).dot(nu);
    return (8 * f[2] - 6 * f[1] + f[0]) / 3;
  };
  for (int i : {0, 10, 23}) {
    const int fi = 16 * i;
    const double plus = limit(fi, 1.0), minus = limit(fi, -1.0);
    CHECK(std::abs((plus - minus) - phi(fi)) < 1e-4);
    CHECK(std::abs(plus - trace(i)) < 1e-4);
  }
}

TEST_CASE("S and its derivatives") {
  const Vec2 x(0.3, -0.7);
  CHECK(std::abs(S(x) - std::log(x.norm()) / (2 * std::numbers::pi)) < 1e-15);
  CHECK((grad_S(x) - x / (2 * std::numbers::pi * x.squaredNorm())).norm() < 1e-15);
  const double h = 1e-5;
  for (int hh = 0; hh <= 2; ++hh)
    for (int j = 0; j + hh <= 3; ++j) {
      const double fd = (dS(hh, j, x + Vec2(h, 0)) - dS(hh, j, x - Vec2(h, 0))) / (2 * h);
      CHECK(std::abs(fd - dS(hh + 1, j, x)) < 1e-6 * std::max(1.0, std::abs(fd)));
    }
  // Harmonic: d11 + d22 = 0.
  CHECK(std::abs(dS(2, 0, x) + dS(0, 2, x)) < 1e-13);
}
