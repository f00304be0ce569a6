#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holecap/errors.hpp"
#include "holecap/geometry.hpp"

using namespace holecap;

namespace {
ClosedCurve wobbly() {
  return ClosedCurve::trig(Vec2(0.05, -0.03), {1.0, 0.1}, {0.0, 0.02}, {0.0, 0.03}, {0.8, 0.0, 0.05});
}

double shoelace(const ClosedCurve& c, int m) {
  double a = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vec2 p = c.point(2 * std::numbers::pi * i / m), q = c.point(2 * std::numbers::pi * (i + 1) / m);
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}
}  // namespace

TEST_CASE("areas") {
  CHECK(std::abs(area(ClosedCurve::circle(1.0)) - std::numbers::pi) < 1e-12);
  CHECK(std::abs(area(ClosedCurve::ellipse(1.5, 0.7)) - std::numbers::pi * 1.05) < 1e-10);
  CHECK(std::abs(area(wobbly()) - shoelace(wobbly(), 100000)) < 1e-8);
}

TEST_CASE("scaling") {
  const ClosedCurve c = scale_curve(ClosedCurve::circle(1.0), 0.25);
  CHECK(std::abs(c.point(0.7).norm() - 0.25) < 1e-15);
  const ClosedCurve e = scale_curve(ClosedCurve::ellipse(1.5, 0.7), 0.1);
  CHECK(std::abs(area(e) - std::numbers::pi * 0.15 * 0.07) < 1e-12);
  const ClosedCurve outer = ClosedCurve::circle(1.0);
  CHECK_THROWS_AS(scale_curve(ClosedCurve::circle(1.0), 1.0, &outer), ContainmentError);
  CHECK_NOTHROW(scale_curve(ClosedCurve::circle(1.0), 0.9, &outer));
}

TEST_CASE("containment limit") {
  CHECK(containment_limit(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0)) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(containment_limit(ClosedCurve::circle(1.0), ClosedCurve::ellipse(1.5, 0.7)) ==
        doctest::Approx(1.0 / 1.5).epsilon(1e-3));
}

TEST_CASE("curve validation") {
  CHECK_NOTHROW(wobbly().validate());
  // Clockwise parametrisation.
  CHECK_THROWS_AS(ClosedCurve::trig(Vec2::Zero(), {1.0}, {0.0}, {0.0}, {-1.0}).validate(), DomainError);
  // Figure-eight.
  CHECK_THROWS_AS(ClosedCurve::trig(Vec2::Zero(), {0.0}, {1.0}, {0.0}, {0.0, 1.0}).validate(), DomainError);
}

TEST_CASE("grid normals are outward and unit") {
  const QuadratureGrid g = make_grid(wobbly(), 64);
  for (int i = 0; i < g.n; ++i) {
    CHECK(std::abs(g.normal(i).norm() - 1.0) < 1e-14);
    CHECK(wobbly().contains(g.node(i) - 1e-3 * g.normal(i)));
    CHECK_FALSE(wobbly().contains(g.node(i) + 1e-3 * g.normal(i)));
  }
  CHECK(std::abs(make_grid(ClosedCurve::circle(2.0), 32).length() - 4 * std::numbers::pi) < 1e-12);
}

TEST_CASE("elliptic coordinates") {
  const EllipticCoords e = EllipticCoords::from_axes(1.5, 0.7);
  CHECK((elliptic_map(e, e.xi_bar, 0.0) - Vec2(1.5, 0.0)).norm() < 1e-12);
  CHECK((elliptic_map(e, e.xi_bar, std::numbers::pi / 2) - Vec2(0.0, 0.7)).norm() < 1e-12);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double xi = u(rng), eta = 3 * u(rng);
    const Vec2 dxi = (elliptic_map(e, xi + h, eta) - elliptic_map(e, xi - h, eta)) / (2 * h);
    const Vec2 deta = (elliptic_map(e, xi, eta + h) - elliptic_map(e, xi, eta - h)) / (2 * h);
    CHECK(std::abs(dxi.dot(deta)) < 1e-7 * dxi.norm() * deta.norm() + 1e-8);
  }
}
