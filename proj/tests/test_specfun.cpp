#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "holecap/specfun.hpp"

using namespace holecap::specfun;

TEST_CASE("J at the origin") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0, 2.404825557695773)) < 1e-10);
}

TEST_CASE("J and Y agree with Boost across orders and arguments") {
  for (int k = 0; k <= 12; ++k)
    for (double x : {1e-6, 1e-3, 0.1, 0.9, 2.5, 7.3, 15.0, 31.0}) {
      const double j = boost::math::cyl_bessel_j(k, x);
      if (std::abs(j) > 1e-250) CHECK(std::abs(bessel_j(k, x) - j) <= 1e-12 * std::abs(j) + 1e-15);
      const double y = boost::math::cyl_neumann(k, x);
      CHECK(std::abs(bessel_y(k, x) - y) <= 1e-11 * std::abs(y) + 1e-14);
    }
}

TEST_CASE("sequences match single evaluations") {
  const auto js = bessel_j_seq(20, 4.2);
  const auto ys = bessel_y_seq(20, 4.2);
  for (int k = 0; k <= 20; ++k) {
    CHECK(std::abs(js[k] - bessel_j(k, 4.2)) <= 1e-14 * std::max(1.0, std::abs(js[k])));
    CHECK(std::abs(ys[k] - bessel_y(k, 4.2)) <= 1e-12 * std::abs(ys[k]));
  }
}

TEST_CASE("Y diverges logarithmically at zero") { CHECK(bessel_y(0, 1e-6) < -8.0); }

TEST_CASE("Wronskian") {
  const double x = 3.7;
  const double w = bessel_j(3, x) * bessel_y(2, x) - bessel_j(2, x) * bessel_y(3, x);
  CHECK(std::abs(w - 2.0 / (std::numbers::pi * x)) < 1e-10);
}

TEST_CASE("large-argument asymptotics") {
  const double x = 10.0;
  const double asym = std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x - 0.75 * std::numbers::pi);
  CHECK(std::abs(bessel_y(1, x) - asym) < 2e-2);
}

TEST_CASE("zeros") {
  CHECK(std::abs(bessel_j_zero(0, 1) - 2.404825557695773) < 1e-10);
  CHECK(std::abs(bessel_j_zero(1, 1) - 3.831705970207512) < 1e-10);
  for (int k = 0; k <= 8; ++k)
    for (int n = 1; n <= 6; ++n)
      CHECK(std::abs(bessel_j_zero(k, n) - boost::math::cyl_bessel_j_zero(double(k), n)) < 1e-12 * n * 10);
}

TEST_CASE("zeros interlace") {
  for (int k = 0; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n) {
      CHECK(bessel_j_zero(k, n) < bessel_j_zero(k + 1, n));
      CHECK(bessel_j_zero(k + 1, n) < bessel_j_zero(k, n + 1));
    }
}
