#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>

#include "holecap/eigenbasis.hpp"
#include "holecap/errors.hpp"
#include "holecap/reference.hpp"
#include "holecap/specfun.hpp"

using namespace holecap;

TEST_CASE("small holes approach the disk spectrum") {
  // Convergence is logarithmic for eigenfunctions not vanishing at the hole:
  // the gap follows 2πu(0)^2/|log eps| rather than a power of eps.
  const DiskEigenMode m0 = DiskEigenMode::make(0, 1, Parity::Cos);
  const double u0sq = m0.norm * m0.norm;
  for (double eps : {1e-4, 1e-6, 1e-8}) {
    const double gap = concentric_spectrum(eps, 1)[0].lambda - m0.lambda;
    CHECK(gap > 0.0);
    CHECK(gap * std::abs(std::log(eps)) / (2 * M_PI * u0sq) == doctest::Approx(1.0).epsilon(0.2));
  }
  const auto disk = disk_spectrum(5);
  std::vector<double> prev(5, INFINITY);
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const auto ecc = eccentric_spectrum(eps, Vec2(0.3, 0.1), 5).eigenvalues;
    REQUIRE(ecc.size() == 5);
    for (int i = 0; i < 5; ++i) {
      const double gap = ecc[i].lambda - disk[i].lambda;
      CHECK(gap > 0.0);
      CHECK(gap < prev[i]);
      prev[i] = gap;
    }
  }
}

TEST_CASE("concentric root against a Boost cross-product solve") {
  const double eps = 0.5;
  auto f = [eps](double x) {
    using boost::math::cyl_bessel_j;
    using boost::math::cyl_neumann;
    return cyl_bessel_j(0, x) * cyl_neumann(0, eps * x) - cyl_neumann(0, x) * cyl_bessel_j(0, eps * x);
  };
  boost::uintmax_t iters = 200;
  const auto br = boost::math::tools::toms748_solve(f, 5.0, 7.0, boost::math::tools::eps_tolerance<double>(50), iters);
  const double kappa = 0.5 * (br.first + br.second);
  const auto roots = concentric_roots(0, eps, 0.5, 7.0);
  REQUIRE_FALSE(roots.empty());
  CHECK(std::abs(std::sqrt(roots[0]) - kappa) < 1e-9);
  CHECK(concentric_spectrum(eps, 1)[0].k == 0);
}

TEST_CASE("domain monotonicity") {
  const auto a = concentric_spectrum(0.01, 6), b = concentric_spectrum(0.05, 6), c = concentric_spectrum(0.1, 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(a[i].lambda < b[i].lambda);
    CHECK(b[i].lambda < c[i].lambda);
  }
}

TEST_CASE("multiplicities of the concentric spectrum") {
  const auto sp = concentric_spectrum(0.1, 5);
  CHECK(sp[0].k == 0);
  CHECK(sp[1].k == 1);
  CHECK(sp[2].k == 1);
  CHECK(sp[1].lambda == sp[2].lambda);
}

TEST_CASE("eccentric solver reduces to the concentric one") {
  const auto c = concentric_spectrum(0.2, 6);
  const auto e = eccentric_spectrum(0.2, Vec2::Zero(), 6).eigenvalues;
  REQUIRE(e.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(e[i].lambda - c[i].lambda) < 1e-8 * c[i].lambda);
}

TEST_CASE("truncation self-consistency") {
  const Vec2 x0(0.3, 0.0);
  const auto a = eccentric_spectrum(0.05, x0, 6, 12).eigenvalues;
  const auto b = eccentric_spectrum(0.05, x0, 6, 24).eigenvalues;
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i].lambda - b[i].lambda) < 1e-8 * a[i].lambda);
  CHECK(eccentric_spectrum(0.05, x0, 4, 12, true).warnings.empty());
}

TEST_CASE("reference input checks") {
  CHECK_THROWS_AS(concentric_spectrum(1.5, 3), DomainError);
  CHECK_THROWS_AS(eccentric_spectrum(0.3, Vec2(0.7, 0.0), 3), DomainError);
  CHECK_THROWS_AS(eccentric_spectrum(0.1, Vec2(0.1, 0.0), 3, 4), DomainError);
  CHECK(std::abs(concentric_capacity(std::exp(-1.0)) - 2 * M_PI) < 1e-12);
}
