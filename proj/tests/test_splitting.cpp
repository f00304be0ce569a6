#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holecap/errors.hpp"
#include "holecap/reference.hpp"
#include "holecap/specfun.hpp"
#include "holecap/splitting.hpp"

using namespace holecap;

namespace {
constexpr double kPi = std::numbers::pi;

const HoleSetting& disks() {
  static const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::circle(1.0), 128);
  return s;
}

Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> n01;
  Eigen::MatrixXd X(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X(i, j) = n01(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(X).householderQ();
}
}  // namespace

TEST_CASE("rho scale") {
  CHECK(std::abs(rho_scale(0, 1e-3) - 1.0 / (3.0 * std::log(10.0))) < 1e-15);
  CHECK(std::abs(rho_scale(1, 1e-3) - 1e-6) < 1e-20);
  for (int k = 0; k <= 2; ++k) {
    double prev = INFINITY;
    for (int j = 1; j <= 6; ++j) {
      const double r = rho_scale(k + 1, std::pow(10.0, -j)) / rho_scale(k, std::pow(10.0, -j));
      CHECK(r < prev);
      prev = r;
    }
    CHECK(prev < 1e-5);
  }
}

TEST_CASE("r_eps matrix of the first mode") {
  const DiskEigenMode m = DiskEigenMode::make(0, 1, Parity::Cos);
  const AnalyticGerm g = germ_at(m, Vec2::Zero(), 6);
  const double eps = 1e-3;
  const REpsMatrix r = r_eps_matrix(disks(), {g}, m.lambda, eps, false);
  CHECK_FALSE(r.l2_computed);
  // u(0)^2 = 1 / (π J1(j01)^2)
  const double u0sq = 1.0 / (kPi * std::pow(specfun::bessel_j(1, m.root), 2));
  CHECK(std::abs(g.coeff(0, 0) * g.coeff(0, 0) - u0sq) < 1e-12);
  const double lead = 2 * kPi * u0sq / std::abs(std::log(eps));
  CHECK(std::abs(r.A(0, 0) / lead - 1.0) <= 0.1);
}

TEST_CASE("r_eps matrix of the double eigenvalue at the centre") {
  const DiskEigenMode mc = DiskEigenMode::make(1, 1, Parity::Cos), ms = DiskEigenMode::make(1, 1, Parity::Sin);
  const std::vector<AnalyticGerm> basis = {germ_at(mc, Vec2::Zero(), 8), germ_at(ms, Vec2::Zero(), 8)};
  const REpsMatrix r = r_eps_matrix(disks(), basis, mc.lambda, 1e-2, false);
  CHECK((r.A - r.A.transpose()).norm() < 1e-12 * r.A.norm());
  CHECK(std::abs(r.A(0, 1)) < 1e-3 * r.A(0, 0));
  CHECK(std::abs(r.A(0, 0) / r.A(1, 1) - 1.0) < 1e-6);
}

TEST_CASE("L2 term of the potential") {
  // u = 1 on concentric disks: V = log|x| / log eps outside the hole, 1 inside.
  const AnalyticGerm one = AnalyticGerm::from_terms({{0, 0, 1.0}}, 2);
  double prev = INFINITY;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    const REpsMatrix r = r_eps_matrix(disks(), {one}, 0.0, eps, true);
    CHECK(r.l2_computed);
    const double L = std::log(eps);
    // 2π ∫_eps^1 (log r / L)^2 r dr + π eps^2
    const double F1 = 0.25;
    const double Fe = eps * eps * (0.5 * L * L - 0.5 * L + 0.25);
    const double exact = 2 * kPi * (F1 - Fe) / (L * L) + kPi * eps * eps;
    INFO("eps = " << eps);
    // Near-curve evaluation limits the area quadrature to about 1e-6.
    CHECK(std::abs(r.l2(0, 0) / exact - 1.0) < 1e-5);
    const double ratio = r.l2(0, 0) / r.dirichlet(0, 0);
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("predicted branches") {
  const DiskEigenMode m0 = DiskEigenMode::make(0, 1, Parity::Cos);
  const AnalyticGerm g0 = germ_at(m0, Vec2::Zero(), 6);
  const SplittingReport simple = predict_branches(order_decomposition({g0}), disks(), m0.lambda);
  REQUIRE(simple.groups.size() == 1);
  CHECK(simple.groups[0].k == 0);
  CHECK(std::abs(simple.groups[0].mu[0] - 2 * kPi * g0.coeff(0, 0) * g0.coeff(0, 0)) < 1e-12);
  CHECK(std::abs(simple.branch(0, 0, 1e-4) - m0.lambda - simple.groups[0].mu[0] / std::log(1e4)) < 1e-12);

  const DiskEigenMode mc = DiskEigenMode::make(1, 1, Parity::Cos), ms = DiskEigenMode::make(1, 1, Parity::Sin);
  const std::vector<AnalyticGerm> germs = {germ_at(mc, Vec2::Zero(), 8), germ_at(ms, Vec2::Zero(), 8)};
  const SplittingReport dbl = predict_branches(order_decomposition(germs), disks(), mc.lambda);
  REQUIRE(dbl.groups.size() == 1);
  CHECK_FALSE(dbl.groups[0].split);
  // Disk formula: beta = c j / 2 for both modes, phases differing by π/2.
  const double beta = mc.norm * mc.root / 2;
  for (double mu : dbl.groups[0].mu) CHECK(std::abs(mu - 2 * kPi * beta * beta) < 1e-8 * mu);
  for (const auto& g : dbl.groups)
    for (double mu : g.mu) CHECK(mu > 0.0);
}

TEST_CASE("branch values are invariant under re-basis") {
  const DiskEigenMode mc = DiskEigenMode::make(1, 1, Parity::Cos), ms = DiskEigenMode::make(1, 1, Parity::Sin);
  const Vec2 x0(0.3, 0.2);
  const AnalyticGerm a = germ_at(mc, x0, 8), b = germ_at(ms, x0, 8);
  const HoleSetting s(ClosedCurve::circle(1.0, -x0), ClosedCurve::ellipse(1.2, 0.8), 128);
  const SplittingReport r1 = predict_branches(order_decomposition({a, b}), s, mc.lambda);
  const double th = 0.7;
  const SplittingReport r2 = predict_branches(
      order_decomposition({std::cos(th) * a + std::sin(th) * b, -std::sin(th) * a + std::cos(th) * b}), s, mc.lambda);
  REQUIRE(r1.groups.size() == 2);
  REQUIRE(r2.groups.size() == 2);
  for (size_t g = 0; g < 2; ++g) CHECK(std::abs(r1.groups[g].mu[0] - r2.groups[g].mu[0]) < 1e-8 * r1.groups[g].mu[0]);
}

TEST_CASE("disk limit of the elliptic closed form") {
  const double a = 1.0;
  for (int k = 1; k <= 3; ++k) {
    const PolarPrincipalPart p{k, 0.9, 0.2 / k}, q{k, 1.3, -0.4 / k};
    const Eigen::Matrix2d M = elliptic_M(a, a * (1 - 1e-7), k, p, q);
    const double s = 2 * kPi * k;
    // Natural order: entry (0, 0) pairs the first germ with itself.
    CHECK(std::abs(M(0, 0) - s * p.beta * p.beta) < 1e-5);
    CHECK(std::abs(M(1, 1) - s * q.beta * q.beta) < 1e-5);
    CHECK(std::abs(M(0, 1) - s * p.beta * q.beta * std::cos(k * (p.phi - q.phi))) < 1e-5);
  }
}

TEST_CASE("elliptic closed form against the energy form") {
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::ellipse(1.5, 0.7), 256);
  const PolarPrincipalPart p{1, 1.0, 0.3}, q{1, 0.7, -0.5};
  const double num = Q_form(s, germ_from_polar(p), germ_from_polar(q));
  CHECK(std::abs(elliptic_Q(1.5, 0.7, 1, p, q) / num - 1.0) < 1e-6);
  // A zero of the off-diagonal entry located on the closed form is a zero
  // of the boundary-integral form too.
  double lo = -kPi / 2 + 1e-6, hi = kPi / 2;
  auto f = [&](double phi) { return elliptic_Q(1.5, 0.7, 1, p, PolarPrincipalPart{1, 0.7, phi}); };
  REQUIRE(f(lo) * f(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) * f(lo) > 0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const double qn = Q_form(s, germ_from_polar(p), germ_from_polar(PolarPrincipalPart{1, 0.7, root}));
  CHECK(std::abs(qn) < 1e-6 * std::abs(num));
}

TEST_CASE("small-eigenvalue checker") {
  std::mt19937_64 rng(11);
  const int n = 12, N = 4, m = 2;
  Eigen::VectorXd nu(n);
  nu << -4, -3, -2, 0.01, 0.02, 1.5, 2, 2.5, 3, 3.5, 4, 4.5;
  const Eigen::MatrixXd U = random_orthogonal(rng, n);
  const Eigen::MatrixXd q = U * nu.asDiagonal() * U.transpose();

  SUBCASE("exact eigenspace of a zero cluster") {
    // The coupling bound covers g in F as well, so it is only tiny when the
    // clustered eigenvalues are zero.
    Eigen::VectorXd nu0 = nu;
    nu0(3) = nu0(4) = 0.0;
    const Eigen::MatrixXd q0 = U * nu0.asDiagonal() * U.transpose();
    const SmallEVReport r = small_ev_check(q0, U.middleCols(N - 1, m), N, m, 1.0, 1e-13);
    CHECK(r.status == SmallEVStatus::Pass);
    CHECK(std::abs(r.xi[0]) < 1e-13);
    CHECK(std::abs(r.xi[1]) < 1e-13);
  }
  SUBCASE("exact eigenspace of a nonzero cluster") {
    const SmallEVReport r = small_ev_check(q, U.middleCols(N - 1, m), N, m, 1.0, 0.0);
    CHECK(std::abs(r.delta_measured - 0.02) < 1e-12);
    CHECK(r.status == SmallEVStatus::Pass);
    CHECK(std::abs(r.xi[0] - 0.01) < 1e-12);
    CHECK(std::abs(r.xi[1] - 0.02) < 1e-12);
  }
  SUBCASE("perturbed eigenspace") {
    Eigen::MatrixXd F = U.middleCols(N - 1, m);
    F += 1e-3 * U.middleCols(0, m);
    const SmallEVReport r = small_ev_check(q, F, N, m, 1.0, 0.0);
    CHECK(r.h1);
    CHECK(r.h2);
    CHECK(r.h3);
    CHECK(r.delta_measured < 0.03);
    CHECK(r.status == SmallEVStatus::Pass);
    for (double d : r.deviation) CHECK(d <= r.eigen_bound);
    CHECK(r.projection_deviation <= r.projection_bound);
  }
  SUBCASE("delta above the hypothesis threshold") {
    const SmallEVReport r = small_ev_check(q, U.middleCols(N - 1, m), N, m, 1.0, 1.0 / std::sqrt(2.0));
    CHECK_FALSE(r.h1);
    CHECK(r.status == SmallEVStatus::HypothesisViolated);
  }
  SUBCASE("stated delta below the measured coupling") {
    Eigen::MatrixXd F = U.middleCols(N - 1, m) + 0.05 * U.middleCols(0, m);
    const SmallEVReport r = small_ev_check(q, F, N, m, 1.0, 1e-6);
    CHECK_FALSE(r.h3);
    CHECK(r.status == SmallEVStatus::HypothesisViolated);
  }
  CHECK_THROWS_AS(small_ev_check(q, U.leftCols(3), N, m, 1.0, 0.0), DomainError);
}

TEST_CASE("Gram-corrected eigenvalues are stable") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 2;
    Eigen::MatrixXd A(m, m), E(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        A(i, j) = n01(rng);
        E(i, j) = n01(rng);
      }
    A = 0.5 * (A + A.transpose()).eval();
    E = 0.5 * (E + E.transpose()).eval();
    E *= 1e-2 * std::uniform_real_distribution<double>(0, 1)(rng) / E.norm();
    const Eigen::VectorXd plain = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues();
    const Eigen::VectorXd corrected = gram_corrected_eigenvalues(A, Eigen::MatrixXd::Identity(m, m) + E);
    CHECK((plain - corrected).cwiseAbs().maxCoeff() <= 3 * E.norm() * A.norm());
  }
}
