#include "holecap/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "holecap/errors.hpp"
#include "holecap/specfun.hpp"

namespace holecap {
namespace {

constexpr double kScanStep = 0.02;  // in sqrt(lambda)

// Bisection to the last bits on a sign oracle; f(lo) and f(hi) differ.
template <class F>
double bisect(F&& sign, double lo, double hi) {
  const int slo = sign(lo);
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sign(mid) == slo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

template <class F>
std::vector<double> scan_roots(F&& sign, double lo, double hi) {
  std::vector<double> roots;
  const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / kScanStep)));
  const double h = (hi - lo) / steps;
  double a = lo;
  int sa = sign(a);
  for (int i = 1; i <= steps; ++i) {
    const double b = lo + i * h;
    const int sb = sign(b);
    if (sa != 0 && sb != 0 && sa != sb) roots.push_back(bisect(sign, a, b));
    a = b;
    sa = sb;
  }
  return roots;
}

double concentric_function(int k, double eps, double kappa) {
  const double ye = specfun::bessel_y(k, kappa * eps);
  const double v = specfun::bessel_j(k, kappa) * ye - specfun::bessel_y(k, kappa) *
                                                          specfun::bessel_j(k, kappa * eps);
  return v / std::max(1.0, std::abs(ye));
}

int sgn(double v) { return (v > 0) - (v < 0); }

double j_signed(const std::vector<double>& J, int n) {
  const int a = std::abs(n);
  return (n < 0 && a % 2) ? -J[a] : J[a];
}

}  // namespace

double concentric_capacity(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("concentric capacity needs eps in ]0, 1[");
  return 2.0 * std::numbers::pi / std::abs(std::log(eps));
}

std::vector<double> concentric_roots(int k, double eps, double kappa_lo, double kappa_hi) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("annulus needs eps in ]0, 1[");
  auto sign = [&](double kap) { return sgn(concentric_function(k, eps, kap)); };
  std::vector<double> out;
  for (double kap : scan_roots(sign, std::max(kappa_lo, 1e-3), kappa_hi)) out.push_back(kap * kap);
  return out;
}

std::vector<AnnulusEigenvalue> concentric_spectrum(double eps, int count) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("annulus needs eps in ]0, 1[");
  if (count < 1) throw DomainError("count must be positive");
  double kmax = 1.5 * std::sqrt(count) + 4.0;
  for (int attempt = 0; attempt < 8; ++attempt, kmax *= 1.5) {
    std::vector<AnnulusEigenvalue> all;
    // Annulus roots of order k exceed j_{k,1} > k.
    for (int k = 0; k < kmax; ++k)
      for (double lam : concentric_roots(k, eps, 0.0, kmax)) {
        all.push_back({lam, k, true});
        if (k > 0) all.push_back({lam, k, false});
      }
    if (static_cast<int>(all.size()) >= count) {
      std::stable_sort(all.begin(), all.end(),
                       [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
      all.resize(count);
      return all;
    }
  }
  std::ostringstream msg;
  msg << "concentric spectrum: fewer than " << count << " roots in ]0, " << kmax * kmax << "[";
  throw SolverError(msg.str());
}

int eccentric_det_sign(double kappa, double eps, double d, bool even, int M) {
  const int first = even ? 0 : 1;
  const int nb = M + 1 - first;
  const std::vector<double> Jd = specfun::bessel_j_seq(2 * M, kappa * d);
  const std::vector<double> J1 = specfun::bessel_j_seq(M, kappa);
  const std::vector<double> Y1 = specfun::bessel_y_seq(M, kappa);
  const std::vector<double> Je = specfun::bessel_j_seq(M, kappa * eps);
  const std::vector<double> Ye = specfun::bessel_y_seq(M, kappa * eps);
  const double pm = even ? 1.0 : -1.0;

  // Unknowns: regular coefficients A_n, then hole coefficients B_m.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * nb, 2 * nb);
  for (int p = first; p <= M; ++p) {
    const int r = p - first;
    a(r, r) = J1[p];
    for (int m = first; m <= M; ++m) {
      const double par = (m % 2) ? -1.0 : 1.0;
      const double t = p == 0 ? par * Jd[m] : j_signed(Jd, p - m) + pm * par * Jd[p + m];
      a(r, nb + m - first) = Y1[p] * t;
    }
  }
  for (int q = first; q <= M; ++q) {
    const int r = nb + q - first;
    a(r, r) = Ye[q];
    const double par = (q % 2) ? -1.0 : 1.0;
    for (int n = first; n <= M; ++n) {
      const double t = q == 0 ? Jd[n] : j_signed(Jd, n - q) + pm * par * Jd[n + q];
      a(r, n - first) += Je[q] * t;
    }
  }
  // Positive row and column scaling leaves the sign unchanged.
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < a.rows(); ++i) {
      const double s = a.row(i).cwiseAbs().maxCoeff();
      if (s > 0) a.row(i) /= s;
    }
    for (int j = 0; j < a.cols(); ++j) {
      const double s = a.col(j).cwiseAbs().maxCoeff();
      if (s > 0) a.col(j) /= s;
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  int s = static_cast<int>(std::lround(lu.permutationP().determinant()));
  const auto& U = lu.matrixLU();
  for (int i = 0; i < U.rows(); ++i) {
    if (U(i, i) == 0.0) return 0;
    if (U(i, i) < 0) s = -s;
  }
  return s;
}

namespace {

std::vector<AnnulusEigenvalue> eccentric_roots(double eps, double d, double klo, double khi,
                                               int M) {
  std::vector<AnnulusEigenvalue> out;
  for (bool even : {true, false}) {
    auto sign = [&](double kap) { return eccentric_det_sign(kap, eps, d, even, M); };
    for (double kap : scan_roots(sign, klo, khi)) out.push_back({kap * kap, -1, even});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return out;
}

void check_geometry(double eps, const Vec2& x0, int M) {
  if (!(eps > 0.0)) throw DomainError("hole radius must be positive");
  if (!(eps + x0.norm() < 0.9)) throw DomainError("eccentric annulus needs eps + |x0| < 0.9");
  if (M < 8) throw DomainError("multipole truncation must be at least 8");
}

void compare_truncation(EccentricResult& res, double eps, double d, double klo, double khi,
                        int M) {
  const auto fine = eccentric_roots(eps, d, klo, khi, 2 * M);
  if (fine.size() != res.eigenvalues.size()) {
    res.warnings.push_back("doubling the truncation changed the number of roots");
    return;
  }
  for (size_t i = 0; i < fine.size(); ++i)
    if (std::abs(fine[i].lambda - res.eigenvalues[i].lambda) > 1e-6) {
      std::ostringstream msg;
      msg << "root " << res.eigenvalues[i].lambda << " moves by "
          << fine[i].lambda - res.eigenvalues[i].lambda << " when the truncation doubles";
      res.warnings.push_back(msg.str());
    }
}

}  // namespace

EccentricResult eccentric_window(double eps, const Vec2& x0, double lambda_lo, double lambda_hi,
                                 int M, bool check_truncation) {
  check_geometry(eps, x0, M);
  if (!(lambda_hi > lambda_lo && lambda_lo >= 0.0)) throw DomainError("empty eigenvalue window");
  const double klo = std::max(std::sqrt(lambda_lo), 1e-3), khi = std::sqrt(lambda_hi);
  EccentricResult res;
  res.eigenvalues = eccentric_roots(eps, x0.norm(), klo, khi, M);
  if (check_truncation) compare_truncation(res, eps, x0.norm(), klo, khi, M);
  return res;
}

EccentricResult eccentric_spectrum(double eps, const Vec2& x0, int count, int M,
                                   bool check_truncation) {
  check_geometry(eps, x0, M);
  if (count < 1) throw DomainError("count must be positive");
  double khi = 1.5 * std::sqrt(count) + 4.0;
  for (int attempt = 0; attempt < 8; ++attempt, khi *= 1.5) {
    EccentricResult res;
    res.eigenvalues = eccentric_roots(eps, x0.norm(), 0.5, khi, M);
    if (static_cast<int>(res.eigenvalues.size()) >= count) {
      res.eigenvalues.resize(count);
      if (check_truncation)
        compare_truncation(res, eps, x0.norm(), 0.5, std::sqrt(res.eigenvalues.back().lambda) + 0.05, M);
      return res;
    }
  }
  throw SolverError("eccentric spectrum: too few roots found");
}

}  // namespace holecap
