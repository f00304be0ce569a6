#include "holecap/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holecap/errors.hpp"

namespace holecap {
namespace {

constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5)), dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Distance from the origin to a star-shaped curve along direction θ.
class RadialFunction {
 public:
  explicit RadialFunction(const ClosedCurve& c) : c_(c) {
    constexpr int n = 4096;
    t_.resize(n + 1);
    ang_.resize(n + 1);
    double prev = 0.0;
    for (int i = 0; i <= n; ++i) {
      t_[i] = 2.0 * kPi * i / n;
      const Vec2 p = c.point(t_[i]);
      double a = std::atan2(p.y(), p.x());
      if (i > 0) {
        while (a < prev - kPi) a += 2.0 * kPi;
        while (a > prev + kPi) a -= 2.0 * kPi;
        if (a <= prev) throw DomainError("curve is not star-shaped about the origin");
      }
      ang_[i] = prev = a;
    }
  }

  double operator()(double theta) const {
    double th = theta;
    while (th < ang_.front()) th += 2.0 * kPi;
    while (th >= ang_.front() + 2.0 * kPi) th -= 2.0 * kPi;
    const auto it = std::upper_bound(ang_.begin(), ang_.end(), th);
    const size_t i = std::clamp<size_t>(it - ang_.begin(), 1, ang_.size() - 1);
    double lo = t_[i - 1], hi = t_[i];
    const double a0 = ang_[i - 1];
    auto angle = [&](double t) {
      const Vec2 p = c_.point(t);
      double a = std::atan2(p.y(), p.x());
      while (a < a0 - kPi) a += 2.0 * kPi;
      while (a > a0 + kPi) a -= 2.0 * kPi;
      return a;
    };
    for (int it2 = 0; it2 < 60; ++it2) {
      const double mid = 0.5 * (lo + hi);
      (angle(mid) < th ? lo : hi) = mid;
    }
    return c_.point(0.5 * (lo + hi)).norm();
  }

 private:
  const ClosedCurve& c_;
  std::vector<double> t_, ang_;
};

}  // namespace

double rho_scale(int k, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("rho_scale needs eps in ]0, 1[");
  return k == 0 ? 1.0 / std::abs(std::log(eps)) : std::pow(eps, 2 * k);
}

Eigen::MatrixXd potential_l2(const HoleSetting& s, const std::vector<AnalyticGerm>& basis,
                             const std::vector<DensitySolution>& dens, double eps) {
  const int m = static_cast<int>(basis.size());
  const RadialFunction ro(s.outer_curve()), rh(s.hole_curve());
  std::vector<double> gx, gw;
  gauss_legendre(10, gx, gw);
  const int ntheta = 2 * s.nodes();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd v(m);
  for (int it = 0; it < ntheta; ++it) {
    const double th = 2.0 * kPi * it / ntheta;
    const Vec2 e(std::cos(th), std::sin(th));
    // log-radial variable, panels of width <= 0.5
    const double s0 = std::log(eps * rh(th)), s1 = std::log(ro(th));
    const int panels = std::max(2, static_cast<int>(std::ceil((s1 - s0) / 0.5)));
    const double h = (s1 - s0) / panels;
    for (int p = 0; p < panels; ++p)
      for (size_t g = 0; g < gx.size(); ++g) {
        const double sv = s0 + h * (p + 0.5 * (gx[g] + 1.0));
        const double r = std::exp(sv);
        const double wgt = 0.5 * h * gw[g] * r * r * (2.0 * kPi / ntheta);
        for (int i = 0; i < m; ++i) v(i) = solution_value(s, dens[i], r * e);
        out += wgt * v * v.transpose();
      }
  }
  // Inside the hole the potential equals the germ.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out(i, j) += eps * eps * integrate_over_region(s.hole(), (basis[i] * basis[j]).dilated(eps));
  return 0.5 * (out + out.transpose());
}

REpsMatrix r_eps_matrix(const HoleSetting& s, const std::vector<AnalyticGerm>& basis,
                        double lambda, double eps, bool include_l2) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) throw DomainError("empty basis");
  REpsMatrix r;
  r.eps = eps;
  std::vector<DensitySolution> dens;
  for (const auto& g : basis) dens.push_back(solve_densities(s, g, eps));
  r.dirichlet.resize(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.dirichlet(i, j) = direct_capacity(s, dens[i], basis[i], basis[j]);
  r.dirichlet = 0.5 * (r.dirichlet + r.dirichlet.transpose());
  r.l2 = Eigen::MatrixXd::Zero(m, m);
  if (include_l2) {
    r.l2 = potential_l2(s, basis, dens, eps);
    r.l2_computed = true;
  }
  r.A = r.dirichlet - lambda * r.l2;
  r.chi2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.dirichlet).eigenvalues().maxCoeff();
  return r;
}

double SplittingReport::branch(int group, int index, double eps) const {
  const BranchGroup& g = groups.at(group);
  return lambda + g.mu.at(index) * rho_scale(g.k, eps);
}

std::vector<double> SplittingReport::branches(double eps) const {
  std::vector<double> out;
  for (size_t g = 0; g < groups.size(); ++g)
    for (int l = 0; l < groups[g].dim(); ++l) out.push_back(branch(static_cast<int>(g), l, eps));
  return out;
}

SplittingReport predict_branches(const OrderDecomposition& decomp, const HoleSetting& s,
                                 double lambda) {
  SplittingReport rep;
  rep.lambda = lambda;
  for (const auto& grp : decomp.groups) {
    const int m = grp.dim();
    BranchGroup b;
    b.k = grp.k;
    b.q.resize(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = grp.k == 0
                             ? 2.0 * kPi * grp.basis[i].coeff(0, 0) * grp.basis[j].coeff(0, 0)
                             : Q_form(s, grp.basis[i], grp.basis[j]);
        b.q(i, j) = b.q(j, i) = v;
      }
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b.q).eigenvalues();
    b.mu.assign(ev.data(), ev.data() + m);
    const double top = std::abs(ev.maxCoeff());
    for (int i = 1; i < m; ++i)
      if (ev(i) - ev(i - 1) > 1e-8 * top) b.split = true;
    rep.groups.push_back(b);
  }
  return rep;
}

double EllipticConstants::C(int k) const {
  double s = 0.0;
  for (int p = 1; p <= k; ++p)
    if ((k + p) % 2 == 0) s += p * std::pow(binom(k, (k + p) / 2), 2);
  return std::pow(4.0, 1 - k) * s * (1.0 + ck_corruption);
}

double EllipticConstants::D(int k, double xi) const {
  double s = 0.0;
  for (int p = 1; p <= k; ++p)
    if ((k + p) % 2 == 0) s += p * std::pow(binom(k, (k + p) / 2), 2) * std::cosh(2.0 * p * xi);
  return 0.5 * std::pow(4.0, 1 - k) * s;
}

double EllipticConstants::interior(int k, double xi) const {
  double s = 0.0;
  for (int j = 0; j <= k; ++j)
    s += std::pow(binom(k, j), 2) * (k - 2 * j) * std::exp(2.0 * (k - 2 * j) * xi);
  return std::pow(4.0, -k) * s;
}

double elliptic_Q(double a, double b, int k, const PolarPrincipalPart& p,
                  const PolarPrincipalPart& q, const EllipticConstants& consts) {
  if (!(a > b && b > 0.0)) throw DomainError("elliptic form needs a > b > 0");
  if (k < 1) throw DomainError("elliptic form needs k >= 1");
  const EllipticCoords ec = EllipticCoords::from_axes(a, b);
  const double c2k = std::pow(ec.c, 2 * k);
  const double bb = p.beta * q.beta;
  return -0.5 * kPi * bb * c2k * consts.C(k) * std::cos(k * (p.phi + q.phi)) +
         kPi * bb * c2k * (consts.D(k, ec.xi_bar) + consts.interior(k, ec.xi_bar)) *
             std::cos(k * (p.phi - q.phi));
}

Eigen::Matrix2d elliptic_M(double a, double b, int k, const PolarPrincipalPart& pN,
                           const PolarPrincipalPart& pN1, const EllipticConstants& consts) {
  Eigen::Matrix2d M;
  M(0, 0) = elliptic_Q(a, b, k, pN, pN, consts);
  M(1, 1) = elliptic_Q(a, b, k, pN1, pN1, consts);
  M(0, 1) = M(1, 0) = elliptic_Q(a, b, k, pN, pN1, consts);
  return M;
}

SmallEVReport small_ev_check(const Eigen::MatrixXd& q, const Eigen::MatrixXd& F, int N, int m,
                             double gamma, double delta) {
  const int n = static_cast<int>(q.rows());
  if (q.cols() != n || F.rows() != n || F.cols() != m)
    throw DomainError("small_ev_check: inconsistent sizes");
  if (N < 1 || N + m > n) throw DomainError("small_ev_check: index range outside the space");
  if ((q - q.transpose()).norm() > 1e-12 * std::max(1.0, q.norm()))
    throw DomainError("small_ev_check: q must be symmetric");

  SmallEVReport r;
  r.gamma = gamma;
  r.N = N;
  r.m = m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
  const Eigen::VectorXd nu = es.eigenvalues();
  const int i0 = N - 1;  // 0-based index of nu_N

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(F);
  const Eigen::MatrixXd Qf = qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
  r.delta_measured = Eigen::JacobiSVD<Eigen::MatrixXd>(Qf.transpose() * q).singularValues()(0);
  r.delta = delta > 0.0 ? delta : r.delta_measured;

  r.h1 = r.delta > 0.0 && r.delta < gamma / std::sqrt(2.0);
  r.h2 = nu(i0 + m) >= gamma && (N < 2 || nu(i0 - 1) <= -gamma);
  for (int i = 0; i < m; ++i) r.h2 = r.h2 && std::abs(nu(i0 + i)) <= gamma;
  r.h3 = r.delta_measured <= r.delta * (1.0 + 1e-12);

  // Restriction to F through its Gram pencil.
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> gs(F.transpose() * q * F,
                                                               F.transpose() * F);
  for (int i = 0; i < m; ++i) {
    r.nu.push_back(nu(i0 + i));
    r.xi.push_back(gs.eigenvalues()(i));
    r.deviation.push_back(std::abs(nu(i0 + i) - gs.eigenvalues()(i)));
  }
  r.eigen_bound = 4.0 * r.delta * r.delta / gamma;
  const Eigen::MatrixXd E = es.eigenvectors().middleCols(i0, m);
  const Eigen::MatrixXd resid = Qf - E * (E.transpose() * Qf);
  r.projection_deviation = Eigen::JacobiSVD<Eigen::MatrixXd>(resid).singularValues()(0);
  r.projection_bound = std::sqrt(2.0) * r.delta / gamma;

  if (!(r.h1 && r.h2 && r.h3)) {
    r.status = SmallEVStatus::HypothesisViolated;
    return r;
  }
  // Relative slack for rounding in the eigensolvers.
  const double slack = 1e-12 * std::max(1.0, nu.cwiseAbs().maxCoeff());
  bool ok = r.projection_deviation <= r.projection_bound + slack;
  for (double d : r.deviation) ok = ok && d <= r.eigen_bound + slack;
  r.status = ok ? SmallEVStatus::Pass : SmallEVStatus::ConclusionFailed;
  return r;
}

Eigen::VectorXd gram_corrected_eigenvalues(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> gs(A, C);
  if (gs.info() != Eigen::Success) throw SolverError("Gram pencil is not positive definite");
  return gs.eigenvalues();
}

}  // namespace holecap
