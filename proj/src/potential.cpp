#include "holecap/potential.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "holecap/errors.hpp"

namespace holecap::potential {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// Trapezoidal weights for int_0^{2π} log(4 sin^2((t-τ)/2)) f(τ) dτ,
// indexed by the node offset (i - j) mod n.
Eigen::VectorXd log_weights(int n) {
  const int N = n / 2;
  Eigen::VectorXd r(n);
  for (int d = 0; d < n; ++d) {
    const double s = kTwoPi * d / n;
    double acc = 0.0;
    for (int m = 1; m < N; ++m) acc += std::cos(m * s) / m;
    r(d) = -(kTwoPi / N) * acc - (kPi / (double(N) * N)) * std::cos(N * s);
  }
  return r;
}

Eigen::MatrixXd strace(const QuadratureGrid& g) {
  const int n = g.n;
  const Eigen::VectorXd r = log_weights(n);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double smooth;
      if (i == j) {
        smooth = std::log(g.speed(i) * g.speed(i));
      } else {
        const double dist2 = (g.node(i) - g.node(j)).squaredNorm();
        const double sn = std::sin(0.5 * (g.t(i) - g.t(j)));
        smooth = std::log(dist2 / (4.0 * sn * sn));
      }
      const int d = ((i - j) % n + n) % n;
      a(i, j) = (r(d) * g.speed(j) + smooth * g.w(j)) / (4.0 * kPi);
    }
  }
  return a;
}

}  // namespace

double S(const Vec2& x) { return std::log(x.norm()) / kTwoPi; }

Vec2 grad_S(const Vec2& x) { return x / (kTwoPi * x.squaredNorm()); }

Eigen::Matrix2d hess_S(const Vec2& x) {
  const double r2 = x.squaredNorm();
  return (Eigen::Matrix2d::Identity() - 2.0 * x * x.transpose() / r2) / (kTwoPi * r2);
}

double dS(int h, int j, const Vec2& x) {
  // S = Re(log z)/(2π); d1 -> d/dz, d2 -> i d/dz on analytic functions.
  const int n = h + j;
  if (n == 0) return S(x);
  const std::complex<double> z(x.x(), x.y());
  double fact = 1.0;
  for (int k = 2; k < n; ++k) fact *= k;
  std::complex<double> deriv = ((n - 1) % 2 ? -fact : fact) / std::pow(z, n);
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return (ipow[j % 4] * deriv).real() / kTwoPi;
}

double single_layer_eval(const QuadratureGrid& g, const Eigen::VectorXd& phi, const Vec2& x) {
  double s = 0.0;
  for (int j = 0; j < g.n; ++j) s += phi(j) * S(x - g.node(j)) * g.w(j);
  return s;
}

double double_layer_eval(const QuadratureGrid& g, const Eigen::VectorXd& psi, const Vec2& x) {
  double s = 0.0;
  for (int j = 0; j < g.n; ++j) s -= psi(j) * g.normal(j).dot(grad_S(x - g.node(j))) * g.w(j);
  return s;
}

Vec2 single_layer_grad(const QuadratureGrid& g, const Eigen::VectorXd& phi, const Vec2& x) {
  Vec2 s = Vec2::Zero();
  for (int j = 0; j < g.n; ++j) s += phi(j) * g.w(j) * grad_S(x - g.node(j));
  return s;
}

Vec2 double_layer_grad(const QuadratureGrid& g, const Eigen::VectorXd& psi, const Vec2& x) {
  Vec2 s = Vec2::Zero();
  for (int j = 0; j < g.n; ++j) s -= psi(j) * g.w(j) * (hess_S(x - g.node(j)) * g.normal(j));
  return s;
}

bool near_curve(const QuadratureGrid& g, const Vec2& x) {
  double diam = 0.0, dmin = INFINITY;
  for (int i = 0; i < g.n; ++i) {
    diam = std::max(diam, (g.node(i) - g.node(0)).norm());
    dmin = std::min(dmin, (g.node(i) - x).norm());
  }
  return dmin < kTwoPi * diam / g.n;
}

Eigen::MatrixXd assemble(Kind kind, const QuadratureGrid& src, const QuadratureGrid& tgt) {
  if (src.n % 2 || tgt.n % 2) throw DomainError("node count must be even");
  const bool same = kind == Kind::W || kind == Kind::WStar || kind == Kind::STrace ||
                    kind == Kind::Hyper;
  if (same && &src != &tgt && (src.n != tgt.n || src.x != tgt.x))
    throw DomainError("same-curve operator needs identical source and target");
  if (kind == Kind::STrace) return strace(src);
  if (kind == Kind::Hyper) {
    Eigen::MatrixXd ds = periodic_diff_matrix(src.n);
    for (int i = 0; i < src.n; ++i) ds.row(i) /= src.speed(i);
    return ds * strace(src) * ds;
  }
  Eigen::MatrixXd a(tgt.n, src.n);
  for (int i = 0; i < tgt.n; ++i) {
    const Vec2 xi = tgt.node(i);
    for (int j = 0; j < src.n; ++j) {
      if (same && i == j) {
        a(i, j) = src.kappa(i) * src.w(i) / (4.0 * kPi);
        continue;
      }
      const Vec2 gs = grad_S(xi - src.node(j));
      double k = 0.0;
      switch (kind) {
        case Kind::W:
        case Kind::CrossW: k = -src.normal(j).dot(gs); break;
        case Kind::WStar:
        case Kind::CrossWStar: k = tgt.normal(i).dot(gs); break;
        case Kind::CrossS: k = S(xi - src.node(j)); break;
        default: break;
      }
      a(i, j) = k * src.w(j);
    }
  }
  return a;
}

Eigen::MatrixXd periodic_diff_matrix(int n) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        const double sgn = ((i - j) % 2 == 0) ? 1.0 : -1.0;
        d(i, j) = 0.5 * sgn / std::tan(kPi * (i - j) / n);
      }
  return d;
}

Eigen::VectorXd trig_resample(const Eigen::VectorXd& f, int m) {
  const int n = static_cast<int>(f.size());
  const int N = n / 2;
  Eigen::VectorXd a(N + 1), b(N + 1);
  for (int k = 0; k <= N; ++k) {
    double ca = 0.0, cb = 0.0;
    for (int j = 0; j < n; ++j) {
      const double t = kTwoPi * j / n;
      ca += f(j) * std::cos(k * t);
      cb += f(j) * std::sin(k * t);
    }
    a(k) = 2.0 * ca / n;
    b(k) = 2.0 * cb / n;
  }
  Eigen::VectorXd out(m);
  for (int i = 0; i < m; ++i) {
    const double t = kTwoPi * i / m;
    double s = 0.5 * a(0) + 0.5 * a(N) * std::cos(N * t);
    for (int k = 1; k < N; ++k) s += a(k) * std::cos(k * t) + b(k) * std::sin(k * t);
    out(i) = s;
  }
  return out;
}

}  // namespace holecap::potential
