#include "holecap/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "holecap/errors.hpp"
#include "holecap/specfun.hpp"

namespace holecap {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

// Complex polynomial in (y1, y2), indexed [a][b] for y1^a y2^b.
using CPoly = std::vector<std::vector<cplx>>;

CPoly zero_poly(int d) { return CPoly(d + 1, std::vector<cplx>(d + 1, 0.0)); }

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Adds s * y^p * conj(y)^q to out, with y = y1 + i y2.
void add_monomial(CPoly& out, int p, int q, cplx s) {
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int a = 0; a <= p; ++a)
    for (int b = 0; b <= q; ++b) {
      // (i y2)^a from y^p and (-i y2)^b from conj(y)^q
      const cplx f = ipow[a % 4] * ipow[(3 * b) % 4] * binom(p, a) * binom(q, b);
      out[p + q - a - b][a + b] += s * f;
    }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Eigen::VectorXd coefficient_vector(const AnalyticGerm& g, int degree) {
  Eigen::VectorXd v((degree + 1) * (degree + 2) / 2);
  int idx = 0;
  for (int k = 0; k <= degree; ++k)
    for (int j = 0; j <= k; ++j) v(idx++) = g.coeff(k - j, j);
  return v;
}

}  // namespace

DiskEigenMode DiskEigenMode::make(int k, int n, Parity parity) {
  if (k < 0 || n < 1) throw DomainError("mode indices must satisfy k >= 0, n >= 1");
  DiskEigenMode m;
  m.k = k;
  m.n = n;
  m.parity = k == 0 ? Parity::Cos : parity;
  m.root = specfun::bessel_j_zero(k, n);
  m.lambda = m.root * m.root;
  const double jn1 = std::abs(specfun::bessel_j(k + 1, m.root));
  m.norm = k == 0 ? 1.0 / (std::sqrt(kPi) * jn1) : std::sqrt(2.0) / (std::sqrt(kPi) * jn1);
  return m;
}

double DiskEigenMode::value(const Vec2& x) const {
  const double r = x.norm();
  const double th = std::atan2(x.y(), x.x());
  const double ang = parity == Parity::Cos ? std::cos(k * th) : std::sin(k * th);
  return norm * specfun::bessel_j(k, root * r) * ang;
}

std::vector<DiskEigenMode> disk_spectrum(int count) {
  if (count < 1 || count > 64) throw DomainError("disk_spectrum count must lie in [1, 64]");
  // The 64th eigenvalue is below 25^2; j_{k,1} > k bounds the orders needed.
  constexpr double kCut = 25.0;
  std::vector<DiskEigenMode> all;
  for (int k = 0; k < kCut; ++k)
    for (int n = 1;; ++n) {
      const double z = specfun::bessel_j_zero(k, n);
      if (z > kCut) break;
      all.push_back(DiskEigenMode::make(k, n, Parity::Cos));
      if (k > 0) all.push_back(DiskEigenMode::make(k, n, Parity::Sin));
    }
  std::stable_sort(all.begin(), all.end(), [](const DiskEigenMode& a, const DiskEigenMode& b) {
    return a.lambda < b.lambda;
  });
  all.resize(count);
  return all;
}

AnalyticGerm germ_at(const DiskEigenMode& mode, const Vec2& x0, int degree) {
  if (degree < 0 || degree > 12) throw DomainError("germ degree must lie in [0, 12]");
  if (x0.norm() >= 1.0) throw DomainError("expansion point must lie inside the unit disk");
  const double j = mode.root;
  const double d = x0.norm();
  const double alpha = d > 0.0 ? std::atan2(x0.y(), x0.x()) : 0.0;
  const int kmax = mode.k + degree;
  const std::vector<double> Jd = specfun::bessel_j_seq(kmax, j * d);
  auto f_at_x0 = [&](int n) {  // J_n(j d) e^{i n alpha}, any integer n
    const int a = std::abs(n);
    const double v = (n < 0 && a % 2) ? -Jd[a] : Jd[a];
    return v * std::polar(1.0, n * alpha);
  };

  // Addition formula: f_k(x0 + y) = sum_l f_{k-l}(x0) f_l(y) with
  // f_n(z) = J_n(j|z|) e^{i n arg z}.
  CPoly poly = zero_poly(degree);
  for (int l = -degree; l <= degree; ++l) {
    const int a = std::abs(l);
    const cplx pre = f_at_x0(mode.k - l) * ((l < 0 && a % 2) ? -1.0 : 1.0);
    for (int m = 0; a + 2 * m <= degree; ++m) {
      const double c = ((m % 2) ? -1.0 : 1.0) * std::pow(0.5 * j, a + 2 * m) /
                       (factorial(m) * factorial(m + a));
      if (l >= 0) add_monomial(poly, a + m, m, pre * c);
      else add_monomial(poly, m, a + m, pre * c);
    }
  }
  AnalyticGerm g(degree);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) {
      const cplx v = poly[a][b] * mode.norm;
      g.set(a, b, mode.parity == Parity::Cos ? v.real() : v.imag());
    }
  g.label = "mode(" + std::to_string(mode.k) + "," + std::to_string(mode.n) +
            (mode.parity == Parity::Cos ? ",cos)" : ",sin)");
  return g;
}

int OrderDecomposition::total_dim() const {
  int s = 0;
  for (const auto& g : groups) s += g.dim();
  return s;
}

OrderDecomposition order_decomposition(const std::vector<AnalyticGerm>& germs,
                                       const Eigen::MatrixXd& gram) {
  const int m = static_cast<int>(germs.size());
  if (m == 0) throw DomainError("order decomposition needs at least one germ");
  Eigen::MatrixXd G = gram.size() ? gram : Eigen::MatrixXd::Identity(m, m);
  if (G.rows() != m || G.cols() != m) throw DomainError("Gram matrix size mismatch");
  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success) throw DomainError("Gram matrix is not positive definite");
  // In b = L^T a coordinates the L² inner product is Euclidean.
  const Eigen::MatrixXd Linv_t =
      llt.matrixU().solve(Eigen::MatrixXd::Identity(m, m));  // a = L^{-T} b

  int D = 0;
  for (const auto& g : germs) D = std::max(D, g.degree());
  Eigen::MatrixXd coef((D + 1) * (D + 2) / 2, m);
  for (int i = 0; i < m; ++i) coef.col(i) = coefficient_vector(germs[i], D);
  const Eigen::MatrixXd P = coef * Linv_t;
  const double scale = Eigen::JacobiSVD<Eigen::MatrixXd>(P).singularValues()(0);
  if (!(scale > 0.0)) throw DomainError("all germs vanish to the stored degree");

  // Orthonormal kernel basis of the truncation to degree <= k.
  auto kernel = [&](int k) -> Eigen::MatrixXd {
    const int rows = (k + 1) * (k + 2) / 2;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(P.topRows(rows), Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
      const double rel = sv(i) / scale;
      if (rel >= 1e-11 && rel <= 1e-7)
        throw RankAmbiguityError("singular value " + std::to_string(rel) +
                                 " inside the rank guard band at degree " + std::to_string(k));
      if (rel > 1e-9) ++rank;
    }
    return svd.matrixV().rightCols(m - rank);
  };

  OrderDecomposition out;
  Eigen::MatrixXd prev = Eigen::MatrixXd::Identity(m, m);
  for (int k = 0; k <= D && prev.cols() > 0; ++k) {
    const Eigen::MatrixXd cur = kernel(k);
    if (cur.cols() < prev.cols()) {
      // E = prev ∩ cur^⊥
      Eigen::MatrixXd comp = prev - cur * (cur.transpose() * prev);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(comp, Eigen::ComputeThinU);
      const int dim = static_cast<int>(prev.cols() - cur.cols());
      const Eigen::MatrixXd b = svd.matrixU().leftCols(dim);
      EigenGroup grp;
      grp.k = k;
      grp.coords = Linv_t * b;
      for (int c = 0; c < dim; ++c) {
        AnalyticGerm g(D);
        for (int i = 0; i < m; ++i) g += grp.coords(i, c) * germs[i];
        grp.basis.push_back(g);
      }
      out.groups.push_back(grp);
    }
    prev = cur;
  }
  if (prev.cols() > 0) throw DomainError("some combination vanishes beyond the stored degree");
  std::reverse(out.groups.begin(), out.groups.end());
  return out;
}

PolarPrincipalPart polar_principal(const AnalyticGerm& germ) {
  PolarPrincipalPart p;
  p.k = germ.order();
  if (p.k > germ.degree()) throw DomainError("zero germ has no principal part");
  if (p.k == 0) {
    p.beta = germ.coeff(0, 0);
    return p;
  }
  const AnalyticGerm h = germ.homogeneous(p.k);
  if (h.laplacian().max_abs() > 1e-10 * std::max(1.0, h.max_abs()))
    throw DomainError("principal part is not harmonic");
  // beta sin(kt + kφ) = (beta sin kφ) cos kt + (beta cos kφ) sin kt
  const int n = 8 * p.k + 8;
  double A = 0.0, B = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * kPi * i / n;
    const double v = h.eval(Vec2(std::cos(t), std::sin(t)));
    A += v * std::cos(p.k * t);
    B += v * std::sin(p.k * t);
  }
  A *= 2.0 / n;
  B *= 2.0 / n;
  double beta = std::hypot(A, B);
  double kphi = std::atan2(A, B);  // ]-π, π]
  if (kphi > kPi / 2) {
    kphi -= kPi;
    beta = -beta;
  } else if (kphi <= -kPi / 2) {
    kphi += kPi;
    beta = -beta;
  }
  p.beta = beta;
  p.phi = kphi / p.k;
  return p;
}

AnalyticGerm germ_from_polar(const PolarPrincipalPart& p) {
  AnalyticGerm g(p.k);
  if (p.k == 0) {
    g.set(0, 0, p.beta);
    return g;
  }
  // beta Im(e^{ikφ} (x1 + i x2)^k)
  const cplx rot = std::polar(1.0, p.k * p.phi);
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int j = 0; j <= p.k; ++j) g.set(p.k - j, j, p.beta * binom(p.k, j) * (rot * ipow[j % 4]).imag());
  return g;
}

}  // namespace holecap
