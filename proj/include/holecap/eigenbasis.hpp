#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holecap/geometry.hpp"
#include "holecap/germ.hpp"

namespace holecap {

enum class Parity { Cos, Sin };

// L²-normalised Dirichlet eigenfunction of the unit disk:
//   u = c J_k(j_{k,n} r) cos(kθ) or sin(kθ).
struct DiskEigenMode {
  int k = 0;
  int n = 1;
  Parity parity = Parity::Cos;
  double root = 0.0;    // j_{k,n}
  double lambda = 0.0;  // j_{k,n}^2
  double norm = 0.0;    // c

  static DiskEigenMode make(int k, int n, Parity parity);
  double value(const Vec2& x) const;
};

// First `count` eigenvalues with multiplicity, nondecreasing; cos before sin.
std::vector<DiskEigenMode> disk_spectrum(int count);

// Taylor germ of the mode about x0 (|x0| < 1), degree D <= 12.
AnalyticGerm germ_at(const DiskEigenMode& mode, const Vec2& x0, int degree);

struct EigenGroup {
  int k = 0;                          // vanishing order of every member
  std::vector<AnalyticGerm> basis;    // L²-orthonormal
  Eigen::MatrixXd coords;             // input-germ coefficients, one column per member
  int dim() const { return static_cast<int>(basis.size()); }
};

struct OrderDecomposition {
  std::vector<EigenGroup> groups;  // strictly decreasing k
  int total_dim() const;
};

// Splits the span of L²-orthonormal germs by vanishing order.  `gram` is the
// L² Gram matrix of the inputs (identity when empty).  Rank decisions use a
// relative tolerance of 1e-9; a singular value inside [1e-11, 1e-7] raises
// RankAmbiguityError.
OrderDecomposition order_decomposition(const std::vector<AnalyticGerm>& germs,
                                       const Eigen::MatrixXd& gram = Eigen::MatrixXd());

// Principal part as beta r^k sin(kθ + kφ) with φ in ]-π/(2k), π/(2k)];
// beta may be negative so that the phase stays in that interval.  For k = 0
// beta holds the value at the origin and φ = 0.
struct PolarPrincipalPart {
  int k = 0;
  double beta = 0.0;
  double phi = 0.0;
};

PolarPrincipalPart polar_principal(const AnalyticGerm& germ);

// Germ of beta r^k sin(kθ + kφ).
AnalyticGerm germ_from_polar(const PolarPrincipalPart& p);

}  // namespace holecap
