#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holecap/capacity.hpp"
#include "holecap/eigenbasis.hpp"

namespace holecap {

// 1/|log eps| for k = 0, eps^(2k) otherwise.
double rho_scale(int k, double eps);

struct REpsMatrix {
  double eps = 0.0;
  bool l2_computed = false;
  Eigen::MatrixXd dirichlet;  // (u_i, u_j)-capacities
  Eigen::MatrixXd l2;         // L² products of the potentials (zero when dropped)
  Eigen::MatrixXd A;          // dirichlet - lambda * l2
  double chi2 = 0.0;          // largest eigenvalue of the capacity matrix
};

// The L² term needs Ω and the hole star-shaped about the origin.
REpsMatrix r_eps_matrix(const HoleSetting& s, const std::vector<AnalyticGerm>& basis,
                        double lambda, double eps, bool include_l2);

// L² products of the potentials of the given germs over Ω.
Eigen::MatrixXd potential_l2(const HoleSetting& s, const std::vector<AnalyticGerm>& basis,
                             const std::vector<DensitySolution>& dens, double eps);

struct BranchGroup {
  int k = 0;
  Eigen::MatrixXd q;        // matrix of the group form in the group basis
  std::vector<double> mu;   // ascending
  bool split = false;       // relative gap above 1e-8
  int dim() const { return static_cast<int>(mu.size()); }
};

struct SplittingReport {
  double lambda = 0.0;
  std::vector<BranchGroup> groups;
  double branch(int group, int index, double eps) const;
  // Every branch, in group order then ascending mu.
  std::vector<double> branches(double eps) const;
};

SplittingReport predict_branches(const OrderDecomposition& decomp, const HoleSetting& s,
                                 double lambda);

// Constants of the elliptic-hole closed form.  `ck_corruption` perturbs C_k
// relatively and exists only to exercise the validation path.
struct EllipticConstants {
  double ck_corruption = 0.0;
  double C(int k) const;
  double D(int k, double xi_bar) const;
  double interior(int k, double xi_bar) const;
};

// Energy form of beta r^k sin(kθ + kφ) and beta' r^k sin(kθ + kφ') for the
// ellipse with semi-axes a > b along x1, x2.
double elliptic_Q(double a, double b, int k, const PolarPrincipalPart& p,
                  const PolarPrincipalPart& q, const EllipticConstants& consts = {});

// Matrix of the form on the pair (u_N, u_{N+1}) in that order.
Eigen::Matrix2d elliptic_M(double a, double b, int k, const PolarPrincipalPart& pN,
                           const PolarPrincipalPart& pN1, const EllipticConstants& consts = {});

enum class SmallEVStatus { Pass, HypothesisViolated, ConclusionFailed };

struct SmallEVReport {
  double gamma = 0.0, delta = 0.0;
  int N = 0, m = 0;
  double delta_measured = 0.0;  // sup |q(φ, g)| over unit φ in F and unit g
  bool h1 = false, h2 = false, h3 = false;
  std::vector<double> nu;          // nu_{N}, ..., nu_{N+m-1}
  std::vector<double> xi;          // eigenvalues of q restricted to F
  std::vector<double> deviation;   // |nu - xi|
  double eigen_bound = 0.0;        // 4 delta^2 / gamma
  double projection_deviation = 0.0;
  double projection_bound = 0.0;   // sqrt(2) delta / gamma
  SmallEVStatus status = SmallEVStatus::HypothesisViolated;
};

// q symmetric on R^n with the Euclidean product, F an n x m basis, N 1-based.
// A non-positive delta means "use the measured value".
SmallEVReport small_ev_check(const Eigen::MatrixXd& q, const Eigen::MatrixXd& F, int N, int m,
                             double gamma, double delta);

// Eigenvalues (ascending) of the pencil (A, C) for a Gram matrix C.
Eigen::VectorXd gram_corrected_eigenvalues(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C);

}  // namespace holecap
