#pragma once

#include <string>
#include <vector>

#include "holecap/geometry.hpp"

namespace holecap {

// 2π / |log eps|: capacity of B(0, eps) in B(0, 1) for u = 1.
double concentric_capacity(double eps);

struct AnnulusEigenvalue {
  double lambda = 0.0;
  int k = 0;           // angular index (concentric) or -1 when not defined
  bool even = true;    // symmetric about the line through the two centres
};

// First `count` Dirichlet eigenvalues of B(0,1) minus the closed disk B(0,eps),
// with multiplicity (each k >= 1 root is listed twice).
std::vector<AnnulusEigenvalue> concentric_spectrum(double eps, int count);

// Roots of the angular-k condition in ]kappa_lo, kappa_hi[ (as eigenvalues).
std::vector<double> concentric_roots(int k, double eps, double kappa_lo, double kappa_hi);

struct EccentricResult {
  std::vector<AnnulusEigenvalue> eigenvalues;
  std::vector<std::string> warnings;
};

// Eigenvalues of B(0,1) minus the closed disk B(x0, eps) from the truncated
// multipole system with orders 0..M on both circles.
EccentricResult eccentric_spectrum(double eps, const Vec2& x0, int count, int M = 12,
                                   bool check_truncation = false);

// Eigenvalues in ]lambda_lo, lambda_hi[.
EccentricResult eccentric_window(double eps, const Vec2& x0, double lambda_lo, double lambda_hi,
                                 int M = 12, bool check_truncation = false);

// Sign of the (equilibrated) multipole determinant of one parity block.
int eccentric_det_sign(double kappa, double eps, double d, bool even, int M);

}  // namespace holecap
