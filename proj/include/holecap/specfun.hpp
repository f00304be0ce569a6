#pragma once

#include <stdexcept>
#include <vector>

namespace holecap {

// Bessel functions of integer order on the non-negative real axis.
namespace specfun {

double bessel_j(int k, double x);
double bessel_y(int k, double x);

// J_0..J_kmax at x in one backward sweep.
std::vector<double> bessel_j_seq(int kmax, double x);
// Y_0..Y_kmax at x (x > 0).
std::vector<double> bessel_y_seq(int kmax, double x);

// n-th positive zero of J_k (n >= 1).
double bessel_j_zero(int k, int n);

}  // namespace specfun
}  // namespace holecap
