#include "holecap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holecap/errors.hpp"

namespace holecap::specfun {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kSeriesCutoff = 1.0;

// Ascending series, used below kSeriesCutoff where it loses nothing.
std::vector<double> j_series(int kmax, double x) {
  std::vector<double> out(kmax + 1, 0.0);
  const double h = 0.5 * x;
  const double h2 = h * h;
  double lead = 1.0;  // (x/2)^k / k!
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) lead *= h / k;
    if (lead == 0.0) break;
    double term = lead, sum = lead;
    for (int m = 1; m < 60; ++m) {
      term *= -h2 / (m * double(m + k));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    out[k] = sum;
  }
  return out;
}

// Miller backward recurrence normalised by J_0 + 2 sum J_2m = 1.
std::vector<double> j_miller(int kmax, double x) {
  int start = std::max(kmax, static_cast<int>(std::ceil(x))) + 50 +
              static_cast<int>(10.0 * std::cbrt(x));
  if (start % 2) ++start;
  std::vector<double> v(start + 2, 0.0);
  v[start + 1] = 0.0;
  v[start] = 1e-300;
  const double two_over_x = 2.0 / x;
  for (int m = start; m >= 1; --m) {
    v[m - 1] = m * two_over_x * v[m] - v[m + 1];
    if (std::abs(v[m - 1]) > 1e250) {
      for (int i = m - 1; i <= start + 1; ++i) v[i] *= 1e-250;
    }
  }
  double norm = v[0];
  for (int m = 2; m <= start; m += 2) norm += 2.0 * v[m];
  std::vector<double> out(kmax + 1);
  for (int k = 0; k <= kmax; ++k) out[k] = v[k] / norm;
  return out;
}

}  // namespace

std::vector<double> bessel_j_seq(int kmax, double x) {
  if (kmax < 0) throw DomainError("bessel order must be non-negative");
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
  if (x == 0.0) {
    std::vector<double> out(kmax + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  return x < kSeriesCutoff ? j_series(kmax, x) : j_miller(kmax, x);
}

double bessel_j(int k, double x) { return bessel_j_seq(k, x)[k]; }

std::vector<double> bessel_y_seq(int kmax, double x) {
  if (kmax < 0) throw DomainError("bessel order must be non-negative");
  if (!(x > 0.0)) throw DomainError("bessel_y: argument must be positive");
  // Neumann series for Y_0 and its derivative need J up to the point where
  // the even-order tail is negligible.
  const int nj = std::max(2, static_cast<int>(std::ceil(x)) + 40 +
                                 static_cast<int>(10.0 * std::cbrt(x)));
  const std::vector<double> j = bessel_j_seq(nj + 1, x);
  const double lg = std::log(0.5 * x) + kEulerGamma;
  double s0 = 0.0, s1 = 0.0;
  for (int m = 1; 2 * m + 1 <= nj + 1; ++m) {
    const double sgn = (m % 2) ? -1.0 : 1.0;
    s0 += sgn * j[2 * m] / m;
    s1 += sgn * (j[2 * m - 1] - j[2 * m + 1]) / m;
  }
  const double two_pi = 2.0 / std::numbers::pi;
  std::vector<double> y(kmax + 1);
  y[0] = two_pi * (lg * j[0] - 2.0 * s0);
  if (kmax >= 1) y[1] = -two_pi * (j[0] / x - lg * j[1] - s1);
  for (int k = 1; k < kmax; ++k) y[k + 1] = (2.0 * k / x) * y[k] - y[k - 1];
  return y;
}

double bessel_y(int k, double x) { return bessel_y_seq(k, x)[k]; }

double bessel_j_zero(int k, int n) {
  if (k < 0) throw DomainError("bessel order must be non-negative");
  if (n < 1) throw DomainError("zero index must be >= 1");
  const double step = 0.2;
  double a = std::max(0.1, static_cast<double>(k));
  double fa = bessel_j(k, a);
  int found = 0;
  double b = a, fb = fa;
  while (found < n) {
    b = a + step;
    fb = bessel_j(k, b);
    if ((fa > 0.0) != (fb > 0.0)) {
      if (++found == n) break;
    }
    a = b;
    fa = fb;
  }
  // Safeguarded Newton inside the sign-change bracket.
  double x = 0.5 * (a + b);
  for (int it = 0; it < 100; ++it) {
    const std::vector<double> jj = bessel_j_seq(k + 1, x);
    const double f = jj[k];
    if (f == 0.0) return x;
    if ((f > 0.0) == (fa > 0.0)) {
      a = x;
      fa = f;
    } else {
      b = x;
    }
    const double df = (k == 0) ? -jj[1] : jj[k - 1] - (k / x) * f;
    double next = x - f / df;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) < 1e-15 * x || b - a < 1e-15 * x) return next;
    x = next;
  }
  return x;
}

}  // namespace holecap::specfun
