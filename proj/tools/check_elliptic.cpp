// Build-time gate: the elliptic closed form must match the boundary-integral
// energy form for k = 1, 2, 3.  Any mismatch fails the build.
#include <cmath>
#include <cstdio>

#include "holecap/capacity.hpp"
#include "holecap/eigenbasis.hpp"
#include "holecap/splitting.hpp"

int main() {
  using namespace holecap;
  constexpr double kTol = 1e-6;
  const double a = 1.5, b = 0.7;
  const HoleSetting s(ClosedCurve::circle(1.0), ClosedCurve::ellipse(a, b), 256);
  // Pinned phases spread over ]-π/2k, π/2k].
  const double phases[][2] = {{0.31, -0.47}, {0.12, 0.36}, {-0.21, 0.05}};
  bool ok = true;
  for (int k = 1; k <= 3; ++k) {
    const PolarPrincipalPart pN{k, 1.1, phases[k - 1][0]};
    const PolarPrincipalPart pN1{k, -0.8, phases[k - 1][1]};
    const Eigen::Matrix2d M = elliptic_M(a, b, k, pN, pN1);
    const AnalyticGerm gN = germ_from_polar(pN), gN1 = germ_from_polar(pN1);
    Eigen::Matrix2d Q;
    Q(0, 0) = Q_form(s, gN, gN);
    Q(1, 1) = Q_form(s, gN1, gN1);
    Q(0, 1) = Q(1, 0) = Q_form(s, gN, gN1);
    const double err = (M - Q).cwiseAbs().maxCoeff() / Q.cwiseAbs().maxCoeff();
    std::printf("elliptic k=%d relative error %.3e\n", k, err);
    ok = ok && err <= kTol;
  }
  if (!ok) {
    std::fprintf(stderr, "elliptic closed form disagrees with the energy form\n");
    return 1;
  }
  return 0;
}
