// SPDX-License-Identifier: Apache-2.0

#include "nsexact/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "nsexact/errors.hpp"

namespace nsexact {

namespace {

void check_axis(double theta) {
  const double q = theta / (0.5 * kPi);
  if (std::abs(q - std::round(q)) * 0.5 * kPi < kAxisTol) {
    throw AxisSingularity("F-function evaluation too close to a coordinate axis");
  }
}

double push_off_axis(double theta) {
  constexpr double kClearance = 0.05;
  const double quarter = 0.5 * kPi;
  const double k = std::round(theta / quarter);
  const double dist = theta - k * quarter;
  if (std::abs(dist) >= kClearance) return theta;
  return k * quarter + (dist < 0 ? -kClearance : kClearance);
}

}  // namespace

Differentiable constant_fn(double v) {
  return {[v](double) { return v; }, [](double) { return 0.0; }};
}

double divergence_general(const GeneralAnsatz& g, double r, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return c * g.v1(theta) * g.phi1.df(r) + s * g.v2(theta) * g.phi2.df(r) + c * g.v2.df(theta) * g.phi2(r) / r -
         s * g.v1.df(theta) * g.phi1(r) / r;
}

double raw_vorticity(const GeneralAnsatz& g, double r, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return s * g.v1(theta) * g.phi1.df(r) - c * g.v2(theta) * g.phi2.df(r) + c * g.v1.df(theta) * g.phi1(r) / r +
         s * g.v2.df(theta) * g.phi2(r) / r;
}

RadialCoeffs derive_radial_system(const GeneralAnsatz& g, double theta1, double theta2,
                                  std::span<const double> r_samples) {
  // Row i:  cos ti v1(ti) phi1' + sin ti v2(ti) phi2' = sin ti v1'(ti) phi1/r - cos ti v2'(ti) phi2/r
  double m[2][2], n[2][2];
  const double th[2] = {theta1, theta2};
  for (int i = 0; i < 2; ++i) {
    const double c = std::cos(th[i]), s = std::sin(th[i]);
    m[i][0] = c * g.v1(th[i]);
    m[i][1] = s * g.v2(th[i]);
    n[i][0] = s * g.v1.df(th[i]);
    n[i][1] = -c * g.v2.df(th[i]);
    const double norm = std::hypot(m[i][0], m[i][1]);
    if (norm == 0.0) throw DegenerateAngles(0.0);
    for (int j = 0; j < 2; ++j) {
      m[i][j] /= norm;
      n[i][j] /= norm;
    }
  }
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (!(std::abs(det) >= kDegenerateAnglesTol)) throw DegenerateAngles(std::abs(det));
  // K = M^{-1} N
  RadialCoeffs rc;
  rc.a = (m[1][1] * n[0][0] - m[0][1] * n[1][0]) / det;
  rc.b = (m[1][1] * n[0][1] - m[0][1] * n[1][1]) / det;
  rc.c = (m[0][0] * n[1][0] - m[1][0] * n[0][0]) / det;
  rc.d = (m[0][0] * n[1][1] - m[1][0] * n[0][1]) / det;
  rc.conditioning = std::abs(det);
  for (double r : r_samples) {
    const double p1 = g.phi1(r), p2 = g.phi2(r);
    const double dp1 = g.phi1.df(r), dp2 = g.phi2.df(r);
    const double e1 = r * dp1 - rc.a * p1 - rc.b * p2;
    const double e2 = r * dp2 - rc.c * p1 - rc.d * p2;
    const double scale1 = std::max({1.0, std::abs(r * dp1), std::abs(rc.a * p1) + std::abs(rc.b * p2)});
    const double scale2 = std::max({1.0, std::abs(r * dp2), std::abs(rc.c * p1) + std::abs(rc.d * p2)});
    rc.residual = std::max({rc.residual, std::abs(e1) / scale1, std::abs(e2) / scale2});
  }
  return rc;
}

std::pair<double, double> default_probe_angles(const ConeDomain& d) {
  const double t1 = d.alpha() + 0.3 * d.opening();
  const double t2 = d.alpha() + 0.7 * d.opening();
  return {push_off_axis(t1), push_off_axis(t2)};
}

std::vector<std::pair<double, double>> probe_angle_pairs(const ConeDomain& d) {
  std::vector<std::pair<double, double>> out{default_probe_angles(d)};
  for (auto [f1, f2] : {std::pair{0.2, 0.55}, {0.4, 0.85}, {0.15, 0.35}})
    out.emplace_back(push_off_axis(d.alpha() + f1 * d.opening()), push_off_axis(d.alpha() + f2 * d.opening()));
  return out;
}

FValues F_functions(double a, double b, double c, double d, double v1, double v2, double theta) {
  check_axis(theta);
  const double s = std::sin(theta), co = std::cos(theta);
  const double cot = co / s, tan = s / co;
  FValues f;
  f.f1 = a * (a - 1) * (a - 2) * v1 / (s * s * s) + c * (a * (a - 2) * cot * cot - d * (d + 2 * a - 2)) * v2 / co;
  f.f2 = d * (d - 1) * (d - 2) * v2 / (co * co * co) + b * (d * (d - 2) * tan * tan - a * (a + 2 * d - 2)) * v1 / s;
  f.f3 = (a * cot - d * tan) * (b * v1 * v1 + c * v2 * v2) + ((a * a - a) / (s * s) - (d * d - d) / (co * co)) * v1 * v2;
  return f;
}

double critical_identity_residual(const GeneralAnsatz& g, const RadialCoeffs& rc, double r, double theta) {
  const double v1 = g.v1(theta), v2 = g.v2(theta);
  const double p1 = g.phi1(r), p2 = g.phi2(r);
  const FValues f = F_functions(rc.a, rc.b, rc.c, rc.d, v1, v2, theta);
  const double lhs = f.f1 * p1 - f.f2 * p2;
  const double rhs = (rc.a + rc.d) * v1 * v2 * r * (rc.b * p2 * p2 - rc.c * p1 * p1) + f.f3 * r * p1 * p2;
  return lhs - rhs;
}

std::array<double, 2> angular_system_residual(double a, double b, double c, double d, double v1, double dv1,
                                              double v2, double dv2, double theta) {
  const double co = std::cos(theta), s = std::sin(theta);
  return {a * co * v1 + c * s * v2 - s * dv1, b * co * v1 + d * s * v2 + co * dv2};
}

double general_vorticity(const GeneralAnsatz& g, const RadialCoeffs& rc, double r, double theta) {
  check_axis(theta);
  return rc.a * g.v1(theta) / std::sin(theta) * g.phi1(r) / r - rc.d * g.v2(theta) / std::cos(theta) * g.phi2(r) / r;
}

}  // namespace nsexact
