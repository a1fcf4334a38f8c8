// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_REDUCTION_HPP_
#define NSEXACT_REDUCTION_HPP_

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "nsexact/angular.hpp"
#include "nsexact/geometry.hpp"

namespace nsexact {

/// A scalar function of one variable together with its first derivative.
struct Differentiable {
  ScalarFn f;
  ScalarFn df;

  double operator()(double x) const { return f(x); }
};

Differentiable constant_fn(double v);

/// u = (v1(theta) phi1(r), v2(theta) phi2(r)).
struct GeneralAnsatz {
  Differentiable v1, v2;
  Differentiable phi1, phi2;

  Vec2 velocity(double r, double theta) const { return {v1(theta) * phi1(r), v2(theta) * phi2(r)}; }
};

/// Coefficients of r phi1' = a phi1 + b phi2, r phi2' = c phi1 + d phi2.
struct RadialCoeffs {
  double a = 0, b = 0, c = 0, d = 0;
  /// |D1| of the row-normalized two-angle system.
  double conditioning = 0;
  /// Max relative residual of the radial system over the supplied radii.
  double residual = 0;
};

inline constexpr double kDegenerateAnglesTol = 1e-10;

/// cos t v1 phi1' + sin t v2 phi2' + cos t v2' phi2/r - sin t v1' phi1/r.
double divergence_general(const GeneralAnsatz& g, double r, double theta);

/// d2 u1 - d1 u2 from the raw separated form.
double raw_vorticity(const GeneralAnsatz& g, double r, double theta);

/// Solves the 2x2 divergence system at two probe angles by Cramer's rule.
/// The coefficients depend only on the angular data; the radii are used to
/// report how well the radial factors satisfy the resulting system.
/// Throws DegenerateAngles when |D1| < 1e-10 after row normalization.
RadialCoeffs derive_radial_system(const GeneralAnsatz& g, double theta1, double theta2,
                                  std::span<const double> r_samples);

/// Probe angles at 30% and 70% of the opening, pushed at least 0.05 rad away
/// from multiples of pi/2.
std::pair<double, double> default_probe_angles(const ConeDomain& d);

/// The default pair followed by asymmetric alternatives, for ansatzes whose
/// rows coincide at mirror-image angles.
std::vector<std::pair<double, double>> probe_angle_pairs(const ConeDomain& d);

struct FValues {
  double f1 = 0, f2 = 0, f3 = 0;
};

inline constexpr double kAxisTol = 1e-8;

/// The three angular coefficient functions of the critical identity,
/// evaluated with v1 = v1(theta), v2 = v2(theta). Throws AxisSingularity
/// within 1e-8 of a multiple of pi/2.
FValues F_functions(double a, double b, double c, double d, double v1, double v2, double theta);

/// F1 phi1 - F2 phi2 - [(a + d) v1 v2 r (b phi2^2 - c phi1^2) + F3 r phi1 phi2].
double critical_identity_residual(const GeneralAnsatz& g, const RadialCoeffs& rc, double r, double theta);

/// (a cos t v1 + c sin t v2 - sin t v1', b cos t v1 + d sin t v2 + cos t v2').
std::array<double, 2> angular_system_residual(double a, double b, double c, double d, double v1, double dv1,
                                              double v2, double dv2, double theta);

/// Simplified vorticity a v1/sin t phi1/r - d v2/cos t phi2/r, valid when both
/// the radial and the angular systems hold.
double general_vorticity(const GeneralAnsatz& g, const RadialCoeffs& rc, double r, double theta);

}  // namespace nsexact

#endif  // NSEXACT_REDUCTION_HPP_
