// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_FAMILIES_HPP_
#define NSEXACT_FAMILIES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nsexact/geometry.hpp"

namespace nsexact {

// The separated-variable catalog of steady 2D Navier-Stokes solutions
//   -lap u + u.grad u + grad p = 0,  div u = 0.
// Every family stores its pressure additive constant explicitly.

/// u = (c1, c2), p = c3.
struct Constant {
  double c1 = 0, c2 = 0, c3 = 0;
};

/// u = (c1 x + c2 y, c3 x - c1 y), p = -(c1^2 + c2 c3)(x^2 + y^2)/2 + c4.
struct Linear {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
};

/// Homogeneous quadratic velocity with quartic pressure. Only constants with
/// quadratic_residuals() == (0, 0) give a solution; use make_quadratic().
struct Quadratic {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
};

/// u = r^lambda (c1 cos(l t) + c2 sin(l t), c2 cos(l t) - c1 sin(l t)),
/// p = -(c1^2 + c2^2) r^(2 lambda) / 2 + c3. Irrotational.
struct PowerMode {
  double lambda = 3, c1 = 0, c2 = 0, c3 = 0;
};

/// u = (c1 + c2 ln r)(-y, x); the pressure carries 2 c2 theta on the
/// [0, 2pi) branch, so this family lives on sectors only (unless c2 = 0).
struct RotLog {
  double c1 = 0, c2 = 0, c3 = 0;
};

/// u = (c1, c2 x), p = -c1 c2 y + c3.
struct ShearX {
  double c1 = 0, c2 = 0, c3 = 0;
};

/// u = (c1 y, c2), p = -c1 c2 x + c3.
struct ShearY {
  double c1 = 0, c2 = 0, c3 = 0;
};

using FlowSolution = std::variant<Constant, Linear, Quadratic, PowerMode, RotLog, ShearX, ShearY>;

enum class Family { Constant, Linear, Quadratic, PowerMode, RotLog, ShearX, ShearY };

inline constexpr std::array<Family, 7> kAllFamilies = {Family::Constant, Family::Linear,   Family::Quadratic,
                                                       Family::PowerMode, Family::RotLog, Family::ShearX,
                                                       Family::ShearY};

Family family_of(const FlowSolution& s);
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Constants in declaration order (lambda first for PowerMode).
std::vector<double> constants_of(const FlowSolution& s);

/// Full analytic jet of a solution at one point.
struct FlowJet {
  Vec2 u;
  double p = 0;
  Mat2 grad_u;  // (i, j) = d u_i / d x_j
  Vec2 lap_u;
  Vec2 grad_p;
  double w = 0;  // d2 u1 - d1 u2
  Vec2 grad_w;
  double lap_w = 0;
};

/// Throws SingularPoint where the gradient blows up: r = 0 for RotLog and
/// for PowerMode with lambda < 1.
FlowJet evaluate(const FlowSolution& s, PolarPoint p);

struct VelocityValue {
  Vec2 u;
  bool boundary_limit = false;  // value is the continuous extension at the corner
};

VelocityValue velocity_at(const FlowSolution& s, PolarPoint p);
Vec2 velocity(const FlowSolution& s, PolarPoint p);
double pressure(const FlowSolution& s, PolarPoint p);
Mat2 velocity_gradient(const FlowSolution& s, PolarPoint p);
double vorticity(const FlowSolution& s, PolarPoint p);

/// (C1C3 + C2C4 - 2C1C2, C1C4 - C2C3 + C1^2 - C2^2).
std::array<double, 2> quadratic_residuals(const Quadratic& q);

inline constexpr double kQuadraticConstraintTol = 1e-12;

/// Throws ConstraintViolation unless both residuals are <= 1e-12 in magnitude.
Quadratic make_quadratic(double c1, double c2, double c3, double c4, double c5);

/// Solves the linear constraint system for (C3, C4). Throws
/// std::invalid_argument when c1 = c2 = 0 (any C3, C4 then works).
Quadratic quadratic_from_c1c2(double c1, double c2, double c5);

/// Builds the lambda-power solution; lambda = 1 and lambda = 2 are returned
/// as the equivalent Linear and Quadratic members.
FlowSolution make_power_mode(double lambda, double c1, double c2, double c3);

struct Admissibility {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

Admissibility admissible(const FlowSolution& s, const ConeDomain& d);

/// Navier-Stokes scaling u_s(x) = s u(s x), p_s(x) = s^2 p(s x), expressed
/// as the same family with transformed constants. Requires s > 0.
FlowSolution scale_solution(const FlowSolution& s, double sigma);

/// Whether the family's jet is singular at the corner (drives grid and
/// stencil placement).
bool singular_at_origin(const FlowSolution& s);

}  // namespace nsexact

#endif  // NSEXACT_FAMILIES_HPP_
