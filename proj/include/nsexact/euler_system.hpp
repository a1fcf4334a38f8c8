// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_EULER_SYSTEM_HPP_
#define NSEXACT_EULER_SYSTEM_HPP_

#include <array>
#include <string_view>

namespace nsexact {

/// The equidimensional radial system
///   r phi1' = a phi1 + b phi2,
///   r phi2' = c phi1 + d phi2,
/// together with the two integration constants of its general solution.
struct EulerSystem {
  double a = 0, b = 0, c = 0, d = 0;
  double c1 = 0, c2 = 0;
};

/// Solution shapes, keyed on b and delta = (a - d)^2 + 4bc.
enum class EulerCase {
  B0Equal,       // b = 0, d = a:  phi2 carries a ln r factor
  B0Distinct,    // b = 0, d != a: powers r^a and r^d
  RealDistinct,  // b != 0, delta > 0: powers r^m, r^n with m > n
  RealDouble,    // b != 0, delta = 0: (C1 ln r + C2) r^l
  Complex,       // b != 0, delta < 0: r^re [cos, sin](im ln r)
};

std::string_view euler_case_name(EulerCase c);

/// Characteristic data of rho^2 - (a + d) rho + ad - bc = 0.
///   B0Equal:      roots = {a, a}
///   B0Distinct:   roots = {a, d}
///   RealDistinct: roots = {m, n}, m > n
///   RealDouble:   roots = {l, l}
///   Complex:      roots = {re, im}, meaning re +- i im with im > 0
struct EulerCaseInfo {
  EulerCase kind = EulerCase::B0Equal;
  double delta = 0;
  std::array<double, 2> roots{};
};

/// |delta| at or below this is treated as a double root.
inline constexpr double kEulerDeltaTol = 1e-12;

EulerCaseInfo classify_case(double a, double b, double c, double d);

/// Characteristic polynomial value at rho (used to check roots).
double characteristic(double a, double b, double c, double d, double rho);

/// Closed-form (phi1, phi2) for r > 0.
class EulerRadialPair {
 public:
  EulerRadialPair(const EulerSystem& sys, const EulerCaseInfo& info);

  const EulerCaseInfo& info() const { return info_; }
  const EulerSystem& system() const { return sys_; }

  std::array<double, 2> phi(double r) const;
  std::array<double, 2> dphi(double r) const;

  /// True when phi1 and phi2 are proportional (including either one
  /// vanishing identically).
  bool linearly_dependent() const;

  /// Copy with phi1, phi2 multiplied by the given factors.
  EulerRadialPair scaled(double s1, double s2) const;

 private:
  // Each component is  r^k [ (p0 + p1 ln r) cos(w ln r) + (q0 + q1 ln r) sin(w ln r) ]
  // summed over at most two exponents.
  struct Term {
    double k = 0, w = 0;
    double p0 = 0, p1 = 0, q0 = 0, q1 = 0;
  };
  static double value(const Term& t, double r);
  static double deriv(const Term& t, double r);

  EulerSystem sys_;
  EulerCaseInfo info_;
  std::array<std::array<Term, 2>, 2> terms_{};
  std::array<double, 2> scale_{1.0, 1.0};
};

EulerRadialPair solve(const EulerSystem& sys);

/// (r phi1' - a phi1 - b phi2, r phi2' - c phi1 - d phi2) with the
/// coefficients taken from sys, not from the pair.
std::array<double, 2> ode_residual(const EulerRadialPair& pair, const EulerSystem& sys, double r);

}  // namespace nsexact

#endif  // NSEXACT_EULER_SYSTEM_HPP_
