// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_VERIFIER_HPP_
#define NSEXACT_VERIFIER_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsexact/families.hpp"
#include "nsexact/geometry.hpp"

namespace nsexact {

using VectorField = std::function<Vec2(Vec2)>;
using ScalarField = std::function<double(Vec2)>;

/// Tensor grid in (r, theta): radii geometric on [r_min, r_max], angles
/// cell-centred inside the sector after removing theta_margin from each ray
/// (cell-centred over the full circle for the plane).
struct GridSpec {
  ConeDomain domain = ConeDomain::full_plane();
  double r_min = 0.5;
  double r_max = 2.0;
  int n_r = 8;
  int n_theta = 16;
  double theta_margin = 0.0;

  /// Throws std::invalid_argument when the spec is unusable.
  void validate() const;
  std::vector<double> radii() const;
  std::vector<double> thetas() const;
  /// Row-major in r, then theta.
  std::vector<PolarPoint> points() const;
};

/// Residuals of div u = 0, -lap u + u.grad u + grad p = 0 and lap w - u.grad w = 0
/// at one point, with the magnitude of the terms that cancel in each. In the
/// vorticity scale |u| is replaced by |u| + r|grad u| + r^2|lap u| and
/// |grad u|^2 is added, so that points where u or grad w vanish are not
/// measured against rounding noise.
struct ResidualTriple {
  double div = 0;
  Vec2 momentum;
  double vort = 0;

  double div_scale = 0;
  double momentum_scale = 0;
  double vort_scale = 0;

  double div_rel() const;
  double momentum_rel() const;
  double vort_rel() const;
};

/// From the catalog's hand-derived derivatives. Throws SingularPoint.
ResidualTriple analytic_residual(const FlowSolution& s, PolarPoint p);

/// Independent oracle: second-order central differences in Cartesian
/// coordinates on a stencil of half-width 2h. No analytic derivative is used.
/// When a domain is given, every stencil node must lie inside it (and off
/// the corner); otherwise OutOfDomain is thrown.
ResidualTriple fd_residual(const VectorField& u, const ScalarField& p, Vec2 point, double h,
                           const std::optional<ConeDomain>& domain = std::nullopt);

/// Convenience overload sampling a catalog member.
ResidualTriple fd_residual(const FlowSolution& s, Vec2 point, double h,
                           const std::optional<ConeDomain>& domain = std::nullopt);

/// 1e-3 max(r, 1), reduced so the stencil stays at least 2h clear of the
/// sector rays and of the corner.
double default_step(const ConeDomain& d, PolarPoint p);

struct ComponentStats {
  double max = 0;
  double rms = 0;
  double max_rel = 0;
};

struct ResidualReport {
  ComponentStats div, momentum, momentum_x, momentum_y, vort;
  double h = 0;  // 0 for analytic reports
  std::size_t points = 0;
};

ResidualReport analytic_residual_report(const FlowSolution& s, const GridSpec& g);
/// h <= 0 selects default_step() per point.
ResidualReport fd_residual_report(const FlowSolution& s, const GridSpec& g, double h);

struct ComponentOrder {
  std::vector<double> gaps;  // max over the grid of |fd - analytic|, one per h
  double order = 0;          // least-squares slope of log gap against log h
  bool at_floor = false;     // gaps at rounding level, order undefined
};

struct ConvergenceReport {
  std::vector<double> h;
  ComponentOrder div, momentum, vort;
};

/// Requires h_list strictly decreasing with at least three entries.
ConvergenceReport convergence_order(const FlowSolution& s, const GridSpec& g, std::span<const double> h_list);

/// Least-squares slope of y against x.
double ls_slope(std::span<const double> x, std::span<const double> y);

/// p(anchor) plus the midpoint-rule line integral of lap u - u.grad u along
/// the straight segment. Throws OutOfDomain when a node leaves the domain or
/// hits the corner of a singular family.
double recover_pressure(const FlowSolution& s, const ConeDomain& d, PolarPoint anchor, PolarPoint target,
                        int n_steps);

struct BlowupReport {
  std::vector<double> radii;
  std::vector<double> sup_grad;  // sup over theta of the operator norm of grad u
  bool bounded = false;
  double slope = 0;              // fit sup = slope |ln r| + intercept on the asymptotic radii
  double intercept = 0;
  std::string message;
};

inline constexpr int kDefaultThetaSamples = 256;

/// Radii must lie in (0, 1) and decrease.
BlowupReport blowup_profile(const RotLog& s, std::span<const double> radii, int n_theta = kDefaultThetaSamples);

struct HolderReport {
  double gamma = 0;
  std::vector<double> radii;
  std::vector<double> ratio;     // sup_theta |u| / r^gamma, sampled
  std::vector<double> envelope;  // closed form where the family has one, NaN otherwise
  bool tail_decreasing = false;  // last samples decrease toward the corner
  bool limit_zero = false;       // ratio -> 0 as r -> 0 (corner decay exponent > gamma)
  double certificate_radius = 0; // ratio is monotone on (0, certificate_radius)
  std::string verdict;
};

/// A numerical certificate over the sampled window, backed by the family's
/// exponent at the corner; not a proof of Hoelder continuity.
HolderReport holder_check(const FlowSolution& s, const ConeDomain& d, double gamma, std::span<const double> radii,
                          int n_theta = kDefaultThetaSamples);

/// Leading power of |u| at the corner; +inf for the zero field.
struct CornerBehaviour {
  double exponent = 0;
  bool log_factor = false;
};
CornerBehaviour corner_behaviour(const FlowSolution& s);

/// Angles for sup-over-theta sampling inside d.
std::vector<double> sample_angles(const ConeDomain& d, int n);

}  // namespace nsexact

#endif  // NSEXACT_VERIFIER_HPP_
