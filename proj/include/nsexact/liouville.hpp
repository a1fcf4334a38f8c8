// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_LIOUVILLE_HPP_
#define NSEXACT_LIOUVILLE_HPP_

#include <optional>

#include "nsexact/families.hpp"
#include "nsexact/geometry.hpp"

namespace nsexact {

/// |u| ~ r^sigma (times ln r when log_factor) as r -> infinity.
struct GrowthExponent {
  double sigma = 0;
  bool log_factor = false;
};

/// Analytic, from the constants actually present: a member whose growing
/// coefficients vanish reports the exponent of what remains.
GrowthExponent growth_exponent(const FlowSolution& s);

/// Whether |x|^-1 |u(x)| -> 0 along every direction.
bool growth_ok(const GrowthExponent& g);

/// Whether grad u extends continuously to the closed domain, corner included.
bool corner_c1(const FlowSolution& s, const ConeDomain& d);

/// Velocity and pressure both constant.
bool is_constant(const FlowSolution& s);

/// Degree of u as a polynomial in (x, y); nullopt when u is not polynomial.
std::optional<int> polynomial_degree(const FlowSolution& s);

struct LiouvilleVerdict {
  bool growth_ok = false;
  bool c1_closure_ok = false;
  bool is_constant = false;
  std::optional<int> polynomial_degree;

  /// growth_ok and c1_closure_ok imply is_constant.
  bool implication_holds() const { return !(growth_ok && c1_closure_ok) || is_constant; }
};

/// Throws Inadmissible when (s, d) is outside the catalog.
LiouvilleVerdict liouville_verdict(const FlowSolution& s, const ConeDomain& d);

/// Largest component of the n-th forward difference of u along dir with step h.
double forward_difference(const FlowSolution& s, Vec2 x, Vec2 dir, double h, int n);

}  // namespace nsexact

#endif  // NSEXACT_LIOUVILLE_HPP_
