// SPDX-License-Identifier: Apache-2.0

#include "nsexact/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "nsexact/errors.hpp"

namespace nsexact {

namespace {

bool any(std::initializer_list<double> v) {
  for (double x : v)
    if (x != 0.0) return true;
  return false;
}

}  // namespace

GrowthExponent growth_exponent(const FlowSolution& s) {
  struct V {
    GrowthExponent operator()(const Constant&) const { return {0, false}; }
    GrowthExponent operator()(const Linear& c) const { return {any({c.c1, c.c2, c.c3}) ? 1.0 : 0.0, false}; }
    GrowthExponent operator()(const Quadratic& c) const {
      return {any({c.c1, c.c2, c.c3, c.c4}) ? 2.0 : 0.0, false};
    }
    GrowthExponent operator()(const PowerMode& c) const { return {any({c.c1, c.c2}) ? c.lambda : 0.0, false}; }
    GrowthExponent operator()(const RotLog& c) const {
      if (c.c2 != 0.0) return {1, true};
      return {c.c1 != 0.0 ? 1.0 : 0.0, false};
    }
    GrowthExponent operator()(const ShearX& c) const { return {c.c2 != 0.0 ? 1.0 : 0.0, false}; }
    GrowthExponent operator()(const ShearY& c) const { return {c.c1 != 0.0 ? 1.0 : 0.0, false}; }
  };
  return std::visit(V{}, s);
}

bool growth_ok(const GrowthExponent& g) { return g.sigma < 1.0; }

bool corner_c1(const FlowSolution& s, const ConeDomain&) {
  if (auto* c = std::get_if<RotLog>(&s)) return c->c2 == 0.0;
  if (auto* c = std::get_if<PowerMode>(&s)) return c->lambda >= 1.0 || !any({c->c1, c->c2});
  return true;
}

bool is_constant(const FlowSolution& s) {
  struct V {
    bool operator()(const Constant&) const { return true; }
    bool operator()(const Linear& c) const { return !any({c.c1, c.c2, c.c3}); }
    bool operator()(const Quadratic& c) const { return !any({c.c1, c.c2, c.c3, c.c4}); }
    bool operator()(const PowerMode& c) const { return !any({c.c1, c.c2}); }
    bool operator()(const RotLog& c) const { return !any({c.c1, c.c2}); }
    bool operator()(const ShearX& c) const { return c.c2 == 0.0; }
    bool operator()(const ShearY& c) const { return c.c1 == 0.0; }
  };
  return std::visit(V{}, s);
}

std::optional<int> polynomial_degree(const FlowSolution& s) {
  if (is_constant(s)) return 0;
  if (auto* c = std::get_if<PowerMode>(&s)) {
    double k = std::round(c->lambda);
    if (k != c->lambda || k < 0) return std::nullopt;
    return static_cast<int>(k);
  }
  if (auto* c = std::get_if<RotLog>(&s); c && c->c2 != 0.0) return std::nullopt;
  GrowthExponent g = growth_exponent(s);
  return static_cast<int>(g.sigma);
}

LiouvilleVerdict liouville_verdict(const FlowSolution& s, const ConeDomain& d) {
  if (auto a = admissible(s, d); !a) throw Inadmissible(a.reason);
  LiouvilleVerdict v;
  v.growth_ok = growth_ok(growth_exponent(s));
  v.c1_closure_ok = corner_c1(s, d);
  v.is_constant = is_constant(s);
  v.polynomial_degree = polynomial_degree(s);
  return v;
}

double forward_difference(const FlowSolution& s, Vec2 x, Vec2 dir, double h, int n) {
  if (n < 0) throw std::invalid_argument("forward_difference: order must be >= 0");
  Vec2 acc;
  double binom = 1;
  for (int k = 0; k <= n; ++k) {
    Vec2 u = velocity(s, to_polar(x + (k * h) * dir));
    double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    acc = acc + (sign * binom) * u;
    binom = binom * (n - k) / (k + 1);
  }
  return std::max(std::abs(acc.x), std::abs(acc.y));
}

}  // namespace nsexact
