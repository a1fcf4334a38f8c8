// SPDX-License-Identifier: Apache-2.0

#include "nsexact/euler_system.hpp"

#include <cmath>
#include <stdexcept>

namespace nsexact {

std::string_view euler_case_name(EulerCase c) {
  switch (c) {
    case EulerCase::B0Equal:
      return "b0-equal";
    case EulerCase::B0Distinct:
      return "b0-distinct";
    case EulerCase::RealDistinct:
      return "real-distinct";
    case EulerCase::RealDouble:
      return "real-double";
    case EulerCase::Complex:
      return "complex";
  }
  return "unknown";
}

double characteristic(double a, double b, double c, double d, double rho) {
  return rho * rho - (a + d) * rho + (a * d - b * c);
}

EulerCaseInfo classify_case(double a, double b, double c, double d) {
  EulerCaseInfo info;
  info.delta = (a - d) * (a - d) + 4 * b * c;
  if (b == 0.0) {
    info.kind = (d == a) ? EulerCase::B0Equal : EulerCase::B0Distinct;
    info.roots = {a, d};
    return info;
  }
  const double s = a + d;
  if (std::abs(info.delta) <= kEulerDeltaTol) {
    info.kind = EulerCase::RealDouble;
    info.roots = {0.5 * s, 0.5 * s};
  } else if (info.delta > 0) {
    info.kind = EulerCase::RealDistinct;
    const double q = a * d - b * c;
    const double sq = std::sqrt(info.delta);
    // larger-magnitude root first, the other from the product of roots
    const double big = 0.5 * (s + std::copysign(sq, s == 0.0 ? 1.0 : s));
    const double small = q / big;
    info.roots = big > small ? std::array<double, 2>{big, small} : std::array<double, 2>{small, big};
  } else {
    info.kind = EulerCase::Complex;
    info.roots = {0.5 * s, 0.5 * std::sqrt(-info.delta)};
  }
  return info;
}

EulerRadialPair::EulerRadialPair(const EulerSystem& sys, const EulerCaseInfo& info) : sys_(sys), info_(info) {
  const double a = sys.a, b = sys.b, c = sys.c, d = sys.d;
  const double C1 = sys.c1, C2 = sys.c2;
  auto& t1 = terms_[0];
  auto& t2 = terms_[1];
  switch (info.kind) {
    case EulerCase::B0Equal:
      t1[0] = {a, 0, C1, 0, 0, 0};
      t2[0] = {a, 0, C2, c * C1, 0, 0};
      break;
    case EulerCase::B0Distinct:
      t1[0] = {a, 0, C1, 0, 0, 0};
      t2[0] = {a, 0, c / (a - d) * C1, 0, 0, 0};
      t2[1] = {d, 0, C2, 0, 0, 0};
      break;
    case EulerCase::RealDistinct: {
      const double m = info.roots[0], n = info.roots[1];
      t1[0] = {m, 0, C1, 0, 0, 0};
      t1[1] = {n, 0, C2, 0, 0, 0};
      t2[0] = {m, 0, (m - a) / b * C1, 0, 0, 0};
      t2[1] = {n, 0, (n - a) / b * C2, 0, 0, 0};
      break;
    }
    case EulerCase::RealDouble: {
      const double l = info.roots[0];
      t1[0] = {l, 0, C2, C1, 0, 0};
      t2[0] = {l, 0, (C1 + (l - a) * C2) / b, (l - a) / b * C1, 0, 0};
      break;
    }
    case EulerCase::Complex: {
      const double lam = info.roots[0], mu = info.roots[1];
      t1[0] = {lam, mu, C1, 0, C2, 0};
      t2[0] = {lam, mu, ((lam - a) * C1 + mu * C2) / b, 0, ((lam - a) * C2 - mu * C1) / b, 0};
      break;
    }
  }
}

double EulerRadialPair::value(const Term& t, double r) {
  if (t.p0 == 0 && t.p1 == 0 && t.q0 == 0 && t.q1 == 0) return 0.0;
  const double lr = std::log(r);
  const double cs = std::cos(t.w * lr), sn = std::sin(t.w * lr);
  return std::pow(r, t.k) * ((t.p0 + t.p1 * lr) * cs + (t.q0 + t.q1 * lr) * sn);
}

double EulerRadialPair::deriv(const Term& t, double r) {
  if (t.p0 == 0 && t.p1 == 0 && t.q0 == 0 && t.q1 == 0) return 0.0;
  // with s = ln r, r d/dr = d/ds
  const double lr = std::log(r);
  const double cs = std::cos(t.w * lr), sn = std::sin(t.w * lr);
  const double p = t.p0 + t.p1 * lr, q = t.q0 + t.q1 * lr;
  const double ds = t.k * (p * cs + q * sn) + (t.p1 * cs + t.q1 * sn) + t.w * (q * cs - p * sn);
  return std::pow(r, t.k - 1) * ds;
}

std::array<double, 2> EulerRadialPair::phi(double r) const {
  if (!(r > 0)) throw std::domain_error("radial solution is evaluated for r > 0 only");
  return {scale_[0] * (value(terms_[0][0], r) + value(terms_[0][1], r)),
          scale_[1] * (value(terms_[1][0], r) + value(terms_[1][1], r))};
}

std::array<double, 2> EulerRadialPair::dphi(double r) const {
  if (!(r > 0)) throw std::domain_error("radial solution is evaluated for r > 0 only");
  return {scale_[0] * (deriv(terms_[0][0], r) + deriv(terms_[0][1], r)),
          scale_[1] * (deriv(terms_[1][0], r) + deriv(terms_[1][1], r))};
}

bool EulerRadialPair::linearly_dependent() const {
  const double C1 = sys_.c1, C2 = sys_.c2;
  switch (info_.kind) {
    case EulerCase::B0Equal:
      return sys_.c * C1 == 0.0;
    case EulerCase::B0Distinct:
    case EulerCase::RealDistinct:
      return C1 * C2 == 0.0;
    case EulerCase::RealDouble:
      return C1 == 0.0;
    case EulerCase::Complex:
      return C1 == 0.0 && C2 == 0.0;
  }
  return true;
}

EulerRadialPair EulerRadialPair::scaled(double s1, double s2) const {
  EulerRadialPair out = *this;
  out.scale_ = {scale_[0] * s1, scale_[1] * s2};
  return out;
}

EulerRadialPair solve(const EulerSystem& sys) { return EulerRadialPair(sys, classify_case(sys.a, sys.b, sys.c, sys.d)); }

std::array<double, 2> ode_residual(const EulerRadialPair& pair, const EulerSystem& sys, double r) {
  const auto f = pair.phi(r);
  const auto df = pair.dphi(r);
  return {r * df[0] - sys.a * f[0] - sys.b * f[1], r * df[1] - sys.c * f[0] - sys.d * f[1]};
}

}  // namespace nsexact
