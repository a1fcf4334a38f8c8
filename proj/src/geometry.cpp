// SPDX-License-Identifier: Apache-2.0

#include "nsexact/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsexact {

double Mat2::frobenius() const {
  return std::sqrt(a[0][0] * a[0][0] + a[0][1] * a[0][1] + a[1][0] * a[1][0] + a[1][1] * a[1][1]);
}

double Mat2::operator_norm() const {
  // sigma_max^2 = (F^2 + sqrt(F^4 - 4 det^2)) / 2
  const double f2 = a[0][0] * a[0][0] + a[0][1] * a[0][1] + a[1][0] * a[1][0] + a[1][1] * a[1][1];
  const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const double disc = std::max(0.0, (f2 - 2.0 * det) * (f2 + 2.0 * det));
  return std::sqrt(0.5 * (f2 + std::sqrt(disc)));
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi
  if (t >= kTwoPi) t = 0.0;
  return t;
}

PolarPoint to_polar(Vec2 p) {
  const double r = std::hypot(p.x, p.y);
  if (r == 0.0) return {0.0, 0.0};
  return {r, normalize_angle(std::atan2(p.y, p.x))};
}

Vec2 to_cartesian(PolarPoint p) { return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)}; }

ConeDomain ConeDomain::sector(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha < beta && beta <= kTwoPi)) {
    throw std::invalid_argument("sector requires 0 <= alpha < beta <= 2pi");
  }
  return ConeDomain(Kind::Sector, alpha, beta);
}

bool contains(const ConeDomain& d, PolarPoint p, Margin margin) {
  if (p.r < margin.r) return false;
  if (d.is_full_plane()) return true;
  if (p.r == 0.0) return false;
  const double t = normalize_angle(p.theta);
  if (margin.theta == 0.0) return t > d.alpha() && t < d.beta();
  return t - d.alpha() >= margin.theta && d.beta() - t >= margin.theta;
}

bool contains(const ConeDomain& d, Vec2 p, Margin margin) { return contains(d, to_polar(p), margin); }

}  // namespace nsexact
