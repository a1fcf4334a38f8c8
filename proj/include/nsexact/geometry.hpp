// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_GEOMETRY_HPP_
#define NSEXACT_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <numbers>

namespace nsexact {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// 2x2 matrix; for velocity gradients entry (i, j) holds d u_i / d x_j.
struct Mat2 {
  std::array<std::array<double, 2>, 2> a{};

  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }
  double trace() const { return a[0][0] + a[1][1]; }
  double frobenius() const;
  /// Largest singular value, closed form for 2x2.
  double operator_norm() const;
  Vec2 apply(Vec2 v) const { return {a[0][0] * v.x + a[0][1] * v.y, a[1][0] * v.x + a[1][1] * v.y}; }
};

/// Polar coordinates with theta on the fixed branch [0, 2pi).
struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

/// Maps any angle onto [0, 2pi).
double normalize_angle(double theta);

PolarPoint to_polar(Vec2 p);
Vec2 to_cartesian(PolarPoint p);

/// Admissible region for a solution: the whole plane or an open sector
/// {alpha < theta < beta, r > 0} with 0 <= alpha < beta <= 2pi.
class ConeDomain {
 public:
  enum class Kind { FullPlane, Sector };

  static ConeDomain full_plane() { return ConeDomain(Kind::FullPlane, 0.0, kTwoPi); }
  /// Throws std::invalid_argument unless 0 <= alpha < beta <= 2pi.
  static ConeDomain sector(double alpha, double beta);

  Kind kind() const { return kind_; }
  bool is_full_plane() const { return kind_ == Kind::FullPlane; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double opening() const { return beta_ - alpha_; }

  friend bool operator==(const ConeDomain&, const ConeDomain&) = default;

 private:
  ConeDomain(Kind kind, double alpha, double beta) : kind_(kind), alpha_(alpha), beta_(beta) {}

  Kind kind_;
  double alpha_;
  double beta_;
};

struct Margin {
  double theta = 0.0;
  double r = 0.0;
};

/// Membership with clearance: angular distance >= margin.theta from both rays
/// (sectors only) and r >= margin.r. Sectors are open, so the rays and the
/// corner itself are never contained.
bool contains(const ConeDomain& d, PolarPoint p, Margin margin = {});
bool contains(const ConeDomain& d, Vec2 p, Margin margin = {});

}  // namespace nsexact

#endif  // NSEXACT_GEOMETRY_HPP_
