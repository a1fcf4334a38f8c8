// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_ANGULAR_HPP_
#define NSEXACT_ANGULAR_HPP_

#include <array>
#include <functional>
#include <vector>

namespace nsexact {

using ScalarFn = std::function<double(double)>;

/// Finite sum of  (a0 + a1 t) cos(k t) + (b0 + b1 t) sin(k t).
/// Closed under differentiation, which keeps every angular derivative exact.
class TrigSeries {
 public:
  struct Term {
    double k = 0;
    double a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  };

  TrigSeries() = default;
  explicit TrigSeries(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static TrigSeries constant(double v) { return TrigSeries({{0, v, 0, 0, 0}}); }

  double operator()(double t) const;
  TrigSeries derivative() const;
  const std::vector<Term>& terms() const { return terms_; }

  friend TrigSeries operator+(const TrigSeries& x, const TrigSeries& y);
  friend TrigSeries operator*(double s, const TrigSeries& x);

 private:
  std::vector<Term> terms_;
};

/// A(t) = cos t v1 + sin t v2,  L(t) = sin t v1 - cos t v2,  H = A' + (lambda + 1) L
/// for the single-radial-factor ansatz u = C r^lambda (v1, v2).
struct AngularTriple {
  double lambda = 0;
  std::array<double, 4> c{};
  TrigSeries a, l, h;
};

/// General solution of the angular vorticity system for exponent lambda >= 0.
///   lambda = 0: A = cos t (C1 t/2 + C3) + sin t (-C2 t/2 + C4), H = C1 cos t - C2 sin t.
///   lambda = 1: A = C1 cos 2t + C2 sin 2t, H = C3 (constant); C4 unused.
///   otherwise:  H = C1 cos((l-1)t) + C2 sin((l-1)t) and
///               A = C3 cos((l+1)t) + C4 sin((l+1)t) + (l-1)/(4l) [C2 cos((l-1)t) - C1 sin((l-1)t)].
/// In all branches L = (H - A') / (lambda + 1).
AngularTriple build_ALH(double lambda, double c1, double c2, double c3, double c4);

/// Inverts the rotation (A, L) <-> (v1, v2).
std::pair<ScalarFn, ScalarFn> recover_v1v2(ScalarFn a, ScalarFn l);
std::pair<ScalarFn, ScalarFn> angular_AL(ScalarFn v1, ScalarFn v2);

/// Left-hand side of the constraint that makes H A - H' L / (lambda - 1) vanish:
///   lambda = 0: the secular identity (C1, C2 must vanish),
///   lambda = 2: (C1C3 + C2C4 - C1C2/4) cos 2t + (C1C4 - C2C3 + (C1^2 - C2^2)/8) sin 2t,
///   otherwise:  (C1C3 + C2C4) cos 2t + (C1C4 - C2C3) sin 2t
///               - [C1C2 cos((2l-2)t) + (C2^2 - C1^2)/2 sin((2l-2)t)] / (2l),
///   lambda = 1: the pair (H' L, H'') is identically zero, so 0.
double compatibility_residual(double lambda, double c1, double c2, double c3, double c4, double theta);

/// ((lambda - 1) H A - H' L, H'' + (lambda - 1)^2 H) at theta.
std::array<double, 2> vorticity_pair_residual(const AngularTriple& t, double theta);

/// v = C cos^n t (solutions of n sin t v + cos t v' = 0) or
/// v = C sin^n t (solutions of n cos t v - sin t v' = 0).
struct AngularPower {
  enum class Base { Cos, Sin };
  Base base = Base::Cos;
  int exponent = 1;
  double c = 1;

  double operator()(double t) const;
  double derivative(double t) const;
};

/// order 1 -> C cos t, order 2 -> C cos^2 t. Throws std::invalid_argument otherwise.
AngularPower cosine_order_solution(int order, double c);
/// C sin^a t for a in {0, 1, 2}. Throws std::invalid_argument otherwise.
AngularPower sine_power_solution(int a, double c);
/// C cos^d t for d in {0, 1, 2}.
AngularPower cosine_power_solution(int d, double c);

/// Value and first three derivatives of a radial function.
struct RadialJet3 {
  std::function<std::array<double, 4>(double)> eval;
};

/// Fundamental system {r, r ln r, 1/r} of r^3 f''' + 2 r^2 f'' - r f' + f = 0.
std::array<RadialJet3, 3> radial_vorticity_ode_basis();

/// r^3 f''' + 2 r^2 f'' - r f' + f.
double radial_vorticity_ode_residual(const RadialJet3& f, double r);

}  // namespace nsexact

#endif  // NSEXACT_ANGULAR_HPP_
