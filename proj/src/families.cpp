// SPDX-License-Identifier: Apache-2.0

#include "nsexact/families.hpp"

#include <cmath>
#include <stdexcept>

#include "nsexact/errors.hpp"

namespace nsexact {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

FlowJet jet(const Constant& s, PolarPoint) {
  FlowJet j;
  j.u = {s.c1, s.c2};
  j.p = s.c3;
  return j;
}

FlowJet jet(const Linear& s, PolarPoint pt) {
  const Vec2 x = to_cartesian(pt);
  const double k = s.c1 * s.c1 + s.c2 * s.c3;
  FlowJet j;
  j.u = {s.c1 * x.x + s.c2 * x.y, s.c3 * x.x - s.c1 * x.y};
  j.p = -0.5 * k * pt.r * pt.r + s.c4;
  j.grad_u = Mat2{{{{s.c1, s.c2}, {s.c3, -s.c1}}}};
  j.grad_p = -k * x;
  j.w = s.c2 - s.c3;
  return j;
}

FlowJet jet(const Quadratic& q, PolarPoint pt) {
  const Vec2 x = to_cartesian(pt);
  // u1 = al x^2 + be y^2 + ga xy, u2 = de x^2 + ep y^2 + ze xy
  const double al = q.c2 + q.c3, be = 3 * q.c2 - q.c3, ga = 2 * (q.c1 + q.c4);
  const double de = q.c4 - 3 * q.c1, ep = -(q.c1 + q.c4), ze = -2 * (q.c2 + q.c3);
  const double rho = x.x * x.x + x.y * x.y;
  const double big = q.c1 * q.c1 + q.c2 * q.c2 - q.c3 * q.c3 - q.c4 * q.c4;
  FlowJet j;
  j.u = {al * x.x * x.x + be * x.y * x.y + ga * x.x * x.y, de * x.x * x.x + ep * x.y * x.y + ze * x.x * x.y};
  j.p = 0.5 * big * rho * rho + 8 * q.c2 * x.x - 8 * q.c1 * x.y + q.c5;
  j.grad_u = Mat2{{{{2 * al * x.x + ga * x.y, 2 * be * x.y + ga * x.x},
                    {2 * de * x.x + ze * x.y, 2 * ep * x.y + ze * x.x}}}};
  j.lap_u = {8 * q.c2, -8 * q.c1};
  j.grad_p = {2 * big * rho * x.x + 8 * q.c2, 2 * big * rho * x.y - 8 * q.c1};
  j.w = (ga - 2 * de) * x.x + (2 * be - ze) * x.y;
  j.grad_w = {ga - 2 * de, 2 * be - ze};
  return j;
}

// u1 - i u2 = (c1 - i c2) z^lambda is holomorphic, so lap u = 0 and w = 0.
FlowJet jet(const PowerMode& s, PolarPoint pt) {
  const double lam = s.lambda;
  const double r = pt.r, t = pt.theta;
  const double mag2 = s.c1 * s.c1 + s.c2 * s.c2;
  FlowJet j;
  if (r == 0.0) {
    if (lam < 1.0 && mag2 != 0.0) throw SingularPoint("power-mode gradient blows up at the corner for lambda < 1");
    j.p = s.c3;
    if (lam == 1.0) j.grad_u = Mat2{{{{s.c1, s.c2}, {s.c2, -s.c1}}}};
    return j;
  }
  const double rl = std::pow(r, lam);
  const double cl = std::cos(lam * t), sl = std::sin(lam * t);
  j.u = {rl * (s.c1 * cl + s.c2 * sl), rl * (s.c2 * cl - s.c1 * sl)};
  j.p = -0.5 * mag2 * rl * rl + s.c3;
  const double ck = std::cos((lam - 1) * t), sk = std::sin((lam - 1) * t);
  const double g = lam * std::pow(r, lam - 1);
  const double gr = g * (s.c1 * ck + s.c2 * sk);  // Re f'(z)
  const double gi = g * (s.c1 * sk - s.c2 * ck);  // Im f'(z)
  j.grad_u = Mat2{{{{gr, -gi}, {-gi, -gr}}}};
  const Vec2 x = to_cartesian(pt);
  j.grad_p = (-lam * mag2 * std::pow(r, 2 * lam - 2)) * x;
  return j;
}

FlowJet jet(const RotLog& s, PolarPoint pt) {
  FlowJet j;
  if (pt.r == 0.0) throw SingularPoint("rotational-log solution is singular at the corner");
  const double r = pt.r, t = pt.theta;
  const double lr = std::log(r);
  const double c = std::cos(t), sn = std::sin(t);
  const double l = s.c1 + s.c2 * lr;
  j.u = {-l * r * sn, l * r * c};
  j.p = 0.5 * r * r * (s.c2 * s.c2 * lr * lr + (2 * s.c1 * s.c2 - s.c2 * s.c2) * lr + s.c1 * s.c1 - s.c1 * s.c2 +
                       0.5 * s.c2 * s.c2) +
        2 * s.c2 * t + s.c3;
  j.grad_u = Mat2{{{{-s.c2 * sn * c, -(l + s.c2 * sn * sn)}, {l + s.c2 * c * c, s.c2 * sn * c}}}};
  j.lap_u = {-2 * s.c2 * sn / r, 2 * s.c2 * c / r};
  j.grad_p = {2 * s.c2 * (-sn) / r + l * l * r * c, 2 * s.c2 * c / r + l * l * r * sn};
  j.w = -(2 * s.c2 * lr + s.c2 + 2 * s.c1);
  j.grad_w = {-2 * s.c2 * c / r, -2 * s.c2 * sn / r};
  return j;
}

FlowJet jet(const ShearX& s, PolarPoint pt) {
  const Vec2 x = to_cartesian(pt);
  FlowJet j;
  j.u = {s.c1, s.c2 * x.x};
  j.p = -s.c1 * s.c2 * x.y + s.c3;
  j.grad_u = Mat2{{{{0, 0}, {s.c2, 0}}}};
  j.grad_p = {0, -s.c1 * s.c2};
  j.w = -s.c2;
  return j;
}

FlowJet jet(const ShearY& s, PolarPoint pt) {
  const Vec2 x = to_cartesian(pt);
  FlowJet j;
  j.u = {s.c1 * x.y, s.c2};
  j.p = -s.c1 * s.c2 * x.x + s.c3;
  j.grad_u = Mat2{{{{0, s.c1}, {0, 0}}}};
  j.grad_p = {-s.c1 * s.c2, 0};
  j.w = s.c1;
  return j;
}

bool is_integer(double v) { return std::floor(v) == v; }

}  // namespace

Family family_of(const FlowSolution& s) { return static_cast<Family>(s.index()); }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Constant:
      return "constant";
    case Family::Linear:
      return "linear";
    case Family::Quadratic:
      return "quadratic";
    case Family::PowerMode:
      return "powermode";
    case Family::RotLog:
      return "rotlog";
    case Family::ShearX:
      return "shearx";
    case Family::ShearY:
      return "sheary";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<double> constants_of(const FlowSolution& s) {
  return std::visit(Overloaded{
                        [](const Constant& v) { return std::vector<double>{v.c1, v.c2, v.c3}; },
                        [](const Linear& v) { return std::vector<double>{v.c1, v.c2, v.c3, v.c4}; },
                        [](const Quadratic& v) { return std::vector<double>{v.c1, v.c2, v.c3, v.c4, v.c5}; },
                        [](const PowerMode& v) { return std::vector<double>{v.lambda, v.c1, v.c2, v.c3}; },
                        [](const RotLog& v) { return std::vector<double>{v.c1, v.c2, v.c3}; },
                        [](const ShearX& v) { return std::vector<double>{v.c1, v.c2, v.c3}; },
                        [](const ShearY& v) { return std::vector<double>{v.c1, v.c2, v.c3}; },
                    },
                    s);
}

FlowJet evaluate(const FlowSolution& s, PolarPoint p) {
  return std::visit([&](const auto& v) { return jet(v, p); }, s);
}

VelocityValue velocity_at(const FlowSolution& s, PolarPoint p) {
  if (p.r == 0.0 && std::holds_alternative<RotLog>(s)) return {{0.0, 0.0}, true};
  if (p.r == 0.0 && std::holds_alternative<PowerMode>(s)) return {{0.0, 0.0}, false};
  return {evaluate(s, p).u, false};
}

Vec2 velocity(const FlowSolution& s, PolarPoint p) { return velocity_at(s, p).u; }

double pressure(const FlowSolution& s, PolarPoint p) {
  if (p.r == 0.0) {
    if (const auto* rl = std::get_if<RotLog>(&s)) return 2 * rl->c2 * p.theta + rl->c3;
    if (const auto* pm = std::get_if<PowerMode>(&s)) return pm->c3;
  }
  return evaluate(s, p).p;
}

Mat2 velocity_gradient(const FlowSolution& s, PolarPoint p) { return evaluate(s, p).grad_u; }

double vorticity(const FlowSolution& s, PolarPoint p) { return evaluate(s, p).w; }

std::array<double, 2> quadratic_residuals(const Quadratic& q) {
  return {q.c1 * q.c3 + q.c2 * q.c4 - 2 * q.c1 * q.c2, q.c1 * q.c4 - q.c2 * q.c3 + q.c1 * q.c1 - q.c2 * q.c2};
}

Quadratic make_quadratic(double c1, double c2, double c3, double c4, double c5) {
  Quadratic q{c1, c2, c3, c4, c5};
  const auto res = quadratic_residuals(q);
  if (std::abs(res[0]) > kQuadraticConstraintTol || std::abs(res[1]) > kQuadraticConstraintTol) {
    throw ConstraintViolation(res[0], res[1]);
  }
  return q;
}

Quadratic quadratic_from_c1c2(double c1, double c2, double c5) {
  const double det = c1 * c1 + c2 * c2;
  if (det == 0.0) throw std::invalid_argument("quadratic_from_c1c2 needs (C1, C2) != (0, 0)");
  // [ c1  c2 ] [C3]   [ 2 c1 c2      ]
  // [-c2  c1 ] [C4] = [ c2^2 - c1^2  ]
  const double c3 = c2 * (3 * c1 * c1 - c2 * c2) / det;
  const double c4 = c1 * (3 * c2 * c2 - c1 * c1) / det;
  return make_quadratic(c1, c2, c3, c4, c5);
}

FlowSolution make_power_mode(double lambda, double c1, double c2, double c3) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("power mode needs lambda > 0");
  if (lambda == 1.0) return Linear{c1, c2, c2, c3};
  if (lambda == 2.0) return Quadratic{0.0, 0.0, c1, c2, c3};
  return PowerMode{lambda, c1, c2, c3};
}

Admissibility admissible(const FlowSolution& s, const ConeDomain& d) {
  return std::visit(
      Overloaded{
          [&](const Quadratic& q) -> Admissibility {
            const auto res = quadratic_residuals(q);
            if (std::abs(res[0]) > kQuadraticConstraintTol || std::abs(res[1]) > kQuadraticConstraintTol) {
              return {false, "quadratic constants must satisfy C1C3+C2C4-2C1C2=0 and C1C4-C2C3+C1^2-C2^2=0"};
            }
            return {};
          },
          [&](const PowerMode& pm) -> Admissibility {
            if (!(pm.lambda > 0.0) || pm.lambda == 1.0 || pm.lambda == 2.0) {
              return {false, "power mode requires lambda in (0,1)u(1,2)u(2,inf)"};
            }
            if (d.is_full_plane() && !(pm.lambda >= 3.0 && is_integer(pm.lambda))) {
              return {false, "power mode on the full plane requires lambda>=3 and lambda in N (λ≥3 and λ∈ℕ)"};
            }
            return {};
          },
          [&](const RotLog& rl) -> Admissibility {
            if (d.is_full_plane() && rl.c2 != 0.0) {
              return {false, "rotational-log solution with C2 != 0 requires a sector domain (Omega != R^2)"};
            }
            return {};
          },
          [](const auto&) -> Admissibility { return {}; },
      },
      s);
}

FlowSolution scale_solution(const FlowSolution& s, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("scale factor must be positive");
  const double s2 = sigma * sigma, s3 = s2 * sigma;
  return std::visit(
      Overloaded{
          [&](const Constant& v) -> FlowSolution { return Constant{sigma * v.c1, sigma * v.c2, s2 * v.c3}; },
          [&](const Linear& v) -> FlowSolution { return Linear{s2 * v.c1, s2 * v.c2, s2 * v.c3, s2 * v.c4}; },
          [&](const Quadratic& v) -> FlowSolution {
            return Quadratic{s3 * v.c1, s3 * v.c2, s3 * v.c3, s3 * v.c4, s2 * v.c5};
          },
          [&](const PowerMode& v) -> FlowSolution {
            const double k = std::pow(sigma, v.lambda + 1);
            return PowerMode{v.lambda, k * v.c1, k * v.c2, s2 * v.c3};
          },
          [&](const RotLog& v) -> FlowSolution {
            return RotLog{s2 * (v.c1 + v.c2 * std::log(sigma)), s2 * v.c2, s2 * v.c3};
          },
          [&](const ShearX& v) -> FlowSolution { return ShearX{sigma * v.c1, s2 * v.c2, s2 * v.c3}; },
          [&](const ShearY& v) -> FlowSolution { return ShearY{s2 * v.c1, sigma * v.c2, s2 * v.c3}; },
      },
      s);
}

bool singular_at_origin(const FlowSolution& s) {
  if (std::holds_alternative<RotLog>(s)) return true;
  if (const auto* pm = std::get_if<PowerMode>(&s)) return pm->lambda < 1.0;
  return false;
}

}  // namespace nsexact
