// SPDX-License-Identifier: Apache-2.0

#include "nsexact/angular.hpp"

#include <cmath>
#include <stdexcept>

namespace nsexact {

double TrigSeries::operator()(double t) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    const double c = std::cos(term.k * t), s = std::sin(term.k * t);
    sum += (term.a0 + term.a1 * t) * c + (term.b0 + term.b1 * t) * s;
  }
  return sum;
}

TrigSeries TrigSeries::derivative() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back({t.k, t.a1 + t.k * t.b0, t.k * t.b1, t.b1 - t.k * t.a0, -t.k * t.a1});
  }
  return TrigSeries(std::move(out));
}

TrigSeries operator+(const TrigSeries& x, const TrigSeries& y) {
  auto terms = x.terms_;
  terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
  return TrigSeries(std::move(terms));
}

TrigSeries operator*(double s, const TrigSeries& x) {
  auto terms = x.terms_;
  for (auto& t : terms) {
    t.a0 *= s;
    t.a1 *= s;
    t.b0 *= s;
    t.b1 *= s;
  }
  return TrigSeries(std::move(terms));
}

AngularTriple build_ALH(double lambda, double c1, double c2, double c3, double c4) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("angular triple needs lambda >= 0");
  AngularTriple out;
  out.lambda = lambda;
  out.c = {c1, c2, c3, c4};
  using Term = TrigSeries::Term;
  if (lambda == 1.0) {
    out.a = TrigSeries({{2, c1, 0, c2, 0}});
    out.h = TrigSeries::constant(c3);
  } else if (lambda == 0.0) {
    out.a = TrigSeries({Term{1, c3, 0.5 * c1, c4, -0.5 * c2}});
    out.h = TrigSeries({{1, c1, 0, -c2, 0}});
  } else {
    const double km = lambda - 1, kp = lambda + 1;
    const double f = (lambda - 1) / (4 * lambda);
    out.h = TrigSeries({{km, c1, 0, c2, 0}});
    out.a = TrigSeries({{kp, c3, 0, c4, 0}, {km, f * c2, 0, -f * c1, 0}});
  }
  out.l = (1.0 / (lambda + 1)) * (out.h + (-1.0) * out.a.derivative());
  return out;
}

std::pair<ScalarFn, ScalarFn> recover_v1v2(ScalarFn a, ScalarFn l) {
  ScalarFn v1 = [a, l](double t) { return a(t) * std::cos(t) + l(t) * std::sin(t); };
  ScalarFn v2 = [a, l](double t) { return a(t) * std::sin(t) - l(t) * std::cos(t); };
  return {std::move(v1), std::move(v2)};
}

std::pair<ScalarFn, ScalarFn> angular_AL(ScalarFn v1, ScalarFn v2) {
  ScalarFn a = [v1, v2](double t) { return std::cos(t) * v1(t) + std::sin(t) * v2(t); };
  ScalarFn l = [v1, v2](double t) { return std::sin(t) * v1(t) - std::cos(t) * v2(t); };
  return {std::move(a), std::move(l)};
}

double compatibility_residual(double lambda, double c1, double c2, double c3, double c4, double theta) {
  const double c2t = std::cos(2 * theta), s2t = std::sin(2 * theta);
  if (lambda == 0.0) {
    const double cc = 0.5 * ((c1 * c1 - c2 * c2) * theta - c1 * c2) + c1 * c3 + c2 * c4;
    const double ss = c1 * c2 * theta - c1 * c4 + c2 * c3 + 0.25 * (c1 * c1 - c2 * c2);
    return cc * c2t - ss * s2t;
  }
  if (lambda == 1.0) return 0.0;
  if (lambda == 2.0) {
    return (c1 * c3 + c2 * c4 - 0.25 * c1 * c2) * c2t + (c1 * c4 - c2 * c3 + 0.125 * (c1 * c1 - c2 * c2)) * s2t;
  }
  const double k = (2 * lambda - 2) * theta;
  return (c1 * c3 + c2 * c4) * c2t + (c1 * c4 - c2 * c3) * s2t -
         (c1 * c2 * std::cos(k) + 0.5 * (c2 * c2 - c1 * c1) * std::sin(k)) / (2 * lambda);
}

std::array<double, 2> vorticity_pair_residual(const AngularTriple& t, double theta) {
  const TrigSeries dh = t.h.derivative();
  const TrigSeries d2h = dh.derivative();
  const double km = t.lambda - 1;
  return {km * t.h(theta) * t.a(theta) - dh(theta) * t.l(theta), d2h(theta) + km * km * t.h(theta)};
}

double AngularPower::operator()(double t) const {
  const double b = base == Base::Cos ? std::cos(t) : std::sin(t);
  return c * std::pow(b, exponent);
}

double AngularPower::derivative(double t) const {
  if (exponent == 0) return 0.0;
  const double cs = std::cos(t), sn = std::sin(t);
  // d/dt cos^n = -n cos^(n-1) sin,  d/dt sin^n = n sin^(n-1) cos
  if (base == Base::Cos) return -c * exponent * std::pow(cs, exponent - 1) * sn;
  return c * exponent * std::pow(sn, exponent - 1) * cs;
}

AngularPower cosine_order_solution(int order, double c) {
  if (order != 1 && order != 2) throw std::invalid_argument("cosine-power solution has order 1 or 2");
  return {AngularPower::Base::Cos, order, c};
}

AngularPower sine_power_solution(int a, double c) {
  if (a < 0 || a > 2) throw std::invalid_argument("sine-power solution supports exponents 0, 1, 2");
  return {AngularPower::Base::Sin, a, c};
}

AngularPower cosine_power_solution(int d, double c) {
  if (d < 0 || d > 2) throw std::invalid_argument("cosine-power solution supports exponents 0, 1, 2");
  return {AngularPower::Base::Cos, d, c};
}

std::array<RadialJet3, 3> radial_vorticity_ode_basis() {
  RadialJet3 lin{[](double r) { return std::array<double, 4>{r, 1.0, 0.0, 0.0}; }};
  RadialJet3 rlog{[](double r) {
    return std::array<double, 4>{r * std::log(r), std::log(r) + 1.0, 1.0 / r, -1.0 / (r * r)};
  }};
  RadialJet3 inv{[](double r) {
    return std::array<double, 4>{1.0 / r, -1.0 / (r * r), 2.0 / (r * r * r), -6.0 / (r * r * r * r)};
  }};
  return {lin, rlog, inv};
}

double radial_vorticity_ode_residual(const RadialJet3& f, double r) {
  const auto j = f.eval(r);
  return r * r * r * j[3] + 2 * r * r * j[2] - r * j[1] + j[0];
}

}  // namespace nsexact
