// SPDX-License-Identifier: Apache-2.0

#include "nsexact/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "nsexact/errors.hpp"

namespace nsexact {

namespace {

double safe_ratio(double num, double scale) {
  if (num == 0.0) return 0.0;
  return num / std::max(scale, std::numeric_limits<double>::min());
}

struct Accumulator {
  double max = 0, sum_sq = 0, max_rel = 0;
  void add(double v, double rel) {
    v = std::abs(v);
    max = std::max(max, v);
    sum_sq += v * v;
    max_rel = std::max(max_rel, rel);
  }
  ComponentStats finish(std::size_t n) const {
    return {max, n ? std::sqrt(sum_sq / static_cast<double>(n)) : 0.0, max_rel};
  }
};

struct ReportBuilder {
  Accumulator div, mom, mom_x, mom_y, vort;
  std::size_t n = 0;
  void add(const ResidualTriple& t) {
    div.add(t.div, t.div_rel());
    mom.add(t.momentum.norm(), t.momentum_rel());
    mom_x.add(t.momentum.x, safe_ratio(std::abs(t.momentum.x), t.momentum_scale));
    mom_y.add(t.momentum.y, safe_ratio(std::abs(t.momentum.y), t.momentum_scale));
    vort.add(t.vort, t.vort_rel());
    ++n;
  }
  ResidualReport finish(double h) const {
    ResidualReport r;
    r.div = div.finish(n);
    r.momentum = mom.finish(n);
    r.momentum_x = mom_x.finish(n);
    r.momentum_y = mom_y.finish(n);
    r.vort = vort.finish(n);
    r.h = h;
    r.points = n;
    return r;
  }
};

double angular_clearance(const ConeDomain& d, double theta) {
  if (d.is_full_plane()) return kPi;
  double t = normalize_angle(theta);
  return std::min(t - d.alpha(), d.beta() - t);
}

}  // namespace

void GridSpec::validate() const {
  if (!(r_min > 0.0) || !(r_max >= r_min) || !std::isfinite(r_max))
    throw std::invalid_argument("grid: need 0 < rmin <= rmax");
  if (n_r < 2 || n_theta < 2) throw std::invalid_argument("grid: nr and ntheta must be >= 2");
  if (theta_margin < 0.0) throw std::invalid_argument("grid: negative theta margin");
  if (!domain.is_full_plane() && 2.0 * theta_margin >= domain.opening())
    throw std::invalid_argument("grid: theta margin leaves no room inside the sector");
}

std::vector<double> GridSpec::radii() const {
  validate();
  std::vector<double> out(n_r);
  double ratio = std::log(r_max / r_min);
  for (int i = 0; i < n_r; ++i) out[i] = r_min * std::exp(ratio * i / (n_r - 1));
  out.back() = r_max;
  return out;
}

std::vector<double> GridSpec::thetas() const {
  validate();
  std::vector<double> out(n_theta);
  if (domain.is_full_plane()) {
    for (int j = 0; j < n_theta; ++j) out[j] = (j + 0.5) * kTwoPi / n_theta;
  } else {
    double lo = domain.alpha() + theta_margin;
    double span = domain.opening() - 2.0 * theta_margin;
    for (int j = 0; j < n_theta; ++j) out[j] = lo + (j + 0.5) * span / n_theta;
  }
  return out;
}

std::vector<PolarPoint> GridSpec::points() const {
  auto rs = radii();
  auto ts = thetas();
  std::vector<PolarPoint> out;
  out.reserve(rs.size() * ts.size());
  for (double r : rs)
    for (double t : ts) out.push_back({r, t});
  return out;
}

double ResidualTriple::div_rel() const { return safe_ratio(std::abs(div), div_scale); }
double ResidualTriple::momentum_rel() const { return safe_ratio(momentum.norm(), momentum_scale); }
double ResidualTriple::vort_rel() const { return safe_ratio(std::abs(vort), vort_scale); }

ResidualTriple analytic_residual(const FlowSolution& s, PolarPoint p) {
  FlowJet j = evaluate(s, p);
  ResidualTriple t;
  t.div = j.grad_u.trace();
  Vec2 adv = j.grad_u.apply(j.u);
  t.momentum = (-1.0 * j.lap_u) + adv + j.grad_p;
  t.vort = j.lap_w - dot(j.u, j.grad_w);
  t.div_scale = std::abs(j.grad_u(0, 0)) + std::abs(j.grad_u(1, 1));
  t.momentum_scale = j.lap_u.norm() + j.u.norm() * j.grad_u.frobenius() + j.grad_p.norm();
  const double gu = j.grad_u.frobenius();
  const double u_local = j.u.norm() + p.r * gu + p.r * p.r * j.lap_u.norm();
  t.vort_scale = std::abs(j.lap_w) + u_local * j.grad_w.norm() + gu * gu;
  return t;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
struct P2 {
  T x, y;
};

void check_stencil(Vec2 x, double h, const std::optional<ConeDomain>& domain) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_residual: h must be positive");
  if (!domain) return;
  // Nodes with |i| + |j| <= 2 cover every difference taken below.
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      if (std::abs(i) + std::abs(j) > 2) continue;
      Vec2 q{x.x + i * h, x.y + j * h};
      if (!contains(*domain, q)) {
        std::ostringstream msg;
        msg << "stencil node (" << q.x << ", " << q.y << ") with h=" << h << " leaves the domain";
        throw OutOfDomain(msg.str());
      }
    }
}

// Central differences in the working precision T; u(x, y) -> P2<T>, p(x, y) -> T.
template <class T, class UF, class PF>
ResidualTriple fd_stencil(const UF& u, const PF& p, Vec2 x, double h_in) {
  const T h = h_in;
  auto nx = [&](int i) { return T(x.x) + i * h; };
  auto ny = [&](int j) { return T(x.y) + j * h; };
  std::array<std::array<std::optional<P2<T>>, 5>, 5> cache;
  auto U = [&](int i, int j) -> P2<T> {
    auto& slot = cache[i + 2][j + 2];
    if (!slot) slot = u(nx(i), ny(j));
    return *slot;
  };
  auto W = [&](int i, int j) {
    return (U(i, j + 1).x - U(i, j - 1).x) / (2 * h) - (U(i + 1, j).y - U(i - 1, j).y) / (2 * h);
  };

  const P2<T> u0 = U(0, 0);
  const T g00 = (U(1, 0).x - U(-1, 0).x) / (2 * h), g01 = (U(0, 1).x - U(0, -1).x) / (2 * h);
  const T g10 = (U(1, 0).y - U(-1, 0).y) / (2 * h), g11 = (U(0, 1).y - U(0, -1).y) / (2 * h);
  const T lapx = (U(1, 0).x + U(-1, 0).x + U(0, 1).x + U(0, -1).x - 4 * u0.x) / (h * h);
  const T lapy = (U(1, 0).y + U(-1, 0).y + U(0, 1).y + U(0, -1).y - 4 * u0.y) / (h * h);
  const T gpx = (p(nx(1), ny(0)) - p(nx(-1), ny(0))) / (2 * h);
  const T gpy = (p(nx(0), ny(1)) - p(nx(0), ny(-1))) / (2 * h);

  const T w0 = W(0, 0);
  const T wxp = W(1, 0), wxm = W(-1, 0), wyp = W(0, 1), wym = W(0, -1);
  const T gwx = (wxp - wxm) / (2 * h), gwy = (wyp - wym) / (2 * h);
  const T lapw = (wxp + wxm + wyp + wym - 4 * w0) / (h * h);

  const Vec2 uu{double(u0.x), double(u0.y)}, lap{double(lapx), double(lapy)}, gp{double(gpx), double(gpy)},
      gw{double(gwx), double(gwy)};
  Mat2 g;
  g(0, 0) = double(g00);
  g(0, 1) = double(g01);
  g(1, 0) = double(g10);
  g(1, 1) = double(g11);

  ResidualTriple t;
  t.div = double(g00 + g11);
  t.momentum = {double(-lapx + g00 * u0.x + g01 * u0.y + gpx), double(-lapy + g10 * u0.x + g11 * u0.y + gpy)};
  t.vort = double(lapw - (u0.x * gwx + u0.y * gwy));
  t.div_scale = std::abs(g(0, 0)) + std::abs(g(1, 1));
  t.momentum_scale = lap.norm() + uu.norm() * g.frobenius() + gp.norm();
  const double r = x.norm(), gu = g.frobenius();
  const double u_local = uu.norm() + r * gu + r * r * lap.norm();
  t.vort_scale = std::abs(double(lapw)) + u_local * gw.norm() + gu * gu;
  return t;
}

using LD = long double;

// Cartesian velocity and pressure in extended precision, written out
// separately from the polar jets.
P2<LD> velocity_ld(const FlowSolution& s, LD x, LD y) {
  return std::visit(
      Overloaded{
          [](const Constant& c) { return P2<LD>{c.c1, c.c2}; },
          [&](const Linear& c) { return P2<LD>{c.c1 * x + c.c2 * y, c.c3 * x - c.c1 * y}; },
          [&](const Quadratic& c) {
            const LD q1 = c.c1, q2 = c.c2, q3 = c.c3, q4 = c.c4;
            return P2<LD>{(q2 + q3) * x * x + (3 * q2 - q3) * y * y + 2 * (q1 + q4) * x * y,
                          (q4 - 3 * q1) * x * x - (q1 + q4) * y * y - 2 * (q2 + q3) * x * y};
          },
          [&](const PowerMode& c) {
            LD t = std::atan2(y, x);
            if (t < 0) t += 2 * std::acos(LD(-1));
            const LD rl = std::pow(std::hypot(x, y), LD(c.lambda));
            const LD cl = std::cos(c.lambda * t), sl = std::sin(c.lambda * t);
            return P2<LD>{rl * (c.c1 * cl + c.c2 * sl), rl * (c.c2 * cl - c.c1 * sl)};
          },
          [&](const RotLog& c) {
            if (x == 0 && y == 0) throw OutOfDomain("stencil touches the corner");
            const LD l = c.c1 + LD(0.5) * c.c2 * std::log(x * x + y * y);
            return P2<LD>{-l * y, l * x};
          },
          [&](const ShearX& c) { return P2<LD>{c.c1, c.c2 * x}; },
          [&](const ShearY& c) { return P2<LD>{c.c1 * y, c.c2}; },
      },
      s);
}

LD pressure_ld(const FlowSolution& s, LD x, LD y) {
  const LD rho = x * x + y * y;
  return std::visit(
      Overloaded{
          [](const Constant& c) { return LD(c.c3); },
          [&](const Linear& c) { return -LD(0.5) * (LD(c.c1) * c.c1 + LD(c.c2) * c.c3) * rho + c.c4; },
          [&](const Quadratic& c) {
            const LD big = LD(c.c1) * c.c1 + LD(c.c2) * c.c2 - LD(c.c3) * c.c3 - LD(c.c4) * c.c4;
            return LD(0.5) * big * rho * rho + 8 * c.c2 * x - 8 * c.c1 * y + c.c5;
          },
          [&](const PowerMode& c) {
            return -LD(0.5) * (LD(c.c1) * c.c1 + LD(c.c2) * c.c2) * std::pow(rho, LD(c.lambda)) + c.c3;
          },
          [&](const RotLog& c) {
            LD t = std::atan2(y, x);
            if (t < 0) t += 2 * std::acos(LD(-1));
            const LD lr = LD(0.5) * std::log(rho), a = c.c1, b = c.c2;
            return LD(0.5) * rho * (b * b * lr * lr + (2 * a * b - b * b) * lr + a * a - a * b + LD(0.5) * b * b) +
                   2 * b * t + c.c3;
          },
          [&](const ShearX& c) { return -LD(c.c1) * c.c2 * y + c.c3; },
          [&](const ShearY& c) { return -LD(c.c1) * c.c2 * x + c.c3; },
      },
      s);
}

}  // namespace

ResidualTriple fd_residual(const VectorField& u, const ScalarField& p, Vec2 x, double h,
                           const std::optional<ConeDomain>& domain) {
  check_stencil(x, h, domain);
  auto uf = [&](double a, double b) {
    Vec2 v = u({a, b});
    return P2<double>{v.x, v.y};
  };
  auto pf = [&](double a, double b) { return p({a, b}); };
  return fd_stencil<double>(uf, pf, x, h);
}

ResidualTriple fd_residual(const FlowSolution& s, Vec2 point, double h, const std::optional<ConeDomain>& domain) {
  check_stencil(point, h, domain);
  if (singular_at_origin(s) && std::abs(point.x) <= 2 * h && std::abs(point.y) <= 2 * h) {
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        if (std::abs(i) + std::abs(j) <= 2 && point.x + i * h == 0.0 && point.y + j * h == 0.0)
          throw OutOfDomain("stencil touches the corner");
  }
  auto uf = [&](LD a, LD b) { return velocity_ld(s, a, b); };
  auto pf = [&](LD a, LD b) { return pressure_ld(s, a, b); };
  return fd_stencil<LD>(uf, pf, point, h);
}

double default_step(const ConeDomain& d, PolarPoint p) {
  double h = 1e-3 * std::max(p.r, 1.0);
  double clear = p.r;
  if (!d.is_full_plane()) {
    double ang = angular_clearance(d, p.theta);
    clear = std::min(clear, ang >= kPi / 2 ? p.r : p.r * std::sin(ang));
  }
  // Stencil reaches 2h; keep another 2h of clearance.
  return std::min(h, clear / 4.0);
}

ResidualReport analytic_residual_report(const FlowSolution& s, const GridSpec& g) {
  ReportBuilder b;
  for (const auto& p : g.points()) b.add(analytic_residual(s, p));
  return b.finish(0.0);
}

ResidualReport fd_residual_report(const FlowSolution& s, const GridSpec& g, double h) {
  ReportBuilder b;
  double h_max = 0;
  for (const auto& p : g.points()) {
    double hp = h > 0 ? h : default_step(g.domain, p);
    h_max = std::max(h_max, hp);
    b.add(fd_residual(s, to_cartesian(p), hp, g.domain));
  }
  return b.finish(h_max);
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("ls_slope: need matching samples");
  double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("ls_slope: degenerate abscissae");
  return sxy / sxx;
}

ConvergenceReport convergence_order(const FlowSolution& s, const GridSpec& g, std::span<const double> h_list) {
  if (h_list.size() < 3) throw std::invalid_argument("convergence_order: need at least three steps");
  for (std::size_t i = 1; i < h_list.size(); ++i)
    if (!(h_list[i] < h_list[i - 1]) || !(h_list[i] > 0))
      throw std::invalid_argument("convergence_order: h_list must be positive and strictly decreasing");

  auto pts = g.points();
  std::vector<ResidualTriple> exact;
  exact.reserve(pts.size());
  double field = 0;
  for (const auto& p : pts) {
    exact.push_back(analytic_residual(s, p));
    double un = velocity(s, p).norm();
    field = std::max({field, un, un * un, std::abs(pressure(s, p))});
  }

  ConvergenceReport rep;
  rep.h.assign(h_list.begin(), h_list.end());
  std::array<ComponentOrder*, 3> comps = {&rep.div, &rep.momentum, &rep.vort};
  std::array<int, 3> deriv_order = {1, 2, 3};
  std::array<bool, 3> floor = {true, true, true};
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (double h : h_list) {
    std::array<double, 3> gap{};
    for (std::size_t k = 0; k < pts.size(); ++k) {
      ResidualTriple fd = fd_residual(s, to_cartesian(pts[k]), h, g.domain);
      gap[0] = std::max(gap[0], std::abs(fd.div - exact[k].div));
      gap[1] = std::max(gap[1], (fd.momentum - exact[k].momentum).norm());
      gap[2] = std::max(gap[2], std::abs(fd.vort - exact[k].vort));
    }
    for (int c = 0; c < 3; ++c) {
      comps[c]->gaps.push_back(gap[c]);
      double rounding = 1e3 * eps * std::max(field, 1.0) / std::pow(h, deriv_order[c]);
      if (gap[c] > rounding) floor[c] = false;
    }
  }

  std::vector<double> lh;
  for (double h : h_list) lh.push_back(std::log(h));
  for (int c = 0; c < 3; ++c) {
    comps[c]->at_floor = floor[c];
    if (floor[c]) {
      comps[c]->order = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    std::vector<double> lg;
    for (double v : comps[c]->gaps) lg.push_back(std::log(v));
    comps[c]->order = ls_slope(lh, lg);
  }
  return rep;
}

double recover_pressure(const FlowSolution& s, const ConeDomain& d, PolarPoint anchor, PolarPoint target,
                        int n_steps) {
  if (n_steps < 1) throw std::invalid_argument("recover_pressure: n_steps must be >= 1");
  Vec2 a = to_cartesian(anchor);
  Vec2 b = to_cartesian(target);
  Vec2 dx = b - a;
  bool singular = singular_at_origin(s);
  auto check = [&](Vec2 q) {
    bool inside = d.is_full_plane() ? true : contains(d, q);
    if (!inside || (singular && q.norm() == 0.0)) {
      std::ostringstream msg;
      msg << "integration path leaves the domain at (" << q.x << ", " << q.y << ")";
      throw OutOfDomain(msg.str());
    }
  };
  check(a);
  check(b);

  double p = pressure(s, anchor);
  double sum = 0;
  for (int k = 0; k < n_steps; ++k) {
    Vec2 q = a + ((k + 0.5) / n_steps) * dx;
    check(q);
    FlowJet j = evaluate(s, to_polar(q));
    Vec2 gp = j.lap_u - j.grad_u.apply(j.u);
    sum += dot(gp, dx);
  }
  return p + sum / n_steps;
}

std::vector<double> sample_angles(const ConeDomain& d, int n) {
  if (n < 1) throw std::invalid_argument("sample_angles: n must be >= 1");
  std::vector<double> out(n);
  if (d.is_full_plane()) {
    for (int j = 0; j < n; ++j) out[j] = j * kTwoPi / n;
  } else {
    for (int j = 0; j < n; ++j) out[j] = d.alpha() + (j + 0.5) * d.opening() / n;
  }
  return out;
}

namespace {

void check_radii(std::span<const double> radii) {
  if (radii.size() < 2) throw std::invalid_argument("need at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw std::invalid_argument("radii must lie in (0, 1)");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw std::invalid_argument("radii must decrease");
  }
}

}  // namespace

BlowupReport blowup_profile(const RotLog& s, std::span<const double> radii, int n_theta) {
  check_radii(radii);
  auto thetas = sample_angles(ConeDomain::full_plane(), n_theta);
  BlowupReport rep;
  rep.radii.assign(radii.begin(), radii.end());
  for (double r : radii) {
    double sup = 0;
    for (double t : thetas) sup = std::max(sup, velocity_gradient(s, {r, t}).operator_norm());
    rep.sup_grad.push_back(sup);
  }
  if (s.c2 == 0.0) {
    rep.bounded = true;
    rep.intercept = *std::max_element(rep.sup_grad.begin(), rep.sup_grad.end());
    rep.message = "no blow-up: gradient bounded";
    return rep;
  }
  // Fit where |C2 ln r| dominates C1 and the bounded part of the matrix;
  // fall back to the whole table when too few radii qualify.
  double onset = 2.0 * (std::abs(s.c1) + std::abs(s.c2)) / std::abs(s.c2);
  std::vector<double> lr, sup;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double l = std::abs(std::log(radii[i]));
    if (l >= onset) {
      lr.push_back(l);
      sup.push_back(rep.sup_grad[i]);
    }
  }
  if (lr.size() < 3) {
    lr.clear();
    for (double r : radii) lr.push_back(std::abs(std::log(r)));
    sup = rep.sup_grad;
  }
  rep.slope = ls_slope(lr, sup);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lr.size(); ++i) {
    mx += lr[i];
    my += sup[i];
  }
  rep.intercept = (my - rep.slope * mx) / static_cast<double>(lr.size());
  std::ostringstream msg;
  msg << "gradient blows up like " << rep.slope << " |ln r|";
  rep.message = msg.str();
  return rep;
}

CornerBehaviour corner_behaviour(const FlowSolution& s) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  struct V {
    CornerBehaviour operator()(const Constant& c) const { return {(c.c1 || c.c2) ? 0.0 : inf, false}; }
    CornerBehaviour operator()(const Linear& c) const { return {(c.c1 || c.c2 || c.c3) ? 1.0 : inf, false}; }
    CornerBehaviour operator()(const Quadratic& c) const {
      return {(c.c1 || c.c2 || c.c3 || c.c4) ? 2.0 : inf, false};
    }
    CornerBehaviour operator()(const PowerMode& c) const { return {(c.c1 || c.c2) ? c.lambda : inf, false}; }
    CornerBehaviour operator()(const RotLog& c) const {
      if (c.c2) return {1.0, true};
      return {c.c1 ? 1.0 : inf, false};
    }
    CornerBehaviour operator()(const ShearX& c) const {
      if (c.c1) return {0.0, false};
      return {c.c2 ? 1.0 : inf, false};
    }
    CornerBehaviour operator()(const ShearY& c) const {
      if (c.c2) return {0.0, false};
      return {c.c1 ? 1.0 : inf, false};
    }
  };
  return std::visit(V{}, s);
}

HolderReport holder_check(const FlowSolution& s, const ConeDomain& d, double gamma, std::span<const double> radii,
                          int n_theta) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("holder_check: gamma must lie in (0, 1)");
  check_radii(radii);
  auto thetas = sample_angles(d, n_theta);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  HolderReport rep;
  rep.gamma = gamma;
  rep.radii.assign(radii.begin(), radii.end());
  for (double r : radii) {
    double sup = 0;
    for (double t : thetas) sup = std::max(sup, velocity_at(s, {r, t}).u.norm());
    rep.ratio.push_back(sup / std::pow(r, gamma));

    double env = nan;
    if (auto* c = std::get_if<Constant>(&s)) env = std::hypot(c->c1, c->c2) * std::pow(r, -gamma);
    if (auto* c = std::get_if<PowerMode>(&s)) env = std::hypot(c->c1, c->c2) * std::pow(r, c->lambda - gamma);
    if (auto* c = std::get_if<RotLog>(&s)) env = std::pow(r, 1.0 - gamma) * std::abs(c->c1 + c->c2 * std::log(r));
    rep.envelope.push_back(env);
  }

  std::size_t n = rep.ratio.size();
  std::size_t tail = std::min<std::size_t>(3, n);
  rep.tail_decreasing = true;
  for (std::size_t i = n - tail + 1; i < n; ++i)
    if (!(rep.ratio[i] < rep.ratio[i - 1])) rep.tail_decreasing = false;

  CornerBehaviour cb = corner_behaviour(s);
  rep.limit_zero = cb.exponent > gamma;
  if (std::isinf(cb.exponent)) {
    rep.certificate_radius = std::numeric_limits<double>::infinity();
    rep.verdict = "zero field";
    return rep;
  }
  if (!rep.limit_zero) {
    rep.certificate_radius = 0;
    rep.verdict = "fails: ratio does not tend to 0 at the corner";
    return rep;
  }
  if (auto* c = std::get_if<RotLog>(&s); c && c->c2 != 0.0) {
    // r^(1-g) |C1 + C2 ln r| decreases toward the corner once -ln r > 1/(1-g) + C1/C2.
    double t = 1.0 / (1.0 - gamma) + c->c1 / c->c2;
    rep.certificate_radius = t > 0 ? std::exp(-t) : 1.0;
  } else {
    rep.certificate_radius = std::numeric_limits<double>::infinity();
  }
  std::ostringstream msg;
  msg << "decays to 0 at the corner (exponent " << cb.exponent - gamma << (cb.log_factor ? ", with log factor" : "")
      << "); monotone for r < " << rep.certificate_radius;
  rep.verdict = msg.str();
  return rep;
}

}  // namespace nsexact
