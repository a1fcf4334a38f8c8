// SPDX-License-Identifier: Apache-2.0

#include "nsexact/classifier.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nsexact/angular.hpp"
#include "nsexact/errors.hpp"
#include "nsexact/reduction.hpp"

namespace nsexact {

namespace {

// Best-conditioned radial system over the candidate probe pairs.
RadialCoeffs best_radial_system(const GeneralAnsatz& g, const ConeDomain& d, std::span<const double> radii) {
  std::optional<RadialCoeffs> best;
  double worst_det = 0;
  for (auto [t1, t2] : probe_angle_pairs(d)) {
    try {
      RadialCoeffs rc = derive_radial_system(g, t1, t2, radii);
      if (!best || rc.conditioning > best->conditioning) best = rc;
    } catch (const DegenerateAngles& e) {
      worst_det = std::max(worst_det, e.conditioning());
    }
  }
  if (!best) throw DegenerateAngles(worst_det);
  return *best;
}

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kSnapTol = 1e-6;
constexpr double kTiny = std::numeric_limits<double>::min();

double rms(std::span<const double> v) {
  if (v.empty()) return 0;
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s / static_cast<double>(v.size()));
}

double rms(const VectorXd& v) { return v.size() ? v.norm() / std::sqrt(static_cast<double>(v.size())) : 0.0; }
double rms(const MatrixXd& m) { return m.size() ? m.norm() / std::sqrt(static_cast<double>(m.size())) : 0.0; }

bool is_zero(double rms_f, double rms_other) { return rms_f <= kZeroRelTol * rms_other + kZeroAbsTol; }

std::span<const double> as_span(const VectorXd& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

struct Separation {
  bool zero = false;
  VectorXd radial;
  VectorXd angular;
  double sigma_ratio = 0;
};

Separation separate(const MatrixXd& m, double other_rms, double rank_tol, int component) {
  Separation out;
  if (is_zero(rms(m), other_rms)) {
    out.zero = true;
    return out;
  }
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  out.sigma_ratio = sv.size() > 1 ? sv(1) / sv(0) : 0.0;
  if (out.sigma_ratio > rank_tol) {
    std::ostringstream msg;
    msg << "component u" << component << " is not separated: sigma2/sigma1 = " << out.sigma_ratio;
    throw DegenerateSamples(msg.str());
  }
  double nt = std::sqrt(static_cast<double>(m.cols()));
  out.angular = svd.matrixV().col(0) * nt;
  out.radial = svd.matrixU().col(0) * (sv(0) / nt);
  Eigen::Index k;
  out.angular.cwiseAbs().maxCoeff(&k);
  if (out.angular(k) < 0) {
    out.angular = -out.angular;
    out.radial = -out.radial;
  }
  return out;
}

using BasisFn = std::function<Vec2(double r, double t)>;

struct BasisFit {
  std::vector<double> coef;
  double residual = std::numeric_limits<double>::infinity();
};

BasisFit fit_basis(const FieldSamples& fs, const std::vector<BasisFn>& basis) {
  const std::size_t nr = fs.radii.size(), nt = fs.thetas.size();
  const Eigen::Index rows = static_cast<Eigen::Index>(2 * nr * nt);
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  MatrixXd a(rows, cols);
  VectorXd y(rows);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nt; ++j) {
      auto k = static_cast<Eigen::Index>(fs.index(i, j));
      for (Eigen::Index m = 0; m < cols; ++m) {
        Vec2 b = basis[m](fs.radii[i], fs.thetas[j]);
        a(2 * k, m) = b.x;
        a(2 * k + 1, m) = b.y;
      }
      y(2 * k) = fs.u1[k];
      y(2 * k + 1) = fs.u2[k];
    }
  // Column scaling keeps r^lambda bases with large lambda well conditioned.
  VectorXd scale(cols);
  for (Eigen::Index m = 0; m < cols; ++m) {
    double n = a.col(m).norm();
    scale(m) = n > 0 ? n : 1.0;
    a.col(m) /= scale(m);
  }
  VectorXd c = a.completeOrthogonalDecomposition().solve(y);
  double ynorm = y.norm();
  double rnorm = (a * c - y).norm();
  BasisFit out;
  out.residual = ynorm > 0 ? rnorm / ynorm : (rnorm == 0 ? 0.0 : std::numeric_limits<double>::infinity());
  for (Eigen::Index m = 0; m < cols; ++m) out.coef.push_back(c(m) / scale(m));
  return out;
}

double px(double r, double t) { return r * std::cos(t); }
double py(double r, double t) { return r * std::sin(t); }

struct Candidate {
  std::optional<FlowSolution> solution;
  double residual = std::numeric_limits<double>::infinity();
  std::string message;
};

Candidate fit_constant(const FieldSamples& fs) {
  auto f = fit_basis(fs, {[](double, double) { return Vec2{1, 0}; }, [](double, double) { return Vec2{0, 1}; }});
  return {Constant{f.coef[0], f.coef[1], 0}, f.residual, {}};
}

Candidate fit_linear(const FieldSamples& fs) {
  auto f = fit_basis(fs, {[](double r, double t) { return Vec2{px(r, t), -py(r, t)}; },
                          [](double r, double t) { return Vec2{py(r, t), 0}; },
                          [](double r, double t) { return Vec2{0, px(r, t)}; }});
  return {Linear{f.coef[0], f.coef[1], f.coef[2], 0}, f.residual, {}};
}

Candidate fit_quadratic(const FieldSamples& fs) {
  auto f = fit_basis(fs, {[](double r, double t) {
                            double x = px(r, t), y = py(r, t);
                            return Vec2{2 * x * y, -3 * x * x - y * y};
                          },
                          [](double r, double t) {
                            double x = px(r, t), y = py(r, t);
                            return Vec2{x * x + 3 * y * y, -2 * x * y};
                          },
                          [](double r, double t) {
                            double x = px(r, t), y = py(r, t);
                            return Vec2{x * x - y * y, -2 * x * y};
                          },
                          [](double r, double t) {
                            double x = px(r, t), y = py(r, t);
                            return Vec2{2 * x * y, x * x - y * y};
                          }});
  Quadratic q{f.coef[0], f.coef[1], f.coef[2], f.coef[3], 0};
  Candidate c{q, f.residual, {}};
  auto res = quadratic_residuals(q);
  double mag = 0;
  for (double v : f.coef) mag = std::max(mag, v * v);
  if (std::max(std::abs(res[0]), std::abs(res[1])) > 1e-8 * mag) {
    std::ostringstream msg;
    msg << "quadratic constraints violated: residuals (" << res[0] << ", " << res[1] << ")";
    c.solution.reset();
    c.message = msg.str();
  }
  return c;
}

Candidate fit_power_mode(const FieldSamples& fs, double lambda) {
  auto f = fit_basis(fs, {[lambda](double r, double t) {
                            double rl = std::pow(r, lambda);
                            return Vec2{rl * std::cos(lambda * t), -rl * std::sin(lambda * t)};
                          },
                          [lambda](double r, double t) {
                            double rl = std::pow(r, lambda);
                            return Vec2{rl * std::sin(lambda * t), rl * std::cos(lambda * t)};
                          }});
  return {PowerMode{lambda, f.coef[0], f.coef[1], 0}, f.residual, {}};
}

Candidate fit_rotlog(const FieldSamples& fs) {
  auto f = fit_basis(fs, {[](double r, double t) { return Vec2{-py(r, t), px(r, t)}; },
                          [](double r, double t) {
                            double l = std::log(r);
                            return Vec2{-l * py(r, t), l * px(r, t)};
                          }});
  return {RotLog{f.coef[0], f.coef[1], 0}, f.residual, {}};
}

Candidate fit_shear_x(const FieldSamples& fs) {
  auto f = fit_basis(fs, {[](double, double) { return Vec2{1, 0}; },
                          [](double r, double t) { return Vec2{0, px(r, t)}; }});
  return {ShearX{f.coef[0], f.coef[1], 0}, f.residual, {}};
}

Candidate fit_shear_y(const FieldSamples& fs) {
  auto f = fit_basis(fs, {[](double r, double t) { return Vec2{py(r, t), 0}; },
                          [](double, double) { return Vec2{0, 1}; }});
  return {ShearY{f.coef[0], f.coef[1], 0}, f.residual, {}};
}

FlowSolution with_pressure_constant(FlowSolution s, double c) {
  std::visit(
      [c](auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Linear>)
          f.c4 = c;
        else if constexpr (std::is_same_v<T, Quadratic>)
          f.c5 = c;
        else
          f.c3 = c;
      },
      s);
  return s;
}

// Second-order differences on the (possibly non-uniform) polar grid.
double divergence_estimate(const FieldSamples& fs) {
  const std::size_t nr = fs.radii.size(), nt = fs.thetas.size();
  auto d3 = [](double xm, double x0, double xp, double fm, double f0, double fp) {
    double h1 = x0 - xm, h2 = xp - x0;
    return -h2 / (h1 * (h1 + h2)) * fm + (h2 - h1) / (h1 * h2) * f0 + h1 / (h2 * (h1 + h2)) * fp;
  };
  auto ur = [&](std::size_t i, std::size_t j) {
    double t = fs.thetas[j];
    auto k = fs.index(i, j);
    return std::cos(t) * fs.u1[k] + std::sin(t) * fs.u2[k];
  };
  auto ut = [&](std::size_t i, std::size_t j) {
    double t = fs.thetas[j];
    auto k = fs.index(i, j);
    return -std::sin(t) * fs.u1[k] + std::cos(t) * fs.u2[k];
  };
  double worst = 0, scale = 0;
  for (std::size_t i = 1; i + 1 < nr; ++i)
    for (std::size_t j = 1; j + 1 < nt; ++j) {
      double r = fs.radii[i];
      double a = d3(fs.radii[i - 1], r, fs.radii[i + 1], ur(i - 1, j), ur(i, j), ur(i + 1, j));
      double b = ur(i, j) / r;
      double c = d3(fs.thetas[j - 1], fs.thetas[j], fs.thetas[j + 1], ut(i, j - 1), ut(i, j), ut(i, j + 1)) / r;
      worst = std::max(worst, std::abs(a + b + c));
      scale = std::max({scale, std::abs(a) + std::abs(b) + std::abs(c), std::hypot(ur(i, j), ut(i, j)) / r});
    }
  return scale > 0 ? worst / scale : 0.0;
}

std::vector<double> angular_profile(const FieldSamples& fs, const std::vector<double>& comp, const VectorXd& phi) {
  std::vector<double> v(fs.thetas.size());
  double pp = phi.squaredNorm();
  for (std::size_t j = 0; j < fs.thetas.size(); ++j) {
    double s = 0;
    for (std::size_t i = 0; i < fs.radii.size(); ++i) s += phi(i) * comp[fs.index(i, j)];
    v[j] = s / pp;
  }
  return v;
}

// Fits the sampled (A, L) to the general angular solution and evaluates
// its compatibility constraint.
double alh_compatibility(const FieldSamples& fs, double lambda) {
  const std::size_t nt = fs.thetas.size();
  VectorXd rl(fs.radii.size());
  for (std::size_t i = 0; i < fs.radii.size(); ++i) rl(i) = std::pow(fs.radii[i], lambda);
  auto v1 = angular_profile(fs, fs.u1, rl);
  auto v2 = angular_profile(fs, fs.u2, rl);
  MatrixXd m(2 * nt, 4);
  VectorXd y(2 * nt);
  std::array<AngularTriple, 4> basis;
  for (int k = 0; k < 4; ++k) {
    std::array<double, 4> e{};
    e[k] = 1;
    basis[k] = build_ALH(lambda, e[0], e[1], e[2], e[3]);
  }
  for (std::size_t j = 0; j < nt; ++j) {
    double t = fs.thetas[j];
    y(2 * j) = std::cos(t) * v1[j] + std::sin(t) * v2[j];
    y(2 * j + 1) = std::sin(t) * v1[j] - std::cos(t) * v2[j];
    for (int k = 0; k < 4; ++k) {
      m(2 * j, k) = basis[k].a(t);
      m(2 * j + 1, k) = basis[k].l(t);
    }
  }
  VectorXd c = m.completeOrthogonalDecomposition().solve(y);
  double mag = std::max(c.squaredNorm(), kTiny);
  double worst = 0;
  for (double t : fs.thetas) worst = std::max(worst, std::abs(compatibility_residual(lambda, c(0), c(1), c(2), c(3), t)));
  return worst / mag;
}

std::optional<int> snap(double x) {
  double k = std::round(x);
  if (std::abs(x - k) <= kSnapTol) return static_cast<int>(k);
  return std::nullopt;
}

}  // namespace

void FieldSamples::validate() const {
  if (radii.size() < 8) throw DegenerateSamples("need at least 8 radii");
  if (thetas.size() < 16) throw DegenerateSamples("need at least 16 angles");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0)) throw DegenerateSamples("radii must be positive");
    if (i && !(radii[i] > radii[i - 1])) throw DegenerateSamples("radii must increase");
  }
  for (std::size_t j = 1; j < thetas.size(); ++j)
    if (!(thetas[j] > thetas[j - 1])) throw DegenerateSamples("angles must increase");
  if (radii.back() / radii.front() < 4.0) throw DegenerateSamples("radii must span a ratio of at least 4");
  std::size_t n = radii.size() * thetas.size();
  if (u1.size() != n || u2.size() != n || (p && p->size() != n))
    throw DegenerateSamples("sample arrays do not match the grid");
}

FieldSamples sample_field(const FlowSolution& s, std::span<const double> radii, std::span<const double> thetas) {
  FieldSamples fs;
  fs.radii.assign(radii.begin(), radii.end());
  fs.thetas.assign(thetas.begin(), thetas.end());
  fs.p.emplace();
  for (double r : radii)
    for (double t : thetas) {
      Vec2 u = velocity(s, {r, t});
      fs.u1.push_back(u.x);
      fs.u2.push_back(u.y);
      fs.p->push_back(pressure(s, {r, t}));
    }
  return fs;
}

ProportionalityFit proportionality_fit(std::span<const double> f, std::span<const double> g, double threshold) {
  if (f.size() != g.size()) throw std::invalid_argument("proportionality_fit: sample counts differ");
  double rf = rms(f), rg = rms(g);
  bool fz = is_zero(rf, rg), gz = is_zero(rg, rf);
  if (fz && gz) return {PairKind::IdenticallyZeroPair, 0, 0};
  if (gz) return {PairKind::Independent, 0, 1};
  if (fz) return {PairKind::Proportional, 0, 0};
  double fg = 0, gg = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    fg += f[i] * g[i];
    gg += g[i] * g[i];
  }
  double lambda = fg / gg;
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (f[i] - lambda * g[i]) * (f[i] - lambda * g[i]);
  double res = std::sqrt(s / static_cast<double>(f.size())) / rf;
  return {res <= threshold ? PairKind::Proportional : PairKind::Independent, lambda, res};
}

LambdaFit fit_lambda(std::span<const double> radii, std::span<const double> phi, double threshold) {
  if (radii.size() != phi.size() || radii.size() < 3) throw std::invalid_argument("fit_lambda: need >= 3 samples");
  double rp = rms(phi);
  if (rp == 0.0) throw std::invalid_argument("fit_lambda: phi vanishes on the window");
  const std::size_t n = radii.size();
  LambdaFit out;
  constexpr double inf = std::numeric_limits<double>::infinity();

  bool one_sign = true;
  for (double v : phi)
    if (v == 0.0 || std::signbit(v) != std::signbit(phi[0])) one_sign = false;
  out.power_residual = inf;
  if (one_sign) {
    std::vector<double> lr(n), lp(n);
    for (std::size_t i = 0; i < n; ++i) {
      lr[i] = std::log(radii[i]);
      lp[i] = std::log(std::abs(phi[i]));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mx += lr[i];
      my += lp[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sxx += (lr[i] - mx) * (lr[i] - mx);
      sxy += (lr[i] - mx) * (lp[i] - my);
    }
    out.lambda = sxy / sxx;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double b = std::pow(radii[i], out.lambda);
      num += phi[i] * b;
      den += b * b;
    }
    out.c = num / den;
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = phi[i] - out.c * std::pow(radii[i], out.lambda);
      s += e * e;
    }
    out.power_residual = std::sqrt(s / n) / rp;
  }

  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd y(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, 0) = radii[i];
    a(i, 1) = radii[i] * std::log(radii[i]);
    y(i) = phi[i];
  }
  Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
  out.log_c1 = c(0);
  out.log_c2 = c(1);
  out.loglinear_residual = rms(Eigen::VectorXd(a * c - y)) / rp;

  if (out.power_residual <= threshold)
    out.model = RadialModel::Power;
  else if (out.loglinear_residual <= threshold)
    out.model = RadialModel::LogLinear;
  else
    out.model = RadialModel::Unclassifiable;
  return out;
}

std::optional<Family> ClassificationResult::family() const {
  if (!solution) return std::nullopt;
  return family_of(*solution);
}

ClassificationResult classify(const FieldSamples& fs, const ConeDomain& d, const ClassifyOptions& opt) {
  fs.validate();
  const auto nr = static_cast<Eigen::Index>(fs.radii.size());
  const auto nt = static_cast<Eigen::Index>(fs.thetas.size());
  MatrixXd u1(nr, nt), u2(nr, nt);
  for (Eigen::Index i = 0; i < nr; ++i)
    for (Eigen::Index j = 0; j < nt; ++j) {
      u1(i, j) = fs.u1[fs.index(i, j)];
      u2(i, j) = fs.u2[fs.index(i, j)];
    }

  ClassificationResult res;
  auto& diag = res.diagnostics;
  diag.lambda = std::numeric_limits<double>::quiet_NaN();
  diag.divergence_residual = divergence_estimate(fs);

  std::vector<Candidate> tried;
  std::optional<std::size_t> accepted;
  auto accept = [&](Candidate c) -> bool {
    if (!c.solution) {
      tried.push_back(std::move(c));
      return false;
    }
    if (c.residual > opt.threshold) {
      std::ostringstream msg;
      msg << family_name(family_of(*c.solution)) << " fit residual " << c.residual;
      c.message = msg.str();
      tried.push_back(std::move(c));
      return false;
    }
    if (auto a = admissible(*c.solution, d); !a) {
      c.message = std::string(family_name(family_of(*c.solution))) + " inadmissible: " + a.reason;
      tried.push_back(std::move(c));
      return false;
    }
    tried.push_back(std::move(c));
    accepted = tried.size() - 1;
    return true;
  };

  double r1 = rms(u1), r2 = rms(u2);
  if (is_zero(r1, r2) && is_zero(r2, r1)) {
    diag.path = "zero";
    accept(fit_constant(fs));
  } else {
    Separation s1 = separate(u1, r2, opt.rank_tol, 1);
    Separation s2 = separate(u2, r1, opt.rank_tol, 2);
    diag.sigma_ratio = {s1.sigma_ratio, s2.sigma_ratio};

    bool shared = true;
    VectorXd phi;
    if (s1.zero) {
      phi = s2.radial;
    } else if (s2.zero) {
      phi = s1.radial;
    } else {
      auto pf = proportionality_fit(as_span(s1.radial), as_span(s2.radial), opt.threshold);
      shared = pf.kind != PairKind::Independent;
      phi = s1.radial;
    }

    bool done = false;
    if (shared) {
      diag.path = "single";
      auto v1 = angular_profile(fs, fs.u1, phi);
      auto v2 = angular_profile(fs, fs.u2, phi);
      std::vector<double> a(fs.thetas.size()), l(fs.thetas.size());
      for (std::size_t j = 0; j < fs.thetas.size(); ++j) {
        double t = fs.thetas[j];
        a[j] = std::cos(t) * v1[j] + std::sin(t) * v2[j];
        l[j] = std::sin(t) * v1[j] - std::cos(t) * v2[j];
      }
      bool a_zero = is_zero(rms(a), rms(l));
      LambdaFit lf = fit_lambda(fs.radii, as_span(phi), opt.threshold);
      diag.lambda_model = lf.model == RadialModel::Power       ? "power"
                          : lf.model == RadialModel::LogLinear ? "loglinear"
                                                               : "none";
      if (lf.model == RadialModel::Power) diag.lambda = lf.lambda;

      if (a_zero) {
        if (lf.model == RadialModel::Power && snap(lf.lambda) == 1) {
          done = accept(fit_linear(fs));
        } else if (lf.model == RadialModel::LogLinear) {
          Candidate c = fit_rotlog(fs);
          done = accept(c);
        } else {
          tried.push_back({std::nullopt, std::numeric_limits<double>::infinity(),
                           "A vanishes but the radial factor is not r (C1 + C2 ln r)"});
        }
      } else if (lf.model == RadialModel::Power) {
        auto k = snap(lf.lambda);
        double lambda = k ? *k : lf.lambda;
        if (lambda >= 0) diag.compatibility = alh_compatibility(fs, lambda);
        if (k && *k == 0)
          done = accept(fit_constant(fs));
        else if (k && *k == 1)
          done = accept(fit_linear(fs));
        else if (k && *k == 2)
          done = accept(fit_quadratic(fs));
        else if (lambda > 0)
          done = accept(fit_power_mode(fs, lambda));
        if (!done && k && *k > 2) done = accept(fit_power_mode(fs, lf.lambda));
        if (!done && lambda <= 0)
          tried.push_back({std::nullopt, std::numeric_limits<double>::infinity(), "negative radial exponent"});
      } else {
        tried.push_back({std::nullopt, std::numeric_limits<double>::infinity(),
                         "radial factor fits neither c r^lambda nor r (c1 + c2 ln r)"});
      }
    }

    if (!done && !s1.zero && !s2.zero && !shared) {
      diag.path = "two";
      LambdaFit f1 = fit_lambda(fs.radii, as_span(s1.radial), opt.threshold);
      LambdaFit f2 = fit_lambda(fs.radii, as_span(s2.radial), opt.threshold);
      auto a = f1.model == RadialModel::Power ? snap(f1.lambda) : std::nullopt;
      auto dd = f2.model == RadialModel::Power ? snap(f2.lambda) : std::nullopt;
      if (!a || !dd || *a < 0 || *a > 2 || *dd < 0 || *dd > 2) {
        tried.push_back({std::nullopt, std::numeric_limits<double>::infinity(),
                         "radial factors are not integer powers r^a, r^d with a, d <= 2"});
      } else {
        AngularPower va = sine_power_solution(*a, 1.0);
        AngularPower vd = cosine_power_solution(*dd, 1.0);
        int ea = *a, ed = *dd;
        GeneralAnsatz g{{[va](double t) { return va(t); }, [va](double t) { return va.derivative(t); }},
                        {[vd](double t) { return vd(t); }, [vd](double t) { return vd.derivative(t); }},
                        {[ea](double r) { return std::pow(r, ea); },
                         [ea](double r) { return ea == 0 ? 0.0 : ea * std::pow(r, ea - 1); }},
                        {[ed](double r) { return std::pow(r, ed); },
                         [ed](double r) { return ed == 0 ? 0.0 : ed * std::pow(r, ed - 1); }}};
        try {
          RadialCoeffs rc = best_radial_system(g, d, fs.radii);
          diag.conditioning = rc.conditioning;
          for (double r : fs.radii)
            for (double t : fs.thetas) {
              try {
                diag.critical_identity = std::max(diag.critical_identity, std::abs(critical_identity_residual(g, rc, r, t)));
              } catch (const AxisSingularity&) {
              }
            }
          bool diagonal = std::abs(rc.b) <= 1e-9 && std::abs(rc.c) <= 1e-9;
          if (diagonal && std::abs(rc.a - 1) <= 1e-9 && std::abs(rc.d) <= 1e-9)
            done = accept(fit_shear_y(fs));
          else if (diagonal && std::abs(rc.a) <= 1e-9 && std::abs(rc.d - 1) <= 1e-9)
            done = accept(fit_shear_x(fs));
          else {
            std::ostringstream msg;
            msg << "radial system (a, b, c, d) = (" << rc.a << ", " << rc.b << ", " << rc.c << ", " << rc.d
                << ") matches no shear family";
            tried.push_back({std::nullopt, std::numeric_limits<double>::infinity(), msg.str()});
          }
        } catch (const DegenerateAngles& e) {
          diag.conditioning = e.conditioning();
          tried.push_back({std::nullopt, std::numeric_limits<double>::infinity(), e.what()});
        }
      }
    } else if (!done && !shared) {
      diag.path = "two";
    }
  }

  // Report the best attempt even when nothing was accepted.
  const Candidate* best = accepted ? &tried[*accepted] : nullptr;
  for (const auto& c : tried)
    if (!best || c.residual < best->residual) best = &c;
  res.fit_residual = best ? best->residual : std::numeric_limits<double>::infinity();
  for (const auto& c : tried)
    if (!c.message.empty()) diag.message += (diag.message.empty() ? "" : "; ") + c.message;

  if (accepted) {
    res.fit_residual = tried[*accepted].residual;
    FlowSolution s = *tried[*accepted].solution;
    if (fs.p) {
      double sum = 0;
      std::size_t n = fs.p->size();
      std::vector<double> model(n);
      for (std::size_t i = 0; i < fs.radii.size(); ++i)
        for (std::size_t j = 0; j < fs.thetas.size(); ++j)
          model[fs.index(i, j)] = pressure(s, {fs.radii[i], fs.thetas[j]});
      for (std::size_t k = 0; k < n; ++k) sum += (*fs.p)[k] - model[k];
      double cp = sum / static_cast<double>(n);
      s = with_pressure_constant(s, cp);
      double err = 0;
      for (std::size_t k = 0; k < n; ++k) err += std::pow((*fs.p)[k] - model[k] - cp, 2);
      diag.pressure_residual = std::sqrt(err / n) / std::max(rms(*fs.p), kTiny);
    }
    res.solution = s;
  }
  return res;
}

}  // namespace nsexact
