// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nsexact/classifier.hpp"
#include "nsexact/errors.hpp"
#include "nsexact/euler_system.hpp"
#include "nsexact/families.hpp"
#include "nsexact/liouville.hpp"
#include "nsexact/reduction.hpp"
#include "nsexact/verifier.hpp"
#include "test_support.hpp"

using namespace nsexact;
using namespace nsexact::testing;

namespace {

// Pinned tolerances.
constexpr double kCatalogRelTol = 1e-9;
constexpr double kOrderRatioLo = 3.5, kOrderRatioHi = 4.5;
constexpr double kEulerRelTol = 1e-10;
constexpr double kVietaTol = 1e-12;
constexpr double kSlopeTol = 0.05;
constexpr double kBlowupRelTol = 0.02;
constexpr double kEnvelopeRelTol = 0.01;
constexpr double kPressureAbsTol = 1e-6;
constexpr double kConstantsRelTol = 1e-6;
constexpr double kDifferenceTol = 1e-8;
constexpr double kCriticalTol = 1e-11;
constexpr double kCoeffTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome catalog_correctness() {
  Rng rng(1001);
  double worst = 0;
  for (Family f : kAllFamilies)
    for (int set = 0; set < 100; ++set) {
      ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng);
      if (!admissible(s, d)) return {false, "generated inadmissible member"};
      for (int k = 0; k < 1000; ++k) {
        auto r = analytic_residual(s, random_interior(d, rng));
        worst = std::max({worst, r.div_rel(), r.momentum_rel(), r.vort_rel()});
      }
    }
  return {worst <= kCatalogRelTol, fmt("max relative residual %.2e over 7x100x1000 points", worst)};
}

Outcome oracle_independence() {
  Rng rng(1002);
  GridSpec g;
  g.domain = ConeDomain::sector(0, kPi);
  g.theta_margin = 0.1;
  g.n_r = 5;
  g.n_theta = 8;
  const std::vector<double> hs{1e-2, 5e-3, 2.5e-3};
  std::vector<FlowSolution> cases{RotLog{0, 1, 0}, RotLog{1, -1, 0}, PowerMode{0.5, 1, 0, 0}, PowerMode{1.5, 1, 0.5, 0},
                                  PowerMode{3.7, -0.4, 1, 0}};
  for (int k = 0; k < 5; ++k) {
    cases.push_back(RotLog{uniform(rng, -2, 2), nonzero(rng, 0.3, 2), uniform(rng, -2, 2)});
    cases.push_back(PowerMode{random_power(rng, false), nonzero(rng, 0.3, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)});
  }
  double lo = 1e300, hi = 0;
  int checked = 0;
  for (const auto& s : cases) {
    auto rep = convergence_order(s, g, hs);
    for (const auto* c : {&rep.div, &rep.momentum, &rep.vort}) {
      if (c->at_floor) continue;
      for (std::size_t i = 0; i + 1 < c->gaps.size(); ++i) {
        double ratio = c->gaps[i] / c->gaps[i + 1];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        ++checked;
      }
    }
    if (rep.momentum.at_floor) return {false, "momentum gap at rounding floor for a non-polynomial field"};
  }
  bool ok = checked > 0 && lo >= kOrderRatioLo && hi <= kOrderRatioHi;
  return {ok, fmt("gap ratios in [%.3f, ", lo) + fmt("%.3f]", hi) + " over " + std::to_string(checked) + " halvings"};
}

Outcome euler_solver() {
  Rng rng(1003);
  double worst = 0, vieta = 0;
  for (int kind = 0; kind < 5; ++kind)
    for (int n = 0; n < 100; ++n) {
      EulerSystem s{uniform(rng, -2, 2), nonzero(rng, 0.1, 2), uniform(rng, -2, 2), uniform(rng, -2, 2),
                    uniform(rng, -2, 2), uniform(rng, -2, 2)};
      switch (static_cast<EulerCase>(kind)) {
        case EulerCase::B0Equal: s.b = 0; s.d = s.a; break;
        case EulerCase::B0Distinct: s.b = 0; if (std::abs(s.d - s.a) < 0.1) s.d = s.a + 0.5; break;
        case EulerCase::RealDistinct: s.c = std::abs(s.c) * (s.b > 0 ? 1 : -1) + 0.05 * (s.b > 0 ? 1 : -1); break;
        case EulerCase::RealDouble: s.c = -(s.a - s.d) * (s.a - s.d) / (4 * s.b); break;
        case EulerCase::Complex: s.c = -(s.a - s.d) * (s.a - s.d) / (4 * s.b) - (s.b > 0 ? 1 : -1) * uniform(rng, 0.1, 2); break;
      }
      auto p = solve(s);
      if (p.info().kind != static_cast<EulerCase>(kind))
        return {false, std::string("generator produced the wrong case for ") + std::string(euler_case_name(static_cast<EulerCase>(kind)))};
      for (double r : {0.5, 1.0, 2.0}) {
        auto res = ode_residual(p, s, r);
        auto f = p.phi(r), df = p.dphi(r);
        double s1 = std::abs(r * df[0]) + std::abs(s.a * f[0]) + std::abs(s.b * f[1]);
        double s2 = std::abs(r * df[1]) + std::abs(s.c * f[0]) + std::abs(s.d * f[1]);
        worst = std::max({worst, std::abs(res[0]) / std::max(s1, 1e-300), std::abs(res[1]) / std::max(s2, 1e-300)});
      }
      if (p.info().kind == EulerCase::RealDistinct) {
        double m = p.info().roots[0], q = p.info().roots[1];
        vieta = std::max({vieta, std::abs(m + q - (s.a + s.d)), std::abs(m * q - (s.a * s.d - s.b * s.c))});
      }
    }
  bool ok = worst <= kEulerRelTol && vieta <= kVietaTol;
  return {ok, fmt("max relative ODE residual %.2e, ", worst) + fmt("Vieta error %.2e", vieta)};
}

Outcome constraint_necessity() {
  Rng rng(1004);
  const std::vector<double> nus{1e-3, 1e-2, 1e-1};
  double worst = 0;
  for (int n = 0; n < 20; ++n) {
    Quadratic base = quadratic_from_c1c2(nonzero(rng, 0.2, 1), nonzero(rng, 0.2, 1), uniform(rng, -1, 1));
    // Alternate between perturbing C3 and C4.
    std::vector<PolarPoint> pts;
    for (int k = 0; k < 50; ++k) pts.push_back(random_interior(ConeDomain::full_plane(), rng, 0.5, 2));
    std::vector<double> lx, ly;
    for (double nu : nus) {
      Quadratic q = base;
      (n % 2 ? q.c3 : q.c4) += nu;
      try {
        make_quadratic(q.c1, q.c2, q.c3, q.c4, q.c5);
        return {false, "make_quadratic accepted a violated constant set"};
      } catch (const ConstraintViolation&) {
      }
      double m = 0;
      for (auto pt : pts) m = std::max(m, analytic_residual(q, pt).momentum.norm());
      lx.push_back(std::log(nu));
      ly.push_back(std::log(m));
    }
    worst = std::max(worst, std::abs(ls_slope(lx, ly) - 1));
  }
  return {worst <= kSlopeTol, fmt("max |slope - 1| = %.3e, all violated sets rejected", worst)};
}

Outcome blowup_law() {
  Rng rng(1005);
  std::vector<double> radii;
  for (int k = 5; k <= 40; ++k) radii.push_back(std::ldexp(1.0, -k));
  double worst = 0;
  for (int n = 0; n < 10; ++n) {
    RotLog s{uniform(rng, -2, 2), nonzero(rng, 0.5, 3), 0};
    auto b = blowup_profile(s, radii);
    if (b.bounded) return {false, "unbounded instance reported bounded"};
    worst = std::max(worst, std::abs(b.slope - std::abs(s.c2)) / std::abs(s.c2));
  }
  for (int n = 0; n < 3; ++n)
    if (!blowup_profile(RotLog{nonzero(rng, 0.5, 3), 0, 0}, radii).bounded) return {false, "C2 = 0 not reported bounded"};
  return {worst <= kBlowupRelTol, fmt("max relative slope error %.3e over 10 instances; C2=0 bounded", worst)};
}

Outcome holder_envelope() {
  Rng rng(1006);
  std::vector<double> radii;
  for (int k = 1; k <= 40; ++k) radii.push_back(std::ldexp(1.0, -k));
  double worst = 0;
  for (double gamma : {0.5, 0.9, 0.99})
    for (int n = 0; n < 5; ++n) {
      ConeDomain d = random_sector(rng);
      RotLog s{uniform(rng, -2, 2), nonzero(rng, 0.3, 2), 0};
      auto h = holder_check(s, d, gamma, radii);
      for (std::size_t i = 0; i < radii.size(); ++i) {
        double r = radii[i];
        double env = std::pow(r, 1 - gamma) * std::abs(s.c1 + s.c2 * std::log(r));
        if (env < 1e-12) continue;
        worst = std::max(worst, std::abs(h.ratio[i] - env) / env);
      }
    }
  return {worst <= kEnvelopeRelTol, fmt("max relative deviation from r^(1-g)|C1+C2 ln r| = %.2e", worst)};
}

double segment_clearance(Vec2 a, Vec2 b) {
  Vec2 d = b - a;
  double t = std::clamp(-dot(a, d) / std::max(dot(d, d), 1e-300), 0.0, 1.0);
  return (a + t * d).norm();
}

Outcome pressure_recovery() {
  Rng rng(1007);
  double worst = 0, ratio_lo = 1e300, ratio_hi = 0;
  int ratios = 0;
  for (Family f : kAllFamilies)
    for (int pair = 0; pair < 20;) {
      ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng, 1.0);
      PolarPoint a = random_interior(d, rng, 0.5, 1.25, 0.1), b = random_interior(d, rng, 0.5, 1.25, 0.1);
      Vec2 xa = to_cartesian(a), xb = to_cartesian(b);
      if ((xb - xa).norm() > 2 || segment_clearance(xa, xb) < 0.3) continue;
      double want, got;
      try {
        got = recover_pressure(s, d, a, b, 4096);
      } catch (const OutOfDomain&) {
        continue;
      }
      ++pair;
      want = pressure(s, b);
      worst = std::max(worst, std::abs(got - want));
      double e1 = std::abs(recover_pressure(s, d, a, b, 64) - want);
      double e2 = std::abs(recover_pressure(s, d, a, b, 128) - want);
      if (e1 > 1e-9) {
        ratio_lo = std::min(ratio_lo, e1 / e2);
        ratio_hi = std::max(ratio_hi, e1 / e2);
        ++ratios;
      }
    }
  bool ok = worst <= kPressureAbsTol && ratios > 0 && ratio_lo >= kOrderRatioLo && ratio_hi <= kOrderRatioHi;
  return {ok, fmt("max abs error %.2e at 4096 steps; ", worst) + fmt("error ratio 64->128 in [%.3f, ", ratio_lo) +
                  fmt("%.3f]", ratio_hi)};
}

Family canonical_family(const FlowSolution& s) {
  if (auto* q = std::get_if<RotLog>(&s); q && q->c2 == 0) return Family::Linear;
  return family_of(s);
}

double constants_error(const FlowSolution& want, const FlowSolution& got) {
  auto a = constants_of(want), b = constants_of(got);
  if (a.size() != b.size()) return INFINITY;
  double scale = 0, err = 0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
  return scale > 0 ? err / scale : err;
}

Outcome classifier_round_trip() {
  Rng rng(1008);
  std::vector<double> radii;
  for (int i = 0; i < 10; ++i) radii.push_back(0.5 * std::pow(4.0, i / 9.0));
  int hits = 0, scaled_hits = 0;
  double worst = 0;
  for (int n = 0; n < 100; ++n) {
    Family f = kAllFamilies[std::uniform_int_distribution<std::size_t>(0, kAllFamilies.size() - 1)(rng)];
    ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
    FlowSolution s = random_member(f, d, rng);
    auto th = sample_angles(d, 24);
    auto r = classify(sample_field(s, radii, th), d);
    Family want = canonical_family(s);
    if (r.classified() && r.family() == want) {
      ++hits;
      if (want == f) worst = std::max(worst, constants_error(s, *r.solution));
    }
    bool scaled_ok = true;
    for (double sigma : {0.5, 2.0}) {
      auto rs = classify(sample_field(scale_solution(s, sigma), radii, th), d);
      scaled_ok = scaled_ok && rs.classified() && rs.family() == want;
    }
    scaled_hits += scaled_ok;
  }
  bool ok = hits == 100 && scaled_hits == 100 && worst <= kConstantsRelTol;
  return {ok, "tags " + std::to_string(hits) + "/100, scaled " + std::to_string(scaled_hits) + "/100, " +
                  fmt("max constants error %.2e", worst)};
}

Outcome liouville_sweeps() {
  Rng rng(1009);
  int members = 0, full = 0;
  double worst = 0;
  for (Family f : kAllFamilies)
    for (int n = 0; n < 200; ++n) {
      ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng);
      auto v = liouville_verdict(s, d);
      ++members;
      if (!v.implication_holds()) return {false, std::string("counterexample verdict for ") + std::string(family_name(f))};
      if (!d.is_full_plane()) continue;
      ++full;
      if (!v.polynomial_degree) return {false, std::string("full-plane member without a degree: ") + std::string(family_name(f))};
      Vec2 x = to_cartesian(random_interior(d, rng, 0.5, 1.5));
      Vec2 dir = to_cartesian({1, uniform(rng, 0, kTwoPi)});
      worst = std::max(worst, forward_difference(s, x, dir, 0.1, *v.polynomial_degree + 1));
    }
  return {worst <= kDifferenceTol, std::to_string(members) + " members, " + std::to_string(full) +
                                       fmt(" full-plane; max (deg+1)-th difference %.2e", worst)};
}

Differentiable power_fn(double k) {
  return {[k](double r) { return std::pow(r, k); }, [k](double r) { return k == 0 ? 0.0 : k * std::pow(r, k - 1); }};
}

Outcome reduction_identities() {
  Rng rng(1010);
  double crit = 0, coeff = 0;
  for (int n = 0; n < 100; ++n) {
    double c1 = nonzero(rng, 0.2, 2), c2 = nonzero(rng, 0.2, 2);
    GeneralAnsatz sx{constant_fn(c1), {[c2](double t) { return c2 * std::cos(t); }, [c2](double t) { return -c2 * std::sin(t); }},
                     constant_fn(1), power_fn(1)};
    GeneralAnsatz sy{{[c1](double t) { return c1 * std::sin(t); }, [c1](double t) { return c1 * std::cos(t); }},
                     constant_fn(c2), power_fn(1), constant_fn(1)};
    auto d = ConeDomain::full_plane();
    for (auto* g : {&sx, &sy}) {
      RadialCoeffs rc{};
      bool have = false;
      for (auto [t1, t2] : probe_angle_pairs(d)) {
        try {
          rc = derive_radial_system(*g, t1, t2, std::vector<double>{0.5, 1, 2});
          have = true;
          break;
        } catch (const DegenerateAngles&) {
        }
      }
      if (!have) return {false, "no well-conditioned probe pair for a shear ansatz"};
      double r = uniform(rng, 0.25, 2);
      double t = uniform(rng, 0.05, kPi / 2 - 0.05) + kPi / 2 * std::uniform_int_distribution<int>(0, 3)(rng);
      crit = std::max(crit, std::abs(critical_identity_residual(*g, rc, r, t)));
      double a = g == &sy ? 1 : 0, dd = g == &sy ? 0 : 1;
      coeff = std::max({coeff, std::abs(rc.a - a), std::abs(rc.b), std::abs(rc.c), std::abs(rc.d - dd)});
    }
  }
  // Planted sin^a / cos^d inputs with matching radial powers.
  for (auto [a, dd] : {std::pair{1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}}) {
    auto s = sine_power_solution(a, nonzero(rng, 0.3, 2));
    auto c = cosine_power_solution(dd, nonzero(rng, 0.3, 2));
    GeneralAnsatz g{{[s](double t) { return s(t); }, [s](double t) { return s.derivative(t); }},
                    {[c](double t) { return c(t); }, [c](double t) { return c.derivative(t); }}, power_fn(a), power_fn(dd)};
    auto rc = derive_radial_system(g, 0.5, 1.2, std::vector<double>{0.5, 1, 2});
    coeff = std::max({coeff, std::abs(rc.a - a), std::abs(rc.b), std::abs(rc.c), std::abs(rc.d - dd)});
  }
  bool ok = crit <= kCriticalTol && coeff <= kCoeffTol;
  return {ok, fmt("max critical identity residual %.2e, ", crit) + fmt("max coefficient error %.2e", coeff)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"catalog correctness", catalog_correctness},
      {"oracle independence (second-order finite differences)", oracle_independence},
      {"equidimensional solver", euler_solver},
      {"quadratic constraint necessity", constraint_necessity},
      {"gradient blow-up law", blowup_law},
      {"Holder envelope", holder_envelope},
      {"pressure recovery", pressure_recovery},
      {"classifier round trip", classifier_round_trip},
      {"Liouville sweeps", liouville_sweeps},
      {"reduction identities", reduction_identities},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] criterion %zu: %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
