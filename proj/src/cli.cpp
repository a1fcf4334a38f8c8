// SPDX-License-Identifier: Apache-2.0

#include "nsexact/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>

#include "nsexact/classifier.hpp"
#include "nsexact/errors.hpp"
#include "nsexact/euler_system.hpp"
#include "nsexact/io.hpp"
#include "nsexact/liouville.hpp"
#include "nsexact/verifier.hpp"

namespace nsexact {

namespace {

class Report {
 public:
  void check(const std::string& name, double value, double threshold, bool pass) {
    nlohmann::json j;
    j["check"] = name;
    j["value"] = value;
    j["threshold"] = threshold;
    j["pass"] = pass;
    lines_.push_back(j.dump());
    all_pass_ = all_pass_ && pass;
  }
  bool all_pass() const { return all_pass_; }
  void write(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report '" + path + "'");
    for (const auto& l : lines_) out << l << "\n";
  }

 private:
  std::vector<std::string> lines_;
  bool all_pass_ = true;
};

struct DomainOpts {
  std::string kind;
  double alpha = 0, beta = kPi;
  ConeDomain resolve(const FieldSamples& fs) const {
    if (kind.empty()) return infer_domain(fs);
    if (kind == "fullplane") return ConeDomain::full_plane();
    return ConeDomain::sector(alpha, beta);
  }
};

void add_domain_opts(CLI::App* sub, DomainOpts& d) {
  sub->add_option("--domain", d.kind, "fullplane or sector (inferred from the angles when omitted)")
      ->check(CLI::IsMember({"fullplane", "sector"}));
  sub->add_option("--alpha", d.alpha, "sector start angle");
  sub->add_option("--beta", d.beta, "sector end angle");
}

std::vector<double> dyadic_radii(int kmin, int kmax) {
  if (kmin < 1 || kmax <= kmin) throw CLI::ValidationError("need 1 <= kmin < kmax");
  std::vector<double> r;
  for (int k = kmin; k <= kmax; ++k) r.push_back(std::ldexp(1.0, -k));
  return r;
}

PolarPoint parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("point must be r,theta");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("point must be r,theta");
  }
}

void print_solution(std::ostream& out, const FlowSolution& s) {
  out << "family: " << family_name(family_of(s)) << "\nconstants:";
  for (double c : constants_of(s)) out << " " << std::setprecision(17) << c;
  out << std::setprecision(6) << "\n";
}

int cmd_list(std::ostream& out) {
  out << "constant   c1 c2 c3        u = (c1, c2), p = c3; any domain\n"
         "linear     c1 c2 c3 c4     u = (c1 x + c2 y, c3 x - c1 y); any domain\n"
         "quadratic  c1 .. c5        homogeneous quadratic u, constrained constants; any domain\n"
         "powermode  lambda c1 c2 c3 u = r^lambda (...), irrotational; full plane needs integer lambda >= 3\n"
         "rotlog     c1 c2 c3        u = (c1 + c2 ln r)(-y, x); sectors only when c2 != 0\n"
         "shearx     c1 c2 c3        u = (c1, c2 x), p = -c1 c2 y + c3; any domain\n"
         "sheary     c1 c2 c3        u = (c1 y, c2), p = -c1 c2 x + c3; any domain\n";
  return kExitOk;
}

int cmd_sample(const std::string& config, const std::string& output, std::ostream& out, std::ostream& err) {
  RunConfig cfg = load_config(config);
  ExportSummary sum = export_grid(cfg.solution, cfg.grid, output);
  out << "wrote " << sum.rows << " rows to " << output << "\n";
  if (sum.nan_rows) err << "warning: " << sum.nan_rows << " rows contain nan\n";
  return kExitOk;
}

int verify_config(const RunConfig& cfg, double threshold, Report& rep, std::ostream& out) {
  ResidualReport a = analytic_residual_report(cfg.solution, cfg.grid);
  out << "family " << family_name(family_of(cfg.solution)) << ", " << a.points << " grid points\n";
  out << std::scientific << std::setprecision(3);
  out << "analytic  div max " << a.div.max << " rms " << a.div.rms << " rel " << a.div.max_rel << "\n";
  out << "analytic  mom max " << a.momentum.max << " rms " << a.momentum.rms << " rel " << a.momentum.max_rel << "\n";
  out << "analytic  vort max " << a.vort.max << " rms " << a.vort.rms << " rel " << a.vort.max_rel << "\n";
  try {
    ResidualReport f = fd_residual_report(cfg.solution, cfg.grid, 0.0);
    out << "fd (h<=" << f.h << ") div max " << f.div.max << ", mom max " << f.momentum.max << ", vort max "
        << f.vort.max << "\n";
  } catch (const OutOfDomain& e) {
    out << "fd oracle skipped: " << e.what() << "\n";
  }
  out << std::defaultfloat << std::setprecision(6);
  rep.check("div_max_rel", a.div.max_rel, threshold, a.div.max_rel <= threshold);
  rep.check("momentum_max_rel", a.momentum.max_rel, threshold, a.momentum.max_rel <= threshold);
  rep.check("vorticity_max_rel", a.vort.max_rel, threshold, a.vort.max_rel <= threshold);
  return rep.all_pass() ? kExitOk : kExitVerificationFailed;
}

double rel_rms(const std::vector<double>& data, const std::vector<double>& model) {
  double e = 0, s = 0;
  for (std::size_t k = 0; k < data.size(); ++k) {
    e += (data[k] - model[k]) * (data[k] - model[k]);
    s += data[k] * data[k];
  }
  if (std::isnan(e)) return std::numeric_limits<double>::infinity();
  if (s == 0) return e == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(e / s);
}

int verify_input(const std::string& input, const DomainOpts& dopt, double threshold, Report& rep, std::ostream& out) {
  GridTable t = read_grid_csv_file(input);
  FieldSamples fs = to_field_samples(t);
  ConeDomain d = dopt.resolve(fs);
  ClassifyOptions opt;
  opt.threshold = threshold;
  ClassificationResult c = classify(fs, d, opt);
  rep.check("fit_residual", c.fit_residual, threshold, c.classified());
  if (!c.classified()) {
    out << "no catalog member fits the field (residual " << c.fit_residual << "): " << c.diagnostics.message << "\n";
    return kExitVerificationFailed;
  }
  print_solution(out, *c.solution);
  std::vector<double> p_model(t.size()), w_model(t.size());
  double worst = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    PolarPoint q = to_polar({t.x[k], t.y[k]});
    p_model[k] = pressure(*c.solution, q);
    w_model[k] = vorticity(*c.solution, q);
    worst = std::max(worst, analytic_residual(*c.solution, q).momentum_rel());
  }
  double pr = rel_rms(t.p, p_model), wr = rel_rms(t.w, w_model);
  out << "fit residual " << c.fit_residual << ", pressure " << pr << ", vorticity " << wr << ", momentum " << worst
      << "\n";
  rep.check("pressure_residual", pr, threshold, pr <= threshold);
  rep.check("vorticity_residual", wr, threshold, wr <= threshold);
  rep.check("momentum_max_rel", worst, threshold, worst <= threshold);
  return rep.all_pass() ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(const std::string& input, const DomainOpts& dopt, double threshold, Report& rep, std::ostream& out) {
  FieldSamples fs = to_field_samples(read_grid_csv_file(input));
  ConeDomain d = dopt.resolve(fs);
  ClassifyOptions opt;
  opt.threshold = threshold;
  opt.rank_tol = std::max(opt.rank_tol, threshold);
  ClassificationResult c;
  try {
    c = classify(fs, d, opt);
  } catch (const DegenerateSamples& e) {
    out << "unclassifiable: " << e.what() << "\n";
    rep.check("fit_residual", std::numeric_limits<double>::infinity(), threshold, false);
    return kExitUnclassifiable;
  }
  const auto& g = c.diagnostics;
  out << "domain: " << (d.is_full_plane() ? "fullplane" : "sector") << "\npath: " << g.path
      << "\nlambda fit: " << g.lambda_model << " " << g.lambda << "\nfit residual: " << c.fit_residual
      << "\ndivergence diagnostic: " << g.divergence_residual << "\n";
  if (g.path == "two") out << "two-angle conditioning: " << g.conditioning << "\n";
  rep.check("fit_residual", c.fit_residual, threshold, c.classified());
  if (!c.classified()) {
    out << "unclassifiable: " << g.message << "\n";
    return kExitUnclassifiable;
  }
  print_solution(out, *c.solution);
  return kExitOk;
}

int cmd_blowup(const std::string& config, double c1, double c2, int kmin, int kmax, int ntheta, Report& rep,
               std::ostream& out) {
  RotLog s{c1, c2, 0};
  if (!config.empty()) {
    RunConfig cfg = load_config(config);
    auto* r = std::get_if<RotLog>(&cfg.solution);
    if (!r) throw CLI::ValidationError("blowup needs family=rotlog");
    s = *r;
  }
  BlowupReport b = blowup_profile(s, dyadic_radii(kmin, kmax), ntheta);
  out << "r,sup_grad\n" << std::setprecision(10);
  for (std::size_t i = 0; i < b.radii.size(); ++i) out << b.radii[i] << "," << b.sup_grad[i] << "\n";
  out << std::setprecision(6) << b.message << "\n";
  if (b.bounded) {
    rep.check("gradient_bounded", b.intercept, std::numeric_limits<double>::infinity(), true);
  } else {
    double target = std::abs(s.c2);
    out << "slope " << b.slope << " (|C2| = " << target << ")\n";
    rep.check("blowup_slope", b.slope, target, std::abs(b.slope - target) <= 0.02 * target);
  }
  return kExitOk;
}

int cmd_holder(const std::string& config, double gamma, int kmin, int kmax, int ntheta, Report& rep, std::ostream& out) {
  RunConfig cfg = load_config(config);
  HolderReport h = holder_check(cfg.solution, cfg.domain(), gamma, dyadic_radii(kmin, kmax), ntheta);
  out << "r,ratio,envelope\n" << std::setprecision(10);
  for (std::size_t i = 0; i < h.radii.size(); ++i) out << h.radii[i] << "," << h.ratio[i] << "," << h.envelope[i] << "\n";
  out << std::setprecision(6) << h.verdict << "\n";
  rep.check("holder_limit_zero", h.certificate_radius, gamma, h.limit_zero);
  return h.limit_zero ? kExitOk : kExitVerificationFailed;
}

int cmd_liouville(const std::string& config, Report& rep, std::ostream& out) {
  RunConfig cfg = load_config(config);
  LiouvilleVerdict v = liouville_verdict(cfg.solution, cfg.domain());
  GrowthExponent g = growth_exponent(cfg.solution);
  out << std::boolalpha << "growth exponent: " << g.sigma << (g.log_factor ? " (with log)" : "")
      << "\ngrowth_ok: " << v.growth_ok << "\nc1_closure_ok: " << v.c1_closure_ok << "\nis_constant: " << v.is_constant
      << "\npolynomial_degree: "
      << (v.polynomial_degree ? std::to_string(*v.polynomial_degree) : std::string("non-polynomial")) << "\n";
  rep.check("liouville_implication", v.implication_holds() ? 1.0 : 0.0, 1.0, v.implication_holds());
  return v.implication_holds() ? kExitOk : kExitVerificationFailed;
}

int cmd_euler(const EulerSystem& sys, const std::vector<double>& radii, Report& rep, std::ostream& out) {
  EulerRadialPair pair = solve(sys);
  const auto& info = pair.info();
  out << "case: " << euler_case_name(info.kind) << "\ndelta: " << info.delta << "\nroots: " << info.roots[0] << ", "
      << info.roots[1] << "\nlinearly dependent: " << std::boolalpha << pair.linearly_dependent() << "\n";
  out << "r,phi1,phi2,res1,res2\n" << std::setprecision(10);
  double worst = 0;
  for (double r : radii) {
    auto phi = pair.phi(r);
    auto res = ode_residual(pair, sys, r);
    auto dphi = pair.dphi(r);
    double scale = std::abs(r * dphi[0]) + std::abs(r * dphi[1]) + std::abs(phi[0]) + std::abs(phi[1]);
    double rel = scale > 0 ? std::max(std::abs(res[0]), std::abs(res[1])) / scale : 0.0;
    worst = std::max(worst, rel);
    out << r << "," << phi[0] << "," << phi[1] << "," << res[0] << "," << res[1] << "\n";
  }
  out << std::setprecision(6);
  rep.check("ode_residual_rel", worst, 1e-10, worst <= 1e-10);
  return worst <= 1e-10 ? kExitOk : kExitVerificationFailed;
}

int cmd_pressure(const std::string& config, const std::string& anchor, const std::string& target, int steps,
                 double tol, Report& rep, std::ostream& out) {
  RunConfig cfg = load_config(config);
  PolarPoint a = parse_point(anchor), b = parse_point(target);
  double rec = recover_pressure(cfg.solution, cfg.domain(), a, b, steps);
  double exact = pressure(cfg.solution, b);
  double errv = std::abs(rec - exact);
  out << std::setprecision(15) << "recovered p(target): " << rec << "\nclosed form:         " << exact
      << "\nabsolute error:      " << std::setprecision(3) << errv << "\n"
      << std::setprecision(6);
  rep.check("pressure_error", errv, tol, errv <= tol);
  return errv <= tol ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact separated-variable solutions of steady 2D Navier-Stokes: sampling, verification, classification"};
  app.require_subcommand(1);
  std::string report_path;

  auto* list = app.add_subcommand("list", "list the solution families");

  std::string config, output, input;
  auto* sample = app.add_subcommand("sample", "export a family on its grid as CSV");
  sample->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);
  sample->add_option("--output", output, "CSV path")->required();

  double verify_thr = -1;
  DomainOpts dopt;
  auto* verify = app.add_subcommand("verify", "check residuals of a configured family or a CSV field");
  auto* vc = verify->add_option("--config", config, "config file")->check(CLI::ExistingFile);
  auto* vi = verify->add_option("--input", input, "CSV field")->check(CLI::ExistingFile);
  vc->excludes(vi);
  verify->add_option("--threshold", verify_thr, "relative threshold (default 1e-9 analytic, 1e-8 for --input)");
  add_domain_opts(verify, dopt);

  double cls_thr = kFitThreshold;
  auto* cls = app.add_subcommand("classify", "recover family and constants from a CSV field");
  cls->add_option("--input", input, "CSV field")->required()->check(CLI::ExistingFile);
  cls->add_option("--threshold", cls_thr, "normalized fit residual to accept");
  add_domain_opts(cls, dopt);

  double c1 = 0, c2 = 1;
  int kmin = 5, kmax = 40, ntheta = kDefaultThetaSamples;
  auto* blow = app.add_subcommand("blowup", "gradient growth of the rotational-log family at the corner");
  blow->add_option("--config", config, "rotlog config (overrides --c1/--c2)")->check(CLI::ExistingFile);
  blow->add_option("--c1", c1, "C1");
  blow->add_option("--c2", c2, "C2");
  blow->add_option("--kmin", kmin, "first radius 2^-kmin");
  blow->add_option("--kmax", kmax, "last radius 2^-kmax");
  blow->add_option("--ntheta", ntheta, "angular samples")->check(CLI::PositiveNumber);

  double gamma = 0.5;
  int hk_min = 1, hk_max = 40;
  auto* hold = app.add_subcommand("holder", "decay of sup|u| / r^gamma toward the corner");
  hold->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);
  hold->add_option("--gamma", gamma, "exponent in (0, 1)")->required();
  hold->add_option("--kmin", hk_min, "first radius 2^-kmin");
  hold->add_option("--kmax", hk_max, "last radius 2^-kmax");
  hold->add_option("--ntheta", ntheta, "angular samples")->check(CLI::PositiveNumber);

  auto* liou = app.add_subcommand("liouville", "growth, corner regularity and polynomial degree verdict");
  liou->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);

  EulerSystem sys{0, 0, 0, 0, 1, 1};
  std::vector<double> radii = {0.5, 1.0, 2.0};
  auto* euler = app.add_subcommand("euler-solve", "closed-form solution of r phi' = M phi");
  euler->add_option("--a", sys.a)->required();
  euler->add_option("--b", sys.b)->required();
  euler->add_option("--c", sys.c)->required();
  euler->add_option("--d", sys.d)->required();
  euler->add_option("--c1", sys.c1, "first integration constant");
  euler->add_option("--c2", sys.c2, "second integration constant");
  euler->add_option("--r", radii, "evaluation radii")->check(CLI::PositiveNumber);

  std::string anchor, target;
  int steps = 4096;
  double ptol = 1e-6;
  auto* pres = app.add_subcommand("pressure-recover", "rebuild p along a segment from the momentum equation");
  pres->add_option("--config", config, "config file")->required()->check(CLI::ExistingFile);
  pres->add_option("--anchor", anchor, "r,theta")->required();
  pres->add_option("--target", target, "r,theta")->required();
  pres->add_option("--steps", steps, "midpoint panels")->check(CLI::PositiveNumber);
  pres->add_option("--tolerance", ptol, "absolute tolerance");

  for (auto* sub : {verify, cls, blow, hold, liou, euler, pres})
    sub->add_option("--report", report_path, "JSON-lines report path");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Report rep;
  int code = kExitOk;
  try {
    if (*list) {
      code = cmd_list(out);
    } else if (*sample) {
      code = cmd_sample(config, output, out, err);
    } else if (*verify) {
      if (config.empty() && input.empty()) {
        err << "error: verify needs --config or --input\n";
        return kExitUsage;
      }
      code = !config.empty() ? verify_config(load_config(config), verify_thr > 0 ? verify_thr : 1e-9, rep, out)
                             : verify_input(input, dopt, verify_thr > 0 ? verify_thr : kFitThreshold, rep, out);
    } else if (*cls) {
      code = cmd_classify(input, dopt, cls_thr, rep, out);
    } else if (*blow) {
      code = cmd_blowup(config, c1, c2, kmin, kmax, ntheta, rep, out);
    } else if (*hold) {
      code = cmd_holder(config, gamma, hk_min, hk_max, ntheta, rep, out);
    } else if (*liou) {
      code = cmd_liouville(config, rep, out);
    } else if (*euler) {
      code = cmd_euler(sys, radii, rep, out);
    } else if (*pres) {
      code = cmd_pressure(config, anchor, target, steps, ptol, rep, out);
    }
  } catch (const DegenerateSamples& e) {
    err << "error: " << e.what() << "\n";
    code = *verify ? kExitVerificationFailed : kExitUnclassifiable;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    rep.write(report_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace nsexact
