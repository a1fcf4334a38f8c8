// SPDX-License-Identifier: Apache-2.0

#include "nsexact/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nsexact/errors.hpp"

namespace nsexact {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s == "nan" || s == "-nan") return std::numeric_limits<double>::quiet_NaN();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::size_t constant_count(Family f) {
  switch (f) {
    case Family::Linear: return 4;
    case Family::Quadratic: return 5;
    default: return 3;
  }
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {"family", "lambda", "c1",   "c2",   "c3", "c4",
                                                "c5",     "domain", "alpha", "beta", "rmin", "rmax",
                                                "nr",     "ntheta"};
  return keys;
}

}  // namespace

bool operator==(const RunConfig& a, const RunConfig& b) {
  return family_of(a.solution) == family_of(b.solution) && constants_of(a.solution) == constants_of(b.solution) &&
         a.grid.domain == b.grid.domain && a.grid.r_min == b.grid.r_min && a.grid.r_max == b.grid.r_max &&
         a.grid.n_r == b.grid.n_r && a.grid.n_theta == b.grid.n_theta && a.grid.theta_margin == b.grid.theta_margin;
}

RunConfig parse_config(std::string_view text) {
  struct Entry {
    std::string value;
    int line;
  };
  std::map<std::string, Entry> kv;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ParseError(line_no, "unknown key '" + key + "'");
    if (kv.count(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    kv[key] = {value, line_no};
  }

  auto number = [&](const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    auto v = parse_double(it->second.value);
    if (!v || !std::isfinite(*v)) throw ParseError(it->second.line, "invalid number for '" + key + "'");
    return *v;
  };
  auto integer = [&](const std::string& key, int fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const std::string& s = it->second.value;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(it->second.line, "invalid integer for '" + key + "'");
    return v;
  };
  auto line_of = [&](const std::string& key) { return kv.count(key) ? kv.at(key).line : 0; };

  if (!kv.count("family")) throw ParseError(0, "missing key 'family'");
  auto fam = parse_family(kv["family"].value);
  if (!fam) throw ParseError(line_of("family"), "unknown family '" + kv["family"].value + "'");

  std::size_t nc = constant_count(*fam);
  for (std::size_t k = nc + 1; k <= 5; ++k) {
    std::string key = "c" + std::to_string(k);
    if (kv.count(key))
      throw ParseError(line_of(key), key + " is not a constant of family " + std::string(family_name(*fam)));
  }
  if (*fam != Family::PowerMode && kv.count("lambda"))
    throw ParseError(line_of("lambda"), "lambda only applies to family powermode");
  std::array<double, 5> c{};
  for (std::size_t k = 0; k < nc; ++k) c[k] = number("c" + std::to_string(k + 1), 0.0);

  RunConfig cfg;
  std::string dom = kv.count("domain") ? kv["domain"].value : "fullplane";
  if (dom == "fullplane") {
    for (const char* key : {"alpha", "beta"})
      if (kv.count(key)) throw ParseError(line_of(key), std::string(key) + " only applies to domain=sector");
    cfg.grid.domain = ConeDomain::full_plane();
  } else if (dom == "sector") {
    double alpha = number("alpha", 0.0), beta = number("beta", kPi);
    try {
      cfg.grid.domain = ConeDomain::sector(alpha, beta);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::max(line_of("alpha"), line_of("beta")), e.what());
    }
  } else {
    throw ParseError(line_of("domain"), "domain must be fullplane or sector");
  }

  cfg.grid.r_min = number("rmin", cfg.grid.r_min);
  cfg.grid.r_max = number("rmax", cfg.grid.r_max);
  cfg.grid.n_r = integer("nr", cfg.grid.n_r);
  cfg.grid.n_theta = integer("ntheta", cfg.grid.n_theta);
  try {
    cfg.grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::max({line_of("rmin"), line_of("rmax"), line_of("nr"), line_of("ntheta")}), e.what());
  }

  switch (*fam) {
    case Family::Constant: cfg.solution = Constant{c[0], c[1], c[2]}; break;
    case Family::Linear: cfg.solution = Linear{c[0], c[1], c[2], c[3]}; break;
    case Family::Quadratic: cfg.solution = make_quadratic(c[0], c[1], c[2], c[3], c[4]); break;
    case Family::PowerMode: cfg.solution = PowerMode{number("lambda", 3.0), c[0], c[1], c[2]}; break;
    case Family::RotLog: cfg.solution = RotLog{c[0], c[1], c[2]}; break;
    case Family::ShearX: cfg.solution = ShearX{c[0], c[1], c[2]}; break;
    case Family::ShearY: cfg.solution = ShearY{c[0], c[1], c[2]}; break;
  }
  if (auto a = admissible(cfg.solution, cfg.grid.domain); !a) throw Inadmissible(a.reason);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string render_config(const RunConfig& cfg) {
  std::ostringstream os;
  Family f = family_of(cfg.solution);
  os << "family=" << family_name(f) << "\n";
  auto c = constants_of(cfg.solution);
  std::size_t k0 = 0;
  if (f == Family::PowerMode) {
    os << "lambda=" << fmt17(c[0]) << "\n";
    k0 = 1;
  }
  for (std::size_t k = k0; k < c.size(); ++k) os << "c" << (k - k0 + 1) << "=" << fmt17(c[k]) << "\n";
  if (cfg.grid.domain.is_full_plane()) {
    os << "domain=fullplane\n";
  } else {
    os << "domain=sector\nalpha=" << fmt17(cfg.grid.domain.alpha()) << "\nbeta=" << fmt17(cfg.grid.domain.beta())
       << "\n";
  }
  os << "rmin=" << fmt17(cfg.grid.r_min) << "\nrmax=" << fmt17(cfg.grid.r_max) << "\nnr=" << cfg.grid.n_r
     << "\nntheta=" << cfg.grid.n_theta << "\n";
  return os.str();
}

ExportSummary export_grid(const FlowSolution& s, const GridSpec& g, std::ostream& out) {
  ExportSummary sum;
  out << kCsvHeader << "\n";
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& p : g.points()) {
    Vec2 x = to_cartesian(p);
    double u1 = nan, u2 = nan, pr = nan, w = nan;
    bool bad = false;
    try {
      Vec2 u = velocity_at(s, p).u;
      u1 = u.x;
      u2 = u.y;
    } catch (const SingularPoint&) {
      bad = true;
    }
    try {
      pr = pressure(s, p);
    } catch (const SingularPoint&) {
      bad = true;
    }
    try {
      w = vorticity(s, p);
    } catch (const SingularPoint&) {
      bad = true;
    }
    out << fmt17(x.x) << ',' << fmt17(x.y) << ',' << fmt17(u1) << ',' << fmt17(u2) << ',' << fmt17(pr) << ','
        << fmt17(w) << '\n';
    ++sum.rows;
    if (bad) ++sum.nan_rows;
  }
  if (!out) throw std::runtime_error("write failed");
  return sum;
}

ExportSummary export_grid(const FlowSolution& s, const GridSpec& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return export_grid(s, g, out);
}

GridTable read_grid_csv(std::istream& in) {
  GridTable t;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = trim(line);
    if (l.empty()) continue;
    if (!header) {
      if (l != kCsvHeader) throw ParseError(line_no, std::string("expected header '") + kCsvHeader + "'");
      header = true;
      continue;
    }
    std::array<double, 6> v{};
    std::size_t start = 0;
    for (int k = 0; k < 6; ++k) {
      std::size_t comma = l.find(',', start);
      if ((k < 5) == (comma == std::string_view::npos)) throw ParseError(line_no, "expected 6 comma-separated fields");
      std::string_view field = l.substr(start, k < 5 ? comma - start : std::string_view::npos);
      auto d = parse_double(field);
      if (!d) throw ParseError(line_no, "invalid number '" + std::string(trim(field)) + "'");
      v[k] = *d;
      start = comma + 1;
    }
    if (std::isnan(v[0]) || std::isnan(v[1])) throw ParseError(line_no, "coordinates must be finite");
    t.x.push_back(v[0]);
    t.y.push_back(v[1]);
    t.u1.push_back(v[2]);
    t.u2.push_back(v[3]);
    t.p.push_back(v[4]);
    t.w.push_back(v[5]);
  }
  if (!header) throw ParseError(0, "empty CSV");
  return t;
}

GridTable read_grid_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_grid_csv(in);
}

namespace {

// Representative values of clusters of sorted data, split where the gap
// exceeds tol(value).
template <class Tol>
std::vector<double> clusters(std::vector<double> v, Tol tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > tol(out.back())) out.push_back(x);
  return out;
}

std::size_t nearest(const std::vector<double>& c, double x) {
  auto it = std::lower_bound(c.begin(), c.end(), x);
  if (it == c.end()) return c.size() - 1;
  std::size_t k = static_cast<std::size_t>(it - c.begin());
  if (k > 0 && x - c[k - 1] < *it - x) return k - 1;
  return k;
}

}  // namespace

FieldSamples to_field_samples(const GridTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw DegenerateSamples("no samples");
  std::vector<double> r(n), th(n);
  for (std::size_t k = 0; k < n; ++k) {
    PolarPoint p = to_polar({t.x[k], t.y[k]});
    if (p.r == 0.0) throw DegenerateSamples("sample at the corner r = 0");
    r[k] = p.r;
    th[k] = p.theta;
  }
  auto rc = clusters(r, [](double v) { return kGridRegularityTol * v; });
  auto tc = clusters(th, [](double) { return kGridRegularityTol; });
  if (rc.size() * tc.size() != n) {
    std::ostringstream msg;
    msg << "samples do not form a regular polar grid: " << rc.size() << " radii x " << tc.size() << " angles != " << n
        << " rows";
    throw DegenerateSamples(msg.str());
  }
  FieldSamples fs;
  fs.radii = rc;
  fs.thetas = tc;
  fs.u1.assign(n, std::numeric_limits<double>::quiet_NaN());
  fs.u2.assign(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<double> p(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<bool> seen(n, false);
  bool p_ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = nearest(rc, r[k]), j = nearest(tc, th[k]);
    if (std::abs(r[k] - rc[i]) > kGridRegularityTol * rc[i] || std::abs(th[k] - tc[j]) > kGridRegularityTol)
      throw DegenerateSamples("sample off the polar lattice");
    std::size_t idx = fs.index(i, j);
    if (seen[idx]) throw DegenerateSamples("duplicate grid node");
    seen[idx] = true;
    if (std::isnan(t.u1[k]) || std::isnan(t.u2[k])) throw DegenerateSamples("velocity sample is nan");
    fs.u1[idx] = t.u1[k];
    fs.u2[idx] = t.u2[k];
    p[idx] = t.p[k];
    if (std::isnan(t.p[k])) p_ok = false;
  }
  if (p_ok) fs.p = std::move(p);
  return fs;
}

ConeDomain infer_domain(const FieldSamples& fs) {
  const auto& t = fs.thetas;
  if (t.size() < 2) throw DegenerateSamples("need at least two angles to infer a domain");
  double first = t[1] - t[0], last = t.back() - t[t.size() - 2];
  bool even = true;
  for (std::size_t j = 1; j < t.size(); ++j)
    if (std::abs((t[j] - t[j - 1]) - first) > 1e-9) even = false;
  double wrap = kTwoPi - (t.back() - t.front());
  if (even && std::abs(wrap - first) <= 1e-9) return ConeDomain::full_plane();
  return ConeDomain::sector(std::max(0.0, t.front() - first / 2), std::min(kTwoPi, t.back() + last / 2));
}

}  // namespace nsexact
