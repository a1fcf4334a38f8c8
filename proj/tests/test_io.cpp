// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nsexact/classifier.hpp"
#include "nsexact/cli.hpp"
#include "nsexact/errors.hpp"
#include "nsexact/io.hpp"
#include "test_support.hpp"

using namespace nsexact;
using namespace nsexact::testing;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("nsexact_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& body = "") const {
    auto p = (path_ / name).string();
    if (!body.empty()) std::ofstream(p) << body;
    return p;
  }

 private:
  fs::path path_;
};

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "nsexact");
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

GridSpec classify_grid(const ConeDomain& d) {
  GridSpec g;
  g.domain = d;
  g.r_min = 0.5;
  g.r_max = 2.0;
  g.n_r = 10;
  g.n_theta = 24;
  return g;
}

}  // namespace

TEST(ParseConfig, Examples) {
  auto cfg = parse_config("family=powermode\nlambda=3\nc1=1\nc2=0\nc3=0\ndomain=fullplane");
  ASSERT_TRUE(std::holds_alternative<PowerMode>(cfg.solution));
  EXPECT_EQ(std::get<PowerMode>(cfg.solution).lambda, 3);
  EXPECT_TRUE(cfg.domain().is_full_plane());
  try {
    parse_config("family=powermode\nlambda=1.5\ndomain=fullplane");
    FAIL() << "expected Inadmissible";
  } catch (const Inadmissible& e) {
    EXPECT_NE(std::string(e.what()).find("λ≥3 and λ∈ℕ"), std::string::npos);
  }
  try {
    parse_config("family=quadratic\nc1=1\nc2=0\nc3=1\nc4=0");
    FAIL() << "expected ConstraintViolation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.res1(), 1);
    EXPECT_EQ(e.res2(), 1);
  }
}

TEST(ParseConfig, Rejections) {
  EXPECT_THROW(parse_config("family=vortex"), ParseError);
  EXPECT_THROW(parse_config("family=constant\nspeed=3"), ParseError);
  EXPECT_THROW(parse_config("family=constant\nc1=1\nc1=2"), ParseError);
  EXPECT_THROW(parse_config("family=constant\nc1=abc"), ParseError);
  EXPECT_THROW(parse_config("family=constant\nc4=1"), ParseError);
  EXPECT_THROW(parse_config("family=linear\nlambda=2"), ParseError);
  EXPECT_THROW(parse_config("c1=1"), ParseError);
  try {
    parse_config("family=constant\n\nbogus line");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(RenderConfig, RoundTrip) {
  Rng rng(71);
  for (Family f : kAllFamilies)
    for (int trial = 0; trial < 10; ++trial) {
      RunConfig cfg;
      cfg.grid.domain = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      cfg.solution = random_member(f, cfg.grid.domain, rng);
      cfg.grid.n_r = 3 + trial;
      cfg.grid.r_min = uniform(rng, 0.1, 1);
      auto back = parse_config(render_config(cfg));
      EXPECT_TRUE(back == cfg) << render_config(cfg);
    }
}

TEST(ExportGrid, Examples) {
  GridSpec g;
  g.n_r = 2;
  g.n_theta = 2;
  std::ostringstream os;
  auto sum = export_grid(Constant{1, 2, 3}, g, os);
  EXPECT_EQ(sum.rows, 4u);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, kCsvHeader);
  std::istringstream again(os.str());
  auto t = read_grid_csv(again);
  ASSERT_EQ(t.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(t.u1[i], 1);
    EXPECT_EQ(t.u2[i], 2);
    EXPECT_EQ(t.p[i], 3);
    EXPECT_EQ(t.w[i], 0);
  }
}

TEST(ExportGrid, PowerModeRowAndRotLogNearCorner) {
  GridSpec g;
  g.r_min = 1;
  g.r_max = 2;
  g.n_r = 2;
  g.n_theta = 4;
  std::ostringstream os;
  export_grid(PowerMode{3, 1, 0, 0}, g, os);
  std::istringstream is(os.str());
  auto t = read_grid_csv(is);
  // First row sits at r = 1 and the first cell-centred angle.
  double th = std::atan2(t.y[0], t.x[0]);
  EXPECT_NEAR(std::hypot(t.x[0], t.y[0]), 1, 1e-15);
  EXPECT_NEAR(t.u1[0], std::cos(3 * th), 1e-14);
  EXPECT_EQ(t.w[0], 0);

  GridSpec c;
  c.domain = ConeDomain::sector(0, kPi);
  c.r_min = 1e-8;
  c.r_max = 1;
  c.n_r = 4;
  c.n_theta = 4;
  std::ostringstream rs;
  auto sum = export_grid(RotLog{0, 1, 0}, c, rs);
  EXPECT_EQ(sum.nan_rows, 0u);
  std::istringstream ri(rs.str());
  auto rt = read_grid_csv(ri);
  for (std::size_t i = 0; i < rt.size(); ++i) {
    EXPECT_TRUE(std::isfinite(rt.u1[i]) && std::isfinite(rt.u2[i]));
    double r = std::hypot(rt.x[i], rt.y[i]);
    EXPECT_NEAR(rt.w[i], -(2 * std::log(r) + 1), 1e-12 * std::abs(std::log(r)) + 1e-12);
  }
  EXPECT_GT(rt.w[0], 30);  // -(2 ln 1e-8 + 1) = 35.8
}

TEST(ExportGrid, FullPrecisionRoundTrip) {
  GridSpec g;
  g.n_r = 3;
  g.n_theta = 5;
  FlowSolution s = PowerMode{3, 0.1234567890123456789, -1.0 / 3, 0.7};
  std::ostringstream os;
  export_grid(s, g, os);
  std::istringstream is(os.str());
  auto t = read_grid_csv(is);
  auto pts = g.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec2 u = velocity(s, pts[i]);
    EXPECT_EQ(t.u1[i], u.x);
    EXPECT_EQ(t.u2[i], u.y);
    EXPECT_EQ(t.p[i], pressure(s, pts[i]));
  }
}

TEST(ExportGrid, ClassifyRoundTripForEveryFamily) {
  Rng rng(73);
  for (Family f : kAllFamilies)
    for (int trial = 0; trial < 8; ++trial) {
      ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng);
      std::ostringstream os;
      export_grid(s, classify_grid(d), os);
      std::istringstream is(os.str());
      auto samples = to_field_samples(read_grid_csv(is));
      auto r = classify(samples, d);
      ASSERT_TRUE(r.classified()) << family_name(f);
      Family want = f == Family::RotLog && std::get<RotLog>(s).c2 == 0 ? Family::Linear : f;
      EXPECT_EQ(r.family(), want);
      if (want != f) continue;
      auto a = constants_of(s), b = constants_of(*r.solution);
      double scale = 0;
      for (double x : a) scale = std::max(scale, std::abs(x));
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-6 * scale) << family_name(f);
    }
}

TEST(InferDomain, FromAngles) {
  std::ostringstream os;
  export_grid(Constant{1, 0, 0}, classify_grid(ConeDomain::full_plane()), os);
  std::istringstream is(os.str());
  EXPECT_TRUE(infer_domain(to_field_samples(read_grid_csv(is))).is_full_plane());
  std::ostringstream os2;
  export_grid(Constant{1, 0, 0}, classify_grid(ConeDomain::sector(0.2, 1.4)), os2);
  std::istringstream is2(os2.str());
  auto d = infer_domain(to_field_samples(read_grid_csv(is2)));
  EXPECT_FALSE(d.is_full_plane());
  EXPECT_NEAR(d.alpha(), 0.2, 1e-9);
  EXPECT_NEAR(d.opening(), 1.2, 1e-9);
}

TEST(ReadGridCsv, Rejections) {
  std::istringstream bad_header("a,b\n1,2\n");
  EXPECT_THROW(read_grid_csv(bad_header), ParseError);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  EXPECT_THROW(read_grid_csv(short_row), ParseError);
}

TEST(RunCommand, ExitCodes) {
  TempDir tmp;
  std::string cfg = tmp.file("pm.cfg", "family=powermode\nlambda=3\nc1=1\nc2=0.5\nc3=0\ndomain=fullplane\nnr=10\nntheta=24\n");
  std::string csv = tmp.file("pm.csv");
  std::string text;
  EXPECT_EQ(run({"list"}), kExitOk);
  EXPECT_EQ(run({"verify", "--config", cfg}, &text), kExitOk) << text;
  EXPECT_EQ(run({"sample", "--config", cfg, "--output", csv}), kExitOk);
  EXPECT_EQ(run({"classify", "--input", csv}, &text), kExitOk);
  EXPECT_NE(text.find("powermode"), std::string::npos) << text;
  EXPECT_EQ(run({"verify", "--input", csv}, &text), kExitOk) << text;

  // Perturb one velocity value.
  auto t = read_grid_csv_file(csv);
  std::ostringstream tampered;
  tampered.precision(17);
  tampered << kCsvHeader << "\n";
  for (std::size_t i = 0; i < t.size(); ++i)
    tampered << t.x[i] << "," << t.y[i] << "," << t.u1[i] + (i == 37 ? 1e-3 : 0.0) << "," << t.u2[i] << ","
             << t.p[i] << "," << t.w[i] << "\n";
  std::string bad = tmp.file("bad.csv", tampered.str());
  EXPECT_EQ(run({"verify", "--input", bad}, &text), kExitVerificationFailed) << text;

  std::ostringstream nonsol;
  nonsol << kCsvHeader << "\n";
  nonsol.precision(17);
  for (std::size_t i = 0; i < t.size(); ++i) nonsol << t.x[i] << "," << t.y[i] << "," << t.x[i] * t.x[i] << ",0,0,0\n";
  std::string ns = tmp.file("ns.csv", nonsol.str());
  EXPECT_EQ(run({"classify", "--input", ns}, &text), kExitUnclassifiable) << text;

  EXPECT_EQ(run({"bogus"}), kExitUsage);
  EXPECT_EQ(run({"verify", "--config", tmp.file("bad.cfg", "family=powermode\nlambda=1.5\ndomain=fullplane\n")}, &text),
            kExitUsage);
  EXPECT_NE(text.find("λ≥3 and λ∈ℕ"), std::string::npos);
}

TEST(RunCommand, OtherSubcommandsAndReport) {
  TempDir tmp;
  std::string rl = tmp.file("rl.cfg", "family=rotlog\nc1=0\nc2=1\ndomain=sector\nalpha=0\nbeta=3.141592653589793\n");
  std::string report = tmp.file("report.jsonl");
  EXPECT_EQ(run({"blowup", "--c1", "0", "--c2", "1", "--report", report}), kExitOk);
  std::ifstream in(report);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_NE(line.find("\"check\""), std::string::npos);
  EXPECT_NE(line.find("\"pass\""), std::string::npos);
  EXPECT_EQ(run({"holder", "--config", rl, "--gamma", "0.99"}), kExitOk);
  EXPECT_EQ(run({"liouville", "--config", rl}), kExitOk);
  EXPECT_EQ(run({"euler-solve", "--a", "1", "--b", "0", "--c", "1", "--d", "1", "--r", "0.5", "2"}), kExitOk);
  EXPECT_EQ(run({"pressure-recover", "--config", rl, "--anchor", "1,1.5707963267948966", "--target",
                 "2,1.5707963267948966"}),
            kExitOk);
  EXPECT_EQ(run({"holder", "--config", rl, "--gamma", "1.5"}), kExitUsage);
}
