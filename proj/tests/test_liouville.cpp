// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <variant>

#include "nsexact/errors.hpp"
#include "nsexact/families.hpp"
#include "nsexact/liouville.hpp"
#include "nsexact/verifier.hpp"
#include "test_support.hpp"

using namespace nsexact;
using namespace nsexact::testing;

TEST(GrowthExponent, Examples) {
  auto g = growth_exponent(PowerMode{0.5, 1, 0, 0});
  EXPECT_EQ(g.sigma, 0.5);
  EXPECT_TRUE(growth_ok(g));
  g = growth_exponent(ShearX{0, 1, 0});
  EXPECT_EQ(g.sigma, 1);
  EXPECT_FALSE(growth_ok(g));
  g = growth_exponent(RotLog{0, 1, 0});
  EXPECT_EQ(g.sigma, 1);
  EXPECT_TRUE(g.log_factor);
  EXPECT_FALSE(growth_ok(g));
  EXPECT_EQ(growth_exponent(Constant{1, 2, 0}).sigma, 0);
  EXPECT_EQ(growth_exponent(quadratic_from_c1c2(1, 0, 0)).sigma, 2);
}

// sup_theta |u(R, theta)| / R sampled at growing R follows R^(sigma - 1),
// times |C1 + C2 ln R| when the log flag is set.
TEST(GrowthExponent, AgreesWithSampledRatio) {
  Rng rng(51);
  for (Family f : kAllFamilies)
    for (int trial = 0; trial < 10; ++trial) {
      ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng);
      auto angles = sample_angles(d, 512);
      auto ratio = [&](double R) {
        double m = 0;
        for (double t : angles) m = std::max(m, velocity(s, {R, t}).norm() / R);
        return m;
      };
      auto g = growth_exponent(s);
      const double R1 = 1e3, R2 = 1e6;
      double r1 = ratio(R1), r2 = ratio(R2);
      double want = std::pow(R2 / R1, g.sigma - 1);
      if (g.log_factor) {
        const auto& q = std::get<RotLog>(s);
        want *= std::abs(q.c1 + q.c2 * std::log(R2)) / std::abs(q.c1 + q.c2 * std::log(R1));
      }
      EXPECT_NEAR(r2 / r1, want, 0.05 * want) << family_name(f);
      EXPECT_EQ(growth_ok(g), g.sigma < 1) << family_name(f);
      if (g.log_factor) EXPECT_GT(want, 1);
    }
}

TEST(CornerC1, Examples) {
  auto full = ConeDomain::full_plane();
  auto half = ConeDomain::sector(0, kPi);
  EXPECT_TRUE(corner_c1(PowerMode{3, 1, 0, 0}, full));
  EXPECT_FALSE(corner_c1(PowerMode{0.5, 1, 0, 0}, half));
  EXPECT_FALSE(corner_c1(RotLog{0, 1, 0}, half));
  EXPECT_TRUE(corner_c1(RotLog{1, 0, 0}, half));
  EXPECT_TRUE(corner_c1(PowerMode{1.5, 1, 0, 0}, half));
}

TEST(Verdict, Examples) {
  auto v = liouville_verdict(Constant{1, 2, 3}, ConeDomain::full_plane());
  EXPECT_TRUE(v.growth_ok && v.c1_closure_ok && v.is_constant);
  v = liouville_verdict(PowerMode{0.5, 1, 0, 0}, ConeDomain::sector(0, kPi));
  EXPECT_TRUE(v.growth_ok);
  EXPECT_FALSE(v.c1_closure_ok);
  EXPECT_TRUE(v.implication_holds());
  EXPECT_FALSE(v.polynomial_degree);
  EXPECT_THROW(liouville_verdict(PowerMode{1.5, 1, 0, 0}, ConeDomain::full_plane()), Inadmissible);
}

TEST(Verdict, ImplicationHoldsAcrossCatalog) {
  Rng rng(53);
  for (Family f : kAllFamilies)
    for (int trial = 0; trial < 200; ++trial) {
      ConeDomain d = f == Family::RotLog ? random_sector(rng) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng);
      auto v = liouville_verdict(s, d);
      EXPECT_TRUE(v.implication_holds()) << family_name(f);
      if (d.is_full_plane()) EXPECT_TRUE(v.polynomial_degree.has_value()) << family_name(f);
    }
}

// A polynomial of degree k has vanishing (k+1)-th differences, and a
// non-polynomial member does not.
TEST(PolynomialDegree, MatchesForwardDifferences) {
  Rng rng(59);
  for (Family f : kAllFamilies)
    for (int trial = 0; trial < 20; ++trial) {
      ConeDomain d = f == Family::RotLog || f == Family::PowerMode ? ConeDomain::sector(0.1, 3.0) : random_domain(rng);
      FlowSolution s = random_member(f, d, rng);
      Vec2 x = to_cartesian({1.5, 1.5});
      Vec2 dir = to_cartesian({1, 1.4});
      auto deg = polynomial_degree(s);
      if (deg) {
        EXPECT_LE(forward_difference(s, x, dir, 0.1, *deg + 1), 1e-9) << family_name(f);
        if (!is_constant(s)) EXPECT_GT(forward_difference(s, x, dir, 0.1, *deg), 1e-6) << family_name(f);
      } else {
        for (int n = 1; n <= 4; ++n) EXPECT_GT(forward_difference(s, x, dir, 0.1, n), 1e-9) << family_name(f);
      }
    }
}

TEST(IsConstant, Examples) {
  EXPECT_TRUE(is_constant(Constant{1, 2, 3}));
  EXPECT_TRUE(is_constant(Linear{0, 0, 0, 4}));
  EXPECT_FALSE(is_constant(Linear{1, 0, 0, 0}));
  EXPECT_TRUE(is_constant(RotLog{0, 0, 1}));
  EXPECT_EQ(polynomial_degree(ShearY{1, 0, 0}), 1);
  EXPECT_EQ(polynomial_degree(PowerMode{3, 1, 0, 0}), 3);
}
