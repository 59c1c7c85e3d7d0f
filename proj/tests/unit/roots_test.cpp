#include <gtest/gtest.h>

#include <algorithm>

#include "dmu/instances.hpp"
#include "dmu/roots.hpp"
#include "test_support.hpp"

namespace dmu {
namespace {

using test::one;
using test::z;

double residual_scale(const Polynomial& p) { return 1e-8 * (1.0 + p.l1_norm()); }

TEST(Roots, Examples) {
  auto r = roots(z * z - one);
  std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(std::abs(r[0] + 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r[1] - 1.0), 0.0, 1e-12);

  const Polynomial cube = pow(Polynomial{2.0, 1.0}, 3) / Complex(27.0);
  const auto rc = roots(cube);
  ASSERT_EQ(rc.size(), 3u);
  for (const Complex x : rc) EXPECT_NEAR(std::abs(x + 2.0), 0.0, 1e-6);

  EXPECT_TRUE(roots(Polynomial{3.0}).empty());
  EXPECT_THROW(roots(Polynomial{}), Error);
}

TEST(Roots, ResidualsAreSmall) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_polynomial(rng, 1 + trial % 20);
    const auto r = roots(p);
    ASSERT_EQ(int(r.size()), p.degree());
    for (const Complex x : r) {
      // The absolute bound applies near the disk; far roots are held to the
      // same relative backward error, since |p| there is dominated by rounding.
      if (std::abs(x) <= 2.0) EXPECT_LE(std::abs(eval(p, x)), residual_scale(p));
      double magnitude = 0.0;
      for (int k = p.degree(); k >= 0; --k) magnitude = magnitude * std::abs(x) + std::abs(p.coeff(k));
      EXPECT_LE(std::abs(eval(p, x)), 1e-8 * (1.0 + magnitude));
    }
  }
}

TEST(Roots, ReconstructLowDegree) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_polynomial(rng, 1 + trial % 12);
    oracle::Coeffs prod{p.leading()};
    for (const Complex x : roots(p)) prod = oracle::mul(prod, {-x, 1.0});
    EXPECT_LE(oracle::max_diff(prod, test::coeffs(p)), 1e-6 * (1.0 + p.l1_norm()));
  }
}

TEST(Roots, RepeatedAndZeroRoots) {
  const Polynomial p = z * z * pow(z - Complex(0.5, 0.5), 2) * (z + 3.0);
  auto r = roots(p);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_EQ(std::count(r.begin(), r.end(), Complex(0.0)), 2);
  int near_half = 0;
  for (const Complex x : r) near_half += std::abs(x - Complex(0.5, 0.5)) < 1e-6;
  EXPECT_EQ(near_half, 2);
}

TEST(Roots, MarginAndFromRoots) {
  EXPECT_NEAR(root_margin(pow(Polynomial{2.0, 1.0}, 3)), 1.0, 1e-6);
  EXPECT_TRUE(std::isinf(root_margin(Polynomial{4.0})));
  EXPECT_LT(root_margin(z - 0.5), 0.0);
  const Polynomial p = from_roots({Complex(1.0), Complex(-2.0)}, 3.0);
  EXPECT_TRUE(approx_equal(p, 3.0 * (z - 1.0) * (z + 2.0)));
}

TEST(Gcd, CommonFactors) {
  const Polynomial g = gcd(z * (z - 2.0), (z - 2.0) * (z + 1.0));
  EXPECT_EQ(g.degree(), 1);
  EXPECT_NEAR(std::abs(eval(g, Complex(2.0))), 0.0, 1e-9);
  EXPECT_EQ(gcd(z, one - z).degree(), 0);
  const Polynomial t = gcd(FunctionTuple{z, z * z});
  EXPECT_EQ(t.degree(), 1);
  EXPECT_NEAR(std::abs(eval(t, Complex(0.0))), 0.0, 1e-12);
}

}  // namespace
}  // namespace dmu
