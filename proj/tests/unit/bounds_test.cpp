#include <gtest/gtest.h>

#include "dmu/bounds.hpp"
#include "dmu/instances.hpp"
#include "dmu/roots.hpp"
#include "test_support.hpp"

namespace dmu {
namespace {

using test::one;
using test::z;

TEST(SupCircle, Examples) {
  for (int d : {1, 5, 20, 64}) {
    const auto b = sup_circle(Polynomial::monomial(d));
    EXPECT_TRUE(b.contains(1.0)) << d;
    EXPECT_LE(b.width(), 1e-6) << d;
  }
  EXPECT_TRUE(sup_circle(one + z).contains(2.0));
  const auto cube = sup_circle(pow(Polynomial{2.0, 1.0}, 3) / Complex(27.0));
  EXPECT_TRUE(cube.contains(1.0));
  EXPECT_LE(cube.width(), 1e-6);
}

TEST(SupCircle, RejectsCoarseGrid) {
  try {
    sup_circle(Polynomial::monomial(10), 30);
    FAIL() << "expected ResolutionTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResolutionTooSmall);
  }
}

TEST(SupCircle, NeverBeatenByFreshPoints) {
  Rng rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial p = random_polynomial(rng, trial % 25);
    const int n = 64 + 8 * (trial % 25);
    const auto b = sup_circle(p, n);
    for (int k = 0; k < 10 * n; ++k) EXPECT_LE(std::abs(eval(p, std::polar(1.0, angle(rng)))), b.upper);
  }
}

TEST(SupCircleSumSq, EnclosesTupleSup) {
  const FunctionTuple phi{z, one - z};
  // |z|^2 + |1 - z|^2 on the circle peaks at z = -1 with value 5.
  EXPECT_TRUE(sup_circle_sum_sq(phi).contains(5.0));
}

TEST(MinModulus, Examples) {
  EXPECT_TRUE(min_modulus_closed_disk(z + 2.0).contains(1.0));
  EXPECT_TRUE(min_modulus_closed_disk(Polynomial{Complex(0.0, -3.0)}).contains(3.0));
  const auto cube = min_modulus_closed_disk(pow(Polynomial{2.0, 1.0}, 3) / Complex(27.0));
  EXPECT_TRUE(cube.contains(1.0 / 27.0));
  const auto inside = min_modulus_closed_disk(z - 0.5);
  EXPECT_EQ(inside.lower, 0.0);
  EXPECT_THROW(min_modulus_closed_disk(Polynomial{}), Error);
}

TEST(MinModulus, SoundOnZeroFreePolynomials) {
  Rng rng(32);
  int tested = 0;
  while (tested < 100) {
    const Polynomial p = random_polynomial(rng, 1 + tested % 6) + Complex(2.5);
    if (root_margin(p) <= 0.0) continue;
    ++tested;
    const auto b = min_modulus_closed_disk(p);
    EXPECT_GT(b.lower, 0.0);
    for (int k = 0; k < 1000; ++k) EXPECT_GE(std::abs(eval(p, random_disk_point(rng))), b.lower);
  }
}

TEST(ScanDisk, CoversDisk) {
  const auto scan = scan_disk([](Complex w) { return std::abs(w - Complex(0.3, 0.2)); }, 32, 128);
  EXPECT_LE(scan.min_value, scan.covering_radius);
  EXPECT_NEAR(scan.covering_radius, 0.5 / 32 + std::numbers::pi / 128, 1e-15);
}

}  // namespace
}  // namespace dmu
