#include <gtest/gtest.h>

#include "dmu/bounds.hpp"
#include "dmu/instances.hpp"
#include "test_support.hpp"

namespace dmu {
namespace {

using test::one;
using test::z;

TEST(LocalDirichlet, Examples) {
  for (double t : {0.0, 1.0, 2.5, -2.0}) EXPECT_NEAR(local_dirichlet(z, UnitCirclePoint::polar(t)), 1.0, 1e-15);
  EXPECT_EQ(local_dirichlet(Polynomial{Complex(2.0, 1.0)}, UnitCirclePoint(1.0)), 0.0);
  EXPECT_NEAR(local_dirichlet(z * z, UnitCirclePoint(1.0)), 2.0, 1e-15);
}

TEST(LocalDirichlet, MatchesTailSumOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_polynomial(rng, trial % 16);
    const UnitCirclePoint zeta = random_circle_point(rng);
    const double ref = oracle::local_dirichlet(test::coeffs(p), zeta.value());
    EXPECT_NEAR(local_dirichlet(p, zeta), ref, 1e-11 * (1.0 + ref));
    EXPECT_DOUBLE_EQ(local_dirichlet(p, zeta), h2_norm_sq(divide_at(p, zeta).quotient));
  }
}

TEST(LocalDirichletQuadrature, Examples) {
  const double tol = 1e-7;
  EXPECT_NEAR(local_dirichlet_quadrature(z, UnitCirclePoint(1.0), tol), 1.0, 1e-6);
  EXPECT_NEAR(local_dirichlet_quadrature(Polynomial{3.0}, UnitCirclePoint(1.0), tol), 0.0, tol);
  EXPECT_NEAR(local_dirichlet_quadrature(z * z, UnitCirclePoint(1.0), tol), 2.0, 2e-6);
}

TEST(LocalDirichletQuadrature, CapIsReportedWithEstimate) {
  try {
    local_dirichlet_quadrature_detailed(pow(z, 12), UnitCirclePoint(1.0), 1e-12, 64);
    FAIL() << "expected QuadratureCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuadratureCapExceeded);
    ASSERT_TRUE(e.estimate().has_value());
    EXPECT_GT(*e.estimate(), 0.0);
  }
}

TEST(LocalDirichletQuadrature, AgreesWithClosedForm) {
  Rng rng(42);
  std::uniform_int_distribution<int> degree(0, 15);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial p = random_polynomial(rng, degree(rng));
    const UnitCirclePoint zeta = random_circle_point(rng);
    const double exact = local_dirichlet(p, zeta);
    const double quad = local_dirichlet_quadrature(p, zeta, 1e-6 * std::max(1.0, exact));
    EXPECT_LE(std::abs(exact - quad), std::max(1e-4, 1e-3 * exact));
  }
}

TEST(DmuNorm, Examples) {
  const auto d1 = AtomicMeasure::delta(1.0);
  EXPECT_DOUBLE_EQ(dmu_norm_sq(one, d1), 1.0);
  EXPECT_DOUBLE_EQ(dmu_norm_sq(z, d1), 2.0);
  const AtomicMeasure two({Atom{UnitCirclePoint(1.0), 2.0}, Atom{UnitCirclePoint(-1.0), 3.0}});
  EXPECT_DOUBLE_EQ(dmu_norm_sq(z, two), 6.0);
  EXPECT_DOUBLE_EQ(tuple_dmu_norm_sq(FunctionTuple{one, Polynomial{}}, d1), 1.0);
  EXPECT_DOUBLE_EQ(tuple_dmu_norm_sq(FunctionTuple{z, one - z}, d1), 5.0);
  EXPECT_DOUBLE_EQ(tuple_dmu_norm_sq(FunctionTuple{Polynomial{}}, d1), 0.0);
}

TEST(AtomicMeasure, Validation) {
  EXPECT_THROW(AtomicMeasure({Atom{UnitCirclePoint(1.0), 0.0}}), Error);
  EXPECT_THROW(AtomicMeasure({Atom{UnitCirclePoint(1.0), 1.0}, Atom{UnitCirclePoint(1.0), 2.0}}), Error);
  const AtomicMeasure mu({Atom{UnitCirclePoint(1.0), 1.0}, Atom{UnitCirclePoint(-1.0), 2.0}});
  EXPECT_EQ(mu.prefix(0).size(), 0u);
  EXPECT_EQ(mu.prefix(1).size(), 1u);
  EXPECT_EQ(mu.prefix(1)[0].weight, 1.0);
}

TEST(EvaluationBound, HoldsForRandomPolynomials) {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = random_polynomial(rng, trial % 12);
    const UnitCirclePoint zeta = random_circle_point(rng);
    EXPECT_LE(std::norm(eval(p, zeta.value())), 2.0 * (h2_norm_sq(p) + local_dirichlet(p, zeta)) + 1e-10);
  }
}

TEST(MultNorm, UpperExamples) {
  const auto d1 = AtomicMeasure::delta(1.0);
  // Certified upper bounds: never below the formula value, and tight.
  EXPECT_GE(mult_norm_upper(FunctionTuple{one}, d1).upper, std::sqrt(2.0));
  EXPECT_NEAR(mult_norm_upper(FunctionTuple{one}, d1).upper, std::sqrt(2.0), 1e-6);
  EXPECT_EQ(mult_norm_upper(FunctionTuple{Polynomial{}}, d1).upper, 0.0);
  EXPECT_GE(mult_norm_upper(FunctionTuple{z}, d1).upper, std::sqrt(6.0));
  EXPECT_NEAR(mult_norm_upper(FunctionTuple{z}, d1).upper, std::sqrt(6.0), 1e-6);
}

TEST(MultNorm, LowerExamples) {
  const auto d1 = AtomicMeasure::delta(1.0);
  EXPECT_GE(mult_norm_lower(FunctionTuple{one}, d1, 4).lower, 1.0 - 1e-15);
  EXPECT_GE(mult_norm_lower(FunctionTuple{Polynomial{Complex(0.0, 3.0)}}, d1, 4).lower, 3.0 - 1e-14);
  EXPECT_GE(mult_norm_lower(FunctionTuple{z}, d1, 4).lower, std::sqrt(2.0) - 1e-15);
}

TEST(MultNorm, SandwichAndDeterminism) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const FunctionTuple phi{random_polynomial(rng, trial % 5), random_polynomial(rng, (trial + 2) % 4)};
    const AtomicMeasure mu = random_measure(rng, 1 + trial % 3);
    const auto a = mult_norm_estimate(phi, mu, 4);
    const auto b = mult_norm_estimate(phi, mu, 4);
    EXPECT_LE(a.lower, a.upper + 1e-9);
    EXPECT_EQ(a.lower, b.lower);
    EXPECT_EQ(a.upper, b.upper);
  }
}

TEST(MultNorm, BoundarySupDominatesInterior) {
  Rng rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    const FunctionTuple phi{random_polynomial(rng, 3), random_polynomial(rng, 5)};
    const double s_inf = mult_norm_upper(phi, AtomicMeasure::delta(1.0)).s_inf.upper;
    for (int k = 0; k < 10000; ++k) EXPECT_LE(phi.sum_sq(random_disk_point(rng)), s_inf);
  }
}

TEST(ProductInequality, Examples) {
  const auto a = product_inequality_slacks(one, z, UnitCirclePoint(1.0));
  EXPECT_NEAR(a.a, 1.0, 1e-6);
  const auto c = product_inequality_slacks(z, one - z, UnitCirclePoint(1.0));
  ASSERT_TRUE(c.c.has_value());
  EXPECT_NEAR(*c.c, 0.0, 1e-6);
  EXPECT_GE(*c.c, -1e-10);
  const auto zero = product_inequality_slacks(Polynomial{}, z, UnitCirclePoint(1.0));
  EXPECT_GE(zero.a, 0.0);
  EXPECT_GE(zero.b, 0.0);
}

}  // namespace
}  // namespace dmu
