#include <gtest/gtest.h>

#include "dmu/bounds.hpp"
#include "dmu/corona.hpp"
#include "dmu/instances.hpp"
#include "test_support.hpp"

namespace dmu {
namespace {

using test::one;
using test::z;

// Phi B^T - 1 by direct convolution.
double oracle_residual(const FunctionTuple& phi, const FunctionTuple& b) {
  oracle::Coeffs sum;
  for (std::size_t j = 0; j < phi.size(); ++j) sum = oracle::add(sum, oracle::mul(test::coeffs(phi[j]), test::coeffs(b[j])));
  return oracle::max_diff(sum, {1.0});
}

TEST(EstimateEpsilon, Examples) {
  const auto e = estimate_epsilon(FunctionTuple{z, one - z});
  // Certified from below; the grid minimum approaches 1/2.
  EXPECT_GT(e.eps_sq_lower, 0.4);
  EXPECT_LE(e.eps_sq_lower, 0.5);
  EXPECT_NEAR(e.grid_min, 0.5, 1e-3);
  EXPECT_TRUE(e.common_roots_in_disk.empty());

  EXPECT_GE(estimate_epsilon(FunctionTuple{one, Polynomial{0.3, -2.0, 5.0}}).eps_sq_lower, 1.0);

  const auto c = estimate_epsilon(FunctionTuple{z, z * z});
  EXPECT_EQ(c.eps_sq_lower, 0.0);
  ASSERT_EQ(c.common_roots_in_disk.size(), 1u);
  EXPECT_NEAR(std::abs(c.common_roots_in_disk[0]), 0.0, 1e-9);
  EXPECT_FALSE(c.inconclusive());
}

TEST(EstimateEpsilon, SoundAtRandomPoints) {
  Rng rng(61);
  for (const auto& p : exact_corona_instances(10, 61)) {
    const double eps = estimate_epsilon(p.tuple).eps_sq_lower;
    for (int k = 0; k < 10000; ++k) EXPECT_GE(p.tuple.sum_sq(random_disk_point(rng)), eps);
  }
}

TEST(BezoutBase, Examples) {
  const auto a = bezout_base(FunctionTuple{z, one - z});
  EXPECT_EQ(a.mode, SolveMode::Exact);
  EXPECT_LE(max_coeff_diff(a.solution, FunctionTuple{one, one}), 1e-12);

  const auto c = bezout_base(FunctionTuple{Polynomial{Complex(0.0, 2.0)}});
  EXPECT_LE(max_coeff_diff(c.solution, FunctionTuple{Polynomial{Complex(0.0, -0.5)}}), 1e-15);

  const auto q = bezout_base(FunctionTuple{z * z, one - z});
  EXPECT_EQ(q.mode, SolveMode::Exact);
  // The minimum-norm solution of z^2 e1 + (1 - z) e2 = 1 need not be the
  // lowest-degree pair, but it must solve the identity exactly.
  EXPECT_LE(oracle_residual(FunctionTuple{z * z, one - z}, q.solution), 1e-10);
  EXPECT_LE(q.degree, 1);
}

TEST(BezoutBase, CommonZeroOutsideDiskIsApprox) {
  const Polynomial outside = z - 2.0;
  const auto b = bezout_base(FunctionTuple{outside * z, outside * (one - z)});
  EXPECT_EQ(b.mode, SolveMode::Approx);
  EXPECT_GT(b.residual_max_coeff, 0.0);
  EXPECT_GT(b.residual_sup.upper, 0.0);
}

TEST(BezoutBase, CommonZeroInsideDiskFails) {
  try {
    bezout_base(FunctionTuple{z, z * z});
    FAIL() << "expected CoronaConditionFails";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoronaConditionFails);
  }
}

TEST(BezoutBase, DegreeCapExceeded) {
  try {
    bezout_base(FunctionTuple{pow(z, 3), pow(one - z, 3)}, 1);
    FAIL() << "expected DegreeCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
  }
}

TEST(BezoutBase, ScalingCovariance) {
  Rng rng(62);
  std::normal_distribution<double> gauss;
  for (const auto& p : exact_corona_instances(10, 62)) {
    const double re = gauss(rng);
    const Complex c(re, gauss(rng));
    const auto base = bezout_base(p.tuple);
    const auto scaled = bezout_base(p.tuple * c);
    EXPECT_LE(max_coeff_diff(scaled.solution, base.solution / c), 1e-9);
  }
}

TEST(Normalize, Examples) {
  const auto d1 = AtomicMeasure::delta(1.0);
  const auto n1 = normalize(FunctionTuple{one}, d1);
  EXPECT_NEAR(n1.scale, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(std::abs(n1.scaled[0].coeff(0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-9);
  EXPECT_NEAR(normalize(FunctionTuple{Polynomial{0.1}}, d1).scale, 0.1 * std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(normalize(n1.scaled, d1).scale, 1.0, 1e-9);
  EXPECT_THROW(normalize(FunctionTuple{Polynomial{}}, d1), Error);
}

TEST(Lift, Examples) {
  const FunctionTuple phi{z, one - z};
  const FunctionTuple b1 = lift(phi, FunctionTuple{one, one}, UnitCirclePoint(1.0));
  EXPECT_LE(max_coeff_diff(b1, FunctionTuple{Polynomial{2.0, -1.0}, one - z}), 1e-15);
  EXPECT_LE(oracle_residual(phi, b1), 1e-15);

  const FunctionTuple c{Polynomial{4.0}};
  EXPECT_LE(max_coeff_diff(lift(c, FunctionTuple{Polynomial{0.25}}, UnitCirclePoint(1.0)), FunctionTuple{Polynomial{0.25}}),
            0.0);

  const FunctionTuple b2 = lift(phi, b1, UnitCirclePoint(-1.0));
  const FunctionTuple expected{one + 0.6 * z * (one - z), one - 0.6 * z * z};
  EXPECT_LE(max_coeff_diff(b2, expected), 1e-15);
  EXPECT_LE(oracle_residual(phi, b2), 1e-15);
}

TEST(Lift, PreconditionsAreNamed) {
  try {
    lift(FunctionTuple{z, one - z}, FunctionTuple{one, Polynomial{}}, UnitCirclePoint(1.0));
    FAIL() << "expected PreconditionFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    EXPECT_NE(std::string(e.what()).find("Phi E^T = 1"), std::string::npos);
  }
}

TEST(Lift, ConstantTupleIsFixedPoint) {
  const FunctionTuple phi{Polynomial{0.6}, Polynomial{Complex(0.0, 0.8)}};
  const FunctionTuple e = bezout_base(phi).solution;
  EXPECT_LE(max_coeff_diff(lift(phi, e, UnitCirclePoint::polar(2.0)), e), 1e-15);
}

TEST(LiftAnchor, Examples) {
  const FunctionTuple phi{z, one - z};
  EXPECT_LE(max_coeff_diff(lift_anchor(phi, FunctionTuple{one, one}, UnitCirclePoint(1.0)),
                           FunctionTuple{Polynomial{2.0, -1.0}, one - z}),
            1e-15);
  EXPECT_LE(max_coeff_diff(lift_anchor(FunctionTuple{Polynomial{4.0}}, FunctionTuple{Polynomial{0.25}}, UnitCirclePoint(1.0)),
                           FunctionTuple{Polynomial{0.25}}),
            0.0);
  const FunctionTuple sq{z * z, one - z};
  const FunctionTuple d = lift_anchor(sq, FunctionTuple{one, one + z}, UnitCirclePoint(1.0));
  EXPECT_LE(max_coeff_diff(d, FunctionTuple{2.0 - z * z, -(z * z - 1.0) * (one + z)}), 1e-15);
  EXPECT_LE(oracle_residual(sq, d), 1e-15);
}

TEST(Lift, PreservesBezoutOnRandomInstances) {
  for (const auto& p : exact_corona_instances(30, 63)) {
    const FunctionTuple e = bezout_base(p.tuple).solution;
    for (const auto& atom : p.measure) {
      EXPECT_LE(oracle_residual(p.tuple, lift(p.tuple, e, atom.zeta)), 1e-9);
      EXPECT_LE(oracle_residual(p.tuple, lift_anchor(p.tuple, e, atom.zeta)), 1e-9);
    }
  }
}

TEST(Solve, Examples) {
  const FunctionTuple phi{z, one - z};
  const CoronaProblem one_atom{phi, AtomicMeasure::delta(1.0)};
  const auto c1 = solve(one_atom);
  EXPECT_LE(max_coeff_diff(c1.solution, FunctionTuple{Polynomial{2.0, -1.0}, one - z}), 1e-12);
  EXPECT_LE(c1.residual_max_coeff, 1e-12);
  EXPECT_TRUE(verify_certificate(one_atom, c1).pass());

  const CoronaProblem unit{FunctionTuple{one, Polynomial{}}, AtomicMeasure::delta(Complex(0.0, 1.0))};
  const auto cu = solve(unit);
  EXPECT_LE(max_coeff_diff(cu.solution, FunctionTuple{one, Polynomial{}}), 1e-15);
  EXPECT_TRUE(verify_certificate(unit, cu).pass());

  const CoronaProblem two{phi, AtomicMeasure({Atom{UnitCirclePoint(1.0), 1.0}, Atom{UnitCirclePoint(-1.0), 1.0}})};
  const auto c2 = solve(two);
  EXPECT_LE(max_coeff_diff(c2.solution, FunctionTuple{one + 0.6 * z * (one - z), one - 0.6 * z * z}), 1e-10);
  EXPECT_EQ(c2.chain.size(), 2u);
  EXPECT_TRUE(verify_certificate(two, c2).pass());
}

TEST(Solve, CommonZeroThrows) {
  try {
    solve({FunctionTuple{z, z * z}, AtomicMeasure::delta(1.0)});
    FAIL() << "expected CoronaConditionFails";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoronaConditionFails);
  }
}

TEST(VerifyCertificate, DetectsTampering) {
  const CoronaProblem p{FunctionTuple{z, one - z}, AtomicMeasure::delta(1.0)};
  auto cert = solve(p);
  std::vector<Polynomial> entries(cert.solution.begin(), cert.solution.end());
  entries[0] += z * z;
  cert.solution = FunctionTuple(entries);
  const auto rep = verify_certificate(p, cert);
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.items.front().pass);
  EXPECT_EQ(rep.items.front().name, "bezout_residual");
}

TEST(Solve, ChainInequalitiesOnRandomInstances) {
  for (const auto& p : exact_corona_instances(15, 64)) {
    const auto cert = solve(p);
    ASSERT_EQ(cert.chain.size(), p.measure.size());
    for (const auto& rec : cert.chain) {
      EXPECT_LE(rec.residual_max_coeff, 1e-9);
      EXPECT_LE(rec.b_norm_lower, rec.chain_bound + 1e-9);
    }
    EXPECT_TRUE(verify_certificate(p, cert).pass());
  }
}

TEST(Solve, IsDeterministic) {
  const auto p = exact_corona_instances(1, 65).front();
  const auto a = solve(p), b = solve(p);
  EXPECT_EQ(max_coeff_diff(a.solution, b.solution), 0.0);
  EXPECT_EQ(a.chain.back().b_norm_lower, b.chain.back().b_norm_lower);
}

}  // namespace
}  // namespace dmu
