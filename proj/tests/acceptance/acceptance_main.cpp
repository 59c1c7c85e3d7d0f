// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "dmu/bounds.hpp"
#include "dmu/corona.hpp"
#include "dmu/instances.hpp"
#include "dmu/koszul.hpp"
#include "dmu/stable_rank.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace dmu;
using test::one;
using test::z;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Coefficientwise max of sum_j phi_j b_j - 1 by direct convolution.
double residual(const FunctionTuple& phi, const FunctionTuple& b) {
  oracle::Coeffs sum{Complex(-1.0)};
  for (std::size_t j = 0; j < phi.size(); ++j)
    sum = oracle::add(sum, oracle::mul(test::coeffs(phi[j]), test::coeffs(b[j])));
  double worst = 0.0;
  for (const auto& c : sum) worst = std::max(worst, std::abs(c));
  return worst;
}

Outcome ldi_oracle() {
  const auto t0 = Clock::now();
  const double anchor = std::max(std::abs(local_dirichlet(z, UnitCirclePoint(1.0)) - 1.0),
                                 std::abs(local_dirichlet(z * z, UnitCirclePoint(1.0)) - 2.0));
  Rng rng(101);
  std::uniform_int_distribution<int> degree(0, 15);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(rng, degree(rng));
    const UnitCirclePoint zeta = random_circle_point(rng);
    const double exact = local_dirichlet(p, zeta);
    const double quad = local_dirichlet_quadrature(p, zeta, 1e-6 * std::max(1.0, exact));
    worst = std::max(worst, std::abs(exact - quad) / std::max(1e-4, 1e-3 * exact));
  }
  const double t = seconds_since(t0);
  return {worst <= 1.0 && anchor <= 1e-14 && t <= 120.0,
          "worst ratio " + num(worst) + ", anchors off by " + num(anchor) + ", " + num(t) + " s"};
}

Outcome product_inequality() {
  Rng rng(102);
  std::uniform_int_distribution<int> degree(0, 8);
  double worst = -std::numeric_limits<double>::infinity();
  int zero_branch = 0;
  for (int i = 0; i < 1000; ++i) {
    const Polynomial phi = random_polynomial(rng, degree(rng));
    const UnitCirclePoint zeta = random_circle_point(rng);
    Polynomial f = random_polynomial(rng, degree(rng));
    if (i % 3 == 0) f = f - eval(f, zeta.value());
    const auto s = product_inequality_slacks(phi, f, zeta);
    worst = std::max({worst, -s.a, -s.b});
    if (s.c) {
      ++zero_branch;
      worst = std::max(worst, -*s.c);
    }
  }
  return {worst <= 1e-10 && zero_branch > 0,
          "largest negated slack " + num(worst) + ", f(zeta) = 0 branch hit " + std::to_string(zero_branch) + " times"};
}

Outcome koszul() {
  Rng rng(103);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int n = 2; n <= 50; ++n) {
    Eigen::VectorXcd a(n), d(n);
    for (int k = 0; k < n; ++k) {
      const double ar = gauss(rng), ai = gauss(rng), dr = gauss(rng), di = gauss(rng);
      a[k] = Complex(ar, ai);
      d[k] = Complex(dr, di);
    }
    const auto dev = check_identities(a, d, 103 + n);
    const double scale = 1.0 + a.squaredNorm() + a.norm() * d.norm();
    worst = std::max({worst, dev.kernel / scale, dev.hermitian / scale, dev.bilinear / scale});
  }
  return {worst <= 1e-12, "max deviation / scale " + num(worst)};
}

Outcome worked_corona() {
  const FunctionTuple phi{z, one - z};
  const auto one_atom = solve({phi, AtomicMeasure::delta(1.0)});
  const double dev1 = max_coeff_diff(one_atom.solution, FunctionTuple{Polynomial{2.0, -1.0}, one - z});
  const double res1 = residual(phi, one_atom.solution);

  const AtomicMeasure two({{UnitCirclePoint(1.0), 1.0}, {UnitCirclePoint(-1.0), 1.0}});
  const auto two_atom = solve({phi, two});
  const FunctionTuple expected2{one + 0.6 * z * (one - z), one - 0.6 * z * z};
  const double dev2 = max_coeff_diff(two_atom.solution, expected2);
  const double res2 = residual(phi, two_atom.solution);

  double lift_gap = 0.0;
  const auto base = bezout_base(phi);
  for (const Complex w : {Complex(1.0), Complex(-1.0), std::polar(1.0, 0.7)}) {
    const UnitCirclePoint zeta(w);
    lift_gap = std::max(lift_gap, max_coeff_diff(lift(phi, base.solution, zeta),
                                                 koszul_solution_form(phi, base.solution, zeta)));
  }
  return {dev1 <= 1e-12 && res1 <= 1e-12 && dev2 <= 1e-10 && res2 <= 1e-10 && lift_gap <= 1e-10,
          "delta_1: |B - B*| " + num(dev1) + ", residual " + num(res1) + "; two atoms: |B - B*| " + num(dev2) +
              ", residual " + num(res2) + "; lift forms differ by " + num(lift_gap)};
}

Outcome bezout_and_chain(bool chain_only) {
  static const auto instances = exact_corona_instances(50, 104);
  static std::vector<CoronaCertificate> certs;
  if (certs.empty())
    for (const auto& p : instances) certs.push_back(solve(p));
  if (instances.size() != 50) return {false, "only " + std::to_string(instances.size()) + " instances generated"};

  double res = 0.0, atom_gap = -std::numeric_limits<double>::infinity(), chain_gap = atom_gap;
  std::size_t records = 0;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& p = instances[k];
    const auto& c = certs[k];
    res = std::max(res, residual(p.tuple, c.solution));
    for (const auto& r : c.chain) {
      res = std::max(res, r.residual_max_coeff);
      chain_gap = std::max(chain_gap, r.b_norm_lower - r.chain_bound);
      ++records;
    }
    const FunctionTuple scaled = p.tuple / c.scaling;
    for (const auto& atom : p.measure) atom_gap = std::max(atom_gap, c.epsilon.eps_sq_lower - 1e-10 - scaled.sum_sq(atom.zeta.value()));
  }
  if (chain_only)
    return {chain_gap <= 1e-9 && records > 0,
            std::to_string(records) + " records, max(lower - bound) " + num(chain_gap)};
  return {res <= 1e-9 && atom_gap <= 0.0,
          "max residual " + num(res) + ", max(eps^2 - 1e-10 - |Phi(zeta)|^2) " + num(atom_gap)};
}

Outcome stable_rank() {
  const auto t0 = Clock::now();
  int failures = 0;
  std::string failed;
  for (const auto& c : curated_stable_rank_cases()) {
    const auto w = reduce(c.f, c.h, c.measure);
    if (!w || w->root_margin < 1e-3 || !verify_witness(c.f, c.h, *w).pass()) {
      ++failures;
      failed += " " + c.name;
    }
  }
  ReductionWitness hand;
  hand.y = -(z + 8.0) * (z - 1.0) / Complex(27.0);
  hand.u = pow(z + 2.0, 3) / Complex(27.0);
  hand.root_margin = 1.0;
  const bool hand_ok = verify_witness(z, one - z, hand).pass();
  const double t = seconds_since(t0);
  return {failures == 0 && hand_ok && t <= 300.0 && curated_stable_rank_cases().size() == 10,
          std::to_string(failures) + " failures" + failed + ", hand witness " + (hand_ok ? "accepted" : "rejected") +
              ", " + num(t) + " s"};
}

Outcome sandwich() {
  Rng rng(108);
  std::uniform_int_distribution<int> degree(0, 5), atoms(1, 4), entries(1, 3);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> ps;
    for (int j = entries(rng); j > 0; --j) ps.push_back(random_polynomial(rng, degree(rng)));
    const auto est = mult_norm_estimate(FunctionTuple(std::move(ps)), random_measure(rng, atoms(rng)), 4);
    worst = std::max(worst, est.lower - est.upper);
  }
  const auto mu = AtomicMeasure::delta(1.0);
  const double m1 = mult_norm_lower(FunctionTuple{one}, mu, 4).lower;
  const double mz = mult_norm_lower(FunctionTuple{z}, mu, 4).lower;
  return {worst <= 1e-9 && m1 >= 1.0 && mz >= std::sqrt(2.0),
          "max(lower - upper) " + num(worst) + ", ||M_1|| >= " + num(m1) + ", ||M_z|| >= " + num(mz)};
}

Outcome soundness() {
  Rng rng(109);
  std::uniform_int_distribution<int> degree(1, 8);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = random_polynomial(rng, degree(rng)), q = random_polynomial(rng, degree(rng));
    const FunctionTuple phi{p, q};
    const double sup = sup_circle(p).upper, min_mod = min_modulus_closed_disk(p).lower;
    const double eta_lower = eta(p, q).lower, eps_sq = estimate_epsilon(phi).eps_sq_lower;
    for (int k = 0; k < 10000; ++k) {
      const Complex on_circle = std::polar(1.0, angle(rng)), w = random_disk_point(rng);
      const double pw = std::abs(oracle::eval(test::coeffs(p), w)), qw = std::abs(oracle::eval(test::coeffs(q), w));
      worst = std::max({worst, std::abs(oracle::eval(test::coeffs(p), on_circle)) - sup, min_mod - pw,
                        eta_lower - (pw + qw), eps_sq - (pw * pw + qw * qw)});
    }
  }
  return {worst <= 1e-12, "largest violation " + num(worst)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 local Dirichlet oracle", ldi_oracle},
      {"2 product inequalities", product_inequality},
      {"3 Koszul identities", koszul},
      {"4 worked corona instances", worked_corona},
      {"5 Bezout preservation", [] { return bezout_and_chain(false); }},
      {"6 bound chain", [] { return bezout_and_chain(true); }},
      {"7 stable-rank curated suite", stable_rank},
      {"8 multiplier sandwich", sandwich},
      {"9 certified-bound soundness", soundness},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
