#include "dmu/suite.hpp"

#include <algorithm>
#include <cmath>

#include "dmu/bounds.hpp"
#include "dmu/instances.hpp"
#include "dmu/koszul.hpp"
#include "dmu/roots.hpp"
#include "dmu/stable_rank.hpp"

namespace dmu {

namespace {

CheckItem worst_item(std::string name, double worst, double limit, std::string detail) {
  return {std::move(name), worst <= limit, worst, std::move(detail)};
}

CheckItem ldi_oracle(const SuiteConfig& c) {
  Rng rng(c.seed);
  std::uniform_int_distribution<int> degree(0, 15);
  double worst = 0.0;
  for (int i = 0; i < c.ldi_samples; ++i) {
    const Polynomial p = random_polynomial(rng, degree(rng));
    const UnitCirclePoint zeta = random_circle_point(rng);
    const double exact = local_dirichlet(p, zeta);
    const double quad = local_dirichlet_quadrature(p, zeta, 1e-6 * std::max(1.0, exact));
    worst = std::max(worst, std::abs(exact - quad) / std::max(1e-4, 1e-3 * exact));
  }
  return worst_item("ldi_oracle", worst, 1.0, "max |closed form - quadrature| / max(1e-4, 1e-3 value)");
}

CheckItem product_inequality(const SuiteConfig& c) {
  Rng rng(c.seed + 1);
  std::uniform_int_distribution<int> degree(0, 6);
  double worst = 0.0;
  for (int i = 0; i < c.product_samples; ++i) {
    const Polynomial phi = random_polynomial(rng, degree(rng));
    const UnitCirclePoint zeta = random_circle_point(rng);
    Polynomial f = random_polynomial(rng, degree(rng));
    if (i % 4 == 0) f = f - eval(f, zeta.value());
    const auto s = product_inequality_slacks(phi, f, zeta);
    worst = std::max({worst, -s.a, -s.b, s.c ? -*s.c : 0.0});
  }
  return worst_item("product_inequality", worst, 1e-10, "largest negated slack");
}

CheckItem koszul_identities(const SuiteConfig& c) {
  Rng rng(c.seed + 2);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int n = 2; n <= c.koszul_max_n; ++n) {
    Eigen::VectorXcd a(n), d(n);
    for (int k = 0; k < n; ++k) {
      const double ar = gauss(rng), ai = gauss(rng), dr = gauss(rng), di = gauss(rng);
      a[k] = Complex(ar, ai);
      d[k] = Complex(dr, di);
    }
    const auto dev = check_identities(a, d, c.seed);
    const double scale = 1.0 + a.squaredNorm() + a.norm() * d.norm();
    worst = std::max({worst, dev.kernel / scale, dev.hermitian / scale, dev.bilinear / scale});
  }
  return worst_item("koszul_identities", worst, 1e-12, "max deviation / (1 + |A|^2 + |A| |D|)");
}

CheckItem worked_corona() {
  const Polynomial z{0.0, 1.0};
  const Polynomial one{1.0};
  const FunctionTuple phi{z, one - z};
  const auto mu = AtomicMeasure::delta(1.0);
  const FunctionTuple expected{Polynomial{2.0} - z, one - z};
  const auto cert = solve({phi, mu});
  const double dev = max_coeff_diff(cert.solution, expected);
  return worst_item("worked_corona", dev, 1e-12, "B = (2 - z, 1 - z) on delta_1");
}

std::vector<CheckItem> corona_corpus(const SuiteConfig& c) {
  double residual = 0.0, atom_gap = 0.0, chain_gap = -std::numeric_limits<double>::infinity();
  for (const auto& p : exact_corona_instances(c.corona_instances, c.seed + 3)) {
    const auto cert = solve(p);
    residual = std::max(residual, cert.residual_max_coeff);
    for (const auto& rec : cert.chain) residual = std::max(residual, rec.residual_max_coeff);
    for (const auto& atom : p.measure) {
      const double at = (p.tuple / cert.scaling).sum_sq(atom.zeta.value());
      atom_gap = std::max(atom_gap, cert.epsilon.eps_sq_lower - 1e-10 - at);
    }
    for (const auto& rec : cert.chain) chain_gap = std::max(chain_gap, rec.b_norm_lower - rec.chain_bound);
  }
  return {worst_item("bezout_preservation", residual, 1e-9, "max coefficient of Phi B^T - 1 over all stages"),
          worst_item("atom_lower_bound", atom_gap, 0.0, "max of eps^2 - 1e-10 - |Phi(zeta_i)|^2"),
          worst_item("bound_chain", chain_gap, 1e-9, "max of ||M_B|| lower - (1/eps) sqrt(2 + 16 ||M_E||^2)")};
}

CheckItem stable_rank_curated() {
  int failures = 0;
  for (const auto& sr : curated_stable_rank_cases()) {
    const auto w = reduce(sr.f, sr.h, sr.measure);
    if (!w || !verify_witness(sr.f, sr.h, *w).pass() || w->root_margin < kDefaultRootMargin) ++failures;
  }
  return {"stable_rank_curated", failures == 0, double(failures), "pairs without a verified reducer"};
}

CheckItem mult_sandwich(const SuiteConfig& c) {
  Rng rng(c.seed + 4);
  std::uniform_int_distribution<int> degree(0, 4), atoms(1, 3);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10; ++i) {
    const FunctionTuple phi{random_polynomial(rng, degree(rng)), random_polynomial(rng, degree(rng))};
    const auto est = mult_norm_estimate(phi, random_measure(rng, atoms(rng)), 4, c.seed);
    worst = std::max(worst, est.lower - est.upper);
  }
  return worst_item("mult_sandwich", worst, 1e-9, "max of lower - upper");
}

CheckItem certified_soundness(const SuiteConfig& c) {
  Rng rng(c.seed + 5);
  std::uniform_int_distribution<int> degree(1, 6);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < c.soundness_instances; ++i) {
    const Polynomial p = random_polynomial(rng, degree(rng));
    const Polynomial q = random_polynomial(rng, degree(rng));
    const FunctionTuple phi{p, q};
    const double sup = sup_circle(p).upper;
    const double min_mod = min_modulus_closed_disk(p).lower;
    const double eta_lower = eta(p, q).lower;
    const double eps_sq = estimate_epsilon(phi).eps_sq_lower;
    for (int k = 0; k < c.soundness_points; ++k) {
      const Complex on_circle = std::polar(1.0, angle(rng));
      const Complex in_disk = random_disk_point(rng);
      const double pv = std::abs(eval(p, in_disk));
      worst = std::max({worst, std::abs(eval(p, on_circle)) - sup, min_mod - pv,
                        eta_lower - (pv + std::abs(eval(q, in_disk))), eps_sq - phi.sum_sq(in_disk)});
    }
  }
  return worst_item("certified_soundness", worst, 1e-12, "largest violation by a random point evaluation");
}

}  // namespace

VerificationReport run_suite(const SuiteConfig& config) {
  VerificationReport rep;
  rep.items.push_back(ldi_oracle(config));
  rep.items.push_back(product_inequality(config));
  rep.items.push_back(koszul_identities(config));
  rep.items.push_back(worked_corona());
  for (auto& item : corona_corpus(config)) rep.items.push_back(std::move(item));
  rep.items.push_back(stable_rank_curated());
  rep.items.push_back(mult_sandwich(config));
  rep.items.push_back(certified_soundness(config));
  std::sort(rep.items.begin(), rep.items.end(), [](const CheckItem& a, const CheckItem& b) { return a.name < b.name; });
  return rep;
}

}  // namespace dmu
