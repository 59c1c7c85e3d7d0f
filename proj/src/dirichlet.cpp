#include "dmu/dirichlet.hpp"

#include <algorithm>
#include <random>

namespace dmu {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const double w = atoms_[i].weight;
    if (!(w > 0.0) || !std::isfinite(w))
      throw Error(ErrorCode::NonpositiveWeight, "atom " + std::to_string(i) + " has nonpositive weight");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(atoms_[i].zeta.value() - atoms_[j].zeta.value()) < 1e-9)
        throw Error(ErrorCode::DuplicateAtom,
                    "atoms " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
}

AtomicMeasure AtomicMeasure::prefix(std::size_t k) const {
  AtomicMeasure m;
  m.atoms_.assign(atoms_.begin(), atoms_.begin() + std::ptrdiff_t(std::min(k, atoms_.size())));
  return m;
}

double local_dirichlet(const Polynomial& p, const UnitCirclePoint& zeta) {
  return h2_norm_sq(divide_at(p, zeta).quotient);
}

double dmu_norm_sq(const Polynomial& p, const AtomicMeasure& mu) {
  double s = h2_norm_sq(p);
  for (const auto& atom : mu) s += atom.weight * local_dirichlet(p, atom.zeta);
  return s;
}

double tuple_dmu_norm_sq(const FunctionTuple& phi, const AtomicMeasure& mu) {
  double s = 0.0;
  for (const auto& p : phi) s += dmu_norm_sq(p, mu);
  return s;
}

MultiplierNormEstimate mult_norm_upper(const FunctionTuple& phi, const AtomicMeasure& mu) {
  MultiplierNormEstimate est;
  est.s_inf = sup_circle_sum_sq(phi);
  double weighted = 0.0;
  for (const auto& atom : mu) {
    double t = 0.0;
    for (const auto& p : phi) t += local_dirichlet(p, atom.zeta);
    est.t_per_atom.push_back(t);
    weighted += std::max(atom.weight, 1.0) * t;
  }
  est.lower = 0.0;
  est.upper = std::sqrt(2.0 * est.s_inf.upper + 4.0 * weighted);
  return est;
}

MultiplierNormEstimate mult_norm_lower(const FunctionTuple& phi, const AtomicMeasure& mu, int trial_degree,
                                       std::uint64_t seed) {
  if (trial_degree < 0) throw Error(ErrorCode::InvalidArgument, "trial degree must be nonnegative");
  MultiplierNormEstimate est;
  est.trial_degree = trial_degree;
  double best_sq = 0.0;
  auto consider = [&](const Polynomial& f) {
    const double denom = dmu_norm_sq(f, mu);
    if (denom > 0.0) best_sq = std::max(best_sq, tuple_dmu_norm_sq(phi * f, mu) / denom);
  };
  for (int m = 0; m <= trial_degree; ++m) consider(Polynomial::monomial(m));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(0, trial_degree);
  for (int trial = 0; trial < 64; ++trial) {
    const int d = degree(rng);
    Eigen::VectorXcd c(d + 1);
    for (int k = 0; k <= d; ++k) {
      const double re = unit(rng);
      c[k] = Complex(re, unit(rng));
    }
    const double norm = c.norm();
    if (norm == 0.0) continue;
    consider(Polynomial(Eigen::VectorXcd(c / norm)));
  }
  est.lower = std::sqrt(best_sq);
  return est;
}

MultiplierNormEstimate mult_norm_estimate(const FunctionTuple& phi, const AtomicMeasure& mu, int trial_degree,
                                          std::uint64_t seed) {
  MultiplierNormEstimate est = mult_norm_upper(phi, mu);
  est.lower = mult_norm_lower(phi, mu, trial_degree, seed).lower;
  est.trial_degree = trial_degree;
  return est;
}

ProductInequalitySlacks product_inequality_slacks(const Polynomial& phi, const Polynomial& f, const UnitCirclePoint& zeta) {
  const double sup = sup_circle(phi).upper;
  const double sup_sq = sup * sup;
  const double d_f = local_dirichlet(f, zeta);
  const double d_phi = local_dirichlet(phi, zeta);
  const double d_prod = local_dirichlet(phi * f, zeta);
  const double f_at = std::norm(eval(f, zeta.value()));

  ProductInequalitySlacks s;
  s.a = 2.0 * (sup_sq * d_f + f_at * d_phi) - d_prod;
  s.b = 2.0 * (sup_sq * d_f + d_prod) - f_at * d_phi;
  if (std::sqrt(f_at) <= 1e-12) s.c = sup_sq * d_f - d_prod;
  return s;
}

}  // namespace dmu
