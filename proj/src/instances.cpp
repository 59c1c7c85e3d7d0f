#include "dmu/instances.hpp"

#include <cmath>
#include <numbers>

namespace dmu {

Polynomial random_polynomial(Rng& rng, int degree) {
  std::normal_distribution<double> gauss;
  const double scale = 1.0 / std::sqrt(double(degree + 1));
  Eigen::VectorXcd c(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    const double re = gauss(rng);
    c[k] = scale * Complex(re, gauss(rng));
  }
  while (std::abs(c[degree]) < 1e-3) c[degree] = Complex(scale, 0.0);
  return Polynomial(c);
}

UnitCirclePoint random_circle_point(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return UnitCirclePoint::polar(angle(rng));
}

Complex random_disk_point(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = std::sqrt(unit(rng));
  return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

AtomicMeasure random_measure(Rng& rng, int atoms) {
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::vector<Atom> out;
  while (int(out.size()) < atoms) {
    const UnitCirclePoint z = random_circle_point(rng);
    const double w = weight(rng);
    bool distinct = true;
    for (const auto& a : out) distinct = distinct && std::abs(a.zeta.value() - z.value()) > 1e-3;
    if (distinct) out.push_back({z, w});
  }
  return AtomicMeasure(std::move(out));
}

std::vector<CoronaProblem> exact_corona_instances(int count, std::uint64_t seed, int max_entries, int max_degree,
                                                  double min_eps_sq) {
  Rng rng(seed);
  std::uniform_int_distribution<int> entries(2, max_entries), degree(1, max_degree), atoms(1, 3);
  std::vector<CoronaProblem> out;
  while (int(out.size()) < count) {
    const int n = entries(rng);
    std::vector<Polynomial> phi;
    for (int j = 0; j < n; ++j) phi.push_back(random_polynomial(rng, degree(rng)));
    FunctionTuple tuple(std::move(phi));
    AtomicMeasure mu = random_measure(rng, atoms(rng));
    if (estimate_epsilon(tuple).eps_sq_lower < min_eps_sq) continue;
    if (bezout_base(tuple).mode != SolveMode::Exact) continue;
    out.push_back({std::move(tuple), std::move(mu)});
  }
  return out;
}

std::vector<StableRankCase> curated_stable_rank_cases() {
  const Polynomial z{0.0, 1.0};
  const Polynomial one{1.0};
  const Complex i(0.0, 1.0);
  const auto d1 = AtomicMeasure::delta(1.0);
  const auto two = AtomicMeasure({Atom{UnitCirclePoint(1.0), 1.0}, Atom{UnitCirclePoint(-1.0), 0.5}});
  return {
      {"case1_z_1mz", z, one - z, d1},
      {"case2_1mz_1", one - z, one, d1},
      {"case1_2pz_1", Polynomial{2.0, 1.0}, one, d1},
      {"constant_f", Polynomial{3.0}, z, AtomicMeasure::delta(-1.0)},
      {"two_atoms_z_1mz", z, one - z, two},
      {"square_at_i", z * z, one - z, AtomicMeasure::delta(i)},
      {"case2_zm1_zp1", z - one, z + one, d1},
      {"cube_two_atoms", z * z * z, one - z, AtomicMeasure({Atom{UnitCirclePoint(1.0), 1.0}, Atom{UnitCirclePoint(i), 2.0}})},
      {"shifted_root", Polynomial{0.5, 1.0}, z * z, AtomicMeasure::delta(std::polar(1.0, std::numbers::pi / 3))},
      {"case2_both_atoms", one - z * z, z, two},
  };
}

}  // namespace dmu
