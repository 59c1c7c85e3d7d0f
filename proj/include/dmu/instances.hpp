#ifndef DMU_INSTANCES_HPP
#define DMU_INSTANCES_HPP

#include <random>
#include <string>
#include <vector>

#include "dmu/corona.hpp"
#include "dmu/stable_rank.hpp"

namespace dmu {

/// Seeded generators for property corpora. Every draw goes through the given
/// engine, so a fixed seed reproduces a corpus exactly.
using Rng = std::mt19937_64;

/// Degree exactly `degree`; coefficients standard complex Gaussian scaled by
/// 1/sqrt(degree + 1).
Polynomial random_polynomial(Rng& rng, int degree);
UnitCirclePoint random_circle_point(Rng& rng);
Complex random_disk_point(Rng& rng);
/// `atoms` distinct points with weights uniform on [0.5, 2].
AtomicMeasure random_measure(Rng& rng, int atoms);

/// Random corona problems (2 <= n <= max_entries, 1 <= deg <= max_degree,
/// 1 to 3 atoms) whose base solution is EXACT and whose certified
/// eps_sq_lower is at least `min_eps_sq`.
std::vector<CoronaProblem> exact_corona_instances(int count, std::uint64_t seed, int max_entries = 4,
                                                  int max_degree = 4, double min_eps_sq = 0.01);

struct StableRankCase {
  std::string name;
  Polynomial f;
  Polynomial h;
  AtomicMeasure measure;
};

/// Fixed pairs exercising both cases of the reduction.
std::vector<StableRankCase> curated_stable_rank_cases();

}  // namespace dmu

#endif
