#ifndef DMU_SUITE_HPP
#define DMU_SUITE_HPP

#include <cstdint>

#include "dmu/corona.hpp"

namespace dmu {

/// Size knobs of the property corpus run by `run_suite`.
struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  int ldi_samples = 20;
  int product_samples = 200;
  int koszul_max_n = 20;
  int corona_instances = 10;
  int soundness_instances = 4;
  int soundness_points = 1000;
};

/// Deterministic property checks across every module; items are sorted by
/// name. The report passes iff every item passes.
VerificationReport run_suite(const SuiteConfig& config = {});

}  // namespace dmu

#endif
