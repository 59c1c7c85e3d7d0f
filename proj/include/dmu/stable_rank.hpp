#ifndef DMU_STABLE_RANK_HPP
#define DMU_STABLE_RANK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmu/corona.hpp"
#include "dmu/dirichlet.hpp"

namespace dmu {

inline constexpr double kDefaultRootMargin = 1e-3;

/// Certified lower bound on inf_{|z|<=1} (|f| + |h|), from a polar grid with a
/// per-entry Lipschitz correction (sum_k k |c_k| for each of f and h). The grid
/// is refined (up to six times) until the bound is positive and within
/// `rel_gap` of the best grid value.
CertifiedBound eta(const Polynomial& f, const Polynomial& h, double rel_gap = 0.1);

struct UnimodularPair {
  Polynomial f;
  Polynomial h;
  AtomicMeasure measure;
  CertifiedBound eta_lower;

  /// Throws EtaNotPositive unless inf(|f| + |h|) is certified positive.
  static UnimodularPair make(Polynomial f, Polynomial h, AtomicMeasure measure);
};

struct Case1Result {
  std::pair<Polynomial, Polynomial> pair;  // (f, (f - f(zeta)) h)
  double certified_eta = 0.0;
};

/// Case f(zeta) != 0. The new pair stays unimodular with
///   inf(|f| + |(f - f(zeta)) h|) >= min(min(1, |f(zeta)|/2) eta, |f(zeta)|/2).
/// Throws CaseTwoRequired when |f(zeta)| < 1e-9.
Case1Result case1_transform(const Polynomial& f, const Polynomial& h, const UnitCirclePoint& zeta);
Case1Result case1_transform(const Polynomial& f, const Polynomial& h, const UnitCirclePoint& zeta, double eta_lower);

/// Case f(zeta) = 0: (f + h, h). A reducer g' of the new pair gives y = 1 + g'.
std::pair<Polynomial, Polynomial> case2_transform(const Polynomial& f, const Polynomial& h);

struct SearchBudget {
  int max_degree = 24;
  int max_iters = 20000;
  std::uint64_t seed = kDefaultSeed;
  double margin = kDefaultRootMargin;
};

/// Finds g with every root of F + g H at modulus >= 1 + budget.margin.
///
/// Layers, in order: g = 0 and small constants on a rational grid (only g = 0
/// when H is quadratic); exact members c (1 + z/w)^m of the zero-free family
/// matching F at the roots of H (deg H <= 2); targets u = P^m where P
/// Hermite-interpolates a branch of F^(1/m) at the roots of H, so u = F mod H;
/// finally a seeded random search with hill climbing on the smallest root
/// modulus. Every target is checked by exact division and a root margin.
/// Returns nullopt once the budget is exhausted.
std::optional<Polynomial> search_g(const Polynomial& F, const Polynomial& H, const SearchBudget& budget = {});

struct CaseStep {
  enum class Kind { Case1, Case2 };
  Kind kind;
  UnitCirclePoint zeta;
};

std::string to_string(CaseStep::Kind k);

struct ReductionWitness {
  Polynomial y;
  Polynomial u;  // f + y h
  double root_margin = 0.0;
  std::vector<CaseStep> case_trace;
  Polynomial final_g;  // reducer found for the fully transformed pair
};

/// Affine bookkeeping of the case transforms: a reducer g of the transformed
/// pair (F, H) gives y = offset + factor * g for the original pair.
struct TransformedPair {
  Polynomial F;
  Polynomial H;
  Polynomial offset;
  Polynomial factor = Polynomial::constant(1.0);
  std::vector<CaseStep> trace;
};

/// Applies the case split at each atom in stored order: Case 2 first when
/// |F(zeta)| < 1e-9, then Case 1.
TransformedPair transform_pair(const Polynomial& f, const Polynomial& h, const AtomicMeasure& mu);

/// Replays a recorded trace from (f, h).
TransformedPair replay(const Polynomial& f, const Polynomial& h, const std::vector<CaseStep>& trace);

/// Finds y with f + y h invertible in M(D(mu)), i.e. zero-free on a disk of
/// radius > 1. Throws EtaNotPositive if the pair is not certified unimodular.
std::optional<ReductionWitness> reduce(const Polynomial& f, const Polynomial& h, const AtomicMeasure& mu,
                                       const SearchBudget& budget = {});

/// Recomputes u = f + y h and the root margin; both must match the witness
/// within `tol`, and the margin must be positive.
VerificationReport verify_witness(const Polynomial& f, const Polynomial& h, const ReductionWitness& w,
                                  double tol = 1e-8);

}  // namespace dmu

#endif
