#ifndef DMU_CORONA_HPP
#define DMU_CORONA_HPP

#include <string>
#include <vector>

#include "dmu/dirichlet.hpp"
#include "dmu/tuple.hpp"

namespace dmu {

struct CoronaProblem {
  FunctionTuple tuple;
  AtomicMeasure measure;
};

/// Certified lower bound eps^2 <= inf over the closed disk of sum_j |phi_j|^2.
/// A zero bound with no common roots means the grid search was inconclusive.
struct EpsilonCertificate {
  double eps_sq_lower = 0.0;
  double grid_spacing = 0.0;   // covering radius of the final grid
  double gradient_bound = 0.0; // Lipschitz constant G of sum_j |phi_j|^2 on the disk
  double grid_min = 0.0;
  int refinements = 0;
  std::vector<Complex> common_roots_in_disk;

  bool inconclusive() const noexcept { return eps_sq_lower <= 0.0 && common_roots_in_disk.empty(); }
};

/// Common zeros in the closed disk come from the tuple's gcd. Otherwise a polar
/// grid with covering radius h certifies min_grid - h G, halving h up to six
/// times until the bound is positive.
EpsilonCertificate estimate_epsilon(const FunctionTuple& phi);

enum class SolveMode { Exact, Approx };

std::string to_string(SolveMode m);

struct BezoutBase {
  FunctionTuple solution;
  SolveMode mode = SolveMode::Exact;
  int degree = 0;              // common degree bound of the e_j
  double residual_max_coeff = 0.0;
  CertifiedBound residual_sup; // sup over the disk of |Phi E^T - 1|
};

/// Default degree cap 2 * max deg(phi_j) + 4.
int default_degree_cap(const FunctionTuple& phi) noexcept;

/// Minimum-norm polynomial solution of sum_j phi_j e_j = 1, searching
/// deg e_j <= d for d = 0, 1, ..., degree_cap. A tuple whose gcd has zeros only
/// outside the closed disk has no polynomial solution; it gets the
/// least-squares solution at degree_cap in APPROX mode.
BezoutBase bezout_base(const FunctionTuple& phi, int degree_cap);
BezoutBase bezout_base(const FunctionTuple& phi);

struct Normalized {
  FunctionTuple scaled;
  double scale = 1.0;
};

/// Divides Phi by s = mult_norm_upper(Phi, mu).upper so that ||M_Phi|| <= 1.
/// If (Phi/s) B^T = 1 then Phi (B/s)^T = 1.
Normalized normalize(const FunctionTuple& phi, const AtomicMeasure& mu);

/// One induction step at zeta, in closed form:
///   b_j = conj(phi_j(zeta))/|Phi(zeta)|^2
///         - (sum_i [phi_i - phi_i(zeta)] conj(phi_i(zeta)))/|Phi(zeta)|^2 * e_j.
/// Requires Phi E^T = 1 to `residual_tol` (pass a negative value to skip the
/// check) and |Phi(zeta)|^2 >= 1e-12.
FunctionTuple lift(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta,
                   double residual_tol = 1e-9);

/// Alternative step anchored on the lowest index m maximising |phi_m(zeta)|:
///   d_m = 1/phi_m(zeta) - (phi_m - phi_m(zeta))/phi_m(zeta) e_m,
///   d_j = -(phi_m - phi_m(zeta))/phi_m(zeta) e_j  (j != m).
FunctionTuple lift_anchor(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta,
                          double residual_tol = 1e-9);

struct ChainRecord {
  Atom atom;
  double phi_at_atom_sq = 0.0;  // |Phi_scaled(zeta_i)|^2
  double e_norm_upper = 0.0;    // ||M_E|| upper bound over mu_{i-1}
  double b_norm_lower = 0.0;    // ||M_B|| lower bound over mu_i
  double chain_bound = 0.0;  // (1/eps) sqrt(2 + 16 e_norm_upper^2)
  double residual_max_coeff = 0.0; // of Phi_scaled B^T - 1 after this step
};

struct CoronaCertificate {
  FunctionTuple solution;        // for the unscaled tuple
  double residual_max_coeff = 0.0;
  EpsilonCertificate epsilon;    // of the scaled tuple
  double scaling = 1.0;
  std::vector<ChainRecord> chain;
  SolveMode mode = SolveMode::Exact;
  int base_degree = 0;
  FunctionTuple base_solution;   // for the unscaled tuple
  CertifiedBound residual_sup;
};

struct SolveOptions {
  int degree_cap = -1;  // <0: default_degree_cap
  int trial_degree = 4;
  std::uint64_t seed = kDefaultSeed;
};

/// Runs the induction over the atoms in stored order. Throws
/// CoronaConditionFails when the tuple has a common zero in the closed disk.
CoronaCertificate solve(const CoronaProblem& problem, const SolveOptions& options = {});

struct CheckItem {
  std::string name;
  bool pass = false;
  double value = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> items;
  bool pass() const noexcept {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Recomputes the Bezout residual, the atom lower bounds
/// sum_j |phi_j(zeta_i)/s|^2 >= eps^2 - 1e-10, and every chain inequality.
VerificationReport verify_certificate(const CoronaProblem& problem, const CoronaCertificate& cert,
                                      double residual_tol = 1e-9);

}  // namespace dmu

#endif
