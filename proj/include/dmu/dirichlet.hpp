#ifndef DMU_DIRICHLET_HPP
#define DMU_DIRICHLET_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dmu/bounds.hpp"
#include "dmu/polynomial.hpp"
#include "dmu/tuple.hpp"

namespace dmu {

struct Atom {
  UnitCirclePoint zeta;
  double weight = 1.0;
};

/// mu = sum_i a_i delta_{zeta_i}, atoms kept in insertion order. Weights are
/// strictly positive and atoms pairwise at least 1e-9 apart. The empty measure
/// is allowed and gives the plain H^2 norm.
class AtomicMeasure {
public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  static AtomicMeasure delta(Complex zeta, double weight = 1.0) {
    return AtomicMeasure({Atom{UnitCirclePoint(zeta), weight}});
  }

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  auto begin() const noexcept { return atoms_.begin(); }
  auto end() const noexcept { return atoms_.end(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  /// The partial measure mu_k made of the first k atoms.
  AtomicMeasure prefix(std::size_t k) const;

private:
  std::vector<Atom> atoms_;
};

/// D_zeta(p) = ||(p - p(zeta)) / (z - zeta)||^2_{H^2}.
double local_dirichlet(const Polynomial& p, const UnitCirclePoint& zeta);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t cells = 0;
};

inline constexpr std::int64_t kQuadratureCellCap = std::int64_t(1) << 24;

/// Area-integral form of the local Dirichlet integral,
///   (1/pi) * int_D |p'(z)|^2 (1 - |z|^2) / |zeta - z|^2 dx dy,
/// by nested adaptive Gauss-Kronrod in polar coordinates with dyadic
/// breakpoints toward zeta. Throws QuadratureCapExceeded (carrying the best
/// estimate) if `cell_cap` subintervals do not reach `tol`.
QuadratureResult local_dirichlet_quadrature_detailed(const Polynomial& p, const UnitCirclePoint& zeta, double tol,
                                                     std::int64_t cell_cap = kQuadratureCellCap);
double local_dirichlet_quadrature(const Polynomial& p, const UnitCirclePoint& zeta, double tol);

/// ||p||^2_{D(mu)} = ||p||^2_{H^2} + sum_i a_i D_{zeta_i}(p).
double dmu_norm_sq(const Polynomial& p, const AtomicMeasure& mu);

/// Norm squared of (phi_j)_j in the direct sum of copies of D(mu).
double tuple_dmu_norm_sq(const FunctionTuple& phi, const AtomicMeasure& mu);

struct MultiplierNormEstimate {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  int trial_degree = -1;
  CertifiedBound s_inf;             // sup over the circle of sum_j |phi_j|^2
  std::vector<double> t_per_atom;   // sum_j D_{zeta_i}(phi_j)
};

/// Guaranteed upper bound on ||M_Phi|| over D(mu):
///   sqrt(2 S_inf + 4 sum_i max(a_i, 1) T_i).
MultiplierNormEstimate mult_norm_upper(const FunctionTuple& phi, const AtomicMeasure& mu);

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Rayleigh-quotient lower bound over the monomials z^m (m <= trial_degree)
/// and 64 seeded random polynomials of degree <= trial_degree.
MultiplierNormEstimate mult_norm_lower(const FunctionTuple& phi, const AtomicMeasure& mu, int trial_degree,
                                       std::uint64_t seed = kDefaultSeed);

/// Both sides at once.
MultiplierNormEstimate mult_norm_estimate(const FunctionTuple& phi, const AtomicMeasure& mu, int trial_degree,
                                          std::uint64_t seed = kDefaultSeed);

/// Slacks (right side minus left side) of the three product inequalities for
/// local Dirichlet integrals, using the certified upper bound for ||phi||_inf:
///   A: D(phi f) <= 2 (||phi||^2 D(f) + |f(zeta)|^2 D(phi))
///   B: |f(zeta)|^2 D(phi) <= 2 (||phi||^2 D(f) + D(phi f))
///   C: D(phi f) <= ||phi||^2 D(f), only when |f(zeta)| <= 1e-12.
struct ProductInequalitySlacks {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> c;
};

ProductInequalitySlacks product_inequality_slacks(const Polynomial& phi, const Polynomial& f, const UnitCirclePoint& zeta);

}  // namespace dmu

#endif
