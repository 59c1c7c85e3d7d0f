#ifndef DMU_ROOTS_HPP
#define DMU_ROOTS_HPP

#include <vector>

#include "dmu/polynomial.hpp"
#include "dmu/tuple.hpp"

namespace dmu {

/// All deg(p) roots with multiplicity.
///
/// Aberth-Ehrlich simultaneous iteration from perturbed circle initializers
/// (500 sweeps max), falling back to companion-matrix eigenvalues. Clusters of
/// approximations around a multiple root are replaced by a Newton-polished
/// root of the appropriate derivative.
std::vector<Complex> roots(const Polynomial& p);

/// min |root| - 1; +infinity for a nonzero constant.
double root_margin(const Polynomial& p);

/// Monic greatest common divisor by Euclid's algorithm; remainders whose
/// coefficients fall below tol (relative to the operands) are treated as zero.
/// gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& a, const Polynomial& b, double tol = 1e-9);
Polynomial gcd(const FunctionTuple& phi, double tol = 1e-9);

/// prod_i (z - r_i) scaled by `leading`.
Polynomial from_roots(const std::vector<Complex>& rts, Complex leading = Complex(1.0));

}  // namespace dmu

#endif
