#ifndef DMU_BOUNDS_HPP
#define DMU_BOUNDS_HPP

#include <cmath>
#include <numbers>

#include "dmu/polynomial.hpp"
#include "dmu/tuple.hpp"

namespace dmu {

/// Default circle grid size: max(4096, 2048 * degree). At this size the
/// relative width of sup_circle is below 1e-6.
int default_resolution(int degree) noexcept;

/// Encloses sup over the unit circle of sum_j |phi_j|^2.
///
/// The sum is a nonnegative trigonometric polynomial t of degree d. At a
/// maximiser t' vanishes, and the nearest grid point is within pi/N, so
/// Bernstein (|t''| <= d^2 sup t) gives sup t <= max_grid / (1 - (d pi/N)^2 / 2).
/// Requires N > pi * d.
CertifiedBound sup_circle_sum_sq(const FunctionTuple& phi, int resolution);
CertifiedBound sup_circle_sum_sq(const FunctionTuple& phi);

/// Encloses sup_{|z|=1} |p(z)|, which is also the sup over the closed disk.
CertifiedBound sup_circle(const Polynomial& p, int resolution);
CertifiedBound sup_circle(const Polynomial& p);

/// Encloses min_{|z|<=1} |p(z)|. If p has a root in the closed disk the
/// bound is [0, residual at that root]. Otherwise the circle grid is doubled
/// (up to 2^20 nodes) until the Bernstein correction costs at most half of
/// the grid minimum. If the grid stays inconclusive the lower bound falls
/// back to |c| prod(|r_i| - 1) over the computed roots.
CertifiedBound min_modulus_closed_disk(const Polynomial& p);

/// Result of scanning a polar grid that covers the closed disk.
struct DiskGridScan {
  double min_value = 0.0;
  Complex argmin{};
  double covering_radius = 0.0;  // every disk point lies this close to a node
  int radial = 0;
  int angular = 0;
};

/// Evaluates `f` on radii m/radial (m = 0..radial) and angles 2 pi k/angular.
/// Any point of the closed disk is within 1/(2 radial) + pi/angular of a node.
template <typename F>
DiskGridScan scan_disk(F&& f, int radial, int angular) {
  DiskGridScan out;
  out.radial = radial;
  out.angular = angular;
  out.covering_radius = 0.5 / radial + std::numbers::pi / angular;
  out.min_value = f(Complex(0.0));
  out.argmin = Complex(0.0);
  for (int k = 0; k < angular; ++k) {
    const Complex dir = std::polar(1.0, 2.0 * std::numbers::pi * k / angular);
    for (int m = 1; m <= radial; ++m) {
      const Complex z = (double(m) / radial) * dir;
      const double v = f(z);
      if (v < out.min_value) {
        out.min_value = v;
        out.argmin = z;
      }
    }
  }
  return out;
}

}  // namespace dmu

#endif
