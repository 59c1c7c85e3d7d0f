#include "dmu/bounds.hpp"

#include <algorithm>
#include <limits>

#include "dmu/roots.hpp"

namespace dmu {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Floating-point slack for evaluating sum_j |phi_j|^2 by Horner on the
// closed disk: each |p| carries absolute error <= 2 (d+1) eps * l1(p).
double rounding_slack(const FunctionTuple& phi) {
  double s = 0.0;
  for (const auto& p : phi) {
    const double l1 = p.l1_norm();
    s += 4.0 * (p.degree() + 2) * kEps * l1 * l1;
  }
  return s;
}

double bernstein_fraction(int degree, int resolution) {
  const double x = degree * std::numbers::pi / resolution;
  return 0.5 * x * x;
}

constexpr int kMaxMinModulusResolution = 1 << 20;

}  // namespace

int default_resolution(int degree) noexcept { return std::max(4096, 2048 * std::max(degree, 0)); }

CertifiedBound sup_circle_sum_sq(const FunctionTuple& phi, int resolution) {
  const int d = std::max(phi.max_degree(), 0);
  if (resolution <= std::numbers::pi * d || resolution < 1)
    throw Error(ErrorCode::ResolutionTooSmall,
                "circle grid of " + std::to_string(resolution) + " points is too coarse for degree " +
                    std::to_string(d));
  double max_grid = 0.0;
  for (int k = 0; k < resolution; ++k) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / resolution);
    max_grid = std::max(max_grid, phi.sum_sq(z));
  }
  const double slack = rounding_slack(phi);
  CertifiedBound b;
  b.lower = std::max(0.0, max_grid - slack);
  b.upper = (max_grid + slack) / (1.0 - bernstein_fraction(d, resolution));
  b.method = "circle-grid N=" + std::to_string(resolution) + " second-order Bernstein";
  return b;
}

CertifiedBound sup_circle_sum_sq(const FunctionTuple& phi) {
  return sup_circle_sum_sq(phi, default_resolution(phi.max_degree()));
}

CertifiedBound sup_circle(const Polynomial& p, int resolution) {
  auto b = sup_circle_sum_sq(FunctionTuple{p}, resolution);
  b.lower = std::sqrt(b.lower);
  b.upper = std::sqrt(b.upper);
  return b;
}

CertifiedBound sup_circle(const Polynomial& p) { return sup_circle(p, default_resolution(p.degree())); }

CertifiedBound min_modulus_closed_disk(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "min modulus of the zero polynomial");
  if (p.degree() == 0) {
    const double c = std::abs(p.coeff(0));
    return {c, c, "constant"};
  }

  double in_disk_residual = std::numeric_limits<double>::infinity();
  const auto rts = roots(p);
  double root_product = std::abs(p.leading());
  for (const Complex& r : rts) {
    if (std::abs(r) <= 1.0) in_disk_residual = std::min(in_disk_residual, std::abs(eval(p, r)));
    root_product *= std::abs(r) - 1.0;
  }
  if (std::isfinite(in_disk_residual)) return {0.0, in_disk_residual, "root-in-disk"};

  // Zero-free on the closed disk: 1/p is analytic there, so the minimum of |p|
  // sits on the circle. At a minimiser of t = |p|^2 we have t' = 0, hence
  // min_grid t <= min t + (d pi/N)^2 / 2 * sup t.
  // The grid is refined until the correction costs at most half of min_grid.
  const int d = p.degree();
  const FunctionTuple single{p};
  const double slack = rounding_slack(single);
  int n = default_resolution(d);
  double min_grid = 0.0, lower_sq = 0.0;
  for (;; n *= 2) {
    min_grid = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
      min_grid = std::min(min_grid, std::norm(eval(p, z)));
    }
    const double sup_sq = sup_circle_sum_sq(single, n).upper;
    lower_sq = min_grid - bernstein_fraction(d, n) * sup_sq - slack;
    if (lower_sq >= 0.5 * min_grid || n >= kMaxMinModulusResolution) break;
  }
  CertifiedBound b;
  b.lower = std::sqrt(std::max(0.0, lower_sq));
  b.upper = std::sqrt(min_grid + slack);
  b.method = "circle-grid N=" + std::to_string(n) + " min-modulus";
  if (b.lower == 0.0) {
    // Grid inconclusive (roots crowd the circle): |p| >= |c| prod(|r_i| - 1)
    // on the disk, from the computed roots.
    b.lower = std::min(root_product, b.upper);
    b.method = "root-product";
  }
  return b;
}

}  // namespace dmu
