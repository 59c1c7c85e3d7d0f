#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "dmu/dirichlet.hpp"

namespace dmu {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename F>
Panel gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double sum = f(c - x) + f(c + x);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

// Global adaptive integration over consecutive breakpoints. `cells` counts
// every panel ever created against the shared cap.
template <typename F>
Panel integrate(F&& f, const std::vector<double>& breaks, double tol, std::int64_t& cells, std::int64_t cap) {
  std::priority_queue<Panel> heap;
  double value = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Panel p = gk15(f, breaks[i], breaks[i + 1]);
    ++cells;
    value += p.value;
    error += p.error;
    heap.push(p);
  }
  while (error > tol) {
    if (cells + 2 > cap) return {breaks.front(), breaks.back(), value, error};
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    cells += 2;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  return {breaks.front(), breaks.back(), value, error};
}

}  // namespace

QuadratureResult local_dirichlet_quadrature_detailed(const Polynomial& p, const UnitCirclePoint& zeta, double tol,
                                                     std::int64_t cell_cap) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
  const Polynomial dp = derivative(p);
  if (dp.is_zero()) return {0.0, 0.0, 0};

  // Rotate so the singular boundary point sits at w = 1: z = zeta * w.
  const Complex rot = zeta.value();
  const double pi = std::numbers::pi;
  // Integral over the disk in (r, theta) of r |p'|^2 (1 - r^2)/|1 - w|^2, later
  // divided by pi. Split the error budget evenly between the two levels.
  const double raw_tol = pi * tol;
  const double inner_tol = 0.5 * raw_tol;
  const double outer_tol = 0.5 * raw_tol;

  std::int64_t cells = 0;
  double inner_error_total = 0.0;
  bool capped = false;

  auto radial = [&](double r) {
    const double one_minus_r2 = (1.0 - r) * (1.0 + r);
    auto angular = [&](double theta) {
      const Complex w = std::polar(r, theta);
      return std::norm(eval(dp, rot * w)) * one_minus_r2 / std::norm(Complex(1.0) - w);
    };
    // The Poisson kernel peaks over a window of width ~ (1 - r) around 0.
    std::vector<double> breaks{-pi};
    std::vector<double> positive;
    for (double s = std::max(1.0 - r, 1e-12); s < pi; s *= 4.0) positive.push_back(s);
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) breaks.push_back(-*it);
    breaks.push_back(0.0);
    breaks.insert(breaks.end(), positive.begin(), positive.end());
    breaks.push_back(pi);
    const Panel in = integrate(angular, breaks, inner_tol, cells, cell_cap);
    if (in.error > inner_tol) capped = true;
    inner_error_total = std::max(inner_error_total, in.error);
    return r * in.value;
  };

  std::vector<double> breaks{0.0};
  for (int k = 1; k <= 30; ++k) breaks.push_back(1.0 - std::ldexp(1.0, -k));
  breaks.push_back(1.0);
  const Panel out = integrate(radial, breaks, outer_tol, cells, cell_cap);

  QuadratureResult res;
  res.value = out.value / pi;
  res.error_estimate = (out.error + inner_error_total) / pi;
  res.cells = cells;
  if (capped || out.error > outer_tol)
    throw Error(ErrorCode::QuadratureCapExceeded,
                "quadrature refinement cap of " + std::to_string(cell_cap) + " cells exceeded", res.value);
  return res;
}

double local_dirichlet_quadrature(const Polynomial& p, const UnitCirclePoint& zeta, double tol) {
  return local_dirichlet_quadrature_detailed(p, zeta, tol).value;
}

}  // namespace dmu
