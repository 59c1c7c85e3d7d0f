#include "dmu/roots.hpp"

#include <limits>
#include <numeric>
#include <optional>

namespace dmu {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 500;

struct HornerResult {
  Complex value;
  Complex slope;
  double magnitude_bound;  // sum_k |a_k| |z|^k
};

HornerResult horner_with_slope(const Eigen::VectorXcd& a, Complex z) {
  Complex v(0.0), dv(0.0);
  double b = 0.0;
  const double rz = std::abs(z);
  for (Eigen::Index k = a.size() - 1; k >= 0; --k) {
    dv = dv * z + v;
    v = v * z + a[k];
    b = b * rz + std::abs(a[k]);
  }
  return {v, dv, b};
}

std::optional<std::vector<Complex>> aberth(const Eigen::VectorXcd& a) {
  const int n = int(a.size()) - 1;
  const double radius = std::pow(std::abs(a[0]) / std::abs(a[n]), 1.0 / n);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
  std::vector<char> frozen(n, 0);

  const double stop = 8.0 * (n + 1) * kEps;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool all_frozen = true;
    for (int k = 0; k < n; ++k) {
      if (frozen[k]) continue;
      const auto h = horner_with_slope(a, z[k]);
      if (std::abs(h.value) <= stop * h.magnitude_bound) {
        frozen[k] = 1;
        continue;
      }
      all_frozen = false;
      if (h.slope == Complex(0.0)) {
        z[k] *= Complex(1.0 + 1e-8, 1e-8);
        continue;
      }
      const Complex ratio = h.value / h.slope;
      Complex repulsion(0.0);
      for (int j = 0; j < n; ++j)
        if (j != k && z[j] != z[k]) repulsion += 1.0 / (z[k] - z[j]);
      z[k] -= ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag())) return std::nullopt;
    }
    if (all_frozen) return z;
  }
  return std::nullopt;
}

std::vector<Complex> companion_roots(const Eigen::VectorXcd& a) {
  const Eigen::Index n = a.size() - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -a[i] / a[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// First `m` Taylor coefficients of p at c (p^(j)(c) / j!) via repeated
// synthetic division, paired with the matching magnitude scales.
void taylor_at(const Polynomial& p, Complex c, int m, std::vector<Complex>& coef, std::vector<double>& scale) {
  coef.assign(m, Complex(0.0));
  scale.assign(m, 0.0);
  Polynomial q = p;
  Eigen::VectorXd abs_coeffs = p.coeffs().cwiseAbs();
  const double rc = std::abs(c);
  for (int j = 0; j < m; ++j) {
    auto [value, quotient] = divide_at(q, c);
    coef[j] = value;
    q = std::move(quotient);
    // sum_k C(k, j) |a_k| |c|^(k-j) by the same recurrence on |coefficients|.
    double acc = 0.0;
    Eigen::VectorXd next = Eigen::VectorXd::Zero(std::max<Eigen::Index>(abs_coeffs.size() - 1, 0));
    for (Eigen::Index k = abs_coeffs.size() - 1; k >= 0; --k) {
      if (k < next.size()) next[k] = acc;
      acc = abs_coeffs[k] + rc * acc;
    }
    scale[j] = acc;
    abs_coeffs = next;
  }
}

void polish_clusters(const Polynomial& p, std::vector<Complex>& rts) {
  const std::size_t n = rts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double link = std::max(1e-6, 1e-4 * std::max(1.0, std::abs(rts[i])));
      if (std::abs(rts[i] - rts[j]) <= link) parent[find(i)] = find(j);
    }

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  std::vector<Complex> coef;
  std::vector<double> scale;
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    const int m = int(g.size());
    Complex centre(0.0);
    for (auto i : g) centre += rts[i];
    centre /= double(m);
    double diameter = 0.0;
    for (auto i : g)
      for (auto j : g) diameter = std::max(diameter, std::abs(rts[i] - rts[j]));

    // An m-fold root is a simple root of p^(m-1).
    Polynomial dq = p;
    for (int j = 1; j < m; ++j) dq = derivative(dq);
    const Polynomial ddq = derivative(dq);
    Complex c = centre;
    for (int it = 0; it < 50; ++it) {
      const Complex s = eval(ddq, c);
      if (s == Complex(0.0)) break;
      const Complex step = eval(dq, c) / s;
      c -= step;
      if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(c))) break;
    }
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) continue;
    if (std::abs(c - centre) > diameter + 1e-12) continue;

    taylor_at(p, c, m, coef, scale);
    bool multiple = true;
    for (int j = 0; j < m && multiple; ++j) multiple = std::abs(coef[j]) <= 1e-7 * scale[j];
    if (!multiple) continue;
    for (auto i : g) rts[i] = c;
  }
}

}  // namespace

std::vector<Complex> roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Complex> out;
  Eigen::Index low = 0;
  while (p.coeff(low) == Complex(0.0)) ++low;
  out.assign(std::size_t(low), Complex(0.0));
  const Polynomial q(Eigen::VectorXcd(p.coeffs().tail(p.size() - low)));
  if (q.degree() == 0) return out;
  if (q.degree() == 1) {
    out.push_back(-q.coeff(0) / q.coeff(1));
    return out;
  }
  auto found = aberth(q.coeffs());
  std::vector<Complex> rts = found ? std::move(*found) : companion_roots(q.coeffs());
  polish_clusters(q, rts);
  out.insert(out.end(), rts.begin(), rts.end());
  return out;
}

double root_margin(const Polynomial& p) {
  const auto rts = roots(p);
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : rts) m = std::min(m, std::abs(r) - 1.0);
  return m;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b, double tol) {
  auto normalized = [](const Polynomial& p) { return p.is_zero() ? p : p / Complex(p.max_abs_coeff()); };
  Polynomial x = normalized(a), y = normalized(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    if (r.max_abs_coeff() <= tol) r = Polynomial{};
    x = std::move(y);
    y = normalized(r);
  }
  if (x.is_zero()) return x;
  return x / x.leading();
}

Polynomial gcd(const FunctionTuple& phi, double tol) {
  Polynomial g;
  for (const auto& p : phi) {
    g = gcd(g, p, tol);
    if (g.degree() == 0) break;
  }
  return g;
}

Polynomial from_roots(const std::vector<Complex>& rts, Complex leading) {
  Polynomial p = Polynomial::constant(leading);
  for (const auto& r : rts) p *= Polynomial::linear_factor(r);
  return p;
}

}  // namespace dmu
