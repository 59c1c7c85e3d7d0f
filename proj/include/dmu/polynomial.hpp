#ifndef DMU_POLYNOMIAL_HPP
#define DMU_POLYNOMIAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "dmu/error.hpp"

namespace dmu {

/// Complex polynomial on the closed unit disk, stored by ascending Taylor
/// coefficients (index k holds the coefficient of z^k).
///
/// The stored form is canonical: exact trailing zeros are stripped, so the zero
/// polynomial has no coefficients and degree() == -1 stands in for -infinity.
template <typename RealT>
class BasicPolynomial {
public:
  using Real = RealT;
  using Scalar = std::complex<Real>;
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicPolynomial() = default;

  explicit BasicPolynomial(Coeffs coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

  BasicPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(Eigen::Index(coeffs.size())) {
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.data());
    canonicalize();
  }

  static BasicPolynomial from_vector(const std::vector<Scalar>& c) {
    Coeffs v(Eigen::Index(c.size()));
    for (std::size_t k = 0; k < c.size(); ++k) v[Eigen::Index(k)] = c[k];
    return BasicPolynomial(std::move(v));
  }

  static BasicPolynomial constant(Scalar c) { return BasicPolynomial{c}; }

  static BasicPolynomial monomial(int power, Scalar c = Scalar(1)) {
    Coeffs v = Coeffs::Zero(power + 1);
    v[power] = c;
    return BasicPolynomial(std::move(v));
  }

  /// z - a
  static BasicPolynomial linear_factor(Scalar a) { return BasicPolynomial{-a, Scalar(1)}; }

  int degree() const noexcept { return int(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 0; }
  Eigen::Index size() const noexcept { return coeffs_.size(); }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  Scalar coeff(Eigen::Index k) const noexcept {
    return (k >= 0 && k < coeffs_.size()) ? coeffs_[k] : Scalar(0);
  }
  Scalar operator[](Eigen::Index k) const noexcept { return coeff(k); }
  Scalar leading() const noexcept { return is_zero() ? Scalar(0) : coeffs_[coeffs_.size() - 1]; }

  std::vector<Scalar> to_vector() const { return {coeffs_.data(), coeffs_.data() + coeffs_.size()}; }

  /// Drops trailing coefficients with modulus <= tol * max|c_k|.
  BasicPolynomial trimmed(Real tol) const {
    const Real cap = tol * max_abs_coeff();
    Eigen::Index n = coeffs_.size();
    while (n > 0 && std::abs(coeffs_[n - 1]) <= cap) --n;
    return BasicPolynomial(Coeffs(coeffs_.head(n)));
  }

  Real max_abs_coeff() const noexcept {
    return is_zero() ? Real(0) : coeffs_.cwiseAbs().maxCoeff();
  }

  /// Sum of coefficient moduli; bounds sup |p| on the closed disk.
  Real l1_norm() const noexcept { return is_zero() ? Real(0) : coeffs_.cwiseAbs().sum(); }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    const Eigen::Index n = std::max(size(), o.size());
    Coeffs r = Coeffs::Zero(n);
    r.head(size()) = coeffs_;
    r.head(o.size()) += o.coeffs_;
    coeffs_ = std::move(r);
    canonicalize();
    return *this;
  }

  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this += -o; }

  BasicPolynomial& operator*=(Scalar c) {
    coeffs_ *= c;
    canonicalize();
    return *this;
  }

  BasicPolynomial& operator/=(Scalar c) {
    coeffs_ /= c;
    canonicalize();
    return *this;
  }

  friend BasicPolynomial operator-(const BasicPolynomial& p) { return BasicPolynomial(Coeffs(-p.coeffs_)); }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator+(BasicPolynomial a, Scalar c) { return a += constant(c); }
  friend BasicPolynomial operator+(Scalar c, BasicPolynomial a) { return a += constant(c); }
  friend BasicPolynomial operator-(BasicPolynomial a, Scalar c) { return a -= constant(c); }
  friend BasicPolynomial operator-(Scalar c, const BasicPolynomial& a) { return constant(c) - a; }
  friend BasicPolynomial operator*(BasicPolynomial a, Scalar c) { return a *= c; }
  friend BasicPolynomial operator*(Scalar c, BasicPolynomial a) { return a *= c; }
  friend BasicPolynomial operator/(BasicPolynomial a, Scalar c) { return a /= c; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Coeffs r = Coeffs::Zero(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
      for (Eigen::Index j = 0; j < b.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BasicPolynomial(std::move(r));
  }

  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

private:
  void canonicalize() {
    Eigen::Index n = coeffs_.size();
    while (n > 0 && coeffs_[n - 1] == Scalar(0)) --n;
    if (n != coeffs_.size()) coeffs_.conservativeResize(n);
  }

  Coeffs coeffs_;
};

using Polynomial = BasicPolynomial<double>;
using Complex = std::complex<double>;

/// Point of the unit circle. Inputs within `tol` of the circle are pulled onto
/// it; anything further away is rejected.
class UnitCirclePoint {
public:
  explicit UnitCirclePoint(Complex z, double tol = 1e-12) {
    const double r = std::abs(z);
    if (!std::isfinite(r) || std::abs(r - 1.0) > tol)
      throw Error(ErrorCode::OffCircle, "point is not on the unit circle (|z| = " + std::to_string(r) + ")");
    value_ = z / r;
  }

  static UnitCirclePoint polar(double theta) { return UnitCirclePoint(std::polar(1.0, theta)); }

  Complex value() const noexcept { return value_; }
  operator Complex() const noexcept { return value_; }

private:
  Complex value_{1.0, 0.0};
};

/// Rigorous enclosure [lower, upper] of a sup/inf quantity.
struct CertifiedBound {
  double lower = 0.0;
  double upper = 0.0;
  std::string method;

  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
  double width() const noexcept { return upper - lower; }
};

template <typename Real>
std::complex<Real> eval(const BasicPolynomial<Real>& p, std::complex<Real> z) {
  std::complex<Real> acc(0);
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) acc = acc * z + p.coeffs()[k];
  return acc;
}

template <typename Real>
BasicPolynomial<Real> derivative(const BasicPolynomial<Real>& p) {
  if (p.degree() < 1) return {};
  typename BasicPolynomial<Real>::Coeffs d(p.degree());
  for (Eigen::Index k = 1; k < p.size(); ++k) d[k - 1] = Real(k) * p.coeffs()[k];
  return BasicPolynomial<Real>(std::move(d));
}

template <typename Real>
struct DivisionAtPoint {
  std::complex<Real> value;
  BasicPolynomial<Real> quotient;
};

/// Synthetic division: p(z) = value + (z - a) * quotient(z).
template <typename Real>
DivisionAtPoint<Real> divide_at(const BasicPolynomial<Real>& p, std::complex<Real> a) {
  using Poly = BasicPolynomial<Real>;
  if (p.degree() < 1) return {p.coeff(0), Poly{}};
  const Eigen::Index n = p.degree();
  typename Poly::Coeffs q(n);
  std::complex<Real> carry = p.coeffs()[n];
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    q[k] = carry;
    carry = p.coeffs()[k] + a * carry;
  }
  return {carry, Poly(std::move(q))};
}

inline DivisionAtPoint<double> divide_at(const Polynomial& p, const UnitCirclePoint& zeta) {
  return divide_at(p, zeta.value());
}

/// First `count` Taylor coefficients of p at a, i.e. p^(j)(a) / j!, by
/// repeated synthetic division.
template <typename Real>
std::vector<std::complex<Real>> taylor_coefficients(const BasicPolynomial<Real>& p, std::complex<Real> a, int count) {
  std::vector<std::complex<Real>> out;
  out.reserve(std::size_t(std::max(count, 0)));
  BasicPolynomial<Real> q = p;
  for (int j = 0; j < count; ++j) {
    auto d = divide_at(q, a);
    out.push_back(d.value);
    q = std::move(d.quotient);
  }
  return out;
}

/// p(z)^m by repeated squaring.
template <typename Real>
BasicPolynomial<Real> pow(const BasicPolynomial<Real>& p, int m) {
  BasicPolynomial<Real> result = BasicPolynomial<Real>::constant(std::complex<Real>(1));
  BasicPolynomial<Real> base = p;
  for (; m > 0; m >>= 1) {
    if (m & 1) result *= base;
    if (m > 1) base *= base;
  }
  return result;
}

template <typename Real>
struct DivMod {
  BasicPolynomial<Real> quotient;
  BasicPolynomial<Real> remainder;
};

/// Euclidean division a = q * b + r with deg r < deg b.
template <typename Real>
DivMod<Real> divmod(const BasicPolynomial<Real>& a, const BasicPolynomial<Real>& b) {
  using Poly = BasicPolynomial<Real>;
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  typename Poly::Coeffs r = a.coeffs();
  typename Poly::Coeffs q = Poly::Coeffs::Zero(a.degree() - b.degree() + 1);
  const auto lead = b.leading();
  for (Eigen::Index k = q.size() - 1; k >= 0; --k) {
    const auto c = r[k + b.degree()] / lead;
    q[k] = c;
    for (Eigen::Index j = 0; j <= b.degree(); ++j) r[k + j] -= c * b.coeffs()[j];
  }
  return {Poly(std::move(q)), Poly(typename Poly::Coeffs(r.head(std::max(b.degree(), 0))))};
}

/// Parseval: ||p||^2 in H^2 is the sum of squared coefficient moduli.
template <typename Real>
Real h2_norm_sq(const BasicPolynomial<Real>& p) {
  return p.is_zero() ? Real(0) : p.coeffs().squaredNorm();
}

template <typename Real>
std::complex<Real> h2_inner(const BasicPolynomial<Real>& p, const BasicPolynomial<Real>& q) {
  const Eigen::Index n = std::min(p.size(), q.size());
  if (n == 0) return {};
  // Eigen's dot() conjugates its first argument.
  return q.coeffs().head(n).dot(p.coeffs().head(n));
}

/// Coefficientwise comparison with tolerance scaled by the larger max |c_k|.
template <typename Real>
bool approx_equal(const BasicPolynomial<Real>& a, const BasicPolynomial<Real>& b, Real tol = Real(1e-12)) {
  const Real scale = std::max({Real(1), a.max_abs_coeff(), b.max_abs_coeff()});
  return (a - b).max_abs_coeff() <= tol * scale;
}

/// Largest coefficient modulus of a - b (no scaling).
template <typename Real>
Real max_coeff_diff(const BasicPolynomial<Real>& a, const BasicPolynomial<Real>& b) {
  return (a - b).max_abs_coeff();
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    const Complex c = p.coeffs()[k];
    if (c == Complex(0)) continue;
    if (!s.empty()) s += " + ";
    s += "(" + std::to_string(c.real()) + (c.imag() < 0 ? "-" : "+") + std::to_string(std::abs(c.imag())) + "i)";
    if (k > 0) s += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  return s;
}

}  // namespace dmu

#endif
