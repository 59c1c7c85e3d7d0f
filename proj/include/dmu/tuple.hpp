#ifndef DMU_TUPLE_HPP
#define DMU_TUPLE_HPP

#include <vector>

#include "dmu/polynomial.hpp"

namespace dmu {

/// Row vector (phi_1, ..., phi_n) of polynomials. Never empty.
class FunctionTuple {
public:
  FunctionTuple() : entries_{Polynomial{}} {}

  FunctionTuple(std::vector<Polynomial> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "function tuple must be nonempty");
  }

  FunctionTuple(std::initializer_list<Polynomial> entries) : FunctionTuple(std::vector<Polynomial>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const Polynomial& operator[](std::size_t j) const { return entries_[j]; }
  Polynomial& operator[](std::size_t j) { return entries_[j]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  int max_degree() const noexcept {
    int d = -1;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
  }

  bool is_zero() const noexcept {
    for (const auto& p : entries_)
      if (!p.is_zero()) return false;
    return true;
  }

  Eigen::VectorXcd values(Complex z) const {
    Eigen::VectorXcd v(Eigen::Index(entries_.size()));
    for (std::size_t j = 0; j < entries_.size(); ++j) v[Eigen::Index(j)] = eval(entries_[j], z);
    return v;
  }

  /// sum_j |phi_j(z)|^2
  double sum_sq(Complex z) const {
    double s = 0.0;
    for (const auto& p : entries_) s += std::norm(eval(p, z));
    return s;
  }

  FunctionTuple& operator*=(Complex c) {
    for (auto& p : entries_) p *= c;
    return *this;
  }
  FunctionTuple& operator/=(Complex c) {
    for (auto& p : entries_) p /= c;
    return *this;
  }
  friend FunctionTuple operator*(FunctionTuple t, Complex c) { return t *= c; }
  friend FunctionTuple operator/(FunctionTuple t, Complex c) { return t /= c; }

  /// Entrywise product with a scalar polynomial: (phi_j * f)_j.
  friend FunctionTuple operator*(const FunctionTuple& t, const Polynomial& f) {
    std::vector<Polynomial> out;
    out.reserve(t.size());
    for (const auto& p : t) out.push_back(p * f);
    return FunctionTuple(std::move(out));
  }

private:
  std::vector<Polynomial> entries_;
};

/// Bezout pairing sum_j phi_j * e_j.
inline Polynomial pairing(const FunctionTuple& phi, const FunctionTuple& e) {
  if (phi.size() != e.size()) throw Error(ErrorCode::LengthMismatch, "tuples differ in length");
  Polynomial s;
  for (std::size_t j = 0; j < phi.size(); ++j) s += phi[j] * e[j];
  return s;
}

/// Largest coefficient modulus of Phi * E^T - 1.
inline double bezout_residual(const FunctionTuple& phi, const FunctionTuple& e) {
  return (pairing(phi, e) - Complex(1.0)).max_abs_coeff();
}

inline double max_coeff_diff(const FunctionTuple& a, const FunctionTuple& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "tuples differ in length");
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, max_coeff_diff(a[j], b[j]));
  return m;
}

}  // namespace dmu

#endif
