#ifndef DMU_KOSZUL_HPP
#define DMU_KOSZUL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dmu/dirichlet.hpp"
#include "dmu/polynomial.hpp"
#include "dmu/tuple.hpp"

namespace dmu {

/// Second-stage Koszul matrix Q_A of a row vector A = (a_1, ..., a_n).
///
/// Columns are indexed by pairs (i, j), i < j, in lexicographic order; column
/// (i, j) holds a_j in row i and -a_i in row j. Hence A Q_A = 0,
/// Q_A Q_A^* = (A A^*) I - A^* A and Q_A Q_D^T = (A D^T) I - D^T A.
///
/// `T` is any commutative ring element: std::complex<Real> for point values,
/// BasicPolynomial<Real> for the polynomial-valued matrices Q_{Phi(z)}.
template <typename T>
class KoszulMatrix {
public:
  explicit KoszulMatrix(std::vector<T> source) : source_(std::move(source)) {
    if (source_.empty()) throw Error(ErrorCode::InvalidArgument, "Koszul matrix of an empty vector");
    const std::size_t n = source_.size();
    pairs_.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
  }

  std::size_t rows() const noexcept { return source_.size(); }
  std::size_t cols() const noexcept { return pairs_.size(); }
  const std::vector<T>& source() const noexcept { return source_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }

  /// Q_A x for a column vector x of length cols().
  template <typename U>
  std::vector<U> apply(const std::vector<U>& x) const {
    std::vector<U> y(rows(), U{});
    for (std::size_t c = 0; c < pairs_.size(); ++c) {
      const auto [i, j] = pairs_[c];
      y[i] += source_[j] * x[c];
      y[j] -= source_[i] * x[c];
    }
    return y;
  }

  /// Q_A^T v for a column vector v of length rows().
  template <typename U>
  std::vector<U> apply_transpose(const std::vector<U>& v) const {
    std::vector<U> y(cols(), U{});
    for (std::size_t c = 0; c < pairs_.size(); ++c) {
      const auto [i, j] = pairs_[c];
      y[c] = source_[j] * v[i] - source_[i] * v[j];
    }
    return y;
  }

private:
  std::vector<T> source_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

template <typename Real>
using KoszulMatrixX = KoszulMatrix<std::complex<Real>>;

template <typename Real>
KoszulMatrixX<Real> build_q(const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>& a) {
  return KoszulMatrixX<Real>(std::vector<std::complex<Real>>(a.data(), a.data() + a.size()));
}

/// Dense copy of a scalar Koszul matrix.
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> dense(const KoszulMatrixX<Real>& q) {
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> m =
      Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>::Zero(Eigen::Index(q.rows()),
                                                                             Eigen::Index(q.cols()));
  for (std::size_t c = 0; c < q.cols(); ++c) {
    const auto [i, j] = q.pairs()[c];
    m(Eigen::Index(i), Eigen::Index(c)) = q.source()[j];
    m(Eigen::Index(j), Eigen::Index(c)) = -q.source()[i];
  }
  return m;
}

/// Max absolute entry errors of the three Koszul identities.
struct KoszulDeviations {
  double kernel = 0.0;     // |A (Q_A x)| over random x
  double hermitian = 0.0;  // Q_A Q_A^* vs (A A^*) I - A^* A
  double bilinear = 0.0;   // Q_A Q_D^T vs (A D^T) I - D^T A
};

KoszulDeviations check_identities(const Eigen::VectorXcd& a, const Eigen::VectorXcd& d,
                                  std::uint64_t seed = kDefaultSeed);

/// B^T = E^T + Q_{Phi(z)} Q_{E(z)}^T Phi(zeta)^* / |Phi(zeta)|^2, assembled from
/// the polynomial pair columns.
FunctionTuple koszul_solution_form(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta);

}  // namespace dmu

#endif
