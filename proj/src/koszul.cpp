#include "dmu/koszul.hpp"

#include <random>

namespace dmu {

KoszulDeviations check_identities(const Eigen::VectorXcd& a, const Eigen::VectorXcd& d, std::uint64_t seed) {
  if (a.size() != d.size()) throw Error(ErrorCode::LengthMismatch, "A and D must have the same length");
  const auto qa = build_q(a);
  const auto qd = build_q(d);
  const Eigen::MatrixXcd ma = dense(qa);
  const Eigen::MatrixXcd md = dense(qd);
  const Eigen::Index n = a.size();
  const Eigen::RowVectorXcd row_a = a.transpose();
  const Eigen::RowVectorXcd row_d = d.transpose();

  KoszulDeviations dev;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 16; ++trial) {
    Eigen::VectorXcd x(ma.cols());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      const double re = gauss(rng);
      x[k] = Complex(re, gauss(rng));
    }
    if (x.size() == 0) continue;
    const Complex ax = (row_a * (ma * x))(0);
    dev.kernel = std::max(dev.kernel, std::abs(ax));
  }

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd lhs_b = ma * ma.adjoint();
  const Eigen::MatrixXcd rhs_b = (row_a * row_a.adjoint())(0) * id - row_a.adjoint() * row_a;
  dev.hermitian = (lhs_b - rhs_b).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd lhs_c = ma * md.transpose();
  const Eigen::MatrixXcd rhs_c = (row_a * row_d.transpose())(0) * id - row_d.transpose() * row_a;
  dev.bilinear = (lhs_c - rhs_c).cwiseAbs().maxCoeff();
  return dev;
}

FunctionTuple koszul_solution_form(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta) {
  if (phi.size() != e.size()) throw Error(ErrorCode::LengthMismatch, "Phi and E must have the same length");
  const Eigen::VectorXcd at = phi.values(zeta.value());
  const double norm_sq = at.squaredNorm();
  if (std::sqrt(norm_sq) < 1e-9)
    throw Error(ErrorCode::SingularAtom, "Phi vanishes at the atom; no Koszul lift exists");

  std::vector<Polynomial> v(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j)
    v[j] = Polynomial::constant(std::conj(at[Eigen::Index(j)]) / norm_sq);

  const KoszulMatrix<Polynomial> q_phi(phi.entries());
  const KoszulMatrix<Polynomial> q_e(e.entries());
  // Q_{E(z)}^T applied to the constant vector, then Q_{Phi(z)}.
  const auto correction = q_phi.apply(q_e.apply_transpose(v));

  std::vector<Polynomial> b = e.entries();
  for (std::size_t j = 0; j < b.size(); ++j) b[j] += correction[j];
  return FunctionTuple(std::move(b));
}

}  // namespace dmu
