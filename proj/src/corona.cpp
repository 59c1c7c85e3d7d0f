#include "dmu/corona.hpp"

#include <limits>

#include "dmu/bounds.hpp"
#include "dmu/roots.hpp"

namespace dmu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sum_k k |c_k|: Lipschitz constant of p on the closed disk.
double derivative_l1(const Polynomial& p) {
  double s = 0.0;
  for (Eigen::Index k = 1; k < p.size(); ++k) s += double(k) * std::abs(p.coeffs()[k]);
  return s;
}

}  // namespace

std::string to_string(SolveMode m) { return m == SolveMode::Exact ? "EXACT" : "APPROX"; }

EpsilonCertificate estimate_epsilon(const FunctionTuple& phi) {
  EpsilonCertificate cert;
  // Horner error of |phi_j| on the disk; constants evaluate exactly.
  std::vector<double> lipschitz, eval_error;
  double plain_rounding = 0.0;
  for (const auto& p : phi) {
    lipschitz.push_back(derivative_l1(p));
    cert.gradient_bound += 2.0 * p.l1_norm() * lipschitz.back();
    const double e = p.degree() >= 1 ? 4.0 * (p.degree() + 1) * std::numeric_limits<double>::epsilon() * p.l1_norm() : 0.0;
    eval_error.push_back(e);
    plain_rounding += 2.0 * p.l1_norm() * e + e * e;
  }

  const Polynomial g = gcd(phi);
  if (g.is_zero()) {
    cert.common_roots_in_disk.push_back(Complex(0.0));
    return cert;
  }
  if (g.degree() >= 1)
    for (const auto& r : roots(g))
      if (std::abs(r) <= 1.0 + 1e-9) cert.common_roots_in_disk.push_back(r);
  if (!cert.common_roots_in_disk.empty()) return cert;

  int radial = 32, angular = 128;
  for (int refinement = 0; refinement <= 6; ++refinement) {
    const double rho = 0.5 / radial + std::numbers::pi / angular;
    // Two rigorous cell bounds, the better one kept:
    //   sum_j |phi_j(z0)|^2 - rho G                       (uniform gradient bound)
    //   sum_j max(0, |phi_j(z0)| - rho L_j)^2             (per-entry Lipschitz)
    double grid_min = kInf;
    const auto scan = scan_disk(
        [&](Complex z) {
          double plain = 0.0, clamped = 0.0;
          for (std::size_t j = 0; j < phi.size(); ++j) {
            const double a = std::abs(eval(phi[j], z));
            plain += a * a;
            const double c = std::max(0.0, a - rho * lipschitz[j] - eval_error[j]);
            clamped += c * c;
          }
          grid_min = std::min(grid_min, plain);
          return std::max(plain - rho * cert.gradient_bound - plain_rounding, clamped);
        },
        radial, angular);
    cert.grid_spacing = scan.covering_radius;
    cert.grid_min = grid_min;
    cert.refinements = refinement;
    cert.eps_sq_lower = std::max(0.0, scan.min_value);
    if (cert.eps_sq_lower >= 0.5 * grid_min && cert.eps_sq_lower > 0.0) break;
    if (cert.eps_sq_lower > 0.0 && refinement >= 2) break;
    radial *= 2;
    angular *= 2;
  }
  return cert;
}

int default_degree_cap(const FunctionTuple& phi) noexcept { return 2 * std::max(phi.max_degree(), 0) + 4; }

namespace {

struct LinearSystem {
  Eigen::MatrixXcd a;
  Eigen::VectorXcd rhs;
};

// Coefficient equations of sum_j phi_j e_j = 1 with deg e_j <= d. Column
// j * (d + 1) + k carries the coefficient of z^k in e_j.
LinearSystem bezout_system(const FunctionTuple& phi, int d) {
  const int top = std::max(phi.max_degree(), 0) + d;
  const Eigen::Index n = Eigen::Index(phi.size());
  LinearSystem sys{Eigen::MatrixXcd::Zero(top + 1, n * (d + 1)), Eigen::VectorXcd::Zero(top + 1)};
  sys.rhs[0] = 1.0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (int k = 0; k <= d; ++k)
      for (Eigen::Index i = 0; i < phi[std::size_t(j)].size(); ++i)
        sys.a(i + k, j * (d + 1) + k) = phi[std::size_t(j)].coeffs()[i];
  return sys;
}

FunctionTuple unpack(const Eigen::VectorXcd& x, std::size_t n, int d) {
  std::vector<Polynomial> e;
  for (std::size_t j = 0; j < n; ++j) e.emplace_back(Eigen::VectorXcd(x.segment(Eigen::Index(j) * (d + 1), d + 1)));
  return FunctionTuple(std::move(e));
}

Eigen::Index numerical_rank(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  svd.setThreshold(1e-10);
  return svd.rank();
}

Eigen::VectorXcd min_norm_solution(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& rhs) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  return svd.solve(rhs);
}

}  // namespace

BezoutBase bezout_base(const FunctionTuple& phi, int degree_cap) {
  if (degree_cap < 0) throw Error(ErrorCode::InvalidArgument, "degree cap must be nonnegative");
  if (phi.is_zero()) throw Error(ErrorCode::CoronaConditionFails, "the zero tuple has no Bezout solution");

  const Polynomial g = gcd(phi);
  bool exact = g.degree() == 0;
  if (!exact) {
    for (const auto& r : roots(g))
      if (std::abs(r) <= 1.0 + 1e-9)
        throw Error(ErrorCode::CoronaConditionFails, "the tuple has a common zero in the closed disk");
  }

  BezoutBase out;
  auto finish = [&](const Eigen::VectorXcd& x, int d, SolveMode mode) {
    out.solution = unpack(x, phi.size(), d);
    out.degree = d;
    out.mode = mode;
    const Polynomial residual = pairing(phi, out.solution) - Complex(1.0);
    out.residual_max_coeff = residual.max_abs_coeff();
    out.residual_sup = residual.is_zero() ? CertifiedBound{0.0, 0.0, "exact"} : sup_circle(residual);
    return out;
  };

  if (exact) {
    for (int d = 0; d <= degree_cap; ++d) {
      const auto sys = bezout_system(phi, d);
      Eigen::MatrixXcd augmented(sys.a.rows(), sys.a.cols() + 1);
      augmented << sys.a, sys.rhs;
      if (numerical_rank(sys.a) != numerical_rank(augmented)) continue;
      const Eigen::VectorXcd x = min_norm_solution(sys.a, sys.rhs);
      if ((sys.a * x - sys.rhs).cwiseAbs().maxCoeff() > 1e-10) continue;
      return finish(x, d, SolveMode::Exact);
    }
    throw Error(ErrorCode::DegreeCapExceeded,
                "no polynomial Bezout solution with degree <= " + std::to_string(degree_cap));
  }

  // Common zeros outside the closed disk only: least squares on coefficients,
  // which by Parseval minimises the L^2 residual on the circle.
  const auto sys = bezout_system(phi, degree_cap);
  return finish(min_norm_solution(sys.a, sys.rhs), degree_cap, SolveMode::Approx);
}

BezoutBase bezout_base(const FunctionTuple& phi) { return bezout_base(phi, default_degree_cap(phi)); }

Normalized normalize(const FunctionTuple& phi, const AtomicMeasure& mu) {
  if (phi.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero tuple");
  const double s = mult_norm_upper(phi, mu).upper;
  return {phi / Complex(s), s};
}

namespace {

struct AtomValues {
  Eigen::VectorXcd values;
  double norm_sq;
};

AtomValues check_lift_preconditions(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta,
                                    double residual_tol) {
  if (phi.size() != e.size()) throw Error(ErrorCode::LengthMismatch, "Phi and E must have the same length");
  if (residual_tol >= 0.0) {
    const double r = bezout_residual(phi, e);
    if (r > residual_tol)
      throw Error(ErrorCode::PreconditionFailed,
                  "Phi E^T = 1 fails: residual " + std::to_string(r) + " exceeds " + std::to_string(residual_tol));
  }
  AtomValues av{phi.values(zeta.value()), 0.0};
  av.norm_sq = av.values.squaredNorm();
  if (av.norm_sq < 1e-12)
    throw Error(ErrorCode::SingularAtom, "|Phi(zeta)|^2 = " + std::to_string(av.norm_sq) + " is below 1e-12");
  return av;
}

}  // namespace

FunctionTuple lift(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta, double residual_tol) {
  const auto [v, norm_sq] = check_lift_preconditions(phi, e, zeta, residual_tol);
  Polynomial f;
  for (std::size_t i = 0; i < phi.size(); ++i)
    f += (phi[i] - v[Eigen::Index(i)]) * std::conj(v[Eigen::Index(i)]);
  f /= Complex(norm_sq);

  std::vector<Polynomial> b;
  b.reserve(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j)
    b.push_back(Polynomial::constant(std::conj(v[Eigen::Index(j)]) / norm_sq) - f * e[j]);
  return FunctionTuple(std::move(b));
}

FunctionTuple lift_anchor(const FunctionTuple& phi, const FunctionTuple& e, const UnitCirclePoint& zeta,
                          double residual_tol) {
  const auto [v, norm_sq] = check_lift_preconditions(phi, e, zeta, residual_tol);
  std::size_t m = 0;
  for (std::size_t j = 1; j < phi.size(); ++j)
    if (std::abs(v[Eigen::Index(j)]) > std::abs(v[Eigen::Index(m)])) m = j;
  const Complex anchor = v[Eigen::Index(m)];
  const Polynomial factor = (phi[m] - anchor) / anchor;

  std::vector<Polynomial> d;
  d.reserve(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) d.push_back(-(factor * e[j]));
  d[m] += Polynomial::constant(1.0 / anchor);
  return FunctionTuple(std::move(d));
}

CoronaCertificate solve(const CoronaProblem& problem, const SolveOptions& options) {
  const FunctionTuple& phi = problem.tuple;
  const AtomicMeasure& mu = problem.measure;
  if (phi.is_zero()) throw Error(ErrorCode::CoronaConditionFails, "the zero tuple violates the corona condition");

  const EpsilonCertificate raw_eps = estimate_epsilon(phi);
  if (!raw_eps.common_roots_in_disk.empty())
    throw Error(ErrorCode::CoronaConditionFails, "corona condition fails: common zero in the closed disk at " +
                                                     std::to_string(raw_eps.common_roots_in_disk.front().real()) +
                                                     (raw_eps.common_roots_in_disk.front().imag() < 0 ? "-" : "+") +
                                                     std::to_string(std::abs(raw_eps.common_roots_in_disk.front().imag())) +
                                                     "i");

  const int cap = options.degree_cap < 0 ? default_degree_cap(phi) : options.degree_cap;
  const BezoutBase base = bezout_base(phi, cap);
  const Normalized norm = normalize(phi, mu);

  CoronaCertificate cert;
  cert.mode = base.mode;
  cert.base_degree = base.degree;
  cert.base_solution = base.solution;
  cert.scaling = norm.scale;
  cert.epsilon = estimate_epsilon(norm.scaled);
  const double eps = std::sqrt(cert.epsilon.eps_sq_lower);
  const double residual_tol = base.mode == SolveMode::Exact ? 1e-9 : -1.0;

  FunctionTuple e = base.solution * Complex(norm.scale);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    ChainRecord rec{mu[i]};
    rec.phi_at_atom_sq = norm.scaled.values(mu[i].zeta.value()).squaredNorm();
    rec.e_norm_upper = mult_norm_upper(e, mu.prefix(i)).upper;
    FunctionTuple b = lift(norm.scaled, e, mu[i].zeta, residual_tol);
    rec.b_norm_lower = mult_norm_lower(b, mu.prefix(i + 1), options.trial_degree, options.seed).lower;
    rec.chain_bound = eps > 0.0 ? std::sqrt(2.0 + 16.0 * rec.e_norm_upper * rec.e_norm_upper) / eps : kInf;
    rec.residual_max_coeff = bezout_residual(norm.scaled, b);
    cert.chain.push_back(rec);
    e = std::move(b);
  }

  cert.solution = e / Complex(norm.scale);
  const Polynomial residual = pairing(phi, cert.solution) - Complex(1.0);
  cert.residual_max_coeff = residual.max_abs_coeff();
  cert.residual_sup = residual.is_zero() ? CertifiedBound{0.0, 0.0, "exact"} : sup_circle(residual);
  return cert;
}

VerificationReport verify_certificate(const CoronaProblem& problem, const CoronaCertificate& cert,
                                      double residual_tol) {
  VerificationReport rep;
  if (cert.solution.size() != problem.tuple.size()) {
    rep.items.push_back({"solution_length", false, double(cert.solution.size()), "solution length differs from tuple"});
    return rep;
  }

  const double residual = bezout_residual(problem.tuple, cert.solution);
  if (cert.mode == SolveMode::Exact) {
    rep.items.push_back({"bezout_residual", residual <= residual_tol, residual,
                         "max coefficient of Phi B^T - 1, tolerance " + std::to_string(residual_tol)});
  } else {
    const bool consistent = std::abs(residual - cert.residual_max_coeff) <= 1e-9 * std::max(1.0, residual);
    rep.items.push_back({"approx_residual_recorded", consistent, residual,
                         "APPROX mode: recomputed residual must match the certificate"});
  }

  const double s = cert.scaling;
  for (std::size_t i = 0; i < problem.measure.size(); ++i) {
    const auto& atom = problem.measure[i];
    const double at = problem.tuple.values(atom.zeta.value()).squaredNorm() / (s * s);
    rep.items.push_back({"atom_" + std::to_string(i) + "_eps_lower", at >= cert.epsilon.eps_sq_lower - 1e-10, at,
                         "sum_j |phi_j(zeta)|^2 (scaled) against eps^2 = " +
                             std::to_string(cert.epsilon.eps_sq_lower)});
  }

  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const auto& rec = cert.chain[i];
    rep.items.push_back({"chain_" + std::to_string(i) + "_bound", rec.b_norm_lower <= rec.chain_bound + 1e-9,
                         rec.b_norm_lower, "bound " + std::to_string(rec.chain_bound)});
  }
  if (cert.chain.size() != problem.measure.size())
    rep.items.push_back({"chain_length", false, double(cert.chain.size()), "one chain record per atom expected"});
  return rep;
}

}  // namespace dmu
