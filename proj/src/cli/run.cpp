#include <cmath>
#include <random>

#include "dmu/bounds.hpp"
#include "dmu/cli.hpp"
#include "dmu/koszul.hpp"
#include "dmu/suite.hpp"

namespace dmu::cli {

using nlohmann::json;

namespace {

json optional_real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json bound_json(const CertifiedBound& b) {
  return {{"lower", optional_real(b.lower)}, {"upper", optional_real(b.upper)}, {"method", b.method}};
}

void finish(Report& r, bool inconclusive = false) {
  bool all = true;
  for (const auto& i : r.items) all = all && i.pass;
  r.status = inconclusive ? Status::Inconclusive : (all ? Status::Pass : Status::Fail);
}

Report run_norm(const JobSpec& job) {
  Report r;
  const AtomicMeasure& mu = *job.inputs.measure;
  const FunctionTuple phi = job.inputs.tuple ? *job.inputs.tuple : FunctionTuple{*job.inputs.polynomial};
  double h2 = 0.0;
  json local = json::array();
  for (const auto& p : phi) h2 += h2_norm_sq(p);
  for (const auto& atom : mu) {
    double d = 0.0;
    for (const auto& p : phi) d += local_dirichlet(p, atom.zeta);
    local.push_back({{"zeta", to_json(atom.zeta.value())}, {"weight", atom.weight}, {"local_dirichlet", d}});
  }
  const double norm_sq = tuple_dmu_norm_sq(phi, mu);
  r.items.push_back({"norm_sq", std::isfinite(norm_sq) && norm_sq >= h2 * (1.0 - 1e-12), norm_sq,
                     "||f||^2_{D(mu)}, at least the H^2 part"});
  r.artifacts = {{"norm_sq", norm_sq}, {"h2_norm_sq", h2}, {"local", local}};
  finish(r);
  return r;
}

Report run_ldi(const JobSpec& job) {
  Report r;
  const Polynomial& p = *job.inputs.polynomial;
  const UnitCirclePoint& zeta = *job.inputs.zeta;
  const double closed = local_dirichlet(p, zeta);
  r.artifacts["closed_form"] = closed;
  try {
    const auto q = local_dirichlet_quadrature_detailed(p, zeta, job.params.quad_tol * std::max(1.0, closed));
    const double diff = std::abs(closed - q.value);
    const double limit = std::max(1e-4, 1e-3 * closed);
    r.items.push_back({"quadrature_agreement", diff <= limit, diff,
                       "|closed form - quadrature| <= " + format_double(limit)});
    r.artifacts["quadrature"] = q.value;
    r.artifacts["error_estimate"] = q.error_estimate;
    r.artifacts["cells"] = q.cells;
    finish(r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::QuadratureCapExceeded) throw;
    r.items.push_back({"quadrature_agreement", false, e.estimate().value_or(0.0), e.what()});
    r.artifacts["quadrature"] = optional_real(e.estimate().value_or(NAN));
    finish(r, true);
  }
  return r;
}

Report run_multnorm(const JobSpec& job) {
  Report r;
  const auto est = mult_norm_estimate(*job.inputs.tuple, *job.inputs.measure, job.params.trial_degree, job.params.seed);
  r.items.push_back({"sandwich", est.lower <= est.upper + 1e-9, est.upper - est.lower, "upper - lower"});
  r.artifacts = {{"lower", est.lower},
                 {"upper", optional_real(est.upper)},
                 {"trial_degree", est.trial_degree},
                 {"s_inf", bound_json(est.s_inf)},
                 {"t_per_atom", est.t_per_atom}};
  finish(r);
  return r;
}

Report run_corona(const JobSpec& job) {
  Report r;
  const CoronaProblem problem{*job.inputs.tuple, *job.inputs.measure};
  SolveOptions opts;
  opts.degree_cap = job.params.degree_cap;
  opts.trial_degree = job.params.trial_degree;
  opts.seed = job.params.seed;
  CoronaCertificate cert;
  try {
    cert = solve(problem, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoronaConditionFails) throw;
    r.items.push_back({"corona_condition", false, 0.0, e.what()});
    finish(r);
    return r;
  }
  r.items = verify_certificate(problem, cert, job.params.residual_tol).items;

  const Polynomial residual = pairing(problem.tuple, cert.solution) - Complex(1.0);
  CertifiedBound residual_sup{0.0, 0.0, "exact"};
  if (!residual.is_zero()) residual_sup = sup_circle(residual, std::max(job.params.grid, default_resolution(residual.degree())));

  json chain = json::array();
  for (const auto& rec : cert.chain)
    chain.push_back({{"zeta", to_json(rec.atom.zeta.value())},
                     {"weight", rec.atom.weight},
                     {"phi_at_atom_sq", rec.phi_at_atom_sq},
                     {"e_norm_upper", optional_real(rec.e_norm_upper)},
                     {"b_norm_lower", rec.b_norm_lower},
                     {"bound", optional_real(rec.chain_bound)},
                     {"residual_max_coeff", rec.residual_max_coeff}});
  r.artifacts = {{"solution", to_json(cert.solution)},
                 {"base_solution", to_json(cert.base_solution)},
                 {"mode", to_string(cert.mode)},
                 {"base_degree", cert.base_degree},
                 {"scaling", cert.scaling},
                 {"eps_sq_lower", cert.epsilon.eps_sq_lower},
                 {"residual_max_coeff", cert.residual_max_coeff},
                 {"residual_sup", bound_json(residual_sup)},
                 {"chain", chain}};
  finish(r, cert.mode == SolveMode::Approx || cert.epsilon.inconclusive());
  return r;
}

Report run_koszul(const JobSpec& job) {
  Report r;
  const Eigen::VectorXcd& a = *job.inputs.a;
  Eigen::VectorXcd d;
  if (job.inputs.d) {
    d = *job.inputs.d;
  } else {
    std::mt19937_64 rng(job.params.seed);
    std::normal_distribution<double> gauss;
    d.resize(a.size());
    for (Eigen::Index k = 0; k < d.size(); ++k) {
      const double re = gauss(rng);
      d[k] = Complex(re, gauss(rng));
    }
  }
  const auto dev = check_identities(a, d, job.params.seed);
  const double scale = 1.0 + a.squaredNorm() + a.norm() * d.norm();
  const double limit = 1e-12 * scale;
  r.items.push_back({"kernel", dev.kernel <= limit, dev.kernel, "|A Q_A x| over random x"});
  r.items.push_back({"hermitian", dev.hermitian <= limit, dev.hermitian, "Q_A Q_A^* = (A A^*) I - A^* A"});
  r.items.push_back({"bilinear", dev.bilinear <= limit, dev.bilinear, "Q_A Q_D^T = (A D^T) I - D^T A"});
  r.artifacts = {{"scale", scale}, {"tolerance", limit}, {"n", a.size()}};
  finish(r);
  return r;
}

Report run_reduce(const JobSpec& job) {
  Report r;
  const Polynomial& f = *job.inputs.f;
  const Polynomial& h = *job.inputs.h;
  SearchBudget budget;
  budget.max_degree = job.params.max_degree;
  budget.max_iters = job.params.max_iters;
  budget.seed = job.params.seed;
  budget.margin = job.params.root_margin;
  std::optional<ReductionWitness> w;
  try {
    w = reduce(f, h, *job.inputs.measure, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EtaNotPositive) throw;
    r.items.push_back({"eta_positive", false, 0.0, e.what()});
    finish(r);
    return r;
  }
  if (!w) {
    r.items.push_back({"reducer_found", false, 0.0, "NOT_FOUND within the search budget"});
    finish(r, true);
    return r;
  }
  r.items = verify_witness(f, h, *w).items;
  r.items.push_back({"margin_threshold", w->root_margin >= job.params.root_margin, w->root_margin,
                     "root margin at least " + format_double(job.params.root_margin)});
  json trace = json::array();
  for (const auto& step : w->case_trace) trace.push_back({{"case", to_string(step.kind)}, {"zeta", to_json(step.zeta.value())}});
  r.artifacts = {{"y", to_json(w->y)},
                 {"u", to_json(w->u)},
                 {"root_margin", optional_real(w->root_margin)},
                 {"case_trace", trace},
                 {"final_g", to_json(w->final_g)}};
  finish(r);
  return r;
}

Report run_suite_job(const JobSpec& job) {
  Report r;
  SuiteConfig config;
  config.seed = job.params.seed;
  r.items = run_suite(config).items;
  r.artifacts = {{"seed", job.params.seed}};
  finish(r);
  return r;
}

Report run_grid_export(const JobSpec& job) {
  Report r;
  const std::string csv = grid_export(*job.inputs.tuple, job.params.radii, job.params.angles, job.inputs.solution);
  const auto rows = std::count(csv.begin(), csv.end(), '\n') - 1;
  r.items.push_back({"rows", rows == std::int64_t(job.params.radii) * job.params.angles, double(rows), "radii x angles"});
  r.artifacts = {{"csv", csv}};
  finish(r);
  return r;
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

int exit_code(Status s) noexcept {
  switch (s) {
    case Status::Pass: return kExitPass;
    case Status::Fail: return kExitFail;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

Report run(const JobSpec& job) {
  Report r;
  switch (job.command) {
    case Command::Norm: r = run_norm(job); break;
    case Command::Ldi: r = run_ldi(job); break;
    case Command::Multnorm: r = run_multnorm(job); break;
    case Command::Corona: r = run_corona(job); break;
    case Command::KoszulCheck: r = run_koszul(job); break;
    case Command::Reduce: r = run_reduce(job); break;
    case Command::VerifySuite: r = run_suite_job(job); break;
    case Command::GridExport: r = run_grid_export(job); break;
  }
  r.command = job.command;
  return r;
}

json to_json(const Report& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"name", i.name}, {"pass", i.pass}, {"value", optional_real(i.value)}, {"detail", i.detail}});
  return {{"command", std::string(to_string(r.command))},
          {"status", std::string(to_string(r.status))},
          {"items", items},
          {"artifacts", r.artifacts}};
}

}  // namespace dmu::cli
