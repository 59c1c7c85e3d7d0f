#include "dmu/stable_rank.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "dmu/bounds.hpp"
#include "dmu/roots.hpp"

namespace dmu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double derivative_l1(const Polynomial& p) {
  double s = 0.0;
  for (Eigen::Index k = 1; k < p.size(); ++k) s += double(k) * std::abs(p.coeffs()[k]);
  return s;
}

struct Node {
  Complex point;
  int multiplicity;
};

std::vector<Node> distinct_roots(const Polynomial& h) {
  std::vector<Node> nodes;
  if (h.degree() < 1) return nodes;
  for (const Complex& r : roots(h)) {
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) {
      return std::abs(n.point - r) <= 1e-7 * std::max(1.0, std::abs(r));
    });
    if (it == nodes.end())
      nodes.push_back({r, 1});
    else
      ++it->multiplicity;
  }
  return nodes;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * double(n - k + i) / double(i);
  return b;
}

// Polynomial of degree < sum of multiplicities whose Taylor coefficients at
// each node match `jets[i][0 .. multiplicity-1]`.
Polynomial hermite_interpolate(const std::vector<Node>& nodes, const std::vector<std::vector<Complex>>& jets) {
  int n = 0;
  for (const auto& node : nodes) n += node.multiplicity;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd rhs(n);
  int row = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int l = 0; l < nodes[i].multiplicity; ++l, ++row) {
      for (int k = l; k < n; ++k) a(row, k) = binomial(k, l) * std::pow(nodes[i].point, k - l);
      rhs[row] = jets[i][std::size_t(l)];
    }
  return Polynomial(Eigen::VectorXcd(a.fullPivLu().solve(rhs)));
}

// Taylor coefficients of log(a(t)) from those of a(t), a_0 != 0, on the
// branch log a_0 + 2 pi i k.
std::vector<Complex> log_series(const std::vector<Complex>& a, int branch) {
  std::vector<Complex> b(a.size());
  b[0] = std::log(a[0]) + Complex(0.0, 2.0 * std::numbers::pi * branch);
  for (std::size_t k = 1; k < a.size(); ++k) {
    Complex acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= (double(j) / double(k)) * b[j] * a[k - j];
    b[k] = acc / a[0];
  }
  return b;
}

// Taylor coefficients of exp(b(t)) from those of b(t).
std::vector<Complex> exp_series(const std::vector<Complex>& b) {
  std::vector<Complex> c(b.size());
  c[0] = std::exp(b[0]);
  for (std::size_t k = 1; k < b.size(); ++k) {
    Complex acc(0.0);
    for (std::size_t j = 1; j <= k; ++j) acc += double(j) * b[j] * c[k - j];
    c[k] = acc / double(k);
  }
  return c;
}

class Searcher {
public:
  Searcher(const Polynomial& F, const Polynomial& H, const SearchBudget& budget) : F_(F), H_(H), budget_(budget) {}

  double objective(const Polynomial& g) const {
    const Polynomial u = F_ + g * H_;
    if (u.is_zero()) return -kInf;
    if (u.degree() == 0) return kInf;
    return root_margin(u);
  }

  bool accepts(const Polynomial& g) const {
    return g.degree() <= budget_.max_degree && objective(g) >= budget_.margin;
  }

  // g = (u - F) / H when the division is exact and the result fits the budget.
  std::optional<Polynomial> through_target(const Polynomial& u) const {
    const Polynomial diff = u - F_;
    const auto dm = divmod(diff, H_);
    if (dm.remainder.max_abs_coeff() > 1e-8 * std::max(1.0, diff.max_abs_coeff())) return std::nullopt;
    if (accepts(dm.quotient)) return dm.quotient;
    return std::nullopt;
  }

  std::optional<Polynomial> constants() const {
    if (accepts(Polynomial{})) return Polynomial{};
    if (H_.is_zero() || H_.degree() == 2) return std::nullopt;
    std::vector<Complex> grid;
    for (int i = -8; i <= 8; ++i)
      for (int j = -8; j <= 8; ++j)
        if (i != 0 || j != 0) grid.emplace_back(0.25 * i, 0.25 * j);
    std::stable_sort(grid.begin(), grid.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    for (const Complex c : grid)
      if (accepts(Polynomial::constant(c))) return Polynomial::constant(c);
    return std::nullopt;
  }

  // Exact members of c (1 + z/w)^m matching F at the roots of a degree <= 2 H.
  std::optional<Polynomial> family() const {
    if (H_.degree() < 1 || H_.degree() > 2) return std::nullopt;
    const auto nodes = distinct_roots(H_);
    const int max_power = budget_.max_degree + H_.degree();
    const double min_w = 1.0 + budget_.margin;
    auto member = [&](Complex anchor, Complex value, Complex w, int m) {
      const Complex c = value / std::pow(1.0 + anchor / w, m);
      return c * pow(Polynomial{1.0, 1.0 / w}, m);
    };

    if (nodes.size() == 1 && nodes[0].multiplicity == 1) {
      const Complex v = eval(F_, nodes[0].point);
      if (v != Complex(0.0))
        if (auto g = through_target(Polynomial::constant(v))) return g;
      return std::nullopt;
    }
    if (nodes.size() == 1) {
      // Double root r: u'(r)/u(r) = m/(w + r) must equal F'(r)/F(r).
      const Complex r = nodes[0].point;
      const auto jet = taylor_coefficients(F_, r, 2);
      if (jet[0] == Complex(0.0)) return std::nullopt;
      const Complex slope = jet[1] / jet[0];
      if (std::abs(slope) < 1e-14) return through_target(Polynomial::constant(jet[0]));
      for (int m = 1; m <= max_power; ++m) {
        const Complex w = double(m) / slope - r;
        if (std::abs(w) < min_w) continue;
        if (auto g = through_target(member(r, jet[0], w, m))) return g;
      }
      return std::nullopt;
    }
    // Two simple roots: ((w + r1)/(w + r2))^m = F(r1)/F(r2).
    const Complex r1 = nodes[0].point, r2 = nodes[1].point;
    const Complex v1 = eval(F_, r1), v2 = eval(F_, r2);
    if (v1 == Complex(0.0) || v2 == Complex(0.0)) return std::nullopt;
    const Complex ratio = v1 / v2;
    if (std::abs(ratio - 1.0) < 1e-14)
      if (auto g = through_target(Polynomial::constant(v1))) return g;
    for (int m = 1; m <= max_power; ++m)
      for (int k = 0; k < m; ++k) {
        const Complex t = std::polar(std::pow(std::abs(ratio), 1.0 / m), (std::arg(ratio) + 2.0 * std::numbers::pi * k) / m);
        if (std::abs(1.0 - t) < 1e-12) continue;
        const Complex w = (t * r2 - r1) / (1.0 - t);
        if (std::abs(w) < min_w) continue;
        if (auto g = through_target(member(r1, v1, w, m))) return g;
      }
    return std::nullopt;
  }

  // Zero-free targets P^m, P close to exp(q/m) where q interpolates a branch
  // of log F at the roots of H.
  std::optional<Polynomial> log_hermite() const {
    if (H_.degree() < 1) {
      if (H_.is_zero()) return std::nullopt;
      return through_target(Polynomial::constant(1.0));
    }
    const auto nodes = distinct_roots(H_);
    std::vector<std::vector<Complex>> jets;
    for (const auto& node : nodes) {
      jets.push_back(taylor_coefficients(F_, node.point, node.multiplicity));
      if (std::abs(jets.back()[0]) < 1e-12) return std::nullopt;
    }

    // Branches are relative to the first node, whose branch is pinned: a
    // common shift of 2 pi i leaves P^m unchanged. Candidate branch choices
    // are tried in order of the sup of their log interpolant on the circle.
    static constexpr int kBranches[5] = {0, -1, 1, -2, 2};
    const std::size_t varied = std::min<std::size_t>(nodes.size(), 5);
    int combos = 1;
    for (std::size_t i = 1; i < varied; ++i) combos *= 5;

    struct Choice {
      double size;
      int combo;
      std::vector<std::vector<Complex>> log_jets;
    };
    std::vector<Choice> choices;
    for (int combo = 0; combo < combos; ++combo) {
      Choice c{0.0, combo, {}};
      int code = combo;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        int branch = 0;
        if (i > 0 && i < varied) {
          branch = kBranches[code % 5];
          code /= 5;
        }
        c.log_jets.push_back(log_series(jets[i], branch));
      }
      const Polynomial q = hermite_interpolate(nodes, c.log_jets);
      for (int k = 0; k < 256; ++k)
        c.size = std::max(c.size, std::abs(eval(q, std::polar(1.0, 2.0 * std::numbers::pi * k / 256))));
      choices.push_back(std::move(c));
    }
    std::stable_sort(choices.begin(), choices.end(), [](const Choice& a, const Choice& b) { return a.size < b.size; });
    if (choices.size() > 64) choices.resize(64);

    const int max_power_degree = budget_.max_degree + H_.degree();
    const int dp = std::max(H_.degree() - 1, 1);
    for (const auto& choice : choices) {
      // u = P^m where P interpolates the jets of exp(log F / m); then u and F
      // share their jets at every root of H.
      for (int m = 1; m * dp <= max_power_degree; ++m) {
        std::vector<std::vector<Complex>> root_jets;
        for (const auto& lj : choice.log_jets) {
          std::vector<Complex> scaled(lj.size());
          for (std::size_t k = 0; k < lj.size(); ++k) scaled[k] = lj[k] / double(m);
          root_jets.push_back(exp_series(scaled));
        }
        if (auto g = through_target(pow(hermite_interpolate(nodes, root_jets), m))) return g;
      }
    }
    return std::nullopt;
  }

  std::optional<Polynomial> stochastic() const {
    if (H_.is_zero()) return std::nullopt;
    std::mt19937_64 rng(budget_.seed);
    std::normal_distribution<double> gauss;
    const double scale = std::max(1e-3, F_.l1_norm() / H_.l1_norm());
    const int top_degree = std::min(budget_.max_degree, std::max(F_.degree(), 0) + 2);
    std::uniform_int_distribution<int> pick_degree(0, std::max(top_degree, 0));
    auto random_coeffs = [&](int d, double sigma) {
      Eigen::VectorXcd c(d + 1);
      for (int k = 0; k <= d; ++k) {
        const double re = gauss(rng);
        c[k] = sigma * Complex(re, gauss(rng));
      }
      return c;
    };

    int iter = 0;
    while (iter < budget_.max_iters) {
      const int d = pick_degree(rng);
      Eigen::VectorXcd coeffs = random_coeffs(d, scale);
      double best = objective(Polynomial(coeffs));
      ++iter;
      double sigma = 0.3 * scale;
      for (int step = 0; step < 200 && iter < budget_.max_iters; ++step) {
        if (best >= budget_.margin) break;
        const Eigen::VectorXcd trial = coeffs + random_coeffs(d, sigma);
        const double value = objective(Polynomial(trial));
        ++iter;
        if (value > best) {
          coeffs = trial;
          best = value;
          sigma *= 1.5;
        } else {
          sigma *= 0.85;
        }
        if (sigma < 1e-9 * scale) break;
      }
      if (best >= budget_.margin) {
        Polynomial g(coeffs);
        if (accepts(g)) return g;
      }
    }
    return std::nullopt;
  }

private:
  const Polynomial& F_;
  const Polynomial& H_;
  SearchBudget budget_;
};

}  // namespace

CertifiedBound eta(const Polynomial& f, const Polynomial& h, double rel_gap) {
  const double lf = derivative_l1(f), lh = derivative_l1(h);
  const double rounding = 1e-14 * (f.l1_norm() + h.l1_norm());
  CertifiedBound b;
  int radial = 32, angular = 128;
  for (int refinement = 0; refinement <= 6; ++refinement) {
    const double rho = 0.5 / radial + std::numbers::pi / angular;
    double grid_min = kInf;
    const auto scan = scan_disk(
        [&](Complex z) {
          const double af = std::abs(eval(f, z)), ah = std::abs(eval(h, z));
          grid_min = std::min(grid_min, af + ah);
          return std::max(0.0, af - rho * lf) + std::max(0.0, ah - rho * lh);
        },
        radial, angular);
    b.lower = std::max(0.0, scan.min_value - rounding);
    b.upper = grid_min;
    b.method = "disk-grid " + std::to_string(radial) + "x" + std::to_string(angular) + " Lipschitz";
    if (b.lower > 0.0 && b.lower >= (1.0 - rel_gap) * grid_min) break;
    radial *= 2;
    angular *= 2;
  }
  return b;
}

UnimodularPair UnimodularPair::make(Polynomial f, Polynomial h, AtomicMeasure measure) {
  CertifiedBound bound = eta(f, h);
  if (!(bound.lower > 0.0))
    throw Error(ErrorCode::EtaNotPositive, "inf(|f| + |h|) over the closed disk is not certified positive");
  return {std::move(f), std::move(h), std::move(measure), std::move(bound)};
}

Case1Result case1_transform(const Polynomial& f, const Polynomial& h, const UnitCirclePoint& zeta, double eta_lower) {
  const Complex at = eval(f, zeta.value());
  if (std::abs(at) < 1e-9)
    throw Error(ErrorCode::CaseTwoRequired, "f vanishes at the atom; apply the (f + h, h) transform first");
  const double half = 0.5 * std::abs(at);
  Case1Result r;
  r.pair = {f, (f - at) * h};
  r.certified_eta = std::min(std::min(1.0, half) * eta_lower, half);
  return r;
}

Case1Result case1_transform(const Polynomial& f, const Polynomial& h, const UnitCirclePoint& zeta) {
  return case1_transform(f, h, zeta, eta(f, h).lower);
}

std::pair<Polynomial, Polynomial> case2_transform(const Polynomial& f, const Polynomial& h) { return {f + h, h}; }

std::optional<Polynomial> search_g(const Polynomial& F, const Polynomial& H, const SearchBudget& budget) {
  if (budget.max_degree < 0 || budget.max_iters < 0 || !(budget.margin > 0.0))
    throw Error(ErrorCode::InvalidBudget, "search budget needs max_degree >= 0, max_iters >= 0, margin > 0");
  const Searcher s(F, H, budget);
  if (auto g = s.constants()) return g;
  if (auto g = s.family()) return g;
  if (auto g = s.log_hermite()) return g;
  return s.stochastic();
}

std::string to_string(CaseStep::Kind k) { return k == CaseStep::Kind::Case1 ? "CASE1" : "CASE2"; }

namespace {

void apply_step(TransformedPair& t, const CaseStep& step) {
  if (step.kind == CaseStep::Kind::Case2) {
    std::tie(t.F, t.H) = case2_transform(t.F, t.H);
    t.offset += t.factor;
  } else {
    const Polynomial shift = t.F - eval(t.F, step.zeta.value());
    t.H = shift * t.H;
    t.factor = t.factor * shift;
  }
  t.trace.push_back(step);
}

}  // namespace

TransformedPair transform_pair(const Polynomial& f, const Polynomial& h, const AtomicMeasure& mu) {
  TransformedPair t;
  t.F = f;
  t.H = h;
  for (const auto& atom : mu) {
    if (std::abs(eval(t.F, atom.zeta.value())) < 1e-9) apply_step(t, {CaseStep::Kind::Case2, atom.zeta});
    apply_step(t, {CaseStep::Kind::Case1, atom.zeta});
  }
  return t;
}

TransformedPair replay(const Polynomial& f, const Polynomial& h, const std::vector<CaseStep>& trace) {
  TransformedPair t;
  t.F = f;
  t.H = h;
  for (const auto& step : trace) apply_step(t, step);
  return t;
}

std::optional<ReductionWitness> reduce(const Polynomial& f, const Polynomial& h, const AtomicMeasure& mu,
                                       const SearchBudget& budget) {
  const auto pair = UnimodularPair::make(f, h, mu);
  const TransformedPair t = transform_pair(pair.f, pair.h, mu);
  const auto g = search_g(t.F, t.H, budget);
  if (!g) return std::nullopt;

  ReductionWitness w;
  w.final_g = *g;
  w.y = t.offset + t.factor * *g;
  w.u = f + w.y * h;
  w.case_trace = t.trace;
  if (w.u.is_zero()) return std::nullopt;
  w.root_margin = root_margin(w.u);
  if (!(w.root_margin > 0.0) || !(min_modulus_closed_disk(w.u).lower > 0.0)) return std::nullopt;
  return w;
}

VerificationReport verify_witness(const Polynomial& f, const Polynomial& h, const ReductionWitness& w, double tol) {
  VerificationReport rep;
  const Polynomial u = f + w.y * h;
  const double identity = max_coeff_diff(u, w.u);
  rep.items.push_back({"identity", identity <= tol, identity, "max coefficient of (f + y h) - u"});

  if (u.is_zero()) {
    rep.items.push_back({"margin_recomputed", false, -kInf, "f + y h is the zero polynomial"});
    return rep;
  }
  const double margin = root_margin(u);
  const bool same = (std::isinf(margin) && std::isinf(w.root_margin) && margin > 0 && w.root_margin > 0) ||
                    std::abs(margin - w.root_margin) <= tol;
  rep.items.push_back({"margin_recomputed", same, margin, "claimed " + std::to_string(w.root_margin)});
  rep.items.push_back({"margin_positive", margin > 0.0, margin, "all roots of u outside the closed disk"});
  return rep;
}

}  // namespace dmu
