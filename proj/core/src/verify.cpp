#include "laguerre/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "laguerre/coefficient_field.hpp"
#include "laguerre/decay_fit.hpp"
#include "laguerre/error.hpp"
#include "laguerre/fields.hpp"
#include "laguerre/multi_index.hpp"
#include "laguerre/operator.hpp"
#include "laguerre/polynomials.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/seminorms.hpp"
#include "laguerre/sequence_norms.hpp"
#include "laguerre/transform.hpp"

namespace laguerre::verify {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void bound(std::string name, double measured, double allowed, std::string note = {}) {
    const bool ok = std::isfinite(measured) && measured <= allowed;
    checks_.push_back({suite_, std::move(name), measured, allowed, ok, std::move(note)});
  }
  void count(std::string name, std::size_t violations, std::string note = {}) {
    bound(std::move(name), static_cast<double>(violations), 0.0, std::move(note));
  }
  void at_least(std::string name, double measured, double required, std::string note = {}) {
    const bool ok = measured >= required;
    checks_.push_back({suite_, std::move(name), measured, required, ok, std::move(note)});
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * static_cast<double>(i) /
                                       static_cast<double>(n - 1));
  }
  return g;
}

CoefficientField random_field(std::mt19937_64& rng, std::size_t dim, std::uint32_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return CoefficientField::generate(dim, {TruncationKind::Total, degree},
                                    [&](const MultiIndex&) { return u(rng); });
}

// Random coefficients with a random decay profile, so weighted norms and
// iterate norms cover several orders of magnitude.
CoefficientField random_decaying_field(std::mt19937_64& rng, std::size_t dim,
                                       std::uint32_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> rate(0.0, 2.0);
  const double c = rate(rng);
  return CoefficientField::generate(dim, {TruncationKind::Total, degree}, [&](const MultiIndex& n) {
    return u(rng) * std::exp(-c * static_cast<double>(n.order()));
  });
}

CoefficientField shell_sequence(std::uint32_t degree, const std::function<double(double)>& b) {
  return CoefficientField::generate(1, {TruncationKind::Total, degree}, [&](const MultiIndex& n) {
    return b(static_cast<double>(n.order()));
  });
}

// ---------------------------------------------------------------- core

std::vector<Check> core_suite() {
  Recorder r("core");

  r.bound("poly_examples",
          std::max({std::fabs(laguerre_poly(0, 7.3) - 1.0), std::fabs(laguerre_poly(1, 2.0) + 1.0),
                    std::fabs(laguerre_poly(2, 1.0) + 0.5)}),
          1e-15);

  double worst = 0.0;
  for (double x : {0.1, 1.0, 10.0, 50.0}) {
    for (long long j = 1; j <= 60; ++j) {
      const double lm = laguerre_poly(j - 1, x);
      const double l0 = laguerre_poly(j, x);
      const double lp = laguerre_poly(j + 1, x);
      const double jd = static_cast<double>(j);
      const double res = std::fabs((jd + 1.0) * lp - (2.0 * jd + 1.0 - x) * l0 + jd * lm);
      worst = std::max(worst, res / std::max(1.0, std::fabs(l0)));
    }
  }
  r.bound("recurrence_consistency", worst, 1e-12, "j <= 60, x in {0.1,1,10,50}");

  worst = 0.0;
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    const std::vector<double> origin(dim, 0.0);
    for (const auto& n : enumerate_total_degree(dim, 30)) {
      worst = std::max(worst, std::fabs(laguerre_function(n, origin) - 1.0));
    }
  }
  r.bound("boundary_values", worst, 1e-14, "l_n(0) = 1, |n| <= 30, d <= 3");

  worst = 0.0;
  for (double x : log_grid(1e-3, 80.0, 200)) {
    for (std::uint32_t j = 0; j <= 40; ++j) {
      const double v = laguerre_function(j, x);
      const double d1 = laguerre_function_derivative(j, 1, x);
      const double d2 = laguerre_function_derivative(j, 2, x);
      const double res = x * d2 + d1 - 0.25 * x * v + 0.5 * v + static_cast<double>(j) * v;
      worst = std::max(worst, std::fabs(res));
    }
  }
  r.bound("ode_residual", worst, 1e-8, "j <= 40, 200-point log grid in (0, 80]");

  {
    const auto jets0 = laguerre_function_derivatives(MultiIndex{0}, std::vector<double>{2.0});
    const auto jets1 = laguerre_function_derivatives(MultiIndex{1}, std::vector<double>{0.0});
    const auto jets2 = laguerre_function_derivatives(MultiIndex{0}, std::vector<double>{4.0});
    r.bound("derivative_examples",
            std::max({std::fabs(jets0[0].d1 + 0.5 * std::exp(-1.0)),
                      std::fabs(jets1[0].value - 1.0), std::fabs(jets1[0].d1 + 1.5),
                      std::fabs(jets2[0].d2 - 0.25 * std::exp(-2.0))}),
            1e-15);
  }

  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> ux(0.0, 60.0);
  std::uniform_int_distribution<std::uint32_t> un(0, 25);
  worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(trial % 4);
    std::vector<std::uint32_t> e(dim);
    std::vector<double> x(dim);
    double product = 1.0;
    for (std::size_t a = 0; a < dim; ++a) {
      e[a] = un(rng);
      x[a] = ux(rng);
      product *= laguerre_function(e[a], x[a]);
    }
    const double v = laguerre_function(MultiIndex(e), x);
    worst = std::max(worst, std::fabs(v - product) / std::max(std::fabs(product), 1e-300));
  }
  r.bound("tensor_factorization", worst, 4.0 * std::numeric_limits<double>::epsilon());

  return r.take();
}

// ---------------------------------------------------------- quadrature

std::vector<Check> quadrature_suite() {
  Recorder r("quadrature");

  {
    const auto one = gauss_laguerre_rule(1);
    const auto two = gauss_laguerre_rule(2);
    double e = std::max(std::fabs(one.nodes[0] - 1.0), std::fabs(one.weights[0] - 1.0));
    e = std::max(e, std::fabs(two.nodes[0] - (2.0 - std::numbers::sqrt2)));
    e = std::max(e, std::fabs(two.nodes[1] - (2.0 + std::numbers::sqrt2)));
    double cube = 0.0;
    for (std::size_t k = 0; k < 2; ++k) cube += two.weights[k] * std::pow(two.nodes[k], 3);
    e = std::max(e, std::fabs(cube - 6.0));
    r.bound("small_rules", e, 1e-12, "K=1, K=2 nodes; K=2 integrates x^3");
  }

  double worst = 0.0;
  std::size_t order_violations = 0;
  std::size_t modified_violations = 0;
  for (std::size_t K = 1; K <= kMaxRuleSize; K += (K < 32 ? 1 : 17)) {
    const auto rule = gauss_laguerre_rule(K);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    worst = std::max(worst, std::fabs(sum - 1.0));
    for (std::size_t k = 0; k < K; ++k) {
      if (!(rule.nodes[k] > 0.0) || (k > 0 && !(rule.nodes[k] > rule.nodes[k - 1]))) {
        ++order_violations;
      }
      const double m = rule.modified_weight(k);
      if (!(m > 0.0) || !std::isfinite(m) || !(rule.weights[k] >= 0.0)) ++modified_violations;
    }
  }
  {
    const auto rule = gauss_laguerre_rule(kMaxRuleSize);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    worst = std::max(worst, std::fabs(sum - 1.0));
  }
  r.bound("weight_sum", worst, 1e-13, "K in [1, 512]");
  r.count("nodes_increasing_positive", order_violations);
  r.count("modified_weights_finite", modified_violations);

  worst = 0.0;
  for (std::size_t K : {4, 8, 16}) {
    const auto rule = gauss_laguerre_rule(K);
    for (std::size_t m = 0; m <= 2 * K - 1; ++m) {
      double s = 0.0;
      for (std::size_t k = 0; k < K; ++k) s += rule.weights[k] * std::pow(rule.nodes[k], m);
      const double exact = std::tgamma(static_cast<double>(m) + 1.0);
      worst = std::max(worst, std::fabs(s - exact) / exact);
    }
  }
  r.bound("moment_exactness", worst, 1e-10, "m <= 2K-1, K in {4,8,16}");

  {
    const auto rule = gauss_laguerre_rule(64);
    const std::uint32_t M = 32;
    std::vector<std::vector<double>> table(rule.size(), std::vector<double>(M + 1));
    for (std::size_t k = 0; k < rule.size(); ++k) laguerre_function_sweep(rule.nodes[k], table[k]);
    worst = 0.0;
    for (std::uint32_t i = 0; i <= M; ++i) {
      for (std::uint32_t j = 0; j <= M; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k) {
          s += rule.modified_weight(k) * table[k][i] * table[k][j];
        }
        worst = std::max(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
      }
    }
    r.bound("gram_identity", worst, 1e-10, "K=64, i,j <= 32");
  }

  {
    const auto rule = gauss_laguerre_rule(40);
    const double e1 = std::fabs(integrate_orthant(exp_decay_field(1), rule) - 1.0);
    const double e2 = std::fabs(integrate_orthant(exp_decay_field(2), rule) - 1.0);
    const double e3 = std::fabs(
        integrate_orthant([](std::span<const double> x) { return std::exp(-x[0]); }, rule, 1) -
        1.0);
    r.bound("integrate_exp_1d", std::max(e1, e3), 1e-12, "K=40");
    r.bound("integrate_exp_2d", e2, 1e-11, "K=40");
  }

  return r.take();
}

// ----------------------------------------------------------- transform

ScalarField exp_times_linear() {
  return ScalarField(1, [](std::span<const double> x) { return std::exp(-x[0]) * (1.0 + x[0]); });
}

std::vector<Check> transform_suite() {
  Recorder r("transform");

  {
    const auto rule = gauss_laguerre_rule(64);
    const auto a1 = analyze(exp_decay_field(1), {TruncationKind::Total, 20}, rule);
    double worst = 0.0;
    for (const auto& e : a1.entries()) {
      const double want = (2.0 / 3.0) * std::pow(1.0 / 3.0, static_cast<double>(e.index.order()));
      worst = std::max(worst, std::fabs(e.value - want));
    }
    r.bound("exp_coefficients_1d", worst, 1e-10, "n <= 20, K=64");

    const auto a2 = analyze(exp_decay_field(2), {TruncationKind::Total, 20}, rule);
    worst = 0.0;
    for (const auto& e : a2.entries()) {
      const double want = (4.0 / 9.0) * std::pow(1.0 / 3.0, static_cast<double>(e.index.order()));
      worst = std::max(worst, std::fabs(e.value - want));
    }
    r.bound("exp_coefficients_2d", worst, 1e-9, "|n| <= 20, K=64");
  }

  {
    const auto a = analyze(exp_decay_field(1), {TruncationKind::Total, 40});
    const double norm = parseval_l2_norm(a);
    r.bound("parseval_exp", std::fabs(norm * norm - 0.5), 1e-12, "M=40, default rule");
  }

  std::mt19937_64 rng(7031);
  {
    const auto f = exp_times_linear();
    const auto a = analyze(f, {TruncationKind::Total, 30});
    std::uniform_real_distribution<double> ux(0.0, 30.0);
    std::vector<std::vector<double>> points(100);
    for (auto& p : points) p = {ux(rng)};
    const auto values = synthesize(a, points);
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      worst = std::max(worst, std::fabs(values[i] - f(points[i])));
    }
    r.bound("roundtrip", worst, 1e-8, "e^{-x}(1+x), M=30, 100 points");

    const auto big = analyze(f, {TruncationKind::Total, 60});
    const double quad = std::sqrt(integrate_orthant(
        [&f](std::span<const double> x) {
          const double v = f(x);
          return v * v;
        },
        gauss_laguerre_rule(80), 1));
    r.bound("parseval_consistency", std::fabs(parseval_l2_norm(big) - quad), 1e-7, "M=60");
  }

  {
    const Truncation t{TruncationKind::Total, 12};
    const auto rule = gauss_laguerre_rule(40);
    const auto f = exp_decay_field(2);
    const auto g = laguerre_basis_field(MultiIndex{2, 3});
    const double alpha = 1.7;
    const double beta = -0.4;
    const ScalarField h(2, [&](std::span<const double> x) { return alpha * f(x) + beta * g(x); });
    const auto af = analyze(f, t, rule);
    const auto ag = analyze(g, t, rule);
    const auto ah = analyze(h, t, rule);
    double worst = 0.0;
    for (std::size_t i = 0; i < ah.size(); ++i) {
      const double want = alpha * af.entries()[i].value + beta * ag.entries()[i].value;
      worst = std::max(worst, std::fabs(ah.entries()[i].value - want));
    }
    r.bound("linearity", worst, 1e-12, "d=2, M=12");

    const auto basis = analyze(laguerre_basis_field(MultiIndex{3}), {TruncationKind::Total, 10});
    worst = 0.0;
    for (const auto& e : basis.entries()) {
      worst = std::max(worst, std::fabs(e.value - (e.index.order() == 3 ? 1.0 : 0.0)));
    }
    r.bound("basis_coefficients", worst, 1e-10, "l_3, M=10");
  }

  {
    double worst = 0.0;
    for (std::size_t dim = 1; dim <= 2; ++dim) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_field(rng, dim, 10);
        const auto back = analyze(series_field(a), a.truncation());
        for (std::size_t i = 0; i < a.size(); ++i) {
          worst = std::max(worst, std::fabs(back.entries()[i].value - a.entries()[i].value));
        }
      }
    }
    r.bound("idempotent_roundtrip", worst, 1e-10, "random band-limited fields, M=10");
  }

  {
    const auto rule = gauss_laguerre_rule(64);
    const auto f = exp_times_linear();
    const auto small = analyze(f, {TruncationKind::Total, 10}, rule);
    const auto large = analyze(f, {TruncationKind::Total, 20}, rule);
    double worst = 0.0;
    for (const auto& e : small.entries()) {
      worst = std::max(worst, std::fabs(e.value - large.at(e.index)));
    }
    r.bound("truncation_monotonicity", worst, 1e-12, "M=10 vs M=20, K=64");
  }

  return r.take();
}

// ------------------------------------------------------------ operator

std::vector<Check> operator_suite() {
  Recorder r("operator");

  {
    const std::vector<double> at2{2.0};
    const std::vector<double> at1{1.0};
    double e = std::fabs(apply_E_pointwise(laguerre_basis_field(MultiIndex{0}), at2));
    e = std::max(e, std::fabs(apply_E_pointwise(laguerre_basis_field(MultiIndex{1}), at2) +
                              std::exp(-1.0)));
    e = std::max(e, std::fabs(apply_E_pointwise(exp_decay_field(1), at1) + std::exp(-1.0) / 4.0));
    r.bound("pointwise_examples", e, 1e-10);
  }

  {
    const Truncation t{TruncationKind::Total, 6};
    const auto unit = CoefficientField::unit(MultiIndex{2, 3}, t);
    double e = std::fabs(apply_E_spectral(unit, 2).at(MultiIndex{2, 3}) - 25.0);
    e = std::max(e, std::fabs(apply_E_spectral(unit, 1).at(MultiIndex{2, 3}) - 5.0));
    e = std::max(e, apply_E_spectral(unit, 0) == unit ? 0.0 : 1.0);
    e = std::max(e, iterate_norm(CoefficientField::unit(MultiIndex{0}, t), 3));
    const auto two = CoefficientField::from_entries(1, t, {{MultiIndex{1}, 1.0}, {MultiIndex{2}, 1.0}});
    e = std::max(e, std::fabs(iterate_norm(two, 3) - std::sqrt(65.0)));
    r.bound("spectral_examples", e, 1e-12);
  }

  std::mt19937_64 rng(9001);
  {
    std::uniform_real_distribution<double> ux(0.0, 20.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t dim = 1 + static_cast<std::size_t>(trial % 2);
      const auto a = random_field(rng, dim, 12);
      const auto f = series_field(a);
      const auto ea = apply_E_spectral(a, 1);
      for (int i = 0; i < 50; ++i) {
        std::vector<double> x(dim);
        for (auto& v : x) v = ux(rng);
        worst = std::max(worst, std::fabs(apply_E_pointwise(f, x) - synthesize_at(ea, x)));
      }
    }
    r.bound("spectral_pointwise_agreement", worst, 1e-7, "M=12, d in {1,2}, 100 x 50 points");
  }

  {
    std::uniform_real_distribution<double> ut(0.0, 2.0);
    std::uniform_int_distribution<std::uint32_t> un(0, 6);
    double law = 0.0;
    double comm = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_field(rng, 1 + static_cast<std::size_t>(trial % 3), 10);
      const double s = ut(rng);
      const double t = ut(rng);
      const std::uint32_t N = un(rng);
      const auto lhs = semigroup_propagate(semigroup_propagate(a, s), t);
      const auto rhs = semigroup_propagate(a, s + t);
      const auto c1 = apply_E_spectral(semigroup_propagate(a, t), N);
      const auto c2 = semigroup_propagate(apply_E_spectral(a, N), t);
      for (std::size_t i = 0; i < a.size(); ++i) {
        law = std::max(law, rel_err(lhs.entries()[i].value, rhs.entries()[i].value));
        comm = std::max(comm, rel_err(c1.entries()[i].value, c2.entries()[i].value));
      }
    }
    r.bound("semigroup_law", law, 1e-13, "relative to max(1,|value|)");
    r.bound("semigroup_commutation", comm, 1e-13, "relative to max(1,|value|)");

    const auto unit = CoefficientField::unit(MultiIndex{1}, {TruncationKind::Total, 4});
    r.bound("semigroup_ln2", std::fabs(semigroup_propagate(unit, std::log(2.0)).at(MultiIndex{1}) - 0.5),
            1e-15);
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_field(rng, 2, 12);
      for (std::uint32_t N = 0; N <= 20; ++N) {
        double naive = 0.0;
        for (const auto& e : a.entries()) {
          const double lam = std::pow(static_cast<double>(e.index.order()), N);
          naive += lam * lam * e.value * e.value;
        }
        if (!std::isfinite(naive)) continue;
        const double got = iterate_norm(a, N);
        worst = std::max(worst, std::fabs(got * got - naive) / naive);
      }
    }
    r.bound("iterate_norm_log_space", worst, 1e-10, "relative, N <= 20");
  }

  return r.take();
}

// ------------------------------------------------------------ analysis

double eigen_eta_oracle(double order, double h, double alpha, std::uint32_t n_max) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint32_t N = 1; N <= n_max; ++N) {
    const double nd = static_cast<double>(N);
    best = std::max(best, nd * std::log(order / h) - alpha * std::lgamma(nd + 1.0));
  }
  return std::exp(best);
}

std::vector<Check> analysis_suite() {
  Recorder r("analysis");

  {
    const SpaceParams p1{0.5, 1.0, SpaceKind::Roumieu};
    const SpaceParams p2{1.0, 2.0, SpaceKind::Roumieu};
    double e = std::fabs(theta_weight(MultiIndex{0, 0}, p1) - 1.0);
    e = std::max(e, rel_err(theta_weight(MultiIndex{4}, p1), std::exp(4.0)));
    e = std::max(e, rel_err(theta_weight(MultiIndex{1, 3}, p2), std::exp(4.0)));
    const auto two = CoefficientField::from_entries(
        1, {TruncationKind::Total, 2}, {{MultiIndex{0}, 1.0}, {MultiIndex{1}, 1.0}});
    e = std::max(e, rel_err(weighted_seq_norm(two, p1, 2.0), std::sqrt(1.0 + std::exp(2.0))));
    r.bound("weight_examples", e, 1e-14);
  }

  {
    std::size_t violations = 0;
    const std::vector<double> hs{0.1, 0.5, 1.0, 2.0, 5.0};
    const std::vector<double> alphas{0.25, 0.5, 1.0, 2.0, 4.0};
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        for (std::uint64_t m = 0; m <= 50; ++m) {
          const double w = log_theta_weight(m, {alphas[j], hs[i], SpaceKind::Roumieu});
          if (m > 0 && w < log_theta_weight(m - 1, {alphas[j], hs[i], SpaceKind::Roumieu})) {
            ++violations;
          }
          if (i > 0 && w < log_theta_weight(m, {alphas[j], hs[i - 1], SpaceKind::Roumieu})) {
            ++violations;
          }
          if (j > 0 && m >= 2 &&
              !(w < log_theta_weight(m, {alphas[j - 1], hs[i], SpaceKind::Roumieu}))) {
            ++violations;
          }
        }
      }
    }
    r.count("weight_monotonicity", violations);
  }

  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> uh(0.1, 4.0);
  std::uniform_real_distribution<double> ua(0.1, 3.0);
  {
    std::size_t ordering = 0;
    std::size_t equivalence = 0;
    std::size_t eta_h = 0;
    std::size_t eta_alpha = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t dim = 1 + static_cast<std::size_t>(trial % 2);
      const auto a = random_decaying_field(rng, dim, dim == 1 ? 20 : 12);
      const SpaceParams params{ua(rng), uh(rng), SpaceKind::Roumieu};
      const double n1 = log_weighted_seq_norm(a, params, 1.0);
      const double n2 = log_weighted_seq_norm(a, params, 2.0);
      const double ni = log_weighted_seq_norm(a, params, std::numeric_limits<double>::infinity());
      if (!(ni <= n2 && n2 <= n1)) ++ordering;

      const double h = params.scale;
      const double h1 = h * std::uniform_real_distribution<double>(0.05, 0.95)(rng);
      if (!norm_equivalence_gap(a, h, h1, params.alpha).holds) ++equivalence;

      const double alpha = params.alpha;
      const double beta = alpha + ua(rng);
      const double hb = h + uh(rng);
      const auto base = eta_seminorm(a, alpha, h, 40);
      if (!(eta_seminorm(a, alpha, hb, 40).log_value <= base.log_value)) ++eta_h;
      if (!(eta_seminorm(a, beta, h, 40).log_value <= base.log_value)) ++eta_alpha;
    }
    r.count("norm_ordering", ordering, "1000 random sequences");
    r.count("norm_equivalence", equivalence, "1000 random sequences");
    r.count("eta_monotone_in_h", eta_h, "1000 random sequences");
    r.count("eta_monotone_in_alpha", eta_alpha, "1000 random sequences");
  }

  {
    double worst = 0.0;
    std::size_t alpha_zero = 0;
    for (std::uint32_t order : {1u, 3u, 7u}) {
      const auto unit = CoefficientField::unit(MultiIndex{order, 0}, {TruncationKind::Total, order});
      for (double h : {0.5, 1.0, 2.0}) {
        for (double alpha : {0.5, 1.0, 2.0}) {
          const double got = eta_seminorm(unit, alpha, h, 60).value;
          const double want = eigen_eta_oracle(order, h, alpha, 60);
          worst = std::max(worst, std::fabs(got - want) / want);
        }
        const bool bounded = !eta_seminorm(unit, 0.0, h, 60).growth;
        if (bounded != (order <= h)) ++alpha_zero;
      }
    }
    r.bound("eta_eigenfunction", worst, 1e-12, "|p| in {1,3,7}, h, alpha in {0.5,1,2}");
    r.count("eta_alpha_zero", alpha_zero, "finite iff |p| <= h");
    const auto zero = CoefficientField::unit(MultiIndex{0}, {TruncationKind::Total, 3});
    r.bound("eta_unit_zero", eta_seminorm(zero, 1.0, 1.0, 20).value, 0.0);
  }

  {
    double t_err = 0.0;
    double c_err = 0.0;
    for (double c : {1.0, 2.0}) {
      for (double t : {0.5, 2.0 / 3.0, 1.0}) {
        const auto a = shell_sequence(400, [&](double m) { return std::exp(-c * std::pow(m, t)); });
        const auto fit = *estimate_decay_params(a).fit;
        t_err = std::max(t_err, std::fabs(fit.t_hat - t));
        c_err = std::max(c_err, std::fabs(fit.c_hat - c));
      }
    }
    r.bound("decay_fit_exponent", t_err, 0.03, "(c,t) in {1,2} x {1/2,2/3,1}");
    r.bound("decay_fit_rate", c_err, 0.05, "(c,t) in {1,2} x {1/2,2/3,1}");
  }

  {
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    std::uniform_real_distribution<double> scale(-5.0, 5.0);
    std::size_t matched = 0;
    std::size_t total = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const double c = trial % 2 == 0 ? 1.0 : 2.0;
      const double t = std::vector<double>{0.5, 2.0 / 3.0, 1.0}[static_cast<std::size_t>(trial % 3)];
      const double amplitude = std::exp(scale(rng));
      const auto a = shell_sequence(400, [&](double m) {
        return amplitude * std::exp(-c * std::pow(m, t)) * (1.0 + jitter(rng));
      });
      matched += classify_pilipovic(a, 1.0 / t).verdict == Membership::Roumieu ? 1 : 0;
      matched += classify_pilipovic(a, 2.0 / t).verdict == Membership::Beurling ? 1 : 0;
      total += 2;
    }
    r.at_least("classifier_directional", static_cast<double>(matched) / static_cast<double>(total),
               0.95, "fraction of perturbed synthetic families");

    std::size_t accepted = 0;
    for (double power : {1.0, 2.0, 4.0}) {
      const auto a = shell_sequence(400, [&](double m) { return std::pow(1.0 + m, -power); });
      for (double alpha : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) {
        if (classify_pilipovic(a, alpha).verdict != Membership::NotMember) ++accepted;
      }
    }
    r.count("classifier_rejects_polynomial", accepted, "powers {1,2,4}, six alphas");

    std::size_t changed = 0;
    for (double alpha : {1.0, 1.5, 2.0, 4.0}) {
      const auto a = shell_sequence(300, [](double m) { return std::exp(-std::pow(m, 2.0 / 3.0)); });
      const auto base = classify_pilipovic(a, alpha).verdict;
      for (double k : {-1e3, -1.0, 1e-3, 7.5, 1e4}) {
        const auto scaled = a.map([k](const MultiIndex&, double v) { return k * v; });
        if (classify_pilipovic(scaled, alpha).verdict != base) ++changed;
      }
    }
    r.count("classifier_scale_invariance", changed);
  }

  {
    // Directional eta check at alpha = 1 on shells of the same decay classes.
    std::size_t wrong = 0;
    const auto member = shell_sequence(400, [](double m) { return std::exp(-m); });
    const auto poly = shell_sequence(400, [](double m) { return std::pow(1.0 + m, -2.0); });
    bool clear_somewhere = false;
    for (double h : {0.5, 1.0, 2.0, 4.0}) {
      clear_somewhere |= !eta_seminorm(member, 1.0, h, 60).growth;
      if (!eta_seminorm(poly, 1.0, h, 60).growth) ++wrong;
    }
    if (!clear_somewhere) ++wrong;
    if (!eta_seminorm(member, 1.0, 0.5, 60).growth) ++wrong;
    r.count("eta_growth_direction", wrong, "alpha=1, h in {0.5,1,2,4}");
  }

  {
    const auto rule = gauss_laguerre_rule(48);
    std::size_t mismatched = 0;
    const auto l0 = laguerre_basis_field(MultiIndex{0});
    const auto ex = exp_decay_field(1);
    for (double alpha : {1.0, 2.0}) {
      for (const ScalarField* f : {&l0, &ex}) {
        const bool bounded = gtype_seminorm(*f, {alpha, 1.0, SpaceKind::Roumieu}, 6, rule).bounded;
        const auto a = analyze(*f, {TruncationKind::Total, 60}, gauss_laguerre_rule(96));
        ClassifyOptions options;
        options.floor = 1e-13;
        const auto verdict = classify_pilipovic(a, alpha, options).verdict;
        const bool member = verdict == Membership::Roumieu || verdict == Membership::Beurling;
        if (bounded != member) ++mismatched;
      }
    }
    r.count("gtype_classifier_consistency", mismatched,
            "f in {l_0, e^{-x}}, alpha in {1,2}, A=1, floor 1e-13");

    const SpaceParams unit_params{1.0, 1.0, SpaceKind::Roumieu};
    const auto g = gtype_seminorm(l0, unit_params, 1, rule);
    double e = std::fabs(g.order_max[0] - 1.0);
    e = std::max(e, std::fabs(g.value - 1.0));
    r.bound("gtype_examples", e, 1e-12, "f = l_0, P = 1");

    const auto s00 = schwartz_seminorm(l0, MultiIndex{0}, MultiIndex{0});
    const auto s10 = schwartz_seminorm(l0, MultiIndex{1}, MultiIndex{0});
    const auto s01 = schwartz_seminorm(l0, MultiIndex{0}, MultiIndex{1});
    e = std::max({std::fabs(s00.value - 1.0), std::fabs(s10.value - 2.0 / std::numbers::e),
                  std::fabs(s01.value - 0.5)});
    r.bound("schwartz_examples", e, 1e-10, "f = l_0");
  }

  return r.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"core", "quadrature", "transform", "operator", "analysis"};
}

std::vector<Check> run_suite(std::string_view suite) {
  if (suite == "core") return core_suite();
  if (suite == "quadrature") return quadrature_suite();
  if (suite == "transform") return transform_suite();
  if (suite == "operator") return operator_suite();
  if (suite == "analysis") return analysis_suite();
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw DomainError("unknown suite '" + std::string(suite) +
                    "' (expected core, quadrature, transform, operator, analysis or all)");
}

std::string format_report(std::span<const Check> checks) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-11s %-32s %12s %12s  %s\n", "suite", "check", "measured",
                "allowed", "result");
  os << line;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-11s %-32s %12.3e %12.3e  %s", c.suite.c_str(),
                  c.name.c_str(), c.measured, c.allowed, c.passed ? "PASS" : "FAIL");
    os << line;
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
    if (!c.passed) ++failed;
  }
  os << checks.size() - failed << " of " << checks.size() << " checks passed\n";
  return os.str();
}

bool all_passed(std::span<const Check> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace laguerre::verify
