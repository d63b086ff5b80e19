// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "laguerre/decay_fit.hpp"
#include "laguerre/fields.hpp"
#include "laguerre/operator.hpp"
#include "laguerre/parallel.hpp"
#include "laguerre/polynomials.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/seminorms.hpp"
#include "laguerre/sequence_norms.hpp"
#include "laguerre/transform.hpp"
#include "laguerre/verify.hpp"
#include "oracles.hpp"

using namespace laguerre;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, bool passed, const std::string& detail) {
  std::printf("%s  %2d  %-28s %s\n", passed ? "PASS" : "FAIL", id, name, detail.c_str());
  if (!passed) ++failures;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CoefficientField random_field(std::mt19937_64& rng, std::size_t dim, std::uint32_t M) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return CoefficientField::generate(dim, {TruncationKind::Total, M},
                                    [&](const MultiIndex&) { return u(rng); });
}

CoefficientField random_decaying(std::mt19937_64& rng, std::size_t dim, std::uint32_t M) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c = std::uniform_real_distribution<double>(0.05, 3.0)(rng);
  const double t = std::uniform_real_distribution<double>(0.3, 1.2)(rng);
  return CoefficientField::generate(dim, {TruncationKind::Total, M}, [&](const MultiIndex& n) {
    return u(rng) * std::exp(-c * std::pow(static_cast<double>(n.order()), t));
  });
}

CoefficientField shells(std::uint32_t M, const std::function<double(double)>& b) {
  return CoefficientField::generate(1, {TruncationKind::Total, M}, [&](const MultiIndex& n) {
    return b(static_cast<double>(n.order()));
  });
}

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(LAGUERRE_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void orthonormality() {
  const auto start = Clock::now();
  const auto rule = gauss_laguerre_rule(64);
  const std::uint32_t M = 32;
  std::vector<std::vector<double>> values(M + 1, std::vector<double>(rule.size()));
  for (std::uint32_t i = 0; i <= M; ++i) {
    for (std::size_t k = 0; k < rule.size(); ++k) values[i][k] = laguerre_function(i, rule.nodes[k]);
  }
  double worst = 0.0;
  for (std::uint32_t i = 0; i <= M; ++i) {
    for (std::uint32_t j = 0; j <= M; ++j) {
      long double s = 0.0L;
      for (std::size_t k = 0; k < rule.size(); ++k) {
        s += static_cast<long double>(rule.modified_weight(k)) * values[i][k] * values[j][k];
      }
      worst = std::max(worst, std::fabs(static_cast<double>(s) - (i == j ? 1.0 : 0.0)));
    }
  }
  const double elapsed = seconds_since(start);
  report(1, "orthonormality", worst <= 1e-10 && elapsed < 1.0,
         fmt("max|G-I| %.3e (allowed 1e-10), runtime %.3fs (allowed 1s)", worst, elapsed));
}

void eigenrelation() {
  double worst = 0.0;
  for (std::uint32_t j = 0; j <= 40; ++j) {
    for (int i = 0; i < 200; ++i) {
      // log grid on (0, 80]: 1e-6 .. 80
      const double x = 1e-6 * std::pow(80.0 / 1e-6, static_cast<double>(i) / 199.0);
      const double l = laguerre_function(j, x);
      const double d1 = laguerre_function_derivative(j, 1, x);
      const double d2 = laguerre_function_derivative(j, 2, x);
      const double residual = x * d2 + d1 - 0.25 * x * l + 0.5 * l + static_cast<double>(j) * l;
      worst = std::max(worst, std::fabs(residual));
    }
  }
  report(2, "eigenrelation_residual", worst <= 1e-8,
         fmt("max residual %.3e (allowed %.0e)", worst, 1e-8));
}

void spectral_vs_pointwise() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 20.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 2);
    const auto a = random_field(rng, d, 12);
    const auto f = series_field(a);
    const auto ea = apply_E_spectral(a, 1);
    for (int i = 0; i < 50; ++i) {
      std::vector<double> x(d);
      for (auto& v : x) v = ux(rng);
      worst = std::max(worst, std::fabs(apply_E_pointwise(f, x) - synthesize_at(ea, x)));
    }
  }
  report(3, "spectral_vs_pointwise", worst <= 1e-7,
         fmt("max diff %.3e (allowed %.0e)", worst, 1e-7));
}

void closed_form_transform() {
  const auto rule = gauss_laguerre_rule(64);
  const auto a1 = analyze(exp_decay_field(1), {TruncationKind::Total, 20}, rule);
  const auto a2 = analyze(exp_decay_field(2), {TruncationKind::Total, 20}, rule);
  double e1 = 0.0;
  for (const auto& e : a1.entries()) {
    e1 = std::max(e1, std::fabs(e.value - oracle::exp_decay_coefficient(e.index[0])));
  }
  double e2 = 0.0;
  for (const auto& e : a2.entries()) {
    const double want =
        oracle::exp_decay_coefficient(e.index[0]) * oracle::exp_decay_coefficient(e.index[1]);
    e2 = std::max(e2, std::fabs(e.value - want));
  }
  report(4, "closed_form_transform", e1 <= 1e-10 && e2 <= 1e-9,
         fmt("1-D %.3e (allowed 1e-10), 2-D %.3e (allowed 1e-9)", e1, e2));
}

void parseval() {
  const auto a = analyze(exp_decay_field(1), {TruncationKind::Total, 40});
  const double n = parseval_l2_norm(a);
  const double err = std::fabs(n * n - 0.5);
  report(5, "parseval", err <= 1e-12, fmt("|norm^2 - 1/2| %.3e (allowed %.0e)", err, 1e-12));
}

void eigenfunction_eta() {
  const Truncation t{TruncationKind::Total, 10};
  double worst = 0.0;
  for (unsigned order : {1u, 3u, 7u}) {
    for (double h : {0.5, 1.0, 2.0}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const auto a = CoefficientField::unit(MultiIndex{order}, t);
        const double got = eta_seminorm(a, alpha, h, 60).value;
        const double want = oracle::eta_of_eigenfunction(order, h, alpha, 60);
        worst = std::max(worst, std::fabs(got - want) / want);
      }
    }
  }
  int zero_alpha_wrong = 0;
  for (unsigned order : {1u, 2u, 3u, 4u, 7u}) {
    for (double h : {0.5, 1.0, 2.0, 3.0, 4.0}) {
      const auto a = CoefficientField::unit(MultiIndex{order}, t);
      const bool finite = !eta_seminorm(a, 0.0, h, 60).growth;
      if (finite != (static_cast<double>(order) <= h)) ++zero_alpha_wrong;
    }
  }
  report(6, "eigenfunction_eta", worst <= 1e-12 && zero_alpha_wrong == 0,
         fmt("max rel err %.3e (allowed 1e-12), alpha=0 mismatches %.0f (allowed 0)", worst,
             zero_alpha_wrong));
}

void decay_fit_recovery() {
  const auto start = Clock::now();
  double t_err = 0.0;
  double c_err = 0.0;
  for (double c : {1.0, 2.0}) {
    for (double t : {0.5, 2.0 / 3.0, 1.0}) {
      const auto est =
          estimate_decay_params(shells(400, [&](double m) { return std::exp(-c * std::pow(m, t)); }));
      if (!est.fit) {
        t_err = c_err = std::numeric_limits<double>::infinity();
        continue;
      }
      t_err = std::max(t_err, std::fabs(est.fit->t_hat - t));
      c_err = std::max(c_err, std::fabs(est.fit->c_hat - c));
    }
  }
  const double elapsed = seconds_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf, "max|dt| %.3e (allowed 0.03), max|dc| %.3e (allowed 0.05), %.3fs",
                t_err, c_err, elapsed);
  report(7, "decay_fit_recovery", t_err <= 0.03 && c_err <= 0.05 && elapsed < 5.0, buf);
}

void classifier_direction() {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> jitter(-0.2, 0.2);
  std::uniform_real_distribution<double> log_amp(-5.0, 5.0);
  const double ts[] = {0.5, 2.0 / 3.0, 1.0};
  int matched = 0;
  int total = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double c = trial % 2 == 0 ? 1.0 : 2.0;
    const double t = ts[trial % 3];
    const double amplitude = std::exp(log_amp(rng));
    const auto a = shells(400, [&](double m) {
      return amplitude * std::exp(-c * std::pow(m, t)) * (1.0 + jitter(rng));
    });
    matched += classify_pilipovic(a, 1.0 / t).verdict == Membership::Roumieu;
    matched += classify_pilipovic(a, 2.0 / t).verdict == Membership::Beurling;
    total += 2;
  }
  int accepted = 0;
  for (double power : {1.0, 2.0, 4.0}) {
    const auto a = shells(400, [&](double m) { return std::pow(1.0 + m, -power); });
    for (double alpha : {0.5, 1.0, 2.0, 3.0, 5.0, 10.0}) {
      const auto v = classify_pilipovic(a, alpha).verdict;
      if (v == Membership::Roumieu || v == Membership::Beurling) ++accepted;
    }
  }
  const double fraction = static_cast<double>(matched) / total;
  report(8, "classifier_direction", fraction >= 0.95 && accepted == 0,
         fmt("matched %.3f (allowed >= 0.95), polynomial accepted %.0f (allowed 0)", fraction,
             accepted));
}

void monotonicity() {
  std::mt19937_64 rng(1618);
  std::uniform_real_distribution<double> uh(0.1, 4.0);
  std::uniform_real_distribution<double> ua(0.1, 3.0);
  int eta_h = 0;
  int eta_alpha = 0;
  int ordering = 0;
  int equivalence = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 1 + static_cast<std::size_t>(trial % 2);
    const std::uint32_t M = dim == 1 ? 20 : 12;
    const auto a = random_decaying(rng, dim, M);
    const double alpha = ua(rng);
    const double h = uh(rng);
    const double base = eta_seminorm(a, alpha, h, 40).log_value;
    if (!(eta_seminorm(a, alpha, h + uh(rng), 40).log_value <= base)) ++eta_h;
    if (!(eta_seminorm(a, alpha + ua(rng), h, 40).log_value <= base)) ++eta_alpha;

    const SpaceParams p{alpha, h, SpaceKind::Roumieu};
    const double n1 = log_weighted_seq_norm(a, p, 1.0);
    const double n2 = log_weighted_seq_norm(a, p, 2.0);
    const double ni = log_weighted_seq_norm(a, p, std::numeric_limits<double>::infinity());
    if (!(ni <= n2 && n2 <= n1)) ++ordering;

    const double h1 = h * std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const auto gap = norm_equivalence_gap(a, h, h1, alpha);
    const auto constant =
        static_cast<double>(oracle::equivalence_constant(static_cast<unsigned>(dim), M, h, h1, alpha));
    if (!(gap.ratio <= constant)) ++equivalence;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "violations: eta(h) %d, eta(alpha) %d, ordering %d, equivalence %d (allowed 0)",
                eta_h, eta_alpha, ordering, equivalence);
  report(9, "monotonicity", eta_h + eta_alpha + ordering + equivalence == 0, buf);
}

void semigroup() {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> ut(0.0, 3.0);
  double group = 0.0;
  double commute = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_field(rng, 1 + static_cast<std::size_t>(trial % 3), 8);
    const double s = ut(rng);
    const double t = ut(rng);
    const auto N = static_cast<std::uint32_t>(trial % 6);
    const auto lhs = semigroup_propagate(semigroup_propagate(a, s), t);
    const auto rhs = semigroup_propagate(a, s + t);
    const auto c1 = apply_E_spectral(semigroup_propagate(a, t), N);
    const auto c2 = semigroup_propagate(apply_E_spectral(a, N), t);
    for (std::size_t i = 0; i < a.size(); ++i) {
      group = std::max(group, std::fabs(lhs.entries()[i].value - rhs.entries()[i].value));
      const double scale = std::max(1.0, std::fabs(c2.entries()[i].value));
      commute = std::max(commute, std::fabs(c1.entries()[i].value - c2.entries()[i].value) / scale);
    }
  }
  report(10, "semigroup", group <= 1e-13 && commute <= 1e-13,
         fmt("group law %.3e, commutation %.3e (allowed 1e-13)", group, commute));
}

void determinism() {
  parallel::set_thread_count(1);
  const auto one = verify::format_report(verify::run_suite("all"));
  parallel::set_thread_count(4);
  const auto four = verify::format_report(verify::run_suite("all"));
  const auto again = verify::format_report(verify::run_suite("all"));
  parallel::set_thread_count(0);
  const bool library_same = one == four && four == again;

  int c1 = 0;
  int c2 = 0;
  int c3 = 0;
  const auto cli1 = run_cli("--threads 1 verify", c1);
  const auto cli4 = run_cli("--threads 4 verify", c2);
  const auto cli4b = run_cli("--threads 4 verify", c3);
  const bool cli_same = c1 == 0 && c2 == 0 && c3 == 0 && cli1 == cli4 && cli4 == cli4b &&
                        !cli1.empty() && cli1 == one;
  std::string detail = "library reports ";
  detail += library_same ? "identical" : "differ";
  detail += ", cli reports ";
  detail += cli_same ? "identical" : "differ";
  detail += " (threads 1 vs 4, repeated)";
  report(11, "determinism", library_same && cli_same, detail);
}

}  // namespace

int main() {
  orthonormality();
  eigenrelation();
  spectral_vs_pointwise();
  closed_form_transform();
  parseval();
  eigenfunction_eta();
  decay_fit_recovery();
  classifier_direction();
  monotonicity();
  semigroup();
  determinism();
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
