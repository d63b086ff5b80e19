#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "laguerre/error.hpp"
#include "laguerre/fields.hpp"
#include "laguerre/parallel.hpp"
#include "laguerre/polynomials.hpp"
#include "laguerre/transform.hpp"
#include "oracles.hpp"

using laguerre::CoefficientField;
using laguerre::MultiIndex;
using laguerre::Truncation;
using laguerre::TruncationKind;

namespace {

laguerre::ScalarField exp_times_linear() {
  return laguerre::ScalarField(
      1, [](std::span<const double> x) { return std::exp(-x[0]) * (1.0 + x[0]); });
}

CoefficientField random_coefficients(std::mt19937_64& rng, std::size_t dim, std::uint32_t M) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return CoefficientField::generate(dim, {TruncationKind::Total, M},
                                    [&](const MultiIndex&) { return u(rng); });
}

}  // namespace

TEST(ExpDecayOracle, SimpsonIntegrationAgreesWithClosedForm) {
  for (unsigned n : {0u, 1u, 5u, 12u}) {
    const long double v = oracle::simpson(
        [n](long double x) {
          return std::exp(-x) * oracle::laguerre_explicit(n, x) * std::exp(-x / 2.0L);
        },
        60.0L, 400000);
    EXPECT_NEAR(static_cast<double>(v), oracle::exp_decay_coefficient(n), 1e-12);
  }
}

TEST(Analyze, BasisFunctionGivesKroneckerDelta) {
  const auto a = laguerre::analyze(laguerre::laguerre_basis_field(MultiIndex{3}),
                                   {TruncationKind::Total, 10});
  for (const auto& e : a.entries()) {
    EXPECT_NEAR(e.value, e.index.order() == 3 ? 1.0 : 0.0, 1e-10);
  }
}

TEST(Analyze, ExpDecayOneDimension) {
  const auto a = laguerre::analyze(laguerre::exp_decay_field(1), {TruncationKind::Total, 20},
                                   laguerre::gauss_laguerre_rule(64));
  for (const auto& e : a.entries()) {
    EXPECT_NEAR(e.value, oracle::exp_decay_coefficient(e.index[0]), 1e-10);
  }
}

TEST(Analyze, ExpDecayTwoDimensions) {
  const auto a = laguerre::analyze(laguerre::exp_decay_field(2), {TruncationKind::Total, 20},
                                   laguerre::gauss_laguerre_rule(64));
  for (const auto& e : a.entries()) {
    EXPECT_NEAR(e.value,
                oracle::exp_decay_coefficient(e.index[0]) * oracle::exp_decay_coefficient(e.index[1]),
                1e-9);
  }
}

TEST(Analyze, BoxTruncation) {
  const auto a = laguerre::analyze(laguerre::exp_decay_field(2), {TruncationKind::Box, 6});
  EXPECT_EQ(a.size(), 49u);
  EXPECT_NEAR(a.at(MultiIndex{6, 6}), std::pow(oracle::exp_decay_coefficient(6), 2), 1e-12);
}

TEST(Analyze, RuleTooSmallRejectedUnlessOverridden) {
  const auto rule = laguerre::gauss_laguerre_rule(8);
  const Truncation t{TruncationKind::Total, 10};
  EXPECT_THROW(laguerre::analyze(laguerre::exp_decay_field(1), t, rule), laguerre::DomainError);
  laguerre::AnalyzeOptions options;
  options.allow_small_rule = true;
  EXPECT_EQ(laguerre::analyze(laguerre::exp_decay_field(1), t, rule, options).size(), 11u);
}

TEST(Analyze, NonFiniteFieldReported) {
  const laguerre::ScalarField bad(1, [](std::span<const double> x) { return 1.0 / (x[0] - x[0]); });
  EXPECT_THROW(laguerre::analyze(bad, {TruncationKind::Total, 3}), laguerre::NonFiniteError);
}

TEST(Analyze, Linearity) {
  const Truncation t{TruncationKind::Total, 12};
  const auto rule = laguerre::gauss_laguerre_rule(40);
  const auto f = laguerre::exp_decay_field(2);
  const auto g = laguerre::poly_exp_field(2, {1.0, -0.5, 0.25});
  const laguerre::ScalarField h(2, [&](std::span<const double> x) { return 2.5 * f(x) - 3.0 * g(x); });
  const auto af = laguerre::analyze(f, t, rule);
  const auto ag = laguerre::analyze(g, t, rule);
  const auto ah = laguerre::analyze(h, t, rule);
  for (std::size_t i = 0; i < ah.size(); ++i) {
    EXPECT_NEAR(ah.entries()[i].value, 2.5 * af.entries()[i].value - 3.0 * ag.entries()[i].value,
                1e-12);
  }
}

TEST(Analyze, TruncationMonotonicity) {
  const auto rule = laguerre::gauss_laguerre_rule(64);
  const auto f = exp_times_linear();
  const auto small = laguerre::analyze(f, {TruncationKind::Total, 8}, rule);
  const auto large = laguerre::analyze(f, {TruncationKind::Total, 24}, rule);
  for (const auto& e : small.entries()) EXPECT_NEAR(e.value, large.at(e.index), 1e-12);
}

TEST(Analyze, DeterministicAcrossThreadCounts) {
  const auto f = laguerre::exp_decay_field(2);
  laguerre::parallel::set_thread_count(1);
  const auto one = laguerre::analyze(f, {TruncationKind::Total, 15});
  laguerre::parallel::set_thread_count(4);
  const auto four = laguerre::analyze(f, {TruncationKind::Total, 15});
  laguerre::parallel::set_thread_count(0);
  EXPECT_EQ(one, four);
}

TEST(Synthesize, Examples) {
  const auto unit = CoefficientField::unit(MultiIndex{0}, {TruncationKind::Total, 3});
  EXPECT_NEAR(laguerre::synthesize_at(unit, std::vector<double>{2.0}), std::exp(-1.0), 1e-15);
  const CoefficientField zero(2, {TruncationKind::Total, 3});
  const auto values = laguerre::synthesize(zero, {{0.0, 1.0}, {5.0, 2.0}});
  EXPECT_EQ(values, (std::vector<double>{0.0, 0.0}));
}

TEST(Synthesize, DimensionMismatchRejected) {
  const auto unit = CoefficientField::unit(MultiIndex{0, 0}, {TruncationKind::Total, 3});
  EXPECT_THROW(laguerre::synthesize(unit, {{1.0}}), laguerre::DomainError);
  EXPECT_THROW(laguerre::synthesize(unit, {{1.0, -1.0}}), laguerre::DomainError);
}

TEST(Synthesize, RoundTripOnRandomPoints) {
  const auto f = exp_times_linear();
  const auto a = laguerre::analyze(f, {TruncationKind::Total, 30});
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ux(0.0, 30.0);
  std::vector<std::vector<double>> pts(100);
  for (auto& p : pts) p = {ux(rng)};
  const auto values = laguerre::synthesize(a, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_NEAR(values[i], f(pts[i]), 1e-8);
}

TEST(Synthesize, AnalyzeOfSynthesisIsIdentity) {
  std::mt19937_64 rng(8);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto a = random_coefficients(rng, d, d == 3 ? 6 : 10);
    const auto back = laguerre::analyze(laguerre::series_field(a), a.truncation());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(back.entries()[i].value, a.entries()[i].value, 1e-10);
    }
  }
}

TEST(Parseval, Examples) {
  const auto unit = CoefficientField::unit(MultiIndex{4, 1}, {TruncationKind::Total, 5});
  EXPECT_EQ(laguerre::parseval_l2_norm(unit), 1.0);
  EXPECT_EQ(laguerre::parseval_l2_norm(CoefficientField(1, {TruncationKind::Total, 5})), 0.0);
  const auto geo = CoefficientField::generate(1, {TruncationKind::Total, 40}, [](const MultiIndex& n) {
    return oracle::exp_decay_coefficient(n[0]);
  });
  EXPECT_NEAR(laguerre::parseval_l2_norm(geo), std::sqrt(0.5), 1e-15);
}

TEST(Parseval, MatchesIntegralOfSquare) {
  const auto a = laguerre::analyze(laguerre::exp_decay_field(1), {TruncationKind::Total, 40});
  const double n = laguerre::parseval_l2_norm(a);
  EXPECT_NEAR(n * n, 0.5, 1e-12);

  const auto f = exp_times_linear();
  const auto b = laguerre::analyze(f, {TruncationKind::Total, 60});
  const double sq = laguerre::integrate_orthant(
      [&f](std::span<const double> x) { return f(x) * f(x); }, laguerre::gauss_laguerre_rule(80), 1);
  // int e^{-2x}(1+x)^2 = 1/2 + 1/2 + 1/4
  EXPECT_NEAR(sq, 1.25, 1e-12);
  EXPECT_NEAR(laguerre::parseval_l2_norm(b), std::sqrt(sq), 1e-7);
}

TEST(Parseval, NoOverflowForHugeCoefficients) {
  const auto a = CoefficientField::from_entries(
      1, {TruncationKind::Total, 2}, {{MultiIndex{0}, 3e200}, {MultiIndex{1}, 4e200}});
  EXPECT_NEAR(laguerre::parseval_l2_norm(a) / 5e200, 1.0, 1e-15);
}

TEST(SeriesField, DerivativesMatchBasis) {
  const auto a = CoefficientField::unit(MultiIndex{2, 1}, {TruncationKind::Total, 3});
  const auto f = laguerre::series_field(a);
  const std::vector<double> x{0.7, 1.9};
  const auto jets = f.jets(x);
  EXPECT_NEAR(jets[0].d1,
              laguerre::laguerre_function_derivative(2, 1, 0.7) * laguerre::laguerre_function(1, 1.9),
              1e-15);
  EXPECT_NEAR(f.partial(MultiIndex{1, 1}, x),
              laguerre::laguerre_function_derivative(2, 1, 0.7) *
                  laguerre::laguerre_function_derivative(1, 1, 1.9),
              1e-15);
}
