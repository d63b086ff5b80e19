#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "laguerre/error.hpp"
#include "laguerre/sequence_norms.hpp"
#include "oracles.hpp"

using laguerre::CoefficientField;
using laguerre::MultiIndex;
using laguerre::SpaceKind;
using laguerre::SpaceParams;
using laguerre::TruncationKind;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::pair<std::uint64_t, double>> as_pairs(const CoefficientField& a) {
  std::vector<std::pair<std::uint64_t, double>> out;
  for (const auto& e : a.entries()) out.emplace_back(e.index.order(), e.value);
  return out;
}

CoefficientField random_decaying(std::mt19937_64& rng, std::size_t dim, std::uint32_t M) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
  return CoefficientField::generate(dim, {TruncationKind::Total, M}, [&](const MultiIndex& n) {
    return u(rng) * std::exp(-c * static_cast<double>(n.order()));
  });
}

}  // namespace

TEST(ThetaWeight, Examples) {
  EXPECT_EQ(laguerre::theta_weight(MultiIndex{0, 0}, {0.7, 3.0, SpaceKind::Roumieu}), 1.0);
  EXPECT_NEAR(laguerre::theta_weight(MultiIndex{4}, {0.5, 1.0, SpaceKind::Roumieu}), 54.5981500331,
              1e-9);
  EXPECT_NEAR(laguerre::theta_weight(MultiIndex{4}, {1.0, 2.0, SpaceKind::Roumieu}), 54.5981500331,
              1e-9);
}

TEST(ThetaWeight, Monotonicity) {
  for (double h : {0.2, 1.0, 3.0}) {
    for (double alpha : {0.3, 1.0, 2.5}) {
      for (std::uint64_t m = 1; m <= 60; ++m) {
        const SpaceParams p{alpha, h, SpaceKind::Roumieu};
        EXPECT_GE(laguerre::log_theta_weight(m, p), laguerre::log_theta_weight(m - 1, p));
        EXPECT_GE(laguerre::log_theta_weight(m, {alpha, h * 1.5, SpaceKind::Roumieu}),
                  laguerre::log_theta_weight(m, p));
        if (m >= 2) {
          EXPECT_LT(laguerre::log_theta_weight(m, {alpha * 1.5, h, SpaceKind::Roumieu}),
                    laguerre::log_theta_weight(m, p));
        }
      }
    }
  }
}

TEST(SpaceParams, Validation) {
  EXPECT_THROW((SpaceParams{0.0, 1.0, SpaceKind::Roumieu}.validate()), laguerre::DomainError);
  EXPECT_THROW((SpaceParams{1.0, -1.0, SpaceKind::Beurling}.validate()), laguerre::DomainError);
  EXPECT_NO_THROW((SpaceParams{1.0, 1.0, SpaceKind::Beurling}.validate()));
}

TEST(WeightedNorm, Examples) {
  const SpaceParams p{0.5, 1.0, SpaceKind::Roumieu};
  const auto unit = CoefficientField::unit(MultiIndex{3}, {TruncationKind::Total, 4});
  EXPECT_NEAR(laguerre::weighted_seq_norm(unit, p, kInf), std::exp(3.0), 1e-12);
  const auto two = CoefficientField::from_entries(1, {TruncationKind::Total, 2},
                                                  {{MultiIndex{0}, 1.0}, {MultiIndex{1}, 1.0}});
  EXPECT_NEAR(laguerre::weighted_seq_norm(two, p, 2.0), 2.8963867316, 1e-10);
  const CoefficientField zero(2, {TruncationKind::Total, 3});
  for (double q : {1.0, 2.0, kInf}) EXPECT_EQ(laguerre::weighted_seq_norm(zero, p, q), 0.0);
}

TEST(WeightedNorm, RejectsSubunitIndex) {
  const CoefficientField zero(1, {TruncationKind::Total, 3});
  EXPECT_THROW(laguerre::weighted_seq_norm(zero, {1.0, 1.0, SpaceKind::Roumieu}, 0.5),
               laguerre::DomainError);
}

TEST(WeightedNorm, MatchesDirectSummation) {
  std::mt19937_64 rng(60);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_decaying(rng, 2, 10);
    const SpaceParams p{0.5 + trial % 3, 0.5 + 0.1 * trial, SpaceKind::Roumieu};
    for (double q : {1.0, 2.0, 3.0, kInf}) {
      const double want = static_cast<double>(oracle::weighted_norm(as_pairs(a), p.scale, p.alpha, q));
      EXPECT_NEAR(laguerre::weighted_seq_norm(a, p, q) / want, 1.0, 1e-12);
    }
  }
}

TEST(WeightedNorm, LogFormSurvivesOverflow) {
  const auto a = CoefficientField::unit(MultiIndex{900}, {TruncationKind::Total, 900});
  const SpaceParams p{0.5, 1.0, SpaceKind::Roumieu};
  EXPECT_TRUE(std::isinf(laguerre::weighted_seq_norm(a, p, 2.0)));
  EXPECT_NEAR(laguerre::log_weighted_seq_norm(a, p, 2.0), 900.0, 1e-12);
}

TEST(WeightedNorm, Ordering) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_decaying(rng, 1 + trial % 3, 8);
    const SpaceParams p{0.25 + 0.01 * trial, 0.1 + 0.013 * trial, SpaceKind::Roumieu};
    const double n1 = laguerre::log_weighted_seq_norm(a, p, 1.0);
    const double n2 = laguerre::log_weighted_seq_norm(a, p, 2.0);
    const double ni = laguerre::log_weighted_seq_norm(a, p, kInf);
    EXPECT_LE(ni, n2);
    EXPECT_LE(n2, n1);
  }
}

TEST(NormEquivalence, UnitAtOrigin) {
  const auto unit = CoefficientField::unit(MultiIndex{0, 0}, {TruncationKind::Total, 5});
  const auto r = laguerre::norm_equivalence_gap(unit, 2.0, 1.0, 1.0);
  EXPECT_EQ(r.l2_norm, 1.0);
  EXPECT_EQ(r.linf_norm, 1.0);
  EXPECT_EQ(r.ratio, 1.0);
  EXPECT_TRUE(r.holds);
  EXPECT_GE(r.constant, 1.0);
}

TEST(NormEquivalence, ConstantMatchesDirectSum) {
  const CoefficientField zero(2, {TruncationKind::Total, 20});
  const auto r = laguerre::norm_equivalence_gap(zero, 2.0, 1.0, 1.0);
  EXPECT_NEAR(r.constant / static_cast<double>(oracle::equivalence_constant(2, 20, 2.0, 1.0, 1.0)),
              1.0, 1e-13);
}

TEST(NormEquivalence, GeometricAndRandomSequences) {
  const auto geo = CoefficientField::generate(2, {TruncationKind::Total, 20}, [](const MultiIndex& n) {
    return std::pow(0.5, static_cast<double>(n.order()));
  });
  EXPECT_TRUE(laguerre::norm_equivalence_gap(geo, 1.0, 0.5, 1.0).holds);
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = CoefficientField::generate(2, {TruncationKind::Total, 20},
                                              [&](const MultiIndex&) { return u(rng); });
    const auto r = laguerre::norm_equivalence_gap(a, 2.0, 1.0, 1.0);
    EXPECT_TRUE(r.holds);
    EXPECT_LE(r.ratio, r.constant * (1.0 + 1e-14));
  }
}

TEST(NormEquivalence, RequiresStrictDecrease) {
  const CoefficientField zero(1, {TruncationKind::Total, 3});
  EXPECT_THROW(laguerre::norm_equivalence_gap(zero, 1.0, 1.0, 1.0), laguerre::DomainError);
  EXPECT_THROW(laguerre::norm_equivalence_gap(zero, 1.0, 0.0, 1.0), laguerre::DomainError);
}
