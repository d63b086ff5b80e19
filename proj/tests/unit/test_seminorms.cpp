#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "laguerre/error.hpp"
#include "laguerre/fields.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/seminorms.hpp"
#include "oracles.hpp"

using laguerre::CoefficientField;
using laguerre::MultiIndex;
using laguerre::SpaceKind;
using laguerre::SpaceParams;
using laguerre::TruncationKind;

TEST(Eta, Examples) {
  const laguerre::Truncation t{TruncationKind::Total, 8};
  EXPECT_EQ(laguerre::eta_seminorm(CoefficientField::unit(MultiIndex{0}, t), 1.0, 1.0, 20).value, 0.0);
  const auto r = laguerre::eta_seminorm(CoefficientField::unit(MultiIndex{1, 2}, t), 1.0, 1.0, 20);
  EXPECT_NEAR(r.value, 4.5, 1e-12);
  EXPECT_FALSE(r.growth);
  EXPECT_EQ(r.log_ratios.size(), 20u);
}

TEST(Eta, AlphaZeroFiniteOnlyBelowScale) {
  const laguerre::Truncation t{TruncationKind::Total, 8};
  const auto small = laguerre::eta_seminorm(CoefficientField::unit(MultiIndex{2}, t), 0.0, 3.0, 40);
  EXPECT_FALSE(small.growth);
  EXPECT_NEAR(small.value, 2.0 / 3.0, 1e-14);
  EXPECT_TRUE(laguerre::eta_seminorm(CoefficientField::unit(MultiIndex{5}, t), 0.0, 3.0, 40).growth);
}

TEST(Eta, EigenfunctionClosedForm) {
  const laguerre::Truncation t{TruncationKind::Total, 10};
  for (unsigned order : {1u, 3u, 7u}) {
    for (double h : {0.5, 1.0, 2.0}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const auto a = CoefficientField::unit(MultiIndex{order}, t);
        const double got = laguerre::eta_seminorm(a, alpha, h, 30).value;
        const double want = static_cast<double>(oracle::eta_of_eigenfunction(order, h, alpha, 30));
        EXPECT_NEAR(got / want, 1.0, 1e-12) << order << " " << h << " " << alpha;
      }
    }
  }
}

TEST(Eta, MonotoneInScaleAndIndex) {
  const auto a = CoefficientField::generate(2, {TruncationKind::Total, 12}, [](const MultiIndex& n) {
    return std::exp(-0.7 * static_cast<double>(n.order())) * (n[0] % 2 ? -1.0 : 1.0);
  });
  double prev = std::numeric_limits<double>::infinity();
  for (double h : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double v = laguerre::eta_seminorm(a, 1.0, h, 25).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
  prev = std::numeric_limits<double>::infinity();
  for (double alpha : {0.5, 1.0, 1.5, 3.0}) {
    const double v = laguerre::eta_seminorm(a, alpha, 1.0, 25).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Eta, ParamsOverloadAndValidation) {
  const auto a = CoefficientField::unit(MultiIndex{2}, {TruncationKind::Total, 4});
  EXPECT_EQ(laguerre::eta_seminorm(a, SpaceParams{1.0, 2.0, SpaceKind::Beurling}, 10).value,
            laguerre::eta_seminorm(a, 1.0, 2.0, 10).value);
  EXPECT_THROW(laguerre::eta_seminorm(a, -1.0, 1.0, 10), laguerre::DomainError);
  EXPECT_THROW(laguerre::eta_seminorm(a, 1.0, 0.0, 10), laguerre::DomainError);
  EXPECT_THROW(laguerre::eta_seminorm(a, 1.0, 1.0, 0), laguerre::DomainError);
}

TEST(GType, FirstOrderValuesForGroundState) {
  const auto rule = laguerre::gauss_laguerre_rule(48);
  const auto l0 = laguerre::laguerre_basis_field(MultiIndex{0});
  const auto g = laguerre::gtype_seminorm(l0, {1.0, 1.0, SpaceKind::Roumieu}, 1, rule);
  EXPECT_NEAR(g.order_max[0], 1.0, 1e-12);
  EXPECT_NEAR(g.value, 1.0, 1e-12);
  const auto g2 = laguerre::gtype_seminorm(l0, {1.0, 2.0, SpaceKind::Roumieu}, 1, rule);
  EXPECT_NEAR(g2.order_max[1], 0.5, 1e-12);
}

TEST(GType, BoundedForMembers) {
  const auto rule = laguerre::gauss_laguerre_rule(48);
  const auto g = laguerre::gtype_seminorm(laguerre::exp_decay_field(1), {1.0, 1.0, SpaceKind::Roumieu},
                                          6, rule);
  EXPECT_TRUE(g.bounded);
  EXPECT_EQ(g.running_max.size(), 7u);
  for (std::size_t i = 1; i < g.running_max.size(); ++i) {
    EXPECT_GE(g.running_max[i], g.running_max[i - 1]);
  }
}

TEST(GType, NeedsDerivatives) {
  const laguerre::ScalarField plain(1, [](std::span<const double> x) { return std::exp(-x[0]); });
  EXPECT_THROW(laguerre::gtype_seminorm(plain, {1.0, 1.0, SpaceKind::Roumieu}, 2,
                                        laguerre::gauss_laguerre_rule(16)),
               laguerre::DomainError);
}

TEST(Schwartz, GroundStateValues) {
  const auto l0 = laguerre::laguerre_basis_field(MultiIndex{0});
  EXPECT_NEAR(laguerre::schwartz_seminorm(l0, MultiIndex{0}, MultiIndex{0}).value, 1.0, 1e-10);
  EXPECT_NEAR(laguerre::schwartz_seminorm(l0, MultiIndex{1}, MultiIndex{0}).value,
              2.0 / std::numbers::e, 1e-10);
  EXPECT_NEAR(laguerre::schwartz_seminorm(l0, MultiIndex{0}, MultiIndex{1}).value, 0.5, 1e-10);
}

TEST(Schwartz, DimensionMismatchAndBadGrid) {
  const auto l0 = laguerre::laguerre_basis_field(MultiIndex{0});
  EXPECT_THROW(laguerre::schwartz_seminorm(l0, MultiIndex{0, 0}, MultiIndex{0}), laguerre::DomainError);
  laguerre::GridSpec grid;
  grid.x_min = 2.0;
  grid.x_max = 1.0;
  EXPECT_THROW(laguerre::schwartz_seminorm(l0, MultiIndex{0}, MultiIndex{0}, grid),
               laguerre::DomainError);
}

TEST(Sigma, SumsItsParts) {
  const auto l0 = laguerre::laguerre_basis_field(MultiIndex{0});
  const auto s = laguerre::sigma_seminorm(l0, {1.0, 1.0, SpaceKind::Roumieu}, 2, 1,
                                          laguerre::gauss_laguerre_rule(32));
  EXPECT_DOUBLE_EQ(s.value, s.gtype.value + s.schwartz_part);
  EXPECT_NEAR(s.schwartz_part, 1.0, 1e-10);
}
