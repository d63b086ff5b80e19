#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "laguerre/multi_index.hpp"
#include "laguerre/polynomials.hpp"

namespace laguerre {

/// A real function on the closed orthant, optionally carrying analytic
/// derivatives. `jets` gives (f, d_j f, d_jj f) for every axis j; `partial`
/// gives an arbitrary mixed partial D^p f. When only `partial` is supplied,
/// jets are derived from it.
class ScalarField {
 public:
  using ValueFn = std::function<double(std::span<const double>)>;
  using JetFn = std::function<std::vector<AxisJet>(std::span<const double>)>;
  using PartialFn = std::function<double(const MultiIndex&, std::span<const double>)>;

  ScalarField(std::size_t dim, ValueFn value, JetFn jets = {}, PartialFn partial = {});

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::span<const double> x) const;

  bool has_jets() const noexcept { return static_cast<bool>(jets_) || static_cast<bool>(partial_); }
  bool has_partials() const noexcept { return static_cast<bool>(partial_); }

  /// Throws DomainError when the field carries no derivative evaluator.
  std::vector<AxisJet> jets(std::span<const double> x) const;
  double partial(const MultiIndex& p, std::span<const double> x) const;

 private:
  std::size_t dim_;
  ValueFn value_;
  JetFn jets_;
  PartialFn partial_;
};

}  // namespace laguerre
