#include "laguerre/operator.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "laguerre/error.hpp"
#include "laguerre/polynomials.hpp"

namespace laguerre {

namespace {

constexpr double kExactLimit = 9007199254740992.0;  // 2^53

double log_sum_exp(const std::vector<double>& logs) {
  double top = -std::numeric_limits<double>::infinity();
  for (double v : logs) top = std::max(top, v);
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double v : logs) sum += std::exp(v - top);
  return top + std::log(sum);
}

}  // namespace

double eigenvalue_power(std::uint64_t order, std::uint32_t power) {
  if (power == 0) return 1.0;
  if (order == 0) return 0.0;
  const double base = static_cast<double>(order);
  const double log_result = static_cast<double>(power) * std::log(base);
  if (log_result < std::log(kExactLimit) - 1e-9) {
    double result = 1.0;
    for (std::uint32_t i = 0; i < power; ++i) result *= base;
    return result;
  }
  return std::exp(log_result);
}

SpectralMultiplier power_multiplier(std::uint32_t power) {
  return {[power](const MultiIndex& n) { return eigenvalue_power(n.order(), power); },
          "E^" + std::to_string(power)};
}

SpectralMultiplier semigroup_multiplier(double time) {
  if (!(time >= 0.0) || !std::isfinite(time)) {
    throw DomainError("propagation time must be finite and >= 0, got " + std::to_string(time));
  }
  return {[time](const MultiIndex& n) {
            return time == 0.0 ? 1.0 : std::exp(-time * static_cast<double>(n.order()));
          },
          "exp(-" + std::to_string(time) + " E)"};
}

CoefficientField apply_multiplier(const CoefficientField& a, const SpectralMultiplier& m) {
  return a.map([&m](const MultiIndex& n, double v) { return m.rule(n) * v; });
}

double apply_E_pointwise(const ScalarField& f, std::span<const double> x) {
  if (!f.has_jets()) throw DomainError("apply_E_pointwise needs a field with derivatives");
  check_eval_point(x);
  const auto jets = f.jets(x);
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& g = jets[j];
    sum += x[j] * g.d2 + g.d1 - 0.25 * x[j] * g.value + 0.5 * g.value;
  }
  return -sum;
}

CoefficientField apply_E_spectral(const CoefficientField& a, std::uint32_t power) {
  return apply_multiplier(a, power_multiplier(power));
}

double log_iterate_norm(const CoefficientField& a, std::uint32_t power) {
  std::vector<double> logs;
  logs.reserve(a.size());
  for (const auto& e : a.entries()) {
    if (e.value == 0.0) continue;
    if (e.index.order() == 0 && power > 0) continue;
    const double log_eig =
        power == 0 ? 0.0 : static_cast<double>(power) * std::log(static_cast<double>(e.index.order()));
    logs.push_back(2.0 * (log_eig + std::log(std::fabs(e.value))));
  }
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  return 0.5 * log_sum_exp(logs);
}

double iterate_norm(const CoefficientField& a, std::uint32_t power) {
  return std::exp(log_iterate_norm(a, power));
}

CoefficientField semigroup_propagate(const CoefficientField& a, double time) {
  return apply_multiplier(a, semigroup_multiplier(time));
}

}  // namespace laguerre
