#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "laguerre/coefficient_field.hpp"
#include "laguerre/scalar_field.hpp"

namespace laguerre {

/// Diagonal operator in the Laguerre basis: a_n -> rule(n) a_n.
struct SpectralMultiplier {
  std::function<double(const MultiIndex&)> rule;
  std::string descriptor;
};

/// n -> |n|^N, with 0^0 = 1.
SpectralMultiplier power_multiplier(std::uint32_t power);
/// n -> e^{-t|n|}, t >= 0.
SpectralMultiplier semigroup_multiplier(double time);

CoefficientField apply_multiplier(const CoefficientField& a, const SpectralMultiplier& m);

/// |n|^N. Exact when the result is an integer below 2^53, otherwise
/// exp(N log|n|).
double eigenvalue_power(std::uint64_t order, std::uint32_t power);

/// E f(x) = -sum_j (x_j f_jj + f_j - (x_j/4) f + f/2), from the field's
/// analytic derivatives.
double apply_E_pointwise(const ScalarField& f, std::span<const double> x);

/// E^N in coefficient space: a_n -> |n|^N a_n.
CoefficientField apply_E_spectral(const CoefficientField& a, std::uint32_t power);

/// ||E^N T(a)||_{L2} = sqrt(sum |n|^{2N} a_n^2), evaluated in log space.
double iterate_norm(const CoefficientField& a, std::uint32_t power);
/// log of iterate_norm; -inf when the iterate vanishes.
double log_iterate_norm(const CoefficientField& a, std::uint32_t power);

/// e^{-tE}: a_n -> e^{-t|n|} a_n. Throws DomainError for t < 0.
CoefficientField semigroup_propagate(const CoefficientField& a, double time);

}  // namespace laguerre
