#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "laguerre/multi_index.hpp"

namespace laguerre {

/// Value and first two derivatives of a function along one axis.
struct AxisJet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Laguerre polynomial L_j(x) (order zero) by the three-term recurrence.
/// The bare polynomial grows like x^j / j!; use laguerre_function for large x.
double laguerre_poly(long long j, double x);

/// l_j(x) = L_j(x) e^{-x/2}.
double laguerre_function(std::uint32_t j, double x);

/// Tensor-product Laguerre function l_n(x) = prod_j l_{n_j}(x_j).
double laguerre_function(const MultiIndex& n, std::span<const double> x);

/// Writes l_0(x), ..., l_{out.size()-1}(x) in one recurrence sweep.
void laguerre_function_sweep(double x, std::span<double> out);

/// Writes e^{-x/2} L^{(a)}_j(x) for j = 0..out.size()-1, where L^{(a)} is the
/// generalized Laguerre polynomial of integer order a. Used internally for
/// derivatives: d^r/dx^r L_j = (-1)^r L^{(r)}_{j-r}.
void damped_generalized_sweep(double x, std::uint32_t a, std::span<double> out);

/// Writes the m-th derivative of l_j at x for j = 0..out.size()-1.
void laguerre_function_derivative_sweep(double x, std::uint32_t m, std::span<double> out);

/// m-th derivative of l_j at x.
double laguerre_function_derivative(std::uint32_t j, std::uint32_t m, double x);

/// Mixed partial derivative D^p l_n(x) of the tensor-product function.
double laguerre_function_partial(const MultiIndex& n, const MultiIndex& p,
                                 std::span<const double> x);

/// Per-axis (l_{n_j}, l_{n_j}', l_{n_j}'') at x_j.
std::vector<AxisJet> laguerre_function_derivatives(const MultiIndex& n,
                                                   std::span<const double> x);

/// Throws DomainError unless every coordinate is finite and >= 0.
void check_eval_point(std::span<const double> x);

namespace detail {

/// L_j(x) for j = degree and degree-1, sharing a common power-of-two scale:
/// L_degree = hi * 2^exponent, L_{degree-1} = lo * 2^exponent. Finite for any
/// x >= 0 and degree, where the bare values overflow binary64.
struct ScaledPair {
  double hi = 1.0;
  double lo = 0.0;
  long long exponent = 0;
};
ScaledPair scaled_laguerre_pair(std::uint32_t degree, double x);

}  // namespace detail

}  // namespace laguerre
