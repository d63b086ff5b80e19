#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "laguerre/multi_index.hpp"
#include "laguerre/scalar_field.hpp"

namespace laguerre {

/// Field f(x) = prod_j g(x_j) built from a univariate g, where
/// derivative(m, t) returns g^{(m)}(t). Supplies jets and all partials.
ScalarField tensor_field(std::size_t dim, std::function<double(std::uint32_t, double)> derivative);

/// e^{-(x_1 + ... + x_d)}.
ScalarField exp_decay_field(std::size_t dim);

/// The basis function l_n.
ScalarField laguerre_basis_field(const MultiIndex& n);

/// prod_j q(x_j) e^{-x_j/2} with q(t) = sum_k coeffs[k] t^k.
ScalarField poly_exp_field(std::size_t dim, std::vector<double> coeffs);

/// Built-in registry used by the CLI:
///   exp-decay          e^{-sum x_j}
///   l:<n_1,...,n_d>    l_n (dimension taken from the index)
///   poly-exp:<c0,c1..> prod_j q(x_j) e^{-x_j/2}
/// `dim` is required for exp-decay and poly-exp and checked against l:.
ScalarField builtin_field(std::string_view name, std::size_t dim);

}  // namespace laguerre
