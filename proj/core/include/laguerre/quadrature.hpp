#pragma once

#include <cstddef>
#include <vector>

#include "laguerre/scalar_field.hpp"

namespace laguerre {

inline constexpr std::size_t kMaxRuleSize = 512;

/// Gauss-Laguerre rule for the weight e^{-x} on (0, inf).
///
/// `log_modified_weights[k]` holds log(w_k) + x_k, the weight to use for
/// integrands that do not carry the e^{-x} factor. For large rules the plain
/// weights of the outermost nodes underflow to zero while the modified
/// weights stay finite.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_modified_weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double modified_weight(std::size_t k) const;
};

/// K-point rule, 1 <= K <= 512. Nodes are the eigenvalues of the Jacobi
/// matrix (diagonal 2k+1, off-diagonal k), polished by Newton steps on L_K.
QuadratureRule gauss_laguerre_rule(std::size_t nodes);

/// Default rule size for a per-axis truncation degree.
std::size_t default_rule_size(std::uint32_t degree);

/// Tensor-product approximation of the integral of f over the orthant in
/// dimension f.dim(): sum over node tuples of prod_j e^{x_j} w_j * f(x).
/// Node tuples are streamed; throws NonFiniteError naming the first offending
/// node.
double integrate_orthant(const ScalarField& f, const QuadratureRule& rule);

/// Lower-level form for callers that already hold a plain callable.
double integrate_orthant(const ScalarField::ValueFn& f, const QuadratureRule& rule,
                         std::size_t dim);

}  // namespace laguerre
