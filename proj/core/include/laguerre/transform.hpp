#pragma once

#include <span>
#include <vector>

#include "laguerre/coefficient_field.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/scalar_field.hpp"

namespace laguerre {

struct AnalyzeOptions {
  /// Accept rules with fewer than degree+1 nodes; the Gram matrix is then no
  /// longer exact and the coefficients alias.
  bool allow_small_rule = false;
};

/// Laguerre coefficients a_n(f) = int f l_n over the orthant, for every n in
/// the truncation, by tensor Gauss-Laguerre quadrature. The rule must have at
/// least degree+1 nodes unless overridden; default_rule_size(degree) is
/// recommended.
CoefficientField analyze(const ScalarField& f, Truncation truncation, const QuadratureRule& rule,
                         const AnalyzeOptions& options = {});
CoefficientField analyze(const ScalarField& f, Truncation truncation);

/// Evaluates sum_n a_n l_n(x) at each point, summing in graded-lex order.
std::vector<double> synthesize(const CoefficientField& a,
                               const std::vector<std::vector<double>>& points);
double synthesize_at(const CoefficientField& a, std::span<const double> x);

/// sqrt(sum a_n^2), the L2 norm of the truncated series.
double parseval_l2_norm(const CoefficientField& a);

/// The truncated series T(a) as a field with analytic derivatives of every
/// order.
ScalarField series_field(const CoefficientField& a);

}  // namespace laguerre
