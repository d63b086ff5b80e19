#pragma once

#include <cstdint>
#include <vector>

#include "laguerre/coefficient_field.hpp"
#include "laguerre/multi_index.hpp"
#include "laguerre/quadrature.hpp"
#include "laguerre/scalar_field.hpp"
#include "laguerre/sequence_norms.hpp"

namespace laguerre {

struct EtaReport {
  double value = 0.0;      ///< max_{1<=N<=N_max} ||E^N f|| / (h^N N!^alpha)
  double log_value = 0.0;  ///< -inf when every iterate vanishes
  std::uint32_t argmax = 0;
  /// The ratio still increases at N_max: the supremum is not witnessed in
  /// range and may be infinite.
  bool growth = false;
  std::vector<double> log_ratios;  ///< index N-1 holds the N-th log ratio
};

/// Iterate seminorm over N = 1..n_max. alpha may be 0 here (the degenerate
/// index where only finitely many basis functions qualify); h > 0.
EtaReport eta_seminorm(const CoefficientField& a, double alpha, double h, std::uint32_t n_max);
EtaReport eta_seminorm(const CoefficientField& a, const SpaceParams& params, std::uint32_t n_max);

struct GTypeReport {
  double value = 0.0;  ///< running maximum over |p|, |k| <= P
  MultiIndex argmax_p;
  MultiIndex argmax_k;
  /// order_max[o] = largest term with max(|p|, |k|) == o; running_max[o] =
  /// largest term with max(|p|, |k|) <= o; increments[o] = running_max[o] -
  /// running_max[o-1] (increments[0] = running_max[0]).
  std::vector<double> order_max;
  std::vector<double> running_max;
  std::vector<double> increments;
  /// The top order did not raise the running maximum.
  bool bounded = false;
};

/// sup over |p|, |k| <= P of
///   ||x^{(p+k)/2} D^p f||_{L2} / (A^{|p+k|} k^{(alpha/2)k} p^{(alpha/2)p})
/// with 0^0 = 1 and L2 norms by tensor quadrature on `rule`.
GTypeReport gtype_seminorm(const ScalarField& f, const SpaceParams& params, std::uint32_t max_order,
                           const QuadratureRule& rule);

/// Per-axis evaluation grid for sup-norm diagnostics: optionally 0, then
/// `points` log-spaced abscissae in [x_min, x_max].
struct GridSpec {
  double x_min = 1e-6;
  double x_max = 200.0;
  std::size_t points = 400;
  bool include_zero = true;
  bool refine = true;
};

struct SchwartzReport {
  double value = 0.0;  ///< a lower bound of sup_x x^k |D^p f(x)|
  std::vector<double> location;
};

SchwartzReport schwartz_seminorm(const ScalarField& f, const MultiIndex& k, const MultiIndex& p,
                                 const GridSpec& grid = {});

struct SigmaReport {
  GTypeReport gtype;
  double schwartz_part = 0.0;  ///< max over |p|, |k| <= j of the Schwartz seminorms
  double value = 0.0;          ///< gtype.value + schwartz_part
};

/// sigma_{A,j}: the G-type supremum (truncated at order P) plus the
/// Schwartz seminorms of order at most j.
SigmaReport sigma_seminorm(const ScalarField& f, const SpaceParams& params, std::uint32_t max_order,
                           std::uint32_t j, const QuadratureRule& rule, const GridSpec& grid = {});

}  // namespace laguerre
