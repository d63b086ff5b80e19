#pragma once

#include <string>

#include "laguerre/coefficient_field.hpp"

namespace laguerre {

/// Union over the scale parameter (Roumieu type) or intersection (Beurling
/// type).
enum class SpaceKind { Roumieu, Beurling };

std::string to_string(SpaceKind kind);

/// Identifies a weighted space: regularity index alpha, scale h (or A for
/// G-type seminorms) and the quantifier over the scale.
struct SpaceParams {
  double alpha = 1.0;
  double scale = 1.0;
  SpaceKind kind = SpaceKind::Roumieu;

  /// Throws DomainError unless alpha > 0 and scale > 0.
  void validate() const;
};

/// log theta_{h,alpha}(n) = h |n|^{1/(2 alpha)}.
double log_theta_weight(std::uint64_t order, const SpaceParams& params);
/// theta_{h,alpha}(n) = exp(h |n|^{1/(2 alpha)}); 1 when |n| = 0.
double theta_weight(const MultiIndex& n, const SpaceParams& params);

/// || {|a_n| theta(n)} ||_{l^p} over stored entries, p in [1, inf]. The log
/// form never overflows; the plain form returns inf when the norm exceeds
/// the binary64 range.
double log_weighted_seq_norm(const CoefficientField& a, const SpaceParams& params, double p);
double weighted_seq_norm(const CoefficientField& a, const SpaceParams& params, double p);

struct NormEquivalenceReport {
  double l2_norm = 0.0;    ///< ||a||_{l^2, theta_{h1,alpha}}
  double linf_norm = 0.0;  ///< ||a||_{l^inf, theta_{h,alpha}}
  double ratio = 0.0;      ///< l2_norm / linf_norm (1 when a = 0)
  double constant = 0.0;   ///< (sum_{n in truncation} e^{2(h1-h)|n|^{1/(2alpha)}})^{1/2}
  bool holds = false;      ///< ratio <= constant
};

/// Checks the l^inf -> l^2 step of the equivalence of weighted norms:
/// lowering the scale from h to h1 < h bounds the l^2 norm by the l^inf
/// norm times the truncated constant. Throws DomainError unless 0 < h1 < h.
NormEquivalenceReport norm_equivalence_gap(const CoefficientField& a, double h, double h1,
                                           double alpha);

}  // namespace laguerre
