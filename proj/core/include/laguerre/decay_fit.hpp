#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laguerre/coefficient_field.hpp"

namespace laguerre {

inline constexpr double kDefaultFitFloor = 1e-280;

/// Least-squares fit of log b_m ~ log C - c m^t on shell maxima
/// b_m = max_{|n|=m} |a_n|. alpha_hat = 1/(2t) is the index alpha for which
/// the weight exponent |n|^{1/(2 alpha)} matches the observed decay.
struct DecayFit {
  double alpha_hat = 0.0;
  double t_hat = 0.0;
  double c_hat = 0.0;
  double log_amplitude = 0.0;
  double residual = 0.0;  ///< RMS of the fit in log scale
  std::size_t support_size = 0;
};

struct DecayEstimate {
  /// Shells at or below the floor count as zero. The sequence is finitely
  /// supported when nothing is left, or when the last shell above the floor
  /// lies below the top shell and sits higher above the floor than twice the
  /// largest step between consecutive retained shells (a cutoff rather than
  /// decay into the floor). Such sequences belong to every weighted space.
  bool finitely_supported = false;
  std::optional<DecayFit> fit;
};

/// b_m for m = 0..max order of the truncation.
std::vector<double> shell_maxima(const CoefficientField& a);

/// Fits log_values[i] ~ A - c orders[i]^t over t in (0, 4]: a grid of step
/// 0.01 followed by golden-section refinement. Needs >= 3 points.
DecayFit fit_stretched_exponential(std::span<const double> orders,
                                   std::span<const double> log_values);

/// Least-squares rate c (and amplitude) at a fixed exponent t.
DecayFit fit_at_exponent(std::span<const double> orders, std::span<const double> log_values,
                         double t);

/// Throws DomainError when fewer than 3 shells exceed the floor and the
/// sequence is not finitely supported.
DecayEstimate estimate_decay_params(const CoefficientField& a, double floor = kDefaultFitFloor);

enum class Membership { Roumieu, Beurling, NotMember, Inconclusive };

std::string to_string(Membership m);

struct ClassifyOptions {
  double floor = kDefaultFitFloor;
  /// |t_hat - 1/alpha| within this band counts as the boundary case.
  double exponent_tolerance = 0.03;
  /// Fits with larger log-scale RMS are reported inconclusive.
  double residual_limit = 1.0;
  /// Relative growth of the boundary rate across nested truncations above
  /// which the sequence is read as Beurling type.
  double trend_growth = 0.1;
};

/// Membership of the expansion with coefficients a in the iterate spaces G^alpha_alpha
/// (Roumieu) and g^alpha_alpha (Beurling), decided through the coefficient spaces l_{alpha/2}
/// (weight exponent |n|^{1/alpha}).
struct MembershipReport {
  Membership verdict = Membership::Inconclusive;
  double alpha = 0.0;
  double critical_exponent = 0.0;  ///< 1/alpha
  bool finitely_supported = false;
  std::optional<DecayFit> fit;
  /// Power-law fit log b_m ~ A - k log(1+m), as a competing model.
  double power_law_residual = 0.0;
  /// Rates at t = 1/alpha on nested prefixes (50%, 75%, 100%) of the support.
  std::vector<double> boundary_rates;
  double confidence = 0.0;
  std::string detail;
};

MembershipReport classify_pilipovic(const CoefficientField& a, double alpha,
                                    const ClassifyOptions& options = {});

}  // namespace laguerre
