#include "laguerre/sequence_norms.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "laguerre/error.hpp"

namespace laguerre {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Slack (in log units) for the ratio <= constant comparison; both sides carry
// a few ulps of rounding from the log-sum-exp evaluation.
constexpr double kLogSlack = 1e-14;

double log_sum_exp_scaled(const std::vector<double>& logs, double p) {
  double top = kNegInf;
  for (double v : logs) top = std::max(top, v);
  if (top == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : logs) sum += std::exp(p * (v - top));
  return top + std::log(sum) / p;
}

}  // namespace

std::string to_string(SpaceKind kind) {
  return kind == SpaceKind::Roumieu ? "roumieu" : "beurling";
}

void SpaceParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and > 0, got " + std::to_string(alpha));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("scale parameter must be finite and > 0, got " + std::to_string(scale));
  }
}

double log_theta_weight(std::uint64_t order, const SpaceParams& params) {
  params.validate();
  if (order == 0) return 0.0;
  return params.scale * std::pow(static_cast<double>(order), 1.0 / (2.0 * params.alpha));
}

double theta_weight(const MultiIndex& n, const SpaceParams& params) {
  return std::exp(log_theta_weight(n.order(), params));
}

double log_weighted_seq_norm(const CoefficientField& a, const SpaceParams& params, double p) {
  params.validate();
  if (!(p >= 1.0)) throw DomainError("norm index p must be >= 1, got " + std::to_string(p));
  std::vector<double> logs;
  logs.reserve(a.size());
  for (const auto& e : a.entries()) {
    if (e.value == 0.0) continue;
    logs.push_back(std::log(std::fabs(e.value)) + log_theta_weight(e.index.order(), params));
  }
  if (logs.empty()) return kNegInf;
  if (std::isinf(p)) {
    double top = kNegInf;
    for (double v : logs) top = std::max(top, v);
    return top;
  }
  return log_sum_exp_scaled(logs, p);
}

double weighted_seq_norm(const CoefficientField& a, const SpaceParams& params, double p) {
  return std::exp(log_weighted_seq_norm(a, params, p));
}

NormEquivalenceReport norm_equivalence_gap(const CoefficientField& a, double h, double h1,
                                           double alpha) {
  if (!(h1 > 0.0) || !(h1 < h)) {
    throw DomainError("norm equivalence needs 0 < h1 < h, got h=" + std::to_string(h) +
                      ", h1=" + std::to_string(h1));
  }
  const SpaceParams lower{alpha, h1, SpaceKind::Roumieu};
  const SpaceParams upper{alpha, h, SpaceKind::Roumieu};
  lower.validate();
  upper.validate();

  NormEquivalenceReport report;
  const double log_l2 = log_weighted_seq_norm(a, lower, 2.0);
  const double log_linf = log_weighted_seq_norm(a, upper, std::numeric_limits<double>::infinity());

  // Shell counts of the truncation; the constant sums over every admitted
  // index, stored or not.
  std::map<std::uint64_t, double> shells;
  for (const auto& n : a.truncation().indices(a.dim())) shells[n.order()] += 1.0;
  std::vector<double> logs;
  logs.reserve(shells.size());
  const double exponent = 1.0 / (2.0 * alpha);
  for (const auto& [order, count] : shells) {
    const double s = order == 0 ? 0.0 : std::pow(static_cast<double>(order), exponent);
    logs.push_back(std::log(count) + 2.0 * (h1 - h) * s);
  }
  const double log_c = 0.5 * log_sum_exp_scaled(logs, 1.0);

  report.l2_norm = std::exp(log_l2);
  report.linf_norm = std::exp(log_linf);
  report.constant = std::exp(log_c);
  const double log_ratio = log_linf == kNegInf ? 0.0 : log_l2 - log_linf;
  report.ratio = std::exp(log_ratio);
  report.holds = log_ratio <= log_c + kLogSlack;
  return report;
}

}  // namespace laguerre
