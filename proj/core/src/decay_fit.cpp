#include "laguerre/decay_fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "laguerre/error.hpp"

namespace laguerre {

namespace {

constexpr double kGridStep = 0.01;
constexpr double kMaxExponent = 4.0;

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms = 0.0;
};

// Ordinary least squares y ~ intercept + slope * x.
LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ssr += r * r;
  }
  fit.rms = std::sqrt(ssr / n);
  return fit;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::vector<double> shell_maxima(const CoefficientField& a) {
  std::vector<double> b(a.truncation().max_order(a.dim()) + 1, 0.0);
  for (const auto& e : a.entries()) {
    auto& slot = b[e.index.order()];
    slot = std::max(slot, std::fabs(e.value));
  }
  return b;
}

DecayFit fit_at_exponent(std::span<const double> orders, std::span<const double> log_values,
                         double t) {
  std::vector<double> x(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) x[i] = std::pow(orders[i], t);
  const LineFit line = fit_line(x, log_values);
  DecayFit fit;
  fit.t_hat = t;
  fit.alpha_hat = 1.0 / (2.0 * t);
  fit.c_hat = -line.slope;
  fit.log_amplitude = line.intercept;
  fit.residual = line.rms;
  fit.support_size = orders.size();
  return fit;
}

DecayFit fit_stretched_exponential(std::span<const double> orders,
                                   std::span<const double> log_values) {
  if (orders.size() != log_values.size() || orders.size() < 3) {
    throw DomainError("decay fit needs at least 3 points");
  }
  auto residual = [&](double t) { return fit_at_exponent(orders, log_values, t).residual; };

  const int steps = static_cast<int>(std::lround(kMaxExponent / kGridStep));
  double best_t = kGridStep;
  double best_r = residual(best_t);
  for (int i = 2; i <= steps; ++i) {
    const double t = kGridStep * i;
    const double r = residual(t);
    if (r < best_r) {
      best_r = r;
      best_t = t;
    }
  }

  // Golden-section refinement inside the neighbouring grid cells.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(best_t - kGridStep, 1e-6);
  double hi = std::min(best_t + kGridStep, kMaxExponent);
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double rc = residual(c);
  double rd = residual(d);
  for (int iter = 0; iter < 80 && hi - lo > 1e-12; ++iter) {
    if (rc < rd) {
      hi = d;
      d = c;
      rd = rc;
      c = hi - inv_phi * (hi - lo);
      rc = residual(c);
    } else {
      lo = c;
      c = d;
      rc = rd;
      d = lo + inv_phi * (hi - lo);
      rd = residual(d);
    }
  }
  const double refined = 0.5 * (lo + hi);
  const double t = residual(refined) <= best_r ? refined : best_t;
  return fit_at_exponent(orders, log_values, t);
}

DecayEstimate estimate_decay_params(const CoefficientField& a, double floor) {
  if (!(floor > 0.0)) throw DomainError("fit floor must be > 0");
  const auto b = shell_maxima(a);
  DecayEstimate estimate;

  std::vector<double> orders;
  std::vector<double> logs;
  for (std::size_t m = 0; m < b.size(); ++m) {
    if (b[m] > floor) {
      orders.push_back(static_cast<double>(m));
      logs.push_back(std::log(b[m]));
    }
  }
  if (orders.empty()) {
    estimate.finitely_supported = true;
    return estimate;
  }
  // The shells stop above the floor before the top shell. A decaying
  // sequence crosses the floor within about one step of its own decay; a
  // drop much larger than every step seen so far is a cutoff.
  const auto last = static_cast<std::size_t>(orders.back());
  if (last + 1 < b.size()) {
    double step = 0.0;
    for (std::size_t i = 1; i < logs.size(); ++i) step = std::max(step, logs[i - 1] - logs[i]);
    if (logs.back() - std::log(floor) > 2.0 * step) {
      estimate.finitely_supported = true;
      return estimate;
    }
  }
  if (orders.size() < 3) {
    throw DomainError("decay fit needs at least 3 shells above the floor, found " +
                      std::to_string(orders.size()));
  }
  estimate.fit = fit_stretched_exponential(orders, logs);
  return estimate;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Roumieu: return "roumieu";
    case Membership::Beurling: return "beurling";
    case Membership::NotMember: return "not-member";
    case Membership::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MembershipReport classify_pilipovic(const CoefficientField& a, double alpha,
                                    const ClassifyOptions& options) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and > 0, got " + std::to_string(alpha));
  }
  MembershipReport report;
  report.alpha = alpha;
  report.critical_exponent = 1.0 / alpha;

  const DecayEstimate estimate = estimate_decay_params(a, options.floor);
  if (estimate.finitely_supported) {
    report.finitely_supported = true;
    report.verdict = Membership::Beurling;
    report.confidence = 1.0;
    report.detail = "finitely supported; member of every space of the scale";
    return report;
  }
  const DecayFit& fit = *estimate.fit;
  report.fit = fit;

  const auto b = shell_maxima(a);
  std::vector<double> orders, logs, log_orders;
  for (std::size_t m = 0; m < b.size(); ++m) {
    if (b[m] > options.floor) {
      orders.push_back(static_cast<double>(m));
      logs.push_back(std::log(b[m]));
      log_orders.push_back(std::log1p(static_cast<double>(m)));
    }
  }
  const LineFit power = fit_line(log_orders, logs);
  report.power_law_residual = power.rms;

  std::ostringstream detail;
  detail.precision(6);
  if (fit.residual > options.residual_limit) {
    report.verdict = Membership::Inconclusive;
    detail << "fit residual " << fit.residual << " exceeds " << options.residual_limit;
    report.detail = detail.str();
    return report;
  }
  if (!(fit.c_hat > 0.0)) {
    report.verdict = Membership::NotMember;
    report.confidence = 1.0;
    report.detail = "coefficients do not decay";
    return report;
  }
  // A power law that explains the shells markedly better than any stretched
  // exponential means decay slower than every weight of the scale.
  if (-power.slope > 0.0 && power.rms < 0.5 * fit.residual) {
    report.verdict = Membership::NotMember;
    report.confidence = clamp01(1.0 - power.rms / fit.residual);
    detail << "polynomial decay, exponent " << -power.slope;
    report.detail = detail.str();
    return report;
  }

  const double tau = report.critical_exponent;
  const double gap = fit.t_hat - tau;
  const double tol = options.exponent_tolerance;
  if (gap > tol) {
    report.verdict = Membership::Beurling;
    report.confidence = clamp01(gap / (2.0 * tol));
    detail << "decay exponent " << fit.t_hat << " exceeds 1/alpha = " << tau;
    report.detail = detail.str();
    return report;
  }
  if (gap < -tol) {
    report.verdict = Membership::NotMember;
    report.confidence = clamp01(-gap / (2.0 * tol));
    detail << "decay exponent " << fit.t_hat << " below 1/alpha = " << tau;
    report.detail = detail.str();
    return report;
  }

  // Boundary exponent: the rate at t = 1/alpha on nested truncations decides
  // between "some h" (bounded rate) and "every h" (rate growing without bound).
  for (double fraction : {0.5, 0.75, 1.0}) {
    const auto count = std::max<std::size_t>(
        3, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(orders.size()))));
    const auto n = std::min(count, orders.size());
    report.boundary_rates.push_back(
        fit_at_exponent(std::span(orders).first(n), std::span(logs).first(n), tau).c_hat);
  }
  const auto& rates = report.boundary_rates;
  if (!(rates.back() > 0.0)) {
    report.verdict = Membership::NotMember;
    report.confidence = 0.5;
    report.detail = "no decay at the critical exponent";
    return report;
  }
  const bool increasing = rates[0] < rates[1] && rates[1] < rates[2];
  const double growth = rates[2] / rates[0] - 1.0;
  if (increasing && growth > options.trend_growth) {
    report.verdict = Membership::Beurling;
    report.confidence = clamp01(growth / (2.0 * options.trend_growth));
    detail << "critical exponent; rate grows " << growth * 100.0 << "% across nested truncations";
  } else {
    report.verdict = Membership::Roumieu;
    report.confidence = clamp01(1.0 - std::fabs(gap) / tol);
    detail << "critical exponent " << tau << ", rate " << rates.back();
  }
  report.detail = detail.str();
  return report;
}

}  // namespace laguerre
