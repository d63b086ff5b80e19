#include "laguerre/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "laguerre/error.hpp"
#include "laguerre/operator.hpp"
#include "laguerre/parallel.hpp"

namespace laguerre {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// sum_j m_j log m_j with 0 log 0 = 0
double entropy_term(const MultiIndex& m) {
  double s = 0.0;
  for (std::uint32_t v : m.entries()) {
    if (v > 0) s += static_cast<double>(v) * std::log(static_cast<double>(v));
  }
  return s;
}

std::vector<double> axis_grid(const GridSpec& grid) {
  if (!(grid.x_min > 0.0) || !(grid.x_max > grid.x_min) || grid.points < 2) {
    throw DomainError("grid needs 0 < x_min < x_max and at least 2 points");
  }
  std::vector<double> g;
  if (grid.include_zero) g.push_back(0.0);
  const double lmin = std::log(grid.x_min);
  const double lmax = std::log(grid.x_max);
  for (std::size_t i = 0; i < grid.points; ++i) {
    g.push_back(std::exp(lmin + (lmax - lmin) * static_cast<double>(i) /
                                    static_cast<double>(grid.points - 1)));
  }
  return g;
}

}  // namespace

EtaReport eta_seminorm(const CoefficientField& a, double alpha, double h, std::uint32_t n_max) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and >= 0, got " + std::to_string(alpha));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("h must be finite and > 0, got " + std::to_string(h));
  }
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  EtaReport report;
  report.log_value = kNegInf;
  report.log_ratios.resize(n_max);
  const double log_h = std::log(h);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    // Association fixed so the result is monotone in h and alpha term by term.
    const double log_ratio = (log_iterate_norm(a, n) - nd * log_h) - alpha * std::lgamma(nd + 1.0);
    report.log_ratios[n - 1] = log_ratio;
    if (log_ratio > report.log_value) {
      report.log_value = log_ratio;
      report.argmax = n;
    }
  }
  report.value = report.log_value == kNegInf ? 0.0 : std::exp(report.log_value);
  report.growth = n_max >= 2 && report.log_ratios[n_max - 1] > report.log_ratios[n_max - 2];
  return report;
}

EtaReport eta_seminorm(const CoefficientField& a, const SpaceParams& params, std::uint32_t n_max) {
  params.validate();
  return eta_seminorm(a, params.alpha, params.scale, n_max);
}

GTypeReport gtype_seminorm(const ScalarField& f, const SpaceParams& params, std::uint32_t max_order,
                           const QuadratureRule& rule) {
  params.validate();
  if (!f.has_partials() && max_order > 0) {
    throw DomainError("G-type seminorm needs a field with derivatives up to order " +
                      std::to_string(max_order));
  }
  const std::size_t dim = f.dim();
  const std::size_t K = rule.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= K;

  // Node coordinates and tensor modified weights.
  std::vector<double> coords(total * dim);
  std::vector<double> weights(total);
  {
    std::vector<std::size_t> digit(dim, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      double w = 1.0;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        coords[idx * dim + axis] = rule.nodes[digit[axis]];
        w *= rule.modified_weight(digit[axis]);
      }
      weights[idx] = w;
      for (std::size_t axis = dim; axis-- > 0;) {
        if (++digit[axis] < K) break;
        digit[axis] = 0;
      }
    }
  }

  const auto orders = enumerate_total_degree(dim, max_order);
  const double log_a = std::log(params.scale);
  const double half_alpha = 0.5 * params.alpha;

  struct Best {
    double log_term = kNegInf;
    std::size_t k_index = 0;
    std::vector<double> per_order;  // log of the largest term per max(|p|,|k|)
  };
  std::vector<Best> best(orders.size());

  parallel::for_each_block(orders.size(), [&](std::size_t pi) {
    const MultiIndex& p = orders[pi];
    std::vector<double> squared(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      const std::span<const double> x(coords.data() + idx * dim, dim);
      const double v = p.order() == 0 ? f(x) : f.partial(p, x);
      if (!std::isfinite(v)) throw NonFiniteError("derivative " + p.to_string() + " not finite");
      squared[idx] = v * v;
    }
    Best& slot = best[pi];
    slot.per_order.assign(std::size_t{max_order} + 1, kNegInf);
    std::vector<double> terms(total);
    for (std::size_t ki = 0; ki < orders.size(); ++ki) {
      const MultiIndex& k = orders[ki];
      for (std::size_t idx = 0; idx < total; ++idx) {
        double monomial = 1.0;
        for (std::size_t axis = 0; axis < dim; ++axis) {
          const double xj = coords[idx * dim + axis];
          for (std::uint32_t e = 0; e < p[axis] + k[axis]; ++e) monomial *= xj;
        }
        terms[idx] = weights[idx] * monomial * squared[idx];
      }
      const double integral = parallel::pairwise_sum(terms);
      if (!(integral > 0.0)) continue;
      const double log_term = 0.5 * std::log(integral) -
                              static_cast<double>(p.order() + k.order()) * log_a -
                              half_alpha * (entropy_term(k) + entropy_term(p));
      const std::size_t o = std::max(p.order(), k.order());
      slot.per_order[o] = std::max(slot.per_order[o], log_term);
      if (log_term > slot.log_term) {
        slot.log_term = log_term;
        slot.k_index = ki;
      }
    }
  });

  GTypeReport report;
  report.order_max.assign(std::size_t{max_order} + 1, 0.0);
  std::vector<double> log_order_max(std::size_t{max_order} + 1, kNegInf);
  double best_log = kNegInf;
  for (std::size_t pi = 0; pi < orders.size(); ++pi) {
    for (std::size_t o = 0; o <= max_order; ++o) {
      log_order_max[o] = std::max(log_order_max[o], best[pi].per_order[o]);
    }
    if (best[pi].log_term > best_log) {
      best_log = best[pi].log_term;
      report.argmax_p = orders[pi];
      report.argmax_k = orders[best[pi].k_index];
    }
  }
  double running = 0.0;
  for (std::size_t o = 0; o <= max_order; ++o) {
    report.order_max[o] = log_order_max[o] == kNegInf ? 0.0 : std::exp(log_order_max[o]);
    const double next = std::max(running, report.order_max[o]);
    report.increments.push_back(o == 0 ? next : next - running);
    report.running_max.push_back(next);
    running = next;
  }
  report.value = running;
  report.bounded = max_order == 0 || report.order_max.back() <= report.running_max[max_order - 1];
  return report;
}

SchwartzReport schwartz_seminorm(const ScalarField& f, const MultiIndex& k, const MultiIndex& p,
                                 const GridSpec& grid) {
  const std::size_t dim = f.dim();
  if (k.dim() != dim || p.dim() != dim) throw DomainError("seminorm index dimension mismatch");
  if (p.order() > 0 && !f.has_partials() && !(f.has_jets() && p.order() <= 2)) {
    throw DomainError("Schwartz seminorm needs derivatives of order " + p.to_string());
  }
  const auto g = axis_grid(grid);
  auto objective = [&](std::span<const double> x) {
    double weight = 1.0;
    for (std::size_t axis = 0; axis < dim; ++axis) {
      weight *= std::pow(x[axis], static_cast<double>(k[axis]));  // pow(0, 0) == 1
    }
    const double d = p.order() == 0 ? f(x) : f.partial(p, x);
    return weight * std::fabs(d);
  };

  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= g.size();
  std::vector<std::size_t> digit(dim, 0), best_digit(dim, 0);
  std::vector<double> x(dim);
  double best = -1.0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    for (std::size_t axis = 0; axis < dim; ++axis) x[axis] = g[digit[axis]];
    const double v = objective(x);
    if (v > best) {
      best = v;
      best_digit = digit;
    }
    for (std::size_t axis = dim; axis-- > 0;) {
      if (++digit[axis] < g.size()) break;
      digit[axis] = 0;
    }
  }
  SchwartzReport report;
  report.location.resize(dim);
  for (std::size_t axis = 0; axis < dim; ++axis) report.location[axis] = g[best_digit[axis]];
  report.value = best;

  if (grid.refine) {
    // Coordinate-wise golden-section search inside the neighbouring cells.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int sweep = 0; sweep < 3; ++sweep) {
      for (std::size_t axis = 0; axis < dim; ++axis) {
        const std::size_t i = best_digit[axis];
        double lo = g[i == 0 ? 0 : i - 1];
        double hi = g[std::min(i + 1, g.size() - 1)];
        std::vector<double> probe = report.location;
        auto along = [&](double t) {
          probe[axis] = t;
          return objective(probe);
        };
        double c = hi - inv_phi * (hi - lo);
        double d = lo + inv_phi * (hi - lo);
        double fc = along(c);
        double fd = along(d);
        for (int iter = 0; iter < 100 && hi - lo > 1e-14 * std::max(1.0, hi); ++iter) {
          if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = along(c);
          } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = along(d);
          }
        }
        const double t = 0.5 * (lo + hi);
        const double v = along(t);
        if (v > report.value) {
          report.value = v;
          report.location[axis] = t;
        }
      }
    }
  }
  return report;
}

SigmaReport sigma_seminorm(const ScalarField& f, const SpaceParams& params, std::uint32_t max_order,
                           std::uint32_t j, const QuadratureRule& rule, const GridSpec& grid) {
  SigmaReport report;
  report.gtype = gtype_seminorm(f, params, max_order, rule);
  const auto indices = enumerate_total_degree(f.dim(), j);
  for (const auto& p : indices) {
    for (const auto& k : indices) {
      report.schwartz_part = std::max(report.schwartz_part, schwartz_seminorm(f, k, p, grid).value);
    }
  }
  report.value = report.gtype.value + report.schwartz_part;
  return report;
}

}  // namespace laguerre
