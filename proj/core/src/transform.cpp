#include "laguerre/transform.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "laguerre/error.hpp"
#include "laguerre/parallel.hpp"
#include "laguerre/polynomials.hpp"

namespace laguerre {

namespace {

// Per-axis tables of derivative order m: table[axis][j] = l_j^{(m)}(x_axis).
std::vector<std::vector<double>> axis_tables(std::span<const double> x, std::uint32_t degree,
                                             std::uint32_t m) {
  std::vector<std::vector<double>> tables(x.size(), std::vector<double>(std::size_t{degree} + 1));
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    if (m == 0) {
      laguerre_function_sweep(x[axis], tables[axis]);
    } else {
      laguerre_function_derivative_sweep(x[axis], m, tables[axis]);
    }
  }
  return tables;
}

std::uint32_t max_axis_degree(const CoefficientField& a) {
  std::uint32_t m = 0;
  for (const auto& e : a.entries()) m = std::max(m, e.index.max_entry());
  return m;
}

void check_dims(const CoefficientField& a, std::span<const double> x) {
  if (x.size() != a.dim()) {
    throw DomainError("point has dimension " + std::to_string(x.size()) + ", field has " +
                      std::to_string(a.dim()));
  }
  check_eval_point(x);
}

}  // namespace

CoefficientField analyze(const ScalarField& f, Truncation truncation, const QuadratureRule& rule,
                         const AnalyzeOptions& options) {
  const std::size_t dim = f.dim();
  const std::size_t K = rule.size();
  if (K == 0) throw DomainError("empty quadrature rule");
  if (K < std::size_t{truncation.degree} + 1 && !options.allow_small_rule) {
    throw DomainError("quadrature rule with " + std::to_string(K) +
                      " nodes is too small for per-axis degree " +
                      std::to_string(truncation.degree) + " (need at least degree+1)");
  }
  const auto indices = truncation.indices(dim);
  const std::size_t count = indices.size();

  // table[k * stride + j] = l_j(x_k)
  const std::size_t stride = std::size_t{truncation.degree} + 1;
  std::vector<double> table(K * stride);
  std::vector<double> modified(K);
  for (std::size_t k = 0; k < K; ++k) {
    laguerre_function_sweep(rule.nodes[k], std::span<double>(table.data() + k * stride, stride));
    modified[k] = rule.modified_weight(k);
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= K;
  const std::size_t block = std::max<std::size_t>(1024, (total + 63) / 64);
  const std::size_t blocks = (total + block - 1) / block;
  std::vector<std::vector<double>> partial(blocks);
  std::vector<std::optional<std::size_t>> bad(blocks);

  parallel::for_each_block(blocks, [&](std::size_t b) {
    const std::size_t begin = b * block;
    const std::size_t end = std::min(total, begin + block);
    std::vector<double> acc(count, 0.0);
    std::vector<std::size_t> digit(dim);
    std::size_t rest = begin;
    for (std::size_t axis = dim; axis-- > 0;) {
      digit[axis] = rest % K;
      rest /= K;
    }
    std::vector<double> x(dim);
    for (std::size_t idx = begin; idx < end; ++idx) {
      double w = 1.0;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        x[axis] = rule.nodes[digit[axis]];
        w *= modified[digit[axis]];
      }
      const double value = f(x);
      if (!std::isfinite(value)) {
        bad[b] = idx;
        return;
      }
      const double g = w * value;
      for (std::size_t i = 0; i < count; ++i) {
        double prod = g;
        const auto n = indices[i].entries();
        for (std::size_t axis = 0; axis < dim; ++axis) prod *= table[digit[axis] * stride + n[axis]];
        acc[i] += prod;
      }
      for (std::size_t axis = dim; axis-- > 0;) {
        if (++digit[axis] < K) break;
        digit[axis] = 0;
      }
    }
    partial[b] = std::move(acc);
  });

  for (std::size_t b = 0; b < blocks; ++b) {
    if (bad[b]) {
      std::ostringstream os;
      os.precision(17);
      std::size_t rest = *bad[b];
      std::vector<double> x(dim);
      for (std::size_t axis = dim; axis-- > 0;) {
        x[axis] = rule.nodes[rest % K];
        rest /= K;
      }
      os << "field is not finite at quadrature node (";
      for (std::size_t i = 0; i < dim; ++i) os << (i ? "," : "") << x[i];
      os << ")";
      throw NonFiniteError(os.str());
    }
  }

  std::vector<double> values(count);
  parallel::pairwise_accumulate(partial, values);
  return CoefficientField::from_dense(dim, truncation, values);
}

CoefficientField analyze(const ScalarField& f, Truncation truncation) {
  return analyze(f, truncation, gauss_laguerre_rule(default_rule_size(truncation.degree)));
}

double synthesize_at(const CoefficientField& a, std::span<const double> x) {
  check_dims(a, x);
  if (a.empty()) return 0.0;
  const auto tables = axis_tables(x, max_axis_degree(a), 0);
  double sum = 0.0;
  for (const auto& e : a.entries()) {
    double term = e.value;
    for (std::size_t axis = 0; axis < x.size(); ++axis) term *= tables[axis][e.index[axis]];
    sum += term;
  }
  return sum;
}

std::vector<double> synthesize(const CoefficientField& a,
                               const std::vector<std::vector<double>>& points) {
  for (const auto& p : points) check_dims(a, p);
  std::vector<double> out(points.size());
  constexpr std::size_t kChunk = 64;
  const std::size_t blocks = (points.size() + kChunk - 1) / kChunk;
  parallel::for_each_block(blocks, [&](std::size_t b) {
    const std::size_t end = std::min(points.size(), (b + 1) * kChunk);
    for (std::size_t i = b * kChunk; i < end; ++i) out[i] = synthesize_at(a, points[i]);
  });
  return out;
}

double parseval_l2_norm(const CoefficientField& a) {
  double scale = 0.0;
  for (const auto& e : a.entries()) scale = std::max(scale, std::fabs(e.value));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (const auto& e : a.entries()) {
    const double r = e.value / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

ScalarField series_field(const CoefficientField& a) {
  const std::size_t dim = a.dim();
  const std::uint32_t degree = max_axis_degree(a);
  auto value = [a](std::span<const double> x) { return synthesize_at(a, x); };
  auto jets = [a, degree, dim](std::span<const double> x) {
    check_dims(a, x);
    const auto t0 = axis_tables(x, degree, 0);
    const auto t1 = axis_tables(x, degree, 1);
    const auto t2 = axis_tables(x, degree, 2);
    std::vector<AxisJet> out(dim);
    double f = 0.0;
    for (const auto& e : a.entries()) {
      double base = e.value;
      for (std::size_t axis = 0; axis < dim; ++axis) base *= t0[axis][e.index[axis]];
      f += base;
      for (std::size_t j = 0; j < dim; ++j) {
        double p1 = e.value;
        double p2 = e.value;
        for (std::size_t axis = 0; axis < dim; ++axis) {
          const std::uint32_t n = e.index[axis];
          p1 *= axis == j ? t1[axis][n] : t0[axis][n];
          p2 *= axis == j ? t2[axis][n] : t0[axis][n];
        }
        out[j].d1 += p1;
        out[j].d2 += p2;
      }
    }
    for (auto& jet : out) jet.value = f;
    return out;
  };
  auto partial = [a, degree, dim](const MultiIndex& p, std::span<const double> x) {
    check_dims(a, x);
    if (p.dim() != dim) throw DomainError("derivative order has wrong dimension");
    std::vector<std::vector<double>> tables(dim);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      tables[axis].resize(std::size_t{degree} + 1);
      laguerre_function_derivative_sweep(x[axis], p[axis], tables[axis]);
    }
    double sum = 0.0;
    for (const auto& e : a.entries()) {
      double term = e.value;
      for (std::size_t axis = 0; axis < dim; ++axis) term *= tables[axis][e.index[axis]];
      sum += term;
    }
    return sum;
  };
  return ScalarField(dim, value, jets, partial);
}

}  // namespace laguerre
