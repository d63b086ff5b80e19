#include "laguerre/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "laguerre/error.hpp"
#include "laguerre/parallel.hpp"
#include "laguerre/polynomials.hpp"

namespace laguerre {

namespace {

constexpr std::size_t kBlockSize = 4096;

// Newton steps on L_K using L_K' = K (L_K - L_{K-1}) / x; the common scale of
// the pair cancels in the ratio.
double polish_root(std::uint32_t degree, double x) {
  for (int iter = 0; iter < 4; ++iter) {
    const auto pair = detail::scaled_laguerre_pair(degree, x);
    const double denom = static_cast<double>(degree) * (pair.hi - pair.lo);
    if (denom == 0.0) break;
    const double step = x * pair.hi / denom;
    const double next = x - step;
    if (!(next > 0.0) || !std::isfinite(next)) break;
    x = next;
    if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
  }
  return x;
}

std::string describe_node(std::span<const double> x) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ")";
  return os.str();
}

// log sum_{j<count} L_j(x)^2 with the recurrence rescaled against overflow.
double log_christoffel_sum(std::uint32_t count, double x) {
  double prev = 0.0;
  double cur = 1.0;
  double sum = 1.0;  // in units of 2^(2*exponent)
  long long exponent = 0;
  for (std::uint32_t k = 0; k + 1 < count; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0 - x) * cur - kd * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > 0x1p300) {
      cur *= 0x1p-300;
      prev *= 0x1p-300;
      sum *= 0x1p-600;
      exponent += 300;
    }
    sum += cur * cur;
  }
  return std::log(sum) + 2.0 * static_cast<double>(exponent) * std::numbers::ln2;
}

}  // namespace

double QuadratureRule::modified_weight(std::size_t k) const {
  return std::exp(log_modified_weights.at(k));
}

QuadratureRule gauss_laguerre_rule(std::size_t count) {
  if (count < 1 || count > kMaxRuleSize) {
    throw DomainError("rule size must lie in [1, " + std::to_string(kMaxRuleSize) + "], got " +
                      std::to_string(count));
  }
  const auto K = static_cast<Eigen::Index>(count);
  Eigen::VectorXd diag(K);
  Eigen::VectorXd sub(std::max<Eigen::Index>(K - 1, 0));
  for (Eigen::Index k = 0; k < K; ++k) diag[k] = 2.0 * static_cast<double>(k) + 1.0;
  for (Eigen::Index k = 1; k < K; ++k) sub[k - 1] = static_cast<double>(k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("tridiagonal eigensolver failed for K=" + std::to_string(count));
  }

  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  rule.log_modified_weights.resize(count);
  const auto degree = static_cast<std::uint32_t>(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double x = polish_root(degree, solver.eigenvalues()[static_cast<Eigen::Index>(k)]);
    // Christoffel form w = 1 / sum_{j<K} L_j(x)^2 (the L_j are orthonormal for
    // e^{-x}); equals the squared first eigenvector component.
    const double log_w = -log_christoffel_sum(degree, x);
    rule.nodes[k] = x;
    rule.weights[k] = std::exp(log_w);
    rule.log_modified_weights[k] = log_w + x;
  }
  return rule;
}

std::size_t default_rule_size(std::uint32_t degree) {
  return std::min<std::size_t>(std::size_t{degree} + 16, kMaxRuleSize);
}

double integrate_orthant(const ScalarField& f, const QuadratureRule& rule) {
  return integrate_orthant([&f](std::span<const double> x) { return f(x); }, rule, f.dim());
}

double integrate_orthant(const ScalarField::ValueFn& f, const QuadratureRule& rule,
                         std::size_t dim) {
  if (dim == 0) throw DomainError("dimension must be positive");
  const std::size_t K = rule.size();
  if (K == 0) throw DomainError("empty quadrature rule");
  std::vector<double> modified(K);
  for (std::size_t k = 0; k < K; ++k) modified[k] = rule.modified_weight(k);

  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / K) {
      throw DomainError("tensor grid too large");
    }
    total *= K;
  }
  const std::size_t blocks = (total + kBlockSize - 1) / kBlockSize;
  std::vector<double> partial(blocks, 0.0);
  std::vector<std::optional<std::size_t>> bad(blocks);

  parallel::for_each_block(blocks, [&](std::size_t b) {
    const std::size_t begin = b * kBlockSize;
    const std::size_t end = std::min(total, begin + kBlockSize);
    std::vector<std::size_t> digit(dim);
    std::size_t rest = begin;
    for (std::size_t axis = dim; axis-- > 0;) {
      digit[axis] = rest % K;
      rest /= K;
    }
    std::vector<double> x(dim);
    std::vector<double> terms;
    terms.reserve(end - begin);
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
      terms.push_back(w * value);
      for (std::size_t axis = dim; axis-- > 0;) {
        if (++digit[axis] < K) break;
        digit[axis] = 0;
      }
    }
    partial[b] = parallel::pairwise_sum(terms);
  });

  for (std::size_t b = 0; b < blocks; ++b) {
    if (bad[b]) {
      std::vector<double> x(dim);
      std::size_t rest = *bad[b];
      for (std::size_t axis = dim; axis-- > 0;) {
        x[axis] = rule.nodes[rest % K];
        rest /= K;
      }
      throw NonFiniteError("integrand is not finite at node " + describe_node(x));
    }
  }
  return parallel::pairwise_sum(partial);
}

}  // namespace laguerre
