#include "laguerre/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "laguerre/error.hpp"

namespace laguerre {

namespace {

constexpr int kRescaleBits = 600;
const double kRescaleHigh = std::ldexp(1.0, kRescaleBits);
const double kRescaleFactor = std::ldexp(1.0, -kRescaleBits);

// e^{-x/2} = mantissa * 2^exponent with mantissa in (1/2, 1].
struct DampingFactor {
  double mantissa;
  long long exponent;
};

DampingFactor damping(double x) {
  const double half = 0.5 * x;
  const double q = std::floor(-half / std::numbers::ln2);
  return {std::exp(-half - q * std::numbers::ln2), static_cast<long long>(q)};
}

double apply_scale(double value, long long exponent) {
  if (exponent > 4000) exponent = 4000;
  if (exponent < -4000) exponent = -4000;
  return std::ldexp(value, static_cast<int>(exponent));
}

// Runs (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1} for k < count, calling
// sink(k, value, exponent) with L^{(a)}_k(x) = value * 2^exponent.
template <typename Sink>
void generalized_recurrence(double x, std::uint32_t a, std::size_t count, Sink&& sink) {
  if (count == 0) return;
  const double alpha = static_cast<double>(a);
  double prev = 0.0;
  double cur = 1.0;
  long long exponent = 0;
  sink(std::size_t{0}, cur, exponent);
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0 + alpha - x) * cur - (kd + alpha) * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kRescaleHigh || std::fabs(prev) > kRescaleHigh) {
      cur *= kRescaleFactor;
      prev *= kRescaleFactor;
      exponent += kRescaleBits;
    }
    sink(k + 1, cur, exponent);
  }
}

void require_nonnegative_x(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("evaluation point must be finite and >= 0, got " + std::to_string(x));
  }
}

double binomial(std::uint32_t m, std::uint32_t r) {
  double c = 1.0;
  for (std::uint32_t i = 1; i <= r; ++i) c = c * static_cast<double>(m - r + i) / i;
  return c;
}

}  // namespace

void check_eval_point(std::span<const double> x) {
  for (double xi : x) require_nonnegative_x(xi);
}

double laguerre_poly(long long j, double x) {
  if (j < 0) throw DomainError("Laguerre degree must be >= 0, got " + std::to_string(j));
  require_nonnegative_x(x);
  double prev = 0.0;
  double cur = 1.0;
  for (long long k = 0; k < j; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0 - x) * cur - kd * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

void damped_generalized_sweep(double x, std::uint32_t a, std::span<double> out) {
  require_nonnegative_x(x);
  const DampingFactor f = damping(x);
  generalized_recurrence(x, a, out.size(), [&](std::size_t k, double value, long long e) {
    out[k] = apply_scale(value * f.mantissa, e + f.exponent);
  });
}

void laguerre_function_sweep(double x, std::span<double> out) {
  damped_generalized_sweep(x, 0, out);
}

double laguerre_function(std::uint32_t j, double x) {
  require_nonnegative_x(x);
  const DampingFactor f = damping(x);
  double result = 0.0;
  generalized_recurrence(x, 0, std::size_t{j} + 1, [&](std::size_t k, double value, long long e) {
    if (k == j) result = apply_scale(value * f.mantissa, e + f.exponent);
  });
  return result;
}

double laguerre_function(const MultiIndex& n, std::span<const double> x) {
  if (n.dim() != x.size()) {
    throw DomainError("dimension mismatch: index " + std::to_string(n.dim()) + ", point " +
                      std::to_string(x.size()));
  }
  double product = 1.0;
  for (std::size_t axis = 0; axis < x.size(); ++axis) product *= laguerre_function(n[axis], x[axis]);
  return product;
}

void laguerre_function_derivative_sweep(double x, std::uint32_t m, std::span<double> out) {
  require_nonnegative_x(x);
  const std::size_t count = out.size();
  std::fill(out.begin(), out.end(), 0.0);
  if (count == 0) return;
  // d^m/dx^m [L_j e^{-x/2}] = sum_r C(m,r) (-1/2)^{m-r} (-1)^r e^{-x/2} L^{(r)}_{j-r}
  std::vector<double> generalized(count);
  for (std::uint32_t r = 0; r <= m; ++r) {
    if (r >= count) break;
    damped_generalized_sweep(x, r, std::span<double>(generalized.data(), count - r));
    const double coeff =
        binomial(m, r) * std::pow(-0.5, static_cast<double>(m - r)) * ((r % 2) ? -1.0 : 1.0);
    for (std::size_t j = r; j < count; ++j) out[j] += coeff * generalized[j - r];
  }
}

double laguerre_function_derivative(std::uint32_t j, std::uint32_t m, double x) {
  std::vector<double> values(std::size_t{j} + 1);
  laguerre_function_derivative_sweep(x, m, values);
  return values[j];
}

double laguerre_function_partial(const MultiIndex& n, const MultiIndex& p,
                                 std::span<const double> x) {
  if (n.dim() != x.size() || p.dim() != x.size()) {
    throw DomainError("dimension mismatch in laguerre_function_partial");
  }
  double product = 1.0;
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    product *= laguerre_function_derivative(n[axis], p[axis], x[axis]);
  }
  return product;
}

std::vector<AxisJet> laguerre_function_derivatives(const MultiIndex& n,
                                                   std::span<const double> x) {
  if (n.dim() != x.size()) {
    throw DomainError("dimension mismatch: index " + std::to_string(n.dim()) + ", point " +
                      std::to_string(x.size()));
  }
  std::vector<AxisJet> jets(x.size());
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    const std::size_t count = std::size_t{n[axis]} + 1;
    std::vector<double> buf(count);
    laguerre_function_derivative_sweep(x[axis], 0, buf);
    jets[axis].value = buf.back();
    laguerre_function_derivative_sweep(x[axis], 1, buf);
    jets[axis].d1 = buf.back();
    laguerre_function_derivative_sweep(x[axis], 2, buf);
    jets[axis].d2 = buf.back();
  }
  return jets;
}

namespace detail {

ScaledPair scaled_laguerre_pair(std::uint32_t degree, double x) {
  require_nonnegative_x(x);
  ScaledPair pair;
  double last = 0.0;
  double before = 0.0;
  long long last_exp = 0;
  long long before_exp = 0;
  generalized_recurrence(x, 0, std::size_t{degree} + 1, [&](std::size_t, double value, long long e) {
    before = last;
    before_exp = last_exp;
    last = value;
    last_exp = e;
  });
  pair.hi = last;
  pair.exponent = last_exp;
  pair.lo = before_exp == last_exp ? before : std::ldexp(before, static_cast<int>(before_exp - last_exp));
  return pair;
}

}  // namespace detail

}  // namespace laguerre
