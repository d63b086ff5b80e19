#include "laguerre/fields.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "laguerre/error.hpp"
#include "laguerre/io.hpp"
#include "laguerre/polynomials.hpp"

namespace laguerre {

ScalarField::ScalarField(std::size_t dim, ValueFn value, JetFn jets, PartialFn partial)
    : dim_(dim), value_(std::move(value)), jets_(std::move(jets)), partial_(std::move(partial)) {
  if (dim_ == 0) throw DomainError("field dimension must be positive");
  if (!value_) throw DomainError("field needs a value evaluator");
}

double ScalarField::operator()(std::span<const double> x) const {
  if (x.size() != dim_) {
    throw DomainError("point has dimension " + std::to_string(x.size()) + ", field has " +
                      std::to_string(dim_));
  }
  return value_(x);
}

std::vector<AxisJet> ScalarField::jets(std::span<const double> x) const {
  if (x.size() != dim_) throw DomainError("point dimension mismatch");
  if (jets_) return jets_(x);
  if (!partial_) throw DomainError("field has no derivative evaluator");
  std::vector<AxisJet> out(dim_);
  const double f = value_(x);
  for (std::size_t axis = 0; axis < dim_; ++axis) {
    std::vector<std::uint32_t> p(dim_, 0);
    p[axis] = 1;
    out[axis].value = f;
    out[axis].d1 = partial_(MultiIndex(p), x);
    p[axis] = 2;
    out[axis].d2 = partial_(MultiIndex(p), x);
  }
  return out;
}

double ScalarField::partial(const MultiIndex& p, std::span<const double> x) const {
  if (x.size() != dim_ || p.dim() != dim_) throw DomainError("dimension mismatch in partial");
  if (partial_) return partial_(p, x);
  if (p.order() == 0) return value_(x);
  if (jets_ && p.order() <= 2) {
    const auto j = jets_(x);
    for (std::size_t axis = 0; axis < dim_; ++axis) {
      if (p[axis] == p.order()) return p.order() == 1 ? j[axis].d1 : j[axis].d2;
    }
  }
  throw DomainError("field has no derivative evaluator for order " + p.to_string());
}

ScalarField tensor_field(std::size_t dim, std::function<double(std::uint32_t, double)> derivative) {
  auto value = [derivative, dim](std::span<const double> x) {
    double prod = 1.0;
    for (std::size_t axis = 0; axis < dim; ++axis) prod *= derivative(0, x[axis]);
    return prod;
  };
  auto jets = [derivative, dim](std::span<const double> x) {
    std::vector<AxisJet> g(dim);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      g[axis] = {derivative(0, x[axis]), derivative(1, x[axis]), derivative(2, x[axis])};
    }
    std::vector<AxisJet> out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      double v = 1.0, d1 = 1.0, d2 = 1.0;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        v *= g[axis].value;
        d1 *= axis == j ? g[axis].d1 : g[axis].value;
        d2 *= axis == j ? g[axis].d2 : g[axis].value;
      }
      out[j] = {v, d1, d2};
    }
    return out;
  };
  auto partial = [derivative, dim](const MultiIndex& p, std::span<const double> x) {
    double prod = 1.0;
    for (std::size_t axis = 0; axis < dim; ++axis) prod *= derivative(p[axis], x[axis]);
    return prod;
  };
  return ScalarField(dim, value, jets, partial);
}

ScalarField exp_decay_field(std::size_t dim) {
  return tensor_field(dim, [](std::uint32_t m, double t) {
    return (m % 2 ? -1.0 : 1.0) * std::exp(-t);
  });
}

ScalarField laguerre_basis_field(const MultiIndex& n) {
  const std::size_t dim = n.dim();
  auto value = [n](std::span<const double> x) { return laguerre_function(n, x); };
  auto jets = [n, dim](std::span<const double> x) {
    const auto axis_jets = laguerre_function_derivatives(n, x);
    std::vector<AxisJet> out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      double v = 1.0, d1 = 1.0, d2 = 1.0;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        v *= axis_jets[axis].value;
        d1 *= axis == j ? axis_jets[axis].d1 : axis_jets[axis].value;
        d2 *= axis == j ? axis_jets[axis].d2 : axis_jets[axis].value;
      }
      out[j] = {v, d1, d2};
    }
    return out;
  };
  auto partial = [n](const MultiIndex& p, std::span<const double> x) {
    return laguerre_function_partial(n, p, x);
  };
  return ScalarField(dim, value, jets, partial);
}

ScalarField poly_exp_field(std::size_t dim, std::vector<double> coeffs) {
  if (coeffs.empty()) throw DomainError("poly-exp needs at least one coefficient");
  return tensor_field(dim, [coeffs](std::uint32_t m, double t) {
    // (q e^{-t/2})^{(m)} = e^{-t/2} sum_r C(m,r) q^{(r)}(t) (-1/2)^{m-r}
    double sum = 0.0;
    double binom = 1.0;
    for (std::uint32_t r = 0; r <= m; ++r) {
      if (r > 0) binom = binom * static_cast<double>(m - r + 1) / r;
      double qr = 0.0;  // q^{(r)}(t) by Horner on the differentiated coefficients
      for (std::size_t k = coeffs.size(); k-- > r;) {
        double falling = 1.0;
        for (std::uint32_t i = 0; i < r; ++i) falling *= static_cast<double>(k - i);
        qr = qr * t + coeffs[k] * falling;
      }
      sum += binom * qr * std::pow(-0.5, static_cast<double>(m - r));
    }
    return sum * std::exp(-0.5 * t);
  });
}

namespace {

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(',', start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

ScalarField builtin_field(std::string_view name, std::size_t dim) {
  if (name == "exp-decay") {
    if (dim == 0) throw DomainError("exp-decay needs a dimension");
    return exp_decay_field(dim);
  }
  if (name.starts_with("l:")) {
    std::vector<long long> idx;
    for (auto part : split_list(name.substr(2))) {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size()) {
        throw ParseError("bad Laguerre index in field name '" + std::string(name) + "'");
      }
      idx.push_back(v);
    }
    auto n = MultiIndex::from_signed(idx);
    if (dim != 0 && n.dim() != dim) {
      throw DomainError("field '" + std::string(name) + "' has dimension " +
                        std::to_string(n.dim()) + " but --dim is " + std::to_string(dim));
    }
    return laguerre_basis_field(n);
  }
  if (name.starts_with("poly-exp:")) {
    if (dim == 0) throw DomainError("poly-exp needs a dimension");
    std::vector<double> coeffs;
    for (auto part : split_list(name.substr(9))) coeffs.push_back(io::parse_double(part));
    return poly_exp_field(dim, std::move(coeffs));
  }
  throw ParseError("unknown field '" + std::string(name) +
                   "' (expected exp-decay, l:<indices> or poly-exp:<coeffs>)");
}

}  // namespace laguerre
