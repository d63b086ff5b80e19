#include "laguerre/coefficient_field.hpp"

#include <algorithm>

#include "laguerre/error.hpp"

namespace laguerre {

bool Truncation::admits(const MultiIndex& n) const noexcept {
  return kind == TruncationKind::Total ? n.order() <= degree : n.max_entry() <= degree;
}

std::vector<MultiIndex> Truncation::indices(std::size_t dim) const {
  return kind == TruncationKind::Total ? enumerate_total_degree(dim, degree)
                                       : enumerate_box(dim, degree);
}

std::uint64_t Truncation::max_order(std::size_t dim) const noexcept {
  return kind == TruncationKind::Total ? degree : static_cast<std::uint64_t>(degree) * dim;
}

std::string to_string(TruncationKind kind) {
  return kind == TruncationKind::Total ? "total" : "box";
}

TruncationKind parse_truncation_kind(const std::string& text) {
  if (text == "total") return TruncationKind::Total;
  if (text == "box") return TruncationKind::Box;
  throw ParseError("truncation kind must be 'box' or 'total', got '" + text + "'");
}

CoefficientField::CoefficientField(std::size_t dim, Truncation truncation)
    : dim_(dim), truncation_(truncation) {
  if (dim == 0) throw DomainError("coefficient field dimension must be positive");
}

CoefficientField CoefficientField::from_entries(std::size_t dim, Truncation truncation,
                                                std::vector<Entry> entries) {
  CoefficientField field(dim, truncation);
  for (const auto& e : entries) {
    if (e.index.dim() != dim) {
      throw DomainError("entry " + e.index.to_string() + " has dimension " +
                        std::to_string(e.index.dim()) + ", expected " + std::to_string(dim));
    }
    if (!truncation.admits(e.index)) {
      throw DomainError("entry " + e.index.to_string() + " violates the " +
                        to_string(truncation.kind) + " truncation of degree " +
                        std::to_string(truncation.degree));
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return graded_lex_less(a.index, b.index); });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].index == entries[i - 1].index) {
      throw DomainError("duplicate entry " + entries[i].index.to_string());
    }
  }
  field.entries_ = std::move(entries);
  return field;
}

CoefficientField CoefficientField::from_dense(std::size_t dim, Truncation truncation,
                                              std::span<const double> values) {
  auto indices = truncation.indices(dim);
  if (indices.size() != values.size()) {
    throw DomainError("dense value count " + std::to_string(values.size()) +
                      " does not match truncation size " + std::to_string(indices.size()));
  }
  CoefficientField field(dim, truncation);
  field.entries_.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    field.entries_.push_back({std::move(indices[i]), values[i]});
  }
  return field;
}

CoefficientField CoefficientField::generate(
    std::size_t dim, Truncation truncation,
    const std::function<double(const MultiIndex&)>& generator) {
  CoefficientField field(dim, truncation);
  for (auto& n : truncation.indices(dim)) {
    const double v = generator(n);
    field.entries_.push_back({std::move(n), v});
  }
  return field;
}

CoefficientField CoefficientField::unit(const MultiIndex& n, Truncation truncation) {
  return from_entries(n.dim(), truncation, {{n, 1.0}});
}

double CoefficientField::at(const MultiIndex& n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, const MultiIndex& key) {
                               return graded_lex_less(e.index, key);
                             });
  return (it != entries_.end() && it->index == n) ? it->value : 0.0;
}

std::uint64_t CoefficientField::max_stored_order() const noexcept {
  return entries_.empty() ? 0 : entries_.back().index.order();
}

CoefficientField CoefficientField::map(
    const std::function<double(const MultiIndex&, double)>& fn) const {
  CoefficientField out(dim_, truncation_);
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, fn(e.index, e.value)});
  return out;
}

bool operator==(const CoefficientField::Entry& a, const CoefficientField::Entry& b) {
  return a.index == b.index && a.value == b.value;
}

bool operator==(const CoefficientField& a, const CoefficientField& b) {
  return a.dim_ == b.dim_ && a.truncation_ == b.truncation_ && a.entries_ == b.entries_;
}

}  // namespace laguerre
