#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "laguerre/multi_index.hpp"

namespace laguerre {

enum class TruncationKind { Box, Total };

/// Index set of a truncated expansion: n_j <= degree for every axis (Box) or
/// |n| <= degree (Total).
struct Truncation {
  TruncationKind kind = TruncationKind::Total;
  std::uint32_t degree = 0;

  bool admits(const MultiIndex& n) const noexcept;
  std::vector<MultiIndex> indices(std::size_t dim) const;
  /// Largest |n| admitted in dimension dim.
  std::uint64_t max_order(std::size_t dim) const noexcept;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

std::string to_string(TruncationKind kind);
TruncationKind parse_truncation_kind(const std::string& text);

/// Truncated coefficient sequence {a_n} of a Laguerre expansion. Entries are
/// kept in graded-lex order; absent indices read as zero. Immutable once
/// built.
class CoefficientField {
 public:
  struct Entry {
    MultiIndex index;
    double value = 0.0;
  };

  CoefficientField(std::size_t dim, Truncation truncation);

  /// Validates dimension and truncation bounds; sorts; rejects duplicates.
  static CoefficientField from_entries(std::size_t dim, Truncation truncation,
                                       std::vector<Entry> entries);
  /// One entry per admitted index, in canonical order, with the given values.
  static CoefficientField from_dense(std::size_t dim, Truncation truncation,
                                     std::span<const double> values);
  /// Entry per admitted index, value generator(n).
  static CoefficientField generate(std::size_t dim, Truncation truncation,
                                   const std::function<double(const MultiIndex&)>& generator);
  static CoefficientField unit(const MultiIndex& n, Truncation truncation);

  std::size_t dim() const noexcept { return dim_; }
  const Truncation& truncation() const noexcept { return truncation_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  double at(const MultiIndex& n) const;
  /// Largest |n| among stored entries (0 when empty).
  std::uint64_t max_stored_order() const noexcept;

  /// Same index set, value_i -> fn(index_i, value_i).
  CoefficientField map(const std::function<double(const MultiIndex&, double)>& fn) const;

  friend bool operator==(const CoefficientField&, const CoefficientField&);

 private:
  std::size_t dim_;
  Truncation truncation_;
  std::vector<Entry> entries_;
};

bool operator==(const CoefficientField::Entry& a, const CoefficientField::Entry& b);

}  // namespace laguerre
