#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace laguerre {

/// A d-tuple n of nonnegative integers with order |n| = n_1 + ... + n_d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> entries);
  MultiIndex(std::initializer_list<std::uint32_t> entries);

  /// Throws DomainError if any entry is negative.
  static MultiIndex from_signed(std::span<const long long> entries);
  static MultiIndex zeros(std::size_t dim);

  std::size_t dim() const noexcept { return entries_.size(); }
  std::uint64_t order() const noexcept { return order_; }
  std::uint32_t operator[](std::size_t axis) const { return entries_[axis]; }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::uint32_t max_entry() const noexcept;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> entries_;
  std::uint64_t order_ = 0;
};

/// Graded lexicographic order: by |n| first, ties broken lexicographically
/// on (n_1, ..., n_d). This is the canonical storage and file order.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) noexcept;

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
    return graded_lex_less(a, b);
  }
};

/// Successor of n in graded-lex order among indices of the same dimension.
MultiIndex graded_lex_next(const MultiIndex& n);

/// All n with |n| <= degree, in graded-lex order.
std::vector<MultiIndex> enumerate_total_degree(std::size_t dim, std::uint32_t degree);

/// All n with max_j n_j <= degree, in graded-lex order.
std::vector<MultiIndex> enumerate_box(std::size_t dim, std::uint32_t degree);

/// Number of n in N_0^dim with |n| == order.
double shell_size(std::size_t dim, std::uint64_t order);

}  // namespace laguerre
