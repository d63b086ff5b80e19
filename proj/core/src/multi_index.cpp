#include "laguerre/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "laguerre/error.hpp"

namespace laguerre {

namespace {

std::uint64_t sum_entries(const std::vector<std::uint32_t>& entries) {
  return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0});
}

}  // namespace

MultiIndex::MultiIndex(std::vector<std::uint32_t> entries)
    : entries_(std::move(entries)), order_(sum_entries(entries_)) {}

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> entries)
    : MultiIndex(std::vector<std::uint32_t>(entries)) {}

MultiIndex MultiIndex::from_signed(std::span<const long long> entries) {
  std::vector<std::uint32_t> out;
  out.reserve(entries.size());
  for (long long e : entries) {
    if (e < 0) {
      throw DomainError("multi-index entries must be nonnegative, got " + std::to_string(e));
    }
    if (e > static_cast<long long>(UINT32_MAX)) {
      throw DomainError("multi-index entry too large: " + std::to_string(e));
    }
    out.push_back(static_cast<std::uint32_t>(e));
  }
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::zeros(std::size_t dim) {
  return MultiIndex(std::vector<std::uint32_t>(dim, 0));
}

std::uint32_t MultiIndex::max_entry() const noexcept {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) noexcept {
  if (a.order() != b.order()) return a.order() < b.order();
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

MultiIndex graded_lex_next(const MultiIndex& n) {
  std::vector<std::uint32_t> t(n.entries().begin(), n.entries().end());
  const std::size_t d = t.size();
  if (d == 0) return n;
  // Lex-ascending compositions of |n| into d parts; (|n|,0,..,0) is the last.
  std::uint64_t suffix = t[d - 1];
  for (std::size_t i = d - 1; i-- > 0;) {
    if (suffix > 0) {
      ++t[i];
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), 0u);
      t[d - 1] = static_cast<std::uint32_t>(suffix - 1);
      return MultiIndex(std::move(t));
    }
    suffix += t[i];
  }
  std::fill(t.begin(), t.end(), 0u);
  t[d - 1] = static_cast<std::uint32_t>(n.order() + 1);
  return MultiIndex(std::move(t));
}

std::vector<MultiIndex> enumerate_total_degree(std::size_t dim, std::uint32_t degree) {
  if (dim == 0) throw DomainError("dimension must be positive");
  std::vector<MultiIndex> out;
  for (MultiIndex n = MultiIndex::zeros(dim); n.order() <= degree; n = graded_lex_next(n)) {
    out.push_back(n);
  }
  return out;
}

std::vector<MultiIndex> enumerate_box(std::size_t dim, std::uint32_t degree) {
  if (dim == 0) throw DomainError("dimension must be positive");
  std::vector<MultiIndex> out;
  const std::uint64_t top = static_cast<std::uint64_t>(degree) * dim;
  for (MultiIndex n = MultiIndex::zeros(dim); n.order() <= top; n = graded_lex_next(n)) {
    if (n.max_entry() <= degree) out.push_back(n);
  }
  return out;
}

double shell_size(std::size_t dim, std::uint64_t order) {
  // binom(order + dim - 1, dim - 1)
  double c = 1.0;
  for (std::size_t i = 1; i < dim; ++i) {
    c = c * static_cast<double>(order + i) / static_cast<double>(i);
  }
  return c;
}

}  // namespace laguerre
