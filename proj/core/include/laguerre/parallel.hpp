#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace laguerre::parallel {

/// Worker count used by the library. 0 restores the default, which is read
/// from LAGUERRE_THREADS or falls back to std::thread::hardware_concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Calls body(b) once for each b in [0, block_count). Blocks are claimed by
/// workers in arbitrary order; callers write results into per-block slots so
/// the reduction order never depends on the worker count.
void for_each_block(std::size_t block_count, const std::function<void(std::size_t)>& body);

/// Recursive pairwise summation in index order.
double pairwise_sum(std::span<const double> values);

/// Element-wise pairwise reduction of equally sized partial vectors.
void pairwise_accumulate(std::span<std::vector<double>> partials, std::span<double> out);

}  // namespace laguerre::parallel
