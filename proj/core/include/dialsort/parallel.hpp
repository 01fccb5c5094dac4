#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dialsort/histogram.hpp"

namespace dialsort {

/// Contiguous, disjoint index ranges [first, second) covering [0, n), one per worker.
struct PartitionPlan {
    std::size_t worker_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
};

/// Blocks of ceil(n / worker_count) indices; trailing ranges may be empty.
PartitionPlan partition(std::size_t n, std::size_t worker_count);

/// Cell-wise sum of histograms over one universe. Order of parts does not matter.
Histogram merge_histograms(std::span<const Histogram> parts);

/// Each worker tallies its block into a private histogram; the histograms are
/// summed once all workers finish and the sum is projected into `keys`. The
/// result is identical to sort(keys, universe).
///
/// Any worker failure aborts the sort with a parallel_error listing every
/// failure; `keys` is left untouched in that case.
void parallel_sort(std::span<key_type> keys, Universe universe, std::size_t worker_count);

} // namespace dialsort
