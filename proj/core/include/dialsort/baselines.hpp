#pragma once

#include <span>

#include "dialsort/histogram.hpp"

namespace dialsort::baselines {

/// Textbook counting sort: count, exclusive prefix sum over the universe,
/// stable scatter into a freshly allocated n-key array, copy back.
void classic_counting_sort(std::span<key_type> keys, Universe universe);

/// std::sort.
void stdlib_sort(std::span<key_type> keys);

} // namespace dialsort::baselines
