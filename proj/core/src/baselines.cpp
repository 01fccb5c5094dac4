#include "dialsort/baselines.hpp"

#include <algorithm>
#include <new>
#include <string>
#include <vector>

namespace dialsort::baselines {

void classic_counting_sort(std::span<key_type> keys, Universe universe) {
    const std::uint64_t u = universe.size();
    std::vector<std::size_t> positions;
    std::vector<key_type> output;
    try {
        positions.assign(static_cast<std::size_t>(u), 0);
    } catch (const std::bad_alloc&) {
        throw capacity_error("classic_counting_sort: cannot allocate " + std::to_string(u) + " counters");
    }

    // count
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keys[i] >= u) {
            throw range_error(keys[i], i, u);
        }
        ++positions[keys[i]];
    }

    // exclusive prefix sum: counts become first output positions
    std::size_t running = 0;
    for (std::size_t& p : positions) {
        const std::size_t c = p;
        p = running;
        running += c;
    }

    // stable forward scatter into a separate array, then copy back
    try {
        output.resize(keys.size());
    } catch (const std::bad_alloc&) {
        throw capacity_error("classic_counting_sort: cannot allocate output of " + std::to_string(keys.size()) +
                             " keys");
    }
    for (key_type k : keys) {
        output[positions[k]++] = k;
    }
    std::copy(output.begin(), output.end(), keys.begin());
}

void stdlib_sort(std::span<key_type> keys) {
    std::sort(keys.begin(), keys.end());
}

} // namespace dialsort::baselines
