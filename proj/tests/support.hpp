#pragma once

// Independent oracles and random instance generators shared by the test
// binaries. Nothing here calls into the library's sorting paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dialsort/histogram.hpp"

namespace dialsort::testing {

/// Plain tally loop.
inline std::vector<count_type> tally(const std::vector<key_type>& keys, std::uint64_t universe_size) {
    std::vector<count_type> counts(universe_size, 0);
    for (key_type k : keys) {
        counts.at(k) += 1;
    }
    return counts;
}

inline std::vector<key_type> std_sorted(std::vector<key_type> keys) {
    std::sort(keys.begin(), keys.end());
    return keys;
}

template <class Item>
std::map<key_type, count_type> per_key_sums(const std::vector<Item>& items) {
    std::map<key_type, count_type> sums;
    for (const auto& it : items) {
        sums[it.key] += it.count;
    }
    return sums;
}

/// Random instance: length in [0, max_n], keys in [0, u), drawn from one of
/// four shapes (uniform, clustered at the low end, ascending, descending).
struct InstanceGen {
    std::mt19937_64 rng;

    explicit InstanceGen(std::uint64_t seed) : rng(seed) {}

    std::size_t length(std::size_t max_n) {
        return std::uniform_int_distribution<std::size_t>(0, max_n)(rng);
    }

    std::vector<key_type> keys(std::size_t n, std::uint64_t u, int shape) {
        std::uniform_int_distribution<std::uint64_t> all(0, u - 1);
        std::uniform_int_distribution<std::uint64_t> low(0, u / 20);
        std::vector<key_type> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool heavy = shape == 1 && std::bernoulli_distribution(0.8)(rng);
            out[i] = static_cast<key_type>(heavy ? low(rng) : all(rng));
        }
        if (shape == 2) {
            std::sort(out.begin(), out.end());
        } else if (shape == 3) {
            std::sort(out.rbegin(), out.rend());
        }
        return out;
    }
};

} // namespace dialsort::testing
