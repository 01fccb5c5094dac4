#include "dialsort/bench/harness.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace dialsort::bench {

std::string_view to_string(Distribution d) noexcept {
    switch (d) {
    case Distribution::uniform: return "uniform";
    case Distribution::skewed: return "skewed";
    case Distribution::sorted: return "sorted";
    case Distribution::reverse: return "reverse";
    }
    return "unknown";
}

Distribution parse_distribution(std::string_view name) {
    for (Distribution d : {Distribution::uniform, Distribution::skewed, Distribution::sorted, Distribution::reverse}) {
        if (name == to_string(d)) {
            return d;
        }
    }
    throw argument_error("unknown distribution '" + std::string(name) + "'");
}

std::uint64_t SplitMix64::next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
}

std::uint64_t stream_seed(const DistributionSpec& spec) noexcept {
    auto mix = [](std::uint64_t x) { return SplitMix64(x).next(); };
    std::uint64_t s = mix(spec.seed);
    s = mix(s ^ (static_cast<std::uint64_t>(spec.kind) + 1));
    s = mix(s ^ spec.n);
    s = mix(s ^ spec.universe.size());
    return s;
}

std::uint64_t heavy_bound(Universe universe) noexcept {
    return universe.size() / 20;
}

std::size_t heavy_count(std::size_t n) noexcept {
    return n / 5 * 4 + (n % 5) * 4 / 5;
}

std::vector<key_type> generate(const DistributionSpec& spec) {
    if (static_cast<unsigned>(spec.kind) > static_cast<unsigned>(Distribution::reverse)) {
        throw argument_error("invalid distribution kind " + std::to_string(static_cast<int>(spec.kind)));
    }
    SplitMix64 rng(stream_seed(spec));
    const std::uint64_t u = spec.universe.size();
    std::vector<key_type> keys(spec.n);

    switch (spec.kind) {
    case Distribution::skewed: {
        const std::size_t heavy = heavy_count(spec.n);
        const std::uint64_t span = heavy_bound(spec.universe) + 1;
        for (std::size_t i = 0; i < spec.n; ++i) {
            keys[i] = static_cast<key_type>(rng.below(i < heavy ? span : u));
        }
        for (std::size_t i = spec.n; i > 1; --i) {
            std::swap(keys[i - 1], keys[rng.below(i)]);
        }
        break;
    }
    case Distribution::uniform:
    case Distribution::sorted:
    case Distribution::reverse:
        for (key_type& k : keys) {
            k = static_cast<key_type>(rng.below(u));
        }
        if (spec.kind == Distribution::sorted) {
            std::sort(keys.begin(), keys.end());
        } else if (spec.kind == Distribution::reverse) {
            std::sort(keys.begin(), keys.end(), std::greater<>{});
        }
        break;
    }
    return keys;
}

} // namespace dialsort::bench
