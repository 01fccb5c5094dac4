#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dialsort/histogram.hpp"

namespace dialsort {

/// Order-isomorphism between a finite totally ordered domain and [0, U).
///
/// `encode` must be strictly order-preserving and `decode` its inverse. Either
/// side may be computed or table-driven. Both must be safe to call
/// concurrently.
template <class T>
struct DomainCodec {
    Universe universe;
    std::function<std::uint64_t(const T&)> encode;
    std::function<T(std::uint64_t)> decode;
};

/// Sort any encodable domain through a histogram over the codec's universe:
/// encode each item once, tally, then emit decode(i) for every occupied cell.
/// Costs n encode calls and at most U decode calls. Equal items come back as
/// copies of decode(i), not as the original instances.
///
/// Throws codec_error if an item encodes outside the universe.
template <class T>
void sort_domain(std::span<T> items, const DomainCodec<T>& codec) {
    Histogram histogram(codec.universe);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const std::uint64_t index = codec.encode(items[i]);
        if (!codec.universe.contains(index)) {
            throw codec_error("item at position " + std::to_string(i) + " encodes to " + std::to_string(index) +
                              ", outside universe of size " + std::to_string(codec.universe.size()));
        }
        histogram.add(static_cast<key_type>(index));
    }
    auto out = items.begin();
    const auto counts = histogram.counts();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            out = std::fill_n(out, counts[i], codec.decode(i));
        }
    }
}

/// Check the codec on `samples`: every sample must round-trip through
/// encode/decode, and encode must be strictly increasing along the samples
/// arranged by `less`. Vacuously true for no samples.
template <class T, class Less = std::less<T>>
bool validate_codec(const DomainCodec<T>& codec, std::span<const T> samples, Less less = {}) {
    std::vector<T> ordered(samples.begin(), samples.end());
    for (const T& s : ordered) {
        const std::uint64_t index = codec.encode(s);
        if (!codec.universe.contains(index) || !(codec.decode(index) == s)) {
            return false;
        }
    }
    std::sort(ordered.begin(), ordered.end(), less);
    for (std::size_t i = 1; i < ordered.size(); ++i) {
        const bool equivalent = !less(ordered[i - 1], ordered[i]);
        const std::uint64_t a = codec.encode(ordered[i - 1]);
        const std::uint64_t b = codec.encode(ordered[i]);
        if (equivalent ? a != b : a >= b) {
            return false;
        }
    }
    return true;
}

} // namespace dialsort
