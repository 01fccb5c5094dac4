#include "dialsort/radix.hpp"

#include <new>
#include <string>
#include <vector>

#include "dialsort/errors.hpp"

namespace dialsort::radix {

void lsd_pass(std::span<const std::uint32_t> data, std::span<std::uint32_t> scratch, unsigned shift) {
    if (data.size() != scratch.size()) {
        throw size_error("lsd_pass: data has " + std::to_string(data.size()) + " keys, scratch has " +
                         std::to_string(scratch.size()));
    }
    std::array<std::size_t, DigitPlan::radix> positions{};
    for (std::uint32_t v : data) {
        ++positions[(v >> shift) & 0xFFu];
    }
    std::size_t running = 0;
    for (std::size_t& p : positions) {
        const std::size_t c = p;
        p = running;
        running += c;
    }
    std::uint32_t* out = scratch.data();
    for (std::uint32_t v : data) {
        out[positions[(v >> shift) & 0xFFu]++] = v;
    }
}

void radix_sort(std::span<std::int32_t> keys) {
    if (keys.size() < 2) {
        return;
    }
    std::vector<std::uint32_t> scratch;
    try {
        scratch.resize(keys.size());
    } catch (const std::bad_alloc&) {
        throw capacity_error("radix_sort: cannot allocate scratch for " + std::to_string(keys.size()) + " keys");
    }

    // int32_t and uint32_t may alias each other.
    std::span<std::uint32_t> data(reinterpret_cast<std::uint32_t*>(keys.data()), keys.size());
    for (std::uint32_t& v : data) {
        v = to_ordered_unsigned(static_cast<std::int32_t>(v));
    }

    // An even pass count leaves the result back in `data`.
    static_assert(DigitPlan::pass_count % 2 == 0);
    std::span<std::uint32_t> from = data;
    std::span<std::uint32_t> to = scratch;
    for (unsigned shift : DigitPlan::shifts) {
        lsd_pass(from, to, shift);
        std::swap(from, to);
    }

    for (std::uint32_t& v : data) {
        v = static_cast<std::uint32_t>(from_ordered_unsigned(v));
    }
}

} // namespace dialsort::radix
