#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace dialsort::radix {

/// LSD digit decomposition: four 8-bit digits cover a 32-bit key.
struct DigitPlan {
    static constexpr std::size_t pass_count = 4;
    static constexpr std::size_t radix = 256;
    static constexpr std::array<unsigned, pass_count> shifts{0, 8, 16, 24};
};

/// Order-preserving bijection from signed to unsigned 32-bit: flips the sign bit.
constexpr std::uint32_t to_ordered_unsigned(std::int32_t x) noexcept {
    return static_cast<std::uint32_t>(x) ^ 0x8000'0000u;
}

constexpr std::int32_t from_ordered_unsigned(std::uint32_t u) noexcept {
    return static_cast<std::int32_t>(u ^ 0x8000'0000u);
}

/// Stable scatter of `data` into `scratch` by the byte at `shift`.
/// Throws size_error if the spans differ in length.
void lsd_pass(std::span<const std::uint32_t> data, std::span<std::uint32_t> scratch, unsigned shift);

/// Sort signed 32-bit keys over the full range with four byte passes and no
/// key-to-key comparisons. Allocates one scratch buffer of keys.size() keys.
void radix_sort(std::span<std::int32_t> keys);

} // namespace dialsort::radix
