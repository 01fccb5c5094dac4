#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dialsort/errors.hpp"

namespace dialsort {

using key_type = std::uint32_t;
using count_type = std::uint64_t;

/// Bounded key domain [0, size). Keys are used directly as histogram addresses.
class Universe {
public:
    static constexpr std::uint64_t max_size = std::uint64_t{1} << 32;

    /// Throws argument_error for size 0 and capacity_error above max_size.
    explicit Universe(std::uint64_t size);

    std::uint64_t size() const noexcept { return size_; }
    bool contains(std::uint64_t key) const noexcept { return key < size_; }

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    std::uint64_t size_;
};

/// Occupied keys of a histogram, strictly ascending.
struct SupportSet {
    std::vector<key_type> members;
    std::uint64_t universe_size = 0;

    /// True iff every key of the universe is occupied, i.e. the identity
    /// embedding of the support set onto [0, U) is onto.
    bool is_isomorphism() const noexcept { return members.size() == universe_size; }
};

/// Per-key multiplicities over a universe. This is the ordered state itself;
/// a linear sorted array is only ever a projection of it.
class Histogram {
public:
    /// Zero-initialised histogram. Allocation failure surfaces as capacity_error.
    explicit Histogram(Universe universe);

    /// Adopts an existing count vector. Its length must equal the universe size.
    static Histogram from_counts(Universe universe, std::vector<count_type> counts);

    const Universe& universe() const noexcept { return universe_; }
    std::span<const count_type> counts() const noexcept { return counts_; }
    count_type total() const noexcept { return total_; }

    /// Tally each key into its own cell. Keys are addresses; no two keys are
    /// ever ordered against each other. On a range error nothing is applied.
    void ingest(std::span<const key_type> keys);

    /// Add `count` occurrences of `key`.
    void add(key_type key, count_type count = 1);

    /// Cell-wise addition of another histogram over the same universe.
    void merge(const Histogram& other);

    /// Overwrite `buffer` with key k repeated counts[k] times, k ascending.
    /// Requires buffer.size() == total().
    void project_in_place(std::span<key_type> buffer) const;

    count_type frequency(std::uint64_t key) const;
    bool presence(std::uint64_t key) const;
    /// Sum of counts over the closed interval [first, last].
    count_type range_count(std::uint64_t first, std::uint64_t last) const;
    SupportSet support_set() const;

    /// Re-sum every cell and compare against the cached total.
    bool verify_total() const noexcept;

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    Histogram(Universe universe, std::vector<count_type> counts, count_type total);

    void check_key(std::uint64_t key) const;

    Universe universe_;
    std::vector<count_type> counts_;
    count_type total_ = 0;
};

/// Sequential histogram sort: ingest, then project back into `keys`.
/// Two passes over the data plus one sweep over the universe.
void sort(std::span<key_type> keys, Universe universe);

} // namespace dialsort
