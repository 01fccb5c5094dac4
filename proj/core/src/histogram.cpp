#include "dialsort/histogram.hpp"

#include <algorithm>
#include <limits>
#include <new>
#include <numeric>
#include <string>
#include <utility>

namespace dialsort {

range_error::range_error(std::uint64_t key, std::size_t index, std::uint64_t universe_size)
    : error("key " + std::to_string(key) + " at index " + std::to_string(index) +
            " is outside universe [0, " + std::to_string(universe_size) + ")"),
      key_(key), index_(index), universe_size_(universe_size) {}

range_error::range_error(std::uint64_t key, std::uint64_t universe_size)
    : error("key " + std::to_string(key) + " is outside universe [0, " + std::to_string(universe_size) + ")"),
      key_(key), index_(no_index), universe_size_(universe_size) {}

namespace {

std::string join_failures(const std::vector<std::string>& failures) {
    std::string msg = std::to_string(failures.size()) + " worker(s) failed";
    for (const auto& f : failures) {
        msg += "; ";
        msg += f;
    }
    return msg;
}

std::vector<count_type> allocate_cells(std::uint64_t size) {
    try {
        return std::vector<count_type>(static_cast<std::size_t>(size), 0);
    } catch (const std::bad_alloc&) {
        throw capacity_error("cannot allocate histogram of " + std::to_string(size) + " cells");
    } catch (const std::length_error&) {
        throw capacity_error("histogram of " + std::to_string(size) + " cells exceeds addressable memory");
    }
}

} // namespace

parallel_error::parallel_error(std::vector<std::string> failures)
    : error(join_failures(failures)), failures_(std::move(failures)) {}

Universe::Universe(std::uint64_t size) : size_(size) {
    if (size == 0) {
        throw argument_error("universe must contain at least one key");
    }
    if (size > max_size) {
        throw capacity_error("universe size " + std::to_string(size) + " exceeds ceiling of 2^32 cells");
    }
}

Histogram::Histogram(Universe universe) : universe_(universe), counts_(allocate_cells(universe.size())) {}

Histogram::Histogram(Universe universe, std::vector<count_type> counts, count_type total)
    : universe_(universe), counts_(std::move(counts)), total_(total) {}

Histogram Histogram::from_counts(Universe universe, std::vector<count_type> counts) {
    if (counts.size() != universe.size()) {
        throw size_error("count vector has " + std::to_string(counts.size()) +
                         " cells, universe has " + std::to_string(universe.size()));
    }
    count_type total = 0;
    for (count_type c : counts) {
        if (c > std::numeric_limits<count_type>::max() - total) {
            throw overflow_error("histogram total exceeds 64 bits");
        }
        total += c;
    }
    return Histogram(universe, std::move(counts), total);
}

void Histogram::check_key(std::uint64_t key) const {
    if (!universe_.contains(key)) {
        throw range_error(key, universe_.size());
    }
}

void Histogram::ingest(std::span<const key_type> keys) {
    // Every cell is bounded by the total, so guarding the total guards each cell.
    if (keys.size() > std::numeric_limits<count_type>::max() - total_) {
        throw overflow_error("ingesting " + std::to_string(keys.size()) + " keys overflows the histogram total");
    }
    const std::uint64_t u = universe_.size();
    count_type* cells = counts_.data();
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const key_type k = keys[i];
        if (k >= u) [[unlikely]] {
            for (std::size_t j = 0; j < i; ++j) {
                --cells[keys[j]];
            }
            throw range_error(k, i, u);
        }
        ++cells[k];
    }
    total_ += keys.size();
}

void Histogram::add(key_type key, count_type count) {
    check_key(key);
    if (count > std::numeric_limits<count_type>::max() - total_) {
        throw overflow_error("adding " + std::to_string(count) + " to key " + std::to_string(key) +
                             " overflows the histogram total");
    }
    counts_[key] += count;
    total_ += count;
}

void Histogram::merge(const Histogram& other) {
    if (other.universe_ != universe_) {
        throw argument_error("cannot merge histograms over universes of size " +
                             std::to_string(universe_.size()) + " and " + std::to_string(other.universe_.size()));
    }
    if (other.total_ > std::numeric_limits<count_type>::max() - total_) {
        throw overflow_error("merged histogram total exceeds 64 bits");
    }
    std::transform(counts_.begin(), counts_.end(), other.counts_.begin(), counts_.begin(), std::plus<>{});
    total_ += other.total_;
}

void Histogram::project_in_place(std::span<key_type> buffer) const {
    if (buffer.size() != total_) {
        throw size_error("projection buffer holds " + std::to_string(buffer.size()) +
                         " keys, histogram total is " + std::to_string(total_));
    }
    key_type* out = buffer.data();
    const std::size_t cells = counts_.size();
    for (std::size_t k = 0; k < cells; ++k) {
        const count_type c = counts_[k];
        if (c != 0) {
            out = std::fill_n(out, c, static_cast<key_type>(k));
        }
    }
}

count_type Histogram::frequency(std::uint64_t key) const {
    check_key(key);
    return counts_[key];
}

bool Histogram::presence(std::uint64_t key) const {
    check_key(key);
    return counts_[key] != 0;
}

count_type Histogram::range_count(std::uint64_t first, std::uint64_t last) const {
    if (first > last || !universe_.contains(last)) {
        throw argument_error("invalid range [" + std::to_string(first) + ", " + std::to_string(last) +
                             "] for universe of size " + std::to_string(universe_.size()));
    }
    return std::accumulate(counts_.begin() + static_cast<std::ptrdiff_t>(first),
                           counts_.begin() + static_cast<std::ptrdiff_t>(last) + 1, count_type{0});
}

SupportSet Histogram::support_set() const {
    SupportSet out;
    out.universe_size = universe_.size();
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (counts_[k] != 0) {
            out.members.push_back(static_cast<key_type>(k));
        }
    }
    return out;
}

bool Histogram::verify_total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), count_type{0}) == total_;
}

void sort(std::span<key_type> keys, Universe universe) {
    Histogram h(universe);
    h.ingest(keys);
    h.project_in_place(keys);
}

} // namespace dialsort
