#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialsort/histogram.hpp"

namespace dialsort::bench {

inline constexpr std::uint64_t default_seed = 20260321;

/// Universes above this size are rejected for algorithms that allocate one cell per key.
inline constexpr std::uint64_t max_bounded_universe = std::uint64_t{1} << 24;

enum class Distribution { uniform, skewed, sorted, reverse };

std::string_view to_string(Distribution d) noexcept;
/// Throws argument_error for unknown names.
Distribution parse_distribution(std::string_view name);

struct DistributionSpec {
    Distribution kind = Distribution::uniform;
    std::size_t n = 0;
    Universe universe{256};
    std::uint64_t seed = default_seed;

    /// A universe of 2^32 means keys span the whole 32-bit range.
    bool full_range() const noexcept { return universe.size() == Universe::max_size; }
};

/// splitmix64 generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    /// Draw from [0, bound) by fixed-point scaling. bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

/// Per-spec stream seed: the base seed mixed with the kind, n and universe.
std::uint64_t stream_seed(const DistributionSpec& spec) noexcept;

/// Inclusive upper key of the skewed heavy range, floor(0.05 * U).
std::uint64_t heavy_bound(Universe universe) noexcept;

/// Number of skewed draws taken from the heavy range, floor(0.8 * n).
std::size_t heavy_count(std::size_t n) noexcept;

/// Deterministic key sequence for `spec`.
///   uniform: n draws over [0, U)
///   skewed:  floor(0.8 n) draws over [0, floor(0.05 U)], the rest over [0, U), shuffled
///   sorted:  uniform draws, ascending
///   reverse: uniform draws, descending
std::vector<key_type> generate(const DistributionSpec& spec);

struct TimingProtocol {
    int warmup_runs = 3;
    int measured_runs = 7;
};

struct RunStatistics {
    double best_ms = 0;
    double mean_ms = 0;
    double std_ms = 0; // population standard deviation
    double cv_pct = 0;
};

/// Throws argument_error for an empty sample.
RunStatistics summarize(std::span<const double> samples_ms);

struct BenchRecord {
    std::string algorithm;
    Distribution distribution = Distribution::uniform;
    std::size_t n = 0;
    std::uint64_t u = 0;
    std::size_t threads = 1;
    RunStatistics stats;
    std::optional<double> speedup_vs_std;
    bool verified = false;

    double throughput_mkeys() const noexcept;
};

/// Keys as handed to an algorithm. Signed algorithms receive the same values
/// remapped through the order-preserving sign flip, as int32 bit patterns.
enum class KeyDomain { unsigned32, signed32 };

struct Algorithm {
    std::string name;
    KeyDomain domain = KeyDomain::unsigned32;
    /// Needs a histogram-sized allocation, so the universe must be <= max_bounded_universe.
    bool bounded_only = true;
    bool uses_threads = false;
    std::function<void(std::span<key_type> keys, Universe universe, std::size_t threads)> run;
};

/// dialsort, ds-parallel, ds-radix, classic-cs, std.
std::vector<Algorithm> default_algorithms();

/// True if `algorithm` can run on `spec`.
bool accepts(const Algorithm& algorithm, const DistributionSpec& spec) noexcept;

struct BenchOptions {
    TimingProtocol protocol;
    std::size_t threads = 8;
    bool verify = true;
};

/// Time every (spec, algorithm) pair: warmup runs discarded, measured runs
/// summarised. Input is restored from a pristine copy before every run,
/// outside the timed region. With verification on, each run's output must
/// equal the sorted input; any mismatch marks the record unverified.
///
/// Throws argument_error for unknown names or an algorithm that cannot accept a spec.
std::vector<BenchRecord> run_benchmark(std::span<const std::string> algorithms,
                                       std::span<const DistributionSpec> specs, const BenchOptions& options,
                                       std::span<const Algorithm> registry);

std::vector<BenchRecord> run_benchmark(std::span<const std::string> algorithms,
                                       std::span<const DistributionSpec> specs, const BenchOptions& options = {});

/// Fill speedup_vs_std from the `std` record sharing (distribution, n, u), if any.
void attach_speedups(std::span<BenchRecord> records);

inline constexpr std::string_view csv_header =
    "algorithm,distribution,n,u,threads,best_ms,mean_ms,std_ms,cv_pct,throughput_mkeys,speedup_vs_std,verified";

/// Header line then one row per record; speedups are recomputed from `records`.
void write_csv(std::span<const BenchRecord> records, std::ostream& os);
/// As above, to a file. Throws dialsort::error naming the path on I/O failure.
void write_csv(std::span<const BenchRecord> records, const std::string& path);

} // namespace dialsort::bench
