#include "dialsort/bench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "dialsort/baselines.hpp"
#include "dialsort/parallel.hpp"
#include "dialsort/radix.hpp"

namespace dialsort::bench {

RunStatistics summarize(std::span<const double> samples_ms) {
    if (samples_ms.empty()) {
        throw argument_error("cannot summarise an empty timing sample");
    }
    const double n = static_cast<double>(samples_ms.size());
    RunStatistics s;
    s.best_ms = *std::min_element(samples_ms.begin(), samples_ms.end());
    s.mean_ms = std::accumulate(samples_ms.begin(), samples_ms.end(), 0.0) / n;
    double ss = 0;
    for (double x : samples_ms) {
        ss += (x - s.mean_ms) * (x - s.mean_ms);
    }
    s.std_ms = std::sqrt(ss / n);
    s.cv_pct = s.mean_ms > 0 ? 100.0 * s.std_ms / s.mean_ms : 0.0;
    return s;
}

double BenchRecord::throughput_mkeys() const noexcept {
    return static_cast<double>(n) / stats.best_ms / 1000.0;
}

std::vector<Algorithm> default_algorithms() {
    std::vector<Algorithm> algorithms;
    algorithms.push_back({"dialsort", KeyDomain::unsigned32, true, false,
                          [](std::span<key_type> keys, Universe u, std::size_t) { sort(keys, u); }});
    algorithms.push_back({"ds-parallel", KeyDomain::unsigned32, true, true,
                          [](std::span<key_type> keys, Universe u, std::size_t threads) {
                              parallel_sort(keys, u, threads);
                          }});
    algorithms.push_back({"ds-radix", KeyDomain::signed32, false, false,
                          [](std::span<key_type> keys, Universe, std::size_t) {
                              radix::radix_sort({reinterpret_cast<std::int32_t*>(keys.data()), keys.size()});
                          }});
    algorithms.push_back({"classic-cs", KeyDomain::unsigned32, true, false,
                          [](std::span<key_type> keys, Universe u, std::size_t) {
                              baselines::classic_counting_sort(keys, u);
                          }});
    algorithms.push_back({"std", KeyDomain::unsigned32, false, false,
                          [](std::span<key_type> keys, Universe, std::size_t) { baselines::stdlib_sort(keys); }});
    return algorithms;
}

bool accepts(const Algorithm& algorithm, const DistributionSpec& spec) noexcept {
    return !algorithm.bounded_only || spec.universe.size() <= max_bounded_universe;
}

namespace {

const Algorithm& lookup(std::span<const Algorithm> registry, const std::string& name) {
    auto it = std::find_if(registry.begin(), registry.end(), [&](const Algorithm& a) { return a.name == name; });
    if (it == registry.end()) {
        throw argument_error("unknown algorithm '" + name + "'");
    }
    return *it;
}

std::vector<key_type> to_domain(std::vector<key_type> keys, KeyDomain domain) {
    if (domain == KeyDomain::signed32) {
        for (key_type& k : keys) {
            k = static_cast<key_type>(radix::from_ordered_unsigned(k));
        }
    }
    return keys;
}

std::vector<key_type> sorted_reference(std::vector<key_type> keys, KeyDomain domain) {
    if (domain == KeyDomain::signed32) {
        std::span<std::int32_t> view(reinterpret_cast<std::int32_t*>(keys.data()), keys.size());
        std::sort(view.begin(), view.end());
    } else {
        std::sort(keys.begin(), keys.end());
    }
    return keys;
}

} // namespace

std::vector<BenchRecord> run_benchmark(std::span<const std::string> algorithms,
                                       std::span<const DistributionSpec> specs, const BenchOptions& options,
                                       std::span<const Algorithm> registry) {
    if (options.protocol.measured_runs < 1 || options.protocol.warmup_runs < 0) {
        throw argument_error("timing protocol needs at least one measured run and no negative warmup");
    }
    if (options.threads == 0) {
        throw argument_error("thread count must be at least 1");
    }
    std::vector<const Algorithm*> selected;
    for (const std::string& name : algorithms) {
        selected.push_back(&lookup(registry, name));
    }
    for (const DistributionSpec& spec : specs) {
        for (const Algorithm* a : selected) {
            if (!accepts(*a, spec)) {
                throw argument_error(a->name + " needs a universe of at most " +
                                     std::to_string(max_bounded_universe) + " keys, got " +
                                     std::to_string(spec.universe.size()));
            }
        }
    }

    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    for (const DistributionSpec& spec : specs) {
        const std::vector<key_type> generated = generate(spec);
        for (const Algorithm* a : selected) {
            const std::vector<key_type> pristine = to_domain(generated, a->domain);
            std::vector<key_type> reference;
            if (options.verify) {
                reference = sorted_reference(pristine, a->domain);
            }
            const std::size_t threads = a->uses_threads ? options.threads : 1;
            std::vector<key_type> work(pristine.size());
            std::vector<double> samples;
            bool verified = options.verify;

            const int total_runs = options.protocol.warmup_runs + options.protocol.measured_runs;
            for (int run = 0; run < total_runs; ++run) {
                std::copy(pristine.begin(), pristine.end(), work.begin());
                const auto start = clock::now();
                a->run(work, spec.universe, threads);
                const auto stop = clock::now();
                if (options.verify && work != reference) {
                    verified = false;
                }
                if (run >= options.protocol.warmup_runs) {
                    samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
                }
            }

            BenchRecord r;
            r.algorithm = a->name;
            r.distribution = spec.kind;
            r.n = spec.n;
            r.u = spec.universe.size();
            r.threads = threads;
            r.stats = summarize(samples);
            r.verified = verified;
            records.push_back(std::move(r));
        }
    }
    attach_speedups(records);
    return records;
}

std::vector<BenchRecord> run_benchmark(std::span<const std::string> algorithms,
                                       std::span<const DistributionSpec> specs, const BenchOptions& options) {
    const std::vector<Algorithm> registry = default_algorithms();
    return run_benchmark(algorithms, specs, options, registry);
}

void attach_speedups(std::span<BenchRecord> records) {
    for (BenchRecord& r : records) {
        auto baseline = std::find_if(records.begin(), records.end(), [&](const BenchRecord& s) {
            return s.algorithm == "std" && s.distribution == r.distribution && s.n == r.n && s.u == r.u;
        });
        if (baseline != records.end() && r.stats.best_ms > 0) {
            r.speedup_vs_std = baseline->stats.best_ms / r.stats.best_ms;
        } else {
            r.speedup_vs_std.reset();
        }
    }
}

} // namespace dialsort::bench
