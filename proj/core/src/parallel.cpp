#include "dialsort/parallel.hpp"

#include <exception>
#include <optional>
#include <string>
#include <thread>

namespace dialsort {

PartitionPlan partition(std::size_t n, std::size_t worker_count) {
    if (worker_count == 0) {
        throw argument_error("partition needs at least one worker");
    }
    const std::size_t block = n / worker_count + (n % worker_count != 0 ? 1 : 0);
    PartitionPlan plan;
    plan.worker_count = worker_count;
    plan.ranges.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
        const std::size_t first = std::min(n, w * block);
        const std::size_t last = std::min(n, first + block);
        plan.ranges.emplace_back(first, last);
    }
    return plan;
}

Histogram merge_histograms(std::span<const Histogram> parts) {
    if (parts.empty()) {
        throw argument_error("merge_histograms needs at least one part");
    }
    Histogram merged = parts.front();
    for (const Histogram& part : parts.subspan(1)) {
        merged.merge(part);
    }
    return merged;
}

void parallel_sort(std::span<key_type> keys, Universe universe, std::size_t worker_count) {
    if (worker_count == 0) {
        throw argument_error("parallel_sort needs at least one worker");
    }
    if (worker_count == 1) {
        sort(keys, universe);
        return;
    }

    const PartitionPlan plan = partition(keys.size(), worker_count);
    std::vector<std::optional<Histogram>> locals(worker_count);
    std::vector<std::string> failures(worker_count);

    auto work = [&](std::size_t w) {
        const auto [first, last] = plan.ranges[w];
        try {
            Histogram local(universe);
            try {
                local.ingest(keys.subspan(first, last - first));
            } catch (const range_error& e) {
                throw range_error(e.key(), first + e.index(), e.universe_size());
            }
            locals[w].emplace(std::move(local));
        } catch (const std::exception& e) {
            failures[w] = "worker " + std::to_string(w) + ": " + e.what();
        } catch (...) {
            failures[w] = "worker " + std::to_string(w) + ": unknown failure";
        }
    };

    {
        std::vector<std::jthread> workers;
        workers.reserve(worker_count - 1);
        for (std::size_t w = 1; w < worker_count; ++w) {
            workers.emplace_back(work, w);
        }
        work(0);
    }

    std::vector<std::string> failed;
    for (auto& f : failures) {
        if (!f.empty()) {
            failed.push_back(std::move(f));
        }
    }
    if (!failed.empty()) {
        throw parallel_error(std::move(failed));
    }

    Histogram merged = std::move(*locals[0]);
    for (std::size_t w = 1; w < worker_count; ++w) {
        merged.merge(*locals[w]);
    }
    merged.project_in_place(keys);
}

} // namespace dialsort
