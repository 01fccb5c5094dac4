#include "dialsort/crn.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

namespace dialsort::crn {

namespace {

// Only key equality is evaluated below; nothing in this file orders two keys.

NodeOutput merge_nodes(const NodeOutput& left, const NodeOutput& right) {
    NodeOutput out = left;
    for (const LaneItem& item : right) {
        auto it = std::find_if(out.begin(), out.end(), [&](const LaneItem& x) { return x.key == item.key; });
        if (it != out.end()) {
            it->count += item.count;
        } else {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<LaneItem> pairwise_step(std::span<const LaneItem> items) {
    std::vector<LaneItem> out;
    out.reserve(items.size());
    std::size_t i = 0;
    for (; i + 1 < items.size(); i += 2) {
        const LaneItem& a = items[i];
        const LaneItem& b = items[i + 1];
        if (a.key == b.key) {
            out.push_back({a.key, a.count + b.count});
        } else {
            out.push_back(a);
            out.push_back(b);
        }
    }
    if (i < items.size()) {
        out.push_back(items[i]);
    }
    return out;
}

Level as_singletons(std::span<const LaneItem> items) {
    Level level;
    level.reserve(items.size());
    for (const LaneItem& item : items) {
        level.push_back({item});
    }
    return level;
}

// One node per lane; lanes past the batch end are empty.
Level lane_level(std::span<const LaneItem> items, std::size_t lane_count) {
    Level level(lane_count);
    for (std::size_t i = 0; i < items.size(); ++i) {
        level[i].push_back(items[i]);
    }
    return level;
}

} // namespace

std::size_t crn_latency(std::size_t lane_count) {
    if (lane_count == 0) {
        throw argument_error("a conflict resolution network needs at least one lane");
    }
    return static_cast<std::size_t>(std::bit_width(lane_count - 1));
}

Level level_transition(const Level& level, MergeMode mode) {
    if (mode == MergeMode::pairwise) {
        return as_singletons(pairwise_step(flatten(level)));
    }
    Level next;
    next.reserve((level.size() + 1) / 2);
    std::size_t i = 0;
    for (; i + 1 < level.size(); i += 2) {
        next.push_back(merge_nodes(level[i], level[i + 1]));
    }
    if (i < level.size()) {
        next.push_back(level[i]);
    }
    return next;
}

std::vector<LaneItem> level_transition(std::span<const LaneItem> items, MergeMode mode) {
    if (mode == MergeMode::pairwise) {
        return pairwise_step(items);
    }
    return flatten(level_transition(as_singletons(items), mode));
}

std::vector<LaneItem> flatten(const Level& level) {
    std::vector<LaneItem> out;
    for (const NodeOutput& node : level) {
        out.insert(out.end(), node.begin(), node.end());
    }
    return out;
}

CrnTrace run_crn(const LaneBatch& batch, std::size_t lane_count, MergeMode mode) {
    CrnTrace trace;
    trace.lane_count = lane_count;
    trace.depth = crn_latency(lane_count);
    if (batch.items.size() > lane_count) {
        throw argument_error("batch of " + std::to_string(batch.items.size()) + " items does not fit " +
                             std::to_string(lane_count) + " lanes");
    }
    Level level = lane_level(batch.items, lane_count);
    trace.levels.reserve(trace.depth + 1);
    trace.levels.push_back(flatten(level));
    for (std::size_t l = 0; l < trace.depth; ++l) {
        level = level_transition(level, mode);
        trace.levels.push_back(flatten(level));
    }
    return trace;
}

bool conservation_check(const CrnTrace& trace) {
    std::unordered_map<key_type, count_type> reference;
    bool first = true;
    for (const auto& items : trace.levels) {
        std::unordered_map<key_type, count_type> sums;
        for (const LaneItem& item : items) {
            sums[item.key] += item.count;
        }
        if (first) {
            reference = std::move(sums);
            first = false;
        } else if (sums != reference) {
            return false;
        }
    }
    return true;
}

std::pair<Histogram, PipelineReport> pipeline_simulate(std::span<const key_type> stream, Universe universe,
                                                       std::size_t lane_count, PipelineOptions options) {
    const std::size_t depth = crn_latency(lane_count);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        if (!universe.contains(stream[i])) {
            throw range_error(stream[i], i, universe.size());
        }
    }

    const std::uint64_t n = stream.size();
    const std::uint64_t batches = (n + lane_count - 1) / lane_count;

    PipelineReport report;
    report.fill_cycles = depth;
    report.steady_batches = batches;
    report.model_bound = batches + depth;

    Histogram histogram(universe);
    std::vector<count_type> run_length(lane_count, 0);

    // Items a batch injects at cycle t: one per lane, or only completed runs
    // when lanes accumulate locally.
    auto inject = [&](std::uint64_t t) {
        Level level(lane_count);
        for (std::size_t lane = 0; lane < lane_count; ++lane) {
            const std::uint64_t idx = t * lane_count + lane;
            if (idx >= n) {
                break;
            }
            const key_type key = stream[idx];
            if (!options.local_accumulation) {
                level[lane].push_back({key, 1});
                continue;
            }
            ++run_length[lane];
            const std::uint64_t next = idx + lane_count;
            if (next >= n || stream[next] != key) {
                level[lane].push_back({key, run_length[lane]});
                run_length[lane] = 0;
            }
        }
        return level;
    };

    // stages[l] holds the batch currently at level l of the network.
    std::vector<std::optional<Level>> stages(depth + 1);
    std::uint64_t cycle = 0;
    while (cycle < batches + depth) {
        for (std::size_t l = depth; l > 0; --l) {
            stages[l] = stages[l - 1] ? std::optional<Level>(level_transition(*stages[l - 1], options.mode))
                                      : std::nullopt;
        }
        stages[0] = cycle < batches ? std::optional<Level>(inject(cycle)) : std::nullopt;
        ++cycle;
        if (stages[depth]) {
            for (const NodeOutput& node : *stages[depth]) {
                for (const LaneItem& item : node) {
                    histogram.add(item.key, item.count);
                    ++report.histogram_writes;
                }
            }
        }
    }
    report.total_cycles = cycle;
    return {std::move(histogram), report};
}

void write_trace(std::ostream& os, const CrnTrace& trace) {
    for (std::size_t l = 0; l < trace.levels.size(); ++l) {
        if (l != 0) {
            os << "--\n";
        }
        const auto& items = trace.levels[l];
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i != 0) {
                os << ' ';
            }
            os << items[i].key << ':' << items[i].count;
        }
        os << '\n';
    }
}

CrnTrace read_trace(std::istream& is) {
    CrnTrace trace;
    std::string line;
    bool expect_level = true;
    while (std::getline(is, line)) {
        if (!expect_level) {
            if (line != "--") {
                throw argument_error("trace: expected '--' separator, got '" + line + "'");
            }
            expect_level = true;
            continue;
        }
        std::vector<LaneItem> items;
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            const auto colon = token.find(':');
            if (colon == std::string::npos) {
                throw argument_error("trace: malformed item '" + token + "'");
            }
            try {
                items.push_back({static_cast<key_type>(std::stoul(token.substr(0, colon))),
                                 static_cast<count_type>(std::stoull(token.substr(colon + 1)))});
            } catch (const std::logic_error&) {
                throw argument_error("trace: malformed item '" + token + "'");
            }
        }
        trace.levels.push_back(std::move(items));
        expect_level = false;
    }
    if (trace.levels.empty() || expect_level) {
        throw argument_error("trace: missing level after separator");
    }
    trace.depth = trace.levels.size() - 1;
    return trace;
}

} // namespace dialsort::crn
