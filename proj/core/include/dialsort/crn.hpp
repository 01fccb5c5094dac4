#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "dialsort/histogram.hpp"

// Cycle-level model of the conflict resolution network: a reduction tree that
// folds same-cycle contributions of equal keys into single additive writes,
// using equality tests only.

namespace dialsort::crn {

/// A (key, count) pair carried by one lane. count >= 1.
struct LaneItem {
    key_type key = 0;
    count_type count = 1;

    friend bool operator==(const LaneItem&, const LaneItem&) = default;
};

/// Items entering the network in one cycle, in lane order.
struct LaneBatch {
    std::vector<LaneItem> items;
    std::uint64_t cycle_index = 0;
};

enum class MergeMode {
    /// Adjacent items are paired level by level; equal pairs fuse, distinct pairs pass through.
    pairwise,
    /// Each tree node merges the item sets of its two children by key, so the
    /// root holds every key at most once.
    multiset,
};

/// Output of one tree node: the items it hands to the next level.
using NodeOutput = std::vector<LaneItem>;
/// One network level as a row of node outputs.
using Level = std::vector<NodeOutput>;

/// Per-level item lists; levels.front() is the input, levels.back() the output.
struct CrnTrace {
    std::vector<std::vector<LaneItem>> levels;
    std::size_t lane_count = 0;
    std::size_t depth = 0;
};

struct PipelineReport {
    std::uint64_t total_cycles = 0;
    std::uint64_t fill_cycles = 0;
    std::uint64_t steady_batches = 0;
    std::uint64_t model_bound = 0;
    /// Items that reached histogram memory. Lower than n when the network fused writes.
    std::uint64_t histogram_writes = 0;
};

struct PipelineOptions {
    MergeMode mode = MergeMode::multiset;
    /// Let each lane collapse runs of equal consecutive keys before they enter the network.
    bool local_accumulation = false;
};

/// ceil(log2(lane_count)); 0 for a single lane. Throws argument_error for 0 lanes.
std::size_t crn_latency(std::size_t lane_count);

/// Advance a structured level by one step of the tree.
Level level_transition(const Level& level, MergeMode mode);

/// One step over a flat list of lane items, each item its own node.
std::vector<LaneItem> level_transition(std::span<const LaneItem> items, MergeMode mode);

/// Concatenate node outputs in order.
std::vector<LaneItem> flatten(const Level& level);

/// Push one batch through all crn_latency(lane_count) levels, recording each.
/// Throws argument_error if the batch is wider than the network.
CrnTrace run_crn(const LaneBatch& batch, std::size_t lane_count, MergeMode mode = MergeMode::multiset);

/// True iff every key carries the same total count at every level of the trace.
bool conservation_check(const CrnTrace& trace);

/// Cut `stream` into ceil(n/k) lane batches, drive them through a pipelined
/// network one advance per cycle, and apply each output item to a histogram.
std::pair<Histogram, PipelineReport> pipeline_simulate(std::span<const key_type> stream, Universe universe,
                                                       std::size_t lane_count, PipelineOptions options = {});

/// Text dump: one level per line as space-separated `key:count`, levels separated by `--`.
void write_trace(std::ostream& os, const CrnTrace& trace);
/// Inverse of write_trace. lane_count is not part of the format and is left 0.
CrnTrace read_trace(std::istream& is);

} // namespace dialsort::crn
