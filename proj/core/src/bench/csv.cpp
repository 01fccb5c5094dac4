#include "dialsort/bench/harness.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

namespace dialsort::bench {

namespace {

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

void write_csv(std::span<const BenchRecord> records, std::ostream& os) {
    std::vector<BenchRecord> rows(records.begin(), records.end());
    attach_speedups(rows);
    os << csv_header << '\n';
    for (const BenchRecord& r : rows) {
        os << r.algorithm << ',' << to_string(r.distribution) << ',' << r.n << ',' << r.u << ',' << r.threads << ','
           << fixed3(r.stats.best_ms) << ',' << fixed3(r.stats.mean_ms) << ',' << fixed3(r.stats.std_ms) << ','
           << fixed3(r.stats.cv_pct) << ',' << fixed3(r.throughput_mkeys()) << ','
           << (r.speedup_vs_std ? fixed3(*r.speedup_vs_std) : std::string{}) << ','
           << (r.verified ? "true" : "false") << '\n';
    }
}

void write_csv(std::span<const BenchRecord> records, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw error("cannot open '" + path + "' for writing");
    }
    write_csv(records, out);
    out.flush();
    if (!out) {
        throw error("failed writing CSV to '" + path + "'");
    }
}

} // namespace dialsort::bench
