#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <ratio>

#include <CLI11.hpp>

#include "dialsort/crn.hpp"

namespace dialsort::tools {

namespace {

struct Options {
    std::vector<std::string> algorithms{"dialsort", "ds-parallel", "ds-radix", "classic-cs", "std"};
    std::vector<std::string> distributions{"uniform", "skewed", "sorted", "reverse"};
    std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000, 10'000'000};
    std::vector<std::uint64_t> universes{256, 1024, 65536};
    std::uint64_t seed = bench::default_seed;
    int runs = 7;
    int warmup = 3;
    std::size_t threads = 8;
    std::string out_path;
    bool verify = true;
    bool trace = false;
};

// Lane count of the demonstration network.
constexpr std::size_t trace_lanes = 16;

int dump_trace(const Options& opt, std::ostream& out) {
    bench::DistributionSpec spec;
    spec.kind = bench::parse_distribution(opt.distributions.front());
    spec.n = trace_lanes;
    spec.universe = Universe(opt.universes.front());
    spec.seed = opt.seed;
    crn::LaneBatch batch;
    for (key_type k : bench::generate(spec)) {
        batch.items.push_back({k, 1});
    }
    crn::write_trace(out, crn::run_crn(batch, trace_lanes, crn::MergeMode::multiset));
    return exit_success;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::span<const bench::Algorithm> registry) {
    Options opt;
    CLI::App app{"Bounded-universe sorting benchmark harness", "dialsort-bench"};
    app.add_option("--algo", opt.algorithms, "Algorithms to run")->delimiter(',');
    app.add_option("--dist", opt.distributions, "uniform, skewed, sorted, reverse")->delimiter(',');
    app.add_option("--n", opt.sizes, "Input sizes")->delimiter(',');
    app.add_option("--u", opt.universes, "Universe sizes; 4294967296 selects the full 32-bit range")
        ->delimiter(',');
    app.add_option("--seed", opt.seed, "Generator seed");
    app.add_option("--runs", opt.runs, "Measured runs")->check(CLI::PositiveNumber);
    app.add_option("--warmup", opt.warmup, "Discarded warmup runs")->check(CLI::NonNegativeNumber);
    app.add_option("--threads", opt.threads, "Workers for ds-parallel")->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out_path, "CSV destination (default: standard output)");
    app.add_flag("--verify,!--no-verify", opt.verify, "Check every run's output (default on)");
    app.add_flag("--trace", opt.trace, "Print a network trace for one small batch and exit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == static_cast<int>(CLI::ExitCodes::Success) ? exit_success : exit_argument_error;
    }

    try {
        if (opt.distributions.empty() || opt.universes.empty()) {
            throw argument_error("at least one distribution and one universe are required");
        }
        if (opt.trace) {
            return dump_trace(opt, out);
        }

        std::vector<bench::DistributionSpec> specs;
        for (const std::string& d : opt.distributions) {
            const bench::Distribution kind = bench::parse_distribution(d);
            for (std::uint64_t u : opt.universes) {
                for (std::size_t n : opt.sizes) {
                    specs.push_back({kind, n, Universe(u), opt.seed});
                }
            }
        }
        for (const std::string& name : opt.algorithms) {
            if (std::none_of(registry.begin(), registry.end(), [&](const auto& a) { return a.name == name; })) {
                throw argument_error("unknown algorithm '" + name + "'");
            }
        }

        bench::BenchOptions options;
        options.protocol = {opt.warmup, opt.runs};
        options.threads = opt.threads;
        options.verify = opt.verify;

        err << "# clock_ns_resolution="
            << std::chrono::duration<double, std::nano>(std::chrono::steady_clock::duration{1}).count() << '\n';

        std::vector<bench::BenchRecord> records;
        for (const bench::DistributionSpec& spec : specs) {
            std::vector<std::string> runnable;
            for (const std::string& name : opt.algorithms) {
                auto a = std::find_if(registry.begin(), registry.end(), [&](const auto& x) { return x.name == name; });
                if (bench::accepts(*a, spec)) {
                    runnable.push_back(name);
                } else {
                    err << "skipping " << name << " for u=" << spec.universe.size() << " (universe too large)\n";
                }
            }
            auto part = bench::run_benchmark(runnable, std::span(&spec, 1), options, registry);
            records.insert(records.end(), part.begin(), part.end());
        }

        if (opt.out_path.empty()) {
            bench::write_csv(records, out);
        } else {
            bench::write_csv(records, opt.out_path);
        }

        if (opt.verify) {
            bool ok = true;
            for (const auto& r : records) {
                if (!r.verified) {
                    err << "verification failed: " << r.algorithm << ' ' << bench::to_string(r.distribution)
                        << " n=" << r.n << " u=" << r.u << '\n';
                    ok = false;
                }
            }
            if (!ok) {
                return exit_verification_failure;
            }
        }
        return exit_success;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_argument_error;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const std::vector<bench::Algorithm> registry = bench::default_algorithms();
    return run_cli(args, out, err, registry);
}

} // namespace dialsort::tools
