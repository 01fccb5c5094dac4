#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dialsort/crn.hpp"

namespace dialsort::tools {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<bench::Algorithm> registry_with_broken() {
    auto registry = bench::default_algorithms();
    registry.push_back({"broken", bench::KeyDomain::unsigned32, true, false,
                        [](std::span<key_type> keys, Universe, std::size_t) {
                            if (keys.size() > 1) std::swap(keys.front(), keys.back());
                        }});
    return registry;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

const std::vector<std::string> kSmall{"--n", "2000", "--u", "64", "--runs", "1", "--warmup", "0"};

std::vector<std::string> small(std::vector<std::string> extra) {
    extra.insert(extra.begin(), kSmall.begin(), kSmall.end());
    return extra;
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).code, exit_success);
}

TEST(Cli, ArgumentErrorsExitTwo) {
    EXPECT_EQ(run({"--bogus"}).code, exit_argument_error);
    EXPECT_EQ(run(small({"--algo", "quicksortish"})).code, exit_argument_error);
    EXPECT_EQ(run(small({"--dist", "normal"})).code, exit_argument_error);
    EXPECT_EQ(run(small({"--runs", "0"})).code, exit_argument_error);
    EXPECT_EQ(run(small({"--threads", "0"})).code, exit_argument_error);
    EXPECT_EQ(run({"--u", "0", "--n", "10"}).code, exit_argument_error);
    EXPECT_EQ(run({"--n", "ten"}).code, exit_argument_error);
}

TEST(Cli, DefaultAlgorithmsAndDistributions) {
    const Result r = run(kSmall);
    ASSERT_EQ(r.code, exit_success) << r.err;
    EXPECT_EQ(first_line(r.out), bench::csv_header);
    std::istringstream is(r.out);
    int rows = -1;
    for (std::string line; std::getline(is, line);) ++rows;
    EXPECT_EQ(rows, 4 * 5);
    EXPECT_EQ(r.out.find(",false"), std::string::npos);
}

TEST(Cli, ListsAreCommaSeparated) {
    const Result r = run({"--algo", "dialsort,std", "--dist", "uniform,reverse", "--n", "100,200", "--u", "16,32",
                          "--runs", "1", "--warmup", "0", "--threads", "2", "--seed", "7"});
    ASSERT_EQ(r.code, exit_success) << r.err;
    std::istringstream is(r.out);
    int rows = -1;
    for (std::string line; std::getline(is, line);) ++rows;
    EXPECT_EQ(rows, 2 * 2 * 2 * 2);
}

TEST(Cli, VerificationFailureExitsOneAfterWritingCsv) {
    std::ostringstream out, err;
    const auto registry = registry_with_broken();
    const int code = run_cli(small({"--algo", "broken,dialsort"}), out, err, registry);
    EXPECT_EQ(code, exit_verification_failure);
    EXPECT_NE(out.str().find("broken,uniform,2000,64,1,"), std::string::npos);
    EXPECT_NE(out.str().find(",false\n"), std::string::npos);
    EXPECT_NE(err.str().find("verification failed: broken"), std::string::npos);
}

TEST(Cli, NoVerifySkipsChecks) {
    std::ostringstream out, err;
    const auto registry = registry_with_broken();
    EXPECT_EQ(run_cli(small({"--algo", "broken", "--no-verify"}), out, err, registry), exit_success);
}

TEST(Cli, OutWritesFile) {
    const std::string path = ::testing::TempDir() + "dialsort_cli_out.csv";
    const Result r = run(small({"--algo", "dialsort", "--dist", "sorted", "--out", path}));
    ASSERT_EQ(r.code, exit_success) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, bench::csv_header);
    std::remove(path.c_str());
}

TEST(Cli, FullRangeRunsUnboundedAlgorithmsOnly) {
    const Result r = run({"--u", "4294967296", "--n", "1000", "--dist", "uniform", "--runs", "1", "--warmup", "0"});
    ASSERT_EQ(r.code, exit_success) << r.err;
    EXPECT_NE(r.out.find("ds-radix,uniform,1000,4294967296"), std::string::npos);
    EXPECT_NE(r.out.find("std,uniform,1000,4294967296"), std::string::npos);
    EXPECT_EQ(r.out.find("classic-cs"), std::string::npos);
    EXPECT_NE(r.err.find("skipping dialsort"), std::string::npos);
}

TEST(Cli, TraceDumpsSixteenLaneNetwork) {
    const Result r = run({"--trace", "--dist", "skewed", "--u", "1024"});
    ASSERT_EQ(r.code, exit_success) << r.err;
    std::istringstream is(r.out);
    const crn::CrnTrace trace = crn::read_trace(is);
    EXPECT_EQ(trace.depth, 4u);
    EXPECT_EQ(trace.levels.front().size(), 16u);
    EXPECT_TRUE(crn::conservation_check(trace));
}

} // namespace
} // namespace dialsort::tools
