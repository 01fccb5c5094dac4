#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dialsort/bench/harness.hpp"

namespace dialsort::tools {

enum exit_code : int {
    exit_success = 0,
    exit_verification_failure = 1,
    exit_argument_error = 2,
};

/// Entry point of dialsort-bench. `args` excludes the program name.
/// CSV goes to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::span<const bench::Algorithm> registry);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dialsort::tools
