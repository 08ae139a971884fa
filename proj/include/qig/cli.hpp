#pragma once

// Command-line front end: single-quantity computations and the verification
// suites, with JSON or CSV reports.

#include <cstdint>
#include <string>
#include <vector>

#include "qig/verify.hpp"

namespace qig {

enum class Command { compute_metric, compute_entropy, compute_split, verify };

struct CliConfig {
    Command command = Command::verify;
    std::string suite;  // verify: one of the suite names or "all"
    std::vector<int> n_values;
    int trials = -1;  // < 0 -> suite default
    std::uint64_t seed = 42;
    double step = 1e-3;
    double tol = -1.0;  // < 0 -> suite default
    std::string f_name;
    std::string g_name;
    std::string format = "json";
    std::string input_path;
    std::string output_path;  // empty -> stdout
};

// Parses argv-style arguments (without the program name). Throws
// UnknownFlag / UnknownName / BadValue / ConfigError with the offending
// token in the message.
CliConfig parse_args(const std::vector<std::string>& args);

// Executes a validated config. Returns 0 on success / all-pass, 1 when a
// verification suite fails. Throws IoError / BadValue on file problems.
int run(const CliConfig& config);

// parse + run with all errors mapped to exit code 2
int cli_main(int argc, char** argv);

}  // namespace qig
