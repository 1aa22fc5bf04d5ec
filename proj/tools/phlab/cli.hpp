#pragma once

// Command-line front end: kmu, tsb, sweep, verify, spaces.
// Exit codes: 0 all checks pass, 1 a residual check failed, 2 invalid input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace phlab::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string command;
    // kmu
    int n = 2;
    double k = 0.0;
    double mu = 0.0;
    // tsb / sweep
    int m = 3;
    double K = 0.0;
    double r = 1.0;
    double lambda_b = 1.0;
    double r_min = 0.5;
    double r_max = 2.0;
    int steps = 31;
    // shared
    std::optional<double> tolerance;
    std::uint64_t seed = 42;
    std::optional<Format> format;
    std::string out_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

// Parses argv (argv[0] is the program name), applies PHLAB_TOL / PHLAB_SEED
// when the corresponding flags are absent, runs the command and writes the
// report to `out` (or --out). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_kmu(const RunConfig& config, std::ostream& out);
int cmd_tsb(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_spaces(const RunConfig& config, std::ostream& out);

}  // namespace phlab::cli
