// Subcommand implementations behind the CLI: build scale tables, evaluate
// law sweeps, run the Monte Carlo verification, and stream per-path records.
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage or
// sample-size errors.

#pragma once

#include "levydd/harness/config.hpp"
#include "levydd/harness/report.hpp"

#include <iosfwd>
#include <optional>

namespace levydd::harness {

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::string> out_dir;
    bool negative_controls = false;  // wire in the known-bad law variants
};

int cmd_scale(RunConfig config, const RunOptions& options, std::ostream& diag);
int cmd_law(RunConfig config, const RunOptions& options, std::ostream& diag);
int cmd_exit_identity(RunConfig config, const RunOptions& options, const std::string& op,
                      double x, double b, double d, double gap, std::ostream& diag);
int cmd_verify(RunConfig config, const RunOptions& options, std::ostream& diag);
int cmd_simulate(RunConfig config, const RunOptions& options, std::ostream& diag);

// verify engine shared with tests: fills the report, returns the exit code
int run_verification(const RunConfig& config, bool negative_controls,
                     ComparisonReport& report, std::ostream& diag);

} // namespace levydd::harness
