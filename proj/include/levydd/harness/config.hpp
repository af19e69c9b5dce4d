// Flat INI-style run configuration: [model], [scale], [sim], [output]
// sections plus one [law] section per requested law. Parse errors carry the
// file name and line number.

#pragma once

#include "levydd/levy_model.hpp"
#include "levydd/scale_functions.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace levydd::harness {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LawRequest {
    std::string id;
    std::map<std::string, double> args;  // fixed argument values by name
    std::string sweep;                   // swept argument name; empty = single point
    double from = 0.0, to = 0.0;
    int points = 0;
    bool log_spaced = false;
    double allowance = 0.02;             // verification widening beyond the CI
    std::optional<double> band;          // conditioning band override
    int line = 0;                        // config line, for diagnostics

    // swept values (or the single fixed point of the principal argument)
    std::vector<double> sweep_values(const std::string& principal_arg) const;
};

struct RunConfig {
    LevyModel model = LevyModel::brownian(0.0, 1.0);
    double gamma = 0.5;
    GridSpec grid;
    double dt = 1e-3;
    std::uint64_t paths = 100000;
    std::uint64_t seed = 0;
    double band = 0.05;
    unsigned threads = 0;  // 0 = resolve from env / hardware
    bool stop_mode = false;  // simulate subcommand: run paths to alpha_d
    double sim_d = 1.0;      // drawdown threshold for decomposition / stop mode
    std::string out_dir = ".";
    std::vector<LawRequest> laws;
};

RunConfig parse_run_config(std::istream& in, const std::string& filename);
RunConfig load_run_config(const std::string& path);

} // namespace levydd::harness
