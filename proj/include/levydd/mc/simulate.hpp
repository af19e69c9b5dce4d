// Exact-in-law path simulation of the finite-activity spectrally negative
// model on a uniform grid: Gaussian increments between grid/jump times, jump
// times inserted exactly, horizon drawn Exp(gamma) up front (ExpHorizon) or
// run until the drawdown first exceeds a threshold (StopAtAlphaD).

#pragma once

#include "levydd/levy_model.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace levydd::mc {

enum class SimMode { ExpHorizon, StopAtAlphaD };

struct SimConfig {
    LevyModel model;
    double gamma = 0.5;       // horizon rate; also the LT rate of duration laws
    double dt = 1e-3;         // monitoring step
    std::uint64_t n_paths = 1000;
    std::uint64_t seed = 0;
    SimMode mode = SimMode::ExpHorizon;
    double stop_d = 0.0;      // drawdown threshold (StopAtAlphaD)
    double t_cap = 1e5;       // safety horizon for StopAtAlphaD

    void validate() const;
};

struct PathRecord {
    std::vector<double> times;   // t0 = 0, uniform grid plus jump times, ends at T
    std::vector<double> values;  // X at each time; X0 = 0
    std::vector<std::pair<double, double>> jumps;  // (time, size < 0)
};

// Deterministic given (config.seed, path_index) regardless of scheduling.
PathRecord simulate_path(const SimConfig& config, std::uint64_t path_index);

} // namespace levydd::mc
