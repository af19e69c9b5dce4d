#include "levydd/mc/simulate.hpp"

#include "levydd/mc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace levydd::mc {

void SimConfig::validate() const {
    model.validate();
    if (!(gamma > 0.0))
        throw std::invalid_argument("SimConfig: gamma must be > 0");
    if (!(dt > 0.0) || dt > 1e-2)
        throw std::invalid_argument("SimConfig: need 0 < dt <= 1e-2");
    if (n_paths < 1)
        throw std::invalid_argument("SimConfig: n_paths must be >= 1");
    if (mode == SimMode::StopAtAlphaD && !(stop_d > 0.0))
        throw std::invalid_argument("SimConfig: stop_d must be > 0 in StopAtAlphaD mode");
}

namespace {

PathRecord simulate_exp_horizon(const SimConfig& cfg, PathRng& rng) {
    const double horizon = rng.exponential(1.0 / cfg.gamma);

    // jump times and sizes, drawn interleaved in arrival order
    std::vector<std::pair<double, double>> jumps;
    if (cfg.model.jump_rate > 0.0) {
        double t = rng.exponential(1.0 / cfg.model.jump_rate);
        while (t < horizon) {
            jumps.emplace_back(t, -rng.exponential(cfg.model.jump_mean));
            t += rng.exponential(1.0 / cfg.model.jump_rate);
        }
    }

    PathRecord path;
    const std::size_t n_grid = std::size_t(horizon / cfg.dt);
    path.times.reserve(n_grid + jumps.size() + 2);
    path.values.reserve(n_grid + jumps.size() + 2);
    path.jumps = jumps;

    path.times.push_back(0.0);
    path.values.push_back(0.0);

    const double mu = cfg.model.mu, sigma = cfg.model.sigma;
    double t_cur = 0.0, x = 0.0;
    std::size_t grid_i = 1, jump_i = 0;
    for (;;) {
        const double t_grid = double(grid_i) * cfg.dt;
        const bool jump_next = jump_i < jumps.size() && jumps[jump_i].first < std::min(t_grid, horizon);
        double t_next;
        bool is_jump = false, is_end = false;
        if (jump_next) {
            t_next = jumps[jump_i].first;
            is_jump = true;
        } else if (t_grid < horizon) {
            t_next = t_grid;
            ++grid_i;
        } else {
            t_next = horizon;
            is_end = true;
        }
        const double h = t_next - t_cur;
        if (h > 0.0)
            x += mu * h + sigma * std::sqrt(h) * rng.normal();
        if (is_jump) {
            x += jumps[jump_i].second;
            ++jump_i;
        }
        path.times.push_back(t_next);
        path.values.push_back(x);
        t_cur = t_next;
        if (is_end)
            break;
    }
    return path;
}

PathRecord simulate_until_drawdown(const SimConfig& cfg, PathRng& rng) {
    PathRecord path;
    path.times.push_back(0.0);
    path.values.push_back(0.0);

    const double mu = cfg.model.mu, sigma = cfg.model.sigma;
    const bool with_jumps = cfg.model.jump_rate > 0.0;
    double next_jump = with_jumps ? rng.exponential(1.0 / cfg.model.jump_rate) : 0.0;

    double t_cur = 0.0, x = 0.0, run_max = 0.0;
    std::size_t grid_i = 1;
    while (t_cur < cfg.t_cap) {
        const double t_grid = double(grid_i) * cfg.dt;
        double t_next;
        bool is_jump = false;
        if (with_jumps && next_jump < t_grid) {
            t_next = next_jump;
            is_jump = true;
        } else {
            t_next = t_grid;
            ++grid_i;
        }
        const double h = t_next - t_cur;
        x += mu * h + sigma * std::sqrt(h) * rng.normal();
        if (is_jump) {
            const double size = -rng.exponential(cfg.model.jump_mean);
            x += size;
            path.jumps.emplace_back(t_next, size);
            next_jump += rng.exponential(1.0 / cfg.model.jump_rate);
        }
        path.times.push_back(t_next);
        path.values.push_back(x);
        t_cur = t_next;
        run_max = std::max(run_max, x);
        if (run_max - x > cfg.stop_d)
            return path;
    }
    throw std::runtime_error("simulate_path: drawdown threshold not reached before t_cap");
}

} // namespace

PathRecord simulate_path(const SimConfig& config, std::uint64_t path_index) {
    config.validate();
    PathRng rng(config.seed, path_index);
    return config.mode == SimMode::ExpHorizon ? simulate_exp_horizon(config, rng)
                                              : simulate_until_drawdown(config, rng);
}

} // namespace levydd::mc
