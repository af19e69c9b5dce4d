#include "levydd/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace levydd::harness {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
    throw ConfigError(file + ":" + std::to_string(line) + ": " + msg);
}

double parse_num(const std::string& file, int line, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size())
            fail(file, line, "trailing characters in number '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        fail(file, line, "expected a number, got '" + v + "'");
    }
}

} // namespace

std::vector<double> LawRequest::sweep_values(const std::string& principal_arg) const {
    if (sweep.empty()) {
        const auto it = args.find(principal_arg);
        return {it == args.end() ? std::nan("") : it->second};
    }
    std::vector<double> vals;
    vals.reserve(std::size_t(points));
    if (points == 1)
        return {from};
    for (int i = 0; i < points; ++i) {
        const double t = double(i) / double(points - 1);
        vals.push_back(log_spaced ? from * std::exp(t * std::log(to / from))
                                  : from + t * (to - from));
    }
    return vals;
}

RunConfig parse_run_config(std::istream& in, const std::string& filename) {
    RunConfig cfg;
    std::string section;
    std::string line;
    int lineno = 0;
    std::string family = "brownian_drift";
    bool model_seen = false;

    auto current_law = [&cfg]() -> LawRequest& { return cfg.laws.back(); };

    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos)
            line = line.substr(0, comment);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                fail(filename, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section == "law") {
                cfg.laws.emplace_back();
                cfg.laws.back().line = lineno;
            } else if (section != "model" && section != "scale" && section != "sim" &&
                       section != "output") {
                fail(filename, lineno, "unknown section [" + section + "]");
            }
            if (section == "model")
                model_seen = true;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(filename, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            fail(filename, lineno, "expected 'key = value'");

        if (section == "model") {
            if (key == "family")
                family = val;
            else if (key == "mu")
                cfg.model.mu = parse_num(filename, lineno, val);
            else if (key == "sigma")
                cfg.model.sigma = parse_num(filename, lineno, val);
            else if (key == "jump_rate")
                cfg.model.jump_rate = parse_num(filename, lineno, val);
            else if (key == "jump_mean")
                cfg.model.jump_mean = parse_num(filename, lineno, val);
            else
                fail(filename, lineno, "unknown key '" + key + "' in [model]");
        } else if (section == "scale") {
            if (key == "gamma")
                cfg.gamma = parse_num(filename, lineno, val);
            else if (key == "x_min")
                cfg.grid.x_min = parse_num(filename, lineno, val);
            else if (key == "x_max")
                cfg.grid.x_max = parse_num(filename, lineno, val);
            else if (key == "points")
                cfg.grid.points = std::size_t(parse_num(filename, lineno, val));
            else
                fail(filename, lineno, "unknown key '" + key + "' in [scale]");
        } else if (section == "sim") {
            if (key == "dt")
                cfg.dt = parse_num(filename, lineno, val);
            else if (key == "paths")
                cfg.paths = std::uint64_t(parse_num(filename, lineno, val));
            else if (key == "seed")
                cfg.seed = std::uint64_t(parse_num(filename, lineno, val));
            else if (key == "band")
                cfg.band = parse_num(filename, lineno, val);
            else if (key == "threads")
                cfg.threads = unsigned(parse_num(filename, lineno, val));
            else if (key == "mode") {
                if (val == "exp_horizon")
                    cfg.stop_mode = false;
                else if (val == "stop_at_alpha_d")
                    cfg.stop_mode = true;
                else
                    fail(filename, lineno, "mode must be 'exp_horizon' or 'stop_at_alpha_d'");
            } else if (key == "d")
                cfg.sim_d = parse_num(filename, lineno, val);
            else
                fail(filename, lineno, "unknown key '" + key + "' in [sim]");
        } else if (section == "output") {
            if (key == "dir")
                cfg.out_dir = val;
            else
                fail(filename, lineno, "unknown key '" + key + "' in [output]");
        } else if (section == "law") {
            LawRequest& law = current_law();
            if (key == "id")
                law.id = val;
            else if (key == "sweep")
                law.sweep = val;
            else if (key == "from")
                law.from = parse_num(filename, lineno, val);
            else if (key == "to")
                law.to = parse_num(filename, lineno, val);
            else if (key == "points")
                law.points = int(parse_num(filename, lineno, val));
            else if (key == "spacing") {
                if (val == "log")
                    law.log_spaced = true;
                else if (val == "linear")
                    law.log_spaced = false;
                else
                    fail(filename, lineno, "spacing must be 'log' or 'linear'");
            } else if (key == "allowance")
                law.allowance = parse_num(filename, lineno, val);
            else if (key == "band")
                law.band = parse_num(filename, lineno, val);
            else if (key.size() <= 3)  // single-letter law arguments: a, b, d, u, x, m, gap
                law.args[key] = parse_num(filename, lineno, val);
            else
                fail(filename, lineno, "unknown key '" + key + "' in [law]");
        } else {
            fail(filename, lineno, "key outside of any section");
        }
    }

    if (!model_seen)
        throw ConfigError(filename + ": missing [model] section");
    if (family == "brownian_drift")
        cfg.model.family = LevyFamily::BrownianDrift;
    else if (family == "exp_jump_diffusion")
        cfg.model.family = LevyFamily::ExpJumpDiffusion;
    else
        throw ConfigError(filename + ": unknown model family '" + family + "'");
    cfg.model.validate();

    for (const LawRequest& law : cfg.laws) {
        if (law.id.empty())
            fail(filename, law.line, "[law] section without an 'id'");
        if (!law.sweep.empty()) {
            if (law.points < 2)
                fail(filename, law.line, "sweep needs points >= 2");
            if (!(law.from < law.to))
                fail(filename, law.line, "sweep needs from < to");
            if (law.log_spaced && !(law.from > 0.0))
                fail(filename, law.line, "log sweep needs from > 0");
        }
    }
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    return parse_run_config(in, path);
}

} // namespace levydd::harness
