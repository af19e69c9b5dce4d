// levydd command line: scale tables, analytic law sweeps, exit identities,
// Monte Carlo verification, and raw path dumps, driven by an INI config.

#include "levydd/harness/runner.hpp"
#include "levydd/mc/estimate.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace levydd;

    CLI::App app{"drawdown laws of spectrally negative Levy processes"};
    app.require_subcommand(1);

    std::string config_path;
    harness::RunOptions options;
    std::uint64_t seed_flag = 0;
    unsigned threads_flag = 0;
    std::string out_flag;

    const auto add_common = [&](CLI::App* sub, bool with_negative_controls = false) {
        sub->add_option("--config", config_path, "run configuration file")->required();
        sub->add_option("--seed", seed_flag, "override [sim] seed");
        sub->add_option("--threads", threads_flag,
                        "worker threads (default: LEVY_DD_THREADS or hardware)");
        sub->add_option("--out", out_flag, "output directory");
        if (with_negative_controls)
            sub->add_flag("--negative-controls", options.negative_controls)->group("");
    };
    const auto collect_overrides = [&](CLI::App* sub) {
        if (sub->count("--seed"))
            options.seed = seed_flag;
        if (sub->count("--threads"))
            options.threads = threads_flag;
        if (sub->count("--out"))
            options.out_dir = out_flag;
    };

    auto* scale = app.add_subcommand("scale", "tabulate W, W', Z as CSV");
    add_common(scale);
    auto* law = app.add_subcommand("law", "evaluate analytic law sweeps as CSV");
    add_common(law, true);
    auto* exit_sub = app.add_subcommand("exit", "evaluate a first-passage identity");
    add_common(exit_sub);
    std::string exit_op;
    double exit_x = 0.0, exit_b = 0.0, exit_d = 0.0, exit_gap = 0.0;
    exit_sub->add_option("--op", exit_op,
                         "one_sided_up|one_sided_down|two_sided_up|two_sided_down|"
                         "updown_before_drawdown|drawdown_before_up")
        ->required();
    exit_sub->add_option("--x", exit_x, "start level above the lower barrier");
    exit_sub->add_option("--b", exit_b, "upper barrier");
    exit_sub->add_option("--d", exit_d, "drawdown threshold");
    exit_sub->add_option("--gap", exit_gap, "distance to the upper barrier");
    auto* verify = app.add_subcommand("verify", "compare analytic laws to the MC oracle");
    add_common(verify, true);
    auto* simulate = app.add_subcommand("simulate", "dump per-path decomposition records");
    add_common(simulate);

    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* sub : {scale, law, exit_sub, verify, simulate})
            if (sub->parsed())
                collect_overrides(sub);
        const harness::RunConfig config = harness::load_run_config(config_path);
        if (scale->parsed())
            return harness::cmd_scale(config, options, std::cout);
        if (law->parsed())
            return harness::cmd_law(config, options, std::cout);
        if (exit_sub->parsed())
            return harness::cmd_exit_identity(config, options, exit_op, exit_x, exit_b, exit_d,
                                              exit_gap, std::cout);
        if (verify->parsed())
            return harness::cmd_verify(config, options, std::cout);
        if (simulate->parsed())
            return harness::cmd_simulate(config, options, std::cout);
    } catch (const harness::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const mc::InsufficientSampleError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
