#include "levydd/harness/runner.hpp"

#include "levydd/exit_identities.hpp"
#include "levydd/harness/laws.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace levydd::harness {

namespace {

void apply_options(RunConfig& cfg, const RunOptions& opt) {
    if (opt.seed)
        cfg.seed = *opt.seed;
    if (opt.threads)
        cfg.threads = *opt.threads;
    if (opt.out_dir)
        cfg.out_dir = *opt.out_dir;
}

std::ofstream open_out(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto path = std::filesystem::path(cfg.out_dir) / name;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

mc::SimConfig sim_config(const RunConfig& cfg) {
    mc::SimConfig sim;
    sim.model = cfg.model;
    sim.gamma = cfg.gamma;
    sim.dt = cfg.dt;
    sim.n_paths = cfg.paths;
    sim.seed = cfg.seed;
    sim.mode = cfg.stop_mode ? mc::SimMode::StopAtAlphaD : mc::SimMode::ExpHorizon;
    sim.stop_d = cfg.sim_d;
    return sim;
}

} // namespace

int cmd_scale(RunConfig config, const RunOptions& options, std::ostream& diag) {
    apply_options(config, options);
    const ScaleTable table = ScaleTable::make(config.model, config.gamma, config.grid);
    auto out = open_out(config, "scale.csv");
    table.dump_csv(out);
    diag << "scale: wrote " << config.out_dir << "/scale.csv (method="
         << (table.method() == ScaleMethod::ClosedForm ? "closed_form" : "inverted")
         << ", gamma=" << config.gamma << ", phi=" << table.phi_gamma() << ")\n";

    if (config.model.family == LevyFamily::BrownianDrift) {
        // cross-method diagnostic: closed form vs numerical inversion
        const ScaleTable inv = ScaleTable::inverted(config.model, config.gamma, config.grid);
        double max_dw = 0.0, max_dz = 0.0;
        for (double x : table.grid_x()) {
            if (x <= 0.0 || x > 5.0)
                continue;
            max_dw = std::max(max_dw, std::abs(table.w(x) - inv.w(x)));
            max_dz = std::max(max_dz, std::abs(table.z(x) - inv.z(x)));
        }
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "scale: closed form vs inverted on (0,5]: max|dW|=%.3g max|dZ|=%.3g\n",
                      max_dw, max_dz);
        diag << buf;
    }
    return 0;
}

int cmd_law(RunConfig config, const RunOptions& options, std::ostream& diag) {
    apply_options(config, options);
    if (config.laws.empty())
        throw ConfigError("law: no [law] sections in config");

    LawTables tables;
    const ScaleTable table = ScaleTable::make(config.model, config.gamma, config.grid);
    std::optional<ScaleTable> table0;
    tables.table = &table;
    for (const LawRequest& req : config.laws) {
        const LawEntry* entry = find_law(req.id, options.negative_controls);
        if (entry && entry->needs_zero_gamma_table && !table0) {
            table0 = ScaleTable::make(config.model, 0.0, config.grid);
            tables.table0 = &*table0;
        }
    }

    auto out = open_out(config, "laws.csv");
    out << "arg,value,formula_id\n";
    char buf[160];
    std::size_t rows = 0;
    for (const LawRequest& req : config.laws) {
        const LawEntry* entry = find_law(req.id, options.negative_controls);
        if (!entry)
            throw ConfigError("law: unknown law id '" + req.id + "'");
        const std::string missing = missing_argument(*entry, req.args);
        ArgMap args = req.args;
        if (!missing.empty() && missing != (req.sweep.empty() ? entry->principal : req.sweep))
            throw ConfigError("law " + req.id + ": missing argument '" + missing + "'");
        const std::string sweep_arg = req.sweep.empty() ? entry->principal : req.sweep;
        for (double v : req.sweep_values(sweep_arg)) {
            if (std::isnan(v))
                throw ConfigError("law " + req.id + ": no value for argument '" + sweep_arg + "'");
            args[sweep_arg] = v;
            const double value = entry->analytic(tables, args);
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%s\n", v, value, entry->id.c_str());
            out << buf;
            ++rows;
        }
    }
    diag << "law: wrote " << rows << " rows to " << config.out_dir << "/laws.csv\n";
    return 0;
}

int cmd_exit_identity(RunConfig config, const RunOptions& options, const std::string& op,
                      double x, double b, double d, double gap, std::ostream& diag) {
    apply_options(config, options);
    const ScaleTable table = ScaleTable::make(config.model, config.gamma, config.grid);
    double value;
    if (op == "one_sided_up")
        value = one_sided_up(table, x);
    else if (op == "one_sided_down")
        value = one_sided_down(table, x);
    else if (op == "two_sided_up")
        value = two_sided_up(table, x, b);
    else if (op == "two_sided_down")
        value = two_sided_down(table, x, b);
    else if (op == "updown_before_drawdown")
        value = updown_before_drawdown(table, x, b, d);
    else if (op == "drawdown_before_up")
        value = drawdown_before_up(table, gap, d);
    else
        throw ConfigError("exit: unknown identity '" + op + "'");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s x=%.6g b=%.6g d=%.6g gap=%.6g value=%.12g\n", op.c_str(),
                  x, b, d, gap, value);
    diag << buf;
    return 0;
}

int run_verification(const RunConfig& config, bool negative_controls, ComparisonReport& report,
                     std::ostream& diag) {
    if (config.laws.empty())
        throw ConfigError("verify: no [law] sections in config");

    const ScaleTable table = ScaleTable::make(config.model, config.gamma, config.grid);
    std::optional<ScaleTable> table0;
    LawTables tables;
    tables.table = &table;
    for (const LawRequest& req : config.laws) {
        const LawEntry* entry = find_law(req.id, negative_controls);
        if (entry && entry->needs_zero_gamma_table && !table0) {
            table0 = ScaleTable::make(config.model, 0.0, config.grid);
            tables.table0 = &*table0;
        }
    }

    // one shared ensemble serves every exponential-horizon law
    std::vector<mc::DecompRecord> horizon_records;
    const auto horizon_ensemble = [&]() -> const std::vector<mc::DecompRecord>& {
        if (horizon_records.empty()) {
            mc::SimConfig sim = sim_config(config);
            sim.mode = mc::SimMode::ExpHorizon;
            diag << "verify: simulating " << sim.n_paths << " paths (dt=" << sim.dt << ")\n";
            horizon_records = mc::simulate_ensemble(sim, 1.0, config.threads);
        }
        return horizon_records;
    };

    try {
        for (const LawRequest& req : config.laws) {
            const LawEntry* entry = find_law(req.id, negative_controls);
            if (!entry)
                throw ConfigError("verify: unknown law id '" + req.id + "'");
            if (!entry->mc_law) {
                diag << "verify: " << req.id << " has no empirical counterpart, skipping\n";
                continue;
            }
            const std::string sweep_arg = req.sweep.empty() ? entry->principal : req.sweep;
            ArgMap args = req.args;
            const std::string missing = missing_argument(*entry, req.args);
            if (!missing.empty() && missing != sweep_arg)
                throw ConfigError("verify: law " + req.id + ": missing argument '" + missing +
                                  "'");
            for (double v : req.sweep_values(sweep_arg)) {
                if (std::isnan(v))
                    throw ConfigError("verify: law " + req.id + ": no value for argument '" +
                                      sweep_arg + "'");
                args[sweep_arg] = v;

                ComparisonRow row;
                row.law_id = entry->id;
                row.arg_name = sweep_arg;
                row.arg = v;
                row.analytic = entry->analytic(tables, args);
                row.allowance = req.allowance;
                row.negative_control = entry->id.size() > 4 &&
                                       entry->id.rfind("_alt") == entry->id.size() - 4;

                const mc::ConditionSpec cond =
                    entry->condition(args, req.band.value_or(config.band));
                mc::Estimate est;
                if (entry->stop_mode) {
                    mc::SimConfig sim = sim_config(config);
                    sim.mode = mc::SimMode::StopAtAlphaD;
                    sim.stop_d = args.at("d");
                    const auto records =
                        mc::simulate_ensemble(sim, args.at("d"), config.threads);
                    est = mc::estimate_from_records(records, *entry->mc_law, to_mc_args(args),
                                                    cond, config.gamma);
                } else {
                    est = mc::estimate_from_records(horizon_ensemble(), *entry->mc_law,
                                                    to_mc_args(args), cond, config.gamma);
                }
                row.estimate = est.value;
                row.ci_halfwidth = est.ci_halfwidth;
                row.n_accepted = est.n_accepted;
                report.rows.push_back(row);
            }
        }
    } catch (const mc::InsufficientSampleError& e) {
        diag << "verify: " << e.what() << "\n";
        return 2;
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_verify(RunConfig config, const RunOptions& options, std::ostream& diag) {
    apply_options(config, options);
    ComparisonReport report;
    const int code = run_verification(config, options.negative_controls, report, diag);
    if (code == 2)
        return 2;
    {
        auto csv = open_out(config, "verify_report.csv");
        write_report_csv(report, csv);
        auto json = open_out(config, "verify_summary.json");
        write_report_json(report, config, json);
    }
    print_report(report, diag);
    diag << "verify: report in " << config.out_dir << "/verify_report.csv, summary in "
         << config.out_dir << "/verify_summary.json\n";
    return code;
}

int cmd_simulate(RunConfig config, const RunOptions& options, std::ostream& diag) {
    apply_options(config, options);
    mc::SimConfig sim = sim_config(config);
    const double decomp_d = config.sim_d > 0.0 ? config.sim_d : 1.0;
    const auto records = mc::simulate_ensemble(sim, decomp_d, config.threads);

    auto out = open_out(config, "paths.csv");
    out << "path,sup,inf,t_sup,t_inf,mdd_total,mdd_pre_sup,mdd_post_sup,mdd_post_inf,"
           "mdd_intermediate,inf_before_sup,sup_post_inf,has_alpha,alpha,kappa,duration,"
           "sup_at_alpha,t_end\n";
    char buf[512];
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        std::snprintf(buf, sizeof buf,
                      "%zu,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%d,%.12g,%d,"
                      "%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      i, r.sup, r.inf, r.t_sup, r.t_inf, r.mdd_total, r.mdd_pre_sup,
                      r.mdd_post_sup, r.mdd_post_inf, r.mdd_intermediate, int(r.inf_before_sup),
                      r.sup_post_inf, int(r.has_alpha), r.alpha, r.kappa, r.duration,
                      r.sup_at_alpha, r.t_end);
        out << buf;
    }
    diag << "simulate: wrote " << records.size() << " records to " << config.out_dir
         << "/paths.csv\n";
    return 0;
}

} // namespace levydd::harness
