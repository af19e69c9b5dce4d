// Registry mapping law ids to their analytic evaluators, argument schemas,
// and Monte Carlo estimator glue. The CLI and the verification runner are
// driven entirely by this table.

#pragma once

#include "levydd/drawdown_laws.hpp"
#include "levydd/mc/estimate.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace levydd::harness {

struct LawTables {
    const ScaleTable* table = nullptr;   // gamma of the run
    const ScaleTable* table0 = nullptr;  // gamma = 0 companion (duration_lt_at_alpha)
};

using ArgMap = std::map<std::string, double>;

struct LawEntry {
    std::string id;
    LawKind kind = LawKind::Cdf;
    std::vector<std::string> required;  // argument names that must be present
    std::string principal;              // natural sweep argument
    bool needs_zero_gamma_table = false;
    std::optional<mc::McLaw> mc_law;    // empty: analytic only (h-functions)
    bool stop_mode = false;             // simulate to alpha_d instead of Exp horizon
    std::function<double(const LawTables&, const ArgMap&)> analytic;
    // acceptance bands / filters the estimator conditions on
    std::function<mc::ConditionSpec(const ArgMap&, double band)> condition;
};

// All registered laws; negative controls (`*_alt`) included only on request.
const std::vector<LawEntry>& law_registry(bool include_negative_controls);
const LawEntry* find_law(const std::string& id, bool include_negative_controls);

// Missing-argument check; returns the offending name or empty when complete.
std::string missing_argument(const LawEntry& law, const ArgMap& args);

mc::McArgs to_mc_args(const ArgMap& args);

} // namespace levydd::harness
