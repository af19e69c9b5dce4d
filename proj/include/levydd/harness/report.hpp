// Comparison report between analytic law values and Monte Carlo estimates:
// per-row pass/fail plus a global summary, persisted as CSV and JSON.

#pragma once

#include "levydd/harness/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace levydd::harness {

struct ComparisonRow {
    std::string law_id;
    std::string arg_name;
    double arg = 0.0;
    double analytic = 0.0;
    double estimate = 0.0;
    double ci_halfwidth = 0.0;
    double allowance = 0.0;
    std::uint64_t n_accepted = 0;
    bool negative_control = false;  // known-bad variant; expected to fail

    double gap() const;
    // pass: analytic value inside the CI widened by the allowance
    bool pass() const;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;

    bool all_pass() const;
    double max_gap(const std::string& law_id) const;  // KS-style sup gap over the sweep
};

void write_report_csv(const ComparisonReport& report, std::ostream& out);
void write_report_json(const ComparisonReport& report, const RunConfig& config,
                       std::ostream& out);
void print_report(const ComparisonReport& report, std::ostream& out);

} // namespace levydd::harness
