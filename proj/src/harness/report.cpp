#include "levydd/harness/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

namespace levydd::harness {

double ComparisonRow::gap() const { return std::abs(analytic - estimate); }

bool ComparisonRow::pass() const { return gap() <= ci_halfwidth + allowance; }

bool ComparisonReport::all_pass() const {
    for (const auto& row : rows)
        if (!row.pass())
            return false;
    return !rows.empty();
}

double ComparisonReport::max_gap(const std::string& law_id) const {
    double m = 0.0;
    for (const auto& row : rows)
        if (row.law_id == law_id)
            m = std::max(m, row.gap());
    return m;
}

void write_report_csv(const ComparisonReport& report, std::ostream& out) {
    out << "law_id,arg_name,arg,analytic,estimate,ci_halfwidth,gap,allowance,n_accepted,"
           "negative_control,pass\n";
    char buf[320];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%s,%s,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%llu,%d,%d\n",
                      r.law_id.c_str(), r.arg_name.c_str(), r.arg, r.analytic, r.estimate,
                      r.ci_halfwidth, r.gap(), r.allowance, (unsigned long long)r.n_accepted,
                      int(r.negative_control), int(r.pass()));
        out << buf;
    }
}

void write_report_json(const ComparisonReport& report, const RunConfig& config,
                       std::ostream& out) {
    nlohmann::json j;
    j["model"] = describe(config.model);
    j["gamma"] = config.gamma;
    j["dt"] = config.dt;
    j["paths"] = config.paths;
    j["seed"] = config.seed;
    j["all_pass"] = report.all_pass();

    nlohmann::json rows = nlohmann::json::array();
    std::map<std::string, double> sup_gaps;
    for (const auto& r : report.rows) {
        rows.push_back({{"law", r.law_id},
                        {"arg_name", r.arg_name},
                        {"arg", r.arg},
                        {"analytic", r.analytic},
                        {"estimate", r.estimate},
                        {"ci_halfwidth", r.ci_halfwidth},
                        {"gap", r.gap()},
                        {"allowance", r.allowance},
                        {"n_accepted", r.n_accepted},
                        {"negative_control", r.negative_control},
                        {"pass", r.pass()}});
        sup_gaps[r.law_id] = std::max(sup_gaps[r.law_id], r.gap());
    }
    j["results"] = rows;
    j["sup_gap_per_law"] = sup_gaps;
    out << j.dump(2) << "\n";
}

void print_report(const ComparisonReport& report, std::ostream& out) {
    char buf[320];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf,
                      "%-28s %s=%-9.4g analytic=%-10.6f mc=%-10.6f ci=%-8.4f gap=%-8.4f "
                      "allow=%-7.4f n=%-8llu %s%s\n",
                      r.law_id.c_str(), r.arg_name.c_str(), r.arg, r.analytic, r.estimate,
                      r.ci_halfwidth, r.gap(), r.allowance, (unsigned long long)r.n_accepted,
                      r.pass() ? "PASS" : "FAIL",
                      r.negative_control ? " (negative control)" : "");
        out << buf;
    }
    out << (report.all_pass() ? "VERIFY: all laws pass\n" : "VERIFY: FAILURES present\n");
}

} // namespace levydd::harness
