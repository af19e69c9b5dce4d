// Acceptance suite: exercises the scale-function engine, every distribution
// law against the Monte Carlo path oracle at the pinned tolerances, the
// property sweeps, and the decomposition scan. Prints one PASS/FAIL line per
// criterion; exit status 0 only if all pass.

#include "levydd/drawdown_laws.hpp"
#include "levydd/exit_identities.hpp"
#include "levydd/mc/estimate.hpp"

#include "../oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace levydd;
using namespace levydd::mc;

namespace {

int failures = 0;

double now() {
    using clock = std::chrono::steady_clock;
    static const auto start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void report(const char* id, bool pass, const std::string& detail) {
    std::printf("%-6s %s  %s  [t=%.1fs]\n", id, pass ? "PASS" : "FAIL", detail.c_str(), now());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

const LevyModel kBm = LevyModel::brownian(0.0, 1.0);
const LevyModel kJump = LevyModel::exp_jump(1.0, 1.0, 1.0, 1.0);

// frozen expected values for the standard-Brownian desk checks
constexpr double kPreSup11 = 0.731224110505803;      // e^{-(coth 1 - 1)}
constexpr double kPostSupSf2 = 0.238405844044235;    // 1 - tanh(1)
constexpr double kPostInfSf1 = 0.238405844044235;    // 1 - tanh(1)
constexpr double kPostInfSup2 = 0.761594155955765;   // tanh(1)
constexpr double kIntermediate21 = 0.830184532610546;  // (sinh2/sinh1) e^{-coth 1}
constexpr double kDurationAlpha1 = 0.850918128239322;  // 1/sinh(1)
constexpr double kJoint11 = 0.351945726336115;

// shared exponential-horizon ensemble on the standard model
const std::vector<DecompRecord>& run_a() {
    static const std::vector<DecompRecord> records = [] {
        SimConfig cfg;
        cfg.model = kBm;
        cfg.gamma = 0.5;
        cfg.dt = 1e-3;
        cfg.n_paths = 200000;
        cfg.seed = 20240801;
        return simulate_ensemble(cfg, 1.0, 0);
    }();
    return records;
}

void ac1_scale_engine() {
    double max_dw = 0.0, max_zres = 0.0;
    const GridSpec grid{1e-4, 8.0, 1024};
    for (double g : {0.25, 0.5, 1.0}) {
        const ScaleTable cf = ScaleTable::closed_form(kBm, g, grid);
        const ScaleTable inv = ScaleTable::inverted(kBm, g, grid);
        const double sq = std::sqrt(2.0 * g);
        double running = 0.0, prev = 0.0;
        for (int i = 0; i <= 500; ++i) {
            const double x = 0.01 + i * (5.0 - 0.01) / 500.0;
            const double wref = std::sqrt(2.0 / g) * std::sinh(sq * x);
            max_dw = std::max(max_dw, std::abs(inv.w(x) - wref));
            // Z(x) - 1 - gamma int_0^x W for both evaluation methods
            running += oracles::quad_gl([&](double y) { return inv.w(y); }, prev, x, 4);
            const double res_inv = std::abs(inv.z(x) - 1.0 - g * running) /
                                   std::max(1.0, std::abs(inv.z(x)));
            const double zref = std::cosh(sq * x);
            const double res_cf = std::abs(cf.z(x) - zref);
            max_zres = std::max(max_zres, std::max(res_inv, res_cf));
            prev = x;
        }
    }
    const bool pass = max_dw <= 1e-6 && max_zres <= 1e-9;
    report("AC-1", pass,
           fmt("scale engine, inversion vs closed form on [0.01,5], gamma in {1/4,1/2,1}: "
               "max|dW|=%.2e (tol 1e-6), max Z residual=%.2e (tol 1e-9)",
               max_dw, max_zres));
}

void ac2_pre_sup() {
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, GridSpec{1e-4, 60.0, 512});
    const double analytic = pre_sup_mdd_cdf(t, 1.0, 1.0).value;
    ConditionSpec cond;
    cond.sup_level = 1.0;
    cond.band = 0.05;
    const Estimate est =
        estimate_from_records(run_a(), McLaw::PreSupMddCdf, McArgs{.b = 1.0, .d = 1.0}, cond, 0.5);
    const double gap = std::abs(est.value - analytic);
    const bool pass = std::abs(analytic - kPreSup11) <= 1e-9 && gap <= 0.03;
    report("AC-2", pass,
           fmt("pre-supremum drawdown cdf b=1 d=1: analytic=%.6f mc=%.6f+-%.4f (n=%llu) "
               "gap=%.4f (tol 0.03)",
               analytic, est.value, est.ci_halfwidth, (unsigned long long)est.n_accepted, gap));
}

void ac3_post_sup_inf() {
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, GridSpec{1e-4, 60.0, 512});
    const double a_sup = post_sup_mdd_sf(t, 2.0).value;
    const double a_inf = post_inf_mdd_sf(t, 1.0).value;
    const Estimate e_sup =
        estimate_from_records(run_a(), McLaw::PostSupMddSf, McArgs{.d = 2.0}, {}, 0.5);
    const Estimate e_inf =
        estimate_from_records(run_a(), McLaw::PostInfMddSf, McArgs{.d = 1.0}, {}, 0.5);
    const double gap_sup = std::abs(e_sup.value - a_sup);
    const double gap_inf = std::abs(e_inf.value - a_inf);
    const bool pass = std::abs(a_sup - kPostSupSf2) <= 1e-9 &&
                      std::abs(a_inf - kPostInfSf1) <= 1e-9 && gap_sup <= 0.02 &&
                      gap_inf <= 0.02;
    report("AC-3", pass,
           fmt("post-sup sf(2) and post-inf sf(1), unconditional: analytic=%.6f both, "
               "mc=%.6f/%.6f, gaps=%.4f/%.4f (tol 0.02)",
               a_sup, e_sup.value, e_inf.value, gap_sup, gap_inf));
}

void ac4_post_inf_sup() {
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, GridSpec{1e-4, 60.0, 512});
    const double analytic = post_inf_sup_cdf(t, 2.0).value;
    ConditionSpec cond;
    cond.inf_level = -0.5;
    cond.band = 0.05;
    const Estimate est =
        estimate_from_records(run_a(), McLaw::PostInfSupCdf, McArgs{.u = 2.0}, cond, 0.5);
    const double gap = std::abs(est.value - analytic);
    const bool pass = std::abs(analytic - kPostInfSup2) <= 1e-9 && gap <= 0.04;
    report("AC-4", pass,
           fmt("post-infimum supremum cdf u=2 | I_T band at -0.5: analytic=%.6f mc=%.6f+-%.4f "
               "(n=%llu) gap=%.4f (tol 0.04)",
               analytic, est.value, est.ci_halfwidth, (unsigned long long)est.n_accepted, gap));
}

void ac5_intermediate_arbitration() {
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, GridSpec{1e-4, 60.0, 512});
    const double analytic = intermediate_mdd_cdf(t, 2.0, 1.0).value;
    const double alt = intermediate_mdd_cdf_alt(t, 2.0, 1.0);

    SimConfig cfg;
    cfg.model = kBm;
    cfg.gamma = 0.5;
    cfg.dt = 1e-3;
    cfg.n_paths = 400000;
    cfg.seed = 20240802;
    const auto records = simulate_ensemble(cfg, 1.0, 0);
    ConditionSpec cond;
    cond.sup_level = 1.0;
    cond.inf_level = -1.0;
    cond.inf_before_sup = true;
    cond.band = 0.1;
    const Estimate est = estimate_from_records(records, McLaw::IntermediateMddCdf,
                                               McArgs{.a = -1.0, .b = 1.0, .d = 1.0}, cond, 0.5);
    const double gap = std::abs(est.value - analytic);
    const double alt_gap = std::abs(est.value - alt);
    const bool corrected_ok = std::abs(analytic - kIntermediate21) <= 1e-9 && gap <= 0.05;
    const bool alt_rejected = alt_gap > est.ci_halfwidth;  // printed variant outside the CI
    report("AC-5", corrected_ok && alt_rejected,
           fmt("intermediate drawdown cdf gap=2 d=1 | bands + inf-first: corrected=%.6f "
               "mc=%.6f+-%.4f (n=%llu) gap=%.4f (tol 0.05); rejected variant=%.4f off by %.3f",
               analytic, est.value, est.ci_halfwidth, (unsigned long long)est.n_accepted, gap,
               alt, alt_gap));
}

void ac6_duration_at_alpha() {
    const GridSpec grid{1e-4, 60.0, 512};
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, grid);
    const ScaleTable t0 = ScaleTable::closed_form(kBm, 0.0, grid);
    const double analytic = duration_lt_at_alpha(t0, t, 1.0).value;

    SimConfig cfg;
    cfg.model = kBm;
    cfg.gamma = 0.5;
    // monitoring bias on the duration is ~0.27*2*0.583*sigma*sqrt(dt), which
    // exhausts the 0.01 tolerance right at dt = 1e-3; the oracle contract is
    // dt <= 1e-3 for acceptance runs, so monitor twice as finely here
    cfg.dt = 5e-4;
    cfg.n_paths = 100000;
    cfg.seed = 20240803;
    cfg.mode = SimMode::StopAtAlphaD;
    cfg.stop_d = 1.0;
    const auto records = simulate_ensemble(cfg, 1.0, 0);
    const Estimate est =
        estimate_from_records(records, McLaw::DurationLtAtAlpha, McArgs{.d = 1.0}, {}, 0.5);
    const double gap = std::abs(est.value - analytic);
    const bool pass = std::abs(analytic - kDurationAlpha1) <= 1e-9 && gap <= 0.01;
    report("AC-6", pass,
           fmt("duration LT at first drawdown d=1 (dt=5e-4): analytic=%.6f mc=%.6f+-%.4f "
               "gap=%.4f (tol 0.01)",
               analytic, est.value, est.ci_halfwidth, gap));
}

void ac7_duration_identity() {
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, GridSpec{1e-4, 60.0, 512});
    double max_diff = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double d = 0.05 + 0.1 * i;
        max_diff = std::max(max_diff, std::abs(duration_lt_post_sup(t, d).value -
                                               post_sup_mdd_sf(t, d).value));
    }
    const double alt = duration_lt_post_sup_alt(t, 1.0);
    const bool pass = max_diff <= 1e-12 && (alt < 0.0 || alt > 1.0);
    report("AC-7", pass,
           fmt("duration LT == post-sup survival over 100-point sweep: max|diff|=%.2e "
               "(tol 1e-12); rejected variant at d=1 is %.4f, outside [0,1]",
               max_diff, alt));
}

void ac8_cdf_property_suite() {
    bool pass = true;
    std::string worst = "all sweeps monotone, endpoints within 1e-3";
    double worst_metric = 0.0;

    const auto run_table = [&](const LevyModel& model, double gamma) {
        const double ph = phi(model, gamma);
        const GridSpec grid{1e-4, std::max(50.0, 33.0 / ph), 512};
        const ScaleTable t = ScaleTable::make(model, gamma, grid);

        const auto sweep = [&](const char* name, double lo, double hi, double limit_lo,
                               double limit_hi, auto f) {
            double prev = -1e300, first = 0.0, last = 0.0;
            for (int i = 0; i < 200; ++i) {
                const double x =
                    std::min(hi, lo * std::exp(double(i) / 199.0 * std::log(hi / lo)));
                const double v = f(x);
                if (i == 0)
                    first = v;
                last = v;
                if (v < prev - 1e-11) {
                    pass = false;
                    worst = fmt("%s not monotone at x=%.4g", name, x);
                }
                prev = v;
            }
            const double metric =
                std::max(std::abs(first - limit_lo), std::abs(last - limit_hi));
            if (metric > 1e-3) {
                pass = false;
                worst = fmt("%s endpoints off by %.2e", name, metric);
            }
            worst_metric = std::max(worst_metric, metric);
        };

        sweep("sup_cdf", 1e-4 / ph, 30.0 / ph, 0.0, 1.0,
              [&](double b) { return sup_cdf(t, b).value; });
        sweep("pre_sup_mdd_cdf", 1e-3, 30.0 / ph, 0.0, 1.0,
              [&](double d) { return pre_sup_mdd_cdf(t, 1.0, d).value; });
        sweep("post_inf_sup_cdf", 1e-3 / ph, 30.0 / ph, 0.0, 1.0,
              [&](double u) { return post_inf_sup_cdf(t, u).value; });
        const double gap = 4.0 / ph;
        sweep("intermediate_mdd_cdf", 1e-5 * gap, gap, 0.0, 1.0,
              [&](double d) { return intermediate_mdd_cdf(t, gap, d).value; });
        sweep("post_sup_mdd_cdf_cond", 1e-5 * gap, gap, 0.0, 1.0,
              [&](double d) { return post_sup_mdd_cdf_cond(t, gap, d).value; });
        sweep("joint_inf_sup", 5e-4 / ph, 30.0 / ph, 0.0, 1.0,
              [&](double b) { return joint_inf_sup(t, -30.0 / ph, b).value; });

        // excursion rate W'/W decreases to Phi
        double prev_ratio = 1e300, ratio = 0.0;
        for (double x = 0.01; x <= 30.0 / ph; x *= 1.05) {
            ratio = t.w_prime(x) / t.w(x);
            if (ratio > prev_ratio + 1e-9) {
                pass = false;
                worst = fmt("W'/W not decreasing at x=%.4g (gamma=%.2f)", x, gamma);
            }
            prev_ratio = ratio;
        }
        if (std::abs(ratio - ph) > 1e-3) {
            pass = false;
            worst = fmt("W'/W terminal gap %.2e (gamma=%.2f)", std::abs(ratio - ph), gamma);
        }
    };

    for (double g : {0.25, 1.0}) {
        run_table(kBm, g);
        run_table(kJump, g);
    }
    report("AC-8", pass,
           fmt("cdf property suite, both families, gamma in {1/4,1}: %s (worst endpoint "
               "deviation %.2e)",
               worst.c_str(), worst_metric));
}

void ac9_joint_law() {
    const ScaleTable t = ScaleTable::closed_form(kBm, 0.5, GridSpec{1e-4, 60.0, 512});
    const double analytic = joint_inf_sup(t, -1.0, 1.0).value;

    SimConfig cfg;
    cfg.model = kBm;
    cfg.gamma = 0.5;
    cfg.dt = 5e-4;
    cfg.n_paths = 200000;
    cfg.seed = 20240804;
    const auto records = simulate_ensemble(cfg, 1.0, 0);
    const Estimate est = estimate_from_records(records, McLaw::JointInfSup,
                                               McArgs{.a = -1.0, .b = 1.0}, {}, 0.5);
    const double gap = std::abs(est.value - analytic);
    const bool pass = std::abs(analytic - kJoint11) <= 1e-9 && gap <= 0.01;
    report("AC-9", pass,
           fmt("joint law P(-1<I_T, S_T<1): analytic=%.6f mc=%.6f+-%.4f gap=%.4f (tol 0.01)",
               analytic, est.value, est.ci_halfwidth, gap));
}

void ac10_decomposition() {
    std::mt19937 gen(424242);
    std::normal_distribution<double> step(0.0, 0.3);
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        PathRecord p;
        p.times.push_back(0.0);
        p.values.push_back(0.0);
        for (int i = 1; i < 50; ++i) {
            p.times.push_back(i * 0.1);
            p.values.push_back(p.values.back() + step(gen));
        }
        const double d = 0.3 + 0.02 * trial;
        const DecompRecord a = decompose(p, d);
        const DecompRecord b = oracles::brute_force_decompose(p, d);
        const bool same =
            a.sup == b.sup && a.inf == b.inf && a.t_sup == b.t_sup && a.t_inf == b.t_inf &&
            a.mdd_total == b.mdd_total && a.mdd_pre_sup == b.mdd_pre_sup &&
            a.mdd_post_sup == b.mdd_post_sup && a.mdd_post_inf == b.mdd_post_inf &&
            a.inf_before_sup == b.inf_before_sup && a.sup_post_inf == b.sup_post_inf &&
            a.has_alpha == b.has_alpha &&
            (!a.has_alpha || (a.alpha == b.alpha && a.kappa == b.kappa &&
                              a.duration == b.duration && a.sup_at_alpha == b.sup_at_alpha)) &&
            (!a.inf_before_sup || a.mdd_intermediate == b.mdd_intermediate);
        if (!same)
            ++mismatches;
    }
    report("AC-10", mismatches == 0,
           fmt("scan vs brute-force decomposition on 100 random 50-step paths: %d mismatches "
               "(exact equality required)",
               mismatches));
}

} // namespace

int main() {
    std::printf("acceptance suite: drawdown laws of spectrally negative Levy processes\n");
    ac1_scale_engine();
    ac2_pre_sup();
    ac3_post_sup_inf();
    ac4_post_inf_sup();
    ac5_intermediate_arbitration();
    ac6_duration_at_alpha();
    ac7_duration_identity();
    ac8_cdf_property_suite();
    ac9_joint_law();
    ac10_decomposition();
    std::printf("ACCEPTANCE: %d/10 criteria passed%s\n", 10 - failures,
                failures ? "" : " -- all green");
    return failures == 0 ? 0 : 1;
}
