#include "levydd/mc/estimate.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace levydd::mc {

const char* mc_law_name(McLaw law) {
    switch (law) {
    case McLaw::SupCdf: return "sup_cdf";
    case McLaw::JointInfSup: return "joint_inf_sup";
    case McLaw::PreSupMddCdf: return "pre_sup_mdd_cdf";
    case McLaw::PostSupMddSf: return "post_sup_mdd_sf";
    case McLaw::PostInfMddSf: return "post_inf_mdd_sf";
    case McLaw::PostInfSupCdf: return "post_inf_sup_cdf";
    case McLaw::IntermediateMddCdf: return "intermediate_mdd_cdf";
    case McLaw::PostSupMddCdfCond: return "post_sup_mdd_cdf_cond";
    case McLaw::DurationLtPostSup: return "duration_lt_post_sup";
    case McLaw::DurationLtPostSupCond: return "duration_lt_post_sup_cond";
    case McLaw::DurationLtAtAlpha: return "duration_lt_at_alpha";
    }
    return "?";
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("LEVY_DD_THREADS")) {
        const long v = std::atol(env);
        if (v > 0)
            return unsigned(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<DecompRecord> simulate_ensemble(const SimConfig& config, double decomp_d,
                                            unsigned threads) {
    config.validate();
    if (!(decomp_d > 0.0))
        throw std::invalid_argument("simulate_ensemble: decomp_d must be > 0");

    const std::uint64_t n = config.n_paths;
    std::vector<DecompRecord> records(n);
    const unsigned n_threads = std::min<std::uint64_t>(resolve_threads(threads), n);
    const std::uint64_t chunk = 256;
    const std::uint64_t n_chunks = (n + chunk - 1) / chunk;
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks)
                return;
            const std::uint64_t lo = c * chunk, hi = std::min(n, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i)
                records[i] = decompose(simulate_path(config, i), decomp_d);
        }
    };

    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return records;
}

namespace {

bool accepted(const DecompRecord& rec, const ConditionSpec& cond) {
    if (cond.sup_level && std::abs(rec.sup - *cond.sup_level) > cond.band)
        return false;
    if (cond.inf_level && std::abs(rec.inf - *cond.inf_level) > cond.band)
        return false;
    if (cond.inf_before_sup && !rec.inf_before_sup)
        return false;
    return true;
}

} // namespace

Estimate estimate_from_records(std::span<const DecompRecord> records, McLaw law,
                               const McArgs& args, const ConditionSpec& cond, double gamma) {
    if (law == McLaw::IntermediateMddCdf && !cond.inf_before_sup)
        throw std::invalid_argument(
            "estimate_from_records: intermediate_mdd_cdf requires the inf-before-sup filter");
    const bool mean_type = law == McLaw::DurationLtAtAlpha;
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t n_acc = 0;

    for (const DecompRecord& rec : records) {
        if (!accepted(rec, cond))
            continue;
        double sample = 0.0;
        switch (law) {
        case McLaw::SupCdf:
            sample = rec.sup < args.b ? 1.0 : 0.0;
            break;
        case McLaw::JointInfSup:
            sample = (rec.inf > args.a && rec.sup < args.b) ? 1.0 : 0.0;
            break;
        case McLaw::PreSupMddCdf:
            sample = rec.mdd_pre_sup < args.d ? 1.0 : 0.0;
            break;
        case McLaw::PostSupMddSf:
        case McLaw::DurationLtPostSup:
            sample = rec.mdd_post_sup > args.d ? 1.0 : 0.0;
            break;
        case McLaw::PostInfMddSf:
            sample = rec.mdd_post_inf > args.d ? 1.0 : 0.0;
            break;
        case McLaw::PostInfSupCdf:
            sample = (rec.sup_post_inf - rec.inf) <= args.u ? 1.0 : 0.0;
            break;
        case McLaw::IntermediateMddCdf:
            sample = rec.mdd_intermediate < args.d ? 1.0 : 0.0;
            break;
        case McLaw::PostSupMddCdfCond:
            sample = rec.mdd_post_sup < args.d ? 1.0 : 0.0;
            break;
        case McLaw::DurationLtPostSupCond:
            sample = rec.mdd_post_sup > args.d ? 1.0 : 0.0;
            break;
        case McLaw::DurationLtAtAlpha:
            if (!rec.has_alpha)
                throw std::invalid_argument(
                    "estimate_from_records: duration_lt_at_alpha needs StopAtAlphaD records");
            sample = std::exp(-gamma * rec.duration);
            break;
        }
        sum += sample;
        sumsq += sample * sample;
        ++n_acc;
    }

    if (n_acc < 200)
        throw InsufficientSampleError(std::string("insufficient conditional sample for ") +
                                      mc_law_name(law) + ": " + std::to_string(n_acc) +
                                      " accepted paths (need 200)");

    Estimate est;
    est.n_total = records.size();
    est.n_accepted = n_acc;
    const double n = double(n_acc);
    est.value = sum / n;
    double var;
    if (mean_type) {
        var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
    } else {
        var = est.value * (1.0 - est.value);
    }
    est.ci_halfwidth = 1.96 * std::sqrt(var / n);
    return est;
}

Estimate estimate_law(const SimConfig& config, McLaw law, const McArgs& args,
                      const ConditionSpec& cond, unsigned threads) {
    SimConfig cfg = config;
    double decomp_d = 1.0;
    if (law == McLaw::DurationLtAtAlpha) {
        cfg.mode = SimMode::StopAtAlphaD;
        cfg.stop_d = args.d;
        decomp_d = args.d;
    } else if (args.d == args.d) {  // not NaN
        decomp_d = args.d;
    }
    const auto records = simulate_ensemble(cfg, decomp_d, threads);
    return estimate_from_records(records, law, args, cond, cfg.gamma);
}

} // namespace levydd::mc
