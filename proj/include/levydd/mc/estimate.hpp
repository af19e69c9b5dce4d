// Empirical counterparts of the drawdown laws: simulate an ensemble of paths,
// decompose each one, and turn the records into frequency or e^{-gamma T}
// estimates with normal 95% confidence intervals. Conditioning on S_T = b or
// I_T = a is realized by acceptance bands; the infimum-before-supremum event
// by filtering.

#pragma once

#include "levydd/mc/decompose.hpp"

#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace levydd::mc {

struct ConditionSpec {
    std::optional<double> sup_level;  // accept when |S_T - sup_level| <= band
    std::optional<double> inf_level;  // accept when |I_T - inf_level| <= band
    bool inf_before_sup = false;
    double band = 0.05;
};

struct Estimate {
    double value = 0.0;
    double ci_halfwidth = 0.0;  // 95% normal CI
    std::uint64_t n_total = 0;
    std::uint64_t n_accepted = 0;
};

struct InsufficientSampleError : std::runtime_error {
    explicit InsufficientSampleError(const std::string& what) : std::runtime_error(what) {}
};

enum class McLaw {
    SupCdf,
    JointInfSup,
    PreSupMddCdf,
    PostSupMddSf,
    PostInfMddSf,
    PostInfSupCdf,
    IntermediateMddCdf,
    PostSupMddCdfCond,
    DurationLtPostSup,
    DurationLtPostSupCond,
    DurationLtAtAlpha,
};

const char* mc_law_name(McLaw law);

// Arguments a law may need; unused fields stay NaN.
struct McArgs {
    double a = std::numeric_limits<double>::quiet_NaN();
    double b = std::numeric_limits<double>::quiet_NaN();
    double d = std::numeric_limits<double>::quiet_NaN();
    double u = std::numeric_limits<double>::quiet_NaN();
};

// Simulate + decompose the whole ensemble. Paths are split into fixed-size
// chunks claimed by worker threads; every record depends only on
// (seed, path_index), so the result is identical for any thread count.
std::vector<DecompRecord> simulate_ensemble(const SimConfig& config, double decomp_d,
                                            unsigned threads = 0);

// Estimate one law from existing records (ensembles are shared between laws).
// Throws InsufficientSampleError when conditioning leaves fewer than 200 paths.
Estimate estimate_from_records(std::span<const DecompRecord> records, McLaw law,
                               const McArgs& args, const ConditionSpec& cond, double gamma);

// One-call form: simulates its own ensemble (StopAtAlphaD mode for the
// duration-at-alpha law, ExpHorizon otherwise).
Estimate estimate_law(const SimConfig& config, McLaw law, const McArgs& args,
                      const ConditionSpec& cond, unsigned threads = 0);

// --threads value, LEVY_DD_THREADS, or hardware concurrency, in that order.
unsigned resolve_threads(unsigned requested);

} // namespace levydd::mc
