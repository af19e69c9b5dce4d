// Per-path decomposition at the extremes: first argmax/argmin times, segment
// maximum drawdowns, the post-infimum supremum, and the drawdown
// first-passage triple (alpha_d, kappa, duration).

#pragma once

#include "levydd/mc/simulate.hpp"

namespace levydd::mc {

struct DecompRecord {
    double sup = 0.0, inf = 0.0;     // S_T, I_T (path includes X_0 = 0)
    double t_sup = 0.0, t_inf = 0.0; // H_S, H_I, earliest attain times
    double mdd_total = 0.0;
    double mdd_pre_sup = 0.0;   // max drawdown on [0, H_S]
    double mdd_post_sup = 0.0;  // max drawdown on [H_S, T]
    double mdd_post_inf = 0.0;  // max drawdown on [H_I, T]
    double mdd_intermediate = 0.0;  // max drawdown on [H_I, H_S]; valid when inf_before_sup
    bool inf_before_sup = false;
    double sup_post_inf = 0.0;  // sup of X over [H_I, T]
    // drawdown first passage over level d; has_alpha false when never exceeded
    bool has_alpha = false;
    double alpha = 0.0;         // first time with running max - X > d
    double kappa = 0.0;         // first time the running max reached its pre-alpha value
    double duration = 0.0;      // alpha - kappa
    double sup_at_alpha = 0.0;  // running max at alpha
    double t_end = 0.0;
};

DecompRecord decompose(const PathRecord& path, double d);

} // namespace levydd::mc
