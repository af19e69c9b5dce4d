#include "levydd/mc/decompose.hpp"

#include <limits>
#include <stdexcept>

namespace levydd::mc {

namespace {

// max over i in [lo, hi] of running_max - x[i]
double segment_mdd(const std::vector<double>& x, std::size_t lo, std::size_t hi) {
    double run = -std::numeric_limits<double>::infinity();
    double best = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) {
        if (x[i] > run)
            run = x[i];
        if (run - x[i] > best)
            best = run - x[i];
    }
    return best;
}

} // namespace

DecompRecord decompose(const PathRecord& path, double d) {
    if (!(d > 0.0))
        throw std::domain_error("decompose: d must be > 0");
    const auto& t = path.times;
    const auto& x = path.values;
    if (x.empty() || t.size() != x.size())
        throw std::invalid_argument("decompose: empty or inconsistent path");

    const std::size_t n = x.size();
    std::size_t i_sup = 0, i_inf = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] > x[i_sup])
            i_sup = i;  // strict: ties keep the earliest time
        if (x[i] < x[i_inf])
            i_inf = i;
    }

    DecompRecord rec;
    rec.sup = x[i_sup];
    rec.inf = x[i_inf];
    rec.t_sup = t[i_sup];
    rec.t_inf = t[i_inf];
    rec.t_end = t.back();
    rec.inf_before_sup = i_inf < i_sup;

    rec.mdd_total = segment_mdd(x, 0, n - 1);
    rec.mdd_pre_sup = segment_mdd(x, 0, i_sup);
    rec.mdd_post_sup = segment_mdd(x, i_sup, n - 1);
    rec.mdd_post_inf = segment_mdd(x, i_inf, n - 1);
    if (rec.inf_before_sup)
        rec.mdd_intermediate = segment_mdd(x, i_inf, i_sup);

    double sup_pi = x[i_inf];
    for (std::size_t i = i_inf; i < n; ++i)
        if (x[i] > sup_pi)
            sup_pi = x[i];
    rec.sup_post_inf = sup_pi;

    // first passage of the drawdown over d, with the record time of the
    // running max giving kappa
    double run = x[0], run_t = t[0];
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > run) {
            run = x[i];
            run_t = t[i];
        }
        if (run - x[i] > d) {
            rec.has_alpha = true;
            rec.alpha = t[i];
            rec.kappa = run_t;
            rec.duration = rec.alpha - rec.kappa;
            rec.sup_at_alpha = run;
            break;
        }
    }
    return rec;
}

} // namespace levydd::mc
