#include "levydd/drawdown_laws.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace levydd {

namespace {

void require_positive_gamma(const ScaleTable& t, const char* who) {
    if (!(t.gamma() > 0.0))
        throw std::domain_error(std::string(who) + ": requires a table with gamma > 0");
}

LawValue checked(LawKind kind, double value, const char* id) {
    if (!(value >= -1e-9 && value <= 1.0 + 1e-9))
        throw std::runtime_error(std::string("law value outside [0,1]: ") + id + " = " +
                                 std::to_string(value));
    return LawValue{kind, value, id};
}

double w_ratio(const ScaleTable& t, double x, double y) {
    if (x == y)
        return 1.0;
    if (x == 0.0)
        return 0.0;
    return std::exp(t.log_w(x) - t.log_w(y));
}

double wprime_over_w(const ScaleTable& t, double d) {
    return t.phi_gamma() + t.w_tilted_prime(d) / t.w_tilted(d);
}

// e^{-Phi u} g(u) for g(u) = (Z(u)-1) W'(u)/W(u) - gamma W(u); bounded and
// cancellation-safe, ~ -Phi e^{-Phi u} for large u
double g_tilted(const ScaleTable& t, double u) {
    const double wt = t.w_tilted(u), wtp = t.w_tilted_prime(u);
    const double zt = t.z_minus_one_tilted(u);
    return t.phi_gamma() * zt + zt * wtp / wt - t.gamma() * wt;
}

// P_x{T < tau_a^- ^ tau_b^+} in gap coordinates xa = x-a, ba = b-a; shared by
// the joint sup/inf law (xa = -a) and the conditioned post-supremum h-function
double stay_prob(const ScaleTable& t, double xa, double ba) {
    return (t.sup_defect(xa) - t.sup_defect(ba) * w_ratio(t, xa, ba)) / t.phi_gamma();
}

} // namespace

const char* law_kind_name(LawKind kind) {
    switch (kind) {
    case LawKind::Cdf: return "cdf";
    case LawKind::SurvivalFunction: return "sf";
    case LawKind::LaplaceTransform: return "lt";
    case LawKind::HFunction: return "h";
    }
    return "?";
}

LawValue sup_cdf(const ScaleTable& table, double b) {
    require_positive_gamma(table, "sup_cdf");
    if (b < 0.0)
        throw std::domain_error("sup_cdf: b must be >= 0");
    return checked(LawKind::Cdf, -std::expm1(-table.phi_gamma() * b), "sup_cdf");
}

LawValue joint_inf_sup(const ScaleTable& table, double a, double b) {
    require_positive_gamma(table, "joint_inf_sup");
    if (!(a < 0.0) || !(b > 0.0))
        throw std::domain_error("joint_inf_sup: need a < 0 < b");
    return checked(LawKind::Cdf, stay_prob(table, -a, b - a), "joint_inf_sup");
}

LawValue pre_sup_mdd_cdf(const ScaleTable& table, double b, double d) {
    require_positive_gamma(table, "pre_sup_mdd_cdf");
    if (!(b > 0.0) || !(d > 0.0))
        throw std::domain_error("pre_sup_mdd_cdf: need b > 0 and d > 0");
    // W'(d)/W(d) - Phi is exactly the tilted ratio Wt'(d)/Wt(d)
    const double rate = table.w_tilted_prime(d) / table.w_tilted(d);
    return checked(LawKind::Cdf, std::exp(-b * rate), "pre_sup_mdd_cdf");
}

LawValue post_sup_mdd_sf(const ScaleTable& table, double d) {
    require_positive_gamma(table, "post_sup_mdd_sf");
    if (!(d > 0.0))
        throw std::domain_error("post_sup_mdd_sf: need d > 0");
    const double g = std::exp(table.phi_gamma() * d) * g_tilted(table, d);
    return checked(LawKind::SurvivalFunction, 1.0 + g / table.phi_gamma(), "post_sup_mdd_sf");
}

LawValue post_inf_mdd_sf(const ScaleTable& table, double d) {
    require_positive_gamma(table, "post_inf_mdd_sf");
    if (!(d > 0.0))
        throw std::domain_error("post_inf_mdd_sf: need d > 0");
    // 1 - Phi W/W' = Wt' / (Phi Wt + Wt')
    const double wt = table.w_tilted(d), wtp = table.w_tilted_prime(d);
    return checked(LawKind::SurvivalFunction, wtp / (table.phi_gamma() * wt + wtp),
                   "post_inf_mdd_sf");
}

LawValue post_inf_sup_cdf(const ScaleTable& table, double u) {
    require_positive_gamma(table, "post_inf_sup_cdf");
    if (!(u > 0.0))
        throw std::domain_error("post_inf_sup_cdf: need u > 0");
    // (Z-1)/W -> u/2 near zero; switch to the limit below the 0/0 region
    if (u < 1e-4)
        return checked(LawKind::Cdf, table.phi_gamma() * u / 2.0, "post_inf_sup_cdf");
    const double defect = table.sup_defect(u) * std::exp(-table.log_w(u)) / table.gamma();
    return checked(LawKind::Cdf, 1.0 - defect, "post_inf_sup_cdf");
}

LawValue intermediate_mdd_cdf(const ScaleTable& table, double gap, double d) {
    require_positive_gamma(table, "intermediate_mdd_cdf");
    if (!(gap > 0.0) || !(d > 0.0) || d > gap)
        throw std::domain_error("intermediate_mdd_cdf: need 0 < d <= gap");
    if (d == gap)
        return LawValue{LawKind::Cdf, 1.0, "intermediate_mdd_cdf"};
    // the Phi terms cancel between the W-ratio and the exponent
    const double log_val = std::log(table.w_tilted(gap)) - std::log(table.w_tilted(d)) -
                           (gap - d) * table.w_tilted_prime(d) / table.w_tilted(d);
    return checked(LawKind::Cdf, std::exp(log_val), "intermediate_mdd_cdf");
}

LawValue post_sup_mdd_cdf_cond(const ScaleTable& table, double gap, double d) {
    require_positive_gamma(table, "post_sup_mdd_cdf_cond");
    if (!(gap > 0.0) || !(d > 0.0) || d > gap)
        throw std::domain_error("post_sup_mdd_cdf_cond: need 0 < d <= gap");
    if (d == gap)
        return LawValue{LawKind::Cdf, 1.0, "post_sup_mdd_cdf_cond"};
    const double ratio = std::exp(table.phi_gamma() * (d - gap)) * g_tilted(table, d) /
                         g_tilted(table, gap);
    return checked(LawKind::Cdf, ratio, "post_sup_mdd_cdf_cond");
}

LawValue duration_lt_post_sup(const ScaleTable& table, double d) {
    LawValue v = post_sup_mdd_sf(table, d);
    return LawValue{LawKind::LaplaceTransform, v.value, "duration_lt_post_sup"};
}

LawValue duration_lt_post_sup_cond(const ScaleTable& table, double gap, double d) {
    LawValue v = post_sup_mdd_cdf_cond(table, gap, d);
    return checked(LawKind::LaplaceTransform, 1.0 - v.value, "duration_lt_post_sup_cond");
}

LawValue duration_lt_at_alpha(const ScaleTable& zero_gamma_table, const ScaleTable& table,
                              double d) {
    require_positive_gamma(table, "duration_lt_at_alpha");
    if (zero_gamma_table.gamma() != 0.0)
        throw std::invalid_argument("duration_lt_at_alpha: first table must have gamma = 0");
    if (model_hash(zero_gamma_table.model()) != model_hash(table.model()))
        throw std::invalid_argument("duration_lt_at_alpha: tables built from different models");
    if (!(d > 0.0))
        throw std::domain_error("duration_lt_at_alpha: need d > 0");
    // W0/W0' in tilted pieces of the gamma = 0 table (its own Phi may be > 0)
    const double wt0 = zero_gamma_table.w_tilted(d);
    const double wtp0 = zero_gamma_table.w_tilted_prime(d);
    const double w_over_wp = wt0 / (zero_gamma_table.phi_gamma() * wt0 + wtp0);
    // (Z W' - gamma W^2)/W = g + W'/W
    const double factor = std::exp(table.phi_gamma() * d) * g_tilted(table, d) +
                          wprime_over_w(table, d);
    return checked(LawKind::LaplaceTransform, w_over_wp * factor, "duration_lt_at_alpha");
}

LawValue h_function(const ScaleTable& table, HVariant variant, const HArgs& args) {
    const double ph = table.phi_gamma();
    switch (variant) {
    case HVariant::PreSup:
        if (args.x > args.b)
            throw std::domain_error("h_function(PreSup): need x <= b");
        return checked(LawKind::HFunction, std::exp(-ph * (args.b - args.x)), "h_pre_sup");
    case HVariant::PostSup:
        if (args.x > args.b)
            throw std::domain_error("h_function(PostSup): need x <= b");
        return checked(LawKind::HFunction, -std::expm1(-ph * (args.b - args.x)), "h_post_sup");
    case HVariant::PostInf:
        require_positive_gamma(table, "h_function(PostInf)");
        if (args.x < args.a)
            throw std::domain_error("h_function(PostInf): need x >= a");
        return checked(LawKind::HFunction, 1.0 - table.down_crossing_lt(args.x - args.a),
                       "h_post_inf");
    case HVariant::Intermediate: {
        if (args.x < args.a || args.x > args.b)
            throw std::domain_error("h_function(Intermediate): need a <= x <= b");
        if (args.x == args.a)
            return LawValue{LawKind::HFunction, 0.0, "h_intermediate"};
        const double v = std::exp(-ph * (args.b - args.x) + table.log_w(args.x - args.a) -
                                  table.log_w(args.b - args.a));
        return checked(LawKind::HFunction, v, "h_intermediate");
    }
    case HVariant::PostSupCond:
        require_positive_gamma(table, "h_function(PostSupCond)");
        if (args.x < args.a || args.x > args.b)
            throw std::domain_error("h_function(PostSupCond): need a <= x <= b");
        return checked(LawKind::HFunction, stay_prob(table, args.x - args.a, args.b - args.a),
                       "h_post_sup_cond");
    case HVariant::PostKappa: {
        if (args.x > args.m)
            throw std::domain_error("h_function(PostKappa): need x <= m");
        if (!(args.d > 0.0))
            throw std::domain_error("h_function(PostKappa): need d > 0");
        const double v = -std::expm1(-(args.m - args.x) * wprime_over_w(table, args.d));
        return checked(LawKind::HFunction, v, "h_post_kappa");
    }
    }
    throw std::logic_error("h_function: unknown variant");
}

double intermediate_mdd_cdf_alt(const ScaleTable& table, double gap, double d) {
    require_positive_gamma(table, "intermediate_mdd_cdf_alt");
    if (!(gap > 0.0) || !(d > 0.0) || d > gap)
        throw std::domain_error("intermediate_mdd_cdf_alt: need 0 < d <= gap");
    const double exponent = wprime_over_w(table, d) - table.phi_gamma() * table.w(d) +
                            table.phi_gamma();
    return std::exp(table.log_w(gap) - table.log_w(d) - (gap - d) * exponent);
}

double duration_lt_post_sup_alt(const ScaleTable& table, double d) {
    require_positive_gamma(table, "duration_lt_post_sup_alt");
    if (!(d > 0.0))
        throw std::domain_error("duration_lt_post_sup_alt: need d > 0");
    const double ph = table.phi_gamma();
    return 1.0 - table.z(d) * table.w_prime(d) / (ph * table.w(d)) -
           table.gamma() * table.w(d) / ph;
}

} // namespace levydd
