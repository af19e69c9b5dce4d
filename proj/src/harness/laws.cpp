#include "levydd/harness/laws.hpp"

#include <cmath>
#include <stdexcept>

namespace levydd::harness {

namespace {

double arg(const ArgMap& m, const char* name) {
    const auto it = m.find(name);
    if (it == m.end())
        throw std::invalid_argument(std::string("law argument missing: ") + name);
    return it->second;
}

std::optional<double> arg_opt(const ArgMap& m, const char* name) {
    const auto it = m.find(name);
    return it == m.end() ? std::nullopt : std::optional<double>(it->second);
}

mc::ConditionSpec no_condition(const ArgMap&, double) { return {}; }

mc::ConditionSpec sup_band(const ArgMap& a, double band) {
    mc::ConditionSpec c;
    c.sup_level = arg(a, "b");
    c.band = band;
    return c;
}

mc::ConditionSpec inf_band_opt(const ArgMap& a, double band) {
    mc::ConditionSpec c;
    c.inf_level = arg_opt(a, "a");  // conditioning level is optional here
    c.band = band;
    return c;
}

mc::ConditionSpec both_bands_filtered(const ArgMap& a, double band) {
    mc::ConditionSpec c;
    c.sup_level = arg(a, "b");
    c.inf_level = arg(a, "a");
    c.inf_before_sup = true;
    c.band = band;
    return c;
}

std::vector<LawEntry> build_registry() {
    std::vector<LawEntry> reg;

    reg.push_back({"sup_cdf", LawKind::Cdf, {"b"}, "b", false, mc::McLaw::SupCdf, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return sup_cdf(*t.table, arg(a, "b")).value;
                   },
                   no_condition});

    reg.push_back({"joint_inf_sup", LawKind::Cdf, {"a", "b"}, "b", false, mc::McLaw::JointInfSup,
                   false,
                   [](const LawTables& t, const ArgMap& a) {
                       return joint_inf_sup(*t.table, arg(a, "a"), arg(a, "b")).value;
                   },
                   no_condition});

    reg.push_back({"pre_sup_mdd_cdf", LawKind::Cdf, {"b", "d"}, "d", false,
                   mc::McLaw::PreSupMddCdf, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return pre_sup_mdd_cdf(*t.table, arg(a, "b"), arg(a, "d")).value;
                   },
                   sup_band});

    reg.push_back({"post_sup_mdd_sf", LawKind::SurvivalFunction, {"d"}, "d", false,
                   mc::McLaw::PostSupMddSf, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return post_sup_mdd_sf(*t.table, arg(a, "d")).value;
                   },
                   no_condition});

    reg.push_back({"post_inf_mdd_sf", LawKind::SurvivalFunction, {"d"}, "d", false,
                   mc::McLaw::PostInfMddSf, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return post_inf_mdd_sf(*t.table, arg(a, "d")).value;
                   },
                   no_condition});

    reg.push_back({"post_inf_sup_cdf", LawKind::Cdf, {"u"}, "u", false, mc::McLaw::PostInfSupCdf,
                   false,
                   [](const LawTables& t, const ArgMap& a) {
                       return post_inf_sup_cdf(*t.table, arg(a, "u")).value;
                   },
                   inf_band_opt});

    reg.push_back({"intermediate_mdd_cdf", LawKind::Cdf, {"a", "b", "d"}, "d", false,
                   mc::McLaw::IntermediateMddCdf, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return intermediate_mdd_cdf(*t.table, arg(a, "b") - arg(a, "a"),
                                                   arg(a, "d")).value;
                   },
                   both_bands_filtered});

    reg.push_back({"post_sup_mdd_cdf_cond", LawKind::Cdf, {"a", "b", "d"}, "d", false,
                   mc::McLaw::PostSupMddCdfCond, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return post_sup_mdd_cdf_cond(*t.table, arg(a, "b") - arg(a, "a"),
                                                    arg(a, "d")).value;
                   },
                   both_bands_filtered});

    reg.push_back({"duration_lt_post_sup", LawKind::LaplaceTransform, {"d"}, "d", false,
                   mc::McLaw::DurationLtPostSup, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return duration_lt_post_sup(*t.table, arg(a, "d")).value;
                   },
                   no_condition});

    reg.push_back({"duration_lt_post_sup_cond", LawKind::LaplaceTransform, {"a", "b", "d"}, "d",
                   false, mc::McLaw::DurationLtPostSupCond, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return duration_lt_post_sup_cond(*t.table, arg(a, "b") - arg(a, "a"),
                                                        arg(a, "d")).value;
                   },
                   both_bands_filtered});

    reg.push_back({"duration_lt_at_alpha", LawKind::LaplaceTransform, {"d"}, "d", true,
                   mc::McLaw::DurationLtAtAlpha, true,
                   [](const LawTables& t, const ArgMap& a) {
                       return duration_lt_at_alpha(*t.table0, *t.table, arg(a, "d")).value;
                   },
                   no_condition});

    const auto h_entry = [](const char* id, HVariant variant,
                            std::vector<std::string> req) -> LawEntry {
        return {id, LawKind::HFunction, std::move(req), "x", false, std::nullopt, false,
                [variant](const LawTables& t, const ArgMap& a) {
                    HArgs h;
                    h.x = arg(a, "x");
                    if (const auto v = arg_opt(a, "a")) h.a = *v;
                    if (const auto v = arg_opt(a, "b")) h.b = *v;
                    if (const auto v = arg_opt(a, "m")) h.m = *v;
                    if (const auto v = arg_opt(a, "d")) h.d = *v;
                    return h_function(*t.table, variant, h).value;
                },
                no_condition};
    };
    reg.push_back(h_entry("h_pre_sup", HVariant::PreSup, {"b", "x"}));
    reg.push_back(h_entry("h_post_sup", HVariant::PostSup, {"b", "x"}));
    reg.push_back(h_entry("h_post_inf", HVariant::PostInf, {"a", "x"}));
    reg.push_back(h_entry("h_intermediate", HVariant::Intermediate, {"a", "b", "x"}));
    reg.push_back(h_entry("h_post_sup_cond", HVariant::PostSupCond, {"a", "b", "x"}));
    // the conditioning before alpha_d is rate-free: W'/W of the 0-rate table
    reg.push_back({"h_post_kappa", LawKind::HFunction, {"m", "x", "d"}, "x", true, std::nullopt,
                   false,
                   [](const LawTables& t, const ArgMap& a) {
                       HArgs h;
                       h.x = arg(a, "x");
                       h.m = arg(a, "m");
                       h.d = arg(a, "d");
                       return h_function(*t.table0, HVariant::PostKappa, h).value;
                   },
                   no_condition});

    return reg;
}

std::vector<LawEntry> build_negative_controls() {
    std::vector<LawEntry> reg;
    // known-bad algebraic variants; the verifier must reject these
    reg.push_back({"intermediate_mdd_cdf_alt", LawKind::Cdf, {"a", "b", "d"}, "d", false,
                   mc::McLaw::IntermediateMddCdf, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return intermediate_mdd_cdf_alt(*t.table, arg(a, "b") - arg(a, "a"),
                                                       arg(a, "d"));
                   },
                   both_bands_filtered});
    reg.push_back({"duration_lt_post_sup_alt", LawKind::LaplaceTransform, {"d"}, "d", false,
                   mc::McLaw::DurationLtPostSup, false,
                   [](const LawTables& t, const ArgMap& a) {
                       return duration_lt_post_sup_alt(*t.table, arg(a, "d"));
                   },
                   no_condition});
    return reg;
}

} // namespace

const std::vector<LawEntry>& law_registry(bool include_negative_controls) {
    static const std::vector<LawEntry> base = build_registry();
    static const std::vector<LawEntry> full = [] {
        auto v = build_registry();
        const auto extra = build_negative_controls();
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
    }();
    return include_negative_controls ? full : base;
}

const LawEntry* find_law(const std::string& id, bool include_negative_controls) {
    for (const LawEntry& e : law_registry(include_negative_controls))
        if (e.id == id)
            return &e;
    return nullptr;
}

std::string missing_argument(const LawEntry& law, const ArgMap& args) {
    for (const std::string& name : law.required)
        if (!args.count(name))
            return name;
    return "";
}

mc::McArgs to_mc_args(const ArgMap& args) {
    mc::McArgs m;
    if (const auto it = args.find("a"); it != args.end()) m.a = it->second;
    if (const auto it = args.find("b"); it != args.end()) m.b = it->second;
    if (const auto it = args.find("d"); it != args.end()) m.d = it->second;
    if (const auto it = args.find("u"); it != args.end()) m.u = it->second;
    return m;
}

} // namespace levydd::harness
