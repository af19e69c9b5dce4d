#include "levydd/levy_model.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace levydd {

void LevyModel::validate() const {
    if (!(sigma > 0.0))
        throw std::invalid_argument("LevyModel: sigma must be > 0 (unbounded variation)");
    if (jump_rate < 0.0)
        throw std::invalid_argument("LevyModel: jump_rate must be >= 0");
    if (family == LevyFamily::BrownianDrift && jump_rate != 0.0)
        throw std::invalid_argument("LevyModel: BrownianDrift requires jump_rate == 0");
    if (family == LevyFamily::ExpJumpDiffusion) {
        if (jump_rate == 0.0)
            throw std::invalid_argument("LevyModel: ExpJumpDiffusion requires jump_rate > 0");
        if (!(jump_mean > 0.0))
            throw std::invalid_argument("LevyModel: jump_mean must be > 0");
    }
}

LevyModel LevyModel::brownian(double mu, double sigma) {
    LevyModel m{LevyFamily::BrownianDrift, mu, sigma, 0.0, 1.0};
    m.validate();
    return m;
}

LevyModel LevyModel::exp_jump(double mu, double sigma, double jump_rate, double jump_mean) {
    LevyModel m{LevyFamily::ExpJumpDiffusion, mu, sigma, jump_rate, jump_mean};
    m.validate();
    return m;
}

std::string describe(const LevyModel& model) {
    char buf[160];
    const char* name = model.family == LevyFamily::BrownianDrift ? "brownian_drift"
                                                                 : "exp_jump_diffusion";
    std::snprintf(buf, sizeof buf, "%s mu=%.17g sigma=%.17g jump_rate=%.17g jump_mean=%.17g",
                  name, model.mu, model.sigma, model.jump_rate, model.jump_mean);
    return buf;
}

std::uint64_t model_hash(const LevyModel& model) {
    const std::string s = describe(model);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

double psi(const LevyModel& model, double lambda) {
    if (lambda < 0.0)
        throw std::domain_error("psi: lambda must be >= 0");
    double v = model.mu * lambda + 0.5 * model.sigma * model.sigma * lambda * lambda;
    if (model.jump_rate > 0.0) {
        // E[e^{-lambda xi}] - 1 for xi ~ Exp(mean) equals -lambda*mean/(1+lambda*mean)
        v -= model.jump_rate * lambda * model.jump_mean / (1.0 + lambda * model.jump_mean);
    }
    return v;
}

double psi_prime(const LevyModel& model, double lambda) {
    if (lambda < 0.0)
        throw std::domain_error("psi_prime: lambda must be >= 0");
    double v = model.mu + model.sigma * model.sigma * lambda;
    if (model.jump_rate > 0.0) {
        const double den = 1.0 + lambda * model.jump_mean;
        v -= model.jump_rate * model.jump_mean / (den * den);
    }
    return v;
}

std::complex<double> psi_complex(const LevyModel& model, std::complex<double> lambda) {
    std::complex<double> v = model.mu * lambda + 0.5 * model.sigma * model.sigma * lambda * lambda;
    if (model.jump_rate > 0.0)
        v -= model.jump_rate * lambda * model.jump_mean / (1.0 + lambda * model.jump_mean);
    return v;
}

namespace {

// psi' is strictly increasing; returns its zero, i.e. the argmin of psi.
double psi_argmin(const LevyModel& model) {
    if (psi_prime(model, 0.0) >= 0.0)
        return 0.0;
    double hi = 1.0;
    while (psi_prime(model, hi) < 0.0)
        hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (psi_prime(model, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, hi))
            break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double phi(const LevyModel& model, double gamma) {
    if (gamma < 0.0)
        throw std::domain_error("phi: gamma must be >= 0");
    const double tol = 1e-12 * std::max(1.0, gamma);

    double lo = psi_argmin(model);
    if (std::abs(psi(model, lo) - gamma) <= tol)
        return lo;

    // psi is increasing on [lo, inf) and -> inf; overshoot by doubling.
    double hi = std::max(2.0 * lo, 1.0);
    while (psi(model, hi) < gamma)
        hi *= 2.0;

    double x = hi;
    for (int i = 0; i < 200; ++i) {
        const double f = psi(model, x) - gamma;
        if (std::abs(f) <= tol)
            return x;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        const double fp = psi_prime(model, x);
        double next = x - f / fp;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);  // Newton left the bracket
        x = next;
    }
    return x;
}

double TiltedModel::psi(double lambda) const {
    return levydd::psi(base, lambda + theta) - levydd::psi(base, theta);
}

double TiltedModel::psi_prime(double lambda) const {
    return levydd::psi_prime(base, lambda + theta);
}

LevyModel TiltedModel::to_model() const {
    LevyModel m = base;
    m.mu = base.mu + base.sigma * base.sigma * theta;
    if (base.jump_rate > 0.0) {
        const double shrink = 1.0 + theta * base.jump_mean;
        m.jump_rate = base.jump_rate / shrink;
        m.jump_mean = base.jump_mean / shrink;
    }
    m.validate();
    return m;
}

TiltedModel esscher_tilt(const LevyModel& model, double theta) {
    if (theta < 0.0)
        throw std::domain_error("esscher_tilt: theta must be >= 0");
    model.validate();
    return TiltedModel{model, theta};
}

} // namespace levydd
