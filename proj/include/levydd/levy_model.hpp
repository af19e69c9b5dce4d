// Spectrally negative Levy models of unbounded variation: Laplace exponent,
// its derivative, the right inverse Phi, and Esscher tilting.
//
// Only finite-activity jump families are provided so that paths can be
// simulated exactly; the jump part is kept in the non-compensated form, i.e.
// `mu` is the total drift and psi(lambda) = mu*lambda + sigma^2 lambda^2 / 2
// + jump_rate * (E[exp(-lambda*xi)] - 1) with xi the (positive) jump size.

#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace levydd {

enum class LevyFamily {
    BrownianDrift,      // no jumps
    ExpJumpDiffusion,   // downward jumps of exponentially distributed size
};

struct LevyModel {
    LevyFamily family = LevyFamily::BrownianDrift;
    double mu = 0.0;         // total drift per unit time
    double sigma = 1.0;      // diffusion volatility, > 0 (unbounded variation)
    double jump_rate = 0.0;  // Poisson intensity of downward jumps
    double jump_mean = 1.0;  // mean jump magnitude, > 0 when jump_rate > 0

    // Throws std::invalid_argument if the parameter set is inconsistent.
    void validate() const;

    static LevyModel brownian(double mu, double sigma);
    static LevyModel exp_jump(double mu, double sigma, double jump_rate, double jump_mean);

    bool operator==(const LevyModel&) const = default;
};

// Short canonical description, e.g. "exp_jump_diffusion mu=1 sigma=1 ...".
std::string describe(const LevyModel& model);

// FNV-1a over the canonical description; used to tag persisted tables.
std::uint64_t model_hash(const LevyModel& model);

// Laplace exponent psi(lambda) = log E[exp(lambda * X_1)], lambda >= 0.
double psi(const LevyModel& model, double lambda);

// Analytic derivative of psi.
double psi_prime(const LevyModel& model, double lambda);

// psi continued to complex arguments (used by transform inversion). The
// rational jump term has its pole at -1/jump_mean on the negative real axis.
std::complex<double> psi_complex(const LevyModel& model, std::complex<double> lambda);

// Right inverse of psi: the largest root of psi(lambda) = gamma, gamma >= 0.
// Bisection-safeguarded Newton on [argmin psi, inf);
// satisfies |psi(phi) - gamma| <= 1e-12 * max(1, gamma).
double phi(const LevyModel& model, double gamma);

// Exponential change of measure with parameter theta >= 0. The tilted
// process is again spectrally negative Levy with exponent
// psi_theta(lambda) = psi(lambda + theta) - psi(theta).
struct TiltedModel {
    LevyModel base;
    double theta = 0.0;

    double psi(double lambda) const;
    double psi_prime(double lambda) const;

    // The tilt of a finite-activity model stays inside the same family:
    // drift mu + sigma^2 theta, jump rate and mean shrunk by 1 + theta*jump_mean.
    LevyModel to_model() const;
};

TiltedModel esscher_tilt(const LevyModel& model, double theta);

} // namespace levydd
