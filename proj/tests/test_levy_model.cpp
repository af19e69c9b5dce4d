#include "levydd/levy_model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace levydd;

namespace {
const LevyModel kBm = LevyModel::brownian(0.0, 1.0);
const LevyModel kJump = LevyModel::exp_jump(1.0, 1.0, 1.0, 1.0);
}

TEST_CASE("psi closed values") {
    CHECK(psi(LevyModel::brownian(1.0, 2.0), 1.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(psi(kBm, 0.0) == 0.0);
    CHECK(psi(kJump, 0.0) == 0.0);
    // mu=1, sigma=1, rate=1, mean=1 at lambda=1: 1 + 1/2 - 1/2
    CHECK(psi(kJump, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(psi(kBm, -0.1), std::domain_error);
}

TEST_CASE("psi_prime closed values and finite differences") {
    CHECK(psi_prime(LevyModel::brownian(1.0, 2.0), 0.0) == doctest::Approx(1.0));
    CHECK(psi_prime(kBm, 2.0) == doctest::Approx(2.0));
    CHECK(psi_prime(kJump, 1.0) == doctest::Approx(1.75).epsilon(1e-14));
    CHECK_THROWS_AS(psi_prime(kJump, -1.0), std::domain_error);

    std::mt19937 gen(1234);
    std::uniform_real_distribution<double> lam(0.1, 8.0);
    for (const LevyModel& m : {kBm, kJump, LevyModel::exp_jump(-0.5, 2.0, 3.0, 0.4)}) {
        for (int i = 0; i < 50; ++i) {
            const double l = lam(gen);
            const double h = 1e-5 * std::max(1.0, l);
            const double fd = (psi(m, l + h) - psi(m, l - h)) / (2.0 * h);
            CHECK(psi_prime(m, l) == doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("phi solves psi(phi) = gamma") {
    CHECK(phi(kBm, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi(kBm, 0.0) == 0.0);
    // -lambda + lambda^2/2 = 0 has roots {0, 2}; the right inverse takes 2
    CHECK(phi(LevyModel::brownian(-1.0, 1.0), 0.0) == doctest::Approx(2.0).epsilon(1e-12));

    std::mt19937 gen(99);
    std::uniform_real_distribution<double> gam(0.0, 10.0);
    for (const LevyModel& m :
         {kBm, kJump, LevyModel::brownian(1.5, 0.7), LevyModel::exp_jump(-2.0, 1.3, 2.0, 0.8)}) {
        double prev_phi = -1.0, prev_gamma = -1.0;
        for (int i = 0; i < 60; ++i) {
            const double g = gam(gen);
            const double p = phi(m, g);
            CHECK(std::abs(psi(m, p) - g) <= 1e-12 * std::max(1.0, g));
            if (prev_gamma >= 0.0 && g >= prev_gamma)
                CHECK(p >= prev_phi - 1e-12);
            if (prev_gamma < 0.0 || g >= prev_gamma) {
                prev_gamma = g;
                prev_phi = p;
            }
        }
    }
}

TEST_CASE("psi is convex") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> lam(0.0, 6.0);
    for (const LevyModel& m : {kBm, kJump}) {
        for (int i = 0; i < 100; ++i) {
            double l1 = lam(gen), l2 = lam(gen), l3 = lam(gen);
            if (l1 > l2) std::swap(l1, l2);
            if (l2 > l3) std::swap(l2, l3);
            if (l1 > l2) std::swap(l1, l2);
            if (l3 - l2 < 1e-3 || l2 - l1 < 1e-3)
                continue;
            const double s12 = (psi(m, l2) - psi(m, l1)) / (l2 - l1);
            const double s23 = (psi(m, l3) - psi(m, l2)) / (l3 - l2);
            CHECK(s12 <= s23 + 1e-12);
        }
    }
}

TEST_CASE("esscher tilt") {
    // standard BM tilted by theta=1 gains drift 1
    const TiltedModel t = esscher_tilt(kBm, 1.0);
    for (double l : {0.0, 0.5, 1.0, 3.0})
        CHECK(t.psi(l) == doctest::Approx(l + 0.5 * l * l).epsilon(1e-14));
    CHECK(t.psi_prime(0.0) == doctest::Approx(psi_prime(kBm, 1.0)));

    const TiltedModel id = esscher_tilt(kJump, 0.0);
    for (double l : {0.0, 0.7, 2.0})
        CHECK(id.psi(l) == doctest::Approx(psi(kJump, l)).epsilon(1e-14));

    // with theta = phi(gamma) the tilted exponent is psi(lambda + Phi) - gamma
    const double g = 0.8, ph = phi(kJump, g);
    const TiltedModel tp = esscher_tilt(kJump, ph);
    for (double l : {0.0, 0.3, 1.1, 4.0})
        CHECK(tp.psi(l) == doctest::Approx(psi(kJump, l + ph) - g).epsilon(1e-12));
    CHECK(tp.psi(0.0) == doctest::Approx(0.0));

    // the tilt of the finite-activity family stays in the family
    const LevyModel tm = tp.to_model();
    for (double l : {0.0, 0.4, 1.3, 2.7})
        CHECK(psi(tm, l) == doctest::Approx(tp.psi(l)).epsilon(1e-12));
    CHECK_THROWS_AS(esscher_tilt(kBm, -0.5), std::domain_error);
}

TEST_CASE("model validation") {
    LevyModel bad = kBm;
    bad.sigma = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = kBm;
    bad.jump_rate = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = kJump;
    bad.jump_rate = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = kJump;
    bad.jump_mean = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK(model_hash(kBm) != model_hash(kJump));
    CHECK(model_hash(kBm) == model_hash(LevyModel::brownian(0.0, 1.0)));
}
