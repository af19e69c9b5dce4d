#include "levydd/exit_identities.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace levydd;

namespace {
const GridSpec kGrid{1e-4, 25.0, 256};
const ScaleTable& bm_table() {
    static const ScaleTable t = ScaleTable::closed_form(LevyModel::brownian(0.0, 1.0), 0.5, kGrid);
    return t;
}
const ScaleTable& jump_table() {
    static const ScaleTable t =
        ScaleTable::inverted(LevyModel::exp_jump(1.0, 1.0, 1.0, 1.0), 0.5, kGrid);
    return t;
}
}

TEST_CASE("one-sided identities") {
    const auto& t = bm_table();
    CHECK(one_sided_up(t, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(one_sided_up(t, 0.0) == 1.0);
    CHECK(one_sided_up(t, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(one_sided_down(t, 0.0) == 1.0);
    CHECK(one_sided_down(t, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(one_sided_down(t, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(one_sided_up(t, -1.0), std::domain_error);
    CHECK_THROWS_AS(one_sided_down(t, -1.0), std::domain_error);

    // driftless symmetry across a sweep
    for (double x = 0.05; x < 14.0; x *= 1.4)
        CHECK(one_sided_down(t, x) == doctest::Approx(one_sided_up(t, x)).epsilon(1e-8));
}

TEST_CASE("two-sided exit") {
    const auto& t = bm_table();
    CHECK(two_sided_up(t, 1.0, 2.0) ==
          doctest::Approx(std::sinh(1.0) / std::sinh(2.0)).epsilon(1e-12));
    CHECK(two_sided_up(t, 2.0, 2.0) == 1.0);
    CHECK(two_sided_up(t, 0.0, 2.0) == 0.0);
    CHECK(two_sided_down(t, 0.0, 2.0) == 1.0);
    CHECK(two_sided_down(t, 2.0, 2.0) == 0.0);
    const double expect = std::cosh(1.0) - std::cosh(2.0) * std::sinh(1.0) / std::sinh(2.0);
    CHECK(two_sided_down(t, 1.0, 2.0) == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(two_sided_up(t, 3.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(two_sided_down(t, -0.1, 2.0), std::domain_error);

    std::mt19937 gen(5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const ScaleTable* table : {&bm_table(), &jump_table()}) {
        for (int i = 0; i < 200; ++i) {
            const double b = 0.2 + 7.0 * uni(gen);
            const double x = b * uni(gen);
            const double up = two_sided_up(*table, x, b);
            const double down = two_sided_down(*table, x, b);
            CHECK(up >= 0.0);
            CHECK(up <= 1.0);
            CHECK(down >= -1e-12);
            CHECK(down <= 1.0);
            CHECK(up + down <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("passage above before the drawdown") {
    const auto& t = bm_table();
    const double coth1 = std::cosh(1.0) / std::sinh(1.0);
    CHECK(updown_before_drawdown(t, 1.0, 2.0, 1.0) ==
          doctest::Approx(std::exp(-coth1)).epsilon(1e-12));
    CHECK(updown_before_drawdown(t, 0.0, 2.0, 1.0) == 0.0);
    CHECK(updown_before_drawdown(t, 1.0, 1.0, 1.0) == 1.0);
    CHECK_THROWS_AS(updown_before_drawdown(t, 2.0, 3.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(updown_before_drawdown(t, 0.5, 0.8, 1.0), std::domain_error);

    for (const ScaleTable* table : {&bm_table(), &jump_table()}) {
        // nondecreasing in d, and never above the plain two-sided factor
        const double x = 0.7, b = 3.0;
        double prev = 0.0;
        for (double d = x; d <= b; d += 0.05) {
            const double v = updown_before_drawdown(*table, x, b, d);
            CHECK(v >= prev - 1e-12);
            CHECK(v <= two_sided_up(*table, x, b) + 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("drawdown before passage above") {
    const auto& t = bm_table();
    // gap -> inf limit: Z(d) - gamma W(d)^2 / W'(d) = 1/cosh(1) at d = 1
    CHECK(drawdown_before_up(t, 1e3, 1.0) ==
          doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-10));
    CHECK(drawdown_before_up(t, 0.0, 1.0) == 0.0);
    const double coth1 = std::cosh(1.0) / std::sinh(1.0);
    CHECK(drawdown_before_up(t, 1.0, 1.0) ==
          doctest::Approx(-std::expm1(-coth1) / std::cosh(1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(drawdown_before_up(t, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(drawdown_before_up(t, 1.0, 0.0), std::domain_error);

    std::mt19937 gen(17);
    std::uniform_real_distribution<double> uni(0.05, 6.0);
    for (const ScaleTable* table : {&bm_table(), &jump_table()}) {
        for (int i = 0; i < 100; ++i) {
            const double v = drawdown_before_up(*table, uni(gen), uni(gen));
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}
