#include "../support/oracle_values.hpp"
#include "schottky/errors.hpp"
#include "schottky/hyptrig.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace schottky;
using doctest::Approx;

TEST_CASE("right triangle hypotenuse") {
    CHECK(right_triangle_hyp(1.0, 1.0) == Approx(oracle::kRightTriangleHyp_1_1).epsilon(1e-14));
    CHECK(right_triangle_hyp(0.0, 2.5) == 2.5);
    CHECK(right_triangle_hyp(Interval(1.0), Interval(1.0)).contains(oracle::kRightTriangleHyp_1_1));
    CHECK_THROWS_AS(right_triangle_hyp(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("right triangle angle") {
    CHECK(right_triangle_angle(0.5, 1.0) == Approx(oracle::kRightTriangleAngle_05_1).epsilon(1e-14));
    CHECK(right_triangle_angle(1.0, 1.0) == M_PI_2);
    CHECK_THROWS_AS(right_triangle_angle(2.0, 1.0), DomainError);
    CHECK(right_triangle_angle(Interval(0.5), Interval(1.0)).contains(oracle::kRightTriangleAngle_05_1));
    const Interval straddle = right_triangle_angle(Interval(0.9, 1.1), Interval(1.0));
    CHECK(straddle.contains(M_PI_2));
}

TEST_CASE("pentagon opposite side") {
    CHECK(pentagon_opposite(1.0, 1.0) == Approx(oracle::kPentagon_1_1).epsilon(1e-14));
    CHECK(pentagon_opposite(Interval(1.0), Interval(1.0)).contains(oracle::kPentagon_1_1));
    CHECK_THROWS_AS(pentagon_opposite(0.1, 0.1), DomainError);
    const Interval partial = pentagon_opposite(Interval(0.5, 1.0), Interval(0.5, 1.0));
    CHECK(partial.lo() == 0.0);
    CHECK(partial.contains(oracle::kPentagon_1_1));
}

TEST_CASE("hexagon opposite side") {
    CHECK(hexagon_opposite(1.0, 2.0, 1.0) == Approx(oracle::kHexagon_1_2_1).epsilon(1e-14));
    CHECK(hexagon_opposite(3.0, 0.5, 2.0) == Approx(oracle::kHexagon_3_05_2).epsilon(1e-13));
    CHECK(hexagon_opposite(Interval(1.0), Interval(2.0), Interval(1.0)).contains(oracle::kHexagon_1_2_1));
    CHECK_THROWS_AS(hexagon_opposite(0.1, 0.1, 0.1), DomainError);
}

TEST_CASE("interval hexagon is sound where the relation is not monotone") {
    // With a short connector the argument decreases in a when a > b.
    const Interval box_a(2.8, 3.2);
    const Interval box_c(0.45, 0.55);
    const Interval box_b(1.9, 2.1);
    const Interval enc = hexagon_opposite(box_a, box_c, box_b);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = 2.8 + 0.4 * u(rng);
        const double c = 0.45 + 0.1 * u(rng);
        const double b = 1.9 + 0.2 * u(rng);
        try {
            CHECK(enc.contains(hexagon_opposite(a, c, b)));
        } catch (const DomainError&) {
        }
    }
}

TEST_CASE("log-space evaluation agrees with direct evaluation near the switch") {
    for (double a : {25.0, 29.9, 30.1, 35.0}) {
        const double direct = std::acosh(std::cosh(a) * std::cosh(2.0));
        CHECK(right_triangle_hyp(a, 2.0) == Approx(direct).epsilon(1e-14));
    }
    // cosh(c) = cosh(400)^2 overflows, c = 800 - log 2 + tiny.
    const double big = right_triangle_hyp(400.0, 400.0);
    CHECK(big == Approx(800.0 - std::log(2.0)).epsilon(1e-15));
    CHECK(right_triangle_hyp(Interval(400.0), Interval(400.0)).contains(big));
    const double p = pentagon_opposite(300.0, 300.0);
    CHECK(p == Approx(600.0 - std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("log_cosh, log_sinh and acosh_exp") {
    CHECK(log_cosh(0.0) == 0.0);
    CHECK(log_cosh(2.0) == Approx(std::log(std::cosh(2.0))).epsilon(1e-15));
    CHECK(log_cosh(1000.0) == Approx(1000.0 - std::log(2.0)).epsilon(1e-15));
    CHECK(log_sinh(1000.0) == Approx(1000.0 - std::log(2.0)).epsilon(1e-15));
    CHECK(acosh_exp(std::log(4.0)) == Approx(oracle::kAcosh4).epsilon(1e-14));
    CHECK(acosh_exp(Interval(std::log(4.0))).contains(oracle::kAcosh4));
    CHECK_THROWS_AS(log_sinh(0.0), std::invalid_argument);
}

TEST_CASE("acosh_safe tolerates rounding noise just below one") {
    CHECK(acosh_safe(1.0) == 0.0);
    CHECK(acosh_safe(std::nextafter(1.0, 0.0)) == 0.0);
    CHECK_THROWS_AS(acosh_safe(0.99), DomainError);
    CHECK_THROWS_AS(acosh_safe(Interval(0.99, 2.0)), DomainError);
    const Interval p = acosh_partial(Interval(0.5, 4.0));
    CHECK(p.lo() == 0.0);
    CHECK(p.contains(oracle::kAcosh4));
    CHECK_THROWS_AS(acosh_partial(Interval(0.5, 0.9)), DomainError);
}
