#include "schottky/errors.hpp"
#include "schottky/interval.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace schottky;

TEST_CASE("construction rejects non-finite and reversed endpoints") {
    CHECK_THROWS_AS(Interval(std::nan("")), DomainError);
    CHECK_THROWS_AS(Interval(1.0, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(Interval(2.0, 1.0), DomainError);
    const Interval x(1.0, 2.0);
    CHECK(x.lo() == 1.0);
    CHECK(x.hi() == 2.0);
    CHECK(x.contains(1.5));
}

TEST_CASE("decimal literals are enclosed") {
    const Interval x = Interval::enclose(0.1);
    CHECK(x.lo() < 0.1);
    CHECK(x.hi() > 0.1);
    CHECK(std::nextafter(x.lo(), 1.0) == 0.1);
    const Interval p = Interval::pi();
    CHECK(p.lo() < M_PI);
    CHECK(p.hi() > M_PI);
}

TEST_CASE("exact operations stay degenerate") {
    CHECK((Interval(1.0) + Interval(2.0)).is_degenerate());
    CHECK((Interval(3.0) * Interval(4.0)).is_degenerate());
    CHECK((Interval(1.0) / Interval(4.0)).is_degenerate());
    CHECK(sqrt(Interval(4.0)).is_degenerate());
    CHECK(exp(Interval(0.0)).is_degenerate());
}

TEST_CASE("inexact operations round outward") {
    const Interval third = Interval(1.0) / Interval(3.0);
    CHECK(third.lo() < third.hi());
    CHECK(third.lo() * 3.0 <= 1.0);
    const Interval s = Interval(0.1) + Interval(0.2);
    CHECK(s.contains(0.1 + 0.2));
    CHECK(s.width() > 0);
}

TEST_CASE("division by an interval containing zero is a domain error") {
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(log(Interval(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(acosh(Interval(0.5, 2.0)), DomainError);
}

TEST_CASE("multiplication by sign cases") {
    const Interval a(-2.0, 3.0);
    const Interval b(-5.0, 4.0);
    const Interval p = a * b;
    CHECK(p.lo() == -15.0);
    CHECK(p.hi() == 12.0);
    CHECK(sqr(a).lo() == 0.0);
    CHECK(sqr(a).hi() == 9.0);
}

TEST_CASE("transcendental enclosures contain libm values") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng);
        const double y = x + std::fabs(u(rng)) * 0.01;
        const Interval X(x, y);
        const double m = 0.5 * (x + y);
        CHECK(exp(X).contains(std::exp(m)));
        CHECK(sinh(X).contains(std::sinh(m)));
        CHECK(cosh(X).contains(std::cosh(m)));
        CHECK(tanh(X).contains(std::tanh(m)));
        CHECK(asinh(X).contains(std::asinh(m)));
        CHECK(abs(X).contains(std::fabs(m)));
        if (x > 0) {
            CHECK(log(X).contains(std::log(m)));
            CHECK(sqrt(X).contains(std::sqrt(m)));
            CHECK(acosh(X + 1.0).contains(std::acosh(m + 1.0)));
        }
    }
}

TEST_CASE("cosh of a straddling interval starts at one") {
    const Interval c = cosh(Interval(-1.0, 2.0));
    CHECK(c.lo() == 1.0);
    CHECK(c.hi() >= std::cosh(2.0));
}

TEST_CASE("asin clamps to its domain and sin stays on the monotone branch") {
    const Interval a = asin(Interval(0.5, 1.0));
    CHECK(a.contains(M_PI_2));
    CHECK(a.contains(std::asin(0.5)));
    CHECK(sin(Interval(0.1, 0.2)).contains(std::sin(0.15)));
    CHECK_THROWS_AS(sin(Interval(0.0, 2.0)), DomainError);
}

TEST_CASE("sinhc encloses sinh(x)/x including near zero") {
    for (double x : {0.0, 1e-12, 1e-6, 1e-4, 0.5, 3.0, 40.0}) {
        const double expect = x == 0.0 ? 1.0 : std::sinh(x) / x;
        CHECK(sinhc(Interval(x)).contains(expect));
        CHECK(sinhc(x) == doctest::Approx(expect).epsilon(1e-14));
    }
    const Interval s = sinhc(Interval(-0.5, 0.25));
    CHECK(s.lo() == 1.0);
    CHECK(s.hi() >= std::sinh(0.5) / 0.5);
}

TEST_CASE("exp_neg_recip is continuous at zero") {
    CHECK(exp_neg_recip(0.0) == 0.0);
    const Interval z = exp_neg_recip(Interval(0.0, 0.5));
    CHECK(z.lo() == 0.0);
    CHECK(z.hi() >= std::exp(-2.0));
    CHECK(exp_neg_recip(Interval(1.0)).contains(std::exp(-1.0)));
}

TEST_CASE("min, max and hull") {
    const Interval a(1.0, 3.0);
    const Interval b(2.0, 4.0);
    CHECK(min(a, b).lo() == 1.0);
    CHECK(min(a, b).hi() == 3.0);
    CHECK(max(a, b).lo() == 2.0);
    CHECK(max(a, b).hi() == 4.0);
    CHECK(hull(a, b).lo() == 1.0);
    CHECK(hull(a, b).hi() == 4.0);
}
