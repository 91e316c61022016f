#pragma once

#include <cmath>
#include <iosfwd>
#include <type_traits>

namespace schottky {

// Closed real interval [lo, hi] with finite endpoints.
//
// Every operation returns an enclosure of the exact image. Basic arithmetic
// detects its rounding error with error-free transformations and steps one
// ulp outward only on the side(s) where rounding may have occurred.
// Library transcendentals are not correctly rounded, so their results are
// widened by kTranscendentalUlps on both sides (exact special points such as
// exp(0) excepted).
class Interval {
public:
    static constexpr int kTranscendentalUlps = 4;

    constexpr Interval() = default;
    // Degenerate interval. Implicit so that generic formulas written for
    // double also accept Interval (e.g. `x * 2.0`).
    Interval(double x);  // NOLINT(google-explicit-constructor)
    Interval(double lo, double hi);

    // Smallest enclosure of a decimal constant that was rounded to `x`,
    // i.e. [pred(x), succ(x)]. Use for literals like 0.66 or 3.1.
    static Interval enclose(double x);
    static Interval pi();
    static Interval hull(double a, double b);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
    double width() const noexcept { return hi_ - lo_; }
    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool is_degenerate() const noexcept { return lo_ == hi_; }

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

private:
    struct Unchecked {};
    Interval(double lo, double hi, Unchecked) : lo_(lo), hi_(hi) {}
    friend Interval make_unchecked(double lo, double hi);

    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator-(const Interval& x);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval log1p(const Interval& x);
Interval sinh(const Interval& x);
Interval cosh(const Interval& x);
Interval tanh(const Interval& x);
Interval asinh(const Interval& x);
// Strict: throws DomainError unless x.lo >= 1. The partial-domain variant
// lives in hyptrig::acosh_safe.
Interval acosh(const Interval& x);
Interval asin(const Interval& x);
Interval atanh(const Interval& x);
// Restricted to [-pi/2, pi/2] where sin is monotone.
Interval sin(const Interval& x);
Interval abs(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// sinh(x)/x, extended by 1 at x = 0.
Interval sinhc(const Interval& x);
double sinhc(double x);

// exp(-1/r) for r >= 0, extended by 0 at r = 0. Used to compactify
// unbounded length parameters.
Interval exp_neg_recip(const Interval& r);
double exp_neg_recip(double r);

std::ostream& operator<<(std::ostream& os, const Interval& x);

// Generic-formula helpers: a decimal literal as a double, or as its
// rigorous enclosure.
template <class T>
inline T lit(double x) {
    if constexpr (std::is_same_v<T, Interval>) {
        return Interval::enclose(x);
    } else {
        return x;
    }
}

template <class T>
inline T pi_v() {
    if constexpr (std::is_same_v<T, Interval>) {
        return Interval::pi();
    } else {
        return M_PI;
    }
}

inline double lower(double x) { return x; }
inline double upper(double x) { return x; }
inline double lower(const Interval& x) { return x.lo(); }
inline double upper(const Interval& x) { return x.hi(); }

template <class T>
concept Real = std::is_same_v<T, double> || std::is_same_v<T, Interval>;

} // namespace schottky
