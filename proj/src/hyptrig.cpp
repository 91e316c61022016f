#include "schottky/hyptrig.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schottky {

namespace {

constexpr double kVeryNegative = -1e300;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Either cosh(c) itself or, when log_space is set, log(cosh(c)).
template <class T>
struct CoshArg {
    T v;
    bool log_space;
};

// log(1 - e^d) for d < 0.
double log1m_exp(double d) {
    if (d >= 0) throw DomainError("hexagon closing condition fails");
    return d > -0.693 ? std::log(-std::expm1(d)) : std::log1p(-std::exp(d));
}

// Decreasing in d. The part of d at or above 0 maps to an arbitrarily
// negative value, which downstream reads as "cosh(c) near 0".
Interval log1m_exp(const Interval& d) {
    if (d.lo() >= 0) throw DomainError("hexagon closing condition fails");
    auto at = [](double x) { return log1p(-exp(Interval(x))); };
    double hi = at(d.lo()).hi();
    double lo = d.hi() >= 0 ? kVeryNegative : at(d.hi()).lo();
    return Interval(lo, std::max(lo, hi));
}

template <class T>
T log_sinh_t(const T& x) {
    using std::exp;
    using std::log;
    using std::log1p;
    using std::sinh;
    if (upper(x) < 1.0) return log(sinh(x));
    return x + log1p(-exp(-2.0 * x)) - log(T(2.0));
}

template <class T>
T log_cosh_t(const T& x) {
    using std::abs;
    using std::cosh;
    using std::exp;
    using std::log;
    using std::log1p;
    T a = abs(x);
    if (upper(a) < 1.0) return log(cosh(a));
    return a + log1p(exp(-2.0 * a)) - log(T(2.0));
}

bool any_large(double x) { return x > kLogSpaceThreshold; }

template <class T>
CoshArg<T> right_triangle_arg(const T& a, const T& b) {
    using std::cosh;
    if (any_large(upper(a)) || any_large(upper(b))) return {log_cosh_t(a) + log_cosh_t(b), true};
    return {cosh(a) * cosh(b), false};
}

template <class T>
CoshArg<T> pentagon_arg(const T& a, const T& b) {
    using std::sinh;
    if (any_large(upper(a)) || any_large(upper(b))) return {log_sinh_t(a) + log_sinh_t(b), true};
    return {sinh(a) * sinh(b), false};
}

// Uses sinh a sinh b cosh c - cosh a cosh b = 2 sinh a sinh b sinh^2(c/2) - cosh(a - b),
// which avoids cancellation between the two large products.
template <class T>
CoshArg<T> hexagon_arg(const T& a, const T& conn, const T& b) {
    using std::cosh;
    using std::log;
    using std::sinh;
    if (upper(conn) <= 0) throw DomainError("hexagon closing condition fails");
    T half = conn * 0.5;
    if (any_large(upper(a)) || any_large(upper(b)) || any_large(upper(half))) {
        T p = log(T(2.0)) + log_sinh_t(a) + log_sinh_t(b) + 2.0 * log_sinh_t(half);
        T q = log_cosh_t(a - b);
        return {p + log1m_exp(q - p), true};
    }
    T s = sinh(half);
    return {2.0 * sinh(a) * sinh(b) * (s * s) - cosh(a - b), false};
}

double finish(const CoshArg<double>& arg) {
    if (arg.log_space) {
        if (arg.v >= 0) return acosh_exp(arg.v);
        if (arg.v >= -kAcoshUnitSlack) return 0.0;
        throw DomainError("arccosh argument below 1");
    }
    return acosh_safe(arg.v);
}

// Range of c over the part of the argument enclosure that lies in the domain.
Interval finish_partial(const CoshArg<Interval>& arg) {
    if (arg.log_space) {
        if (arg.v.hi() < 0) throw DomainError("arccosh argument below 1");
        return acosh_exp(Interval(std::max(0.0, arg.v.lo()), arg.v.hi()));
    }
    return acosh_partial(arg.v);
}

// Combine the results at the lower and upper corners of an increasing relation.
template <class ArgFn>
Interval monotone_corners(ArgFn arg_at, const char* what) {
    double lo = 0.0;
    try {
        lo = finish_partial(arg_at(false)).lo();
    } catch (const DomainError&) {
        lo = 0.0;
    }
    Interval hi_range;
    try {
        hi_range = finish_partial(arg_at(true));
    } catch (const DomainError&) {
        throw DomainError(what);
    }
    return Interval(std::min(lo, hi_range.hi()), hi_range.hi());
}

Interval corner(const Interval& x, bool upper_side) { return Interval(upper_side ? x.hi() : x.lo()); }

} // namespace

double log_cosh(double x) { return log_cosh_t(x); }

double log_sinh(double x) {
    require(x > 0, "log_sinh requires x > 0");
    return log_sinh_t(x);
}

double acosh_exp(double L) {
    if (L < 0) throw DomainError("acosh_exp of a negative logarithm");
    if (L < 1.0) return std::acosh(std::exp(L));
    return L + std::log1p(std::sqrt(-std::expm1(-2.0 * L)));
}

Interval log_cosh(const Interval& x) {
    Interval m = abs(x);
    return Interval(log_cosh_t(Interval(m.lo())).lo(), log_cosh_t(Interval(m.hi())).hi());
}

Interval log_sinh(const Interval& x) {
    require(x.lo() > 0, "log_sinh requires x > 0");
    return Interval(log_sinh_t(Interval(x.lo())).lo(), log_sinh_t(Interval(x.hi())).hi());
}

Interval acosh_exp(const Interval& L) {
    if (L.lo() < 0) throw DomainError("acosh_exp of a negative logarithm");
    return L + log1p(sqrt(1.0 - exp(-2.0 * L)));
}

double acosh_safe(double x) {
    if (std::isnan(x)) throw DomainError("arccosh of NaN");
    if (x >= 1.0) return std::acosh(x);
    if (x >= 1.0 - kAcoshUnitSlack) return 0.0;
    throw DomainError("arccosh argument below 1");
}

Interval acosh_safe(const Interval& x) {
    if (x.lo() < 1.0) throw DomainError("arccosh argument below 1");
    return acosh(x);
}

Interval acosh_partial(const Interval& x) {
    if (x.hi() < 1.0) throw DomainError("arccosh argument below 1");
    return acosh(Interval(std::max(1.0, x.lo()), x.hi()));
}

double right_triangle_hyp(double a, double b) {
    require(a >= 0 && b >= 0, "right_triangle_hyp requires a, b >= 0");
    if (a == 0) return b;
    if (b == 0) return a;
    return finish(right_triangle_arg(a, b));
}

Interval right_triangle_hyp(const Interval& a, const Interval& b) {
    require(a.lo() >= 0 && b.lo() >= 0, "right_triangle_hyp requires a, b >= 0");
    return monotone_corners(
        [&](bool up) { return right_triangle_arg(corner(a, up), corner(b, up)); }, "right triangle");
}

namespace {

template <class T>
T sin_angle(const T& opposite, const T& hyp) {
    using std::exp;
    using std::sinh;
    if (any_large(upper(hyp))) return exp(log_sinh_t(opposite) - log_sinh_t(hyp));
    return sinh(opposite) / sinh(hyp);
}

} // namespace

double right_triangle_angle(double opposite, double hyp) {
    require(opposite > 0 && hyp > 0, "right_triangle_angle requires positive lengths");
    if (opposite == hyp) return M_PI_2;
    if (opposite > hyp) throw DomainError("sinh ratio exceeds 1");
    return std::asin(std::min(1.0, sin_angle(opposite, hyp)));
}

Interval right_triangle_angle(const Interval& opposite, const Interval& hyp) {
    require(opposite.lo() > 0 && hyp.lo() > 0, "right_triangle_angle requires positive lengths");
    // Increasing in the opposite side, decreasing in the hypotenuse.
    if (opposite.lo() > hyp.hi()) throw DomainError("sinh ratio exceeds 1");
    const Interval half_pi = Interval::pi() * 0.5;
    double hi = half_pi.hi();
    if (opposite.hi() < hyp.lo()) {
        hi = asin(sin_angle(Interval(opposite.hi()), Interval(hyp.lo()))).hi();
    }
    double lo = 0.0;
    if (opposite.lo() == hyp.hi()) {
        lo = half_pi.lo();
    } else {
        lo = asin(sin_angle(Interval(opposite.lo()), Interval(hyp.hi()))).lo();
    }
    return Interval(std::min(lo, hi), hi);
}

double pentagon_opposite(double a, double b) {
    require(a > 0 && b > 0, "pentagon_opposite requires a, b > 0");
    return finish(pentagon_arg(a, b));
}

Interval pentagon_opposite(const Interval& a, const Interval& b) {
    require(a.lo() > 0 && b.lo() > 0, "pentagon_opposite requires a, b > 0");
    return monotone_corners([&](bool up) { return pentagon_arg(corner(a, up), corner(b, up)); },
                            "right-angled pentagon does not exist");
}

double hexagon_opposite(double a, double connector, double b) {
    require(a > 0 && b > 0 && connector >= 0, "hexagon_opposite requires a, b > 0 and connector >= 0");
    return finish(hexagon_arg(a, connector, b));
}

Interval hexagon_opposite(const Interval& a, const Interval& connector, const Interval& b) {
    require(a.lo() > 0 && b.lo() > 0 && connector.lo() >= 0,
            "hexagon_opposite requires a, b > 0 and connector >= 0");
    // d/da of the argument is cosh a sinh b cosh c - sinh a cosh b, which is
    // nonnegative iff cosh c >= tanh a / tanh b (symmetrically in b). The
    // corner rule needs that on the whole box; otherwise use the natural
    // extension.
    const Interval cc = cosh(Interval(connector.lo()));
    const bool increasing = (cc * tanh(Interval(b.lo()))).lo() >= tanh(Interval(a.hi())).hi() &&
                            (cc * tanh(Interval(a.lo()))).lo() >= tanh(Interval(b.hi())).hi();
    if (!increasing) {
        try {
            return finish_partial(hexagon_arg(a, connector, b));
        } catch (const DomainError&) {
            throw DomainError("no hexagon enclosure on this box");
        }
    }
    return monotone_corners(
        [&](bool up) { return hexagon_arg(corner(a, up), corner(connector, up), corner(b, up)); },
        "right-angled hexagon does not exist");
}

} // namespace schottky
