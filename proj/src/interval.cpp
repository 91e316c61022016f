#include "schottky/interval.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace schottky {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

double down_n(double x, int n) {
    for (int i = 0; i < n; ++i) x = down(x);
    return x;
}
double up_n(double x, int n) {
    for (int i = 0; i < n; ++i) x = up(x);
    return x;
}

// Rounded value r of an operation plus the sign of (exact - r).
struct Rounded {
    double r;
    int err_sign;
};

Rounded two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, (err > 0) - (err < 0)};
}

Rounded two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, (err > 0) - (err < 0)};
}

// a / b with b != 0: sign(a/b - q) = sign((a - q*b) / b).
Rounded two_div(double a, double b) {
    double q = a / b;
    double res = -std::fma(q, b, -a);
    int s = (res > 0) - (res < 0);
    if (b < 0) s = -s;
    return {q, s};
}

double lower_of(const Rounded& x) { return x.err_sign < 0 ? down(x.r) : x.r; }
double upper_of(const Rounded& x) { return x.err_sign > 0 ? up(x.r) : x.r; }

void check_finite(double lo, double hi, const char* what) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError(std::string("interval overflow in ") + what);
    }
}

// Widen a library transcendental result unless `exact` says it is exact.
double t_down(double v, bool exact) { return exact ? v : down_n(v, Interval::kTranscendentalUlps); }
double t_up(double v, bool exact) { return exact ? v : up_n(v, Interval::kTranscendentalUlps); }

} // namespace

Interval make_unchecked(double lo, double hi) { return Interval(lo, hi, Interval::Unchecked{}); }

Interval::Interval(double x) : lo_(x), hi_(x) {
    if (!std::isfinite(x)) throw DomainError("interval endpoint not finite");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("interval endpoint not finite");
    if (lo > hi) throw DomainError("interval with lo > hi");
}

Interval Interval::enclose(double x) { return Interval(down(x), up(x)); }

Interval Interval::pi() { return Interval(down(M_PI), up(M_PI)); }

Interval Interval::hull(double a, double b) { return Interval(std::min(a, b), std::max(a, b)); }

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator-(const Interval& x) { return make_unchecked(-x.hi(), -x.lo()); }

Interval operator+(const Interval& a, const Interval& b) {
    double lo = lower_of(two_sum(a.lo(), b.lo()));
    double hi = upper_of(two_sum(a.hi(), b.hi()));
    check_finite(lo, hi, "+");
    return make_unchecked(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
    const double xs[2] = {a.lo(), a.hi()};
    const double ys[2] = {b.lo(), b.hi()};
    double lo = kInf;
    double hi = -kInf;
    for (double x : xs) {
        for (double y : ys) {
            Rounded p = two_prod(x, y);
            lo = std::min(lo, lower_of(p));
            hi = std::max(hi, upper_of(p));
        }
    }
    check_finite(lo, hi, "*");
    return make_unchecked(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo() <= 0.0 && b.hi() >= 0.0) throw DomainError("interval division by an interval containing 0");
    const double xs[2] = {a.lo(), a.hi()};
    const double ys[2] = {b.lo(), b.hi()};
    double lo = kInf;
    double hi = -kInf;
    for (double x : xs) {
        for (double y : ys) {
            Rounded q = two_div(x, y);
            lo = std::min(lo, lower_of(q));
            hi = std::max(hi, upper_of(q));
        }
    }
    check_finite(lo, hi, "/");
    return make_unchecked(lo, hi);
}

Interval abs(const Interval& x) {
    if (x.lo() >= 0) return x;
    if (x.hi() <= 0) return -x;
    return make_unchecked(0.0, std::max(-x.lo(), x.hi()));
}

Interval sqr(const Interval& x) {
    Interval m = abs(x);
    double lo = lower_of(two_prod(m.lo(), m.lo()));
    double hi = upper_of(two_prod(m.hi(), m.hi()));
    check_finite(lo, hi, "sqr");
    return make_unchecked(std::max(lo, 0.0), hi);
}

Interval sqrt(const Interval& x) {
    if (x.hi() < 0) throw DomainError("sqrt of a negative interval");
    auto root = [](double v, bool upper) {
        if (v <= 0) return 0.0;
        double r = std::sqrt(v);  // correctly rounded
        double res = -std::fma(r, r, -v);  // v - r^2
        if (upper) return res > 0 ? up(r) : r;
        return res < 0 ? down(r) : r;
    };
    return make_unchecked(root(x.lo(), false), root(x.hi(), true));
}

Interval exp(const Interval& x) {
    double lo = std::max(0.0, t_down(std::exp(x.lo()), x.lo() == 0));
    double hi = t_up(std::exp(x.hi()), x.hi() == 0);
    check_finite(lo, hi, "exp");
    return make_unchecked(lo, hi);
}

Interval log(const Interval& x) {
    if (x.lo() <= 0) throw DomainError("log of an interval not strictly positive");
    return make_unchecked(t_down(std::log(x.lo()), x.lo() == 1), t_up(std::log(x.hi()), x.hi() == 1));
}

Interval log1p(const Interval& x) {
    if (x.lo() <= -1) throw DomainError("log1p of an interval not above -1");
    return make_unchecked(t_down(std::log1p(x.lo()), x.lo() == 0), t_up(std::log1p(x.hi()), x.hi() == 0));
}

Interval sinh(const Interval& x) {
    double lo = t_down(std::sinh(x.lo()), x.lo() == 0);
    double hi = t_up(std::sinh(x.hi()), x.hi() == 0);
    if (x.lo() >= 0) lo = std::max(lo, 0.0);
    if (x.hi() <= 0) hi = std::min(hi, 0.0);
    check_finite(lo, hi, "sinh");
    return make_unchecked(lo, hi);
}

Interval cosh(const Interval& x) {
    Interval m = abs(x);
    double lo = std::max(1.0, t_down(std::cosh(m.lo()), m.lo() == 0));
    double hi = t_up(std::cosh(m.hi()), m.hi() == 0);
    check_finite(lo, hi, "cosh");
    return make_unchecked(lo, hi);
}

Interval tanh(const Interval& x) {
    double lo = std::max(-1.0, t_down(std::tanh(x.lo()), x.lo() == 0));
    double hi = std::min(1.0, t_up(std::tanh(x.hi()), x.hi() == 0));
    if (x.lo() >= 0) lo = std::max(lo, 0.0);
    if (x.hi() <= 0) hi = std::min(hi, 0.0);
    return make_unchecked(lo, hi);
}

Interval asinh(const Interval& x) {
    double lo = t_down(std::asinh(x.lo()), x.lo() == 0);
    double hi = t_up(std::asinh(x.hi()), x.hi() == 0);
    if (x.lo() >= 0) lo = std::max(lo, 0.0);
    if (x.hi() <= 0) hi = std::min(hi, 0.0);
    return make_unchecked(lo, hi);
}

Interval acosh(const Interval& x) {
    if (x.lo() < 1) throw DomainError("acosh of an interval reaching below 1");
    double lo = std::max(0.0, t_down(std::acosh(x.lo()), x.lo() == 1));
    double hi = t_up(std::acosh(x.hi()), x.hi() == 1);
    return make_unchecked(lo, hi);
}

Interval asin(const Interval& x) {
    if (x.lo() > 1 || x.hi() < -1) throw DomainError("asin of an interval outside [-1, 1]");
    double a = std::max(x.lo(), -1.0);
    double b = std::min(x.hi(), 1.0);
    const double half_pi_up = up(M_PI_2);
    double lo = std::max(-half_pi_up, t_down(std::asin(a), a == 0));
    double hi = std::min(half_pi_up, t_up(std::asin(b), b == 0));
    if (a >= 0) lo = std::max(lo, 0.0);
    if (b <= 0) hi = std::min(hi, 0.0);
    return make_unchecked(lo, hi);
}

Interval atanh(const Interval& x) {
    if (x.lo() <= -1 || x.hi() >= 1) throw DomainError("atanh of an interval not inside (-1, 1)");
    double lo = t_down(std::atanh(x.lo()), x.lo() == 0);
    double hi = t_up(std::atanh(x.hi()), x.hi() == 0);
    if (x.lo() >= 0) lo = std::max(lo, 0.0);
    if (x.hi() <= 0) hi = std::min(hi, 0.0);
    return make_unchecked(lo, hi);
}

Interval sin(const Interval& x) {
    // The double nearest pi/2 lies below pi/2, so this keeps x in the
    // monotone range.
    if (x.lo() < -M_PI_2 || x.hi() > M_PI_2) throw DomainError("interval sin outside [-pi/2, pi/2]");
    double lo = std::max(-1.0, t_down(std::sin(x.lo()), x.lo() == 0));
    double hi = std::min(1.0, t_up(std::sin(x.hi()), x.hi() == 0));
    if (x.lo() >= 0) lo = std::max(lo, 0.0);
    if (x.hi() <= 0) hi = std::min(hi, 0.0);
    return make_unchecked(lo, hi);
}

Interval min(const Interval& a, const Interval& b) {
    return make_unchecked(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
    return make_unchecked(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
    return make_unchecked(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

double sinhc(double x) {
    if (x == 0) return 1.0;
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    }
    return std::sinh(x) / x;
}

namespace {

// Enclosure of sinhc at a single point a >= 0.
Interval sinhc_point(double a) {
    if (a == 0) return Interval(1.0);
    if (a < 1e-4) {
        // Taylor series with all terms positive; the tail after x^4/120 is
        // bounded by x^6/5040 * cosh(x) < x^6/5000.
        Interval x(a);
        Interval x2 = sqr(x);
        Interval s = 1.0 + x2 / 6.0 + sqr(x2) / 120.0;
        Interval tail = sqr(x2) * x2 / 5000.0;
        return make_unchecked(s.lo(), (s + tail).hi());
    }
    Interval x(a);
    return sinh(x) / x;
}

} // namespace

Interval sinhc(const Interval& x) {
    // Even and increasing in |x|.
    Interval m = abs(x);
    Interval lo = sinhc_point(m.lo());
    Interval hi = sinhc_point(m.hi());
    return make_unchecked(std::max(1.0, lo.lo()), std::max(lo.hi(), hi.hi()));
}

double exp_neg_recip(double r) {
    if (r <= 0) return 0.0;
    return std::exp(-1.0 / r);
}

Interval exp_neg_recip(const Interval& r) {
    if (r.lo() < 0) throw DomainError("exp_neg_recip of a negative interval");
    // Increasing in r.
    auto at = [](double v) -> Interval {
        if (v == 0) return Interval(0.0);
        return exp(-(Interval(1.0) / Interval(v)));
    };
    return make_unchecked(at(r.lo()).lo(), at(r.hi()).hi());
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
    auto prec = os.precision(17);
    os << '[' << x.lo() << ", " << x.hi() << ']';
    os.precision(prec);
    return os;
}

} // namespace schottky
