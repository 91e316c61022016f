#pragma once

#include "schottky/errors.hpp"
#include "schottky/hyptrig.hpp"
#include "schottky/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace schottky {

enum class CollarConfig { Config1, Config2 };

struct CollarData {
    double geodesic_length;
    double width;
};

// Config1 keeps nu in nu1 (nu2 unused, set equal); Config2 keeps nu1 <= nu2.
struct YPiece {
    CollarConfig config;
    double gamma;
    double nu1;
    double nu2;
};

void validate(const CollarData& c);
void validate(const YPiece& y);

// Collar width constants: W = arccosh 2, W' = arctanh(2/3), K = 3.326.
struct Constants {
    static constexpr double K = 3.326;
    static double W() { return std::acosh(2.0); }
    static double Wp() { return std::atanh(2.0 / 3.0); }
};

template <class T>
inline T W_v() {
    if constexpr (std::is_same_v<T, Interval>) {
        return acosh(Interval(2.0));
    } else {
        return Constants::W();
    }
}

template <class T>
inline T Wp_v() {
    if constexpr (std::is_same_v<T, Interval>) {
        return atanh(Interval(2.0) / Interval(3.0));
    } else {
        return Constants::Wp();
    }
}

// cosh(W') = 3 / sqrt(5).
template <class T>
inline T cosh_Wp_v() {
    using std::sqrt;
    return T(3.0) / sqrt(T(5.0));
}

namespace detail {

template <class T>
inline void require_positive(const T& x, const char* what) {
    if (!(lower(x) > 0)) throw std::invalid_argument(what);
}

template <class T>
inline void require_nonnegative(const T& x, const char* what) {
    if (!(lower(x) >= 0)) throw std::invalid_argument(what);
}

template <class T>
inline T max_t(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Interval>) {
        return max(a, b);
    } else {
        return std::max(a, b);
    }
}

template <class T>
inline T min_t(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, Interval>) {
        return min(a, b);
    } else {
        return std::min(a, b);
    }
}

// arccosh of a quantity known to be >= 1 in exact arithmetic.
template <class T>
inline T acosh_ge1(const T& x) {
    if constexpr (std::is_same_v<T, Interval>) {
        return acosh_partial(x);
    } else {
        return std::acosh(std::max(1.0, x));
    }
}

} // namespace detail

// l / (pi - 2 arcsin(s)) for s = 1/cosh(w) in (0, 1].
template <Real T>
T capacity_from_sech(const T& l, const T& s) {
    using std::asin;
    return l / (pi_v<T>() - 2.0 * asin(s));
}

template <Real T>
T capacity(const T& l, const T& w) {
    using std::cosh;
    detail::require_positive(l, "capacity requires l > 0");
    detail::require_positive(w, "capacity requires w > 0");
    return capacity_from_sech(l, T(1.0) / cosh(w));
}

// Boundary length nu of the configuration-1 Y-piece.
template <Real T>
T y1_nu(const T& gamma, const T& w) {
    detail::require_positive(gamma, "y1_nu requires gamma > 0");
    detail::require_positive(w, "y1_nu requires w > 0");
    return 2.0 * hexagon_opposite(gamma * 0.5, w * 2.0, gamma * 0.5);
}

template <Real T>
T y1_eta_bound(const T& gamma, const T& w) {
    detail::require_positive(gamma, "y1_eta_bound requires gamma > 0");
    detail::require_positive(w, "y1_eta_bound requires w > 0");
    return gamma * 0.5 + 2.0 * w;
}

template <Real T>
T y2_nu1_exact(const T& gamma, const T& w) {
    detail::require_positive(gamma, "y2_nu1_exact requires gamma > 0");
    detail::require_positive(w, "y2_nu1_exact requires w > 0");
    return 2.0 * pentagon_opposite(gamma * 0.25, w);
}

// Guaranteed distance from gamma of any disjoint simple closed geodesic.
template <Real T>
T collar_separation(const T& gamma) {
    using std::asinh;
    using std::sinh;
    detail::require_positive(gamma, "collar_separation requires gamma > 0");
    return asinh(T(1.0) / sinh(gamma * 0.5));
}

// Config1 (with eta >= gamma): the larger of the two width bounds.
// Config2 (with nu1 or nu2 > gamma): W.
template <Real T>
T collar_width_lower_bound(const T& gamma, CollarConfig config, bool hypothesis) {
    using std::cosh;
    detail::require_positive(gamma, "collar_width_lower_bound requires gamma > 0");
    if (!hypothesis) throw HypothesisNotSatisfied("collar width bound needs its length hypothesis");
    if (config == CollarConfig::Config2) return W_v<T>();
    T first = collar_separation(gamma);
    T second = detail::acosh_ge1(cosh(gamma * 0.5) / cosh(gamma * 0.25));
    return detail::max_t(first, second);
}

template <Real T>
T collar_width_area_upper(const T& gamma, int g) {
    using std::asinh;
    detail::require_positive(gamma, "collar_width_area_upper requires gamma > 0");
    if (g < 2) throw std::invalid_argument("collar_width_area_upper requires g >= 2");
    return asinh(2.0 * pi_v<T>() * T(double(g - 1)) / gamma);
}

template <Real T>
T crossing_width_bound(const T& alpha1, const T& w1, const T& r1) {
    using std::asinh;
    using std::cosh;
    using std::sinh;
    using std::sqrt;
    detail::require_positive(alpha1, "crossing_width_bound requires alpha1 > 0");
    detail::require_positive(w1, "crossing_width_bound requires w1 > 0");
    detail::require_nonnegative(r1, "crossing_width_bound requires r1 >= 0");
    if (lower(r1) > upper(alpha1 * 0.25)) {
        throw std::invalid_argument("crossing_width_bound requires r1 <= alpha1/4");
    }
    T c = cosh(r1) * cosh(w1);
    T d = c * c - 1.0;
    if (!(lower(d) > 0)) throw DomainError("crossing width denominator vanishes");
    return asinh(sinh(w1) * sinh(alpha1 * 0.5) / sqrt(d));
}

template <Real T>
T qwtwo(const T& alpha1) {
    return crossing_width_bound(alpha1, Wp_v<T>(), alpha1 * 0.25);
}

// (alpha1_max, alpha2_max) for a one-holed torus with boundary length
// `boundary`; alpha2 is evaluated at alpha1 = alpha1_max.
std::pair<double, double> qpiece_basis_bounds(double boundary);
// alpha2 bound for a known alpha1 > 0.
double qpiece_alpha2_bound(double boundary, double alpha1);

template <Real T>
T case2c2_width_bound(const T& gamma2) {
    using std::cosh;
    if (!(lower(gamma2) >= lower(lit<T>(2.1)))) throw std::invalid_argument("case2c2_width_bound requires gamma2 >= 2.1");
    T arg = cosh(gamma2 * 0.5) / (cosh(gamma2 * 0.25) * cosh_Wp_v<T>());
    return detail::min_t(lit<T>(0.66), acosh_safe(arg));
}

template <Real T>
T case2c2b_width_bound(const T& gamma2) {
    using std::asinh;
    using std::cosh;
    using std::sqrt;
    if (!(lower(gamma2) >= lower(lit<T>(2.1)))) throw std::invalid_argument("case2c2b_width_bound requires gamma2 >= 2.1");
    T c = cosh(gamma2 * 0.25) * cosh_Wp_v<T>();
    return asinh(cosh(gamma2 * 0.5) / sqrt(c * c - 1.0));
}

} // namespace schottky
