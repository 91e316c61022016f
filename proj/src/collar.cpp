#include "schottky/collar.hpp"

#include <cmath>
#include <stdexcept>

namespace schottky {

void validate(const CollarData& c) {
    if (!(c.geodesic_length > 0) || !(c.width > 0) || !std::isfinite(c.geodesic_length) ||
        !std::isfinite(c.width)) {
        throw std::invalid_argument("collar lengths must be positive and finite");
    }
}

void validate(const YPiece& y) {
    if (!(y.gamma > 0) || !(y.nu1 > 0) || !(y.nu2 > 0)) {
        throw std::invalid_argument("Y-piece lengths must be positive");
    }
    if (y.config == CollarConfig::Config2 && y.nu1 > y.nu2) {
        throw std::invalid_argument("configuration 2 requires nu1 <= nu2");
    }
}

double qpiece_alpha2_bound(double boundary, double alpha1) {
    if (!(boundary > 0) || !(alpha1 > 0)) throw std::invalid_argument("qpiece bounds require positive lengths");
    double ch = std::cosh(alpha1 / 2);
    double c4 = std::cosh(boundary / 4);
    double arg = std::sqrt((c4 * c4 + ch * ch - 1.0) / (2.0 * (ch - 1.0)));
    return 2.0 * acosh_safe(arg);
}

std::pair<double, double> qpiece_basis_bounds(double boundary) {
    if (!(boundary > 0)) throw std::invalid_argument("qpiece bounds require boundary > 0");
    double a1 = 2.0 * std::acosh(std::cosh(boundary / 6) + 0.5);
    return {a1, qpiece_alpha2_bound(boundary, a1)};
}

} // namespace schottky
