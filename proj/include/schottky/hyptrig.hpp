#pragma once

#include "schottky/interval.hpp"

namespace schottky {

// Arguments above this are evaluated through logarithms of cosh/sinh.
inline constexpr double kLogSpaceThreshold = 30.0;

// Point arccosh arguments within this relative distance below 1 are taken
// as exactly 1 (rounding noise of the closed forms), everything lower is a
// DomainError.
inline constexpr double kAcoshUnitSlack = 4e-16;

double log_cosh(double x);
double log_sinh(double x);   // x > 0
double acosh_exp(double L);  // arccosh(e^L), L >= 0
Interval log_cosh(const Interval& x);
Interval log_sinh(const Interval& x);
Interval acosh_exp(const Interval& L);

// arccosh(x) for x >= 1, DomainError otherwise.
double acosh_safe(double x);
Interval acosh_safe(const Interval& x);
// One-sided variant: the part of x below 1 is discarded, so a straddling
// interval yields [0, arccosh(hi)]. DomainError when x lies entirely below 1.
Interval acosh_partial(const Interval& x);

// cosh(c) = cosh(a) cosh(b); a, b >= 0.
double right_triangle_hyp(double a, double b);
Interval right_triangle_hyp(const Interval& a, const Interval& b);

// sin(theta) = sinh(opposite) / sinh(hyp); 0 < opposite <= hyp.
double right_triangle_angle(double opposite, double hyp);
Interval right_triangle_angle(const Interval& opposite, const Interval& hyp);

// cosh(c) = sinh(a) sinh(b); a, b > 0.
double pentagon_opposite(double a, double b);
Interval pentagon_opposite(const Interval& a, const Interval& b);

// cosh(c) = sinh(a) sinh(b) cosh(connector) - cosh(a) cosh(b); a, b > 0.
//
// Interval versions of the polygon relations evaluate at the two extreme
// corners of the box where the relation is monotone in every argument (the
// hexagon only when cosh(connector) >= tanh a / tanh b both ways; otherwise
// the natural interval extension is used). A box that is only partly inside
// the domain gets the one-sided bound 0 (or pi/2 for the angle); a box
// entirely outside throws DomainError.
double hexagon_opposite(double a, double connector, double b);
Interval hexagon_opposite(const Interval& a, const Interval& connector, const Interval& b);

} // namespace schottky
