#include "schottky/bounds.hpp"
#include "schottky/certify.hpp"
#include "schottky/collar.hpp"

#include <cmath>
#include <stdexcept>

namespace schottky {

namespace {

using Args = std::span<const Interval>;

Interval L(double x) { return Interval::enclose(x); }
Interval I(double x) { return Interval(x); }

// Lower endpoint of the enclosure of a decimal constant, so that a domain
// starting at that constant is covered in full.
double decimal_lo(double x) { return Interval::enclose(x).lo(); }

struct K {
    Interval pi = Interval::pi();
    Interval two_pi_sq = 2.0 * sqr(Interval::pi());
    Interval half_pi = Interval::pi() * 0.5;
    Interval c = cosh_Wp_v<Interval>();  // cosh W' = 3/sqrt 5
    Interval sqrt5 = sqrt(I(5.0));
    Interval sech066 = 1.0 / cosh(L(0.66));
    Interval inv_sinh066 = 1.0 / sinh(L(0.66));
    Interval inv_sinh096 = 1.0 / sinh(L(0.96));
    Interval three_over_31 = I(3.0) / L(3.1);
    Interval d_wprime = Interval::pi() - 2.0 * asin(1.0 / cosh_Wp_v<Interval>());
    Interval Kc = L(Constants::K);
};

const K& k() {
    static const K constants;
    return constants;
}

CellValue value(const Interval& s) { return CellValue{s, false}; }

Interval gamma1_bound(const Interval& g) { return 2.0 * log(4.0 * g - 2.0); }
Interval gamma2_bound(const Interval& g) { return 3.0 * log(8.0 * g - 7.0); }

Dim genus_dim(long long gmax) { return Dim{"g", 2.0, static_cast<double>(gmax), true, true}; }

double gamma1_hi(long long gmax) { return gamma1_bound(I(static_cast<double>(gmax))).hi(); }
double gamma1_lo(long long gmax) { return gamma1_bound(I(static_cast<double>(gmax))).lo(); }
double gamma2_hi(long long gmax) { return gamma2_bound(I(static_cast<double>(gmax))).hi(); }
double gamma2_lo(long long gmax) { return gamma2_bound(I(static_cast<double>(gmax))).lo(); }

// Upper end of z = exp(-x/4) over x >= x_lo.
double z_max(double x_lo) { return exp(-(I(x_lo) * 0.25)).hi(); }

// The half-open genus tail g > gmax, as u = 1/(g - 1) in [0, 1/gmax].
Dim inverse_genus_dim(long long gmax, const char* name = "u") {
    return Dim{name, 0.0, (I(1.0) / I(static_cast<double>(gmax))).hi(), false, false};
}

Dim gamma_small_dim() { return Dim{"gamma", 0.0, std::nextafter(M_PI_2, 4.0), false, false}; }

// 1/sinh(qwtwo(alpha)) with z = exp(-alpha/4):
// sqrt 5 z sqrt(0.45 (1 + z^2)^2 - z^2) / (1 - z^4).
Interval inv_qwtwo_sinh(const Interval& z) {
    const Interval z2 = sqr(z);
    const Interval inner = I(9.0) / I(20.0) * sqr(1.0 + z2) - z2;
    return k().sqrt5 * z * sqrt(inner) / (1.0 - sqr(z2));
}

// ---- nu bound in configuration 1 -------------------------------------------
//
// With w = arcsinh(2 pi (g-1) / gamma), cosh(2w) - 1 = 2 sinh(w)^2 and the
// arccosh argument becomes 2 pi^2 (g-1)^2 sinhc(gamma/2)^2 - 1.

FamilyPlan plan_a(const CertOptions& o) {
    FamilyPlan p;
    p.main = Region{"main", {genus_dim(o.gmax), gamma_small_dim()}, [](Args x) {
                        const Interval& g = x[0];
                        const Interval s = sinhc(x[1] * 0.5);
                        const Interval arg = k().two_pi_sq * sqr(g - 1.0) * sqr(s) - 1.0;
                        return value(4.0 * log(8.0 * g - 7.0) - 2.0 * acosh_partial(arg));
                    }};
    // u = 1/(g-1): the -4 log u terms of both sides cancel.
    p.tail.push_back(Region{"tail", {inverse_genus_dim(o.gmax), gamma_small_dim()}, [](Args x) {
                                const Interval& u = x[0];
                                const Interval s2 = k().two_pi_sq * sqr(sinhc(x[1] * 0.5));
                                const Interval den = s2 - sqr(u);
                                const Interval q = sqr(u) / den;
                                return value(4.0 * log(8.0 + u) - 2.0 * log(den) -
                                             2.0 * log(1.0 + sqrt(1.0 - sqr(q))));
                            }});
    return p;
}

// ---- nu1 bound in configuration 2 ------------------------------------------
//
// sinh(gamma/4) 2 pi (g-1) / gamma = (pi/2) (g-1) sinhc(gamma/4).

FamilyPlan plan_b(const CertOptions& o) {
    FamilyPlan p;
    p.main = Region{"main", {genus_dim(o.gmax), gamma_small_dim()}, [](Args x) {
                        const Interval& g = x[0];
                        const Interval arg = k().half_pi * (g - 1.0) * sinhc(x[1] * 0.25);
                        return value(3.0 * log(8.0 * g - 7.0) - 2.0 * acosh_partial(arg));
                    }};
    // u = 1/(g-1): slack = 3 log(8+u) - log u - 2 log P - 2 log(1 + sqrt(1 - (u/P)^2))
    // with P = (pi/2) sinhc(gamma/4); -log u >= log gmax on the tail.
    const double log_gmax = log(I(static_cast<double>(o.gmax))).lo();
    p.tail.push_back(Region{"tail", {inverse_genus_dim(o.gmax), gamma_small_dim()}, [log_gmax](Args x) {
                                const Interval& u = x[0];
                                const Interval P = k().half_pi * sinhc(x[1] * 0.25);
                                return value(log_gmax + 3.0 * log(8.0 + u) - 2.0 * log(P) -
                                             2.0 * log(1.0 + sqrt(1.0 - sqr(u / P))));
                            }});
    return p;
}

// ---- crossing-width branch: pi - 2 arcsin(1/cosh w2) >= 3/3.1 ----------------

FamilyPlan plan_c(const CertOptions& o) {
    FamilyPlan p;
    p.main = Region{"main", {Dim{"alpha1", decimal_lo(1.1), gamma1_hi(o.gmax)}}, [](Args x) {
                        const Interval w2 = qwtwo(x[0]);
                        return value(k().pi - 2.0 * asin(1.0 / cosh(w2)) - k().three_over_31);
                    }};
    p.tail.push_back(Region{"tail", {Dim{"z", 0.0, z_max(gamma1_lo(o.gmax))}}, [](Args x) {
                                const Interval inv = inv_qwtwo_sinh(x[0]);
                                const Interval sech = inv / sqrt(1.0 + sqr(inv));
                                return value(k().pi - 2.0 * asin(sech) - k().three_over_31);
                            }});
    return p;
}

// ---- collar of width W' branch -----------------------------------------------

FamilyPlan plan_d(const CertOptions& o) {
    FamilyPlan p;
    p.main = Region{"main", {genus_dim(o.gmax)}, [](Args x) {
                        const Interval& g = x[0];
                        return value(L(3.1) * log(8.0 * g - 7.0) -
                                     (2.0 * log(24.0 * g - 23.0) + L(2.2)) / k().d_wprime);
                    }};
    // u = 1/g: slack = (3.1 - 2/D) log g + 3.1 log(8 - 7u) - (2 log(24 - 23u) + 2.2)/D,
    // and log g >= log gmax when the leading coefficient is positive.
    const double log_gmax = log(I(static_cast<double>(o.gmax))).lo();
    p.tail.push_back(Region{"tail", {Dim{"u", 0.0, (I(1.0) / I(static_cast<double>(o.gmax))).hi()}},
                            [log_gmax](Args x) {
                                const Interval& u = x[0];
                                const Interval coef = L(3.1) - 2.0 / k().d_wprime;
                                if (!(coef.lo() > 0)) return value(Interval(-1.0, 0.0));
                                return value(coef * log_gmax + L(3.1) * log(8.0 - 7.0 * u) -
                                             (2.0 * log(24.0 - 23.0 * u) + L(2.2)) / k().d_wprime);
                            }});
    return p;
}

// ---- second systole branch with the capped width ----------------------------
//
// 1/cosh(min{0.66, arccosh X}) = max{sech 0.66, 1/X},
// X = cosh(gamma2/2) / (cosh(gamma2/4) cosh W').

Interval sech_case2c2(const Interval& gamma2) {
    const Interval inv_x = cosh(gamma2 * 0.25) * k().c / cosh(gamma2 * 0.5);
    return max(k().sech066, inv_x);
}

FamilyPlan plan_e(const CertOptions& o) {
    FamilyPlan p;
    // gamma2 = 2.1 + t (3 log(8g - 7) - 2.1), t in [0, 1].
    p.main = Region{"main", {genus_dim(o.gmax), Dim{"t", 0.0, 1.0}}, [](Args x) {
                        const Interval& g = x[0];
                        const Interval rhs = L(3.1) * log(8.0 * g - 7.0);
                        const Interval gamma2 = L(2.1) + x[1] * (gamma2_bound(g) - L(2.1));
                        const Interval num = 4.0 * acosh_partial(cosh(gamma2 * 0.25) * k().c);
                        const Interval den = k().pi - 2.0 * asin(sech_case2c2(gamma2));
                        return value(rhs - num / den);
                    }};
    // For g > gmax and gamma2 <= 3 log(8 gmax - 7) the right side only grows,
    // so the main region at g = gmax covers it. Beyond, 3.1 log(8g - 7) >=
    // (3.1/3) gamma2; divide by gamma2 and write r = 4/gamma2, z = e^{-1/r}:
    // 4 arccosh(cosh(gamma2/4) c) / gamma2 = 1 + r log P(z),
    // P(z) = c (1 + z^2)/2 + sqrt(c^2 (1 + z^2)^2 / 4 - z^2).
    const double r_max = (I(4.0) / I(gamma2_lo(o.gmax))).hi();
    p.tail.push_back(Region{"tail", {Dim{"r", 0.0, r_max}}, [](Args x) {
                                const Interval& r = x[0];
                                const Interval z = exp_neg_recip(r);
                                const Interval z2 = sqr(z);
                                const Interval& c = k().c;
                                const Interval half = c * (1.0 + z2) * 0.5;
                                const Interval P = half + sqrt(sqr(half) - z2);
                                const Interval inv_x = c * z * (1.0 + z2) / (1.0 + sqr(z2));
                                const Interval den = k().pi - 2.0 * asin(max(k().sech066, inv_x));
                                return value(L(3.1) / 3.0 - (1.0 + r * log(P)) / den);
                            }});
    return p;
}

// ---- capacity of the systole collar -----------------------------------------
//
// 1/cosh of the configuration-1 width bound is min{tanh(gamma/2),
// cosh(gamma/4)/cosh(gamma/2)}; for gamma >= K the width is W and 1/cosh W = 1/2.

Interval sech_systole(const Interval& gamma) {
    const Interval& kk = k().Kc;
    const Interval half = I(0.5);
    if (gamma.lo() >= kk.hi()) return half;
    const Interval s1 = min(tanh(gamma * 0.5), cosh(gamma * 0.25) / cosh(gamma * 0.5));
    if (gamma.hi() < kk.lo()) return s1;
    return hull(s1, half);
}

FamilyPlan plan_capacity(const CertOptions& o, bool sharp) {
    FamilyPlan p;
    // gamma = t * 2 log(4g - 2), t in [0, 1].
    p.main = Region{"main", {genus_dim(o.gmax), Dim{"t", 0.0, 1.0}}, [sharp](Args x) {
                        const Interval& g = x[0];
                        Interval bound = log(4.0 * g - 2.0);
                        if (sharp) bound = 3.0 / k().pi * bound;
                        const Interval gamma = x[1] * gamma1_bound(g);
                        return value(bound - capacity_from_sech(gamma, sech_systole(gamma)));
                    }};
    // For g > gmax: gamma <= 2 log(4 gmax - 2) is covered by g = gmax (the
    // bound grows with g); above that gamma >= K, the capacity is
    // 3 gamma / (2 pi) and log(4g - 2) >= gamma / 2. Slack per unit gamma:
    const bool above_k = gamma1_lo(o.gmax) >= k().Kc.hi();
    p.tail.push_back(Region{"tail", {}, [sharp, above_k](Args) {
                                if (!above_k) return value(Interval(-1.0, 0.0));
                                const Interval per_gamma = sharp ? 3.0 / (2.0 * k().pi) : I(0.5);
                                return value(per_gamma - 1.0 / (k().pi - 2.0 * asin(I(0.5))));
                            }});
    return p;
}

// ---- separation constant 0.73 ------------------------------------------------

FamilyPlan plan_g(const CertOptions&) {
    FamilyPlan p;
    p.main = Region{"main", {}, [](Args) {
                        return value(min(collar_separation(L(2.1)), Wp_v<Interval>()) - L(0.73));
                    }};
    return p;
}

// ---- width bound 0.96 --------------------------------------------------------

FamilyPlan plan_h(const CertOptions& o) {
    FamilyPlan p;
    const double cap = std::max(60.0, gamma2_hi(o.gmax));
    p.main = Region{"main", {Dim{"gamma2", decimal_lo(2.1), cap}}, [](Args x) {
                        const Interval& g2 = x[0];
                        const Interval c = cosh(g2 * 0.25) * k().c;
                        return value(asinh(cosh(g2 * 0.5) / sqrt(sqr(c) - 1.0)) - L(0.96));
                    }};
    // z = exp(-gamma2/4): 1/sinh(w2) = 2 z sqrt(c^2 (1 + z^2)^2 / 4 - z^2) / (1 + z^4).
    p.tail.push_back(Region{"tail", {Dim{"z", 0.0, z_max(cap)}}, [](Args x) {
                                const Interval& z = x[0];
                                const Interval z2 = sqr(z);
                                const Interval half = k().c * (1.0 + z2) * 0.5;
                                const Interval inv = 2.0 * z * sqrt(sqr(half) - z2) / (1.0 + sqr(z2));
                                return value(k().inv_sinh096 - inv);
                            }});
    return p;
}

// ---- disk bound below its limit ---------------------------------------------
//
// At u = 1/g = 0 the bound equals the limit exactly: 1/(2 sin(pi/12)) =
// (sqrt 6 + sqrt 2)/2 =: y, and (y + sqrt(y^2 - 1))^2 = 3 + 2 sqrt 3 +
// 2 sqrt(5 + 3 sqrt 3). The tail region shows the slack is strictly
// increasing in u on [0, 1/2], hence positive for every g >= 2.

Interval bavard_limit_enclosure() {
    const Interval s3 = sqrt(I(3.0));
    return 2.0 * log(3.0 + 2.0 * s3 + 2.0 * sqrt(5.0 + 3.0 * s3));
}

FamilyPlan plan_i(const CertOptions& o) {
    FamilyPlan p;
    p.main = Region{"main", {genus_dim(o.gmax)}, [](Args x) {
                        return value(bavard_limit_enclosure() - bavard_from_inverse_genus(1.0 / x[0]));
                    }};
    // d/du of the slack: 4 (pi/12) cos(theta) / (2 sin(theta)^2 sqrt(y^2 - 1)),
    // theta = pi (1 + u)/12, y = 1/(2 sin theta).
    p.tail.push_back(Region{"tail", {Dim{"u", 0.0, 0.5}}, [](Args x) {
                                const Interval theta = k().pi * (1.0 + x[0]) / 12.0;
                                const Interval s = sin(theta);
                                const Interval cs = sqrt(1.0 - sqr(s));
                                const Interval y = 1.0 / (2.0 * s);
                                return value(4.0 * (k().pi / 12.0) * cs / (2.0 * sqr(s) * sqrt(sqr(y) - 1.0)));
                            }});
    return p;
}

// ---- crossing width above 0.66 ----------------------------------------------

FamilyPlan plan_j(const CertOptions& o) {
    FamilyPlan p;
    p.main = Region{"main", {Dim{"alpha1", 1.5, gamma1_hi(o.gmax)}},
                    [](Args x) { return value(qwtwo(x[0]) - L(0.66)); }};
    p.tail.push_back(Region{"tail", {Dim{"z", 0.0, z_max(gamma1_lo(o.gmax))}}, [](Args x) {
                                return value(k().inv_sinh066 - inv_qwtwo_sinh(x[0]));
                            }});
    return p;
}

std::vector<CertFamily> build_registry() {
    std::vector<CertFamily> r;
    r.push_back({"CF-A", "nu-config1",
                 "2 arccosh(sinh^2(gamma/2)(cosh(2 arcsinh(2 pi (g-1)/gamma)) - 1) - 1) <= 4 log(8g-7), "
                 "g >= 2, 0 < gamma <= pi/2",
                 false, plan_a});
    r.push_back({"CF-B", "nu1-config2",
                 "2 arccosh(sinh(gamma/4) 2 pi (g-1)/gamma) <= 3 log(8g-7), g >= 2, 0 < gamma <= pi/2", false,
                 plan_b});
    r.push_back({"CF-C", "crossing-width-3.1",
                 "pi - 2 arcsin(1/cosh(qwtwo(alpha1))) >= 3/3.1, 1.1 <= alpha1 <= 2 log(4g-2)", false, plan_c});
    r.push_back({"CF-D", "wprime-collar-3.1",
                 "(2 log(24g-23) + 2.2)/(pi - 2 arcsin(1/cosh W')) <= 3.1 log(8g-7), g >= 2", false, plan_d});
    r.push_back({"CF-E", "capped-width-3.1",
                 "4 arccosh(cosh(gamma2/4) cosh W')/(pi - 2 arcsin(1/cosh w(gamma2))) <= 3.1 log(8g-7), "
                 "2.1 <= gamma2 <= 3 log(8g-7)",
                 false, plan_e});
    r.push_back({"CF-F", "systole-capacity",
                 "capacity(gamma, w(gamma)) <= log(4g-2), 0 < gamma <= 2 log(4g-2)", false,
                 [](const CertOptions& o) { return plan_capacity(o, false); }});
    r.push_back({"CF-G", "separation-0.73", "min{arcsinh(1/sinh(1.05)), W'} > 0.73", false, plan_g});
    r.push_back({"CF-H", "width-0.96", "arcsinh(cosh(gamma2/2)/sqrt(cosh^2(gamma2/4) cosh^2 W' - 1)) > 0.96, "
                                       "gamma2 >= 2.1",
                 false, plan_h});
    r.push_back({"CF-I", "disk-bound-limit",
                 "4 arccosh(1/(2 sin(pi (g+1)/(12 g)))) < 2 log(3 + 2 sqrt 3 + 2 sqrt(5 + 3 sqrt 3)), g >= 2", false,
                 plan_i});
    r.push_back({"CF-J", "crossing-width-0.66", "qwtwo(alpha1) > 0.66, alpha1 >= 1.5", false, plan_j});
    r.push_back({"CF-F'", "systole-capacity-sharp",
                 "capacity(gamma, w(gamma)) <= (3/pi) log(4g-2), 0 < gamma <= 2 log(4g-2)", true,
                 [](const CertOptions& o) { return plan_capacity(o, true); }});
    return r;
}

} // namespace

const std::vector<CertFamily>& registry() {
    static const std::vector<CertFamily> r = build_registry();
    return r;
}

const CertFamily* find_family(const std::string& id) {
    for (const auto& f : registry()) {
        if (f.id == id) return &f;
    }
    return nullptr;
}

std::vector<const CertFamily*> default_suite() {
    std::vector<const CertFamily*> out;
    for (const auto& f : registry()) {
        if (!f.exempt) out.push_back(&f);
    }
    return out;
}

} // namespace schottky
