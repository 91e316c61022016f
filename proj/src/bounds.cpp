#include "schottky/bounds.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace schottky {

namespace {

double ln(double x) { return std::log(x); }

void require_h(int h) {
    if (h < 1) throw std::invalid_argument("h must be at least 1");
}

double corollary_piece(const Signature& s, double t, double denom, int shift) {
    const double arg = 4.0 * s.g + 2.0 * s.n + shift;
    if (arg <= 1.0) throw DomainError("corollary log argument must exceed 1");
    return (s.n + 1) * std::max(4.0 * ln(arg), t) / denom;
}

} // namespace

void validate(const Decomposition& d) {
    auto bad = [](const std::string& why) { return ValidationError(ValidationKind::InvalidDecomposition, why); };
    if (!(d.t > 0) || !std::isfinite(d.t)) throw bad("t must be positive");
    if (d.pieces.empty()) throw bad("at least one piece is required");
    if (d.n_cut < 0) throw bad("n_cut must be nonnegative");
    long long boundary = 0;
    for (const auto& p : d.pieces) {
        if (p.g <= 0) throw bad("every piece needs positive genus");
        if (p.n < 0) throw bad("boundary counts must be nonnegative");
        if (!p.hyperbolic()) throw bad("piece is not hyperbolic");
        boundary += p.n;
    }
    if (boundary > 2LL * d.n_cut) throw bad("more boundary components than cut sides");
}

double thm_bs_upper(Genus g) { return 3.0 / M_PI * ln(4.0 * g.as_double() - 2.0); }

std::pair<double, double> thm_main_bounds(Genus g) {
    const double x = g.as_double();
    return {ln(4.0 * x - 2.0), 3.1 * ln(8.0 * x - 7.0)};
}

std::pair<double, double> systole_bounds(Genus g) {
    const double x = g.as_double();
    return {2.0 * ln(4.0 * x - 2.0), 3.0 * ln(8.0 * x - 7.0)};
}

double nsscg_bound_closed(int h) {
    require_h(h);
    return 2.0 * ln(8.0 * h - 2.0);
}

double nsscg_bound_boundary(int h, double eta) {
    require_h(h);
    if (!(eta > 0)) throw std::invalid_argument("eta must be positive");
    const double l = ln(8.0 * h - 2.0);
    return std::max(eta / 2.0 + l, 2.0 * l);
}

double boundary_systole_bound(Signature sig, double boundary_total) {
    if (sig.g < 0 || sig.n < 0 || !sig.hyperbolic()) throw std::invalid_argument("signature must be hyperbolic");
    if (!(boundary_total >= 0)) throw std::invalid_argument("boundary length must be nonnegative");
    return 4.0 * ln(4.0 * sig.g + 2.0 * sig.n + 3.0) + boundary_total;
}

CorollaryResult corollary_bound(const Decomposition& d) {
    validate(d);
    CorollaryResult r;
    // sinh(t/2) / sqrt(sinh(t/2)^2 + 1) = tanh(t/2), which does not overflow.
    r.M = std::min(std::tanh(d.t / 2.0), 0.5);
    r.denominator = M_PI - 2.0 * std::asin(r.M);
    for (const auto& p : d.pieces) {
        CorollaryPiece c;
        c.sig = p;
        c.bound = corollary_piece(p, d.t, r.denominator, -3);
        c.plus3_variant = corollary_piece(p, d.t, r.denominator, 3);
        c.discrepancy = c.bound != c.plus3_variant;
        r.warning = r.warning || c.discrepancy;
        r.pieces.push_back(c);
    }
    return r;
}

double fay_bound(int g_i) {
    if (g_i < 1) throw std::invalid_argument("g_i must be at least 1");
    return ln(8.0 * g_i - 2.0);
}

double bavard_limit() { return 2.0 * ln(3.0 + 2.0 * std::sqrt(3.0) + 2.0 * std::sqrt(5.0 + 3.0 * std::sqrt(3.0))); }

double hyperelliptic_bound() { return 3.0 * bavard_limit() / (2.0 * M_PI); }

double naive_disk_bound() { return 4.0 * std::acosh(2.0); }

double bavard_bound(Genus g) { return bavard_from_inverse_genus(1.0 / g.as_double()); }

double log_factorial(long long g) {
    if (g < 0) throw std::invalid_argument("factorial of a negative number");
    if (g <= 20) {
        unsigned long long f = 1;
        for (long long i = 2; i <= g; ++i) f *= static_cast<unsigned long long>(i);
        return std::log(static_cast<long double>(f));
    }
    return std::lgamma(static_cast<double>(g) + 1.0);
}

double minkowski_product_log_bound(long long g) {
    if (g < 1) throw std::invalid_argument("g must be at least 1");
    return static_cast<double>(g) * ln(4.0 / M_PI) + 2.0 * log_factorial(g);
}

double minkowski_m2_bound(Genus g, double m1) {
    if (!(m1 > 0)) throw std::invalid_argument("m1 must be positive");
    const double x = g.as_double();
    const double log_base = ln(4.0 / M_PI) + log_factorial(g.value()) / x;
    return std::exp(-ln(m1) / x + log_base * (2.0 * x / (2.0 * x - 1.0)));
}

std::pair<double, double> hermite_ppav_bounds(Genus g) {
    const double x = g.as_double();
    const double lf = log_factorial(g.value());
    return {std::exp((ln(2.0) + lf) / x) / M_PI, 4.0 / M_PI * std::exp(lf / x)};
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::NotJacobian: return "NotJacobian";
    case Verdict::NotHyperellipticJacobian: return "NotHyperellipticJacobian";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

ExclusionVerdict jacobian_exclusion(const GramMatrix& gram, std::uint64_t node_budget) {
    const Genus g(gram.genus());
    ExclusionVerdict v;
    v.g = static_cast<int>(g.value());
    v.minima = successive_minima(gram, 2, node_budget);
    v.m1_sq = v.minima.values[0];
    v.m2_sq = v.minima.values[1];
    v.thm_bs_threshold = thm_bs_upper(g);
    const auto main = thm_main_bounds(g);
    v.thm_main_m1_threshold = main.first;
    v.thm_main_m2_threshold = main.second;
    v.hyperelliptic_threshold = hyperelliptic_bound();
    v.margins.m1_bs = v.thm_bs_threshold - v.m1_sq;
    v.margins.m1_main = v.thm_main_m1_threshold - v.m1_sq;
    v.margins.m2_main = v.thm_main_m2_threshold - v.m2_sq;
    v.margins.hyperelliptic = v.hyperelliptic_threshold - v.m1_sq;
    v.tests_enabled = gram.mode() == GramMode::PPAV;
    if (!v.tests_enabled) {
        v.verdict = Verdict::Inconclusive;
    } else if (v.m1_sq > v.thm_bs_threshold || v.m2_sq > v.thm_main_m2_threshold) {
        v.verdict = Verdict::NotJacobian;
    } else if (v.m1_sq > v.hyperelliptic_threshold) {
        v.verdict = Verdict::NotHyperellipticJacobian;
    } else {
        v.verdict = Verdict::Inconclusive;
    }
    return v;
}

} // namespace schottky
