#pragma once

#include "schottky/interval.hpp"
#include "schottky/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schottky {

// Genus of a closed surface, g >= 2.
class Genus {
public:
    explicit Genus(long long g) : g_(g) {
        if (g < 2) throw std::invalid_argument("genus must be at least 2");
    }
    long long value() const noexcept { return g_; }
    double as_double() const noexcept { return static_cast<double>(g_); }

private:
    long long g_;
};

// Surface of genus g with n boundary components.
struct Signature {
    int g = 0;
    int n = 0;
    bool hyperbolic() const noexcept { return 2 * g - 2 + n > 0; }
};

struct Decomposition {
    double t = 0.0;  // common upper bound on the cutting geodesics
    std::vector<Signature> pieces;
    int n_cut = 0;
};

// Throws ValidationError(InvalidDecomposition).
void validate(const Decomposition& d);

double thm_bs_upper(Genus g);
std::pair<double, double> thm_main_bounds(Genus g);
std::pair<double, double> systole_bounds(Genus g);
double nsscg_bound_closed(int h);
double nsscg_bound_boundary(int h, double eta);
double boundary_systole_bound(Signature sig, double boundary_total);

struct CorollaryPiece {
    Signature sig;
    double bound = 0.0;           // with 4 log(4g_i + 2n_i - 3)
    double plus3_variant = 0.0;  // with 4 log(4g_i + 2n_i + 3)
    bool discrepancy = false;     // the two readings give different values
};

struct CorollaryResult {
    double M = 0.0;
    double denominator = 0.0;  // pi - 2 arcsin(M)
    std::vector<CorollaryPiece> pieces;
    bool warning = false;  // any piece has a discrepancy
};

CorollaryResult corollary_bound(const Decomposition& d);

double fay_bound(int g_i);
double hyperelliptic_bound();
// 2 log(3 + 2 sqrt 3 + 2 sqrt(5 + 3 sqrt 3)), the g -> infinity limit of bavard_bound.
double bavard_limit();
// 4 arccosh 2.
double naive_disk_bound();

// 4 arccosh(1 / (2 sin(pi (1 + u) / 12))) with u = 1/g.
template <Real T>
T bavard_from_inverse_genus(const T& u) {
    using std::acosh;
    using std::sin;
    T angle = pi_v<T>() * (1.0 + u) / 12.0;
    return 4.0 * acosh(T(1.0) / (2.0 * sin(angle)));
}

double bavard_bound(Genus g);

// log(g!) exactly accumulated for g <= 20, log-gamma beyond.
double log_factorial(long long g);
double minkowski_product_log_bound(long long g);
double minkowski_m2_bound(Genus g, double m1);
std::pair<double, double> hermite_ppav_bounds(Genus g);

enum class Verdict { NotJacobian, NotHyperellipticJacobian, Inconclusive };
const char* to_string(Verdict v);

struct ExclusionMargins {
    double m1_bs = 0.0;          // thm_bs_threshold - m1_sq
    double m1_main = 0.0;        // log(4g - 2) - m1_sq
    double m2_main = 0.0;        // 3.1 log(8g - 7) - m2_sq
    double hyperelliptic = 0.0;  // hyperelliptic_threshold - m1_sq
};

struct ExclusionVerdict {
    int g = 0;
    double m1_sq = 0.0;
    double m2_sq = 0.0;
    double thm_bs_threshold = 0.0;
    double thm_main_m1_threshold = 0.0;
    double thm_main_m2_threshold = 0.0;
    double hyperelliptic_threshold = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    ExclusionMargins margins;
    bool tests_enabled = true;  // false for plain (non det-1) input
    SuccessiveMinima minima;
};

ExclusionVerdict jacobian_exclusion(const GramMatrix& gram, std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace schottky
