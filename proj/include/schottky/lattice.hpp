#pragma once

#include <cstdint>
#include <vector>

namespace schottky {

enum class GramMode { PPAV, Plain };

struct Reduction;

// Every floating-point tolerance used by the lattice code.
struct LatticeTolerances {
    static constexpr double symmetry = 1e-12;       // relative to max |G_ij|
    static constexpr double norm_recompute = 1e-9;  // relative
    static constexpr double radius_slack = 1e-9;    // radius_sq * (1 + slack)
    static constexpr double determinant = 1e-6;     // PPAV |det - 1|
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;
inline constexpr std::uint64_t kMaxLllSwaps = 1'000'000ULL;

// Validated symmetric positive-definite Gram matrix, row-major.
class GramMatrix {
public:
    int dim() const noexcept { return dim_; }
    GramMode mode() const noexcept { return mode_; }
    double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
    const std::vector<double>& entries() const noexcept { return entries_; }
    double determinant() const noexcept { return det_; }
    // g = dim / 2.
    int genus() const noexcept { return dim_ / 2; }

    // Quadratic form x^T G x evaluated in extended precision.
    double norm_sq(const std::vector<long long>& x) const;

private:
    friend GramMatrix validate(const std::vector<double>&, int, GramMode);
    friend Reduction reduce(const GramMatrix&);
    int dim_ = 0;
    GramMode mode_ = GramMode::Plain;
    std::vector<double> entries_;
    double det_ = 1.0;
};

// Throws ValidationError (NonFinite, NotSquare, OddDimension, NotSymmetric,
// NotPositiveDefinite, DeterminantNotOne). Symmetrizes (G + G^T)/2.
GramMatrix validate(const std::vector<double>& row_major, int dim, GramMode mode);
GramMatrix validate(const std::vector<std::vector<double>>& rows, GramMode mode);

struct ShortVector {
    std::vector<long long> coeffs;
    double norm_sq = 0.0;
};

struct Reduction {
    GramMatrix reduced;
    // Row-major dim x dim integer matrix T with det +-1; column j holds the
    // j-th reduced basis vector in input coordinates, reduced = T^T G T.
    std::vector<long long> transform;
    std::uint64_t swaps = 0;
};

// LLL reduction with delta = 0.99.
Reduction reduce(const GramMatrix& gram);

// All nonzero integer vectors with x^T G x <= radius_sq (1 + slack), one per
// +- pair (first nonzero coordinate positive), sorted by norm then
// lexicographically.
std::vector<ShortVector> enumerate_below(const GramMatrix& gram, double radius_sq,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

struct SuccessiveMinima {
    int k = 0;
    std::vector<double> values;
    std::vector<ShortVector> witnesses;
    int witness_rank = 0;  // exact integer rank of the witness matrix
};

SuccessiveMinima successive_minima(const GramMatrix& gram, int k,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

// Minkowski's bound on the first minimum used as the initial search radius:
// (4/pi) det^{1/d} Gamma(d/2 + 1)^{2/d}.
double minkowski_first_radius(const GramMatrix& gram);

struct MinkowskiReport {
    double log_product = 0.0;  // sum of log m_k^2
    double log_bound = 0.0;    // log((4/pi)^g (g!)^2) + log det
    double slack = 0.0;
    bool pass = false;
};

MinkowskiReport check_minkowski(const GramMatrix& gram, const SuccessiveMinima& minima);

// Exact rank of an integer matrix (rows of equal length).
int integer_rank(const std::vector<std::vector<long long>>& rows);

} // namespace schottky
