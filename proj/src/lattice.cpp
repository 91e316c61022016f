#include "schottky/lattice.hpp"

#include "rank_tracker.hpp"
#include "schottky/bounds.hpp"
#include "schottky/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schottky {

namespace {

using LD = long double;

// Gram-Schmidt data of a Gram matrix: G = L D L^T with L unit lower
// triangular (mu) and D = diag(B).
struct Gso {
    int d = 0;
    std::vector<LD> mu;  // mu[i * d + j], j < i
    std::vector<LD> B;

    LD& m(int i, int j) { return mu[static_cast<std::size_t>(i) * d + j]; }
    LD m(int i, int j) const { return mu[static_cast<std::size_t>(i) * d + j]; }
};

Gso compute_gso(const std::vector<LD>& G, int d) {
    Gso s;
    s.d = d;
    s.mu.assign(static_cast<std::size_t>(d) * d, 0.0L);
    s.B.assign(d, 0.0L);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < i; ++j) {
            LD v = G[static_cast<std::size_t>(i) * d + j];
            for (int l = 0; l < j; ++l) v -= s.m(j, l) * s.m(i, l) * s.B[l];
            s.m(i, j) = v / s.B[j];
        }
        LD v = G[static_cast<std::size_t>(i) * d + i];
        for (int l = 0; l < i; ++l) v -= s.m(i, l) * s.m(i, l) * s.B[l];
        s.B[i] = v;
        s.m(i, i) = 1.0L;
    }
    return s;
}

long long checked_sub_mul(long long a, long long q, long long b) {
    long long p = 0;
    long long r = 0;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) {
        throw NumericalBreakdown("integer overflow in basis transform");
    }
    return r;
}

ValidationError invalid(ValidationKind k, const std::string& detail) { return ValidationError(k, detail); }

} // namespace

double GramMatrix::norm_sq(const std::vector<long long>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("norm_sq: length mismatch");
    LD s = 0.0L;
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        LD row = 0.0L;
        for (int j = 0; j < dim_; ++j) row += static_cast<LD>((*this)(i, j)) * static_cast<LD>(x[j]);
        s += row * static_cast<LD>(x[i]);
    }
    return static_cast<double>(s);
}

GramMatrix validate(const std::vector<double>& raw, int dim, GramMode mode) {
    if (dim <= 0 || raw.size() != static_cast<std::size_t>(dim) * dim) {
        throw invalid(ValidationKind::NotSquare, "expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                                                     " entries, got " + std::to_string(raw.size()));
    }
    double scale = 0.0;
    for (double v : raw) {
        if (!std::isfinite(v)) throw invalid(ValidationKind::NonFinite, "entry is not finite");
        scale = std::max(scale, std::abs(v));
    }
    if (mode == GramMode::PPAV && dim % 2 != 0) {
        throw invalid(ValidationKind::OddDimension, "PPAV Gram matrices have even dimension 2g");
    }
    GramMatrix g;
    g.dim_ = dim;
    g.mode_ = mode;
    g.entries_ = raw;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            double a = raw[static_cast<std::size_t>(i) * dim + j];
            double b = raw[static_cast<std::size_t>(j) * dim + i];
            if (std::abs(a - b) > LatticeTolerances::symmetry * scale) {
                throw invalid(ValidationKind::NotSymmetric,
                              "entries (" + std::to_string(i) + "," + std::to_string(j) + ") differ");
            }
            double s = 0.5 * (a + b);
            g.entries_[static_cast<std::size_t>(i) * dim + j] = s;
            g.entries_[static_cast<std::size_t>(j) * dim + i] = s;
        }
    }
    std::vector<LD> G(g.entries_.begin(), g.entries_.end());
    Gso s = compute_gso(G, dim);
    LD det = 1.0L;
    for (int i = 0; i < dim; ++i) {
        if (!(s.B[i] > 0)) {
            throw invalid(ValidationKind::NotPositiveDefinite, "pivot " + std::to_string(i) + " is not positive");
        }
        det *= s.B[i];
    }
    g.det_ = static_cast<double>(det);
    if (mode == GramMode::PPAV && std::abs(g.det_ - 1.0) > LatticeTolerances::determinant) {
        throw invalid(ValidationKind::DeterminantNotOne, "determinant " + std::to_string(g.det_));
    }
    return g;
}

GramMatrix validate(const std::vector<std::vector<double>>& rows, GramMode mode) {
    const std::size_t d = rows.size();
    std::vector<double> flat;
    flat.reserve(d * d);
    for (const auto& r : rows) {
        if (r.size() != d) throw invalid(ValidationKind::NotSquare, "rows of unequal length");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return validate(flat, static_cast<int>(d), mode);
}

Reduction reduce(const GramMatrix& gram) {
    const int d = gram.dim();
    const LD delta = 0.99L;
    auto at = [d](int i, int j) { return static_cast<std::size_t>(i) * d + j; };

    std::vector<long long> T(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) T[at(i, i)] = 1;
    std::vector<LD> G(gram.entries().begin(), gram.entries().end());
    Gso s = compute_gso(G, d);
    std::uint64_t swaps = 0;

    // b_k <- b_k - q b_j
    auto sub_column = [&](int k, int j, long long q) {
        for (int r = 0; r < d; ++r) T[at(r, k)] = checked_sub_mul(T[at(r, k)], q, T[at(r, j)]);
        const LD qq = static_cast<LD>(q);
        const LD gkk = G[at(k, k)] - 2 * qq * G[at(k, j)] + qq * qq * G[at(j, j)];
        for (int i = 0; i < d; ++i) {
            if (i == k) continue;
            const LD v = G[at(k, i)] - qq * G[at(j, i)];
            G[at(k, i)] = v;
            G[at(i, k)] = v;
        }
        G[at(k, k)] = gkk;
        for (int l = 0; l < j; ++l) s.m(k, l) -= qq * s.m(j, l);
        s.m(k, j) -= qq;
    };

    int k = 1;
    while (k < d) {
        for (int pass = 0; pass < 64; ++pass) {
            bool changed = false;
            for (int j = k - 1; j >= 0; --j) {
                const LD mu = s.m(k, j);
                if (std::fabs(mu) <= 0.5L) continue;
                const LD q = std::nearbyint(mu);
                if (!(std::fabs(q) < 9.0e15L)) throw NumericalBreakdown("size reduction coefficient out of range");
                sub_column(k, j, static_cast<long long>(q));
                changed = true;
            }
            if (!changed) break;
            // Re-derive row k from the updated Gram entries to limit drift.
            s = compute_gso(G, d);
        }
        const LD mu = s.m(k, k - 1);
        if (s.B[k] < (delta - mu * mu) * s.B[k - 1]) {
            for (int r = 0; r < d; ++r) std::swap(T[at(r, k)], T[at(r, k - 1)]);
            for (int i = 0; i < d; ++i) std::swap(G[at(i, k)], G[at(i, k - 1)]);
            for (int i = 0; i < d; ++i) std::swap(G[at(k, i)], G[at(k - 1, i)]);
            s = compute_gso(G, d);
            if (++swaps > kMaxLllSwaps) throw NumericalBreakdown("LLL did not converge within the swap limit");
            k = std::max(k - 1, 1);
        } else {
            ++k;
        }
    }

    // Recompute T^T G T from the input so no update drift survives.
    std::vector<double> red(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        std::vector<long long> ci(d);
        for (int r = 0; r < d; ++r) ci[r] = T[at(r, i)];
        for (int j = i; j < d; ++j) {
            LD acc = 0.0L;
            for (int a = 0; a < d; ++a) {
                if (ci[a] == 0) continue;
                LD row = 0.0L;
                for (int b = 0; b < d; ++b) row += static_cast<LD>(gram(a, b)) * static_cast<LD>(T[at(b, j)]);
                acc += static_cast<LD>(ci[a]) * row;
            }
            red[at(i, j)] = static_cast<double>(acc);
            red[at(j, i)] = static_cast<double>(acc);
        }
    }
    GramMatrix reduced;
    reduced.dim_ = d;
    reduced.mode_ = gram.mode();
    reduced.entries_ = std::move(red);
    reduced.det_ = gram.determinant();
    return Reduction{std::move(reduced), std::move(T), swaps};
}

namespace {

class Enumerator {
public:
    Enumerator(const Gso& s, LD bound, std::uint64_t budget) : s_(s), bound_(bound), budget_(budget), x_(s.d, 0) {}

    std::vector<std::vector<long long>> run() {
        if (s_.d > 0) descend(s_.d - 1, 0.0L, true);
        return std::move(found_);
    }

private:
    void descend(int i, LD used, bool zero_above) {
        LD c = 0.0L;
        for (int j = i + 1; j < s_.d; ++j) c -= s_.m(j, i) * static_cast<LD>(x_[j]);
        const LD rem = bound_ - used;
        if (rem < 0) return;
        const LD rad = std::sqrt(rem / s_.B[i]);
        long long lo = static_cast<long long>(std::ceil(c - rad));
        const long long hi = static_cast<long long>(std::floor(c + rad));
        // One representative per +- pair: the highest nonzero coordinate is positive.
        if (zero_above) lo = std::max(lo, 0LL);
        for (long long v = lo; v <= hi; ++v) {
            if (++nodes_ > budget_) throw BudgetExceeded("enumeration node budget exhausted");
            const LD t = static_cast<LD>(v) - c;
            const LD next = used + s_.B[i] * t * t;
            if (next > bound_) continue;
            x_[i] = v;
            if (i == 0) {
                if (!(zero_above && v == 0)) found_.push_back(x_);
            } else {
                descend(i - 1, next, zero_above && v == 0);
            }
        }
        x_[i] = 0;
    }

    const Gso& s_;
    LD bound_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<long long> x_;
    std::vector<std::vector<long long>> found_;
};

bool norm_then_lex(const ShortVector& a, const ShortVector& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return a.coeffs < b.coeffs;
}

} // namespace

std::vector<ShortVector> enumerate_below(const GramMatrix& gram, double radius_sq, std::uint64_t node_budget) {
    if (!(radius_sq > 0) || !std::isfinite(radius_sq)) throw std::invalid_argument("radius_sq must be positive");
    const int d = gram.dim();
    const Reduction red = reduce(gram);
    std::vector<LD> G(red.reduced.entries().begin(), red.reduced.entries().end());
    const Gso s = compute_gso(G, d);
    const double bound = radius_sq * (1.0 + LatticeTolerances::radius_slack);
    // Search slightly wider than the bound; the final filter uses norms
    // recomputed in the input basis.
    Enumerator en(s, static_cast<LD>(bound) * (1.0L + 1e-10L), node_budget);
    std::vector<ShortVector> out;
    for (const auto& x : en.run()) {
        std::vector<long long> y(d, 0);
        for (int r = 0; r < d; ++r) {
            __int128 acc = 0;
            for (int c = 0; c < d; ++c) acc += static_cast<__int128>(red.transform[static_cast<std::size_t>(r) * d + c]) * x[c];
            if (acc > INT64_MAX || acc < INT64_MIN) throw NumericalBreakdown("coefficient overflow");
            y[r] = static_cast<long long>(acc);
        }
        for (long long v : y) {
            if (v == 0) continue;
            if (v < 0) {
                for (auto& e : y) e = -e;
            }
            break;
        }
        const double n = gram.norm_sq(y);
        if (n <= bound) out.push_back({std::move(y), n});
    }
    std::sort(out.begin(), out.end(), norm_then_lex);
    return out;
}

double minkowski_first_radius(const GramMatrix& gram) {
    const double d = gram.dim();
    return (4.0 / M_PI) * std::exp(std::log(gram.determinant()) / d + 2.0 / d * std::lgamma(d / 2.0 + 1.0));
}

SuccessiveMinima successive_minima(const GramMatrix& gram, int k, std::uint64_t node_budget) {
    const int d = gram.dim();
    if (k < 1 || k > d) throw std::invalid_argument("successive_minima requires 1 <= k <= dim");
    double radius = minkowski_first_radius(gram);
    SuccessiveMinima res;
    res.k = k;
    for (;;) {
        detail::RankTracker tracker(d);
        res.values.clear();
        res.witnesses.clear();
        for (auto& v : enumerate_below(gram, radius, node_budget)) {
            if (!tracker.try_add(v.coeffs)) continue;
            res.values.push_back(v.norm_sq);
            res.witnesses.push_back(std::move(v));
            if (static_cast<int>(res.values.size()) == k) break;
        }
        if (static_cast<int>(res.values.size()) == k) {
            res.witness_rank = tracker.rank();
            break;
        }
        radius *= 2.0;
    }
    if (gram.mode() == GramMode::PPAV) {
        const double hermite = (4.0 / M_PI) * std::exp(log_factorial(gram.genus()) / gram.genus());
        if (res.values.front() > hermite * (1.0 + LatticeTolerances::norm_recompute)) {
            throw NumericalBreakdown("first minimum exceeds the Hermite bound for a det-1 lattice");
        }
    }
    return res;
}

MinkowskiReport check_minkowski(const GramMatrix& gram, const SuccessiveMinima& minima) {
    const int d = gram.dim();
    if (minima.k < d || static_cast<int>(minima.values.size()) < d) {
        throw IncompleteMinima("Minkowski check needs all dim successive minima");
    }
    if (d % 2 != 0) throw std::invalid_argument("Minkowski check needs even dimension 2g");
    MinkowskiReport r;
    for (int i = 0; i < d; ++i) r.log_product += std::log(minima.values[i]);
    r.log_bound = minkowski_product_log_bound(d / 2) + std::log(gram.determinant());
    r.slack = r.log_bound - r.log_product;
    r.pass = r.slack >= 0;
    return r;
}

} // namespace schottky
