#pragma once

// Exhaustive reference implementations for small lattices. Independent of the
// library: no reduction, no enumeration tree, long double Gaussian elimination.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace brute {

using Matrix = std::vector<double>;  // row-major d x d

inline long double quad(const Matrix& g, int d, const std::vector<long long>& x) {
    long double s = 0.0L;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) s += static_cast<long double>(g[i * d + j]) * x[i] * x[j];
    }
    return s;
}

inline std::vector<long double> inverse(const Matrix& g, int d) {
    std::vector<long double> a(g.begin(), g.end());
    std::vector<long double> inv(static_cast<std::size_t>(d) * d, 0.0L);
    for (int i = 0; i < d; ++i) inv[i * d + i] = 1.0L;
    for (int c = 0; c < d; ++c) {
        int p = c;
        for (int r = c + 1; r < d; ++r) {
            if (std::fabs(a[r * d + c]) > std::fabs(a[p * d + c])) p = r;
        }
        for (int k = 0; k < d; ++k) {
            std::swap(a[c * d + k], a[p * d + k]);
            std::swap(inv[c * d + k], inv[p * d + k]);
        }
        const long double piv = a[c * d + c];
        for (int k = 0; k < d; ++k) {
            a[c * d + k] /= piv;
            inv[c * d + k] /= piv;
        }
        for (int r = 0; r < d; ++r) {
            if (r == c) continue;
            const long double f = a[r * d + c];
            for (int k = 0; k < d; ++k) {
                a[r * d + k] -= f * a[c * d + k];
                inv[r * d + k] -= f * inv[c * d + k];
            }
        }
    }
    return inv;
}

// Rank of integer rows by elimination over the rationals in long double; the
// entries seen here are tiny, so the pivots are exact.
inline int rank(std::vector<std::vector<long double>> rows) {
    int r = 0;
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (std::fabs(rows[i][c]) > 1e-12L) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            const long double f = rows[i][c] / rows[r][c];
            for (int k = c; k < n; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

struct Vec {
    std::vector<long long> x;
    long double norm;
};

// All nonzero x with x^T G x <= radius (one of each +- pair).
inline std::vector<Vec> all_below(const Matrix& g, int d, long double radius) {
    const auto inv = inverse(g, d);
    std::vector<long long> bound(d);
    for (int i = 0; i < d; ++i) {
        bound[i] = static_cast<long long>(std::floor(std::sqrt(radius * inv[i * d + i]) + 1e-9L));
    }
    std::vector<Vec> out;
    std::vector<long long> x(d);
    for (int i = 0; i < d; ++i) x[i] = -bound[i];
    while (true) {
        bool nonzero = false;
        bool positive_lead = false;
        for (int i = 0; i < d; ++i) {
            if (x[i] != 0) {
                nonzero = true;
                positive_lead = x[i] > 0;
                break;
            }
        }
        if (nonzero && positive_lead) {
            const long double n = quad(g, d, x);
            if (n <= radius) out.push_back({x, n});
        }
        int i = 0;
        while (i < d && x[i] == bound[i]) {
            x[i] = -bound[i];
            ++i;
        }
        if (i == d) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return a.norm < b.norm; });
    return out;
}

inline long long box_size(const Matrix& g, int d, long double radius) {
    const auto inv = inverse(g, d);
    long long n = 1;
    for (int i = 0; i < d; ++i) n *= 2 * static_cast<long long>(std::floor(std::sqrt(radius * inv[i * d + i]))) + 1;
    return n;
}

struct Minima {
    std::vector<double> values;
    std::vector<std::vector<long long>> witnesses;
};

// Greedy over all vectors up to the largest diagonal entry (the basis
// vectors alone give k independent vectors of at most that norm).
inline Minima successive_minima(const Matrix& g, int d, int k) {
    long double radius = 0.0L;
    for (int i = 0; i < d; ++i) radius = std::max<long double>(radius, g[i * d + i]);
    const auto all = all_below(g, d, radius * (1.0L + 1e-12L));
    Minima m;
    std::vector<std::vector<long double>> chosen;
    for (const auto& v : all) {
        if (static_cast<int>(m.values.size()) == k) break;
        auto trial = chosen;
        trial.emplace_back(v.x.begin(), v.x.end());
        if (rank(trial) == static_cast<int>(trial.size())) {
            chosen = std::move(trial);
            m.values.push_back(static_cast<double>(v.norm));
            m.witnesses.push_back(v.x);
        }
    }
    if (static_cast<int>(m.values.size()) != k) throw std::logic_error("brute force found too few vectors");
    return m;
}

// B^T B with B = I + s * uniform(-1, 1); well conditioned for s < 1/d.
inline Matrix random_gram(std::mt19937_64& rng, int d, double s) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> b(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) b[i * d + j] = (i == j ? 1.0 : 0.0) + s * u(rng);
    }
    Matrix g(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            long double acc = 0.0L;
            for (int k = 0; k < d; ++k) acc += static_cast<long double>(b[k * d + i]) * b[k * d + j];
            g[i * d + j] = static_cast<double>(acc);
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < i; ++j) g[i * d + j] = g[j * d + i];
    }
    return g;
}

inline long double determinant(const Matrix& g, int d) {
    std::vector<long double> a(g.begin(), g.end());
    long double det = 1.0L;
    for (int c = 0; c < d; ++c) {
        int p = c;
        for (int r = c + 1; r < d; ++r) {
            if (std::fabs(a[r * d + c]) > std::fabs(a[p * d + c])) p = r;
        }
        if (p != c) {
            for (int k = 0; k < d; ++k) std::swap(a[c * d + k], a[p * d + k]);
            det = -det;
        }
        det *= a[c * d + c];
        for (int r = c + 1; r < d; ++r) {
            const long double f = a[r * d + c] / a[c * d + c];
            for (int k = c; k < d; ++k) a[r * d + k] -= f * a[c * d + k];
        }
    }
    return det;
}

// Random Gram matrix rescaled to determinant 1.
inline Matrix random_det1_gram(std::mt19937_64& rng, int d, double s) {
    Matrix g = random_gram(rng, d, s);
    const long double scale = std::pow(determinant(g, d), -1.0L / d);
    for (auto& v : g) v = static_cast<double>(v * scale);
    return g;
}

// Random unimodular matrix as a product of elementary column operations.
inline std::vector<long long> random_unimodular(std::mt19937_64& rng, int d, int steps) {
    std::vector<long long> u(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) u[i * d + i] = 1;
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const int i = pick(rng);
        const int j = pick(rng);
        if (i == j) continue;
        const int c = coef(rng);
        for (int r = 0; r < d; ++r) u[r * d + j] += c * u[r * d + i];
    }
    return u;
}

// U^T G U.
inline Matrix transform(const Matrix& g, const std::vector<long long>& u, int d) {
    Matrix out(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            long double acc = 0.0L;
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) acc += static_cast<long double>(u[a * d + i]) * g[a * d + b] * u[b * d + j];
            }
            out[i * d + j] = static_cast<double>(acc);
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < i; ++j) out[i * d + j] = out[j * d + i];
    }
    return out;
}

} // namespace brute
