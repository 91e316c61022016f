#include "rank_tracker.hpp"

#include "schottky/lattice.hpp"

#include <stdexcept>

namespace schottky {

namespace detail {

bool RankTracker::try_add(const std::vector<long long>& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("rank tracker: length mismatch");
    std::vector<Big> x(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int p = pivots_[r];
        if (x[p] == 0) continue;
        const Big a = rows_[r][p];
        const Big b = x[p];
        Big g = 0;
        for (int j = 0; j < dim_; ++j) {
            x[j] = a * x[j] - b * rows_[r][j];
            g = gcd(g, x[j]);
        }
        if (g > 1) {
            for (auto& e : x) e /= g;
        }
    }
    for (int j = 0; j < dim_; ++j) {
        if (x[j] != 0) {
            rows_.push_back(std::move(x));
            pivots_.push_back(j);
            return true;
        }
    }
    return false;
}

} // namespace detail

int integer_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    detail::RankTracker tracker(static_cast<int>(rows.front().size()));
    for (const auto& r : rows) tracker.try_add(r);
    return tracker.rank();
}

} // namespace schottky
