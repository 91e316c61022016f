#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace schottky::detail {

// Incremental fraction-free row echelon form over the integers. Rows are
// reduced against earlier rows in insertion order, so each stored row is
// zero at every earlier pivot.
class RankTracker {
public:
    explicit RankTracker(int dim) : dim_(dim) {}

    // Adds v if it is independent of the rows held so far.
    bool try_add(const std::vector<long long>& v);
    int rank() const noexcept { return static_cast<int>(rows_.size()); }

private:
    using Big = boost::multiprecision::cpp_int;
    int dim_;
    std::vector<std::vector<Big>> rows_;
    std::vector<int> pivots_;
};

} // namespace schottky::detail
