#pragma once

#include "schottky/interval.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace schottky {

enum class CertStatus { Certified, Violated, Undecided };
enum class TailStatus { Proven, CheckedToBound, NotApplicable };

const char* to_string(CertStatus s);
const char* to_string(TailStatus s);

// One coordinate of a parameter box. Integer dimensions hold integer
// endpoints and are bisected down to single integers; log_scale dimensions
// (positive ranges spanning orders of magnitude) are measured and split
// geometrically.
struct Dim {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    bool integer = false;
    bool log_scale = false;
};

// Result of evaluating a slack function over a cell. `slack` must enclose
// the slack at every point of the cell. `vacuous` marks cells on which the
// configuration does not exist, which count as satisfied. A slack function
// that throws DomainError has no enclosure on the cell; the cell is split.
struct CellValue {
    Interval slack;
    bool vacuous = false;
};

using SlackFn = std::function<CellValue(std::span<const Interval>)>;

struct Region {
    std::string name;
    std::vector<Dim> dims;
    SlackFn slack;
};

struct CertOptions {
    double tol = 1e-9;                    // normalized cell width floor
    std::uint64_t budget = 10'000'000;    // cells per region
    long long gmax = 1'000'000;           // largest genus checked directly
    unsigned threads = 0;                 // 0: hardware concurrency
};

using Point = std::vector<std::pair<std::string, double>>;

struct RegionReport {
    std::string name;
    CertStatus status = CertStatus::Certified;
    std::optional<Interval> min_slack;  // empty if every cell was vacuous
    Point witness;
    std::uint64_t cells_processed = 0;
    int max_depth = 0;
};

// Adaptive bisection of one region.
RegionReport certify_region(const Region& region, double tol, std::uint64_t budget, unsigned threads = 1);

// Main region plus the regions that extend the claim beyond g_max (or
// beyond the directly checked range of an unbounded length parameter).
struct FamilyPlan {
    Region main;
    std::vector<Region> tail;
};

struct CertFamily {
    std::string id;
    std::string name;
    std::string claim;
    bool exempt = false;  // may be Undecided without failing a run
    std::function<FamilyPlan(const CertOptions&)> plan;
};

struct CertReport {
    std::string family;
    std::string name;
    CertStatus status = CertStatus::Certified;
    std::optional<Interval> min_slack;
    Point witness;
    std::uint64_t cells_processed = 0;
    int max_depth = 0;
    TailStatus tail_status = TailStatus::NotApplicable;
    bool exempt = false;
    std::vector<RegionReport> regions;  // main first, then tail regions
};

CertReport certify(const CertFamily& family, const CertOptions& options);

// Every registered family, in registry order. The last entry (CF-F') is
// exempt and not part of the default suite.
const std::vector<CertFamily>& registry();
const CertFamily* find_family(const std::string& id);
// The default suite: every non-exempt family.
std::vector<const CertFamily*> default_suite();

std::vector<CertReport> run_all(const std::vector<const CertFamily*>& families, const CertOptions& options);
std::vector<CertReport> run_all(const CertOptions& options);

// True when every non-exempt report is Certified.
bool all_certified(const std::vector<CertReport>& reports);

} // namespace schottky
