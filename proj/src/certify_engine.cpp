#include "schottky/certify.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace schottky {

const char* to_string(CertStatus s) {
    switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::Violated: return "Violated";
    case CertStatus::Undecided: return "Undecided";
    }
    return "Unknown";
}

const char* to_string(TailStatus s) {
    switch (s) {
    case TailStatus::Proven: return "Proven";
    case TailStatus::CheckedToBound: return "Checked-to-bound";
    case TailStatus::NotApplicable: return "N/A";
    }
    return "Unknown";
}

namespace {

constexpr int kChunkLevels = 3;  // initial box split into up to 8 chunks
constexpr double kUnknownSlack = -std::numeric_limits<double>::max();

struct Cell {
    std::vector<Interval> box;
    int depth = 0;
};

class Subdivider {
public:
    explicit Subdivider(const Region& r) : region_(r) {}

    double normalized_width(const Cell& c, std::size_t i) const {
        const Dim& d = region_.dims[i];
        const Interval& x = c.box[i];
        if (x.hi() <= x.lo() || d.hi <= d.lo) return 0.0;
        if (d.log_scale) return std::log(x.hi() / x.lo()) / std::log(d.hi / d.lo);
        return (x.hi() - x.lo()) / (d.hi - d.lo);
    }

    // Index of the widest normalized dimension, or -1 if none can be split.
    int widest(const Cell& c) const {
        int best = -1;
        double w = 0.0;
        for (std::size_t i = 0; i < c.box.size(); ++i) {
            const double wi = normalized_width(c, i);
            if (wi > w) {
                w = wi;
                best = static_cast<int>(i);
            }
        }
        return best;
    }

    double max_width(const Cell& c) const {
        double w = 0.0;
        for (std::size_t i = 0; i < c.box.size(); ++i) w = std::max(w, normalized_width(c, i));
        return w;
    }

    double split_point(const Dim& d, const Interval& x) const {
        if (d.log_scale) return std::sqrt(x.lo()) * std::sqrt(x.hi());
        return x.lo() + 0.5 * (x.hi() - x.lo());
    }

    std::pair<Cell, Cell> split(const Cell& c, int i) const {
        const Dim& d = region_.dims[i];
        const Interval& x = c.box[i];
        Cell a = c;
        Cell b = c;
        a.depth = b.depth = c.depth + 1;
        double m = split_point(d, x);
        if (d.integer) {
            m = std::clamp(std::floor(m), x.lo(), x.hi() - 1.0);
            a.box[i] = Interval(x.lo(), m);
            b.box[i] = Interval(m + 1.0, x.hi());
        } else {
            m = std::clamp(m, x.lo(), x.hi());
            a.box[i] = Interval(x.lo(), m);
            b.box[i] = Interval(m, x.hi());
        }
        return {std::move(a), std::move(b)};
    }

    std::vector<Interval> midpoint(const Cell& c) const {
        std::vector<Interval> p;
        p.reserve(c.box.size());
        for (std::size_t i = 0; i < c.box.size(); ++i) {
            double m = split_point(region_.dims[i], c.box[i]);
            if (region_.dims[i].integer) m = std::clamp(std::round(m), c.box[i].lo(), c.box[i].hi());
            p.emplace_back(m);
        }
        return p;
    }

    // An enclosure that fails (division by an interval containing zero, a
    // logarithm of a nonpositive range, ...) says nothing about the cell, so
    // it is reported as an unbounded slack and the cell gets subdivided.
    CellValue eval(const std::vector<Interval>& box) const {
        try {
            return region_.slack(std::span<const Interval>(box));
        } catch (const DomainError&) {
            return CellValue{Interval(kUnknownSlack, -kUnknownSlack), false};
        }
    }

    Point to_point(const std::vector<Interval>& p) const {
        Point out;
        for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(region_.dims[i].name, p[i].mid());
        return out;
    }

private:
    const Region& region_;
};

struct ChunkResult {
    CertStatus status = CertStatus::Certified;
    double min_lo = std::numeric_limits<double>::infinity();
    double min_hi = std::numeric_limits<double>::infinity();
    bool any_value = false;
    std::vector<Interval> witness;
    std::uint64_t cells = 0;
    int max_depth = 0;
};

ChunkResult run_chunk(const Subdivider& sub, Cell start, double tol, std::uint64_t budget) {
    ChunkResult r;
    std::vector<Cell> stack;
    stack.push_back(std::move(start));
    auto note_point = [&](const std::vector<Interval>& p, const CellValue& v) {
        if (v.vacuous) return;
        if (v.slack.hi() < r.min_hi) {
            r.min_hi = v.slack.hi();
            r.witness = p;
        }
    };
    // Sample the midpoint and every corner of a cell that may hold the minimum.
    auto sample = [&](const Cell& c) {
        const std::vector<Interval> mid = sub.midpoint(c);
        note_point(mid, sub.eval(mid));
        const std::size_t d = c.box.size();
        if (d > 4) return;
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            std::vector<Interval> corner;
            for (std::size_t i = 0; i < d; ++i) corner.emplace_back((mask >> i) & 1 ? c.box[i].hi() : c.box[i].lo());
            note_point(corner, sub.eval(corner));
        }
    };
    while (!stack.empty()) {
        Cell c = std::move(stack.back());
        stack.pop_back();
        if (r.cells >= budget) {
            r.status = CertStatus::Undecided;
            // Remaining cells are unresolved; fold their slack into the bound.
            const CellValue v = sub.eval(c.box);
            if (!v.vacuous) {
                r.any_value = true;
                r.min_lo = std::min(r.min_lo, v.slack.lo());
            }
            continue;
        }
        ++r.cells;
        r.max_depth = std::max(r.max_depth, c.depth);
        const CellValue v = sub.eval(c.box);
        if (v.vacuous) continue;
        r.any_value = true;
        if (v.slack.lo() > 0) {
            if (v.slack.lo() < r.min_lo) r.min_lo = v.slack.lo();
            if (v.slack.lo() < r.min_hi) sample(c);
            continue;
        }
        const std::vector<Interval> mid = sub.midpoint(c);
        const CellValue mv = sub.eval(mid);
        note_point(mid, mv);
        if (!mv.vacuous && mv.slack.hi() < 0) {
            r.status = CertStatus::Violated;
            r.min_lo = std::min(r.min_lo, v.slack.lo());
            return r;
        }
        const int i = sub.widest(c);
        if (i < 0 || sub.max_width(c) < tol) {
            r.status = CertStatus::Undecided;
            r.min_lo = std::min(r.min_lo, v.slack.lo());
            continue;
        }
        auto [a, b] = sub.split(c, i);
        stack.push_back(std::move(b));
        stack.push_back(std::move(a));
    }
    return r;
}

} // namespace

RegionReport certify_region(const Region& region, double tol, std::uint64_t budget, unsigned threads) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    RegionReport rep;
    rep.name = region.name;
    for (const Dim& d : region.dims) {
        if (d.lo > d.hi) return rep;  // empty domain: vacuously certified
    }
    Subdivider sub(region);

    Cell root;
    for (const Dim& d : region.dims) root.box.emplace_back(d.lo, d.hi);
    std::vector<Cell> chunks{root};
    for (int level = 0; level < kChunkLevels; ++level) {
        std::vector<Cell> next;
        for (const Cell& c : chunks) {
            const int i = sub.widest(c);
            if (i < 0) {
                next.push_back(c);
                continue;
            }
            auto [a, b] = sub.split(c, i);
            next.push_back(std::move(a));
            next.push_back(std::move(b));
        }
        chunks = std::move(next);
    }

    const std::uint64_t per_chunk = std::max<std::uint64_t>(1, budget / chunks.size());
    std::vector<ChunkResult> results(chunks.size());
    unsigned nthreads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(chunks.size()));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i) results[i] = run_chunk(sub, chunks[i], tol, per_chunk);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < chunks.size(); i = next++) {
                    results[i] = run_chunk(sub, chunks[i], tol, per_chunk);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Merge in chunk order.
    double min_lo = std::numeric_limits<double>::infinity();
    double min_hi = std::numeric_limits<double>::infinity();
    bool any = false;
    std::vector<Interval> witness;
    std::vector<Interval> violation;
    bool violated = false;
    bool undecided = false;
    for (const ChunkResult& r : results) {
        rep.cells_processed += r.cells;
        rep.max_depth = std::max(rep.max_depth, r.max_depth);
        any = any || r.any_value;
        min_lo = std::min(min_lo, r.min_lo);
        if (r.status == CertStatus::Violated && !violated) {
            violated = true;
            violation = r.witness;
        }
        undecided = undecided || r.status == CertStatus::Undecided;
        if (r.min_hi < min_hi) {
            min_hi = r.min_hi;
            witness = r.witness;
        }
    }
    if (violated) witness = violation;
    rep.status = violated ? CertStatus::Violated : undecided ? CertStatus::Undecided : CertStatus::Certified;
    if (any) {
        const double hi = std::isfinite(min_hi) ? std::max(min_hi, min_lo) : min_lo;
        rep.min_slack = Interval(min_lo, hi);
    }
    if (!witness.empty()) rep.witness = sub.to_point(witness);
    return rep;
}

CertReport certify(const CertFamily& family, const CertOptions& options) {
    const FamilyPlan plan = family.plan(options);
    CertReport rep;
    rep.family = family.id;
    rep.name = family.name;
    rep.exempt = family.exempt;
    RegionReport main = certify_region(plan.main, options.tol, options.budget, options.threads);
    rep.status = main.status;
    rep.min_slack = main.min_slack;
    rep.witness = main.witness;
    rep.cells_processed = main.cells_processed;
    rep.max_depth = main.max_depth;
    rep.regions.push_back(std::move(main));

    if (plan.tail.empty()) {
        rep.tail_status = TailStatus::NotApplicable;
    } else {
        bool proven = true;
        for (const Region& t : plan.tail) {
            RegionReport tr = certify_region(t, options.tol, options.budget, options.threads);
            rep.cells_processed += tr.cells_processed;
            proven = proven && tr.status == CertStatus::Certified;
            rep.regions.push_back(std::move(tr));
        }
        rep.tail_status = proven ? TailStatus::Proven : TailStatus::CheckedToBound;
        if (!proven && rep.status == CertStatus::Certified) rep.status = CertStatus::Undecided;
    }
    return rep;
}

std::vector<CertReport> run_all(const std::vector<const CertFamily*>& families, const CertOptions& options) {
    std::vector<CertReport> out;
    out.reserve(families.size());
    for (const CertFamily* f : families) out.push_back(certify(*f, options));
    return out;
}

std::vector<CertReport> run_all(const CertOptions& options) { return run_all(default_suite(), options); }

bool all_certified(const std::vector<CertReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CertReport& r) { return r.exempt || r.status == CertStatus::Certified; });
}

} // namespace schottky
