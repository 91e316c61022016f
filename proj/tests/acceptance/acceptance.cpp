// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "../support/brute_force.hpp"
#include "../support/oracle_values.hpp"
#include "../support/properties.hpp"
#include "schottky/bounds.hpp"
#include "schottky/certify.hpp"
#include "schottky/collar.hpp"
#include "schottky/errors.hpp"
#include "schottky/gram_io.hpp"
#include "schottky/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace schottky;

namespace {

#ifndef SCHOTTKY_TEST_DATA
#error "SCHOTTKY_TEST_DATA must point at tests/data"
#endif

int g_failures = 0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > limit_s) {
        o.pass = false;
        o.detail = "runtime over " + std::to_string(limit_s) + " s";
    }
    if (!o.pass) ++g_failures;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

CertOptions full_options() {
    CertOptions o;  // g_max = 10^6, budget 10^7 cells per region
    return o;
}

void require_certified(Outcome& o, const CertReport& r, bool needs_tail) {
    o.require(r.status == CertStatus::Certified, r.family + " is " + to_string(r.status));
    o.require(r.min_slack.has_value() && r.min_slack->lo() > 0, r.family + " min_slack.lo not positive");
    if (needs_tail) o.require(r.tail_status == TailStatus::Proven, r.family + " tail not proven");
}

std::string data(const char* name) { return std::string(SCHOTTKY_TEST_DATA) + "/" + name; }

} // namespace

int main() {
    criterion(1, "collar constants and capacity coefficients", 1.0, [] {
        Outcome o;
        o.require(near(Constants::W(), 1.3169578969, 1e-9), "W = " + num(Constants::W()));
        o.require(near(Constants::Wp(), 0.8047189562, 1e-9), "W' = " + num(Constants::Wp()));
        const double cw = capacity(1.0, Constants::W());
        const double cwp = capacity(1.0, Constants::Wp());
        o.require(near(cw, oracle::kCapacityW, 1e-9) && cw <= 0.5, "capacity(1, W) = " + num(cw));
        o.require(near(cwp, oracle::kCapacityWp, 1e-9) && cwp <= 0.7, "capacity(1, W') = " + num(cwp));
        o.require(capacity(Interval(1.0), W_v<Interval>()).hi() <= 0.5, "enclosure of capacity(1, W) above 0.5");
        o.require(capacity(Interval(1.0), Wp_v<Interval>()).hi() <= 0.7, "enclosure of capacity(1, W') above 0.7");
        return o;
    });

    criterion(2, "hyperelliptic, disk-limit and naive constants", 1.0, [] {
        Outcome o;
        o.require(near(hyperelliptic_bound(), 2.4382, 1e-4), "hyperelliptic = " + num(hyperelliptic_bound()));
        o.require(near(hyperelliptic_bound(), oracle::kHyperelliptic, 1e-12), "hyperelliptic off the oracle");
        o.require(near(bavard_limit(), 5.1067, 1e-4), "limit = " + num(bavard_limit()));
        o.require(near(bavard_limit(), oracle::kBavardLimit, 1e-12), "limit off the oracle");
        o.require(near(naive_disk_bound(), 5.2678, 1e-4), "naive = " + num(naive_disk_bound()));
        o.require(near(naive_disk_bound(), oracle::kNaiveDisk, 1e-12), "naive off the oracle");
        return o;
    });

    criterion(3, "CF-A and CF-B certified for g in [2, 1e6] with proven tails", 600.0, [] {
        Outcome o;
        const CertOptions opts = full_options();
        for (const char* id : {"CF-A", "CF-B"}) {
            const auto r = certify(*find_family(id), opts);
            require_certified(o, r, true);
            std::printf("    %s: min_slack [%s, %s], %llu cells\n", id, num(r.min_slack->lo()).c_str(),
                        num(r.min_slack->hi()).c_str(), static_cast<unsigned long long>(r.cells_processed));
        }
        return o;
    });

    criterion(4, "CF-G, CF-J and CF-H certified with positive slack", 60.0, [] {
        Outcome o;
        const CertOptions opts = full_options();
        const auto g = certify(*find_family("CF-G"), opts);
        require_certified(o, g, false);
        o.require(g.min_slack->contains(oracle::kSlackG),
                  "CF-G margin " + num(g.min_slack->lo()) + " vs mpmath " + num(oracle::kSlackG));
        std::printf("    CF-G: margin %s (mpmath %s)\n", num(g.min_slack->lo()).c_str(), num(oracle::kSlackG).c_str());

        const auto j = certify(*find_family("CF-J"), opts);
        require_certified(o, j, true);
        const Region jr = find_family("CF-J")->plan(opts).main;
        o.require(jr.dims[0].lo <= 1.5, "CF-J domain misses alpha1 = 1.5");
        o.require(j.min_slack->hi() <= oracle::kSlackJ_15 * (1 + 1e-9), "CF-J minimum not at alpha1 = 1.5");

        const auto h = certify(*find_family("CF-H"), opts);
        require_certified(o, h, true);
        const Region hr = find_family("CF-H")->plan(opts).main;
        o.require(hr.dims[0].lo < 2.1 && hr.dims[0].hi >= 60.0, "CF-H domain misses [2.1, 60]");
        return o;
    });

    criterion(5, "CF-C, CF-D, CF-E and CF-F certified on their full domains", 900.0, [] {
        Outcome o;
        const CertOptions opts = full_options();
        for (const char* id : {"CF-C", "CF-D", "CF-E", "CF-F"}) {
            const auto r = certify(*find_family(id), opts);
            require_certified(o, r, true);
            std::printf("    %s: min_slack [%s, %s]\n", id, num(r.min_slack->lo()).c_str(),
                        num(r.min_slack->hi()).c_str());
        }
        return o;
    });

    criterion(6, "successive minima equal exhaustive search on 50 random forms", 120.0, [] {
        Outcome o;
        std::mt19937_64 rng(6006);
        int done = 0;
        while (done < 50) {
            const int d = 2 + done % 5;
            const auto m = brute::random_gram(rng, d, 0.25);
            long double radius = 0.0L;
            for (int i = 0; i < d; ++i) radius = std::max<long double>(radius, m[i * d + i]);
            if (brute::box_size(m, d, radius) > 3'000'000) continue;
            const auto ref = brute::successive_minima(m, d, d);
            const auto got = successive_minima(validate(m, d, GramMode::Plain), d);
            std::vector<double> a;
            std::vector<double> b;
            for (int k = 0; k < d; ++k) {
                o.require(std::fabs(got.values[k] - ref.values[k]) <= 1e-9 * ref.values[k],
                          "form " + std::to_string(done) + " k=" + std::to_string(k + 1));
                a.push_back(validate(m, d, GramMode::Plain).norm_sq(got.witnesses[k].coeffs));
                b.push_back(ref.values[k]);
            }
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            for (int k = 0; k < d; ++k) {
                o.require(std::fabs(a[k] - b[k]) <= 1e-9 * b[k], "witness norms differ on form " + std::to_string(done));
            }
            o.require(got.witness_rank == d, "witness rank below d");
            ++done;
        }
        const auto hex = successive_minima(load_gram(data("hexagonal.json")), 2);
        o.require(near(hex.values[0], oracle::kHexagonalMinSq, 1e-9) && near(hex.values[1], oracle::kHexagonalMinSq, 1e-9),
                  "hexagonal minima " + num(hex.values[0]) + ", " + num(hex.values[1]));
        return o;
    });

    criterion(7, "Minkowski's second theorem on 100 random det-1 forms", 600.0, [] {
        Outcome o;
        std::mt19937_64 rng(7007);
        double min_slack = 1e300;
        for (int i = 0; i < 100; ++i) {
            const int d = 4 + 2 * (i % 3);
            const auto g = validate(brute::random_det1_gram(rng, d, 0.3), d, GramMode::PPAV);
            const auto rep = check_minkowski(g, successive_minima(g, d));
            o.require(rep.pass && rep.slack >= 0, "form " + std::to_string(i) + " slack " + num(rep.slack));
            min_slack = std::min(min_slack, rep.slack);
        }
        std::printf("    smallest slack %s\n", num(min_slack).c_str());
        return o;
    });

    criterion(8, "exclusion pipeline end to end", 5.0, [] {
        Outcome o;
        const auto id = jacobian_exclusion(load_gram(data("identity4.txt")));
        o.require(id.verdict == Verdict::Inconclusive, "identity not Inconclusive");
        o.require(near(id.margins.m1_bs, oracle::kThmBs_2 - 1.0, 1e-12), "identity margin " + num(id.margins.m1_bs));
        o.require(near(id.margins.m2_main, oracle::kThmMainM2_2 - 1.0, 1e-12), "identity m2 margin");
        o.require(near(id.margins.hyperelliptic, oracle::kHyperelliptic - 1.0, 1e-12), "identity hyperelliptic margin");
        const auto hh = jacobian_exclusion(load_gram(data("hexhex4.json")));
        o.require(hh.verdict == Verdict::Inconclusive, "hexagonal pair not Inconclusive");
        o.require(near(hh.margins.m1_bs, oracle::kThmBs_2 - oracle::kHexagonalMinSq, 1e-9), "hexagonal m1 margin");
        o.require(near(hh.margins.m2_main, oracle::kThmMainM2_2 - oracle::kHexagonalMinSq, 1e-9), "hexagonal m2 margin");
        bool rejected = false;
        try {
            load_gram(data("notdet1.txt"));
        } catch (const ValidationError& e) {
            rejected = e.kind() == ValidationKind::DeterminantNotOne;
        }
        o.require(rejected, "non-det-1 input not rejected with DeterminantNotOne");
        return o;
    });

    criterion(9, "property suites, 10^4 cases each", 300.0, [] {
        Outcome o;
        const props::Result rs[] = {props::hexagon_y1_consistency(10000, 9001), props::capacity_properties(10000, 9002),
                                    props::transform_invariance(10000, 9003), props::scaling_covariance(10000, 9004)};
        const char* names[] = {"hexagon/Y-piece", "capacity", "unimodular invariance", "scaling"};
        for (int i = 0; i < 4; ++i) {
            o.require(rs[i].cases == 10000 && rs[i].failures == 0,
                      std::string(names[i]) + ": " + std::to_string(rs[i].failures) + " failures, " + rs[i].first_failure);
        }
        return o;
    });

    std::printf("criterion 10: N/A   existence statements are not checked numerically\n");

    std::printf("%s: %d failing criteria\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
