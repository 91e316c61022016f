#include "schottky/cli.hpp"

#include "schottky/bounds.hpp"
#include "schottky/certify.hpp"
#include "schottky/collar.hpp"
#include "schottky/errors.hpp"
#include "schottky/gram_io.hpp"
#include "schottky/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace schottky {

namespace {

// Raised for bad arguments that CLI11 cannot check itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t budget_override(std::uint64_t flag, std::uint64_t fallback) {
    if (flag > 0) return flag;
    const char* env = std::getenv("SCHOTTKY_GAUGE_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || v == 0 || env[0] == '-') {
        throw UsageError("SCHOTTKY_GAUGE_BUDGET must be a positive integer");
    }
    return v;
}

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

struct Common {
    std::string format = "table";
    std::uint64_t budget = 0;
    OutputFormat fmt() const { return parse_format(format); }
};

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
}

// ---- bounds ------------------------------------------------------------------

std::vector<Record> bounds_rows(long long g_value) {
    const Genus g(g_value);
    const auto main = thm_main_bounds(g);
    const auto sys = systole_bounds(g);
    const auto herm = hermite_ppav_bounds(g);
    auto row = [](const char* name, double v) { return Record{{"name", name}, {"value", v}}; };
    return {row("thm_bs_upper", thm_bs_upper(g)),
            row("thm_main_m1", main.first),
            row("thm_main_m2", main.second),
            row("systole_gamma1", sys.first),
            row("systole_gamma2", sys.second),
            row("hyperelliptic", hyperelliptic_bound()),
            row("bavard", bavard_bound(g)),
            row("hermite_lower", herm.first),
            row("hermite_upper", herm.second),
            row("minkowski_product_log", minkowski_product_log_bound(g.value()))};
}

// ---- minima / exclude ---------------------------------------------------------

std::vector<Record> minima_rows(const SuccessiveMinima& m) {
    std::vector<Record> rows;
    for (int i = 0; i < m.k; ++i) {
        rows.push_back(Record{{"k", i + 1},
                              {"m_sq", m.values[i]},
                              {"witness", join(m.witnesses[i].coeffs)}});
    }
    return rows;
}

Record exclusion_record(const ExclusionVerdict& v) {
    Record r;
    r["g"] = v.g;
    r["verdict"] = to_string(v.verdict);
    r["tests_enabled"] = v.tests_enabled;
    r["m1_sq"] = v.m1_sq;
    r["m2_sq"] = v.m2_sq;
    r["thm_bs_threshold"] = v.thm_bs_threshold;
    r["thm_main_m1_threshold"] = v.thm_main_m1_threshold;
    r["thm_main_m2_threshold"] = v.thm_main_m2_threshold;
    r["hyperelliptic_threshold"] = v.hyperelliptic_threshold;
    r["margin_m1"] = v.margins.m1_bs;
    r["margin_m1_main"] = v.margins.m1_main;
    r["margin_m2_main"] = v.margins.m2_main;
    r["margin_hyperelliptic"] = v.margins.hyperelliptic;
    return r;
}

// ---- ypiece / collar ----------------------------------------------------------

Record ypiece_record(double gamma, double w, int config) {
    Record r;
    r["config"] = config;
    r["gamma"] = gamma;
    r["w"] = w;
    try {
        if (config == 1) {
            r["nu"] = y1_nu(gamma, w);
            r["nu_coarse"] = 2.0 * gamma + 4.0 * w;
            r["eta_bound"] = y1_eta_bound(gamma, w);
        } else {
            r["nu1_bound"] = y2_nu1_exact(gamma, w);
            r["nu1_coarse"] = gamma / 2.0 + 2.0 * w;
        }
        r["status"] = "ok";
    } catch (const DomainError&) {
        r["status"] = "degenerate";
    }
    return r;
}

Record collar_record(double gamma, long long g) {
    Record r;
    r["gamma"] = gamma;
    r["W"] = Constants::W();
    r["W_prime"] = Constants::Wp();
    r["K"] = Constants::K;
    r["separation"] = collar_separation(gamma);
    const double w1 = collar_width_lower_bound(gamma, CollarConfig::Config1, true);
    const double w2 = collar_width_lower_bound(gamma, CollarConfig::Config2, true);
    r["width_config1"] = w1;
    r["width_config2"] = w2;
    r["capacity_config1"] = capacity(gamma, w1);
    r["capacity_config2"] = capacity(gamma, w2);
    if (g > 0) r["width_area_upper"] = collar_width_area_upper(gamma, static_cast<int>(g));
    return r;
}

// ---- corollary ------------------------------------------------------------------

std::vector<Signature> parse_pieces(const std::string& text) {
    std::vector<Signature> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("pieces are written g:n,g:n,...");
        try {
            std::size_t a = 0;
            std::size_t b = 0;
            const std::string gs = item.substr(0, colon);
            const std::string ns = item.substr(colon + 1);
            Signature s{std::stoi(gs, &a), std::stoi(ns, &b)};
            if (a != gs.size() || b != ns.size()) throw std::invalid_argument(item);
            out.push_back(s);
        } catch (const std::logic_error&) {
            throw UsageError("bad piece: " + item);
        }
    }
    return out;
}

Decomposition read_decomposition(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError(ValidationKind::ParseError, "cannot open " + path);
    try {
        const auto j = nlohmann::json::parse(f);
        Decomposition d;
        d.t = j.at("t").get<double>();
        for (const auto& p : j.at("pieces")) {
            if (p.is_array()) {
                d.pieces.push_back(Signature{p.at(0).get<int>(), p.at(1).get<int>()});
            } else {
                d.pieces.push_back(Signature{p.at("g").get<int>(), p.at("n").get<int>()});
            }
        }
        long long total = 0;
        for (const auto& p : d.pieces) total += p.n;
        d.n_cut = j.value("n_cut", static_cast<int>((total + 1) / 2));
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(ValidationKind::ParseError, e.what());
    }
}

std::vector<Record> corollary_rows(const CorollaryResult& c) {
    std::vector<Record> rows;
    for (const auto& p : c.pieces) {
        rows.push_back(Record{{"g", p.sig.g},
                              {"n", p.sig.n},
                              {"bound", p.bound},
                              {"plus3_variant", p.plus3_variant},
                              {"discrepancy", p.discrepancy},
                              {"M", c.M},
                              {"denominator", c.denominator},
                              {"warning", c.warning}});
    }
    return rows;
}

} // namespace

int certify_exit_code(const std::vector<CertReport>& reports) {
    bool undecided = false;
    for (const auto& r : reports) {
        if (r.status == CertStatus::Violated && !r.exempt) return kExitViolated;
        undecided = undecided || (r.status != CertStatus::Certified && !r.exempt);
    }
    return undecided ? kExitUndecided : kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds, lattice minima and interval certification for hyperbolic surfaces", "schottky-gauge"};
    app.require_subcommand(1);
    Common common;

    long long g = 0;
    auto* bounds = app.add_subcommand("bounds", "Evaluate every named bound at genus g");
    bounds->add_option("--g", g, "Genus")->required();
    add_format(bounds, common);

    std::string file;
    int k = 0;
    auto* minima = app.add_subcommand("minima", "Successive minima of a Gram matrix");
    minima->add_option("--file", file, "Gram matrix file")->required();
    minima->add_option("--k", k, "Number of minima")->required()->check(CLI::PositiveNumber);
    minima->add_option("--budget", common.budget, "Enumeration node budget");
    add_format(minima, common);

    auto* exclude = app.add_subcommand("exclude", "Jacobian exclusion test for a PPAV Gram matrix");
    exclude->add_option("--file", file, "Gram matrix file")->required();
    exclude->add_option("--budget", common.budget, "Enumeration node budget");
    add_format(exclude, common);

    std::vector<std::string> families{"all"};
    CertOptions opts;
    auto* certify_cmd = app.add_subcommand("certify", "Run the certification suite");
    certify_cmd->add_option("--families", families, "Family ids, or 'all' for the default suite")->delimiter(',');
    certify_cmd->add_option("--gmax", opts.gmax, "Largest genus checked directly");
    certify_cmd->add_option("--tol", opts.tol, "Normalized cell width floor");
    certify_cmd->add_option("--threads", opts.threads, "Worker threads (0: hardware)");
    certify_cmd->add_option("--budget", common.budget, "Cells per region");
    add_format(certify_cmd, common);

    double gamma = 0.0;
    double w = 0.0;
    int config = 1;
    auto* ypiece = app.add_subcommand("ypiece", "Boundary lengths of the Y-piece configurations");
    ypiece->add_option("--gamma", gamma, "Systole length")->required();
    ypiece->add_option("--w", w, "Collar width")->required();
    ypiece->add_option("--config", config, "Configuration")->check(CLI::IsMember({1, 2}));
    add_format(ypiece, common);

    long long collar_g = 0;
    auto* collar = app.add_subcommand("collar", "Collar widths and capacities of a geodesic");
    collar->add_option("--gamma", gamma, "Geodesic length")->required();
    collar->add_option("--g", collar_g, "Genus, for the area bound");
    add_format(collar, common);

    double t = 0.0;
    std::string pieces;
    int n_cut = -1;
    auto* corollary = app.add_subcommand("corollary", "Per-piece systole bounds of a decomposition");
    auto* t_opt = corollary->add_option("--t", t, "Upper bound on the cutting geodesics");
    auto* p_opt = corollary->add_option("--pieces", pieces, "Pieces g:n,g:n,...");
    corollary->add_option("--ncut", n_cut, "Number of cutting geodesics");
    auto* f_opt = corollary->add_option("--file", file, "Decomposition JSON file");
    f_opt->excludes(t_opt)->excludes(p_opt);
    add_format(corollary, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat fmt = common.fmt();
        if (bounds->parsed()) {
            if (g < 2) throw UsageError("--g must be at least 2");
            out << render(bounds_rows(g), fmt);
            return kExitOk;
        }
        if (minima->parsed()) {
            const GramMatrix gram = load_gram(file);
            if (k > gram.dim()) throw UsageError("--k exceeds the dimension");
            const auto m = successive_minima(gram, k, budget_override(common.budget, kDefaultNodeBudget));
            out << render(minima_rows(m), fmt);
            return kExitOk;
        }
        if (exclude->parsed()) {
            const GramMatrix gram = load_gram(file);
            if (gram.mode() != GramMode::PPAV) {
                throw ValidationError(ValidationKind::DeterminantNotOne, "exclusion needs a PPAV Gram matrix");
            }
            if (gram.genus() < 2) throw UsageError("exclusion needs dimension at least 4");
            const auto v = jacobian_exclusion(gram, budget_override(common.budget, kDefaultNodeBudget));
            out << render({exclusion_record(v)}, fmt);
            return kExitOk;
        }
        if (certify_cmd->parsed()) {
            if (opts.gmax < 2) throw UsageError("--gmax must be at least 2");
            if (!(opts.tol > 0)) throw UsageError("--tol must be positive");
            opts.budget = budget_override(common.budget, opts.budget);
            std::vector<const CertFamily*> selected;
            if (families.size() == 1 && families[0] == "all") {
                selected = default_suite();
            } else {
                for (const auto& id : families) {
                    const CertFamily* f = find_family(id);
                    if (f == nullptr) throw UsageError("unknown family: " + id);
                    selected.push_back(f);
                }
            }
            const auto reports = run_all(selected, opts);
            if (fmt == OutputFormat::JSON) {
                out << reports_json(reports);
            } else {
                std::vector<Record> rows;
                for (const auto& r : reports) rows.push_back(to_summary(r));
                out << render(rows, fmt);
            }
            return certify_exit_code(reports);
        }
        if (ypiece->parsed()) {
            if (!(gamma > 0) || !(w > 0)) throw UsageError("--gamma and --w must be positive");
            const Record r = ypiece_record(gamma, w, config);
            if (fmt == OutputFormat::PlainTable && r["status"] == "degenerate") {
                out << "degenerate\n";
            } else {
                out << render({r}, fmt);
            }
            return kExitOk;
        }
        if (collar->parsed()) {
            if (!(gamma > 0)) throw UsageError("--gamma must be positive");
            if (collar_g != 0 && collar_g < 2) throw UsageError("--g must be at least 2");
            out << render({collar_record(gamma, collar_g)}, fmt);
            return kExitOk;
        }
        if (corollary->parsed()) {
            Decomposition d;
            if (!file.empty()) {
                d = read_decomposition(file);
            } else {
                if (t_opt->count() == 0 || p_opt->count() == 0) throw UsageError("--t and --pieces are required");
                d.t = t;
                d.pieces = parse_pieces(pieces);
                long long total = 0;
                for (const auto& p : d.pieces) total += p.n;
                d.n_cut = n_cut >= 0 ? n_cut : static_cast<int>((total + 1) / 2);
            }
            if (!(d.t > 0)) throw UsageError("t must be positive");
            out << render(corollary_rows(corollary_bound(d)), fmt);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << e.what() << ": " << e.detail() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace schottky
