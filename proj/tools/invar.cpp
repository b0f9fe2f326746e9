// Command-line front end: exact enumeration of invariant-ring generators,
// SL2 dimension series, the Weyl dimension formula, and the one-shot
// verification suites.
//
// Exit status: 0 success, 1 verification failure, 2 parameter error,
// 3 work budget exhausted, 4 mathematical inconsistency.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "invar/arith.hpp"
#include "invar/congruence.hpp"
#include "invar/io.hpp"
#include "invar/sl2.hpp"
#include "invar/torus.hpp"
#include "invar/verify.hpp"
#include "invar/weyl.hpp"

namespace {

using invar::io::ordered_json;

struct RunConfig {
    std::string format = "json"; // json | csv | table
    std::string out;             // empty = stdout
    std::uint64_t budget = 1'000'000'000;
    unsigned workers = 1;
    std::uint64_t seed = 0; // reserved for sampling diagnostics
    bool budget_from_flag = false;
    bool workers_from_flag = false;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg,
                        std::vector<std::string> formats = {"json", "csv", "table"}) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("--out", cfg.out, "Output path (default: stdout; written atomically)");
    cmd->add_option("--budget", cfg.budget, "Work budget in visited search nodes")
        ->each([&cfg](const std::string&) { cfg.budget_from_flag = true; });
    cmd->add_option("--workers", cfg.workers, "Worker threads for the enumeration")
        ->each([&cfg](const std::string&) { cfg.workers_from_flag = true; });
    cmd->add_option("--seed", cfg.seed, "Random seed (reserved, unused by the exact math)");
}

// Environment overrides; explicit flags win.
void apply_env(RunConfig& cfg) {
    if (!cfg.budget_from_flag) {
        if (const char* s = std::getenv("INVAR_BUDGET"))
            cfg.budget = std::strtoull(s, nullptr, 10);
    }
    if (!cfg.workers_from_flag) {
        if (const char* s = std::getenv("INVAR_WORKERS"))
            cfg.workers = static_cast<unsigned>(std::strtoul(s, nullptr, 10));
    }
    if (cfg.workers < 1)
        throw invar::parameter_error("worker count must be at least 1");
    if (cfg.budget < 10'000)
        throw invar::parameter_error("work budget must be at least 10^4");
}

invar::SearchOptions search_options(const RunConfig& cfg) {
    return invar::SearchOptions{cfg.budget, cfg.workers};
}

void emit(const RunConfig& cfg, const std::string& content) {
    if (cfg.out.empty())
        std::cout << content;
    else
        invar::io::write_atomic(cfg.out, content);
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw invar::parameter_error("empty entry in integer list: " + text);
        std::size_t pos = 0;
        out.push_back(std::stoll(item, &pos));
        if (pos != item.size())
            throw invar::parameter_error("cannot parse integer: " + item);
    }
    if (out.empty())
        throw invar::parameter_error("expected a comma-separated integer list");
    return out;
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        mpq_class q;
        if (item.empty() || q.set_str(item, 10) != 0)
            throw invar::parameter_error("cannot parse rational: " + item);
        q.canonicalize();
        out.push_back(q);
    }
    if (out.empty())
        throw invar::parameter_error("expected a comma-separated rational list");
    return out;
}

// ------------------------------------------------------------------------
// hilbert-basis
// ------------------------------------------------------------------------

int cmd_hilbert_basis(const RunConfig& cfg, const std::string& weights_text,
                      std::int64_t modulus, std::optional<std::int64_t> cap) {
    const invar::CongruenceSystem system(parse_int_list(weights_text), modulus);

    if (modulus == 0) {
        bool has_pos = false, has_neg = false;
        for (std::int64_t w : system.weights()) {
            has_pos = has_pos || w > 0;
            has_neg = has_neg || w < 0;
        }
        if (!(has_pos && has_neg))
            std::cerr << "warning: weights do not mix signs; beyond unit vectors at "
                         "zero-weight coordinates only the zero solution exists\n";
    } else if (!cap && !system.is_kac()) {
        std::cerr << "warning: default degree cap " << system.default_degree_cap()
                  << " is the Kac-system bound applied by analogy; override with --cap "
                     "if deeper generators are suspected\n";
    }

    const invar::HilbertBasis basis = invar::hilbert_basis(system, cap, search_options(cfg));
    if (cfg.format == "json")
        emit(cfg, json_text(invar::io::to_json(basis)));
    else if (cfg.format == "csv")
        emit(cfg, invar::io::to_csv(basis));
    else
        emit(cfg, invar::io::to_table(basis));
    return 0;
}

// ------------------------------------------------------------------------
// binary-forms
// ------------------------------------------------------------------------

int cmd_binary_forms(const RunConfig& cfg, std::int64_t n) {
    const invar::BoundReport report =
        invar::bound_report(invar::binary_forms_system(n), search_options(cfg));
    if (cfg.format == "json")
        emit(cfg, json_text(invar::io::to_json(report)));
    else if (cfg.format == "csv")
        emit(cfg, invar::io::to_csv(report));
    else
        emit(cfg, invar::io::to_table(report));
    return 0;
}

// ------------------------------------------------------------------------
// sl2
// ------------------------------------------------------------------------

int cmd_sl2(const RunConfig& cfg, std::int64_t n_max, std::int64_t d_max) {
    if (n_max < 1 || d_max < 1)
        throw invar::parameter_error("sl2: --n-max and --d-max must be at least 1");

    const invar::ReciprocityReport rec = invar::reciprocity_check(n_max, d_max);
    if (!rec.ok()) {
        std::cerr << "reciprocity violated in " << rec.violations.size() << " cells; first at n="
                  << rec.violations[0].n << " d=" << rec.violations[0].d << "\n";
        throw invar::consistency_error("sl2: a_n(d) != a_d(n)");
    }

    const invar::SeriesTable table = invar::series_table(1, n_max, 0, d_max);
    std::vector<std::vector<mpz_class>> lower(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n)
        for (std::int64_t d = 1; d <= d_max; ++d)
            lower[static_cast<std::size_t>(n - 1)].push_back(invar::generator_lower_bound(n, d));

    if (cfg.format == "json") {
        ordered_json j;
        j["series"] = invar::io::to_json(table);
        ordered_json lb = ordered_json::array();
        for (const auto& row : lower) {
            ordered_json r = ordered_json::array();
            for (const mpz_class& v : row)
                r.push_back(v.get_str());
            lb.push_back(std::move(r));
        }
        j["lower_bounds"] = {{"n_min", 1}, {"n_max", n_max}, {"d_min", 1},
                             {"d_max", d_max}, {"values", std::move(lb)}};
        emit(cfg, json_text(j));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << invar::io::to_csv(table) << "\nlower_bounds\nn";
        for (std::int64_t d = 1; d <= d_max; ++d)
            os << "," << d;
        os << "\n";
        for (std::int64_t n = 1; n <= n_max; ++n) {
            os << n;
            for (const mpz_class& v : lower[static_cast<std::size_t>(n - 1)])
                os << "," << v.get_str();
            os << "\n";
        }
        emit(cfg, os.str());
    } else {
        std::ostringstream os;
        os << invar::io::to_table(table) << "generator lower bounds (negative shown as 0):\n";
        for (std::int64_t n = 1; n <= n_max; ++n) {
            os << "n=" << n << ":";
            for (const mpz_class& v : lower[static_cast<std::size_t>(n - 1)])
                os << " " << (v < 0 ? mpz_class(0) : v).get_str();
            os << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

// ------------------------------------------------------------------------
// growth
// ------------------------------------------------------------------------

int cmd_growth(const RunConfig& cfg, std::int64_t d, std::int64_t n_max,
               std::optional<std::int64_t> fit_min, const std::string& plot_path) {
    const invar::GrowthDiagnostic diag = invar::growth_diagnostic(d, n_max, fit_min);
    if (!plot_path.empty())
        invar::io::write_atomic(plot_path, invar::io::to_plot_data(diag));
    if (cfg.format == "json") {
        emit(cfg, json_text(invar::io::to_json(diag)));
    } else if (cfg.format == "csv") {
        emit(cfg, invar::io::to_csv(diag));
    } else {
        std::ostringstream os;
        os << "a_n(" << d << ") growth, n <= " << n_max << "\n"
           << "log-log slope over [" << diag.fit_min << ", " << diag.fit_max
           << "]: " << invar::io::format_double(diag.slope) << "\n";
        for (const auto& s : diag.samples) {
            const mpz_class shown = s.lower_bound < 0 ? mpz_class(0) : s.lower_bound;
            os << "n=" << s.n << " dim=" << s.dim.get_str()
               << " lower_bound=" << shown.get_str()
               << " dim/n^" << d - 3 << "=" << invar::io::format_double(s.dim_ratio) << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

// ------------------------------------------------------------------------
// weyl
// ------------------------------------------------------------------------

int cmd_weyl(const RunConfig& cfg, const std::string& preset, const std::string& file,
             const std::string& lambda_text, std::optional<std::int64_t> n, bool poly,
             bool info) {
    if (preset.empty() == file.empty())
        throw invar::parameter_error("weyl: give exactly one of --preset or --file");

    const invar::RootSystemData* rs = nullptr;
    invar::RootSystemData custom(1, {{mpq_class(1)}}, {{mpq_class(1)}});
    if (!preset.empty()) {
        rs = &invar::RootSystemData::preset(preset);
    } else {
        std::ifstream in(file);
        if (!in)
            throw invar::parameter_error("weyl: cannot open " + file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        custom = invar::root_system_from_json_text(buffer.str());
        rs = &custom;
    }

    if (info) {
        const invar::GrowthExponent g = invar::growth_exponent(*rs);
        ordered_json j;
        j["name"] = rs->name();
        j["rank"] = g.rank;
        j["positive_roots"] = g.positive_roots;
        j["group_dim"] = g.group_dim;
        if (cfg.format == "json")
            emit(cfg, json_text(j));
        else
            emit(cfg, rs->name() + ": r=" + std::to_string(g.positive_roots) +
                          " rank=" + std::to_string(g.rank) +
                          " dim G=" + std::to_string(g.group_dim) + "\n");
        return 0;
    }

    if (lambda_text.empty())
        throw invar::parameter_error("weyl: --lambda is required");
    const std::vector<mpq_class> coords = parse_rational_list(lambda_text);
    invar::RationalVector lambda;
    if (rs->has_fundamental_weights()) {
        lambda = rs->weight_from_fundamental(coords);
    } else {
        if (coords.size() != rs->ambient_dim())
            throw invar::parameter_error("weyl: lambda must have " +
                                         std::to_string(rs->ambient_dim()) +
                                         " ambient coordinates");
        lambda = coords;
    }

    if (poly == n.has_value())
        throw invar::parameter_error("weyl: give exactly one of --n or --poly");

    if (poly) {
        const invar::DimensionPolynomial p = invar::dimension_polynomial(*rs, lambda);
        if (cfg.format == "json") {
            ordered_json j;
            j["degree"] = p.degree();
            ordered_json coeffs = ordered_json::array();
            for (const mpq_class& c : p.coeffs)
                coeffs.push_back(c.get_str());
            j["coefficients"] = std::move(coeffs);
            emit(cfg, json_text(j));
        } else if (cfg.format == "csv") {
            std::ostringstream os;
            os << "power,coefficient\n";
            for (std::size_t k = 0; k < p.coeffs.size(); ++k)
                os << k << "," << p.coeffs[k].get_str() << "\n";
            emit(cfg, os.str());
        } else {
            std::ostringstream os;
            os << "dim V_{ n lambda } =";
            for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
                if (p.coeffs[k] == 0)
                    continue;
                os << " + (" << p.coeffs[k].get_str() << ") n^" << k;
            }
            os << "\n";
            emit(cfg, os.str());
        }
    } else {
        const mpz_class dim = invar::weyl_dimension(*rs, lambda, *n);
        if (cfg.format == "json") {
            ordered_json j;
            j["n"] = *n;
            j["dim"] = dim.get_str();
            emit(cfg, json_text(j));
        } else {
            emit(cfg, dim.get_str() + "\n");
        }
    }
    return 0;
}

// ------------------------------------------------------------------------
// verify
// ------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& suite,
               std::optional<std::int64_t> max_n) {
    std::vector<std::string> names;
    if (suite == "all")
        names = invar::verify::suite_names();
    else
        names.push_back(suite);

    invar::verify::Params params;
    params.max_n = max_n;
    params.work_budget = cfg.budget;
    params.workers = cfg.workers;

    std::vector<invar::verify::SuiteResult> results;
    for (const std::string& name : names) {
        const auto start = std::chrono::steady_clock::now();
        results.push_back(invar::verify::run_suite(name, params));
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << name << ": " << (results.back().pass() ? "pass" : "FAIL") << " ("
                  << invar::io::format_double(elapsed) << "s)\n";
    }

    bool all_pass = true;
    for (const auto& r : results)
        all_pass = all_pass && r.pass();

    if (cfg.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : results) {
            ordered_json suite_json;
            suite_json["suite"] = r.suite;
            suite_json["pass"] = r.pass();
            ordered_json checks = ordered_json::array();
            for (const auto& c : r.checks) {
                ordered_json cj;
                cj["name"] = c.name;
                cj["pass"] = c.pass;
                cj["detail"] = c.detail;
                checks.push_back(std::move(cj));
            }
            suite_json["checks"] = std::move(checks);
            j.push_back(std::move(suite_json));
        }
        emit(cfg, json_text(j));
    } else {
        emit(cfg, invar::verify::render_report(results));
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification of generating invariants "
                 "for rank-1 torus and cyclic-group actions"};
    app.require_subcommand(1);

    RunConfig cfg;

    // hilbert-basis
    std::string weights_text;
    std::int64_t modulus = 0;
    std::optional<std::int64_t> cap;
    CLI::App* hb = app.add_subcommand("hilbert-basis",
                                      "Indecomposable solutions of a weighted congruence");
    hb->add_option("--weights", weights_text, "Comma-separated weights, e.g. 1,2,3,-3")
        ->required();
    hb->add_option("--modulus", modulus, "Modulus n >= 1, or 0 for equality over Z")
        ->required();
    hb->add_option("--cap", cap, "Degree cap (defaults to the design cap)");
    add_common_options(hb, cfg);

    // binary-forms
    std::int64_t bf_n = 0;
    CLI::App* bf = app.add_subcommand("binary-forms",
                                      "Torus generators and bounds for binary forms");
    bf->add_option("--n", bf_n, "Degree of the binary form")->required();
    add_common_options(bf, cfg);

    // sl2
    std::int64_t n_max = 10, d_max = 10;
    CLI::App* sl2 = app.add_subcommand("sl2", "Invariant dimension table a_n(d)");
    sl2->add_option("--n-max", n_max, "Largest n")->required();
    sl2->add_option("--d-max", d_max, "Largest d")->required();
    add_common_options(sl2, cfg);

    // growth
    std::int64_t growth_d = 6, growth_n_max = 200;
    std::optional<std::int64_t> fit_min;
    std::string plot_path;
    CLI::App* growth = app.add_subcommand("growth", "Growth diagnostics of a_n(d)");
    growth->add_option("--d", growth_d, "Fixed degree d")->capture_default_str();
    growth->add_option("--n-max", growth_n_max, "Largest n")->capture_default_str();
    growth->add_option("--fit-min", fit_min, "Smallest n in the slope fit "
                                             "(default: n_max / sqrt(10))");
    growth->add_option("--plot-data", plot_path,
                       "Write two-column (log n, log a_n(d)) data to this path");
    add_common_options(growth, cfg);

    // weyl
    std::string preset, file, lambda_text;
    std::optional<std::int64_t> weyl_n;
    bool poly = false, info = false;
    CLI::App* weyl = app.add_subcommand("weyl", "Weyl dimension formula");
    weyl->add_option("--preset", preset, "Root system preset: A1, A2, B2, G2");
    weyl->add_option("--file", file, "Custom root system JSON file");
    weyl->add_option("--lambda", lambda_text,
                     "Highest weight (fundamental coordinates for presets)");
    weyl->add_option("--n", weyl_n, "Evaluate dim V_{n lambda}");
    weyl->add_flag("--poly", poly, "Expand dim V_{n lambda} as a polynomial in n");
    weyl->add_flag("--info", info, "Print positive-root count and group dimension");
    add_common_options(weyl, cfg);

    // verify
    std::string suite = "all";
    std::optional<std::int64_t> verify_max_n;
    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "Suite name or 'all'")->capture_default_str();
    verify->add_option("--max-n", verify_max_n, "Override the suite's range limit");
    add_common_options(verify, cfg, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        apply_env(cfg);
        if (verify->parsed() && verify->count("--format") == 0)
            cfg.format = "text"; // verify defaults to the plain-text report
        if (hb->parsed())
            return cmd_hilbert_basis(cfg, weights_text, modulus, cap);
        if (bf->parsed())
            return cmd_binary_forms(cfg, bf_n);
        if (sl2->parsed())
            return cmd_sl2(cfg, n_max, d_max);
        if (growth->parsed())
            return cmd_growth(cfg, growth_d, growth_n_max, fit_min, plot_path);
        if (weyl->parsed())
            return cmd_weyl(cfg, preset, file, lambda_text, weyl_n, poly, info);
        if (verify->parsed())
            return cmd_verify(cfg, suite, verify_max_n);
    } catch (const invar::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const invar::consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const invar::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
