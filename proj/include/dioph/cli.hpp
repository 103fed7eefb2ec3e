#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dioph/io.hpp"

namespace dioph::cli {

namespace detail {

inline std::string join_args(const std::vector<std::string>& args) {
    std::string s = "dioph";
    for (const auto& a : args) s += " " + a;
    return s;
}

inline void emit(const json& doc, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot open output file: " + out_path);
        f << doc.dump(2) << "\n";
    }
}

inline std::pair<double, double> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected LO:HI");
    try {
        return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range", "expected numeric LO:HI");
    }
}

}  // namespace detail

struct VerifyOptions {
    std::string theorem = "all";
    double oracle_step = 0.0;
    int threads = 0;
};

/// Runs the requested certificate bundles; fills `doc` and returns overall
/// success.
inline bool run_verify(const VerifyOptions& opt, json& doc) {
    json results = json::array();
    json certificates = json::array();
    bool ok = true;

    auto want = [&](const std::string& key) { return opt.theorem == "all" || opt.theorem == key; };

    const std::pair<const char*, BoxFunction> fmap[] = {{"f0", BoxFunction::F0},
                                                        {"f1", BoxFunction::F1},
                                                        {"f2", BoxFunction::F2},
                                                        {"f3", BoxFunction::F3}};
    for (auto [key, which] : fmap) {
        if (!want(key)) continue;
        ClosedFormResult r = closed_form_max(which, opt.oracle_step, opt.threads);
        CertificateReport rep = box_function_certificates(which);
        ok = ok && r.verified && rep.ok();
        results.push_back(to_json(r));
        certificates.push_back(to_json(rep));
    }
    for (int n = 3; n <= 6; ++n) {
        std::string key = "v" + std::to_string(n);
        if (!want(key)) continue;
        OptimizerConfig cfg;
        cfg.threads = opt.threads;
        TheoremVolume tv = verify_theorem_V(n, cfg);
        ok = ok && tv.volume.verified;
        json r = to_json(tv.volume);
        r["max_over_cube"] = tv.max_over_cube_value;
        r["matrix"] = json{{"n", tv.matrix.n}, {"diag", tv.matrix.diag}, {"blocks", tv.matrix.blocks}};
        results.push_back(r);
        certificates.push_back(to_json(tv.certificate));
    }
    if (want("general")) {
        CertificateReport rep;
        rep.name = "general_V";
        dioph::detail::StepRecorder rec(rep);
        for (int n = 3; n <= 10; ++n) {
            ClosedFormResult r = general_V_bound(n);
            r.name = "general." + r.name;
            results.push_back(to_json(r));
        }
        // the four base cases must coincide with the proved volumes
        rec.check("base.v3", general_V_bound_exact(3).squared() == QRoot5(4));
        rec.check("base.v4",
                  general_V_bound_exact(4).squared() == QRoot5(Rational(256, 81)));
        rec.check("base.v5", general_V_bound_exact(5).squared() ==
                                 QRoot5(Rational(27, 88)) * (QRoot5(9) + QRoot5::sqrt5() * 5));
        QRoot5 v63 = (QRoot5(9) + QRoot5::sqrt5() * 5) / QRoot5(11);
        rec.check("base.v6", general_V_bound_exact(6).squared() == v63 * v63);
        ok = ok && rep.ok();
        certificates.push_back(to_json(rep));
    }
    if (opt.theorem == "ledger" || opt.theorem == "all") {
        CertificateReport rep = verify_sign_ledger();
        ok = ok && rep.ok();
        certificates.push_back(to_json(rep));
    }

    doc["results"] = results;
    doc["certificates"] = certificates;
    doc["ok"] = ok;
    return ok;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inscribed-box volume bounds for star bodies and the resulting "
                 "simultaneous-approximation constants"};
    app.set_config("--config");
    bool deterministic = false;
    app.add_flag("--deterministic", deterministic, "zero timestamps for reproducible output");

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "certify the closed-form maxima and volume bounds");
    VerifyOptions vopt;
    verify->add_option("--theorem", vopt.theorem, "f0|f1|f2|f3|v3|v4|v5|v6|general|ledger|all")
        ->check(CLI::IsMember({"f0", "f1", "f2", "f3", "v3", "v4", "v5", "v6", "general", "ledger", "all"}));
    verify->add_option("--oracle-step", vopt.oracle_step, "grid step of the brute-force witness");

    // search ---------------------------------------------------------------
    auto* search = app.add_subcommand("search", "grid-refinement search for maximal inscribed boxes");
    int s_n = 3, s_s = 1, s_vars = 0, s_intervals = 10, s_iterations = 20;
    std::string s_family = "sym", s_range, s_out, s_log;
    std::uint64_t s_seed = 1;
    bool s_echo = false;
    search->add_option("--n", s_n, "ambient dimension")->required();
    search->add_option("--s", s_s, "number of quadratic factors")->required();
    search->add_option("--family", s_family, "sym|custom")->check(CLI::IsMember({"sym", "custom"}));
    search->add_option("--vars", s_vars, "parameter count for --family custom");
    search->add_option("--range", s_range, "initial window LO:HI (default 0:2)");
    search->add_option("--intervals", s_intervals, "first-pass grid intervals");
    search->add_option("--iterations", s_iterations, "total refinement passes");
    search->add_option("--seed", s_seed, "seed for the optimizer's random starts");
    search->add_option("--out", s_out, "write the result JSON here instead of stdout");
    search->add_option("--log", s_log, "append timestamped progress lines to this file");
    search->add_flag("--echo", s_echo, "echo log lines to the console");

    // bounds ---------------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "the lower-bound table for the approximation constants");
    int b_min = 3, b_max = 10;
    std::string b_format = "json";
    bounds->add_option("--min-n", b_min, "first row");
    bounds->add_option("--max-n", b_max, "last row");
    bounds->add_option("--format", b_format, "csv|json|markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));

    // roots ----------------------------------------------------------------
    auto* roots = app.add_subcommand("roots", "root-count certificates for a polynomial file");
    std::string r_poly, r_interval;
    double r_tol = 1e-6;
    roots->add_option("--poly", r_poly, "polynomial file, one coefficient per line")->required();
    roots->add_option("--interval", r_interval, "interval a:b (algebraic literals)")->required();
    roots->add_option("--tol", r_tol, "bisection resolution");

    // check ----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "admissibility of a matrix file against a star body");
    std::string c_matrix;
    int c_n = 0, c_s = 0;
    double c_step = 0.3, c_tol = 1e-9;
    check->add_option("--matrix", c_matrix, "matrix JSON file")->required();
    check->add_option("--n", c_n, "star body dimension")->required();
    check->add_option("--s", c_s, "number of quadratic factors")->required();
    check->add_option("--step", c_step, "diagonal sampling step");
    check->add_option("--tol", c_tol, "admissibility tolerance");

    app.require_subcommand(0, 1);

    std::string command_line = detail::join_args(args);
    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector parse pops from the back
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    RunManifest manifest;
    manifest.command_line = command_line;
    manifest.started = utc_timestamp(deterministic);
    manifest.threads = resolve_thread_count(0);

    try {
        if (app.got_subcommand(verify)) {
            json doc;
            manifest.config = json{{"theorem", vopt.theorem}, {"oracle_step", vopt.oracle_step}};
            bool ok = run_verify(vopt, doc);
            manifest.finished = utc_timestamp(deterministic);
            doc["manifest"] = to_json(manifest);
            detail::emit(doc, "", out);
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(search)) {
            ParamFamily family = s_family == "sym" ? symmetric_family(s_n) : custom_family(s_n, s_vars);
            if (s_family == "sym" && s_s != s_n / 2)
                throw ParseError("the sym family targets s = floor(n/2)");
            SearchConfig cfg;
            cfg.intervals = s_intervals;
            cfg.iterations = s_iterations;
            cfg.admissibility.seed = s_seed;
            if (!s_range.empty()) {
                auto [lo, hi] = detail::parse_range(s_range);
                cfg.lo.assign(static_cast<std::size_t>(family.var_count), lo);
                cfg.hi.assign(static_cast<std::size_t>(family.var_count), hi);
            }
            Logger logger(s_log, s_echo, deterministic);
            if (!s_log.empty() || s_echo) cfg.log = std::ref(logger);

            manifest.seed = s_seed;
            manifest.config = json{{"n", s_n},           {"s", s_s},
                                   {"family", family.name}, {"intervals", cfg.intervals},
                                   {"iterations", cfg.iterations}, {"seed", s_seed}};

            SearchResult result = refine_search(family, StarBody(s_n, s_s), cfg);
            if (deterministic)  // wall-clock readings count as timestamps
                for (auto& rec : result.history) rec.elapsed_seconds = 0.0;
            manifest.finished = utc_timestamp(deterministic);
            json doc{{"search", to_json(result)}, {"manifest", to_json(manifest)}};
            detail::emit(doc, s_out, out);
            return 0;
        }

        if (app.got_subcommand(bounds)) {
            auto rows = bounds_table(b_min, b_max);
            manifest.finished = utc_timestamp(deterministic);
            manifest.config = json{{"min_n", b_min}, {"max_n", b_max}, {"format", b_format}};
            if (b_format == "json") {
                json doc{{"rows", json::array()}, {"manifest", to_json(manifest)}};
                for (const auto& r : rows) doc["rows"].push_back(to_json(r));
                detail::emit(doc, "", out);
            } else if (b_format == "csv") {
                out << "n,v_bound_exact,v_bound_float,delta,c_exact,c_float,furtwangler_baseline\n";
                for (const auto& r : rows) {
                    char vbuf[64], cbuf[64], fbuf[64];
                    std::snprintf(vbuf, sizeof vbuf, "%.17g", r.v_bound.float_value);
                    std::snprintf(cbuf, sizeof cbuf, "%.17g", r.c_lower_float);
                    std::snprintf(fbuf, sizeof fbuf, "%.17g", r.furtwangler_baseline);
                    out << r.n << ",\"" << to_string(r.v_bound.exact) << "\"," << vbuf << "," << r.delta.delta.str()
                        << ",\"" << r.c_lower_exact << "\"," << cbuf << "," << fbuf << "\n";
                }
            } else {
                out << "| n | V bound | |Delta| | C_n lower bound | baseline |\n";
                out << "|---|---------|---------|-----------------|----------|\n";
                for (const auto& r : rows)
                    out << "| " << r.n << " | " << format_fixed6(r.v_bound.float_value) << " | "
                        << r.delta.abs_delta().str() << " | " << format_fixed6(r.c_lower_float) << " | "
                        << format_fixed6(r.furtwangler_baseline) << " |\n";
            }
            return 0;
        }

        if (app.got_subcommand(roots)) {
            Poly p = load_polynomial(r_poly);
            auto [a, b] = parse_interval(r_interval);
            json doc;
            manifest.config = json{{"poly", r_poly}, {"interval", r_interval}, {"tol", r_tol}};
            SignTable ta = newton_sylvester_table(p, a);
            SignTable tb = newton_sylvester_table(p, b);
            int bound = max_roots_in_interval(p, a, b);
            int count = count_roots_bisection(p, a.to_double(), b.to_double(), r_tol);
            manifest.finished = utc_timestamp(deterministic);
            doc = json{{"newton_sylvester",
                        json{{"bound", bound}, {"table_a", to_json(ta)}, {"table_b", to_json(tb)}}},
                       {"bisection", json{{"count", count}, {"tol", r_tol}}},
                       {"manifest", to_json(manifest)}};
            detail::emit(doc, "", out);
            return 0;
        }

        if (app.got_subcommand(check)) {
            MatrixFile mf = load_matrix(c_matrix);
            if ((mf.n && *mf.n != c_n) || (mf.s && *mf.s != c_s))
                throw ParseError("matrix file disagrees with --n/--s");
            OptimizerConfig cfg;
            cfg.diagonal_step = c_step;
            cfg.tolerance = c_tol;
            StarBody body(c_n, c_s);
            AdmissibilityReport rep = is_admissible(mf.as_dense(), body, body.canonical_layout(), cfg);
            manifest.finished = utc_timestamp(deterministic);
            manifest.config = json{{"matrix", c_matrix}, {"n", c_n}, {"s", c_s}, {"step", c_step}, {"tol", c_tol}};
            json doc{{"report", to_json(rep)}, {"manifest", to_json(manifest)}};
            detail::emit(doc, "", out);
            return rep.admissible ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    out << app.help() << "\n";
    return 2;
}

}  // namespace dioph::cli
