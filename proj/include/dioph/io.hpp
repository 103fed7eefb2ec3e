#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dioph/admissibility.hpp"
#include "dioph/block_matrix.hpp"
#include "dioph/bounds.hpp"
#include "dioph/certificates.hpp"
#include "dioph/polyroots.hpp"
#include "dioph/search.hpp"
#include "dioph/theorem_volumes.hpp"

namespace dioph {

using nlohmann::json;

inline const char* version_string() { return "0.1.0"; }

// --------------------------------------------------------------------------
// Logging: "YYYY-MM-DDTHH:MM:SSZ - message" lines to a file and optionally
// the console.
// --------------------------------------------------------------------------

inline std::string utc_timestamp(bool deterministic = false) {
    if (deterministic) return "1970-01-01T00:00:00Z";
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Logger {
public:
    Logger(const std::string& path = "", bool console = false, bool deterministic = false)
        : console_(console), deterministic_(deterministic) {
        if (!path.empty()) file_.open(path, std::ios::app);
    }

    void operator()(const std::string& message) {
        std::string line = utc_timestamp(deterministic_) + " - " + message;
        if (file_.is_open()) file_ << line << "\n" << std::flush;
        if (console_) std::cout << line << "\n";
    }

private:
    std::ofstream file_;
    bool console_;
    bool deterministic_;
};

// --------------------------------------------------------------------------
// Run manifest: every emitted document carries the invocation that made it.
// --------------------------------------------------------------------------

struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    json config = json::object();
    std::string version = version_string();
    std::string started;
    std::string finished;
    int threads = 0;
};

inline json to_json(const RunManifest& m) {
    return json{{"command_line", m.command_line}, {"seed", m.seed},     {"config", m.config},
                {"version", m.version},           {"started", m.started}, {"finished", m.finished},
                {"threads", m.threads}};
}

// --------------------------------------------------------------------------
// JSON views of the result types.
// --------------------------------------------------------------------------

inline json to_json(const ExactVolume& v) {
    return json{{"text", to_string(v)},
                {"coeff", to_string(v.coeff)},
                {"radicand", to_string(v.radicand)},
                {"value", v.to_double()}};
}

inline json to_json(const ClosedFormResult& r) {
    return json{{"name", r.name},       {"exact", to_json(r.exact)},       {"float_value", r.float_value},
                {"verified", r.verified}, {"oracle_value", r.oracle_value}, {"oracle_gap", r.oracle_gap}};
}

inline json to_json(const CertificateReport& rep) {
    json steps = json::array();
    for (const auto& s : rep.steps) {
        json j{{"id", s.id}, {"pass", s.pass}};
        if (!s.detail.empty()) j["detail"] = s.detail;
        steps.push_back(j);
    }
    return json{{"name", rep.name}, {"ok", rep.ok()}, {"steps", steps}};
}

inline json to_json(const AdmissibilityReport& rep) {
    return json{{"vertices_ok", rep.vertices_ok},
                {"diagonals_ok", rep.diagonals_ok},
                {"max_f", rep.max_f},
                {"argmax", rep.argmax},
                {"admissible", rep.admissible},
                {"tolerance", rep.tolerance}};
}

inline json to_json(const SignTable& t) {
    return json{{"point", to_string(t.point)},
                {"f_signs", t.f_signs},
                {"F_signs", t.F_signs},
                {"n_plus", t.n_plus},
                {"n_minus", t.n_minus}};
}

inline json to_json(const SearchResult& r) {
    json history = json::array();
    for (const auto& h : r.history)
        history.push_back(json{{"iteration", h.iteration},
                               {"volume", h.volume},
                               {"params", h.params},
                               {"elapsed_seconds", h.elapsed_seconds}});
    return json{{"best_params", r.best_params}, {"best_volume", r.best_volume},
                {"window_lo", r.window_lo},     {"window_hi", r.window_hi},
                {"history", history},           {"confirmed", r.confirmed}};
}

inline json to_json(const BoundRecord& r) {
    json j{{"n", r.n},
           {"v_bound", to_json(r.v_bound)},
           {"delta", r.delta.delta.str()},
           {"delta_factorization", r.delta.factorization},
           {"delta_polynomial", r.delta.polynomial},
           {"c_exact", r.c_lower_exact},
           {"c_float", r.c_lower_float},
           {"furtwangler_baseline", r.furtwangler_baseline}};
    if (r.historical) j["historical"] = true;
    return j;
}

// --------------------------------------------------------------------------
// File formats.
// --------------------------------------------------------------------------

/// Polynomial text file: one coefficient per line in the algebraic
/// serialization, ascending degree; '#' starts a comment.
inline Poly parse_polynomial_file(std::istream& in) {
    std::vector<QRoot5> coeffs;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        if (trimmed.empty()) continue;
        coeffs.push_back(parse_qroot5(trimmed));
    }
    return Poly(std::move(coeffs));
}

inline Poly load_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polynomial file: " + path);
    return parse_polynomial_file(in);
}

/// "a:b" with algebraic endpoint literals.
inline std::pair<QRoot5, QRoot5> parse_interval(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("interval must look like a:b");
    return {parse_qroot5(text.substr(0, colon)), parse_qroot5(text.substr(colon + 1))};
}

/// Matrix file: {"n": int, "s": int, "diag": float, "blocks": [...]} or
/// {"dense": [[...], ...]}.
struct MatrixFile {
    std::optional<BlockMatrix> block;
    std::optional<DenseMatrix> dense;
    std::optional<int> n, s;

    DenseMatrix as_dense() const { return block ? to_dense(*block) : *dense; }
};

inline MatrixFile parse_matrix_json(const json& j) {
    MatrixFile out;
    if (j.contains("dense")) {
        auto rows = j.at("dense");
        DenseMatrix d(static_cast<int>(rows.size()));
        for (int i = 0; i < d.n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d.n)
                throw ParseError("dense matrix must be square");
            for (int c = 0; c < d.n; ++c)
                d.at(i, c) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].get<double>();
        }
        out.dense = d;
    } else {
        int n = j.at("n").get<int>();
        std::vector<double> blocks = j.value("blocks", std::vector<double>{});
        double diag = j.value("diag", 1.0);
        out.block = BlockMatrix(n, diag, blocks);
    }
    if (j.contains("n")) out.n = j.at("n").get<int>();
    if (j.contains("s")) out.s = j.at("s").get<int>();
    return out;
}

inline MatrixFile load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    json j;
    in >> j;
    return parse_matrix_json(j);
}

/// Six-decimal human rendering (tables); full precision belongs to JSON.
inline std::string format_fixed6(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace dioph
