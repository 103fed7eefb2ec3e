#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dioph/admissibility.hpp"
#include "dioph/block_matrix.hpp"
#include "dioph/errors.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

/// Maps a parameter vector to a candidate matrix.
struct ParamFamily {
    std::string name;
    int var_count = 0;
    std::function<BlockMatrix(const std::vector<double>&)> build;
};

/// The symmetric families behind the known optimal matrices: one shared
/// diagonal entry plus per-family block structure.
///   n=3: (a, a1); n=4: (a, a1); n=5: (a, a1, a2); n=6: (a, b) with both
///   blocks tied to b.
inline ParamFamily symmetric_family(int n) {
    switch (n) {
        case 3:
            return {"sym3", 2, [](const std::vector<double>& p) { return BlockMatrix(3, p[0], {p[1]}); }};
        case 4:
            return {"sym4", 2, [](const std::vector<double>& p) { return BlockMatrix(4, p[0], {p[1]}); }};
        case 5:
            return {"sym5", 3, [](const std::vector<double>& p) { return BlockMatrix(5, p[0], {p[1], p[2]}); }};
        case 6:
            return {"sym6", 2, [](const std::vector<double>& p) { return BlockMatrix(6, p[0], {p[1], p[1]}); }};
        default:
            throw std::invalid_argument("no built-in symmetric family for n = " + std::to_string(n));
    }
}

/// Free-form family: either all parameters are block entries (n = 2k), or
/// the first parameter is the shared diagonal entry and the rest are blocks.
inline ParamFamily custom_family(int n, int vars) {
    if (vars < 1) throw std::invalid_argument("family needs at least one parameter");
    if (n == 2 * vars) {
        return {"custom", vars, [n](const std::vector<double>& p) {
                    return BlockMatrix(n, 1.0, std::vector<double>(p.begin(), p.end()));
                }};
    }
    if (n - 2 * (vars - 1) < 1)
        throw std::invalid_argument("too many parameters for dimension " + std::to_string(n));
    return {"custom", vars, [n](const std::vector<double>& p) {
                return BlockMatrix(n, p[0], std::vector<double>(p.begin() + 1, p.end()));
            }};
}

struct SearchConfig {
    std::vector<double> lo, hi;   ///< initial window per parameter (default [0, 2])
    int intervals = 10;           ///< first pass enumerates intervals+1 points per axis
    int refine_points = 4;        ///< later passes enumerate this many points per axis
    int iterations = 20;          ///< total passes
    double volume_slack = 0.1;    ///< pass threshold = min(prev, cur) - slack
    OptimizerConfig admissibility = search_optimizer_profile();
    int threads = 0;
    std::function<void(const std::string&)> log;  ///< optional progress sink

    /// Lighter optimizer settings for the inner admissibility screen; the
    /// final candidate is re-confirmed with the full default profile.
    static OptimizerConfig search_optimizer_profile() {
        OptimizerConfig cfg;
        cfg.lattice_points = 3;
        cfg.max_lattice_starts = 800;
        cfg.random_starts = 24;
        cfg.max_ascent_iterations = 150;
        return cfg;
    }
};

struct IterationRecord {
    int iteration = 0;
    double volume = 0.0;
    std::vector<double> params;
    double elapsed_seconds = 0.0;
};

struct SearchResult {
    std::vector<double> best_params;
    double best_volume = 0.0;
    std::vector<double> window_lo, window_hi;
    std::vector<IterationRecord> history;
    bool confirmed = false;  ///< final candidate re-passed the strict admissibility check
};

namespace detail {

struct GridBest {
    double volume = -1.0;
    std::vector<double> params;

    void offer(double v, const std::vector<double>& p) {
        if (v > volume || (v == volume && !params.empty() && p < params)) {
            volume = v;
            params = p;
        } else if (params.empty()) {
            volume = v;
            params = p;
        }
    }
};

}  // namespace detail

/// One full grid sweep: enumerates points_per_dim^vars parameter tuples on
/// the window and returns the best admissible candidate plus the refined
/// window +-h around it (h = grid spacing). Cells are independent work
/// items, so the sweep is deterministic for any worker count.
///
/// Each cell is judged after rescaling onto the boundary of the star body:
/// by homogeneity, a matrix whose maximum over the box image is mu turns
/// into an admissible one when divided by mu^(1/n), with volume det/mu.
/// det/mu is scale-invariant and maximal exactly at the touching optimum;
/// the sweep ranks cells by it and recenters the window on the rescaled
/// parameters. Requires the parameterization to be linear under scaling:
/// build(t p) = t build(p), which holds for every built-in family.
inline SearchResult grid_iteration(const ParamFamily& family, const StarBody& body,
                                   const std::vector<double>& lo, const std::vector<double>& hi,
                                   int points_per_dim, double min_volume, const OptimizerConfig& admis_cfg,
                                   int threads) {
    int vars = family.var_count;
    if (points_per_dim < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
    std::vector<double> h(static_cast<std::size_t>(vars));
    for (int v = 0; v < vars; ++v)
        h[static_cast<std::size_t>(v)] = (hi[static_cast<std::size_t>(v)] - lo[static_cast<std::size_t>(v)]) / (points_per_dim - 1);

    std::size_t cells = 1;
    for (int v = 0; v < vars; ++v) cells *= static_cast<std::size_t>(points_per_dim);

    auto cell_params = [&](std::size_t index) {
        std::vector<double> p(static_cast<std::size_t>(vars));
        for (int v = 0; v < vars; ++v) {
            p[static_cast<std::size_t>(v)] =
                lo[static_cast<std::size_t>(v)] + h[static_cast<std::size_t>(v)] * static_cast<double>(index % points_per_dim);
            index /= points_per_dim;
        }
        return p;
    };

    // pushes the rescaled candidate just inside the boundary so the strict
    // re-check cannot trip over the optimizer's own tolerance
    constexpr double kMargin = 1e-6;

    const PairingLayout lay = body.canonical_layout();
    using Candidate = std::optional<std::pair<double, std::vector<double>>>;
    std::vector<Candidate> found = parallel_map<Candidate>(cells, threads, [&](std::size_t i) -> Candidate {
        std::vector<double> p = cell_params(i);
        BlockMatrix m = family.build(p);
        double det = m.det();
        if (det <= min_volume) return std::nullopt;
        DenseMatrix dense = to_dense(m);

        // cheap lower bounds on the maximum prune hopeless cells before the
        // global stage: det/mu only shrinks as the bound improves
        double mu_lb = 0.0;
        for (const Point& v : vertices(dense)) mu_lb = std::max(mu_lb, evaluate(body, v, lay));
        if (mu_lb > 0.0 && det / mu_lb <= min_volume) return std::nullopt;

        double mu = survey_max(dense, body, lay, admis_cfg);
        if (!(mu > 0.0)) return std::nullopt;
        mu *= 1.0 + kMargin;
        double volume = det / mu;
        if (volume <= min_volume) return std::nullopt;
        double scale = std::pow(mu, -1.0 / body.n);
        for (double& v : p) v *= scale;
        return std::make_pair(volume, std::move(p));
    });

    detail::GridBest best;
    for (const auto& c : found)
        if (c) best.offer(c->first, c->second);
    if (best.params.empty()) throw NoAdmissibleCandidate{};

    SearchResult res;
    res.best_params = best.params;
    res.best_volume = best.volume;
    for (int v = 0; v < vars; ++v) {
        res.window_lo.push_back(best.params[static_cast<std::size_t>(v)] - h[static_cast<std::size_t>(v)]);
        res.window_hi.push_back(best.params[static_cast<std::size_t>(v)] + h[static_cast<std::size_t>(v)]);
    }
    return res;
}

/// Iterative refinement: a coarse sweep over the initial window, then
/// shrinking sweeps recentered on each pass's best candidate. The reported
/// best never decreases across passes, and the final candidate must
/// re-pass the admissibility check at a tenth of the tolerance.
inline SearchResult refine_search(const ParamFamily& family, const StarBody& body, const SearchConfig& cfg) {
    int vars = family.var_count;
    std::vector<double> lo = cfg.lo.empty() ? std::vector<double>(static_cast<std::size_t>(vars), 0.0) : cfg.lo;
    std::vector<double> hi = cfg.hi.empty() ? std::vector<double>(static_cast<std::size_t>(vars), 2.0) : cfg.hi;
    if (static_cast<int>(lo.size()) != vars || static_cast<int>(hi.size()) != vars)
        throw std::invalid_argument("window size does not match the family's parameter count");

    SearchResult out;
    double prev_volume = 1.0, cur_volume = 1.0;
    detail::GridBest global;

    for (int pass = 0; pass < cfg.iterations; ++pass) {
        int points = (pass == 0) ? cfg.intervals + 1 : cfg.refine_points;
        double threshold = std::min(prev_volume, cur_volume) - cfg.volume_slack;
        auto t0 = std::chrono::steady_clock::now();
        SearchResult step;
        try {
            step = grid_iteration(family, body, lo, hi, points, threshold, cfg.admissibility, cfg.threads);
        } catch (const NoAdmissibleCandidate&) {
            if (pass == 0) throw;
            // keep the previous center, shrink the window toward it
            step.best_params = global.params;
            step.best_volume = global.volume;
            for (int v = 0; v < vars; ++v) {
                double hv = (hi[static_cast<std::size_t>(v)] - lo[static_cast<std::size_t>(v)]) / (points - 1);
                step.window_lo.push_back(global.params[static_cast<std::size_t>(v)] - hv);
                step.window_hi.push_back(global.params[static_cast<std::size_t>(v)] + hv);
            }
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        global.offer(step.best_volume, step.best_params);
        lo = step.window_lo;
        hi = step.window_hi;
        prev_volume = cur_volume;
        cur_volume = step.best_volume;

        IterationRecord rec;
        rec.iteration = pass;
        rec.volume = step.best_volume;
        rec.params = step.best_params;
        rec.elapsed_seconds = elapsed;
        out.history.push_back(rec);
        if (cfg.log) {
            std::ostringstream msg;
            msg << "iteration " << pass << " t=" << elapsed << " volume=" << step.best_volume << " params=";
            for (double p : step.best_params) msg << p << " ";
            cfg.log(msg.str());
        }
    }

    out.best_params = global.params;
    out.best_volume = global.volume;
    out.window_lo = lo;
    out.window_hi = hi;

    OptimizerConfig confirm = OptimizerConfig{};
    confirm.tolerance = cfg.admissibility.tolerance / 10.0;
    confirm.threads = cfg.threads;
    out.confirmed = is_admissible(family.build(out.best_params), body, confirm).admissible;
    if (cfg.log) {
        std::ostringstream msg;
        msg << "solve volume=" << out.best_volume << " confirmed=" << (out.confirmed ? "true" : "false");
        cfg.log(msg.str());
    }
    return out;
}

}  // namespace dioph
