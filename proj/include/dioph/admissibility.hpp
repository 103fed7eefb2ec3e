#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dioph/block_matrix.hpp"
#include "dioph/parallel.hpp"
#include "dioph/starbody.hpp"

namespace dioph {

struct OptimizerConfig {
    double tolerance = 1e-9;      ///< slack on f <= 1 at sampled points
    double diagonal_step = 0.3;   ///< parameter step along vertex-to-vertex segments
    int lattice_points = 5;       ///< seed lattice resolution per dimension
    std::size_t max_lattice_starts = 20000;
    int random_starts = 64;
    int max_ascent_iterations = 300;
    std::uint64_t seed = 0x5eed;
    int threads = 0;  ///< 0 = DIOPH_THREADS env or hardware
};

struct AdmissibilityReport {
    bool vertices_ok = false;
    bool diagonals_ok = false;
    double max_f = 0.0;
    Point argmax;
    bool admissible = false;
    double tolerance = 0.0;
};

namespace detail {

inline double u01(std::mt19937_64& rng) {
    // 53 uniform mantissa bits; identical across platforms
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct BestPoint {
    double value = -1.0;
    Point x;

    void offer(double v, const Point& p) {
        if (v > value || (v == value && !x.empty() && p < x)) {
            value = v;
            x = p;
        } else if (x.empty()) {
            value = v;
            x = p;
        }
    }
    void merge(const BestPoint& other) {
        if (!other.x.empty()) offer(other.value, other.x);
    }
};

/// One projected-gradient ascent of sgn * f(A w) over the cube [-1,1]^n.
inline BestPoint ascend(const DenseMatrix& A, const StarBody& body, const PairingLayout& lay, Point w,
                        double sgn, int max_iter) {
    auto clamp = [](Point& p) {
        for (double& v : p) v = std::min(1.0, std::max(-1.0, v));
    };
    clamp(w);
    Point x = A.apply(w);
    double val = sgn * evaluate(body, x, lay);
    double step = 0.25;
    for (int it = 0; it < max_iter && step > 1e-13; ++it) {
        Point gx = gradient(body, x, lay);
        Point gw = A.apply_transposed(gx);
        Point w2 = w;
        for (std::size_t i = 0; i < w2.size(); ++i) w2[i] += sgn * step * gw[i];
        clamp(w2);
        Point x2 = A.apply(w2);
        double v2 = sgn * evaluate(body, x2, lay);
        if (v2 > val + 1e-16 * (1.0 + std::abs(val))) {
            w = std::move(w2);
            x = std::move(x2);
            val = v2;
            step *= 1.6;
        } else {
            step *= 0.4;
        }
    }
    BestPoint out;
    out.offer(std::abs(val), x);
    return out;
}

inline std::vector<Point> multistart_seeds(int n, const OptimizerConfig& cfg) {
    std::vector<Point> seeds;
    // cube corners
    if (n <= 16) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Point w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1.0 : -1.0;
            seeds.push_back(std::move(w));
        }
    }
    // coarse lattice, shrunk until it fits the start budget
    int pts = cfg.lattice_points;
    auto lattice_size = [&](int p) {
        double total = 1;
        for (int i = 0; i < n; ++i) total *= p;
        return total;
    };
    while (pts >= 3 && lattice_size(pts) > static_cast<double>(cfg.max_lattice_starts)) pts -= 1;
    if (pts >= 3) {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        for (;;) {
            Point w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                w[static_cast<std::size_t>(i)] = -1.0 + 2.0 * idx[static_cast<std::size_t>(i)] / (pts - 1);
            seeds.push_back(std::move(w));
            int c = 0;
            while (c < n && ++idx[static_cast<std::size_t>(c)] == pts) {
                idx[static_cast<std::size_t>(c)] = 0;
                ++c;
            }
            if (c == n) break;
        }
    }
    std::mt19937_64 rng(cfg.seed);
    for (int r = 0; r < cfg.random_starts; ++r) {
        Point w(static_cast<std::size_t>(n));
        for (double& v : w) v = 2.0 * u01(rng) - 1.0;
        seeds.push_back(std::move(w));
    }
    return seeds;
}

}  // namespace detail

/// Best-effort maximum of |f| over the parallelepiped A * [-1,1]^n, by
/// multistart projected-gradient ascent in the cube coordinates. Ascents
/// run for +f and -f from every seed (corner, lattice and random starts);
/// results merge deterministically (max value, ties to the
/// lexicographically smaller argmax), so reports do not depend on the
/// worker count.
inline std::pair<double, Point> max_over_cube(const DenseMatrix& A, const StarBody& body,
                                              const PairingLayout& lay, const OptimizerConfig& cfg) {
    std::vector<Point> seeds = detail::multistart_seeds(A.n, cfg);
    std::vector<detail::BestPoint> partial = parallel_map<detail::BestPoint>(
        seeds.size(), cfg.threads, [&](std::size_t i) {
            detail::BestPoint best = detail::ascend(A, body, lay, seeds[i], +1.0, cfg.max_ascent_iterations);
            best.merge(detail::ascend(A, body, lay, seeds[i], -1.0, cfg.max_ascent_iterations));
            return best;
        });
    detail::BestPoint best;
    for (const auto& p : partial) best.merge(p);
    return {best.value, best.x};
}

inline std::pair<double, Point> max_over_cube(const BlockMatrix& m, const StarBody& body,
                                              const OptimizerConfig& cfg = {}) {
    return max_over_cube(to_dense(m), body, body.canonical_layout(), cfg);
}

/// Stage 1: f <= 1 + tol at all 2^n parallelepiped vertices.
inline bool check_vertices(const DenseMatrix& A, const StarBody& body, const PairingLayout& lay,
                           double tolerance = 1e-9) {
    if (A.n != body.n) throw DimensionMismatch("matrix and star body dimensions differ");
    for (const Point& v : vertices(A))
        if (evaluate(body, v, lay) > 1.0 + tolerance) return false;
    return true;
}

inline bool check_vertices(const BlockMatrix& m, const StarBody& body, double tolerance = 1e-9) {
    return check_vertices(to_dense(m), body, body.canonical_layout(), tolerance);
}

/// Stage 2: f <= 1 + tol sampled along every segment between two distinct
/// vertices, at parameters {0, step, 2 step, ..., 1}.
inline bool check_diagonals(const DenseMatrix& A, const StarBody& body, const PairingLayout& lay,
                            double step = 0.3, double tolerance = 1e-9) {
    if (A.n != body.n) throw DimensionMismatch("matrix and star body dimensions differ");
    if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("step must be in (0, 1]");
    std::vector<double> ts;
    for (double t = 0.0; t < 1.0 + 1e-12; t += step) ts.push_back(std::min(t, 1.0));
    if (ts.back() < 1.0) ts.push_back(1.0);

    std::vector<Point> vs = vertices(A);
    Point x(static_cast<std::size_t>(A.n));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (double t : ts) {
                for (std::size_t c = 0; c < x.size(); ++c) x[c] = vs[i][c] + t * (vs[j][c] - vs[i][c]);
                if (evaluate(body, x, lay) > 1.0 + tolerance) return false;
            }
    return true;
}

inline bool check_diagonals(const BlockMatrix& m, const StarBody& body, double step = 0.3,
                            double tolerance = 1e-9) {
    return check_diagonals(to_dense(m), body, body.canonical_layout(), step, tolerance);
}

/// Full three-stage check with early exit: vertices, then diagonal samples,
/// then global maximization. max_f never reports below the best sampled
/// value from the earlier stages.
inline AdmissibilityReport is_admissible(const DenseMatrix& A, const StarBody& body,
                                         const PairingLayout& lay, const OptimizerConfig& cfg = {}) {
    if (A.n != body.n) throw DimensionMismatch("matrix and star body dimensions differ");
    AdmissibilityReport rep;
    rep.tolerance = cfg.tolerance;

    detail::BestPoint best;
    for (const Point& v : vertices(A)) best.offer(evaluate(body, v, lay), v);
    rep.max_f = best.value;
    rep.argmax = best.x;
    rep.vertices_ok = best.value <= 1.0 + cfg.tolerance;
    if (!rep.vertices_ok) return rep;

    std::vector<double> ts;
    for (double t = 0.0; t < 1.0 + 1e-12; t += cfg.diagonal_step) ts.push_back(std::min(t, 1.0));
    if (ts.back() < 1.0) ts.push_back(1.0);
    std::vector<Point> vs = vertices(A);
    Point x(static_cast<std::size_t>(A.n));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (double t : ts) {
                for (std::size_t c = 0; c < x.size(); ++c) x[c] = vs[i][c] + t * (vs[j][c] - vs[i][c]);
                best.offer(evaluate(body, x, lay), x);
            }
    rep.max_f = best.value;
    rep.argmax = best.x;
    rep.diagonals_ok = best.value <= 1.0 + cfg.tolerance;
    if (!rep.diagonals_ok) return rep;

    auto [mx, arg] = max_over_cube(A, body, lay, cfg);
    best.offer(mx, arg);
    rep.max_f = best.value;
    rep.argmax = best.x;
    rep.admissible = rep.vertices_ok && rep.diagonals_ok && rep.max_f <= 1.0 + cfg.tolerance;
    return rep;
}

inline AdmissibilityReport is_admissible(const BlockMatrix& m, const StarBody& body,
                                         const OptimizerConfig& cfg = {}) {
    return is_admissible(to_dense(m), body, body.canonical_layout(), cfg);
}

/// Best-effort maximum of f over the parallelepiped with no early exit:
/// the diagonal samples merged with the multistart result (which already
/// starts from every vertex). Unlike is_admissible this always pays for
/// the global stage; the search uses it to rescale candidates.
inline double survey_max(const DenseMatrix& A, const StarBody& body, const PairingLayout& lay,
                         const OptimizerConfig& cfg = {}) {
    double best = max_over_cube(A, body, lay, cfg).first;
    std::vector<double> ts;
    for (double t = 0.0; t < 1.0 + 1e-12; t += cfg.diagonal_step) ts.push_back(std::min(t, 1.0));
    if (ts.back() < 1.0) ts.push_back(1.0);
    std::vector<Point> vs = vertices(A);
    Point x(static_cast<std::size_t>(A.n));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (double t : ts) {
                for (std::size_t c = 0; c < x.size(); ++c) x[c] = vs[i][c] + t * (vs[j][c] - vs[i][c]);
                best = std::max(best, evaluate(body, x, lay));
            }
    return best;
}

}  // namespace dioph
