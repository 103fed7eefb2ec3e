#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dioph/algebraic.hpp"
#include "dioph/errors.hpp"
#include "dioph/exact_volume.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

// Exact constants of the product forms.
inline const QRoot5& coeff_t() {  // 10*sqrt5 - 22
    static const QRoot5 v{Rational(-22), Rational(10)};
    return v;
}
inline const QRoot5& coeff_t2() {  // (26 + 10*sqrt5)/27
    static const QRoot5 v{Rational(26, 27), Rational(10, 27)};
    return v;
}
inline const QRoot5& coeff_T() {  // coeff_t + 4 = 10*sqrt5 - 18
    static const QRoot5 v{Rational(-18), Rational(10)};
    return v;
}
inline const QRoot5& inv_golden() {  // (sqrt5 - 1)/2
    static const QRoot5 v{Rational(-1, 2), Rational(1, 2)};
    return v;
}

/// The four product forms bounded over the box |x +- y| <= 2, |z +- w| <= 2
/// (the first two depend on x, y only):
///   F0 = (1/2 + x^2)(1/2 + y^2)
///   F1 = (1 + x^2)|y|
///   F2 = (t1 + y^2)(t2 x^2 + z^2)|w|
///   F3 = (t + x^2)(t + z^2)(y^2 + w^2)
enum class BoxFunction { F0, F1, F2, F3 };

inline int arity(BoxFunction which) { return (which == BoxFunction::F0 || which == BoxFunction::F1) ? 2 : 4; }

inline const char* name(BoxFunction which) {
    switch (which) {
        case BoxFunction::F0: return "F0";
        case BoxFunction::F1: return "F1";
        case BoxFunction::F2: return "F2";
        default: return "F3";
    }
}

inline double eval_box_function(BoxFunction which, const std::vector<double>& p) {
    if (static_cast<int>(p.size()) != arity(which))
        throw ArityMismatch(std::string(name(which)) + " expects " + std::to_string(arity(which)) + " coordinates");
    static const double t = coeff_t().to_double();
    static const double t2 = coeff_t2().to_double();
    switch (which) {
        case BoxFunction::F0: return (0.5 + p[0] * p[0]) * (0.5 + p[1] * p[1]);
        case BoxFunction::F1: return (1.0 + p[0] * p[0]) * std::abs(p[1]);
        case BoxFunction::F2: return (t + p[1] * p[1]) * (t2 * p[0] * p[0] + p[2] * p[2]) * std::abs(p[3]);
        default: return (t + p[0] * p[0]) * (t + p[2] * p[2]) * (p[1] * p[1] + p[3] * p[3]);
    }
}

/// Exact evaluation at Q(sqrt 5) points. The absolute values require an
/// exact sign decision, which QRoot5 provides.
inline QRoot5 eval_box_function_exact(BoxFunction which, const std::vector<QRoot5>& p) {
    if (static_cast<int>(p.size()) != arity(which))
        throw ArityMismatch(std::string(name(which)) + " expects " + std::to_string(arity(which)) + " coordinates");
    const QRoot5 half(Rational(1, 2));
    switch (which) {
        case BoxFunction::F0: return (half + p[0] * p[0]) * (half + p[1] * p[1]);
        case BoxFunction::F1: return (QRoot5(1) + p[0] * p[0]) * p[1].abs();
        case BoxFunction::F2:
            return (coeff_t() + p[1] * p[1]) * (coeff_t2() * p[0] * p[0] + p[2] * p[2]) * p[3].abs();
        default:
            return (coeff_t() + p[0] * p[0]) * (coeff_t() + p[2] * p[2]) * (p[1] * p[1] + p[3] * p[3]);
    }
}

namespace detail {

// gradient on the symmetry-reduced domain (all coordinates >= 0, absolute
// values dropped)
inline void box_function_gradient(BoxFunction which, const double* p, double* g) {
    static const double t = coeff_t().to_double();
    static const double t2 = coeff_t2().to_double();
    switch (which) {
        case BoxFunction::F0:
            g[0] = 2 * p[0] * (0.5 + p[1] * p[1]);
            g[1] = 2 * p[1] * (0.5 + p[0] * p[0]);
            return;
        case BoxFunction::F1:
            g[0] = 2 * p[0] * p[1];
            g[1] = 1.0 + p[0] * p[0];
            return;
        case BoxFunction::F2:
            g[0] = 2 * t2 * p[0] * (t + p[1] * p[1]) * p[3];
            g[1] = 2 * p[1] * (t2 * p[0] * p[0] + p[2] * p[2]) * p[3];
            g[2] = 2 * p[2] * (t + p[1] * p[1]) * p[3];
            g[3] = (t + p[1] * p[1]) * (t2 * p[0] * p[0] + p[2] * p[2]);
            return;
        default:
            g[0] = 2 * p[0] * (t + p[2] * p[2]) * (p[1] * p[1] + p[3] * p[3]);
            g[1] = 2 * p[1] * (t + p[0] * p[0]) * (t + p[2] * p[2]);
            g[2] = 2 * p[2] * (t + p[0] * p[0]) * (p[1] * p[1] + p[3] * p[3]);
            g[3] = 2 * p[3] * (t + p[0] * p[0]) * (t + p[2] * p[2]);
            return;
    }
}

// nearest point of the triangle {u >= 0, v >= 0, u + v <= 2}
inline void project_triangle(double& u, double& v) {
    u = std::max(u, 0.0);
    v = std::max(v, 0.0);
    if (u + v > 2.0) {
        double shift = (u + v - 2.0) / 2.0;
        u -= shift;
        v -= shift;
        if (u < 0) {
            v += u;
            u = 0;
        }
        if (v < 0) {
            u += v;
            v = 0;
        }
        u = std::min(std::max(u, 0.0), 2.0);
        v = std::min(std::max(v, 0.0), 2.0);
    }
}

inline double polish(BoxFunction which, std::vector<double> p, int max_iter = 400) {
    int dim = arity(which);
    double val = eval_box_function(which, p);
    double step = 0.05;
    std::array<double, 4> g{};
    for (int it = 0; it < max_iter && step > 1e-15; ++it) {
        box_function_gradient(which, p.data(), g.data());
        std::vector<double> q = p;
        for (int i = 0; i < dim; ++i) q[static_cast<std::size_t>(i)] += step * g[static_cast<std::size_t>(i)];
        project_triangle(q[0], q[1]);
        if (dim == 4) project_triangle(q[2], q[3]);
        double v2 = eval_box_function(which, q);
        if (v2 > val) {
            p = std::move(q);
            val = v2;
            step *= 1.5;
        } else {
            step *= 0.5;
        }
    }
    return val;
}

}  // namespace detail

/// Brute-force lower bound on the maximum: a dense scan of the
/// symmetry-reduced domain {x, y >= 0, x + y <= 2} (squared for the
/// four-variable forms), then gradient polish from the best grid cells.
/// With the default steps the result matches the closed forms to 1e-6.
inline double oracle_max(BoxFunction which, double grid_step, int polish_starts = 32, int threads = 0) {
    if (!(grid_step > 0)) throw std::invalid_argument("grid_step must be positive");
    int per_axis = static_cast<int>(std::floor(2.0 / grid_step)) + 1;
    auto coord = [&](int i) { return std::min(2.0, i * grid_step); };

    struct Cand {
        double value = -1.0;
        std::vector<double> point;
    };
    auto better = [](const Cand& a, const Cand& b) { return a.value > b.value; };

    // triangle grid as a flat list
    std::vector<std::pair<double, double>> tri;
    for (int i = 0; i < per_axis; ++i)
        for (int j = 0; coord(i) + coord(j) <= 2.0 + 1e-12 && j < per_axis; ++j) tri.push_back({coord(i), coord(j)});

    std::vector<Cand> top;
    if (arity(which) == 2) {
        std::vector<Cand> best = parallel_map<Cand>(tri.size(), threads, [&](std::size_t k) {
            std::vector<double> p{tri[k].first, tri[k].second};
            return Cand{eval_box_function(which, p), std::move(p)};
        });
        std::sort(best.begin(), best.end(), better);
        best.resize(std::min<std::size_t>(best.size(), static_cast<std::size_t>(polish_starts)));
        top = std::move(best);
    } else {
        // outer loop over the first triangle, inner scan of the second
        std::vector<Cand> best = parallel_map<Cand>(tri.size(), threads, [&](std::size_t k) {
            Cand c;
            std::vector<double> p{tri[k].first, tri[k].second, 0.0, 0.0};
            for (const auto& [z, w] : tri) {
                p[2] = z;
                p[3] = w;
                double v = eval_box_function(which, p);
                if (v > c.value) {
                    c.value = v;
                    c.point = p;
                }
            }
            return c;
        });
        std::sort(best.begin(), best.end(), better);
        best.resize(std::min<std::size_t>(best.size(), static_cast<std::size_t>(polish_starts)));
        top = std::move(best);
    }

    double result = 0.0;
    for (const auto& c : top) {
        result = std::max(result, c.value);
        result = std::max(result, detail::polish(which, c.point));
    }
    return result;
}

/// Exact maxima over the box |x +- y| <= 2, |z +- w| <= 2:
///   F0 -> 9/4, F1 -> 2, F2 -> 64(5 sqrt5 - 9)/27, F3 -> 64(56 - 25 sqrt5).
inline QRoot5 box_function_max_exact(BoxFunction which) {
    switch (which) {
        case BoxFunction::F0: return QRoot5(Rational(9, 4));
        case BoxFunction::F1: return QRoot5(2);
        case BoxFunction::F2: return QRoot5(Rational(64, 27)) * (QRoot5(Rational(0), Rational(5)) - QRoot5(9));
        default: return QRoot5(64) * (QRoot5(56) - QRoot5(Rational(0), Rational(25)));
    }
}

/// Closed-form maximum with its brute-force witness. `verified` requires
/// the oracle to come within 1e-5 of the closed form without ever
/// exceeding it by more than 1e-9.
inline ClosedFormResult closed_form_max(BoxFunction which, double oracle_step = 0.0, int threads = 0) {
    if (oracle_step <= 0) oracle_step = arity(which) == 2 ? 0.01 : 0.02;
    ClosedFormResult r;
    r.name = std::string("max_") + name(which);
    r.exact = ExactVolume::plain(box_function_max_exact(which));
    r.float_value = r.exact.to_double();
    r.oracle_value = oracle_max(which, oracle_step, 32, threads);
    r.oracle_gap = r.float_value - r.oracle_value;
    r.verified = r.oracle_value <= r.float_value + 1e-9 && std::abs(r.oracle_gap) <= 1e-5;
    return r;
}

}  // namespace dioph
