#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dioph/errors.hpp"

namespace dioph {

using Point = std::vector<double>;

/// Which coordinates multiply together in the product form: `pairs` lists
/// the index pairs of the quadratic factors x_i^2 + x_j^2, `linear` the
/// coordinates entering as plain |x_i|. Indices are 0-based.
struct PairingLayout {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> linear;
};

/// The region f_{n,s} <= 1 where
///   f_{n,s}(x) = 2^-s * prod_{i<s} (x_i^2 + x_{s+i}^2) * prod_{i>=2s} |x_i|.
/// The default layout pairs coordinate i with coordinate s+i and leaves the
/// last n-2s coordinates linear; evaluation accepts any other pairing of
/// the same shape.
struct StarBody {
    int n = 0;  ///< ambient dimension
    int s = 0;  ///< number of quadratic (complex-pair) factors

    StarBody(int n_, int s_) : n(n_), s(s_) {
        if (n < 1 || s < 0 || 2 * s > n)
            throw DimensionMismatch("star body requires 1 <= n and 0 <= 2s <= n");
    }

    PairingLayout canonical_layout() const {
        PairingLayout lay;
        for (int i = 0; i < s; ++i) lay.pairs.push_back({i, s + i});
        for (int i = 2 * s; i < n; ++i) lay.linear.push_back(i);
        return lay;
    }
};

inline void check_dimension(const StarBody& body, const Point& x) {
    if (static_cast<int>(x.size()) != body.n)
        throw DimensionMismatch("point has dimension " + std::to_string(x.size()) +
                                ", star body expects " + std::to_string(body.n));
}

inline double evaluate(const StarBody& body, const Point& x, const PairingLayout& lay) {
    check_dimension(body, x);
    double v = std::ldexp(1.0, -body.s);  // 2^-s
    for (auto [i, j] : lay.pairs) v *= x[i] * x[i] + x[j] * x[j];
    for (int i : lay.linear) v *= std::abs(x[i]);
    return v;
}

inline double evaluate(const StarBody& body, const Point& x) {
    return evaluate(body, x, body.canonical_layout());
}

/// Analytic gradient of f_{n,s}. For a linear factor the derivative is
/// sign(x_i) times the rest of the product; at x_i = 0 the symmetric
/// subgradient 0 is reported.
inline Point gradient(const StarBody& body, const Point& x, const PairingLayout& lay) {
    check_dimension(body, x);
    std::size_t nfac = lay.pairs.size() + lay.linear.size();
    std::vector<double> fac(nfac);
    for (std::size_t k = 0; k < lay.pairs.size(); ++k) {
        auto [i, j] = lay.pairs[k];
        fac[k] = x[i] * x[i] + x[j] * x[j];
    }
    for (std::size_t k = 0; k < lay.linear.size(); ++k) fac[lay.pairs.size() + k] = std::abs(x[lay.linear[k]]);

    // prefix/suffix products so each partial gets "product of the others"
    std::vector<double> pre(nfac + 1, 1.0), suf(nfac + 1, 1.0);
    for (std::size_t k = 0; k < nfac; ++k) pre[k + 1] = pre[k] * fac[k];
    for (std::size_t k = nfac; k > 0; --k) suf[k - 1] = suf[k] * fac[k - 1];

    double scale = std::ldexp(1.0, -body.s);
    Point g(x.size(), 0.0);
    for (std::size_t k = 0; k < lay.pairs.size(); ++k) {
        auto [i, j] = lay.pairs[k];
        double others = pre[k] * suf[k + 1] * scale;
        g[i] += 2.0 * x[i] * others;
        g[j] += 2.0 * x[j] * others;
    }
    for (std::size_t k = 0; k < lay.linear.size(); ++k) {
        int i = lay.linear[k];
        double sgn = x[i] > 0 ? 1.0 : (x[i] < 0 ? -1.0 : 0.0);
        g[i] += sgn * pre[lay.pairs.size() + k] * suf[lay.pairs.size() + k + 1] * scale;
    }
    return g;
}

inline Point gradient(const StarBody& body, const Point& x) {
    return gradient(body, x, body.canonical_layout());
}

/// Composition of two star bodies into the (n+n', s+s') body, together with
/// the coordinate embedding that makes the product identity hold pointwise:
///   evaluate(body, embed(x ++ x')) = evaluate(b1, x) * evaluate(b2, x').
struct ComposedBody {
    StarBody body;
    // embedding[k] = position of concatenated coordinate k in the composed
    // body's canonical coordinates
    std::vector<int> embedding;

    Point embed(const Point& concat) const {
        if (concat.size() != embedding.size())
            throw DimensionMismatch("concatenated point has wrong dimension");
        Point out(concat.size(), 0.0);
        for (std::size_t k = 0; k < concat.size(); ++k) out[static_cast<std::size_t>(embedding[k])] = concat[k];
        return out;
    }
};

inline ComposedBody compose(const StarBody& b1, const StarBody& b2) {
    StarBody out(b1.n + b2.n, b1.s + b2.s);
    std::vector<int> emb(static_cast<std::size_t>(out.n));
    int S = out.s;
    // b1 pair (i, b1.s+i) -> composed pair (i, S+i); b2 pair (j, b2.s+j) ->
    // composed pair (b1.s+j, S+b1.s+j); linear coordinates fill the tail.
    for (int i = 0; i < b1.s; ++i) {
        emb[i] = i;
        emb[b1.s + i] = S + i;
    }
    for (int i = 2 * b1.s; i < b1.n; ++i) emb[i] = 2 * S + (i - 2 * b1.s);
    for (int j = 0; j < b2.s; ++j) {
        emb[b1.n + j] = b1.s + j;
        emb[b1.n + b2.s + j] = S + b1.s + j;
    }
    for (int j = 2 * b2.s; j < b2.n; ++j) emb[b1.n + j] = 2 * S + (b1.n - 2 * b1.s) + (j - 2 * b2.s);
    return {out, std::move(emb)};
}

}  // namespace dioph
