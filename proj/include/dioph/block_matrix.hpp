#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dioph/errors.hpp"
#include "dioph/starbody.hpp"

namespace dioph {

/// Dense row-major n x n matrix of doubles.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;  // row-major, n*n entries

    DenseMatrix() = default;
    explicit DenseMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    Point apply(const Point& x) const {
        if (static_cast<int>(x.size()) != n) throw DimensionMismatch("matrix/vector dimension mismatch");
        Point y(x.size(), 0.0);
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            for (int j = 0; j < n; ++j) acc += at(i, j) * x[j];
            y[static_cast<std::size_t>(i)] = acc;
        }
        return y;
    }

    /// A^T x
    Point apply_transposed(const Point& x) const {
        if (static_cast<int>(x.size()) != n) throw DimensionMismatch("matrix/vector dimension mismatch");
        Point y(x.size(), 0.0);
        for (int j = 0; j < n; ++j) {
            double acc = 0;
            for (int i = 0; i < n; ++i) acc += at(i, j) * x[i];
            y[static_cast<std::size_t>(j)] = acc;
        }
        return y;
    }

    friend DenseMatrix operator*(const DenseMatrix& p, const DenseMatrix& q) {
        if (p.n != q.n) throw DimensionMismatch("matrix product dimension mismatch");
        DenseMatrix r(p.n);
        for (int i = 0; i < p.n; ++i)
            for (int k = 0; k < p.n; ++k) {
                double v = p.at(i, k);
                if (v == 0.0) continue;
                for (int j = 0; j < p.n; ++j) r.at(i, j) += v * q.at(k, j);
            }
        return r;
    }

    /// Determinant by LU with partial pivoting.
    double determinant() const {
        DenseMatrix lu = *this;
        double det = 1.0;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(lu.at(r, c)) > std::abs(lu.at(piv, c))) piv = r;
            if (lu.at(piv, c) == 0.0) return 0.0;
            if (piv != c) {
                for (int j = 0; j < n; ++j) std::swap(lu.a[static_cast<std::size_t>(piv) * n + j], lu.a[static_cast<std::size_t>(c) * n + j]);
                det = -det;
            }
            det *= lu.at(c, c);
            for (int r = c + 1; r < n; ++r) {
                double f = lu.at(r, c) / lu.at(c, c);
                for (int j = c; j < n; ++j) lu.at(r, j) -= f * lu.at(c, j);
            }
        }
        return det;
    }
};

/// Candidate parallelepiped matrix: n-2k diagonal entries `a` followed by k
/// rotation-like 2x2 blocks [[a_i, a_i], [-a_i, a_i]]. The image of the
/// cube [-1,1]^n under this matrix is the candidate inscribed box; its
/// determinant a^(n-2k) * prod 2 a_i^2 is the quantity being maximized.
struct BlockMatrix {
    int n = 0;
    double diag = 1.0;           // shared diagonal entry (unused if n == 2k)
    std::vector<double> blocks;  // a_1..a_k

    BlockMatrix(int n_, double diag_, std::vector<double> blocks_)
        : n(n_), diag(diag_), blocks(std::move(blocks_)) {
        if (n - 2 * static_cast<int>(blocks.size()) < 0)
            throw DimensionMismatch("too many 2x2 blocks for dimension " + std::to_string(n));
    }

    int block_count() const { return static_cast<int>(blocks.size()); }
    int diag_count() const { return n - 2 * block_count(); }

    double det() const {
        double d = 1.0;
        for (int i = 0; i < diag_count(); ++i) d *= diag;
        for (double b : blocks) d *= 2.0 * b * b;
        return d;
    }

    BlockMatrix scaled(double t) const {
        BlockMatrix m = *this;
        m.diag *= t;
        for (double& b : m.blocks) b *= t;
        return m;
    }
};

inline DenseMatrix to_dense(const BlockMatrix& m) {
    DenseMatrix d(m.n);
    int p = 0;
    for (; p < m.diag_count(); ++p) d.at(p, p) = m.diag;
    for (double b : m.blocks) {
        d.at(p, p) = b;
        d.at(p, p + 1) = b;
        d.at(p + 1, p) = -b;
        d.at(p + 1, p + 1) = b;
        p += 2;
    }
    return d;
}

/// Closed-form inverse: diagonal entries 1/a; each block inverts to
/// [[1/(2a_i), -1/(2a_i)], [1/(2a_i), 1/(2a_i)]].
inline DenseMatrix inverse(const BlockMatrix& m) {
    DenseMatrix d(m.n);
    int p = 0;
    for (; p < m.diag_count(); ++p) {
        if (m.diag == 0.0) throw ZeroDivision{};
        d.at(p, p) = 1.0 / m.diag;
    }
    for (double b : m.blocks) {
        if (b == 0.0) throw ZeroDivision{};
        double v = 1.0 / (2.0 * b);
        d.at(p, p) = v;
        d.at(p, p + 1) = -v;
        d.at(p + 1, p) = v;
        d.at(p + 1, p + 1) = v;
        p += 2;
    }
    return d;
}

/// All 2^n images A*e of the cube corners e in {-1,+1}^n.
inline std::vector<Point> vertices(const DenseMatrix& A) {
    if (A.n > 16) throw DimensionTooLarge("vertex enumeration capped at n = 16");
    std::vector<Point> out;
    out.reserve(std::size_t{1} << A.n);
    Point e(static_cast<std::size_t>(A.n), 1.0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << A.n); ++mask) {
        for (int i = 0; i < A.n; ++i) e[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1.0 : -1.0;
        out.push_back(A.apply(e));
    }
    return out;
}

inline std::vector<Point> vertices(const BlockMatrix& m) { return vertices(to_dense(m)); }

/// The constraint box of the reduced coordinates y = S^-1 x, where S
/// rescales each coordinate by its matrix entry. In y the feasible set
/// |A^-1 x|_inf <= 1 becomes |y_i| <= 1 on the diagonal coordinates and
/// |y_j + y_{j+1}| <= 2, |y_j - y_{j+1}| <= 2 on each block pair; the box
/// does not depend on the matrix entries.
struct ReducedConstraints {
    int n = 0;
    int diag_count = 0;               // |y_i| <= 1 for i < diag_count
    std::vector<int> pair_starts;     // |y_j +- y_{j+1}| <= 2 for each start j
    std::vector<double> scale;        // x_i = scale[i] * y_i

    bool satisfied(const Point& y, double tol = 0.0) const {
        for (int i = 0; i < diag_count; ++i)
            if (std::abs(y[static_cast<std::size_t>(i)]) > 1.0 + tol) return false;
        for (int j : pair_starts) {
            double u = y[static_cast<std::size_t>(j)], v = y[static_cast<std::size_t>(j) + 1];
            if (std::abs(u + v) > 2.0 + tol || std::abs(u - v) > 2.0 + tol) return false;
        }
        return true;
    }

    Point to_x(const Point& y) const {
        Point x(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = scale[i] * y[i];
        return x;
    }
};

inline ReducedConstraints reduced_constraints(const BlockMatrix& m) {
    ReducedConstraints rc;
    rc.n = m.n;
    rc.diag_count = m.diag_count();
    rc.scale.assign(static_cast<std::size_t>(m.n), m.diag);
    int p = rc.diag_count;
    for (double b : m.blocks) {
        rc.pair_starts.push_back(p);
        rc.scale[static_cast<std::size_t>(p)] = b;
        rc.scale[static_cast<std::size_t>(p) + 1] = b;
        p += 2;
    }
    return rc;
}

}  // namespace dioph
