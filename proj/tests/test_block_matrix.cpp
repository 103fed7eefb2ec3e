#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dioph/block_matrix.hpp"
#include "dioph/starbody.hpp"

using namespace dioph;

namespace {

std::mt19937_64 rng(424242);
double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

BlockMatrix random_block(int n, int k) {
    std::vector<double> blocks;
    for (int i = 0; i < k; ++i) blocks.push_back(uniform(0.2, 2.0));
    return BlockMatrix(n, uniform(0.2, 2.0), blocks);
}

}  // namespace

TEST_CASE("dense layout") {
    BlockMatrix a3(3, 1.0, {1.0});
    DenseMatrix d = to_dense(a3);
    double expect[3][3] = {{1, 0, 0}, {0, 1, 1}, {0, -1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(d.at(i, j) == expect[i][j]);

    BlockMatrix pair(2, 1.0, {1.0});
    DenseMatrix p = to_dense(pair);
    CHECK(p.at(0, 0) == 1.0);
    CHECK(p.at(0, 1) == 1.0);
    CHECK(p.at(1, 0) == -1.0);
    CHECK(p.at(1, 1) == 1.0);

    BlockMatrix a4(4, 0.81649, {1.15469});
    CHECK(a4.det() == doctest::Approx(1.77777).epsilon(1e-4));
    CHECK_THROWS_AS(BlockMatrix(3, 1.0, {1.0, 1.0}), DimensionMismatch);
}

TEST_CASE("closed-form inverse") {
    BlockMatrix a3(3, 1.0, {1.0});
    DenseMatrix inv3 = inverse(a3);
    double expect[3][3] = {{1, 0, 0}, {0, 0.5, -0.5}, {0, 0.5, 0.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(inv3.at(i, j) == expect[i][j]);

    BlockMatrix ident(4, 1.0, {});
    DenseMatrix id_inv = inverse(ident);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(id_inv.at(i, j) == (i == j ? 1.0 : 0.0));

    double ab = 1.04085;
    BlockMatrix a6(6, 0.62510, {ab, ab});
    DenseMatrix prod = to_dense(a6) * inverse(a6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(prod.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
}

TEST_CASE("determinant closed form matches the dense determinant") {
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        int n = 2 * k + static_cast<int>(rng() % 3);
        BlockMatrix m = random_block(n, k);
        double dense = to_dense(m).determinant();
        CHECK(m.det() == doctest::Approx(dense).epsilon(1e-12));
        DenseMatrix prod = to_dense(m) * inverse(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(prod.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("vertex enumeration") {
    BlockMatrix a3(3, 1.0, {1.0});
    auto vs = vertices(a3);
    CHECK(vs.size() == 8);
    auto contains = [&](const Point& p) {
        for (const auto& v : vs) {
            bool same = true;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (std::abs(v[i] - p[i]) > 1e-12) same = false;
            if (same) return true;
        }
        return false;
    };
    CHECK(contains({1, 2, 0}));
    CHECK(contains({1, 0, 2}));

    BlockMatrix pair(2, 1.0, {1.0});
    CHECK(vertices(pair).size() == 4);

    double alpha = std::sqrt(2.0 / 3.0);
    BlockMatrix a4(4, alpha, {std::sqrt(2.0) * alpha});
    StarBody b42(4, 2);
    auto v4 = vertices(a4);
    CHECK(v4.size() == 16);
    for (const auto& v : v4) CHECK(evaluate(b42, v) <= 1.0 + 1e-6);

    DenseMatrix big(17);
    CHECK_THROWS_AS(vertices(big), DimensionTooLarge);
}

TEST_CASE("reduced constraint box") {
    BlockMatrix a3(3, 0.7, {1.3});
    ReducedConstraints rc3 = reduced_constraints(a3);
    CHECK(rc3.diag_count == 1);
    CHECK(rc3.pair_starts == std::vector<int>{1});
    CHECK(rc3.scale == std::vector<double>{0.7, 1.3, 1.3});

    BlockMatrix a4(4, 0.5, {2.0});
    ReducedConstraints rc4 = reduced_constraints(a4);
    CHECK(rc4.diag_count == 2);
    CHECK(rc4.pair_starts == std::vector<int>{2});

    // the box itself does not depend on the entries
    CHECK(rc3.satisfied({1.0, 1.0, 1.0}));
    CHECK(rc3.satisfied({-1.0, 0.0, 2.0}));
    CHECK_FALSE(rc3.satisfied({1.0001, 0.0, 0.0}));
    CHECK_FALSE(rc3.satisfied({0.0, 1.5, 0.6}));
}

TEST_CASE("box boundary maps onto the unit-cube boundary") {
    for (int trial = 0; trial < 50; ++trial) {
        int k = 1 + static_cast<int>(rng() % 2);
        int n = 2 * k + 1 + static_cast<int>(rng() % 2);
        BlockMatrix m = random_block(n, k);
        ReducedConstraints rc = reduced_constraints(m);
        DenseMatrix ainv = inverse(m);

        // build a y on the box boundary: diagonal coordinate pinned to 1 or
        // a pair pinned to |y_j + y_{j+1}| = 2
        Point y(static_cast<std::size_t>(n));
        for (double& v : y) v = uniform(-0.9, 0.9);
        if (trial % 2 == 0 && rc.diag_count > 0) {
            y[0] = 1.0;
        } else {
            int j = rc.pair_starts[0];
            double u = uniform(-0.9, 0.9);
            y[static_cast<std::size_t>(j)] = 1.0 + u;   // y_j + y_{j+1} = 2
            y[static_cast<std::size_t>(j) + 1] = 1.0 - u;
        }
        REQUIRE(rc.satisfied(y, 1e-12));
        Point x = rc.to_x(y);
        Point w = ainv.apply(x);
        double norm = 0;
        for (double v : w) norm = std::max(norm, std::abs(v));
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    }
}
