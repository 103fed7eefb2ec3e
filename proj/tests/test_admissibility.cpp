#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dioph/admissibility.hpp"
#include "dioph/theorem_volumes.hpp"

using namespace dioph;

namespace {

BlockMatrix a3() { return BlockMatrix(3, 1.0, {1.0}); }

OptimizerConfig quick_cfg() {
    OptimizerConfig cfg;
    cfg.lattice_points = 3;
    cfg.random_starts = 16;
    cfg.max_ascent_iterations = 150;
    return cfg;
}

}  // namespace

TEST_CASE("vertex stage") {
    StarBody b31(3, 1);
    CHECK(check_vertices(a3(), b31));
    CHECK_FALSE(check_vertices(a3().scaled(1.01), b31));
    CHECK(check_vertices(BlockMatrix(3, 1e-3, {1e-3}), b31));
    CHECK_THROWS_AS(check_vertices(a3(), StarBody(4, 2)), DimensionMismatch);
}

TEST_CASE("diagonal stage") {
    double alpha = std::sqrt(2.0 / 3.0);
    BlockMatrix a4(4, alpha, {std::sqrt(2.0) * alpha});
    StarBody b42(4, 2);
    CHECK(check_diagonals(a4, b42, 0.3));
    // step 1 degenerates to sampling the vertices only
    CHECK(check_diagonals(a3().scaled(1.01), StarBody(3, 1), 1.0) ==
          check_vertices(a3().scaled(1.01), StarBody(3, 1)));

    BlockMatrix a5 = verify_theorem_V(5, quick_cfg()).matrix;
    CHECK_FALSE(check_diagonals(a5.scaled(1.05), StarBody(5, 2), 0.1));
    CHECK_THROWS_AS(check_diagonals(a4, b42, 0.0), std::invalid_argument);
}

TEST_CASE("global maximization over the box image") {
    StarBody b31(3, 1);
    auto [mx, arg] = max_over_cube(a3(), b31, quick_cfg());
    CHECK(mx == doctest::Approx(1.0).epsilon(1e-6));
    // the argmax really attains the reported value (the contact set has
    // several symmetry classes; any of them may win the tie-break)
    CHECK(evaluate(b31, arg) == doctest::Approx(mx));

    auto [half, _] = max_over_cube(a3().scaled(0.5), b31, quick_cfg());
    CHECK(half == doctest::Approx(0.125).epsilon(1e-6));

    BlockMatrix a6 = verify_theorem_V(6, quick_cfg()).matrix;
    auto [m6, arg6] = max_over_cube(a6, StarBody(6, 3), quick_cfg());
    CHECK(m6 == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("homogeneous scaling of the maximum") {
    StarBody b31(3, 1);
    auto [base, a1] = max_over_cube(a3(), b31, quick_cfg());
    auto [scaled, a2] = max_over_cube(a3().scaled(1.1), b31, quick_cfg());
    CHECK(scaled == doctest::Approx(std::pow(1.1, 3) * base).epsilon(1e-6));
}

TEST_CASE("full pipeline") {
    OptimizerConfig cfg = quick_cfg();
    BlockMatrix a5 = verify_theorem_V(5, cfg).matrix;
    AdmissibilityReport rep = is_admissible(a5, StarBody(5, 2), cfg);
    CHECK(rep.admissible);
    CHECK(rep.vertices_ok);
    CHECK(rep.diagonals_ok);
    CHECK(rep.max_f >= 1.0 - 1e-4);
    CHECK(rep.max_f <= 1.0 + 1e-6);

    AdmissibilityReport bad = is_admissible(BlockMatrix(3, 10.0, {10.0}), StarBody(3, 1), cfg);
    CHECK_FALSE(bad.admissible);
    CHECK_FALSE(bad.vertices_ok);  // rejected before the later stages

    // stage soundness: the reported maximum dominates every vertex value
    StarBody b31(3, 1);
    AdmissibilityReport ok = is_admissible(a3(), b31, cfg);
    double vmax = 0;
    for (const Point& v : vertices(a3())) vmax = std::max(vmax, evaluate(b31, v));
    CHECK(ok.max_f >= vmax);
}

TEST_CASE("composed matrices stay admissible for the composed body") {
    ComposedBody comp = compose(StarBody(3, 1), StarBody(4, 2));
    double alpha = std::sqrt(2.0 / 3.0);
    BlockMatrix a4(4, alpha, {std::sqrt(2.0) * alpha});

    // block-diagonal concatenation of the two witnesses, with rows permuted
    // into the composed body's canonical coordinates
    DenseMatrix d3 = to_dense(a3()), d4 = to_dense(a4);
    DenseMatrix combined(7);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) combined.at(comp.embedding[static_cast<std::size_t>(i)],
                                                comp.embedding[static_cast<std::size_t>(j)]) = d3.at(i, j);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) combined.at(comp.embedding[static_cast<std::size_t>(3 + i)],
                                                comp.embedding[static_cast<std::size_t>(3 + j)]) = d4.at(i, j);

    OptimizerConfig cfg = quick_cfg();
    cfg.random_starts = 8;
    AdmissibilityReport rep = is_admissible(combined, comp.body, comp.body.canonical_layout(), cfg);
    CHECK(rep.admissible);
    CHECK(rep.max_f == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("reports are deterministic for any worker count") {
    OptimizerConfig c1 = quick_cfg(), c4 = quick_cfg();
    c1.threads = 1;
    c4.threads = 4;
    BlockMatrix a5 = verify_theorem_V(5, quick_cfg()).matrix;
    AdmissibilityReport r1 = is_admissible(a5, StarBody(5, 2), c1);
    AdmissibilityReport r4 = is_admissible(a5, StarBody(5, 2), c4);
    CHECK(r1.max_f == r4.max_f);
    CHECK(r1.argmax == r4.argmax);
    AdmissibilityReport r1b = is_admissible(a5, StarBody(5, 2), c1);
    CHECK(r1.max_f == r1b.max_f);
    CHECK(r1.argmax == r1b.argmax);
}
