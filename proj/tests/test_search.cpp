#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dioph/search.hpp"

using namespace dioph;

namespace {

SearchConfig quick(int iterations = 6) {
    SearchConfig cfg;
    cfg.iterations = iterations;
    cfg.admissibility.random_starts = 12;
    cfg.admissibility.max_ascent_iterations = 100;
    return cfg;
}

}  // namespace

TEST_CASE("one sweep finds the known (3,1) optimum on the coarse grid") {
    ParamFamily fam = symmetric_family(3);
    StarBody body(3, 1);
    // the 11-point grid on [0,2] contains the touching cell (1,1); every
    // cell on its ray rescales onto the same boundary candidate
    SearchResult res = grid_iteration(fam, body, {0.0, 0.0}, {2.0, 2.0}, 11, 0.9,
                                      SearchConfig::search_optimizer_profile(), 0);
    CHECK(res.best_params[0] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(res.best_params[1] == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(res.best_volume == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(res.window_lo[0] == doctest::Approx(0.8).epsilon(1e-4));
    CHECK(res.window_hi[0] == doctest::Approx(1.2).epsilon(1e-4));
}

TEST_CASE("a threshold above the optimum rejects every candidate") {
    ParamFamily fam = symmetric_family(3);
    CHECK_THROWS_AS(grid_iteration(fam, StarBody(3, 1), {0.0, 0.0}, {2.0, 2.0}, 11, 5.0,
                                   SearchConfig::search_optimizer_profile(), 0),
                    NoAdmissibleCandidate);
}

TEST_CASE("refinement converges on the (3,1) volume") {
    SearchResult res = refine_search(symmetric_family(3), StarBody(3, 1), quick(8));
    CHECK(res.best_volume == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(res.confirmed);
    // the reported best dominates every per-pass record
    for (const auto& rec : res.history) CHECK(res.best_volume >= rec.volume);
}

TEST_CASE("a window already centered on the optimum is a fixed point") {
    SearchConfig cfg = quick(3);
    cfg.lo = {1.0 - 1e-7, 1.0 - 1e-7};
    cfg.hi = {1.0 + 1e-7, 1.0 + 1e-7};
    SearchResult res = refine_search(symmetric_family(3), StarBody(3, 1), cfg);
    CHECK(res.best_volume == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("results are identical for any worker count") {
    SearchConfig c1 = quick(5), c8 = quick(5);
    c1.threads = 1;
    c8.threads = 8;
    c1.admissibility.threads = 1;
    c8.admissibility.threads = 8;
    SearchResult r1 = refine_search(symmetric_family(3), StarBody(3, 1), c1);
    SearchResult r8 = refine_search(symmetric_family(3), StarBody(3, 1), c8);
    CHECK(r1.best_params == r8.best_params);
    CHECK(r1.best_volume == r8.best_volume);
}

TEST_CASE("custom families validate their parameter counts") {
    // n = 2 * vars: every parameter is a block entry
    BlockMatrix m = custom_family(4, 2).build({0.5, 1.0});
    CHECK(m.diag_count() == 0);
    CHECK(m.blocks == std::vector<double>{0.5, 1.0});
    // otherwise the first parameter is the shared diagonal entry
    BlockMatrix m2 = custom_family(5, 3).build({0.5, 1.0, 1.5});
    CHECK(m2.diag == 0.5);
    CHECK(m2.blocks == std::vector<double>{1.0, 1.5});
    CHECK_THROWS_AS(custom_family(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(custom_family(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_family(7), std::invalid_argument);
}
