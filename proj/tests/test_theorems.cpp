#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dioph/bounds.hpp"
#include "dioph/certificates.hpp"
#include "dioph/ffunctions.hpp"
#include "dioph/theorem_volumes.hpp"

using namespace dioph;

namespace {

QRoot5 q(long a, long b = 0) { return QRoot5(Rational(a), Rational(b)); }

std::mt19937_64 rng(771177);
double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

OptimizerConfig quick_cfg() {
    OptimizerConfig cfg;
    cfg.lattice_points = 3;
    cfg.random_starts = 16;
    return cfg;
}

}  // namespace

TEST_CASE("product-form evaluation") {
    CHECK(eval_box_function(BoxFunction::F1, {1, 1}) == 2.0);
    CHECK(eval_box_function_exact(BoxFunction::F0, {q(0), q(0)}) == QRoot5(Rational(1, 4)));
    CHECK(eval_box_function_exact(BoxFunction::F3, {q(0), q(0), q(0), q(0)}).is_zero());
    CHECK_THROWS_AS(eval_box_function(BoxFunction::F2, {1, 1}), ArityMismatch);
}

TEST_CASE("closed-form maxima against the brute-force witness") {
    auto r0 = closed_form_max(BoxFunction::F0);
    CHECK(r0.exact.coeff == QRoot5(Rational(9, 4)));
    CHECK(r0.verified);
    auto r1 = closed_form_max(BoxFunction::F1);
    CHECK(r1.exact.coeff == q(2));
    CHECK(r1.verified);
    auto r2 = closed_form_max(BoxFunction::F2);
    CHECK(r2.exact.coeff == QRoot5(Rational(64, 27)) * q(-9, 5));
    CHECK(r2.float_value == doctest::Approx(5.1682).epsilon(1e-4));
    CHECK(r2.verified);
    auto r3 = closed_form_max(BoxFunction::F3);
    CHECK(r3.exact.coeff == q(64) * q(56, -25));
    CHECK(r3.float_value == doctest::Approx(6.29126).epsilon(1e-4));
    CHECK(r3.verified);
    for (const auto& r : {r0, r1, r2, r3}) CHECK(r.oracle_value <= r.float_value + 1e-9);
}

TEST_CASE("box-function symmetries") {
    for (auto which : {BoxFunction::F0, BoxFunction::F1, BoxFunction::F2, BoxFunction::F3}) {
        int dim = arity(which);
        for (int trial = 0; trial < 250; ++trial) {
            std::vector<double> p(static_cast<std::size_t>(dim));
            for (double& v : p) v = uniform(-2, 2);
            double base = eval_box_function(which, p);
            for (int mask = 1; mask < (1 << dim); ++mask) {
                std::vector<double> flipped = p;
                for (int i = 0; i < dim; ++i)
                    if (mask & (1 << i)) flipped[static_cast<std::size_t>(i)] *= -1;
                CHECK(eval_box_function(which, flipped) == doctest::Approx(base).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("certificate chains all check out") {
    CHECK(f0_certificates().ok());
    CHECK(f1_certificates().ok());
    CHECK(verify_f2_interval_facts());
    CHECK(verify_f3_interval_facts());
}

TEST_CASE("perturbed constants break the chains") {
    F2Constants bad2;
    bad2.t2 = bad2.t2 + QRoot5(Rational(1, 1000));
    CHECK_FALSE(f2_certificates(bad2).ok());
    CHECK_THROWS_AS(verify_f2_interval_facts(bad2), StepFailed);

    F2Constants bad1;
    bad1.t1 = bad1.t1 + QRoot5(Rational(1, 1000));
    CHECK_FALSE(f2_certificates(bad1).ok());

    F3Constants bad3;
    bad3.t = bad3.t + QRoot5(Rational(1, 1000));
    CHECK_FALSE(f3_certificates(bad3).ok());
    CHECK_THROWS_AS(verify_f3_interval_facts(bad3), StepFailed);
}

TEST_CASE("a zeroed quartic constant is caught") {
    Poly quartic = f2_critical_quintic().derivative();
    std::vector<QRoot5> coeffs = quartic.coeffs();
    coeffs[0] = q(0);
    Poly mutated(std::move(coeffs));
    // the table at 0 must refuse the vanishing value rather than mis-count
    CHECK_THROWS_AS(newton_sylvester_table(mutated, q(0)), ZeroSignAtPoint);
}

TEST_CASE("sign ledger") {
    CHECK(sign_ledger().size() >= 30);
    CHECK(verify_sign_ledger().ok());
}

TEST_CASE("mutating any quoted constant flips a ledger check") {
    std::mt19937_64 pick(2026);
    const auto& entries = sign_ledger();
    for (int trial = 0; trial < 5; ++trial) {
        LedgerEntry e = entries[pick() % entries.size()];
        switch (pick() % 4) {
            case 0: e.a += 1; break;
            case 1: e.b += 1; break;
            case 2: e.a_squared += 1; break;
            default: e.b_squared5 += 1; break;
        }
        CHECK_FALSE(check_ledger_entry(e));
    }
}

TEST_CASE("theorem volumes verify") {
    OptimizerConfig cfg = quick_cfg();
    auto v3 = verify_theorem_V(3, cfg);
    CHECK(v3.volume.verified);
    CHECK(v3.volume.exact.coeff == q(2));
    auto v4 = verify_theorem_V(4, cfg);
    CHECK(v4.volume.verified);
    CHECK(v4.volume.exact.coeff == QRoot5(Rational(16, 9)));
    auto v5 = verify_theorem_V(5, cfg);
    CHECK(v5.volume.verified);
    CHECK(v5.volume.exact.squared() == QRoot5(Rational(27, 88)) * q(9, 5));
    CHECK(v5.volume.float_value == doctest::Approx(2.48831).epsilon(1e-5));
    auto v6 = verify_theorem_V(6, cfg);
    CHECK(v6.volume.verified);
    CHECK(v6.volume.exact.coeff == q(9, 5) / q(11));
    CHECK(v6.volume.float_value == doctest::Approx(1.83458).epsilon(1e-5));
    for (const auto& tv : {v3, v4, v5, v6}) {
        CHECK(tv.max_over_cube_value >= 1.0 - 1e-4);
        CHECK(tv.max_over_cube_value <= 1.0 + 1e-6);
    }
    // witness entries agree with the recorded search optima
    CHECK(v4.matrix.diag == doctest::Approx(0.81649).epsilon(1e-4));
    CHECK(v4.matrix.blocks[0] == doctest::Approx(1.15469).epsilon(1e-4));
    CHECK(v5.matrix.diag == doctest::Approx(0.67958).epsilon(1e-4));
    CHECK(v5.matrix.blocks[0] == doctest::Approx(1.13157).epsilon(1e-4));
    CHECK(v5.matrix.blocks[1] == doctest::Approx(0.84550).epsilon(1e-4));
    CHECK(v6.matrix.diag == doctest::Approx(0.62510).epsilon(1e-4));
    CHECK(v6.matrix.blocks[0] == doctest::Approx(1.04085).epsilon(1e-4));
}

TEST_CASE("inverse systems recover the witness parameters") {
    auto r3 = solve_inverse_system(3);
    CHECK(r3.params[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r3.params[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r3.objective == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r3.residual_norm < 1e-10);

    auto r4 = solve_inverse_system(4);
    CHECK(r4.params[0] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-9));
    CHECK(r4.params[1] == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-9));
    CHECK(r4.objective == doctest::Approx(16.0 / 9.0).epsilon(1e-9));

    auto r5 = solve_inverse_system(5);
    CHECK(r5.params[0] == doctest::Approx(0.67958).epsilon(1e-4));
    CHECK(r5.params[1] == doctest::Approx(1.13157).epsilon(1e-4));
    CHECK(r5.params[2] == doctest::Approx(0.84550).epsilon(1e-4));
    CHECK(r5.objective == doctest::Approx(2.48831).epsilon(1e-5));

    auto r6 = solve_inverse_system(6);
    CHECK(r6.params[0] == doctest::Approx(0.62510).epsilon(1e-4));
    CHECK(r6.params[1] == doctest::Approx(1.04085).epsilon(1e-4));
    CHECK(r6.objective == doctest::Approx(1.83458).epsilon(1e-5));

    // basin convergence from a noisier start
    auto noisy = solve_inverse_system(6, 0.08, 99);
    CHECK(noisy.objective == doctest::Approx(1.83458).epsilon(1e-5));
}

TEST_CASE("volume composition") {
    auto v31 = general_V_bound(3);
    auto v42 = general_V_bound(4);
    auto comp = compose_volume_bound(v31, v42);
    CHECK(comp.exact.squared() == QRoot5(Rational(32, 9)) * QRoot5(Rational(32, 9)));
    auto one = ClosedFormResult{"one", ExactVolume::plain(q(1)), 1.0, true, 1.0, 0.0};
    CHECK(same_value(compose_volume_bound(v31, one).exact, v31.exact));
    auto v8 = compose_volume_bound(v42, v42);
    CHECK(v8.exact.coeff == QRoot5(Rational(256, 81)));
}

TEST_CASE("general volume bound") {
    CHECK(general_V_bound_exact(3).coeff == q(2));
    CHECK(general_V_bound_exact(7).coeff == QRoot5(Rational(32, 9)));
    CHECK(same_value(general_V_bound_exact(10),
                     ExactVolume::plain(q(9, 5) / q(11) * QRoot5(Rational(16, 9)))));
    // matches the certified values at the base cases
    OptimizerConfig cfg = quick_cfg();
    for (int n = 3; n <= 6; ++n)
        CHECK(general_V_bound_exact(n).squared() == verify_theorem_V(n, cfg).volume.exact.squared());
}

TEST_CASE("the general bound dominates every composition targeting the same body") {
    // all ways to write n as an order-insensitive sum of parts from {3,4,5,6}
    std::function<std::vector<std::vector<int>>(int, int)> decomps = [&](int n, int min_part) {
        std::vector<std::vector<int>> out;
        for (int part = min_part; part <= std::min(n, 6); ++part) {
            if (part == n) out.push_back({part});
            for (auto& tail : decomps(n - part, part)) {
                tail.insert(tail.begin(), part);
                out.push_back(tail);
            }
        }
        return out;
    };
    for (int n = 3; n <= 12; ++n) {
        QRoot5 general_sq = general_V_bound_exact(n).squared();
        for (const auto& parts : decomps(n, 3)) {
            // the product bounds the (n, sum of floor(p/2)) body; it speaks
            // about s = floor(n/2) only when the odd parts pair up exactly
            int odd = 0;
            for (int part : parts) odd += part % 2;
            if (odd != n % 2) continue;
            ExactVolume prod = ExactVolume::plain(q(1));
            for (int part : parts) prod = prod * general_V_bound_exact(part);
            CAPTURE(n);
            CHECK((general_sq - prod.squared()).sign() >= 0);
        }
    }
}
