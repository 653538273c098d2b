#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conditions.hpp"
#include "errors.hpp"
#include "proof_weights.hpp"
#include "test_util.hpp"
#include "weight_family.hpp"

#include <cmath>
#include <random>
#include <vector>

using copson::certificate;
using copson::error;
using copson::weight_family;
using copson::weight_trace;

TEST_CASE("weights collapse to one when L = 2p") {
    // The recursion factor is 1 + (L/p - 2) lambda_n/Lambda_n = 1.
    weight_family unit = weight_family::make_unit();
    weight_trace t(unit, 1.0, 0.5, 20);
    for (std::uint64_t n = 1; n <= 21; ++n)
        CHECK(t.log_w(n) == 0.0);

    weight_family pd = weight_family::make_power_diff(2.0);
    weight_trace t2(pd, 0.5, 0.25, 20);
    for (std::uint64_t n = 1; n <= 21; ++n)
        CHECK(t2.log_w(n) == 0.0);
}

TEST_CASE("unit weights at p = 1/3 telescope to w_n = n") {
    weight_family unit = weight_family::make_unit();
    weight_trace t(unit, 1.0, 1.0 / 3.0, 100);
    CHECK(t.w(1) == 1.0);
    CHECK(t.w(10) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(t.w(101) == doctest::Approx(101.0).epsilon(1e-12));
}

TEST_CASE("second weight equals L/p - 1") {
    const weight_family families[] = {
        weight_family::make_unit(),
        weight_family::make_power_diff(2.0),
        weight_family::make_power_kernel(2.0),
    };
    const std::pair<double, double> params[] = {
        {1.0, 0.25}, {0.5, 0.0625}, {1.2, 0.3}};
    for (const weight_family &fam : families) {
        for (auto [L, p] : params) {
            weight_trace t(fam, L, p, 5);
            CHECK(t.w(2) == doctest::Approx(L / p - 1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("defining identity holds to rounding") {
    weight_family unit = weight_family::make_unit();
    CHECK(copson::verify_defining_identity(weight_trace(unit, 1.0, 1.0 / 3.0,
                                                        100)) <= 1e-10);

    weight_family pd = weight_family::make_power_diff(2.0);
    CHECK(copson::verify_defining_identity(weight_trace(pd, 0.5, 0.0625,
                                                        1000)) <= 1e-9);

    weight_family pk = weight_family::make_power_kernel(2.0);
    CHECK(copson::verify_defining_identity(weight_trace(pk, 0.5, 0.0625,
                                                        1000)) <= 1e-9);
}

TEST_CASE("normalized margins match the pointwise condition margins") {
    struct case_t {
        weight_family fam;
        double L, p;
        std::uint64_t N;
    };
    const case_t cases[] = {
        {weight_family::make_unit(), 1.0, 1.0 / 3.0, 200},
        {weight_family::make_unit(), 1.0, 0.9, 10},
        {weight_family::make_power_diff(2.0), 0.5, 0.0625, 200},
        {weight_family::make_power_kernel(2.0), 0.5, 0.0625, 200},
    };
    for (const case_t &c : cases) {
        weight_trace t(c.fam, c.L, c.p, c.N);
        std::vector<double> margins = copson::weighted_margins(t);
        REQUIRE(margins.size() == c.N);
        for (std::uint64_t n = 1; n <= c.N; ++n) {
            const double direct = copson::cond16_margin(c.fam, c.L, c.p, n);
            CHECK(std::abs(margins[n - 1] - direct) <= 1e-9);
        }
    }
}

TEST_CASE("weighted certificate agrees with the pointwise certificate") {
    struct case_t {
        weight_family fam;
        double L, p;
        std::uint64_t N;
        bool check_argmin;
    };
    const case_t cases[] = {
        // At p = 1/3 the tail margins sit at rounding level, so argmin is
        // noise there; verdicts still must agree.
        {weight_family::make_unit(), 1.0, 1.0 / 3.0, 10000, false},
        {weight_family::make_unit(), 1.0, 0.9, 10, true},
        {weight_family::make_power_diff(2.0), 0.5, 0.0625, 1000, true},
    };
    for (const case_t &c : cases) {
        weight_trace t(c.fam, c.L, c.p, c.N);
        certificate weighted = copson::verify_weighted_condition(t);
        certificate pointwise = copson::check_cond_16(c.fam, c.L, c.p, c.N);
        CHECK(weighted.id == copson::condition_id::cond_2_1);
        CHECK(weighted.passed == pointwise.passed);
        if (c.check_argmin)
            CHECK(weighted.argmin_n == pointwise.argmin_n);
        CHECK(std::abs(weighted.min_margin - pointwise.min_margin) <= 1e-9);
    }
}

TEST_CASE("verdict equivalence on randomized instances") {
    // Smaller version of the acceptance sweep: identical verdict + argmin
    // across random families and parameters.
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 12; ++trial) {
        weight_family fam = (trial % 3 == 0)
                                ? weight_family::make_unit()
                                : (trial % 3 == 1)
                                      ? weight_family::make_power_diff(
                                            testutil::uniform(rng, 1.5, 3.0))
                                      : weight_family::make_power_kernel(
                                            testutil::uniform(rng, 1.5, 3.0));
        const double L = testutil::uniform(rng, 0.4, 1.6);
        const double p = testutil::uniform(rng, 0.05, 0.9) * std::min(L, 1.0);
        if (!(p > 0.0 && p < 1.0 && L > p))
            continue;
        const std::uint64_t N =
            10 + static_cast<std::uint64_t>(testutil::uniform(rng, 0, 990));
        weight_trace t(fam, L, p, N);
        certificate weighted = copson::verify_weighted_condition(t);
        certificate pointwise = copson::check_cond_16(fam, L, p, N);
        CHECK(weighted.passed == pointwise.passed);
        CHECK(weighted.argmin_n == pointwise.argmin_n);
    }
}

TEST_CASE("accessors and bounds") {
    weight_family unit = weight_family::make_unit();
    weight_trace t(unit, 1.0, 0.25, 10);
    CHECK(t.L() == 1.0);
    CHECK(t.p() == 0.25);
    CHECK(t.horizon() == 10);
    CHECK(t.log_w(1) == 0.0);
    CHECK_NOTHROW(t.log_w(11));
    CHECK_THROWS_AS(t.log_w(0), error);
    CHECK_THROWS_AS(t.log_w(12), error);
}

TEST_CASE("constructor guards") {
    weight_family unit = weight_family::make_unit();
    CHECK_THROWS_AS(weight_trace(unit, 0.3, 0.5, 10), error);  // L <= p
    CHECK_THROWS_AS(weight_trace(unit, 1.0, 1.2, 10), error);  // p outside
    CHECK_THROWS_AS(weight_trace(unit, 1.0, 0.25, 0), error);  // empty
    // Custom families must cover the horizon plus one.
    weight_family tiny = weight_family::make_custom({1.0, 1.0});
    CHECK_NOTHROW(weight_trace(tiny, 1.0, 0.25, 1));
}
