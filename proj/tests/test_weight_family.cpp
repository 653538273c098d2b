#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "weight_family.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using copson::error;
using copson::family_kind;
using copson::status;
using copson::weight_family;

TEST_CASE("unit family closed forms") {
    weight_family f = weight_family::make_unit();
    CHECK(f.kind() == family_kind::unit);
    CHECK(f.lambda(1) == 1.0);
    CHECK(f.lambda(123456) == 1.0);
    CHECK(f.Lambda(1) == 1.0);
    CHECK(f.Lambda(10) == 10.0);
    CHECK(f.Lambda(100000) == 100000.0);
    // Lambda_{n+1}/lambda_{n+1} - Lambda_n/lambda_n = (n+1) - n = 1.
    CHECK(f.l_gap(1) == 1.0);
    CHECK(f.l_gap(999) == 1.0);

    copson::sup_gap_result sup = f.sup_l_gap(100);
    CHECK(sup.sup == 1.0);
    CHECK(sup.monotone);
    CHECK(sup.argmax == 1);
    CHECK(f.describe() == "unit");
}

TEST_CASE("power difference family closed forms") {
    weight_family f = weight_family::make_power_diff(2.0);
    CHECK(f.kind() == family_kind::power_diff);
    CHECK(f.alpha() == 2.0);
    // lambda_n = n^2 - (n-1)^2 = 2n - 1 (exact integers in double).
    CHECK(f.lambda(1) == 1.0);
    CHECK(f.lambda(5) == 9.0);
    CHECK(f.lambda(1000) == 1999.0);
    CHECK(f.Lambda(10) == 100.0);
    CHECK(f.Lambda(1000) == 1000000.0);
    // l_gap(n) = (2n^2 - 1)/(4n^2 - 1), increasing toward 1/2.
    CHECK(f.l_gap(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(f.l_gap(2) == doctest::Approx(7.0 / 15.0).epsilon(1e-15));
    CHECK(f.l_gap(3) == doctest::Approx(17.0 / 35.0).epsilon(1e-15));
}

TEST_CASE("power difference sup gap approaches one half") {
    // Oracle (direct float evaluation, N = 10^6): sup = 0.5 exactly in
    // double (rounding noise reaches the limit), non-monotone scan.
    weight_family f = weight_family::make_power_diff(2.0);
    copson::sup_gap_result sup = f.sup_l_gap(1000000);
    CHECK(sup.sup == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sup.sup <= 0.5 + 1e-12);
    CHECK_FALSE(sup.monotone);
}

TEST_CASE("power kernel family") {
    weight_family f = weight_family::make_power_kernel(3.0);
    CHECK(f.kind() == family_kind::power_kernel);
    // lambda_n = n^(alpha-1) = n^2; Lambda_n = sum of squares.
    CHECK(f.lambda(4) == 16.0);
    CHECK(f.Lambda(1) == 1.0);
    CHECK(f.Lambda(4) == 30.0);
    CHECK(f.Lambda(10) == 385.0);
    // l_gap(1) = 5/4 - 1 = 1/4 exactly.
    CHECK(f.l_gap(1) == 0.25);

    // Oracle: l_gap increases toward 1/alpha = 1/3; float noise can
    // overshoot the limit by ~1e-10 at most (N = 10^6 run overshot by
    // 3.9e-11).
    copson::sup_gap_result sup = f.sup_l_gap(100000);
    CHECK(sup.sup == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK(sup.sup <= 1.0 / 3.0 + 1e-9);
}

TEST_CASE("custom family") {
    weight_family f = weight_family::make_custom({1.0, 2.0, 3.0});
    CHECK(f.kind() == family_kind::custom);
    CHECK(f.max_index() == 3);
    CHECK(f.lambda(2) == 2.0);
    CHECK(f.Lambda(3) == 6.0);
    // l_gap(1) = 3/2 - 1, l_gap(2) = 2 - 3/2.
    CHECK(f.l_gap(1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f.l_gap(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(f.lambda(4), error);
    CHECK_THROWS_AS(f.Lambda(0), error);

    CHECK_THROWS_AS(weight_family::make_custom({}), error);
    CHECK_THROWS_AS(weight_family::make_custom({1.0, -1.0}), error);
    CHECK_THROWS_AS(weight_family::make_custom({1.0, 0.0}), error);
}

TEST_CASE("spec string parsing") {
    CHECK(weight_family::parse("unit").kind() == family_kind::unit);
    weight_family pd = weight_family::parse("powerdiff:2");
    CHECK(pd.kind() == family_kind::power_diff);
    CHECK(pd.alpha() == 2.0);
    CHECK(pd.describe() == "powerdiff:2");
    weight_family pk = weight_family::parse("powerkernel:1.5");
    CHECK(pk.kind() == family_kind::power_kernel);
    CHECK(pk.alpha() == 1.5);

    CHECK_THROWS_AS(weight_family::parse("bogus"), error);
    CHECK_THROWS_AS(weight_family::parse("powerdiff:zz"), error);
    CHECK_THROWS_AS(weight_family::parse(""), error);
    try {
        weight_family::parse("bogus");
        FAIL("expected error");
    } catch (const error &e) {
        CHECK(e.code() == status::invalid_argument);
    }

    // alpha >= 1 is required for both power families.
    CHECK_THROWS_AS(weight_family::make_power_diff(0.5), error);
    CHECK_THROWS_AS(weight_family::make_power_kernel(0.99), error);
}

TEST_CASE("custom family from file") {
    const std::string path = "test_weight_family_custom.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "1.5\n"
            << "\n"
            << "2.5\n"
            << "0.25\n";
    }
    weight_family f = weight_family::parse("custom:" + path);
    CHECK(f.max_index() == 3);
    CHECK(f.lambda(1) == 1.5);
    CHECK(f.lambda(3) == 0.25);
    CHECK(f.Lambda(3) == doctest::Approx(4.25).epsilon(1e-15));
    std::remove(path.c_str());

    CHECK_THROWS_AS(weight_family::parse("custom:/nonexistent/file.txt"),
                    error);
}

TEST_CASE("Lambda increments equal lambda") {
    const weight_family families[] = {
        weight_family::make_unit(),
        weight_family::make_power_diff(2.0),
        weight_family::make_power_diff(3.5),
        weight_family::make_power_kernel(2.0),
        weight_family::make_power_kernel(4.0),
    };
    for (const weight_family &f : families) {
        for (std::uint64_t n : {1, 2, 7, 50, 999}) {
            const double inc = f.Lambda(n + 1) - f.Lambda(n);
            CHECK(inc == doctest::Approx(f.lambda(n + 1)).epsilon(1e-10));
        }
    }
}

TEST_CASE("read_positive_values validation") {
    const std::string path = "test_weight_family_values.txt";
    {
        std::ofstream out(path);
        out << "1.0\n-2.0\n";
    }
    CHECK_THROWS_AS(copson::read_positive_values(path), error);
    std::remove(path.c_str());
}
