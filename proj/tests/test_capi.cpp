// Black-box tests for the shared-library C API: only the public header is
// included, and every interaction goes through the documented entry points.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <copson.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct family_guard {
    copson_family *f = nullptr;
    explicit family_guard(const char *spec) {
        REQUIRE(copson_family_create(spec, &f) == COPSON_OK);
        REQUIRE(f != nullptr);
    }
    ~family_guard() { copson_family_destroy(f); }
    family_guard(const family_guard &) = delete;
    family_guard &operator=(const family_guard &) = delete;
};

} // namespace

TEST_CASE("version and error strings are always available") {
    const char *v = copson_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
    REQUIRE(copson_last_error() != nullptr);
}

TEST_CASE("family lifecycle and accessors") {
    family_guard unit("unit");
    double out = 0.0;
    CHECK(copson_lambda(unit.f, 7, &out) == COPSON_OK);
    CHECK(out == 1.0);
    CHECK(copson_Lambda(unit.f, 7, &out) == COPSON_OK);
    CHECK(out == 7.0);
    CHECK(copson_l_gap(unit.f, 3, &out) == COPSON_OK);
    CHECK(out == 1.0);

    family_guard pd("powerdiff:2");
    CHECK(copson_lambda(pd.f, 5, &out) == COPSON_OK);
    CHECK(out == 9.0);
    CHECK(copson_Lambda(pd.f, 10, &out) == COPSON_OK);
    CHECK(out == 100.0);

    double sup = 0.0;
    int monotone = -1;
    uint64_t argmax = 0;
    CHECK(copson_sup_l_gap(pd.f, 100000, &sup, &monotone, &argmax) ==
          COPSON_OK);
    CHECK(std::abs(sup - 0.5) < 1e-9);
    CHECK(argmax >= 1);

    // Destroying a NULL family is a harmless no-op.
    copson_family_destroy(nullptr);
}

TEST_CASE("malformed specs report invalid-argument with a message") {
    copson_family *f = nullptr;
    CHECK(copson_family_create("bogus", &f) == COPSON_ERR_INVALID_ARGUMENT);
    CHECK(f == nullptr);
    CHECK(std::strlen(copson_last_error()) > 0);

    // Unparseable alpha is a parse error; parseable but out-of-domain
    // alpha is a domain error.
    CHECK(copson_family_create("powerdiff:zz", &f) == COPSON_ERR_PARSE);
    CHECK(copson_family_create("powerdiff:0.5", &f) == COPSON_ERR_DOMAIN);
    CHECK(copson_family_create("", &f) == COPSON_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null pointers are rejected uniformly") {
    double out = 0.0;
    copson_family *f = nullptr;
    CHECK(copson_family_create(nullptr, &f) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_family_create("unit", nullptr) == COPSON_ERR_NULL_POINTER);

    family_guard unit("unit");
    CHECK(copson_lambda(nullptr, 1, &out) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_lambda(unit.f, 1, nullptr) == COPSON_ERR_NULL_POINTER);
    const double x[2] = {1.0, 1.0};
    CHECK(copson_lhs(nullptr, x, 2, 0.5, &out) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_lhs(unit.f, nullptr, 2, 0.5, &out) ==
          COPSON_ERR_NULL_POINTER);
    CHECK(copson_lhs(unit.f, x, 2, 0.5, nullptr) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_check_cond_16(unit.f, 1.0, 0.25, 10, 1e-9, nullptr) ==
          COPSON_ERR_NULL_POINTER);
}

TEST_CASE("custom families enforce their index range") {
    const double vals[3] = {1.0, 2.0, 3.0};
    copson_family *f = nullptr;
    REQUIRE(copson_family_create_custom(vals, 3, &f) == COPSON_OK);
    double out = 0.0;
    CHECK(copson_lambda(f, 3, &out) == COPSON_OK);
    CHECK(out == 3.0);
    CHECK(copson_Lambda(f, 3, &out) == COPSON_OK);
    CHECK(out == 6.0);
    CHECK(copson_lambda(f, 4, &out) == COPSON_ERR_INDEX);
    CHECK(copson_lambda(f, 0, &out) == COPSON_ERR_INDEX);
    copson_family_destroy(f);

    const double bad[2] = {1.0, -1.0};
    CHECK(copson_family_create_custom(bad, 2, &f) == COPSON_ERR_DOMAIN);
    CHECK(copson_family_create_custom(vals, 0, &f) ==
          COPSON_ERR_INVALID_ARGUMENT);
}

TEST_CASE("evaluation anchors through the C surface") {
    family_guard unit("unit");
    double out = 0.0;

    const double ones[2] = {1.0, 1.0};
    CHECK(copson_lhs(unit.f, ones, 2, 0.5, &out) == COPSON_OK);
    CHECK(out == doctest::Approx(2.1213203435596424).epsilon(1e-14));

    const double skew[2] = {14.0, 1.0};
    CHECK(copson_ratio(unit.f, skew, 2, 0.5, &out) == COPSON_OK);
    CHECK(out == doctest::Approx(0.9659259946046206).epsilon(1e-12));
    CHECK(copson_verify_margin(unit.f, skew, 2, 0.5, 1.0, &out) == COPSON_OK);
    CHECK(out == doctest::Approx(-0.034074005395379414).epsilon(1e-12));

    double lhs = 0.0, rhs = 0.0;
    CHECK(copson_dual(unit.f, ones, 2, 0.5, 1.0, &lhs, &rhs) == COPSON_OK);
    CHECK(lhs == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(rhs == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lhs <= rhs);
}

TEST_CASE("domain violations map to the domain status") {
    family_guard unit("unit");
    double out = 0.0;
    const double x[2] = {1.0, 1.0};
    CHECK(copson_verify_margin(unit.f, x, 2, 0.5, 0.5, &out) ==
          COPSON_ERR_DOMAIN);
    CHECK(copson_lhs(unit.f, x, 2, 1.5, &out) == COPSON_ERR_DOMAIN);
    CHECK(copson_lhs(unit.f, x, 2, 0.0, &out) == COPSON_ERR_DOMAIN);
    const double zero_entry[2] = {1.0, 0.0};
    CHECK(copson_dual(unit.f, zero_entry, 2, 0.5, 1.0, &out, &out) ==
          COPSON_ERR_DOMAIN);
}

TEST_CASE("per-n condition certificate fields") {
    family_guard unit("unit");
    copson_certificate cert;
    REQUIRE(copson_check_cond_16(unit.f, 1.0, 0.9, 10, 1e-9, &cert) ==
            COPSON_OK);
    CHECK(cert.condition_id == COPSON_COND_1_6);
    CHECK(cert.horizon == 10);
    CHECK(cert.passed == 0);
    CHECK(cert.argmin_n == 1);
    CHECK(cert.min_margin ==
          doctest::Approx(-0.11306423582431388).epsilon(1e-12));
    CHECK(cert.p == 0.9);
    CHECK(cert.L == 1.0);
    CHECK(std::isnan(cert.M));
    CHECK(cert.tol == 1e-9);

    REQUIRE(copson_check_cond_17(unit.f, 1.0, 100, 1e-9, &cert) == COPSON_OK);
    CHECK(cert.condition_id == COPSON_COND_1_7);
    CHECK(cert.passed == 1);
    CHECK(cert.min_margin == 0.0);
}

TEST_CASE("exact rational gate values") {
    char *s = nullptr;
    REQUIRE(copson_a1_exact("1", "1/3", &s) == COPSON_OK);
    REQUIRE(s != nullptr);
    CHECK(std::string(s) == "2");
    copson_string_free(s);

    s = nullptr;
    REQUIRE(copson_a2_exact("1/2", "1/16", &s) == COPSON_OK);
    REQUIRE(s != nullptr);
    CHECK(std::string(s) == "1077/1024");
    copson_string_free(s);

    s = nullptr;
    CHECK(copson_a1_exact("1/0", "1/3", &s) == COPSON_ERR_PARSE);
    CHECK(copson_a1_exact("abc", "1/3", &s) == COPSON_ERR_PARSE);
    CHECK(std::strlen(copson_last_error()) > 0);

    int branch = -1;
    REQUIRE(copson_theorem1_applicable_exact("1", "1/3", &branch) ==
            COPSON_OK);
    CHECK(branch == 1);
    REQUIRE(copson_theorem1_applicable_exact("1/2", "1/16", &branch) ==
            COPSON_OK);
    CHECK(branch == 2);
    REQUIRE(copson_theorem1_applicable_exact("1", "9/10", &branch) ==
            COPSON_OK);
    CHECK(branch == 0);
}

TEST_CASE("float gate polynomials and thresholds") {
    double out = 0.0;
    CHECK(copson_a2(0.5, 0.0625, &out) == COPSON_OK);
    CHECK(out == 1.0517578125);
    CHECK(copson_a1(1.0, 1.5, &out) == COPSON_ERR_DOMAIN);

    double p_L = 0.0, p_116 = 0.0;
    CHECK(copson_thresholds(0.8, 0.05, 1, &p_L, &p_116) == COPSON_OK);
    CHECK(p_L == doctest::Approx(0.16).epsilon(1e-15));
    CHECK(p_116 == doctest::Approx(4.0 / 55.0).epsilon(1e-12));
    CHECK(copson_thresholds(0.3, 0.0, 0, &p_L, nullptr) == COPSON_OK);
    CHECK(p_L == doctest::Approx(0.0225).epsilon(1e-15));
    CHECK(copson_thresholds(1.2, 0.0, 0, &p_L, nullptr) ==
          COPSON_ERR_DOMAIN);

    int branch = -1;
    double a1v = 0.0, a2v = 0.0;
    CHECK(copson_theorem1_applicable(1.0, 1.0 / 3.0, &branch, &a1v, &a2v) ==
          COPSON_OK);
    CHECK(branch == 1);
    CHECK(a1v == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("auxiliary function evaluation and scans") {
    double out = 0.0;
    REQUIRE(copson_aux_eval(COPSON_AUX_U_LP, 1.0, 0.0, 0.25, 0.5, &out) ==
            COPSON_OK);
    CHECK(out == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(copson_aux_eval(42, 1.0, 0.0, 0.25, 0.5, &out) ==
          COPSON_ERR_INVALID_ARGUMENT);
    CHECK(copson_aux_eval(COPSON_AUX_U_LP, 1.0, 0.0, 0.25, 1.5, &out) ==
          COPSON_ERR_DOMAIN);

    copson_sign_report report;
    REQUIRE(copson_aux_sign_scan(COPSON_AUX_G_LP, 1.0, 0.0, 0.25, 10000,
                                 &report) == COPSON_OK);
    CHECK(report.fn == COPSON_AUX_G_LP);
    CHECK(report.grid == 10000);
    CHECK(report.min_value ==
          doctest::Approx(3.0008000666669634).epsilon(1e-10));
    CHECK(report.argmin_x == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(report.threshold == 0.0);
    CHECK(report.L == 1.0);
    CHECK(report.M == 0.0);
    CHECK(report.p == 0.25);
    CHECK(report.min_value >= report.threshold);

    int certified = -1;
    REQUIRE(copson_aux_certified_regime(COPSON_AUX_G_LP, 1.0, 0.0, 0.25,
                                        &certified) == COPSON_OK);
    CHECK(certified == 1);
    REQUIRE(copson_aux_certified_regime(COPSON_AUX_G_LP, 1.0, 0.0, 0.9,
                                        &certified) == COPSON_OK);
    CHECK(certified == 0);
}

TEST_CASE("proof weights through the C surface") {
    family_guard unit("unit");
    copson_weights *w = nullptr;
    REQUIRE(copson_weights_build(unit.f, 1.0, 1.0 / 3.0, 50, &w) ==
            COPSON_OK);
    REQUIRE(w != nullptr);

    double lw = 0.0;
    CHECK(copson_weights_log_w(w, 1, &lw) == COPSON_OK);
    CHECK(lw == 0.0);
    CHECK(copson_weights_log_w(w, 10, &lw) == COPSON_OK);
    CHECK(lw == doctest::Approx(std::log(10.0)).epsilon(1e-12));
    CHECK(copson_weights_log_w(w, 52, &lw) == COPSON_ERR_INDEX);

    double residual = -1.0;
    CHECK(copson_weights_residual(w, &residual) == COPSON_OK);
    CHECK(residual >= 0.0);
    CHECK(residual <= 1e-10);

    // Size query: NULL buffer is allowed when count is 0.
    size_t length = 0;
    REQUIRE(copson_weights_margins(w, nullptr, 0, &length) == COPSON_OK);
    CHECK(length == 50);

    std::vector<double> margins(length, -1.0);
    length = 0;
    REQUIRE(copson_weights_margins(w, margins.data(), margins.size(),
                                   &length) == COPSON_OK);
    CHECK(length == 50);
    CHECK(std::abs(margins[0] - 0.12132034355964194) <= 1e-9);

    copson_certificate cert;
    REQUIRE(copson_weights_verify(w, 1e-9, &cert) == COPSON_OK);
    CHECK(cert.condition_id == COPSON_COND_2_1);
    CHECK(cert.passed == 1);
    CHECK(cert.horizon == 50);

    copson_weights_destroy(w);
    copson_weights_destroy(nullptr);
}

TEST_CASE("theorem certificates through the C surface") {
    copson_certificate cert;
    REQUIRE(copson_certify_thm1_poly(1.0, 1.0 / 3.0, &cert) == COPSON_OK);
    CHECK(cert.condition_id == COPSON_THM1_POLY);
    CHECK(cert.passed == 1);

    family_guard pd("powerdiff:2");
    REQUIRE(copson_certify_thm1prime(pd.f, 0.5, 0.0625, 1000, 1e-9, &cert) ==
            COPSON_OK);
    CHECK(cert.condition_id == COPSON_THM1PRIME);
    CHECK(cert.passed == 1);
    CHECK(copson_certify_thm1prime(pd.f, 1.0, 0.0625, 1000, 1e-9, &cert) ==
          COPSON_ERR_DOMAIN);

    REQUIRE(copson_certify_thm1prime_M(pd.f, 0.8, 0.05, 0.07, 1000, 1e-9,
                                       &cert) == COPSON_OK);
    CHECK(cert.passed == 1);
    CHECK(cert.M == 0.05);
}

TEST_CASE("optimizer defaults and deterministic minimize") {
    copson_opt_config cfg;
    copson_opt_config_default(&cfg);
    CHECK(cfg.N == 2000);
    CHECK(cfg.max_iters == 20000);
    CHECK(cfg.step_rule == COPSON_STEP_BACKTRACKING);
    CHECK(cfg.init == COPSON_INIT_EXTREMAL);
    CHECK(cfg.eps_init == 0.1);
    CHECK(cfg.step0 == 1.0);
    CHECK(cfg.tol_stationarity == 1e-9);
    CHECK(cfg.seed == 0);

    family_guard unit("unit");
    cfg.N = 40;
    cfg.max_iters = 2000;

    copson_estimate *a = nullptr;
    REQUIRE(copson_minimize(unit.f, 0.25, &cfg, &a) == COPSON_OK);
    REQUIRE(a != nullptr);
    double va = 0.0;
    REQUIRE(copson_estimate_value(a, &va) == COPSON_OK);
    CHECK(va > 0.0);
    CHECK(va < 1.0);
    CHECK(va >= std::pow(0.25, 0.25) - 1e-6);

    uint64_t iters = 0;
    CHECK(copson_estimate_iterations(a, &iters) == COPSON_OK);
    double residual = -1.0;
    CHECK(copson_estimate_residual(a, &residual) == COPSON_OK);
    CHECK(residual >= 0.0);
    int converged = -1;
    CHECK(copson_estimate_converged(a, &converged) == COPSON_OK);
    CHECK((converged == 0 || converged == 1));

    // Size query first (NULL buffer, zero count), then the data call; a
    // NULL buffer with nonzero count stays an error.
    size_t length = 0;
    REQUIRE(copson_estimate_sequence(a, nullptr, 0, &length) == COPSON_OK);
    CHECK(length == 40);
    CHECK(copson_estimate_sequence(a, nullptr, 5, &length) ==
          COPSON_ERR_NULL_POINTER);
    std::vector<double> seq_a(length, 0.0);
    REQUIRE(copson_estimate_sequence(a, seq_a.data(), seq_a.size(),
                                     &length) == COPSON_OK);
    CHECK(length == 40);
    double power_sum = 0.0;
    for (double x : seq_a) {
        CHECK(x > 0.0);
        power_sum += std::pow(x, 0.25);
    }
    CHECK(power_sum == doctest::Approx(1.0).epsilon(1e-10));

    std::vector<double> trace(iters + 1, 0.0);
    size_t trace_len = 0;
    REQUIRE(copson_estimate_trace(a, trace.data(), trace.size(),
                                  &trace_len) == COPSON_OK);
    CHECK(trace_len == iters + 1);

    copson_estimate *b = nullptr;
    REQUIRE(copson_minimize(unit.f, 0.25, &cfg, &b) == COPSON_OK);
    double vb = 0.0;
    REQUIRE(copson_estimate_value(b, &vb) == COPSON_OK);
    CHECK(va == vb);
    std::vector<double> seq_b(40, 0.0);
    REQUIRE(copson_estimate_sequence(b, seq_b.data(), seq_b.size(),
                                     nullptr) == COPSON_OK);
    CHECK(std::memcmp(seq_a.data(), seq_b.data(), 40 * sizeof(double)) == 0);

    copson_estimate_destroy(a);
    copson_estimate_destroy(b);
    copson_estimate_destroy(nullptr);
}

TEST_CASE("estimate accessors reject null handles") {
    double out = 0.0;
    uint64_t u = 0;
    int i = 0;
    CHECK(copson_estimate_value(nullptr, &out) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_estimate_iterations(nullptr, &u) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_estimate_residual(nullptr, &out) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_estimate_converged(nullptr, &i) == COPSON_ERR_NULL_POINTER);
    CHECK(copson_estimate_sequence(nullptr, &out, 1, nullptr) ==
          COPSON_ERR_NULL_POINTER);
}

TEST_CASE("brute force, probe, stationarity, and gradient via C") {
    family_guard unit("unit");
    double out = 0.0;
    REQUIRE(copson_brute_force(unit.f, 0.5, 2, 4000, &out) == COPSON_OK);
    CHECK(std::abs(out - 0.9659258) < 1e-6);
    CHECK(copson_brute_force(unit.f, 0.5, 4, 100, &out) ==
          COPSON_ERR_INVALID_ARGUMENT);

    REQUIRE(copson_extremal_probe(unit.f, 0.25, 1e-3, 100000, &out) ==
            COPSON_OK);
    CHECK(out == doctest::Approx(0.7892325292580167).epsilon(1e-9));

    const double x[2] = {0.789 * 0.789, 0.211 * 0.211};
    REQUIRE(copson_stationarity(unit.f, x, 2, 0.5, &out) == COPSON_OK);
    CHECK(out <= 1e-3);

    const double y[5] = {1.0, 0.7, 0.5, 0.3, 0.2};
    double grad[5] = {0, 0, 0, 0, 0};
    REQUIRE(copson_ratio_gradient(unit.f, y, 5, 0.5, grad) == COPSON_OK);
    double sum = 0.0;
    for (double g : grad)
        sum += g;
    CHECK(std::abs(sum) <= 1e-12);
}
