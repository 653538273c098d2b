// capi.cpp - the extern "C" boundary. Exceptions from the core stop here;
// every entry point returns a copson_status and records the message of the
// most recent failure thread-locally.
#include "copson.h"

#include "aux_functions.hpp"
#include "conditions.hpp"
#include "errors.hpp"
#include "exact_rational.hpp"
#include "proof_weights.hpp"
#include "ratio_optimizer.hpp"
#include "sequence_eval.hpp"
#include "weight_family.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

struct copson_family {
    copson::weight_family impl;
};

struct copson_weights {
    copson::weight_trace impl;
};

struct copson_estimate {
    copson::ratio_estimate impl;
};

namespace {

thread_local std::string t_last_error;

copson_status record(copson::status code, const std::string &message) {
    t_last_error = message;
    return static_cast<copson_status>(code);
}

copson_status null_arg() {
    return record(copson::status::null_pointer,
                  "required pointer argument was NULL");
}

// Runs the body and funnels every failure into a status code.
template <typename Fn> copson_status guarded(Fn &&body) {
    try {
        body();
        return COPSON_OK;
    } catch (const copson::error &e) {
        return record(e.code(), e.what());
    } catch (const std::bad_alloc &) {
        return record(copson::status::internal, "allocation failed");
    } catch (const std::exception &e) {
        return record(copson::status::internal, e.what());
    }
}

void to_c(const copson::certificate &in, copson_certificate *out) {
    out->condition_id = static_cast<int>(in.id);
    out->horizon = in.horizon;
    out->passed = in.passed ? 1 : 0;
    out->min_margin = in.min_margin;
    out->argmin_n = in.argmin_n;
    out->p = in.p;
    out->L = in.L;
    out->M = in.has_M ? in.M : std::numeric_limits<double>::quiet_NaN();
    out->tol = in.tol;
}

std::vector<double> to_vector(const double *x, size_t count) {
    copson::require(count > 0, copson::status::invalid_argument,
                    "sequence length must be >= 1");
    return std::vector<double>(x, x + count);
}

copson::aux_fn to_aux_fn(int fn) {
    copson::require(fn >= 0 && fn <= static_cast<int>(copson::aux_fn::ineq_3_1),
                    copson::status::invalid_argument,
                    "unknown auxiliary function id");
    return static_cast<copson::aux_fn>(fn);
}

copson::rational parse_rational_arg(const char *text, const char *what) {
    auto parsed = copson::parse_rational(text);
    copson::require(parsed.has_value(), copson::status::parse,
                    std::string("cannot parse ") + what +
                        " as a rational: '" + text + "'");
    return *parsed;
}

char *dup_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char *copson_last_error(void) { return t_last_error.c_str(); }

const char *copson_version(void) { return "1.0.0"; }

/* ---------------- weight families ---------------- */

copson_status copson_family_create(const char *spec, copson_family **out) {
    if (!spec || !out)
        return null_arg();
    return guarded([&] {
        *out = new copson_family{copson::weight_family::parse(spec)};
    });
}

copson_status copson_family_create_custom(const double *values, size_t count,
                                          copson_family **out) {
    if (!values || !out)
        return null_arg();
    return guarded([&] {
        *out = new copson_family{
            copson::weight_family::make_custom(to_vector(values, count))};
    });
}

void copson_family_destroy(copson_family *family) { delete family; }

copson_status copson_lambda(const copson_family *family, uint64_t n,
                            double *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] { *out = family->impl.lambda(n); });
}

copson_status copson_Lambda(const copson_family *family, uint64_t n,
                            double *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] { *out = family->impl.Lambda(n); });
}

copson_status copson_l_gap(const copson_family *family, uint64_t n,
                           double *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] { *out = family->impl.l_gap(n); });
}

copson_status copson_sup_l_gap(const copson_family *family, uint64_t N,
                               double *sup, int *monotone, uint64_t *argmax) {
    if (!family || !sup)
        return null_arg();
    return guarded([&] {
        const copson::sup_gap_result r = family->impl.sup_l_gap(N);
        *sup = r.sup;
        if (monotone)
            *monotone = r.monotone ? 1 : 0;
        if (argmax)
            *argmax = r.argmax;
    });
}

/* ---------------- inequality evaluation ---------------- */

copson_status copson_lhs(const copson_family *family, const double *x,
                         size_t count, double p, double *out) {
    if (!family || !x || !out)
        return null_arg();
    return guarded([&] {
        *out = copson::copson_lhs(
            family->impl, copson::truncated_sequence(to_vector(x, count)), p);
    });
}

copson_status copson_ratio(const copson_family *family, const double *x,
                           size_t count, double p, double *out) {
    if (!family || !x || !out)
        return null_arg();
    return guarded([&] {
        *out = copson::ratio_functional(
            family->impl, copson::truncated_sequence(to_vector(x, count)), p);
    });
}

copson_status copson_verify_margin(const copson_family *family,
                                   const double *x, size_t count, double p,
                                   double L, double *out) {
    if (!family || !x || !out)
        return null_arg();
    return guarded([&] {
        *out = copson::verify_margin(
            family->impl, copson::truncated_sequence(to_vector(x, count)), p,
            L);
    });
}

copson_status copson_dual(const copson_family *family, const double *x,
                          size_t count, double p, double L, double *lhs,
                          double *rhs) {
    if (!family || !x || !lhs || !rhs)
        return null_arg();
    return guarded([&] {
        const copson::dual_sides sides = copson::dual_evaluate(
            family->impl, copson::truncated_sequence(to_vector(x, count)), p,
            L);
        *lhs = sides.lhs;
        *rhs = sides.rhs;
    });
}

/* ---------------- condition certificates ---------------- */

copson_status copson_check_cond_16(const copson_family *family, double L,
                                   double p, uint64_t N, double tol,
                                   copson_certificate *out) {
    if (!family || !out)
        return null_arg();
    return guarded(
        [&] { to_c(copson::check_cond_16(family->impl, L, p, N, tol), out); });
}

copson_status copson_check_cond_17(const copson_family *family, double L,
                                   uint64_t N, double tol,
                                   copson_certificate *out) {
    if (!family || !out)
        return null_arg();
    return guarded(
        [&] { to_c(copson::check_cond_17(family->impl, L, N, tol), out); });
}

copson_status copson_check_cond_115(const copson_family *family, double L,
                                    double M, uint64_t N, double tol,
                                    copson_certificate *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] {
        to_c(copson::check_cond_115(family->impl, L, M, N, tol), out);
    });
}

copson_status copson_certify_thm1_poly(double L, double p,
                                       copson_certificate *out) {
    if (!out)
        return null_arg();
    return guarded([&] { to_c(copson::certify_thm1_poly(L, p), out); });
}

copson_status copson_certify_thm1prime(const copson_family *family, double L,
                                       double p, uint64_t N, double tol,
                                       copson_certificate *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] {
        to_c(copson::certify_thm1prime(family->impl, L, p, N, tol), out);
    });
}

copson_status copson_certify_thm1prime_M(const copson_family *family, double L,
                                         double M, double p, uint64_t N,
                                         double tol, copson_certificate *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] {
        to_c(copson::certify_thm1prime_M(family->impl, L, M, p, N, tol), out);
    });
}

copson_status copson_a1(double L, double p, double *out) {
    if (!out)
        return null_arg();
    return guarded([&] { *out = copson::a1(L, p); });
}

copson_status copson_a2(double L, double p, double *out) {
    if (!out)
        return null_arg();
    return guarded([&] { *out = copson::a2(L, p); });
}

copson_status copson_a1_exact(const char *L, const char *p, char **out) {
    if (!L || !p || !out)
        return null_arg();
    return guarded([&] {
        const copson::rational value = copson::a1_exact(
            parse_rational_arg(L, "L"), parse_rational_arg(p, "p"));
        *out = dup_string(copson::rational_to_string(value));
    });
}

copson_status copson_a2_exact(const char *L, const char *p, char **out) {
    if (!L || !p || !out)
        return null_arg();
    return guarded([&] {
        const copson::rational value = copson::a2_exact(
            parse_rational_arg(L, "L"), parse_rational_arg(p, "p"));
        *out = dup_string(copson::rational_to_string(value));
    });
}

void copson_string_free(char *s) { delete[] s; }

copson_status copson_thresholds(double L, double M, int with_116, double *p_L,
                                double *p_116) {
    if (!p_L || (with_116 && !p_116))
        return null_arg();
    return guarded([&] {
        const copson::threshold_values t =
            copson::thresholds(L, M, with_116 != 0);
        *p_L = t.p_L;
        if (with_116)
            *p_116 = t.p_116;
    });
}

copson_status copson_theorem1_applicable(double L, double p, int *branch,
                                         double *a1_value, double *a2_value) {
    if (!branch)
        return null_arg();
    return guarded([&] {
        const copson::applicability a = copson::theorem1_applicable(L, p);
        *branch = a.branch;
        if (a1_value)
            *a1_value = a.a1_value;
        if (a2_value)
            *a2_value = a.a2_value;
    });
}

copson_status copson_theorem1_applicable_exact(const char *L, const char *p,
                                               int *branch) {
    if (!L || !p || !branch)
        return null_arg();
    return guarded([&] {
        *branch = copson::theorem1_branch_exact(parse_rational_arg(L, "L"),
                                                parse_rational_arg(p, "p"));
    });
}

/* ---------------- auxiliary functions ---------------- */

copson_status copson_aux_eval(int fn, double L, double M, double p, double x,
                              double *out) {
    if (!out)
        return null_arg();
    return guarded(
        [&] { *out = copson::aux_eval(to_aux_fn(fn), L, M, p, x); });
}

copson_status copson_aux_sign_scan(int fn, double L, double M, double p,
                                   uint64_t grid, copson_sign_report *out) {
    if (!out)
        return null_arg();
    return guarded([&] {
        const copson::sign_report r = copson::aux_sign_scan(
            to_aux_fn(fn), L, M, p, grid == 0 ? 10000 : grid);
        out->fn = static_cast<int>(r.fn);
        out->grid = r.grid;
        out->min_value = r.min_value;
        out->argmin_x = r.argmin_x;
        out->threshold = r.threshold;
        out->L = r.L;
        out->M = r.M;
        out->p = r.p;
    });
}

copson_status copson_aux_certified_regime(int fn, double L, double M, double p,
                                          int *out) {
    if (!out)
        return null_arg();
    return guarded([&] {
        *out = copson::aux_certified_regime(to_aux_fn(fn), L, M, p) ? 1 : 0;
    });
}

/* ---------------- proof weights ---------------- */

copson_status copson_weights_build(const copson_family *family, double L,
                                   double p, uint64_t N, copson_weights **out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] {
        *out = new copson_weights{
            copson::weight_trace(family->impl, L, p, N)};
    });
}

void copson_weights_destroy(copson_weights *w) { delete w; }

copson_status copson_weights_log_w(const copson_weights *w, uint64_t n,
                                   double *out) {
    if (!w || !out)
        return null_arg();
    return guarded([&] { *out = w->impl.log_w(n); });
}

copson_status copson_weights_residual(const copson_weights *w, double *out) {
    if (!w || !out)
        return null_arg();
    return guarded([&] { *out = copson::verify_defining_identity(w->impl); });
}

copson_status copson_weights_margins(const copson_weights *w, double *buf,
                                     size_t count, size_t *length) {
    if (!w || (!buf && count > 0))
        return null_arg();
    return guarded([&] {
        const std::vector<double> margins = copson::weighted_margins(w->impl);
        const size_t n = std::min(count, margins.size());
        std::copy_n(margins.begin(), n, buf);
        if (length)
            *length = margins.size();
    });
}

copson_status copson_weights_verify(const copson_weights *w, double tol,
                                    copson_certificate *out) {
    if (!w || !out)
        return null_arg();
    return guarded([&] {
        to_c(copson::verify_weighted_condition(w->impl, tol), out);
    });
}

/* ---------------- best-constant estimation ---------------- */

copson_status copson_extremal_probe(const copson_family *family, double p,
                                    double eps, uint64_t N, double *out) {
    if (!family || !out)
        return null_arg();
    return guarded(
        [&] { *out = copson::extremal_probe(family->impl, p, eps, N); });
}

void copson_opt_config_default(copson_opt_config *cfg) {
    if (!cfg)
        return;
    const copson::optimizer_config d;
    cfg->N = d.N;
    cfg->max_iters = d.max_iters;
    cfg->step_rule = static_cast<int>(d.step_rule);
    cfg->init = static_cast<int>(d.init);
    cfg->eps_init = d.eps_init;
    cfg->step0 = d.step0;
    cfg->tol_stationarity = d.tol_stationarity;
    cfg->seed = d.seed;
}

copson_status copson_minimize(const copson_family *family, double p,
                              const copson_opt_config *cfg,
                              copson_estimate **out) {
    if (!family || !cfg || !out)
        return null_arg();
    return guarded([&] {
        copson::require(cfg->step_rule >= 0 && cfg->step_rule <= 1,
                        copson::status::invalid_argument,
                        "unknown step rule");
        copson::require(cfg->init >= 0 && cfg->init <= 2,
                        copson::status::invalid_argument,
                        "unknown init kind");
        copson::optimizer_config c;
        c.N = cfg->N;
        c.max_iters = cfg->max_iters;
        c.step_rule = static_cast<copson::step_rule_kind>(cfg->step_rule);
        c.init = static_cast<copson::init_kind>(cfg->init);
        c.eps_init = cfg->eps_init;
        c.step0 = cfg->step0;
        c.tol_stationarity = cfg->tol_stationarity;
        c.seed = cfg->seed;
        *out = new copson_estimate{copson::minimize_ratio(family->impl, p, c)};
    });
}

void copson_estimate_destroy(copson_estimate *est) { delete est; }

copson_status copson_estimate_value(const copson_estimate *est, double *out) {
    if (!est || !out)
        return null_arg();
    *out = est->impl.value;
    return COPSON_OK;
}

copson_status copson_estimate_iterations(const copson_estimate *est,
                                         uint64_t *out) {
    if (!est || !out)
        return null_arg();
    *out = est->impl.iterations;
    return COPSON_OK;
}

copson_status copson_estimate_residual(const copson_estimate *est,
                                       double *out) {
    if (!est || !out)
        return null_arg();
    *out = est->impl.residual;
    return COPSON_OK;
}

copson_status copson_estimate_converged(const copson_estimate *est, int *out) {
    if (!est || !out)
        return null_arg();
    *out = est->impl.converged ? 1 : 0;
    return COPSON_OK;
}

copson_status copson_estimate_sequence(const copson_estimate *est, double *buf,
                                       size_t count, size_t *length) {
    if (!est || (!buf && count > 0))
        return null_arg();
    const std::vector<double> &seq = est->impl.sequence;
    const size_t n = std::min(count, seq.size());
    std::copy_n(seq.begin(), n, buf);
    if (length)
        *length = seq.size();
    return COPSON_OK;
}

copson_status copson_estimate_trace(const copson_estimate *est, double *buf,
                                    size_t count, size_t *length) {
    if (!est || (!buf && count > 0))
        return null_arg();
    const std::vector<double> &trace = est->impl.trace;
    const size_t n = std::min(count, trace.size());
    std::copy_n(trace.begin(), n, buf);
    if (length)
        *length = trace.size();
    return COPSON_OK;
}

copson_status copson_brute_force(const copson_family *family, double p,
                                 uint64_t N, uint64_t resolution, double *out) {
    if (!family || !out)
        return null_arg();
    return guarded([&] {
        *out = copson::brute_force_oracle(family->impl, p, N, resolution);
    });
}

copson_status copson_stationarity(const copson_family *family, const double *x,
                                  size_t count, double p, double *out) {
    if (!family || !x || !out)
        return null_arg();
    return guarded([&] {
        *out = copson::stationarity_residual(family->impl,
                                             to_vector(x, count), p);
    });
}

copson_status copson_ratio_gradient(const copson_family *family,
                                    const double *x, size_t count, double p,
                                    double *buf) {
    if (!family || !x || !buf)
        return null_arg();
    return guarded([&] {
        std::vector<double> xs = to_vector(x, count);
        std::vector<double> t(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            copson::require(std::isfinite(xs[i]) && xs[i] > 0.0,
                            copson::status::domain,
                            "gradient requires strictly positive entries");
            t[i] = std::log(xs[i]);
        }
        const std::vector<double> g =
            copson::log_ratio_gradient(family->impl, t, p);
        std::copy(g.begin(), g.end(), buf);
    });
}

} /* extern "C" */
