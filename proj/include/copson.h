/* copson.h - public C API for the Copson-inequality certification library.
 *
 * The library certifies finite-horizon sufficient conditions for the
 * reversed Copson inequality in the regime 0 < p < 1,
 *
 *     sum_n ( (1/Lambda_n) sum_{k>=n} lambda_k x_k )^p
 *         >= (p/(L-p))^p sum_n x_n^p,
 *
 * builds and verifies the proof's auxiliary weight sequences, and
 * estimates best constants by optimization over truncated sequences.
 *
 * Conventions:
 *   - Every function returns a copson_status; COPSON_OK (0) on success.
 *   - Results are written through out-parameters.
 *   - On failure, copson_last_error() returns a thread-local message
 *     describing the most recent error on the calling thread.
 *   - Handles (copson_family, copson_weights, copson_estimate) are opaque
 *     and must be released with the matching _destroy function.
 *   - Indices n are 1-based throughout, matching the series notation.
 */
#ifndef COPSON_H
#define COPSON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ */
/* Status codes                                                        */
/* ------------------------------------------------------------------ */

typedef enum copson_status {
    COPSON_OK = 0,
    COPSON_ERR_NULL_POINTER = 1,  /* required pointer argument was NULL   */
    COPSON_ERR_INVALID_ARGUMENT = 2, /* malformed spec string, bad enum, ... */
    COPSON_ERR_DOMAIN = 3,        /* parameter outside its mathematical domain */
    COPSON_ERR_INDEX = 4,         /* index out of range (e.g. custom family) */
    COPSON_ERR_NONFINITE = 5,     /* a computation produced NaN/Inf       */
    COPSON_ERR_IO = 6,            /* file could not be read               */
    COPSON_ERR_PARSE = 7,         /* file or number failed to parse       */
    COPSON_ERR_INTERNAL = 8       /* unexpected internal failure          */
} copson_status;

/* Thread-local message for the most recent error on this thread.
 * Valid until the next failing call on the same thread. Never NULL. */
const char *copson_last_error(void);

/* Library version string, e.g. "1.0.0". */
const char *copson_version(void);

/* ------------------------------------------------------------------ */
/* Weight families: lambda_n and Lambda_n = sum_{i<=n} lambda_i        */
/* ------------------------------------------------------------------ */

typedef struct copson_family copson_family;

/* Create from a spec string: "unit", "powerdiff:ALPHA",
 * "powerkernel:ALPHA" (ALPHA >= 1), or "custom:PATH" where PATH is a
 * text file with one positive decimal per line. */
copson_status copson_family_create(const char *spec, copson_family **out);

/* Create a custom family directly from an array of positive weights. */
copson_status copson_family_create_custom(const double *values, size_t count,
                                          copson_family **out);

void copson_family_destroy(copson_family *family);

/* lambda_n, Lambda_n, and the gap Lambda_{n+1}/lambda_{n+1} - Lambda_n/lambda_n. */
copson_status copson_lambda(const copson_family *family, uint64_t n, double *out);
copson_status copson_Lambda(const copson_family *family, uint64_t n, double *out);
copson_status copson_l_gap(const copson_family *family, uint64_t n, double *out);

/* Max of l_gap over n <= N. monotone is 1 when the scanned values were
 * non-decreasing (within floating slack), supporting extrapolation of the
 * supremum; argmax is the first n attaining the max. */
copson_status copson_sup_l_gap(const copson_family *family, uint64_t N,
                               double *sup, int *monotone, uint64_t *argmax);

/* ------------------------------------------------------------------ */
/* Inequality evaluation on finite truncations                         */
/* ------------------------------------------------------------------ */

/* Left-hand side sum_{n<=N} ((1/Lambda_n) sum_{k=n..N} lambda_k x_k)^p.
 * x must be non-negative with at least one positive entry; 0 < p < 1. */
copson_status copson_lhs(const copson_family *family, const double *x,
                         size_t count, double p, double *out);

/* Scale-invariant quotient lhs / sum x_n^p. */
copson_status copson_ratio(const copson_family *family, const double *x,
                           size_t count, double p, double *out);

/* ratio - (p/(L-p))^p; non-negative means x satisfies the inequality
 * with this constant. Requires L > p. */
copson_status copson_verify_margin(const copson_family *family, const double *x,
                                   size_t count, double p, double L, double *out);

/* Dual inequality with q = p/(p-1) < 0 (requires every x_n > 0):
 * lhs = sum_n (lambda_n sum_{k<=n} x_k/Lambda_k)^q,
 * rhs = (p/(L-p))^q sum_n x_n^q.  Caller compares lhs <= rhs. */
copson_status copson_dual(const copson_family *family, const double *x,
                          size_t count, double p, double L,
                          double *lhs, double *rhs);

/* ------------------------------------------------------------------ */
/* Condition certificates                                              */
/* ------------------------------------------------------------------ */

typedef enum copson_condition_id {
    COPSON_COND_1_6 = 0,   /* per-n sufficient condition on lambda      */
    COPSON_COND_1_7 = 1,   /* sup of l_gap bounded by L                 */
    COPSON_COND_1_15 = 2,  /* relaxed gap bound L + M lambda_n/Lambda_n */
    COPSON_THM1_POLY = 3,  /* polynomial branch test of the main theorem */
    COPSON_THM1PRIME = 4,  /* threshold-based variant of the theorem    */
    COPSON_COND_2_1 = 5    /* recast weighted condition (verify_21)     */
} copson_condition_id;

typedef struct copson_certificate {
    int condition_id;      /* copson_condition_id                        */
    uint64_t horizon;      /* conditions checked for n = 1..horizon      */
    int passed;            /* 1 iff min_margin > -tol                    */
    double min_margin;     /* worst margin encountered                   */
    uint64_t argmin_n;     /* 1-based n where the worst margin occurred  */
    double p;              /* NaN when not applicable to the condition   */
    double L;
    double M;              /* NaN when the condition has no M            */
    double tol;            /* absolute tolerance recorded with the check */
} copson_certificate;

/* Condition: for each n, margin = RHS - LHS of the per-n inequality with
 * x = lambda_n/Lambda_n, y = lambda_{n+1}/Lambda_{n+1}. */
copson_status copson_check_cond_16(const copson_family *family, double L,
                                   double p, uint64_t N, double tol,
                                   copson_certificate *out);

/* Condition: sup_{n<=N} l_gap(n) <= L + tol. min_margin is L - sup. */
copson_status copson_check_cond_17(const copson_family *family, double L,
                                   uint64_t N, double tol,
                                   copson_certificate *out);

/* Condition: l_gap(n) <= L + M lambda_n/Lambda_n for n <= N.
 * Parameter domain 1/2 < L < 1, 0 < M < 1, L + 2M < 1 (boundary
 * violations beyond tol are rejected). */
copson_status copson_check_cond_115(const copson_family *family, double L,
                                    double M, uint64_t N, double tol,
                                    copson_certificate *out);

/* Certificate wrappers around the theorem-level tests.  THM1_POLY records
 * whether a polynomial branch applies (min_margin is informational: the
 * worst of the winning branch's defining margins).  THM1PRIME combines the
 * sup-gap certificate with p <= L^2/4 (requires 0 < L < 1); the _M variant
 * combines the relaxed-gap certificate with p <= p_116. */
copson_status copson_certify_thm1_poly(double L, double p,
                                       copson_certificate *out);
copson_status copson_certify_thm1prime(const copson_family *family, double L,
                                       double p, uint64_t N, double tol,
                                       copson_certificate *out);
copson_status copson_certify_thm1prime_M(const copson_family *family, double L,
                                         double M, double p, uint64_t N,
                                         double tol, copson_certificate *out);

/* The two polynomials gating the main theorem's branches. */
copson_status copson_a1(double L, double p, double *out);
copson_status copson_a2(double L, double p, double *out);

/* Exact-rational evaluation. L and p are decimal ("0.25") or rational
 * ("1/3") strings; the result is written as a canonical rational string
 * "num/den" (or "k" for integers) into *out, which the caller frees
 * with copson_string_free. */
copson_status copson_a1_exact(const char *L, const char *p, char **out);
copson_status copson_a2_exact(const char *L, const char *p, char **out);
void copson_string_free(char *s);

/* Thresholds p_L = L^2/4 (any 0 < L < 1) and, when with_116 is nonzero,
 * p_116 = min{ L(2L-1)/(4(2L+M)), L(1-L-2M)/(2(1-L-M)) } (requires
 * 1/2 < L < 1, 0 < M < 1, L + 2M < 1). */
copson_status copson_thresholds(double L, double M, int with_116,
                                double *p_L, double *p_116);

/* Branch test of the main theorem: branch 1 is L >= 1, p <= 1/3,
 * a1 >= 0; branch 2 is 0 < L < 1, p <= L/4, a2 >= 0.
 * *branch receives 0 (not applicable), 1, or 2. */
copson_status copson_theorem1_applicable(double L, double p, int *branch,
                                         double *a1_value, double *a2_value);

/* Exact-rational variant; L and p as in copson_a1_exact. */
copson_status copson_theorem1_applicable_exact(const char *L, const char *p,
                                               int *branch);

/* ------------------------------------------------------------------ */
/* Auxiliary proof functions and sign scans                            */
/* ------------------------------------------------------------------ */

typedef enum copson_aux_fn {
    COPSON_AUX_F_LMP = 0,   /* f_{L,M,p}; claim f >= 0       */
    COPSON_AUX_G_LP = 1,    /* g_{L,p};   claim g >= 0       */
    COPSON_AUX_U_LP = 2,    /* u_{L,p};   claim u >= 0       */
    COPSON_AUX_V_LP = 3,    /* v_{L,p};   claim v >= 0       */
    COPSON_AUX_H_LP = 4,    /* h_{L,p};   claim h >= 1       */
    COPSON_AUX_H_LMP = 5,   /* h_{L,M,p}; claim h >= 1       */
    COPSON_AUX_V_LMP = 6,   /* v_{L,M,p}; claim v >= 0       */
    COPSON_AUX_INEQ_3_1 = 7 /* product form; claim >= 1      */
} copson_aux_fn;

/* Evaluate one auxiliary function at x in [0, 1]. M is ignored by the
 * functions that do not use it. */
copson_status copson_aux_eval(int fn, double L, double M, double p, double x,
                              double *out);

typedef struct copson_sign_report {
    int fn;                /* copson_aux_fn                              */
    uint64_t grid;         /* number of grid points on [1/grid, 1]       */
    double min_value;      /* minimum over the grid                      */
    double argmin_x;       /* grid point attaining the minimum           */
    double threshold;      /* claim is min_value >= threshold (0 or 1)   */
    double L, M, p;
} copson_sign_report;

/* Uniform grid scan over [1/grid, 1]; default grid is 10000 when 0 is
 * passed. */
copson_status copson_aux_sign_scan(int fn, double L, double M, double p,
                                   uint64_t grid, copson_sign_report *out);

/* 1 when (L, M, p) lies in the regime where the containing proof claims
 * the function's sign on all of (0, 1]; 0 otherwise. */
copson_status copson_aux_certified_regime(int fn, double L, double M, double p,
                                          int *out);

/* ------------------------------------------------------------------ */
/* Proof weight sequences                                              */
/* ------------------------------------------------------------------ */

typedef struct copson_weights copson_weights;

/* Build w_1 = 1, w_{n+1} = (1 + (L/p - 2) lambda_n/Lambda_n) w_n for
 * n = 1..N (so the trace holds w_1..w_{N+1}).  Stored in log space; the
 * sequence grows like a power of n. */
copson_status copson_weights_build(const copson_family *family, double L,
                                   double p, uint64_t N, copson_weights **out);

void copson_weights_destroy(copson_weights *w);

/* log w_n (natural log), n = 1..N+1. */
copson_status copson_weights_log_w(const copson_weights *w, uint64_t n,
                                   double *out);

/* Max over n <= N of the relative residual of the defining identity
 * (1/Lambda_n) sum_{i<=n} lambda_i w_i = (p/(L-p)) w_{n+1}. */
copson_status copson_weights_residual(const copson_weights *w, double *out);

/* Per-n normalized margins of the recast weighted condition, n = 1..N.
 * Writes min(count, N) entries into buf; stores N in *length (length may
 * be NULL).  buf may be NULL when count is 0, so the required size can be
 * queried first. */
copson_status copson_weights_margins(const copson_weights *w, double *buf,
                                     size_t count, size_t *length);

/* Certificate for the recast weighted condition; margins are normalized
 * per n so that they coincide with the per-n margins of the base
 * condition, making verdicts and argmin directly comparable. */
copson_status copson_weights_verify(const copson_weights *w, double tol,
                                    copson_certificate *out);

/* ------------------------------------------------------------------ */
/* Best-constant estimation                                            */
/* ------------------------------------------------------------------ */

/* Ratio of the inequality at the extremal probe x_n = n^(-1/p-eps),
 * n <= N, evaluated in log space to survive underflow. */
copson_status copson_extremal_probe(const copson_family *family, double p,
                                    double eps, uint64_t N, double *out);

typedef enum copson_step_rule {
    COPSON_STEP_FIXED = 0,
    COPSON_STEP_BACKTRACKING = 1
} copson_step_rule;

typedef enum copson_init_kind {
    COPSON_INIT_UNIFORM = 0,
    COPSON_INIT_EXTREMAL = 1,  /* x_n = n^(-1/p-eps_init)               */
    COPSON_INIT_RANDOM = 2     /* deterministic given seed              */
} copson_init_kind;

typedef struct copson_opt_config {
    uint64_t N;              /* truncation length, >= 1                  */
    uint64_t max_iters;      /* iteration cap                            */
    int step_rule;           /* copson_step_rule                         */
    int init;                /* copson_init_kind                         */
    double eps_init;         /* extremal-init exponent offset            */
    double step0;            /* initial step size                        */
    double tol_stationarity; /* stop when projected gradient max-norm    */
    uint64_t seed;           /* RNG seed for random init                 */
} copson_opt_config;

/* Fill a config with the library defaults (N = 2000, backtracking,
 * extremal(0.1) init). */
void copson_opt_config_default(copson_opt_config *cfg);

typedef struct copson_estimate copson_estimate;

/* Gradient descent on log(ratio) over the positive orthant, x_n = exp(t_n),
 * normalized to sum x_n^p = 1 each iteration.  Returns the best visited
 * point; the value is an upper bound on the infimum.  Deterministic for a
 * fixed config. */
copson_status copson_minimize(const copson_family *family, double p,
                              const copson_opt_config *cfg,
                              copson_estimate **out);

void copson_estimate_destroy(copson_estimate *est);

copson_status copson_estimate_value(const copson_estimate *est, double *out);
copson_status copson_estimate_iterations(const copson_estimate *est, uint64_t *out);
copson_status copson_estimate_residual(const copson_estimate *est, double *out);
copson_status copson_estimate_converged(const copson_estimate *est, int *out);

/* Achieving sequence, normalized to unit power-sum. Writes min(count, N)
 * entries and stores N in *length (length may be NULL).  buf may be NULL
 * when count is 0 (size query). */
copson_status copson_estimate_sequence(const copson_estimate *est, double *buf,
                                       size_t count, size_t *length);

/* Convergence trace of ratio values, one per accepted iteration; the same
 * buffer/length contract as copson_estimate_sequence. */
copson_status copson_estimate_trace(const copson_estimate *est, double *buf,
                                    size_t count, size_t *length);

/* Exhaustive grid search over the unit simplex in u_n = x_n^p, N <= 3.
 * resolution is the number of subdivisions per dimension (>= 2; pass 0
 * for the default 2000). */
copson_status copson_brute_force(const copson_family *family, double p,
                                 uint64_t N, uint64_t resolution, double *out);

/* Max-norm of the projected gradient of log(ratio) at a strictly positive
 * x (projection removes the scale direction). */
copson_status copson_stationarity(const copson_family *family, const double *x,
                                  size_t count, double p, double *out);

/* Gradient of log(ratio) with respect to t_j = log x_j, without
 * projection; buf receives count entries. */
copson_status copson_ratio_gradient(const copson_family *family, const double *x,
                                    size_t count, double p, double *buf);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COPSON_H */
