// conditions.hpp - finite-horizon certificates for the sufficient
// conditions of the main theorems, plus the gating polynomials a1/a2,
// the thresholds, and the theorem branch test.
#pragma once

#include "weight_family.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace copson {

enum class condition_id {
    cond_1_6,   // per-n condition on lambda_n/Lambda_n
    cond_1_7,   // sup of l_gap bounded by L
    cond_1_15,  // l_gap bounded by L + M lambda_n/Lambda_n
    thm1_poly,  // polynomial branch test
    thm1prime,  // threshold-based variant
    cond_2_1,   // recast weighted condition
};

std::string condition_name(condition_id id);

// Default absolute tolerance on margins, recorded in every certificate so
// results are reproducible bit-for-bit given the same build.
inline constexpr double default_margin_tol = 1e-9;

struct certificate {
    condition_id id;
    std::uint64_t horizon = 0;
    bool passed = false; // min_margin > -tol (tie at exactly -tol fails)
    double min_margin = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t argmin_n = 0;
    double p = std::numeric_limits<double>::quiet_NaN();
    double L = std::numeric_limits<double>::quiet_NaN();
    double M = std::numeric_limits<double>::quiet_NaN();
    bool has_M = false;
    double tol = default_margin_tol;
    std::string note; // human-readable detail (sup estimate, branch, ...)
};

// Per-n margin of the pointwise condition at x = lambda_n/Lambda_n,
// y = lambda_{n+1}/Lambda_{n+1}:
//   (1+(L/p-2)x)^(1/(1-p)) - (1-y)^((1+p)/(1-p)) x^(1/(1-p)) y^(-1/(1-p))
//   - ((L-p)/p) x
double cond16_margin(const weight_family &family, double L, double p,
                     std::uint64_t n);

certificate check_cond_16(const weight_family &family, double L, double p,
                          std::uint64_t N, double tol = default_margin_tol);

// Passes iff sup_{n<=N} l_gap <= L + tol; min_margin is L - sup and the
// note records the sup estimate and monotonicity flag.
certificate check_cond_17(const weight_family &family, double L,
                          std::uint64_t N, double tol = default_margin_tol);

// Margin per n: L + M lambda_n/Lambda_n - l_gap(n). Parameter domain
// 1/2 < L < 1, 0 < M < 1, L + 2M < 1; violations beyond tol are rejected,
// boundary cases are admitted (and typically fail the check itself).
certificate check_cond_115(const weight_family &family, double L, double M,
                           std::uint64_t N, double tol = default_margin_tol);

// Floating-point gating polynomials.
double a1(double L, double p);
double a2(double L, double p);

struct threshold_values {
    double p_L = std::numeric_limits<double>::quiet_NaN();   // L^2/4
    double p_116 = std::numeric_limits<double>::quiet_NaN(); // min of (1.16)
    bool has_p116 = false;
};

// p_L requires 0 < L < 1; p_116 additionally requires the cond_1_15
// parameter domain and is only computed when with_116 is true.
threshold_values thresholds(double L, double M, bool with_116);

struct applicability {
    bool applicable = false;
    int branch = 0; // 0 none, 1 (L>=1 side), 2 (L<1 side)
    double a1_value = std::numeric_limits<double>::quiet_NaN();
    double a2_value = std::numeric_limits<double>::quiet_NaN();
    std::string reason;
};

// Branch 1: L >= 1, p <= 1/3, a1 >= 0. Branch 2: 0 < L < 1, p <= L/4,
// a2 >= 0.
applicability theorem1_applicable(double L, double p);

// Certificate wrapper around theorem1_applicable; min_margin is the worst
// of the branch's defining margins (or the best branch's when none apply).
certificate certify_thm1_poly(double L, double p);

// Threshold-based variant. Without M: requires 0 < L < 1 and combines the
// sup-gap certificate with p <= p_L. With M: combines the relaxed-gap
// certificate with p <= p_116.
certificate certify_thm1prime(const weight_family &family, double L, double p,
                              std::uint64_t N, double tol = default_margin_tol);
certificate certify_thm1prime_M(const weight_family &family, double L,
                                double M, double p, std::uint64_t N,
                                double tol = default_margin_tol);

} // namespace copson
