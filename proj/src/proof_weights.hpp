// proof_weights.hpp - the proof's auxiliary weight sequence w and the
// verification of the recast weighted condition.
//
// w_1 = 1 and w_{n+1} = (1 + (L/p - 2) lambda_n/Lambda_n) w_n. The
// sequence grows like a power of n, so it is built and stored in log
// space; comparisons are done on margins normalized per n to match the
// pointwise base condition exactly.
#pragma once

#include "conditions.hpp"
#include "weight_family.hpp"

#include <cstdint>
#include <vector>

namespace copson {

class weight_trace {
public:
    // Requires L > p, p in (0,1). Every multiplicative factor is
    // automatically positive in that domain; a non-positive factor (only
    // possible through pathological custom weights and rounding) is
    // reported with its index.
    weight_trace(const weight_family &family, double L, double p,
                 std::uint64_t N);

    const weight_family &family() const { return *family_; }
    double L() const { return L_; }
    double p() const { return p_; }
    std::uint64_t horizon() const { return N_; }

    // log w_n for n = 1..N+1 (log w_1 = 0).
    double log_w(std::uint64_t n) const;
    // w_n itself; may overflow to +inf for very large n (callers that care
    // should use log_w).
    double w(std::uint64_t n) const;

private:
    const weight_family *family_;
    double L_ = 0.0, p_ = 0.0;
    std::uint64_t N_ = 0;
    std::vector<double> log_w_; // log_w_[i] = log w_{i+1}
};

// Max over n <= N of the relative residual of the defining identity
//   (1/Lambda_n) sum_{i<=n} lambda_i w_i = (p/(L-p)) w_{n+1},
// computed through the bounded quotient sum_{i<=n} lambda_i w_i / w_{n+1}
// so the power-law growth of w cancels.
double verify_defining_identity(const weight_trace &trace);

// Per-n normalized margins of the recast weighted condition for
// n = 1..N (returned 0-indexed); entries may be non-finite when a power
// overflows. Normalization as in verify_weighted_condition.
std::vector<double> weighted_margins(const weight_trace &trace);

// Certificate for the recast weighted condition evaluated with the
// constructed w. Each per-n margin is multiplied by a positive
// normalization chosen so it coincides (in exact arithmetic) with the
// per-n margin of the pointwise base condition; verdict and argmin are
// therefore directly comparable with check_cond_16.
certificate verify_weighted_condition(const weight_trace &trace,
                                      double tol = default_margin_tol);

} // namespace copson
