// sequence_eval.hpp - both sides of the target inequality on finite
// truncations, the scale-invariant ratio functional, and the dual form.
#pragma once

#include "weight_family.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace copson {

// Finite non-negative test sequence x_1..x_N with at least one positive
// entry; all entries finite. Validated on construction.
class truncated_sequence {
public:
    explicit truncated_sequence(std::vector<double> values);

    const std::vector<double> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    static truncated_sequence from_file(const std::string &path);

private:
    std::vector<double> values_;
};

// sum_{n<=N} ((1/Lambda_n) sum_{k=n..N} lambda_k x_k)^p; the inner tail
// sums come from one backward pass. Requires 0 < p < 1.
double copson_lhs(const weight_family &family, const truncated_sequence &x,
                  double p);

// copson_lhs / sum x_n^p (scale-invariant).
double ratio_functional(const weight_family &family,
                        const truncated_sequence &x, double p);

// ratio_functional - (p/(L-p))^p. Requires L > p.
double verify_margin(const weight_family &family, const truncated_sequence &x,
                     double p, double L);

struct dual_sides {
    double lhs; // sum_n (lambda_n sum_{k<=n} x_k/Lambda_k)^q
    double rhs; // (p/(L-p))^q sum_n x_n^q
};

// Dual inequality with q = p/(p-1) < 0; every x_n must be strictly
// positive (q < 0 makes zeros singular).
dual_sides dual_evaluate(const weight_family &family,
                         const truncated_sequence &x, double p, double L);

// Test oracle: the same sum with naive O(N^2) inner summation.
double copson_lhs_naive(const weight_family &family,
                        const truncated_sequence &x, double p);

// Shared parameter guards.
void require_p_in_01(double p);
void require_L_gt_p(double L, double p);

} // namespace copson
