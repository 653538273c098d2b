// ratio_optimizer.hpp - best-constant estimation: the near-extremal probe
// sequence, gradient descent on the log of the ratio functional, a
// brute-force simplex oracle for tiny horizons, and stationarity checks.
//
// Everything runs on t_n = log x_n. The ratio is scale invariant, so
// iterates are renormalized to unit power-sum (sum x_n^p = 1, i.e. the
// denominator's log is 0) after every step; tail sums are assembled with
// running-max scaling so sequences that underflow double range as x_n
// still evaluate correctly.
#pragma once

#include "weight_family.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace copson {

enum class step_rule_kind { fixed = 0, backtracking = 1 };
enum class init_kind { uniform = 0, extremal = 1, random_start = 2 };

struct optimizer_config {
    std::uint64_t N = 2000;       // truncation length
    std::uint64_t max_iters = 20000;
    step_rule_kind step_rule = step_rule_kind::backtracking;
    init_kind init = init_kind::extremal;
    double eps_init = 0.1;        // extremal init x_n = n^(-1/p-eps_init)
    double step0 = 1.0;           // initial step size
    double tol_stationarity = 1e-9;
    std::uint64_t seed = 0;       // random init only
};

struct ratio_estimate {
    // Best visited ratio value: an upper bound on the infimum.
    double value = std::numeric_limits<double>::quiet_NaN();
    // Achieving sequence, normalized so sum x_n^p = 1.
    std::vector<double> sequence;
    std::uint64_t iterations = 0; // accepted descent steps
    // Projected-gradient max-norm at the returned point.
    double residual = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
    // Ratio value per accepted iterate; trace[0] is the initial point.
    std::vector<double> trace;
};

// log S_n for S_n = sum_{k>=n} lambda_k exp(t_k), n = 1..N (returned
// 0-indexed). Stable for arbitrarily negative t via running-max scaling.
std::vector<double> log_tail_sums(const weight_family &family,
                                  const std::vector<double> &t);

// log of the ratio functional at x_n = exp(t_n).
double log_ratio(const weight_family &family, const std::vector<double> &t,
                 double p);

// Gradient of log ratio with respect to t. When value_out is non-null it
// receives log_ratio at t (shares the tail-sum pass).
std::vector<double> log_ratio_gradient(const weight_family &family,
                                       const std::vector<double> &t, double p,
                                       double *value_out = nullptr);

// Ratio at the near-extremal probe x_n = n^(-1/p-eps), n <= N.
double extremal_probe(const weight_family &family, double p, double eps,
                      std::uint64_t N);

// Gradient descent on log ratio; deterministic for a fixed config.
ratio_estimate minimize_ratio(const weight_family &family, double p,
                              const optimizer_config &cfg);

// Exhaustive search over the unit simplex in u_n = x_n^p; N <= 3.
// resolution = subdivisions per dimension (0 selects the default 2000).
double brute_force_oracle(const weight_family &family, double p,
                          std::uint64_t N, std::uint64_t resolution);

// Max-norm of the gradient of log ratio projected onto the
// scale-invariance quotient (mean component removed); x strictly positive.
double stationarity_residual(const weight_family &family,
                             const std::vector<double> &x, double p);

} // namespace copson
