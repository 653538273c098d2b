// proof_weights.cpp - construction and verification of the proof's weight
// sequence.
#include "proof_weights.hpp"

#include "errors.hpp"
#include "sequence_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace copson {

weight_trace::weight_trace(const weight_family &family, double L, double p,
                           std::uint64_t N)
    : family_(&family), L_(L), p_(p), N_(N) {
    require_p_in_01(p);
    require_L_gt_p(L, p);
    require(N >= 1, status::invalid_argument, "weight horizon must be >= 1");

    const double c = L / p - 2.0; // factor slope; c > -1 because L > p
    log_w_.resize(N + 1);
    log_w_[0] = 0.0; // w_1 = 1
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double x = family.lambda(n) / family.Lambda(n);
        const double f = 1.0 + c * x;
        // f > 0 in exact arithmetic for L > p (x <= 1, with equality only
        // at n = 1 where f = L/p - 1); rounding on degenerate custom
        // weights is the only way to lose it.
        if (!(f > 0.0) || !std::isfinite(f))
            fail(status::nonfinite, "weight factor non-positive at n = " +
                                        std::to_string(n));
        log_w_[n] = log_w_[n - 1] + std::log(f);
    }
}

double weight_trace::log_w(std::uint64_t n) const {
    require(n >= 1 && n <= N_ + 1, status::index,
            "weight index out of range: " + std::to_string(n));
    return log_w_[n - 1];
}

double weight_trace::w(std::uint64_t n) const { return std::exp(log_w(n)); }

namespace {

// Bounded reformulation of the defining identity. With
//   rho_n = sum_{i<=n} lambda_i w_i / w_{n+1}
// the recurrence rho_n = (rho_{n-1} + lambda_n) / f_n holds, and the
// identity states rho_n = (p/(L-p)) Lambda_n. rho stays O(Lambda_n), so
// the power-law growth of w never enters.
struct rho_scan {
    const weight_family &family;
    double c; // L/p - 2
    double rho = 0.0;
    std::uint64_t n = 0;

    explicit rho_scan(const weight_trace &trace)
        : family(trace.family()), c(trace.L() / trace.p() - 2.0) {}

    // Advance to index n+1 and return the new rho.
    double step() {
        ++n;
        const double lam = family.lambda(n);
        const double f = 1.0 + c * lam / family.Lambda(n);
        rho = (rho + lam) / f;
        return rho;
    }
};

} // namespace

double verify_defining_identity(const weight_trace &trace) {
    const double r = trace.p() / (trace.L() - trace.p());
    rho_scan scan(trace);
    double worst = 0.0;
    for (std::uint64_t n = 1; n <= trace.horizon(); ++n) {
        const double rho = scan.step();
        const double rel = rho / (trace.family().Lambda(n) * r) - 1.0;
        if (!std::isfinite(rel))
            fail(status::nonfinite,
                 "identity residual non-finite at n = " + std::to_string(n));
        worst = std::max(worst, std::abs(rel));
    }
    return worst;
}

std::vector<double> weighted_margins(const weight_trace &trace) {
    const weight_family &family = trace.family();
    const double L = trace.L();
    const double p = trace.p();
    const double s = 1.0 / (1.0 - p);
    const double c = L / p - 2.0;
    const double log_r = std::log(p) - std::log(L - p);

    // Margins are normalized per n: the weighted condition is divided by
    // the positive factor lambda_n w_{n+1}^{p} (Lambda_n ...)^{...} chosen
    // so that, when the defining identity holds exactly, the three terms
    // reduce to the pointwise base condition's terms at
    // x = lambda_n/Lambda_n, y = lambda_{n+1}/Lambda_{n+1}. Verdicts and
    // argmins of the two checks are then directly comparable.
    std::vector<double> margins(trace.horizon());
    rho_scan scan(trace);
    for (std::uint64_t n = 1; n <= trace.horizon(); ++n) {
        const double rho = scan.step();
        const double lam_n = family.lambda(n);
        const double lam_n1 = family.lambda(n + 1);
        const double Lam_n = family.Lambda(n);
        const double Lam_n1 = family.Lambda(n + 1);

        const double f = 1.0 + c * lam_n / Lam_n;
        const double t1 = std::exp(s * std::log(f));
        const double t2 = std::exp(s * (std::log(lam_n) - std::log(lam_n1)) +
                                   p * s * (std::log(Lam_n) - std::log(Lam_n1)));
        const double t3 = std::exp(p * s * log_r + std::log(lam_n) +
                                   p * s * std::log(Lam_n) - s * std::log(rho));
        margins[n - 1] = t1 - t2 - t3;
    }
    return margins;
}

certificate verify_weighted_condition(const weight_trace &trace,
                                      double tol) {
    require(std::isfinite(tol) && tol >= 0.0, status::invalid_argument,
            "tolerance must be finite and non-negative");

    certificate cert;
    cert.id = condition_id::cond_2_1;
    cert.horizon = trace.horizon();
    cert.p = trace.p();
    cert.L = trace.L();
    cert.tol = tol;

    const std::vector<double> margins = weighted_margins(trace);
    double min_margin = std::numeric_limits<double>::infinity();
    std::uint64_t argmin = 0;
    bool any_bad = false;

    for (std::uint64_t n = 1; n <= trace.horizon(); ++n) {
        const double margin = margins[n - 1];
        if (!std::isfinite(margin)) {
            if (!any_bad) {
                any_bad = true;
                cert.note = "non-finite margin at n = " + std::to_string(n);
                min_margin = -std::numeric_limits<double>::infinity();
                argmin = n;
            }
            continue;
        }
        if (margin < min_margin) {
            min_margin = margin;
            argmin = n;
        }
    }

    cert.min_margin = min_margin;
    cert.argmin_n = argmin;
    cert.passed = !any_bad && min_margin > -tol;
    return cert;
}

} // namespace copson
