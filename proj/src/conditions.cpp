#include "conditions.hpp"

#include "errors.hpp"
#include "sequence_eval.hpp"

#include <cmath>
#include <sstream>

namespace copson {

std::string condition_name(condition_id id) {
    switch (id) {
    case condition_id::cond_1_6:
        return "COND_1_6";
    case condition_id::cond_1_7:
        return "COND_1_7";
    case condition_id::cond_1_15:
        return "COND_1_15";
    case condition_id::thm1_poly:
        return "THM1_POLY";
    case condition_id::thm1prime:
        return "THM1PRIME";
    case condition_id::cond_2_1:
        return "COND_2_1";
    }
    return "?";
}

double cond16_margin(const weight_family &family, double L, double p,
                     std::uint64_t n) {
    double x = family.lambda(n) / family.Lambda(n);
    double y = family.lambda(n + 1) / family.Lambda(n + 1);
    double s = 1.0 / (1.0 - p);
    double rhs1 = std::pow(1.0 + (L / p - 2.0) * x, s);
    double rhs2 = std::pow(1.0 - y, (1.0 + p) * s) * std::pow(x, s) *
                  std::pow(y, -s);
    double lhs = (L - p) / p * x;
    return rhs1 - rhs2 - lhs;
}

namespace {

void apply_margin(certificate &cert, double margin, std::uint64_t n) {
    if (!std::isfinite(margin)) {
        // Non-finite intermediates are reported as a failure at that n.
        margin = -std::numeric_limits<double>::infinity();
        if (cert.note.empty())
            cert.note = "non-finite margin at n=" + std::to_string(n);
    }
    if (cert.argmin_n == 0 || margin < cert.min_margin) {
        cert.min_margin = margin;
        cert.argmin_n = n;
    }
}

void finalize(certificate &cert) {
    // Tie at exactly -tol fails (conservative).
    cert.passed = cert.min_margin > -cert.tol;
}

} // namespace

certificate check_cond_16(const weight_family &family, double L, double p,
                          std::uint64_t N, double tol) {
    require_p_in_01(p);
    require_L_gt_p(L, p);
    require(N >= 1, status::domain, "N must be >= 1");
    require(tol > 0.0, status::domain, "tol must be positive");
    require(family.max_index() >= N + 1, status::index,
            "family too short for horizon N");
    certificate cert;
    cert.id = condition_id::cond_1_6;
    cert.horizon = N;
    cert.p = p;
    cert.L = L;
    cert.tol = tol;
    for (std::uint64_t n = 1; n <= N; ++n)
        apply_margin(cert, cond16_margin(family, L, p, n), n);
    finalize(cert);
    return cert;
}

certificate check_cond_17(const weight_family &family, double L,
                          std::uint64_t N, double tol) {
    require(std::isfinite(L) && L > 0.0, status::domain, "L must be positive");
    require(N >= 2, status::domain, "N must be >= 2");
    require(tol > 0.0, status::domain, "tol must be positive");
    sup_gap_result sup = family.sup_l_gap(N);
    certificate cert;
    cert.id = condition_id::cond_1_7;
    cert.horizon = N;
    cert.L = L;
    cert.tol = tol;
    cert.min_margin = L - sup.sup;
    cert.argmin_n = sup.argmax;
    finalize(cert);
    std::ostringstream note;
    note << "sup_l_gap=" << sup.sup << " at n=" << sup.argmax
         << (sup.monotone ? " (monotone scan)" : " (non-monotone scan)");
    cert.note = note.str();
    return cert;
}

certificate check_cond_115(const weight_family &family, double L, double M,
                           std::uint64_t N, double tol) {
    require(tol > 0.0, status::domain, "tol must be positive");
    // Parameter domain 1/2 < L < 1, 0 < M < 1, L + 2M < 1. Violations by
    // more than tol are rejected; boundary values are admitted (the check
    // itself then decides).
    require(L > 0.5 - tol && L < 1.0 + tol, status::domain,
            "cond_1_15 requires 1/2 < L < 1");
    require(M > -tol && M < 1.0 + tol, status::domain,
            "cond_1_15 requires 0 < M < 1");
    require(L + 2.0 * M < 1.0 + tol, status::domain,
            "cond_1_15 requires L + 2M < 1");
    require(N >= 1, status::domain, "N must be >= 1");
    require(family.max_index() >= N + 1, status::index,
            "family too short for horizon N");
    certificate cert;
    cert.id = condition_id::cond_1_15;
    cert.horizon = N;
    cert.L = L;
    cert.M = M;
    cert.has_M = true;
    cert.tol = tol;
    for (std::uint64_t n = 1; n <= N; ++n) {
        double margin =
            L + M * family.lambda(n) / family.Lambda(n) - family.l_gap(n);
        apply_margin(cert, margin, n);
    }
    finalize(cert);
    return cert;
}

double a1(double L, double p) {
    require_p_in_01(p);
    require_L_gt_p(L, p);
    double c = L / p - 2.0;
    double first = c * c * (1.0 + L * (2.0 - p) / (1.0 - p));
    double inner = L * L * (L - 1.0) * (L - 1.0) +
                   2.0 * L * (L - 1.0) * (L - p - 1.0) + L * L -
                   2.0 * (L - 1.0) * (p + 1.0);
    double second = (1.0 + c * (1.0 - 2.0 * p) / (1.0 - p)) * inner;
    return first - second;
}

double a2(double L, double p) {
    require_p_in_01(p);
    require_L_gt_p(L, p);
    double L2 = L * L, L3 = L2 * L, L4 = L3 * L;
    return (1.0 / p - 1.0) * L4 + (1.0 - p) * (1.0 - 2.0 * p) / p * L3 -
           (3.0 - p) * (1.0 - p) * L2 - (p * p - p + 2.0) * L +
           2.0 * p * (1.0 + p);
}

namespace {

double p_116_value(double L, double M) {
    double den1 = 4.0 * (2.0 * L + M);
    double den2 = 2.0 * (1.0 - L - M);
    require(den1 != 0.0 && den2 != 0.0, status::domain,
            "degenerate threshold denominator");
    return std::min(L * (2.0 * L - 1.0) / den1,
                    L * (1.0 - L - 2.0 * M) / den2);
}

} // namespace

threshold_values thresholds(double L, double M, bool with_116) {
    threshold_values out;
    require(std::isfinite(L) && L > 0.0 && L < 1.0, status::domain,
            "p_L requires 0 < L < 1");
    out.p_L = L * L / 4.0;
    if (with_116) {
        require(L > 0.5, status::domain, "p_116 requires 1/2 < L < 1");
        require(std::isfinite(M) && M > 0.0 && M < 1.0, status::domain,
                "p_116 requires 0 < M < 1");
        require(L + 2.0 * M < 1.0, status::domain,
                "p_116 requires L + 2M < 1");
        out.p_116 = p_116_value(L, M);
        out.has_p116 = true;
    }
    return out;
}

applicability theorem1_applicable(double L, double p) {
    require_p_in_01(p);
    require_L_gt_p(L, p);
    applicability out;
    out.a1_value = a1(L, p);
    out.a2_value = a2(L, p);
    if (L >= 1.0 && p <= 1.0 / 3.0 && out.a1_value >= 0.0) {
        out.applicable = true;
        out.branch = 1;
        out.reason = "L >= 1, p <= 1/3, a1 >= 0";
    } else if (L < 1.0 && p <= L / 4.0 && out.a2_value >= 0.0) {
        out.applicable = true;
        out.branch = 2;
        out.reason = "0 < L < 1, p <= L/4, a2 >= 0";
    } else {
        out.reason = "neither branch applies";
    }
    return out;
}

certificate certify_thm1_poly(double L, double p) {
    applicability app = theorem1_applicable(L, p);
    certificate cert;
    cert.id = condition_id::thm1_poly;
    cert.p = p;
    cert.L = L;
    // Informational margin: the best branch's worst defining margin. The
    // verdict itself uses the theorem's exact comparisons.
    double b1 = std::min({L - 1.0, 1.0 / 3.0 - p, app.a1_value});
    double b2 = std::min({1.0 - L, L / 4.0 - p, app.a2_value});
    cert.min_margin = std::max(b1, b2);
    cert.passed = app.applicable;
    cert.note = "branch=" + std::to_string(app.branch) + " (" + app.reason +
                "); a1=" + std::to_string(app.a1_value) +
                ", a2=" + std::to_string(app.a2_value);
    return cert;
}

certificate certify_thm1prime(const weight_family &family, double L, double p,
                              std::uint64_t N, double tol) {
    require_p_in_01(p);
    require(std::isfinite(L) && L > 0.0 && L < 1.0, status::domain,
            "this variant requires 0 < L < 1");
    certificate gap = check_cond_17(family, L, N, tol);
    double p_margin = L * L / 4.0 - p;
    certificate cert;
    cert.id = condition_id::thm1prime;
    cert.horizon = N;
    cert.p = p;
    cert.L = L;
    cert.tol = tol;
    if (gap.min_margin <= p_margin) {
        cert.min_margin = gap.min_margin;
        cert.argmin_n = gap.argmin_n;
    } else {
        cert.min_margin = p_margin;
        cert.argmin_n = 0;
    }
    cert.passed = cert.min_margin > -tol;
    std::ostringstream note;
    note << "p_L=" << L * L / 4.0 << ", p margin=" << p_margin << "; "
         << gap.note;
    cert.note = note.str();
    return cert;
}

certificate certify_thm1prime_M(const weight_family &family, double L,
                                double M, double p, std::uint64_t N,
                                double tol) {
    require_p_in_01(p);
    certificate gap = check_cond_115(family, L, M, N, tol);
    double p116 = p_116_value(L, M);
    double p_margin = p116 - p;
    certificate cert;
    cert.id = condition_id::thm1prime;
    cert.horizon = N;
    cert.p = p;
    cert.L = L;
    cert.M = M;
    cert.has_M = true;
    cert.tol = tol;
    if (gap.min_margin <= p_margin) {
        cert.min_margin = gap.min_margin;
        cert.argmin_n = gap.argmin_n;
    } else {
        cert.min_margin = p_margin;
        cert.argmin_n = 0;
    }
    cert.passed = cert.min_margin > -tol;
    std::ostringstream note;
    note << "p_116=" << p116 << ", p margin=" << p_margin;
    cert.note = note.str();
    return cert;
}

} // namespace copson
