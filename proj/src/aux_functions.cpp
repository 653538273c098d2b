#include "aux_functions.hpp"

#include "conditions.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cmath>

namespace copson {

std::string aux_fn_name(aux_fn fn) {
    switch (fn) {
    case aux_fn::f_LMp:
        return "f";
    case aux_fn::g_Lp:
        return "g";
    case aux_fn::u_Lp:
        return "u";
    case aux_fn::v_Lp:
        return "v";
    case aux_fn::h_Lp:
        return "h";
    case aux_fn::h_LMp:
        return "h_LM";
    case aux_fn::v_LMp:
        return "v_LM";
    case aux_fn::ineq_3_1:
        return "ineq31";
    }
    return "?";
}

std::optional<aux_fn> aux_fn_parse(const std::string &name) {
    if (name == "f")
        return aux_fn::f_LMp;
    if (name == "g")
        return aux_fn::g_Lp;
    if (name == "u")
        return aux_fn::u_Lp;
    if (name == "v")
        return aux_fn::v_Lp;
    if (name == "h")
        return aux_fn::h_Lp;
    if (name == "h_LM")
        return aux_fn::h_LMp;
    if (name == "v_LM")
        return aux_fn::v_LMp;
    if (name == "ineq31")
        return aux_fn::ineq_3_1;
    return std::nullopt;
}

double aux_threshold(aux_fn fn) {
    switch (fn) {
    case aux_fn::h_Lp:
    case aux_fn::h_LMp:
    case aux_fn::ineq_3_1:
        return 1.0;
    default:
        return 0.0;
    }
}

namespace {

bool uses_M(aux_fn fn) {
    switch (fn) {
    case aux_fn::f_LMp:
    case aux_fn::h_LMp:
    case aux_fn::v_LMp:
    case aux_fn::ineq_3_1:
        return true;
    default:
        return false;
    }
}

double f_LMp_eval(double L, double M, double p, double x) {
    double s = 1.0 / (1.0 - p);
    double q1 = 1.0 + (L - 1.0) * x + M * x * x;
    double q2 = 1.0 + L * x + M * x * x;
    return std::pow(1.0 + (L / p - 2.0) * x, s) -
           std::pow(q1, (1.0 + p) * s) * std::pow(q2, -p * s) -
           (L - p) / p * x;
}

double g_Lp_eval(double L, double p, double x) {
    double c = L / p - 2.0;
    double s = 1.0 / (1.0 - p);
    double first = c * c * std::pow(1.0 + (L - 1.0) * x, (1.0 - 3.0 * p) * s) *
                   std::pow(1.0 + L * x, (2.0 - p) * s);
    double poly = L * L * (L - 1.0) * (L - 1.0) * x * x +
                  2.0 * L * (L - 1.0) * (L - p - 1.0) * x + L * L -
                  2.0 * (L - 1.0) * (p + 1.0);
    double second = std::pow(1.0 + c * x, (1.0 - 2.0 * p) * s) * poly;
    return first - second;
}

double u_Lp_eval(double L, double p, double x) {
    double c = L / p - 2.0;
    // The quadratic term of g's polynomial is majorized linearly (x^2 <= x
    // on (0,1]), so u is affine-in-x times affine-in-x: a concave parabola.
    double poly = L * L * (L - 1.0) * (L - 1.0) * x +
                  2.0 * L * (L - 1.0) * (L - p - 1.0) * x + L * L -
                  2.0 * (L - 1.0) * (p + 1.0);
    return c * c * (1.0 + L * (2.0 - p) / (1.0 - p) * x) -
           (1.0 + c * (1.0 - 2.0 * p) / (1.0 - p) * x) * poly;
}

double v_Lp_eval(double L, double p, double x) {
    double c = L / p - 2.0;
    double A = 1.0 + (L - 1.0) * x;
    double B = 1.0 + L * x;
    double C = 1.0 + c * x;
    return (L - 2.0 * p) * c * A * B -
           p * (1.0 + p) * (2.0 - L) * (1.0 - L) * C * B -
           p * (1.0 + p - p * L) * L * C * A;
}

double h_Lp_eval(double L, double p, double x) {
    return std::pow(1.0 + (L / p - 2.0) * x, L - 2.0 * p) *
           std::pow(1.0 + (L - 1.0) * x, p * (1.0 + p) * (2.0 - L)) *
           std::pow(1.0 + L * x, -p * (1.0 + p - p * L));
}

double h_LMp_eval(double L, double M, double p, double x) {
    double e1 = L - 2.0 * p - (1.0 - p * p) * (1.0 - L);
    double q1 = 1.0 + (L - 1.0) * x + M * x * x;
    double q2 = 1.0 + L * x + M * x * x;
    return std::pow(1.0 + (L / p - 2.0) * x, e1) *
           std::pow(q1, p * (1.0 + p) * (2.0 - L)) *
           std::pow(q2, -p * (1.0 + p - p * L));
}

double v_LMp_eval(double L, double M, double p, double x) {
    double e1 = L - 2.0 * p - (1.0 - p * p) * (1.0 - L);
    double c = L / p - 2.0;
    double A = 1.0 + (L - 1.0) * x;
    double B = 1.0 + L * x;
    double C = 1.0 + c * x;
    return e1 * c * A * B -
           p * (1.0 + p) * (2.0 - L) * (1.0 - L) * C * (1.0 + (L + M) * x) -
           p * (1.0 + p - p * L) * L * C * (1.0 + 2.0 * M / L) *
               (1.0 + (L + M - 1.0) * x);
}

double ineq_3_1_eval(double L, double M, double p, double x) {
    double q1 = 1.0 + (L - 1.0) * x + M * x * x;
    double q2 = 1.0 + L * x + M * x * x;
    return std::pow(1.0 + (L / p - 2.0) * x, L - 2.0 * p) *
           std::pow(1.0 - 2.0 * M * x / (1.0 - L), (1.0 - p * p) * (1.0 - L)) *
           std::pow(1.0 + 2.0 * M * x / L, p * (1.0 - p) * L) *
           std::pow(q1, p * (1.0 + p) * (2.0 - L)) *
           std::pow(q2, -p * (1.0 + p - p * L));
}

} // namespace

double u_Lp_at_zero(double L, double p) {
    double c = L / p - 2.0;
    return c * c - L * L + 2.0 * (L - 1.0) * (p + 1.0);
}

double fprime_rhs(double L, double M, double p, double x) {
    // The three convex weights sum to 1; each base must be positive for
    // the mean inequality to make sense (L < 1, 2Mx < 1-L).
    double denom = (1.0 - p) * (L - p);
    double th1 = (L / p - 2.0) * p / denom;
    double th2 = p * (1.0 + p) * (1.0 - L) / denom;
    double th3 = L * p * p / denom;
    double q1 = 1.0 + (L - 1.0) * x + M * x * x;
    double q2 = 1.0 + L * x + M * x * x;
    double s = 1.0 / (1.0 - p);
    double A = std::pow(1.0 + (L / p - 2.0) * x, p * s * th1);
    double B = std::pow((1.0 - 2.0 * M * x / (1.0 - L)) *
                            std::pow(q1, 2.0 * p * s) * std::pow(q2, -p * s),
                        th2);
    double C = std::pow((1.0 + 2.0 * M * x / L) * std::pow(q1, (1.0 + p) * s) *
                            std::pow(q2, -s),
                        th3);
    return A * B * C;
}

double aux_eval(aux_fn fn, double L, double M, double p, double x) {
    require(std::isfinite(p) && p > 0.0 && p < 1.0, status::domain,
            "p must lie in (0,1)");
    require(std::isfinite(L) && L > p, status::domain, "L must exceed p");
    require(std::isfinite(x) && x >= 0.0 && x <= 1.0, status::domain,
            "x must lie in [0,1]");
    if (uses_M(fn))
        require(std::isfinite(M) && M >= 0.0, status::domain,
                "M must be non-negative");

    double v = 0.0;
    switch (fn) {
    case aux_fn::f_LMp:
        v = f_LMp_eval(L, M, p, x);
        break;
    case aux_fn::g_Lp:
        v = g_Lp_eval(L, p, x);
        break;
    case aux_fn::u_Lp:
        v = u_Lp_eval(L, p, x);
        break;
    case aux_fn::v_Lp:
        v = v_Lp_eval(L, p, x);
        break;
    case aux_fn::h_Lp:
        v = h_Lp_eval(L, p, x);
        break;
    case aux_fn::h_LMp:
        v = h_LMp_eval(L, M, p, x);
        break;
    case aux_fn::v_LMp:
        require(L > 0.0, status::domain, "v_LM requires L > 0");
        v = v_LMp_eval(L, M, p, x);
        break;
    case aux_fn::ineq_3_1:
        require(L < 1.0, status::domain, "ineq31 requires L < 1");
        v = ineq_3_1_eval(L, M, p, x);
        break;
    }
    if (!std::isfinite(v))
        fail(status::nonfinite, aux_fn_name(fn) + " is non-finite at x=" +
                                    std::to_string(x));
    return v;
}

sign_report aux_sign_scan(aux_fn fn, double L, double M, double p,
                          std::uint64_t grid) {
    if (grid == 0)
        grid = 10000;
    require(grid >= 2, status::domain, "grid needs at least 2 points");
    sign_report report;
    report.fn = fn;
    report.grid = grid;
    report.threshold = aux_threshold(fn);
    report.L = L;
    report.M = uses_M(fn) ? M : 0.0;
    report.p = p;
    bool first = true;
    for (std::uint64_t i = 1; i <= grid; ++i) {
        double x = static_cast<double>(i) / static_cast<double>(grid);
        double v = aux_eval(fn, L, M, p, x); // throws with the offending x
        if (first || v < report.min_value) {
            report.min_value = v;
            report.argmin_x = x;
            first = false;
        }
    }
    return report;
}

bool aux_certified_regime(aux_fn fn, double L, double M, double p) {
    if (!(p > 0.0 && p < 1.0 && L > p))
        return false;
    switch (fn) {
    case aux_fn::f_LMp:
        // Proved non-negative in the M = 0 case under the first theorem's
        // branch-1 hypotheses.
        return M == 0.0 && L >= 1.0 && p <= 1.0 / 3.0 && a1(L, p) >= 0.0;
    case aux_fn::g_Lp:
    case aux_fn::u_Lp:
        return L >= 1.0 && p <= 1.0 / 3.0 && a1(L, p) >= 0.0;
    case aux_fn::v_Lp:
        // Derivative numerator of h; sign claim needs concavity (L >= 2p)
        // plus both endpoint values non-negative (L >= 4p and a2 >= 0).
        return L < 1.0 && p <= L / 4.0 && a2(L, p) >= 0.0;
    case aux_fn::h_Lp:
        return L < 1.0 && p <= L / 4.0 && a2(L, p) >= 0.0;
    case aux_fn::h_LMp:
    case aux_fn::v_LMp:
    case aux_fn::ineq_3_1: {
        if (!(L > 0.5 && L < 1.0 && M > 0.0 && M < 1.0 && L + 2.0 * M < 1.0))
            return false;
        double p116 = std::min(L * (2.0 * L - 1.0) / (4.0 * (2.0 * L + M)),
                               L * (1.0 - L - 2.0 * M) /
                                   (2.0 * (1.0 - L - M)));
        return p <= p116;
    }
    }
    return false;
}

} // namespace copson
