// aux_functions.hpp - the auxiliary functions appearing in the proofs'
// sign arguments, with grid sign scans over (0, 1].
//
// Direct formula transcriptions; no symbolic manipulation. Derivative
// claims are tested elsewhere by finite differences.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace copson {

enum class aux_fn {
    f_LMp,    // claim f >= 0 (second-derivative argument, L >= 1 side)
    g_Lp,     // claim g >= 0
    u_Lp,     // claim u >= 0 (concave lower bound of g)
    v_Lp,     // claim v >= 0 (derivative numerator of h, L < 1 side)
    h_Lp,     // claim h >= 1
    h_LMp,    // claim h >= 1 (relaxed-gap variant)
    v_LMp,    // claim v >= 0 (relaxed-gap variant)
    ineq_3_1, // claim product form >= 1
};

std::string aux_fn_name(aux_fn fn);
std::optional<aux_fn> aux_fn_parse(const std::string &name);

// 0 for the >= 0 claims, 1 for the >= 1 claims.
double aux_threshold(aux_fn fn);

// Evaluate at x in [0, 1] (the grid scans stay inside (0, 1]; x = 0 is the
// removable endpoint, accepted for pointwise evaluation). M is ignored by
// the functions without an M parameter.
double aux_eval(aux_fn fn, double L, double M, double p, double x);

struct sign_report {
    aux_fn fn;
    std::uint64_t grid = 0;
    double min_value = 0.0;
    double argmin_x = 0.0;
    double threshold = 0.0;
    double L = 0.0, M = 0.0, p = 0.0;
};

// Uniform grid scan over [1/grid, 1] (closed, avoiding the removable
// endpoint 0). Default grid 10^4 points.
sign_report aux_sign_scan(aux_fn fn, double L, double M, double p,
                          std::uint64_t grid = 10000);

// True when (L, M, p) lies in the regime where the containing proof claims
// the function's sign on all of (0, 1].
bool aux_certified_regime(aux_fn fn, double L, double M, double p);

// The value of u_{L,p} at 0 in its closed form (used by the proofs'
// endpoint discussion): (L/p - 2)^2 - L^2 + 2(L-1)(p+1).
double u_Lp_at_zero(double L, double p);

// Right-hand side of the arithmetic-geometric-mean display bounding
// (p/(L-p)) f'_{L,M,p}(x) + 1 from below (used by property tests).
double fprime_rhs(double L, double M, double p, double x);

} // namespace copson
