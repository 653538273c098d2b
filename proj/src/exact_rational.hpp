// exact_rational.hpp - exact-rational evaluation of the closed-form
// polynomials a1, a2 and the thresholds p_L, p_116.
//
// Only these closed forms get an exact path; the auxiliary proof functions
// involve irrational exponents and stay in floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace copson {

using rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2", "1/3", "0.0625", "1e-3"-free plain decimals; returns
// nullopt on malformed input. Decimals convert exactly (base-10 scaling).
std::optional<rational> parse_rational(std::string_view text);

// Canonical form: "num/den" with positive den, or plain integer text.
std::string rational_to_string(const rational &r);

rational a1_exact(const rational &L, const rational &p);
rational a2_exact(const rational &L, const rational &p);

rational p_L_exact(const rational &L);                       // L^2/4
rational p_116_exact(const rational &L, const rational &M);  // min of two branches

// Branch decision with exact comparisons: 0 none, 1, or 2.
int theorem1_branch_exact(const rational &L, const rational &p);

} // namespace copson
