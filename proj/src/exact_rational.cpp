#include "exact_rational.hpp"

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>

namespace copson {

namespace {

using bigint = boost::multiprecision::cpp_int;

bool parse_integer(std::string_view s, bigint &out) {
    if (s.empty())
        return false;
    std::size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size())
        return false;
    bigint v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
        v = v * 10 + (s[i] - '0');
    }
    out = negative ? -v : v;
    return true;
}

} // namespace

std::optional<rational> parse_rational(std::string_view text) {
    // Strip surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        return std::nullopt;

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        bigint num, den;
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den) || den == 0)
            return std::nullopt;
        return rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty())
            return std::nullopt;
        bool negative = !head.empty() && head.front() == '-';
        bigint int_part = 0;
        if (!head.empty() && head != "-" && head != "+") {
            if (!parse_integer(head, int_part))
                return std::nullopt;
        }
        bigint frac_part;
        // Fraction digits must be bare digits (no second sign).
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return std::nullopt;
        if (!parse_integer(frac, frac_part))
            return std::nullopt;
        bigint scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        bigint mag = boost::multiprecision::abs(int_part) * scale + frac_part;
        rational r(mag, scale);
        return negative ? -r : r;
    }
    bigint whole;
    if (!parse_integer(text, whole))
        return std::nullopt;
    return rational(whole);
}

std::string rational_to_string(const rational &r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

rational a1_exact(const rational &L, const rational &p) {
    require(p > 0 && p < 1, status::domain, "p must lie in (0,1)");
    require(L > p, status::domain, "L must exceed p");
    rational c = L / p - 2;
    rational first = c * c * (1 + L * (2 - p) / (1 - p));
    rational inner = L * L * (L - 1) * (L - 1) +
                     2 * L * (L - 1) * (L - p - 1) + L * L -
                     2 * (L - 1) * (p + 1);
    rational second = (1 + c * (1 - 2 * p) / (1 - p)) * inner;
    return first - second;
}

rational a2_exact(const rational &L, const rational &p) {
    require(p > 0 && p < 1, status::domain, "p must lie in (0,1)");
    require(L > p, status::domain, "L must exceed p");
    rational L2 = L * L, L3 = L2 * L, L4 = L3 * L;
    return (1 / p - 1) * L4 + (1 - p) * (1 - 2 * p) / p * L3 -
           (3 - p) * (1 - p) * L2 - (p * p - p + 2) * L + 2 * p * (1 + p);
}

rational p_L_exact(const rational &L) {
    require(L > 0 && L < 1, status::domain, "p_L requires 0 < L < 1");
    return L * L / 4;
}

rational p_116_exact(const rational &L, const rational &M) {
    require(L > rational(1, 2) && L < 1, status::domain,
            "p_116 requires 1/2 < L < 1");
    require(M > 0 && M < 1, status::domain, "p_116 requires 0 < M < 1");
    require(L + 2 * M < 1, status::domain, "p_116 requires L + 2M < 1");
    rational first = L * (2 * L - 1) / (4 * (2 * L + M));
    rational second = L * (1 - L - 2 * M) / (2 * (1 - L - M));
    return std::min(first, second);
}

int theorem1_branch_exact(const rational &L, const rational &p) {
    require(p > 0 && p < 1, status::domain, "p must lie in (0,1)");
    require(L > p, status::domain, "L must exceed p");
    if (L >= 1 && p <= rational(1, 3) && a1_exact(L, p) >= 0)
        return 1;
    if (L < 1 && p <= L / 4 && a2_exact(L, p) >= 0)
        return 2;
    return 0;
}

} // namespace copson
