#include "sequence_eval.hpp"

#include "errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace copson {

void require_p_in_01(double p) {
    require(std::isfinite(p) && p > 0.0 && p < 1.0, status::domain,
            "p must lie in (0,1)");
}

void require_L_gt_p(double L, double p) {
    require(std::isfinite(L) && L > p, status::domain, "L must exceed p");
}

truncated_sequence::truncated_sequence(std::vector<double> values)
    : values_(std::move(values)) {
    require(!values_.empty(), status::invalid_argument,
            "sequence must have at least one entry");
    bool any_positive = false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double v = values_[i];
        if (!std::isfinite(v) || v < 0.0)
            fail(status::domain, "sequence entry " + std::to_string(i + 1) +
                                     " must be finite and non-negative");
        any_positive = any_positive || v > 0.0;
    }
    require(any_positive, status::domain,
            "sequence needs at least one positive entry");
}

truncated_sequence truncated_sequence::from_file(const std::string &path) {
    // Same line format as the family file reader (one decimal per line,
    // '#' comments) but zeros are permitted; the constructor validates.
    std::vector<double> values;
    std::ifstream in(path);
    if (!in)
        fail(status::io, "cannot open '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto last = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(first, last - first + 1);
        double v = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            fail(status::parse, path + ":" + std::to_string(lineno) +
                                    ": cannot parse '" + tok + "'");
        values.push_back(v);
    }
    if (values.empty())
        fail(status::parse, path + ": no values found");
    return truncated_sequence(std::move(values));
}

double copson_lhs(const weight_family &family, const truncated_sequence &x,
                  double p) {
    require_p_in_01(p);
    const auto &v = x.values();
    const std::size_t N = v.size();
    require(family.max_index() >= N, status::index,
            "family too short for this sequence");
    // Backward pass: S_n = sum_{k=n..N} lambda_k x_k. All terms are
    // non-negative, so plain accumulation is numerically benign.
    std::vector<double> tail(N);
    double s = 0.0;
    for (std::size_t i = N; i-- > 0;) {
        s += family.lambda(i + 1) * v[i];
        tail[i] = s;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        double ratio = tail[i] / family.Lambda(i + 1);
        // 0^p = 0 by continuous extension (std::pow already honors this).
        total += std::pow(ratio, p);
    }
    require(std::isfinite(total), status::nonfinite,
            "left-hand side overflowed");
    return total;
}

double copson_lhs_naive(const weight_family &family,
                        const truncated_sequence &x, double p) {
    require_p_in_01(p);
    const auto &v = x.values();
    const std::size_t N = v.size();
    double total = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        double inner = 0.0;
        for (std::size_t k = n; k <= N; ++k)
            inner += family.lambda(k) * v[k - 1];
        total += std::pow(inner / family.Lambda(n), p);
    }
    return total;
}

namespace {

double power_sum(const std::vector<double> &v, double p) {
    double total = 0.0;
    for (double e : v)
        total += std::pow(e, p);
    return total;
}

} // namespace

double ratio_functional(const weight_family &family,
                        const truncated_sequence &x, double p) {
    double num = copson_lhs(family, x, p);
    double den = power_sum(x.values(), p);
    // den > 0 by the not-all-zero invariant.
    return num / den;
}

double verify_margin(const weight_family &family, const truncated_sequence &x,
                     double p, double L) {
    require_L_gt_p(L, p);
    return ratio_functional(family, x, p) - std::pow(p / (L - p), p);
}

dual_sides dual_evaluate(const weight_family &family,
                         const truncated_sequence &x, double p, double L) {
    require_p_in_01(p);
    require_L_gt_p(L, p);
    const auto &v = x.values();
    const std::size_t N = v.size();
    require(family.max_index() >= N, status::index,
            "family too short for this sequence");
    for (std::size_t i = 0; i < N; ++i)
        require(v[i] > 0.0, status::domain,
                "dual form requires strictly positive entries (entry " +
                    std::to_string(i + 1) + " is not)");
    const double q = p / (p - 1.0);
    double head = 0.0; // sum_{k<=n} x_k / Lambda_k
    dual_sides out{0.0, 0.0};
    double xq_sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        head += v[n - 1] / family.Lambda(n);
        out.lhs += std::pow(family.lambda(n) * head, q);
        xq_sum += std::pow(v[n - 1], q);
    }
    out.rhs = std::pow(p / (L - p), q) * xq_sum;
    require(std::isfinite(out.lhs) && std::isfinite(out.rhs),
            status::nonfinite, "dual evaluation overflowed");
    return out;
}

} // namespace copson
