#include "weight_family.hpp"

#include "errors.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <mutex>
#include <limits>

namespace copson {

namespace {

double checked_finite(double v, const char *what, std::uint64_t n) {
    if (!std::isfinite(v))
        fail(status::nonfinite, std::string(what) + " is non-finite at n=" +
                                    std::to_string(n));
    return v;
}

} // namespace

weight_family::weight_family(family_kind kind, double alpha,
                             std::vector<double> values)
    : kind_(kind), alpha_(alpha), values_(std::move(values)) {
    if (kind_ == family_kind::power_kernel || kind_ == family_kind::custom)
        cache_ = std::make_shared<prefix_cache>();
}

weight_family weight_family::make_unit() {
    return weight_family(family_kind::unit, 1.0, {});
}

weight_family weight_family::make_power_diff(double alpha) {
    require(std::isfinite(alpha) && alpha >= 1.0, status::domain,
            "powerdiff requires alpha >= 1");
    return weight_family(family_kind::power_diff, alpha, {});
}

weight_family weight_family::make_power_kernel(double alpha) {
    require(std::isfinite(alpha) && alpha >= 1.0, status::domain,
            "powerkernel requires alpha >= 1");
    return weight_family(family_kind::power_kernel, alpha, {});
}

weight_family weight_family::make_custom(std::vector<double> values) {
    require(!values.empty(), status::invalid_argument,
            "custom family needs at least one weight");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(std::isfinite(values[i]) && values[i] > 0.0))
            fail(status::domain, "custom weight at line " + std::to_string(i + 1) +
                                     " must be a positive finite number");
    }
    return weight_family(family_kind::custom, 1.0, std::move(values));
}

weight_family weight_family::parse(const std::string &spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    if (head == "unit") {
        require(colon == std::string::npos, status::invalid_argument,
                "family 'unit' takes no parameter");
        return make_unit();
    }
    if (head == "powerdiff" || head == "powerkernel") {
        require(colon != std::string::npos && colon + 1 < spec.size(),
                status::invalid_argument,
                "family '" + head + "' needs ':ALPHA'");
        std::string arg = spec.substr(colon + 1);
        double alpha = 0.0;
        auto res = std::from_chars(arg.data(), arg.data() + arg.size(), alpha);
        require(res.ec == std::errc() && res.ptr == arg.data() + arg.size(),
                status::parse, "cannot parse alpha '" + arg + "'");
        return head == "powerdiff" ? make_power_diff(alpha)
                                   : make_power_kernel(alpha);
    }
    if (head == "custom") {
        require(colon != std::string::npos && colon + 1 < spec.size(),
                status::invalid_argument, "family 'custom' needs ':PATH'");
        return make_custom(read_positive_values(spec.substr(colon + 1)));
    }
    fail(status::invalid_argument, "unknown family spec '" + spec + "'");
}

std::uint64_t weight_family::max_index() const {
    if (kind_ == family_kind::custom)
        return values_.size();
    return std::numeric_limits<std::uint64_t>::max();
}

double weight_family::lambda(std::uint64_t n) const {
    require(n >= 1, status::index, "index n must be >= 1");
    switch (kind_) {
    case family_kind::unit:
        return 1.0;
    case family_kind::power_diff: {
        double nn = static_cast<double>(n);
        double v = std::pow(nn, alpha_) - std::pow(nn - 1.0, alpha_);
        return checked_finite(v, "lambda", n);
    }
    case family_kind::power_kernel: {
        double v = std::pow(static_cast<double>(n), alpha_ - 1.0);
        return checked_finite(v, "lambda", n);
    }
    case family_kind::custom:
        if (n > values_.size())
            fail(status::index, "custom family has " +
                                    std::to_string(values_.size()) +
                                    " weights, index " + std::to_string(n) +
                                    " out of range");
        return values_[n - 1];
    }
    fail(status::internal, "unreachable family kind");
}

double weight_family::Lambda(std::uint64_t n) const {
    require(n >= 1, status::index, "index n must be >= 1");
    switch (kind_) {
    case family_kind::unit:
        return static_cast<double>(n);
    case family_kind::power_diff:
        // Telescoping closed form.
        return checked_finite(std::pow(static_cast<double>(n), alpha_),
                              "Lambda", n);
    case family_kind::power_kernel:
    case family_kind::custom:
        return cached_prefix(n);
    }
    fail(status::internal, "unreachable family kind");
}

double weight_family::cached_prefix(std::uint64_t n) const {
    if (kind_ == family_kind::custom && n > values_.size())
        fail(status::index, "custom family has " +
                                std::to_string(values_.size()) +
                                " weights, index " + std::to_string(n) +
                                " out of range");
    {
        std::shared_lock lock(cache_->mutex);
        if (n <= cache_->sums.size())
            return cache_->sums[n - 1];
    }
    std::unique_lock lock(cache_->mutex);
    grow_cache_locked(n);
    return cache_->sums[n - 1];
}

void weight_family::grow_cache_locked(std::uint64_t n) const {
    auto &c = *cache_;
    if (n <= c.sums.size())
        return;
    // Grow geometrically so repeated single-step queries stay O(1) amortized.
    std::uint64_t target = std::max<std::uint64_t>(n, c.sums.size() * 2);
    if (kind_ == family_kind::custom)
        target = std::min<std::uint64_t>(target, values_.size());
    c.sums.reserve(target);
    double sum = c.sums.empty() ? 0.0 : c.sums.back();
    double comp = c.compensation;
    for (std::uint64_t i = c.sums.size() + 1; i <= target; ++i) {
        // Kahan compensated accumulation: the terms are all positive and the
        // running sum dwarfs late terms, so naive addition would lose the
        // low-order mass that the sup_l_gap tolerance (1e-9) cares about.
        double term = (kind_ == family_kind::custom)
                          ? values_[i - 1]
                          : std::pow(static_cast<double>(i), alpha_ - 1.0);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        checked_finite(sum, "Lambda", i);
        c.sums.push_back(sum);
    }
    c.compensation = comp;
}

double weight_family::l_gap(std::uint64_t n) const {
    require(n >= 1, status::index, "index n must be >= 1");
    double num1 = Lambda(n + 1), den1 = lambda(n + 1);
    double num0 = Lambda(n), den0 = lambda(n);
    return checked_finite(num1 / den1 - num0 / den0, "l_gap", n);
}

sup_gap_result weight_family::sup_l_gap(std::uint64_t N) const {
    require(N >= 2, status::domain, "sup_l_gap requires N >= 2");
    require(max_index() >= N + 1, status::index,
            "family too short for horizon N");
    sup_gap_result r;
    r.monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (std::uint64_t n = 1; n <= N; ++n) {
        double g = l_gap(n);
        if (n == 1 || g > r.sup) {
            r.sup = g;
            r.argmax = n;
        }
        // Slack absorbs float plateaus in analytically monotone sequences.
        if (n > 1 && g < prev - 1e-12 * std::max(1.0, std::fabs(prev)))
            r.monotone = false;
        prev = g;
    }
    return r;
}

namespace {

// Shortest round-trip formatting, matching the convention used for all
// numeric output.
std::string format_alpha(double a) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), a);
    return std::string(buf, res.ptr);
}

} // namespace

std::string weight_family::describe() const {
    switch (kind_) {
    case family_kind::unit:
        return "unit";
    case family_kind::power_diff:
        return "powerdiff:" + format_alpha(alpha_);
    case family_kind::power_kernel:
        return "powerkernel:" + format_alpha(alpha_);
    case family_kind::custom:
        return "custom[" + std::to_string(values_.size()) + "]";
    }
    return "?";
}

std::vector<double> read_positive_values(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        fail(status::io, "cannot open '" + path + "'");
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Trim whitespace; skip blanks and comment lines.
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
        if (!(std::isfinite(v) && v > 0.0))
            fail(status::domain, path + ":" + std::to_string(lineno) +
                                     ": weights must be positive and finite");
        values.push_back(v);
    }
    if (values.empty())
        fail(status::parse, path + ": no values found");
    return values;
}

} // namespace copson
