// weight_family.hpp - weight sequences lambda_n and partial sums Lambda_n.
//
// Four kinds: Unit (lambda_n = 1), PowerDiff (lambda_n = n^a - (n-1)^a with
// the closed form Lambda_n = n^a), PowerKernel (lambda_n = n^(a-1), Lambda
// via a cached compensated prefix sum), and Custom (user-supplied positive
// values). All operations are pure; the prefix cache grows behind a
// shared_mutex so concurrent readers are safe.
#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace copson {

enum class family_kind { unit, power_diff, power_kernel, custom };

struct sup_gap_result {
    double sup = 0.0;
    bool monotone = false; // scanned l_gap values were non-decreasing
    std::uint64_t argmax = 0; // first n attaining the max
};

class weight_family {
public:
    static weight_family make_unit();
    static weight_family make_power_diff(double alpha);   // alpha >= 1
    static weight_family make_power_kernel(double alpha); // alpha >= 1
    static weight_family make_custom(std::vector<double> values);

    // CLI spec string: "unit", "powerdiff:A", "powerkernel:A", "custom:PATH"
    // (PATH: text file, one positive decimal per line).
    static weight_family parse(const std::string &spec);

    family_kind kind() const { return kind_; }
    double alpha() const { return alpha_; }

    // Largest n usable with this family (finite only for Custom).
    std::uint64_t max_index() const;

    double lambda(std::uint64_t n) const;
    double Lambda(std::uint64_t n) const;

    // Lambda_{n+1}/lambda_{n+1} - Lambda_n/lambda_n.
    double l_gap(std::uint64_t n) const;

    // Max of l_gap over 1 <= n <= N with monotonicity flag and argmax.
    sup_gap_result sup_l_gap(std::uint64_t N) const;

    // Canonical spec string (round-trips through parse for non-custom kinds).
    std::string describe() const;

private:
    weight_family(family_kind kind, double alpha, std::vector<double> values);

    // Prefix sums for kinds without a closed form; grows on demand.
    double cached_prefix(std::uint64_t n) const;
    void grow_cache_locked(std::uint64_t n) const;

    family_kind kind_;
    double alpha_ = 1.0;
    std::vector<double> values_; // custom weights

    struct prefix_cache {
        std::vector<double> sums;        // sums[i] = Lambda_{i+1}
        double compensation = 0.0;       // Kahan carry for the next append
        mutable std::shared_mutex mutex;
    };
    std::shared_ptr<prefix_cache> cache_;
};

// Reads one positive decimal per line; blank lines and lines starting with
// '#' are skipped.
std::vector<double> read_positive_values(const std::string &path);

} // namespace copson
