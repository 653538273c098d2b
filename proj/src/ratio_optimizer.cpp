// ratio_optimizer.cpp - log-space evaluation of the ratio functional and
// the estimators built on it.
#include "ratio_optimizer.hpp"

#include "errors.hpp"
#include "sequence_eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace copson {

namespace {

// log(sum exp(a_i)) over a non-empty vector; tolerates -inf entries.
double log_sum_exp(const std::vector<double> &a) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : a)
        m = std::max(m, v);
    if (!std::isfinite(m))
        return m; // all -inf: empty sum
    double acc = 0.0;
    for (double v : a)
        acc += std::exp(v - m);
    return m + std::log(acc);
}

void require_t_vector(const std::vector<double> &t) {
    require(!t.empty(), status::invalid_argument, "sequence must be non-empty");
    for (std::size_t i = 0; i < t.size(); ++i)
        require(!std::isnan(t[i]), status::nonfinite,
                "log-sequence entry is NaN at n = " + std::to_string(i + 1));
}

} // namespace

std::vector<double> log_tail_sums(const weight_family &family,
                                  const std::vector<double> &t) {
    require_t_vector(t);
    const std::size_t N = t.size();
    std::vector<double> out(N);

    // S_n = e^{m_n} R_n with m_n = max_{k>=n} t_k. Every term of R_n is
    // lambda_k e^{t_k - m_n} <= lambda_k, so R_n <= Lambda_N and never
    // overflows even when the raw x_k would underflow.
    double m = t[N - 1];
    double R = family.lambda(N);
    out[N - 1] = m + std::log(R);
    for (std::size_t i = N - 1; i-- > 0;) {
        const double m_next = m;
        m = std::max(t[i], m_next);
        R = family.lambda(i + 1) * std::exp(t[i] - m) + R * std::exp(m_next - m);
        out[i] = m + std::log(R);
    }
    return out;
}

namespace {

// Shared numerator/denominator pass: log F = log sum_n (S_n/Lambda_n)^p
// and log G = log sum_n x_n^p, with log S precomputed.
void log_F_and_G(const weight_family &family, const std::vector<double> &t,
                 double p, const std::vector<double> &log_S,
                 std::vector<double> &log_Lam, double &log_F, double &log_G) {
    const std::size_t N = t.size();
    log_Lam.resize(N);
    std::vector<double> a(N), b(N);
    for (std::size_t i = 0; i < N; ++i) {
        log_Lam[i] = std::log(family.Lambda(i + 1));
        a[i] = p * (log_S[i] - log_Lam[i]);
        b[i] = p * t[i];
    }
    log_F = log_sum_exp(a);
    log_G = log_sum_exp(b);
    require(std::isfinite(log_F) && std::isfinite(log_G), status::nonfinite,
            "ratio evaluation overflowed");
}

} // namespace

double log_ratio(const weight_family &family, const std::vector<double> &t,
                 double p) {
    require_p_in_01(p);
    const std::vector<double> log_S = log_tail_sums(family, t);
    std::vector<double> log_Lam;
    double log_F, log_G;
    log_F_and_G(family, t, p, log_S, log_Lam, log_F, log_G);
    return log_F - log_G;
}

std::vector<double> log_ratio_gradient(const weight_family &family,
                                       const std::vector<double> &t, double p,
                                       double *value_out) {
    require_p_in_01(p);
    const std::vector<double> log_S = log_tail_sums(family, t);
    const std::size_t N = t.size();

    std::vector<double> log_Lam;
    double log_F, log_G;
    log_F_and_G(family, t, p, log_S, log_Lam, log_F, log_G);
    if (value_out)
        *value_out = log_F - log_G;

    // C_j = sum_{n<=j} S_n^{p-1} Lambda_n^{-p}, accumulated as a prefix
    // log-sum-exp with a running max.
    std::vector<double> g(N);
    double Mc = -std::numeric_limits<double>::infinity();
    double Pc = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        const double c = (p - 1.0) * log_S[j] - p * log_Lam[j];
        if (c > Mc) {
            Pc = Pc * std::exp(Mc - c) + 1.0;
            Mc = c;
        } else {
            Pc += std::exp(c - Mc);
        }
        const double log_C = Mc + std::log(Pc);
        // d/dt_j log F = p x_j lambda_j C_j / F; d/dt_j log G = p x_j^p / G.
        g[j] = p * (std::exp(t[j] + std::log(family.lambda(j + 1)) + log_C -
                             log_F) -
                    std::exp(p * t[j] - log_G));
        require(std::isfinite(g[j]), status::nonfinite,
                "gradient non-finite at n = " + std::to_string(j + 1));
    }
    return g;
}

double extremal_probe(const weight_family &family, double p, double eps,
                      std::uint64_t N) {
    require_p_in_01(p);
    require(std::isfinite(eps) && eps > 0.0, status::domain,
            "probe exponent offset must be > 0");
    require(N >= 1, status::invalid_argument, "probe horizon must be >= 1");
    std::vector<double> t(N);
    const double slope = -(1.0 / p + eps);
    for (std::uint64_t n = 1; n <= N; ++n)
        t[n - 1] = slope * std::log(static_cast<double>(n));
    return std::exp(log_ratio(family, t, p));
}

namespace {

// Shift t so that sum exp(p t_n) = 1; leaves the ratio unchanged and
// keeps every later exponential within double range.
void normalize_power_sum(std::vector<double> &t, double p) {
    std::vector<double> b(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        b[i] = p * t[i];
    const double shift = log_sum_exp(b) / p;
    for (double &v : t)
        v -= shift;
}

std::vector<double> initial_point(double p, const optimizer_config &cfg) {
    std::vector<double> t(cfg.N);
    switch (cfg.init) {
    case init_kind::uniform:
        std::fill(t.begin(), t.end(), 0.0);
        break;
    case init_kind::extremal: {
        const double slope = -(1.0 / p + cfg.eps_init);
        for (std::uint64_t n = 1; n <= cfg.N; ++n)
            t[n - 1] = slope * std::log(static_cast<double>(n));
        break;
    }
    case init_kind::random_start: {
        // Raw 53-bit draws so the stream is identical across platforms.
        std::mt19937_64 rng(cfg.seed);
        for (auto &v : t) {
            const double u =
                static_cast<double>(rng() >> 11) * 0x1.0p-53;
            v = -6.0 * u;
        }
        break;
    }
    }
    return t;
}

double projected_max_norm(const std::vector<double> &g) {
    double mean = 0.0;
    for (double v : g)
        mean += v;
    mean /= static_cast<double>(g.size());
    double worst = 0.0;
    for (double v : g)
        worst = std::max(worst, std::abs(v - mean));
    return worst;
}

} // namespace

ratio_estimate minimize_ratio(const weight_family &family, double p,
                              const optimizer_config &cfg) {
    require_p_in_01(p);
    require(cfg.N >= 1, status::invalid_argument,
            "truncation length must be >= 1");
    require(std::isfinite(cfg.step0) && cfg.step0 > 0.0,
            status::invalid_argument, "step size must be positive");
    require(std::isfinite(cfg.tol_stationarity) && cfg.tol_stationarity >= 0.0,
            status::invalid_argument,
            "stationarity tolerance must be non-negative");
    require(std::isfinite(cfg.eps_init) && cfg.eps_init >= 0.0,
            status::invalid_argument,
            "extremal-init exponent offset must be >= 0");

    std::vector<double> t = initial_point(p, cfg);
    normalize_power_sum(t, p);

    ratio_estimate est;
    double phi;
    std::vector<double> grad = log_ratio_gradient(family, t, p, &phi);
    est.trace.push_back(std::exp(phi));

    double best_phi = phi;
    std::vector<double> best_t = t;

    double step = cfg.step0;
    for (std::uint64_t iter = 0; iter < cfg.max_iters; ++iter) {
        const double residual = projected_max_norm(grad);
        if (residual <= cfg.tol_stationarity) {
            est.converged = true;
            break;
        }

        if (cfg.step_rule == step_rule_kind::fixed) {
            for (std::size_t i = 0; i < t.size(); ++i)
                t[i] -= cfg.step0 * grad[i];
            normalize_power_sum(t, p);
            grad = log_ratio_gradient(family, t, p, &phi);
        } else {
            // Halve until the log-ratio strictly decreases; the accepted
            // step seeds the next iteration doubled so the search can
            // recover after a cautious stretch.
            bool accepted = false;
            std::vector<double> candidate(t.size());
            for (int half = 0; half <= 50; ++half) {
                for (std::size_t i = 0; i < t.size(); ++i)
                    candidate[i] = t[i] - step * grad[i];
                normalize_power_sum(candidate, p);
                const double phi_cand = log_ratio(family, candidate, p);
                if (phi_cand < phi) {
                    t.swap(candidate);
                    phi = phi_cand;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted)
                break; // line search exhausted: report best visited
            step *= 2.0;
            grad = log_ratio_gradient(family, t, p, &phi);
        }

        ++est.iterations;
        est.trace.push_back(std::exp(phi));
        if (phi < best_phi) {
            best_phi = phi;
            best_t = t;
        }
    }

    // Report everything at the best visited point (it need not be the
    // final iterate when the search stopped on a failed line search).
    normalize_power_sum(best_t, p);
    double phi_best;
    const std::vector<double> grad_best =
        log_ratio_gradient(family, best_t, p, &phi_best);
    est.value = std::exp(phi_best);
    est.residual = projected_max_norm(grad_best);
    est.converged = est.converged || est.residual <= cfg.tol_stationarity;
    est.sequence.resize(best_t.size());
    for (std::size_t i = 0; i < best_t.size(); ++i)
        est.sequence[i] = std::exp(best_t[i]);
    return est;
}

double brute_force_oracle(const weight_family &family, double p,
                          std::uint64_t N, std::uint64_t resolution) {
    require_p_in_01(p);
    require(N >= 1 && N <= 3, status::invalid_argument,
            "brute force supports N in {1, 2, 3}");
    if (resolution == 0)
        resolution = 2000;
    require(resolution >= 2, status::invalid_argument,
            "grid resolution must be >= 2");

    const double inv_p = 1.0 / p;
    const auto R = static_cast<double>(resolution);
    auto grid_ratio = [&](std::vector<double> u) {
        for (double &v : u)
            v = v > 0.0 ? std::pow(v, inv_p) : 0.0;
        return ratio_functional(family, truncated_sequence(std::move(u)), p);
    };

    if (N == 1)
        return grid_ratio({1.0});

    double best = std::numeric_limits<double>::infinity();
    if (N == 2) {
        for (std::uint64_t i = 0; i <= resolution; ++i) {
            const double u1 = static_cast<double>(i) / R;
            const double u2 = static_cast<double>(resolution - i) / R;
            best = std::min(best, grid_ratio({u1, u2}));
        }
        return best;
    }
    for (std::uint64_t i = 0; i <= resolution; ++i) {
        for (std::uint64_t j = 0; j <= resolution - i; ++j) {
            const double u1 = static_cast<double>(i) / R;
            const double u2 = static_cast<double>(j) / R;
            const double u3 = static_cast<double>(resolution - i - j) / R;
            best = std::min(best, grid_ratio({u1, u2, u3}));
        }
    }
    return best;
}

double stationarity_residual(const weight_family &family,
                             const std::vector<double> &x, double p) {
    require(!x.empty(), status::invalid_argument, "sequence must be non-empty");
    std::vector<double> t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(std::isfinite(x[i]) && x[i] > 0.0, status::domain,
                "stationarity requires strictly positive entries (n = " +
                    std::to_string(i + 1) + ")");
        t[i] = std::log(x[i]);
    }
    return projected_max_norm(log_ratio_gradient(family, t, p));
}

} // namespace copson
