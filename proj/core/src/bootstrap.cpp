#include "odsup/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "odsup/errors.hpp"
#include "odsup/parallel.hpp"
#include "odsup/rng.hpp"
#include "odsup/uprocess.hpp"

namespace odsup {

namespace {

void check_lengths(std::span<const double> eps, const JackknifeTerms& terms) {
    if (eps.size() != terms.n) {
        throw InputError("multiplier vector has length " + std::to_string(eps.size()) +
                         ", expected n = " + std::to_string(terms.n));
    }
    if (terms.n < 3) throw InputError("replicate_statistic needs n >= 3");
}

}  // namespace

double replicate_statistic_naive(std::span<const double> eps, const JackknifeTerms& terms) {
    check_lengths(eps, terms);
    const std::size_t n = terms.n;
    double best = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            v += eps[i] * terms.a[i] * nu_centered(n, i, k);
        }
        best = std::max(best, std::abs(v));
    }
    // k = 0 and k = n contribute 0: every nu° vanishes there.
    return std::sqrt(static_cast<double>(n)) * best;
}

double replicate_statistic_fast(std::span<const double> eps, const JackknifeTerms& terms) {
    check_lengths(eps, terms);
    const std::size_t n = terms.n;
    const double scale = 2.0 / (static_cast<double>(n) * static_cast<double>(n - 1));

    // Prefix sums over c_i = eps_i a_i (forward) and over the reversed
    // coefficients, weighted by index.
    std::vector<double> p0(n), p1(n), q0(n), q1(n);
    double run0 = 0.0, run1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = eps[i] * terms.a[i];
        run0 += c;
        run1 += c * static_cast<double>(i);
        p0[i] = run0;
        p1[i] = run1;
    }
    const double total = run0;
    run0 = 0.0;
    run1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = eps[n - 1 - i] * terms.a[n - 1 - i];
        run0 += c;
        run1 += c * static_cast<double>(i);
        q0[i] = run0;
        q1[i] = run1;
    }

    double best = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t cut = std::min(k, n - 1);
        const double kf = static_cast<double>(k);
        const double a_term = p1[cut] + kf * (total - p0[cut]);
        const double b_term = q1[cut] + kf * (total - q0[cut]);
        const double v = scale * (a_term + b_term) -
                         (2.0 / static_cast<double>(n)) * weight_fn(n, k) * total;
        best = std::max(best, std::abs(v));
    }
    return std::sqrt(static_cast<double>(n)) * best;
}

double replicate_statistic(std::span<const double> eps, const JackknifeTerms& terms,
                           BootstrapPath path) {
    switch (path) {
        case BootstrapPath::Naive:
            return replicate_statistic_naive(eps, terms);
        case BootstrapPath::Fast:
            return replicate_statistic_fast(eps, terms);
        case BootstrapPath::Both: {
            const double fast = replicate_statistic_fast(eps, terms);
            const double naive = replicate_statistic_naive(eps, terms);
            const double tol = 1e-10 * std::max({1.0, std::abs(fast), std::abs(naive)});
            if (std::abs(fast - naive) > tol) {
                throw NumericError("fast and naive bootstrap paths disagree: " +
                                   std::to_string(fast) + " vs " + std::to_string(naive));
            }
            return fast;
        }
    }
    throw ConfigError("unknown bootstrap path");
}

double critical_value(std::span<const double> statistics, double alpha) {
    if (statistics.empty()) throw InputError("critical_value needs at least one statistic");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0,1)");
    const std::size_t count = statistics.size();
    std::vector<double> sorted(statistics.begin(), statistics.end());
    std::sort(sorted.begin(), sorted.end());

    const double target = 1.0 - alpha;
    auto rank = static_cast<std::size_t>(
        std::ceil(target * static_cast<double>(count)));
    rank = std::clamp<std::size_t>(rank, 1, count);
    // Resolve the exact boundary by evaluating the empirical CDF directly.
    while (rank > 1 &&
           static_cast<double>(rank - 1) / static_cast<double>(count) >= target) {
        --rank;
    }
    while (rank < count &&
           static_cast<double>(rank) / static_cast<double>(count) < target) {
        ++rank;
    }
    return sorted[rank - 1];
}

double p_value_from(std::span<const double> statistics, double t_stat, bool plus_one) {
    if (statistics.empty()) throw InputError("p_value_from needs at least one statistic");
    if (plus_one) {
        std::size_t geq = 0;
        for (double s : statistics) geq += (s >= t_stat) ? 1 : 0;
        return static_cast<double>(1 + geq) / static_cast<double>(statistics.size() + 1);
    }
    std::size_t dominated = 0;
    for (double s : statistics) dominated += (t_stat >= s) ? 1 : 0;
    return 1.0 - static_cast<double>(dominated) / static_cast<double>(statistics.size());
}

BootstrapResult run_bootstrap(const JackknifeTerms& terms, double t_stat,
                              const BootstrapConfig& config) {
    if (config.replicates < 1) throw ConfigError("bootstrap needs B >= 1");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw ConfigError("alpha must lie in (0,1)");
    const std::size_t n = terms.n;

    BootstrapResult result;
    result.seed_used = config.seed;
    result.statistics.assign(config.replicates, 0.0);

    parallel_for(config.replicates, config.threads, [&](std::size_t b0, std::size_t b1) {
        std::vector<double> eps(n);
        for (std::size_t b = b0; b < b1; ++b) {
            rng::Stream stream(config.seed, b);
            for (std::size_t i = 0; i < n; ++i) eps[i] = stream.next_normal();
            result.statistics[b] = replicate_statistic(eps, terms, config.path);
        }
    });

    result.critical_value = critical_value(result.statistics, config.alpha);
    result.p_value = p_value_from(result.statistics, t_stat, config.plus_one_correction);
    return result;
}

}  // namespace odsup
