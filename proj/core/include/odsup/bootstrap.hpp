#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "odsup/hajek.hpp"

namespace odsup {

enum class BootstrapPath { Naive, Fast, Both };

struct BootstrapConfig {
    std::size_t replicates = 300;  // B
    double alpha = 0.05;
    std::uint64_t seed = 0;
    BootstrapPath path = BootstrapPath::Fast;
    // Off by default: p-value (1 + #{That >= T}) / (B + 1) instead of the
    // plain indicator average.
    bool plus_one_correction = false;
    unsigned threads = 1;
};

struct BootstrapResult {
    std::vector<double> statistics;  // That[b] in replicate order
    double critical_value = 0.0;
    double p_value = 1.0;
    std::uint64_t seed_used = 0;
};

// One bootstrapped statistic sqrt(n) * max_k |sum_i eps[i] a[i] nu°(i, k)|.
// The naive path evaluates the double (i, k) sum from the closed-form
// weights; it is the oracle the fast path is checked against.
double replicate_statistic_naive(std::span<const double> eps, const JackknifeTerms& terms);

// O(n) per replicate. With c_i = eps_i a_i, each of the two min-terms in nu
// splits at i = k:  sum_i c_i min(k,i) = sum_{i<=k} c_i i + k sum_{i>k} c_i,
// and the mirrored term is the same sum over reversed coefficients, so four
// prefix-sum arrays give every grid value in constant time.
double replicate_statistic_fast(std::span<const double> eps, const JackknifeTerms& terms);

// Dispatch by path; Both runs the two routes, verifies 1e-10 relative
// agreement, and returns the fast value (NumericError on mismatch).
double replicate_statistic(std::span<const double> eps, const JackknifeTerms& terms,
                           BootstrapPath path = BootstrapPath::Fast);

// Smallest t whose empirical CDF over the statistics reaches 1 - alpha, i.e.
// the ceil((1-alpha) B)-th smallest element, with the boundary resolved by
// direct CDF evaluation rather than floating-point ceil alone.
double critical_value(std::span<const double> statistics, double alpha);

// p = 1 - B^(-1) #{b : t_stat >= That[b]}; always a multiple of 1/B.
// With plus_one: (1 + #{b : That[b] >= t_stat}) / (B + 1).
double p_value_from(std::span<const double> statistics, double t_stat, bool plus_one = false);

// Full multiplier bootstrap: replicate b draws its n standard-normal
// multipliers from the dedicated counter-based substream (seed, b), so
// results are identical for any worker count or execution order.
BootstrapResult run_bootstrap(const JackknifeTerms& terms, double t_stat,
                              const BootstrapConfig& config);

}  // namespace odsup
