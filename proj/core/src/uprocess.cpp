#include "odsup/uprocess.hpp"

#include <cmath>
#include <stdexcept>

#include "odsup/errors.hpp"

namespace odsup {

double weight_fn(std::size_t n, std::size_t k) {
    if (n < 3) throw InputError("weight_fn needs n >= 3");
    if (k > n) throw std::out_of_range("grid index exceeds n");
    const auto num = static_cast<double>(k) * static_cast<double>(2 * n - k - 1);
    const auto den = static_cast<double>(n) * static_cast<double>(n - 1);
    return num / den;
}

UProcessGrid build_uprocess(const LagSums& lags) {
    const std::size_t n = lags.n;
    if (n < 3) throw InputError("build_uprocess needs n >= 3");

    UProcessGrid grid;
    grid.n = n;
    grid.values.assign(n + 1, 0.0);
    grid.weight.assign(n + 1, 0.0);
    grid.centered.assign(n + 1, 0.0);

    const double denom = static_cast<double>(n) * static_cast<double>(n - 1);

    // Kahan-compensated cumulative sum over lags d = 1..n-1. The value is
    // written as (2 acc)/denom, a single rounding, so that a constant kernel
    // reproduces weight_fn bit-for-bit and the centered process is exactly 0.
    double acc = 0.0;
    double comp = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k < n) {
            const double y = lags.by_lag[k] - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        grid.values[k] = (2.0 * acc) / denom;
        grid.weight[k] = weight_fn(n, k);
    }

    const double total = grid.values[n];
    double best = 0.0;
    std::size_t best_k = 1;
    for (std::size_t k = 1; k < n; ++k) {
        grid.centered[k] = grid.values[k] - grid.weight[k] * total;
        const double mag = std::abs(grid.centered[k]);
        if (mag > best) {
            best = mag;
            best_k = k;
        }
    }
    // centered[0] and centered[n] are identically zero: u_n(0) = 0, u_n(1) = 1.
    grid.statistic = std::sqrt(static_cast<double>(n)) * best;
    grid.argmax_k = best_k;
    return grid;
}

double brute_force_uprocess(const Kernel& kernel, const ObservationSet& obs, double t) {
    if (!(t >= 0.0) || !(t <= 1.0)) {
        throw std::invalid_argument("t must lie in [0,1]");
    }
    const std::size_t n = obs.size();
    const long double x = static_cast<long double>(n) * static_cast<long double>(t);
    auto max_lag = static_cast<std::size_t>(std::floor(static_cast<double>(x)));
    // Snap up when n*t sits a hair below an integer (t = k/n rounded down).
    if (static_cast<long double>(max_lag + 1) - x < 1e-9L) ++max_lag;
    if (max_lag > n) max_lag = n;

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && j - i <= max_lag; ++j) {
            sum += eval_pair(kernel, obs, i, j);
        }
    }
    return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace odsup
