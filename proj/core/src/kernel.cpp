#include "odsup/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "odsup/errors.hpp"
#include "odsup/parallel.hpp"

namespace odsup {

namespace {

// Lags per work block. Fixed (never derived from the thread count) so that
// the block-ordered reduction of row partials gives identical bits no matter
// how many workers run.
constexpr std::size_t kLagBlock = 64;

double euclidean(const ObservationSet& obs, std::size_t i, std::size_t j) {
    const auto xi = obs.row(i);
    const auto xj = obs.row(j);
    double ss = 0.0;
    for (std::size_t d = 0; d < xi.size(); ++d) {
        const double diff = xi[d] - xj[d];
        ss += diff * diff;
    }
    return std::sqrt(ss);
}

double transform_distance(DistanceTransform t, double d) {
    switch (t) {
        case DistanceTransform::ExpNeg:
            return std::exp(-d);
        case DistanceTransform::InverseQuartic: {
            const double d2 = d * d;
            return 1.0 / (d2 * d2 + 1.0);
        }
    }
    return 0.0;  // unreachable
}

void check_compat(const Kernel& kernel, const ObservationSet& obs) {
    const DataKind data = obs.kind();
    switch (kernel.kind()) {
        case KernelKind::ExpNegDistance:
        case KernelKind::InverseQuartic:
            if (data != DataKind::Vectors) {
                throw ConfigError("kernel '" + kernel.describe() + "' requires vector data");
            }
            return;
        case KernelKind::Constant:
            return;  // reads no data
        case KernelKind::PrecomputedKernel:
            if (data != DataKind::KernelMatrix) {
                throw ConfigError("precomputed kernel requires a kernel matrix");
            }
            return;
        case KernelKind::KernelOfDistance:
            if (data != DataKind::DistanceMatrix) {
                throw ConfigError("distance-transform kernel requires a distance matrix");
            }
            return;
    }
}

double require_finite(double v, std::size_t i, std::size_t j) {
    if (!std::isfinite(v)) {
        throw NumericError("non-finite kernel value at pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
    return v;
}

// Blocked lag loop shared by all kernel kinds. Eval must be a pure function
// of (i, j).
template <typename Eval>
LagSums lag_sums_impl(Eval&& eval, std::size_t n, unsigned threads) {
    LagSums out;
    out.n = n;
    out.by_lag.assign(n, 0.0);
    out.row.assign(n, 0.0);

    const std::size_t blocks = (n - 1 + kLagBlock - 1) / kLagBlock;
    const std::size_t wave = std::max<std::size_t>(resolve_threads(threads), 1);
    std::vector<std::vector<double>> partial(std::min(wave, blocks));
    for (auto& p : partial) p.assign(n, 0.0);

    for (std::size_t wave_begin = 0; wave_begin < blocks; wave_begin += partial.size()) {
        const std::size_t wave_count = std::min(partial.size(), blocks - wave_begin);
        parallel_for(wave_count, threads, [&](std::size_t s0, std::size_t s1) {
            for (std::size_t s = s0; s < s1; ++s) {
                auto& r = partial[s];
                std::fill(r.begin(), r.end(), 0.0);
                const std::size_t d_begin = 1 + (wave_begin + s) * kLagBlock;
                const std::size_t d_end = std::min(n, d_begin + kLagBlock);
                for (std::size_t d = d_begin; d < d_end; ++d) {
                    double lag_total = 0.0;
                    for (std::size_t i = 0; i + d < n; ++i) {
                        const double v = require_finite(eval(i, i + d), i, i + d);
                        lag_total += v;
                        r[i] += v;
                        r[i + d] += v;
                    }
                    out.by_lag[d] = lag_total;
                }
            }
        });
        // Fold row partials strictly in block order.
        for (std::size_t s = 0; s < wave_count; ++s) {
            const auto& r = partial[s];
            for (std::size_t i = 0; i < n; ++i) out.row[i] += r[i];
        }
    }
    return out;
}

}  // namespace

std::string Kernel::describe() const {
    switch (kind_) {
        case KernelKind::ExpNegDistance:
            return "expneg";
        case KernelKind::InverseQuartic:
            return "invquartic";
        case KernelKind::Constant:
            return "const";
        case KernelKind::PrecomputedKernel:
            return "precomputed";
        case KernelKind::KernelOfDistance:
            return transform_ == DistanceTransform::ExpNeg ? "expneg(distance)"
                                                           : "invquartic(distance)";
    }
    return "?";
}

double eval_pair(const Kernel& kernel, const ObservationSet& obs, std::size_t i, std::size_t j) {
    const std::size_t n = obs.size();
    if (i >= n || j >= n || i == j) {
        throw std::out_of_range("eval_pair needs distinct indices below n");
    }
    check_compat(kernel, obs);
    double v = 0.0;
    switch (kernel.kind()) {
        case KernelKind::ExpNegDistance:
            v = std::exp(-euclidean(obs, i, j));
            break;
        case KernelKind::InverseQuartic:
            v = transform_distance(DistanceTransform::InverseQuartic, euclidean(obs, i, j));
            break;
        case KernelKind::Constant:
            v = 1.0;
            break;
        case KernelKind::PrecomputedKernel:
            v = obs.matrix_at(i, j);
            break;
        case KernelKind::KernelOfDistance:
            v = transform_distance(kernel.transform(), obs.matrix_at(i, j));
            break;
    }
    return require_finite(v, i, j);
}

LagSums lag_sums(const Kernel& kernel, const ObservationSet& obs, unsigned threads) {
    check_compat(kernel, obs);
    const std::size_t n = obs.size();
    switch (kernel.kind()) {
        case KernelKind::ExpNegDistance:
            return lag_sums_impl(
                [&obs](std::size_t i, std::size_t j) { return std::exp(-euclidean(obs, i, j)); }, n,
                threads);
        case KernelKind::InverseQuartic:
            return lag_sums_impl(
                [&obs](std::size_t i, std::size_t j) {
                    return transform_distance(DistanceTransform::InverseQuartic,
                                              euclidean(obs, i, j));
                },
                n, threads);
        case KernelKind::Constant:
            return lag_sums_impl([](std::size_t, std::size_t) { return 1.0; }, n, threads);
        case KernelKind::PrecomputedKernel:
            return lag_sums_impl(
                [&obs](std::size_t i, std::size_t j) { return obs.matrix_at(i, j); }, n, threads);
        case KernelKind::KernelOfDistance: {
            const DistanceTransform t = kernel.transform();
            return lag_sums_impl(
                [&obs, t](std::size_t i, std::size_t j) {
                    return transform_distance(t, obs.matrix_at(i, j));
                },
                n, threads);
        }
    }
    throw ConfigError("unknown kernel kind");
}

}  // namespace odsup
