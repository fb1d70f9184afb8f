#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "odsup/observations.hpp"

namespace odsup {

enum class KernelKind {
    ExpNegDistance,    // exp(-||x-y||), vector data
    InverseQuartic,    // 1/(||x-y||^4 + 1), vector data
    Constant,          // 1 for every pair; degenerate diagnostic kernel
    PrecomputedKernel, // reads a kernel matrix directly
    KernelOfDistance,  // scalar transform applied to a distance matrix
};

enum class DistanceTransform { ExpNeg, InverseQuartic };

// Symmetric pairwise kernel h(x, y). The built-ins are bounded in (0,1] and
// exactly symmetric; matrix-backed kernels are symmetric because
// ObservationSet symmetrizes on construction.
class Kernel {
public:
    static Kernel expneg() { return Kernel(KernelKind::ExpNegDistance); }
    static Kernel invquartic() { return Kernel(KernelKind::InverseQuartic); }
    static Kernel constant() { return Kernel(KernelKind::Constant); }
    static Kernel precomputed() { return Kernel(KernelKind::PrecomputedKernel); }
    static Kernel of_distance(DistanceTransform t) {
        Kernel k(KernelKind::KernelOfDistance);
        k.transform_ = t;
        return k;
    }

    KernelKind kind() const noexcept { return kind_; }
    DistanceTransform transform() const noexcept { return transform_; }
    std::string describe() const;

private:
    explicit Kernel(KernelKind kind) : kind_(kind) {}
    KernelKind kind_;
    DistanceTransform transform_ = DistanceTransform::ExpNeg;
};

// h(X_i, X_j) for i != j (the statistic never evaluates the diagonal).
// Throws std::out_of_range on bad indices, ConfigError when the kernel kind
// does not match the data kind, NumericError on a non-finite value.
double eval_pair(const Kernel& kernel, const ObservationSet& obs, std::size_t i, std::size_t j);

// Kernel sums regrouped by index lag d = |i - j|:
//   by_lag[d] = sum_{i} h(X_i, X_{i+d}),  d = 1 .. n-1   (by_lag[0] = 0)
//   row[i]    = sum_{j != i} h(X_i, X_j)
// Exactly n(n-1)/2 kernel evaluations; each unordered pair contributes to one
// lag and two rows. These are the only O(n) summaries the test needs; the
// full n-by-n kernel matrix is never materialized for vector data.
struct LagSums {
    std::size_t n = 0;
    std::vector<double> by_lag;
    std::vector<double> row;
};

// Lags are processed in fixed-size blocks and row partials are folded in
// block order, so the result is bit-identical for every thread count.
LagSums lag_sums(const Kernel& kernel, const ObservationSet& obs, unsigned threads = 1);

}  // namespace odsup
