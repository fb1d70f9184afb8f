#pragma once

#include <cstddef>
#include <vector>

#include "odsup/kernel.hpp"

namespace odsup {

// The off-diagonal sequential U-process and derived statistic, evaluated on
// the jump grid t = k/n, k = 0..n. Both U_n and the weight u_n are
// right-continuous step functions that jump only at these points, so the
// supremum over [0,1] equals the maximum over the grid exactly; no finer
// evaluation is ever needed.
struct UProcessGrid {
    std::size_t n = 0;
    std::vector<double> values;    // U_n(k/n)
    std::vector<double> weight;    // u_n(k/n)
    std::vector<double> centered;  // U_n(k/n) - u_n(k/n) * U_n(1); zero at both endpoints
    double statistic = 0.0;        // T_n = sqrt(n) * max_k |centered[k]|
    std::size_t argmax_k = 0;      // smallest k in 1..n-1 attaining the max
};

// u_n(k/n) = k(2n - k - 1) / (n^2 - n). Exact rational evaluated in double;
// both numerator and denominator are exactly representable for any practical n.
double weight_fn(std::size_t n, std::size_t k);

// Cumulative lag sums -> U-process grid. The cumulative sum over lags uses
// compensated (Kahan) summation; all grid indexing is integer k, never a
// floating-point floor of n*t.
UProcessGrid build_uprocess(const LagSums& lags);

// Literal double sum of the defining formula at an arbitrary t in [0,1]:
//   (n^2 - n)^(-1) * sum over ordered pairs with 0 < |i-j| <= n*t.
// O(n^2) per call; kept as the independent oracle for build_uprocess.
// A value of n*t within 1e-9 below an integer is treated as that integer,
// so grid points survive the rounding of t = k/n.
double brute_force_uprocess(const Kernel& kernel, const ObservationSet& obs, double t);

}  // namespace odsup
