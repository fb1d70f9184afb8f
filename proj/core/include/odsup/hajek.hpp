#pragma once

#include <cstddef>
#include <vector>

#include "odsup/kernel.hpp"
#include "odsup/uprocess.hpp"

namespace odsup {

// Projection weight of observation i (zero-based) on the U-process at grid
// index k:
//   nu(n, i, k) = 2 (n^2 - n)^(-1) { min(k, i) + min(k, n-1-i) }
// This equals (n^2-n)^(-1) times twice the number of partners j within lag k
// of i. Identities: sum_i nu = 2 u_n(k/n); nu(n, i, n) = 2/n for every i.
double nu(std::size_t n, std::size_t i, std::size_t k);

// Empirically centered weight: nu(n, i, k) - (2/n) u_n(k/n); sums to zero
// over i at every k, and vanishes at k = 0 and k = n.
double nu_centered(std::size_t n, std::size_t i, std::size_t k);

// On-demand view over the weights; the n-by-n table is never materialized.
struct ProjectionWeights {
    std::size_t n = 0;
    double operator()(std::size_t i, std::size_t k) const { return nu(n, i, k); }
    double centered(std::size_t i, std::size_t k) const { return nu_centered(n, i, k); }
};

// Jackknife plug-in estimates of the projected kernel, one per observation:
//   a[i] = row[i] / (n-1) - U_n(1)
// These sum to zero (up to rounding) because sum_i row[i] = (n^2-n) U_n(1).
struct JackknifeTerms {
    std::size_t n = 0;
    std::vector<double> a;
};

JackknifeTerms jackknife_terms(const LagSums& lags, const UProcessGrid& grid);

}  // namespace odsup
