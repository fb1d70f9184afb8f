#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "odsup/observations.hpp"

// |a - b| <= tol * max(1, |a|, |b|). Mixed absolute/relative comparison used
// throughout: relative on large values, absolute near zero.
inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Deterministic scalar sample via std::mt19937_64 — deliberately a different
// generator from the library's own, so RNG tests never test themselves.
inline std::vector<double> random_vector(std::uint64_t seed, std::size_t count,
                                         double lo = -2.0, double hi = 2.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(count);
    for (double& v : out) v = dist(gen);
    return out;
}

inline std::vector<double> random_normal_vector(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> out(count);
    for (double& v : out) v = dist(gen);
    return out;
}

inline odsup::ObservationSet random_observations(std::uint64_t seed, std::size_t n,
                                                 std::size_t p) {
    return odsup::ObservationSet::vectors(random_normal_vector(seed, n * p), n, p);
}
