#include "odsup/hajek.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "odsup/errors.hpp"

namespace odsup {

double nu(std::size_t n, std::size_t i, std::size_t k) {
    if (n < 3) throw InputError("nu needs n >= 3");
    if (i >= n) throw std::out_of_range("observation index out of range");
    if (k > n) throw std::out_of_range("grid index exceeds n");
    const double left = static_cast<double>(std::min(k, i));
    const double right = static_cast<double>(std::min(k, n - 1 - i));
    return 2.0 * (left + right) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double nu_centered(std::size_t n, std::size_t i, std::size_t k) {
    return nu(n, i, k) - (2.0 / static_cast<double>(n)) * weight_fn(n, k);
}

JackknifeTerms jackknife_terms(const LagSums& lags, const UProcessGrid& grid) {
    if (lags.n != grid.n) throw InputError("lag sums and grid disagree on n");
    const std::size_t n = lags.n;
    JackknifeTerms terms;
    terms.n = n;
    terms.a.resize(n);
    const double total = grid.values[n];
    const double inv = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        terms.a[i] = lags.row[i] * inv - total;
    }
#ifndef NDEBUG
    // sum_i a_i = 0 follows from sum_i r_i = (n^2 - n) U_n(1).
    double sum = 0.0, mass = 0.0;
    for (double a : terms.a) {
        sum += a;
        mass += std::abs(a);
    }
    assert(std::abs(sum) <= 1e-10 * std::max(mass, 1e-30));
#endif
    return terms;
}

}  // namespace odsup
