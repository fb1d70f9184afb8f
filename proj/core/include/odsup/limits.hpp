#pragma once

#include <cstddef>

namespace odsup::limits {

// Limit of the weight function: u_inf(t) = t(2 - t).
double u_inf(double t);

// Closed-form limit of n * sum_i nu(s) nu(t) on [0,1]^2. Symmetric in (s, t);
// with (s, t) sorted so s <= t:
//   s + t <= 1:  4 s (4t - 2t^2 - s t - s^2/3)
//   s + t  > 1:  4 { s (1 - s + 2t - t^2) - (1 - t)^3 / 3 }
// Continuous across the branch boundary; gamma(1,1) = 4 exactly.
// Used for validation and diagnostics only: the test itself never needs
// limit quantities.
double gamma(double s, double t);

// Centered variant: gamma(s,t) - 4 u_inf(s) u_inf(t); vanishes when either
// argument is 1.
double gamma_centered(double s, double t);

// Finite-n counterpart n * sum_i nu(n,i,j/n) nu(n,i,k/n), computed from the
// closed-form projection weights; converges to gamma at rate O(1/n).
double gamma_finite_n(std::size_t n, std::size_t j, std::size_t k);

// Finite-n centered counterpart with nu° in place of nu.
double gamma_centered_finite_n(std::size_t n, std::size_t j, std::size_t k);

}  // namespace odsup::limits
