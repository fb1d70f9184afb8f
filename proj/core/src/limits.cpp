#include "odsup/limits.hpp"

#include <algorithm>
#include <stdexcept>

#include "odsup/hajek.hpp"

namespace odsup::limits {

namespace {

void check_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
    }
}

}  // namespace

double u_inf(double t) {
    check_unit(t, "t");
    return t * (2.0 - t);
}

double gamma(double s, double t) {
    check_unit(s, "s");
    check_unit(t, "t");
    if (s > t) std::swap(s, t);
    if (s + t <= 1.0) {
        return 4.0 * s * (4.0 * t - 2.0 * t * t - s * t - s * s / 3.0);
    }
    const double one_minus_t = 1.0 - t;
    return 4.0 * (s * (1.0 - s + 2.0 * t - t * t) -
                  one_minus_t * one_minus_t * one_minus_t / 3.0);
}

double gamma_centered(double s, double t) {
    return gamma(s, t) - 4.0 * u_inf(s) * u_inf(t);
}

double gamma_finite_n(std::size_t n, std::size_t j, std::size_t k) {
    if (j > n || k > n) throw std::out_of_range("grid index exceeds n");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += nu(n, i, j) * nu(n, i, k);
    }
    return static_cast<double>(n) * sum;
}

double gamma_centered_finite_n(std::size_t n, std::size_t j, std::size_t k) {
    if (j > n || k > n) throw std::out_of_range("grid index exceeds n");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += nu_centered(n, i, j) * nu_centered(n, i, k);
    }
    return static_cast<double>(n) * sum;
}

}  // namespace odsup::limits
