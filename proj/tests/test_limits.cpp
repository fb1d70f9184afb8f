#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "odsup/limits.hpp"
#include "test_helpers.hpp"

namespace lim = odsup::limits;

namespace {

// Plain Jacobi rotation eigensolver for small symmetric matrices; test-only.
std::vector<double> jacobi_eigenvalues(std::vector<double> m, std::size_t dim) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) off += m[i * dim + j] * m[i * dim + j];
        }
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double apq = m[p * dim + q];
                if (std::abs(apq) < 1e-18) continue;
                const double app = m[p * dim + p];
                const double aqq = m[q * dim + q];
                const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                for (std::size_t k = 0; k < dim; ++k) {
                    const double akp = m[k * dim + p];
                    const double akq = m[k * dim + q];
                    m[k * dim + p] = c * akp - s * akq;
                    m[k * dim + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    const double apk = m[p * dim + k];
                    const double aqk = m[q * dim + k];
                    m[p * dim + k] = c * apk - s * aqk;
                    m[q * dim + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(dim);
    for (std::size_t i = 0; i < dim; ++i) eig[i] = m[i * dim + i];
    return eig;
}

double grid_error(std::size_t n, bool centered) {
    const std::size_t m = 20;
    double worst = 0.0;
    for (std::size_t a = 0; a <= m; ++a) {
        for (std::size_t b = 0; b <= m; ++b) {
            const double s = static_cast<double>(a) / m;
            const double t = static_cast<double>(b) / m;
            const std::size_t j = n * a / m;
            const std::size_t k = n * b / m;
            const double err =
                centered ? std::abs(lim::gamma_centered_finite_n(n, j, k) - lim::gamma_centered(s, t))
                         : std::abs(lim::gamma_finite_n(n, j, k) - lim::gamma(s, t));
            worst = std::max(worst, err);
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("gamma closed form: pinned values") {
    CHECK(lim::gamma(1.0, 1.0) == 4.0);
    CHECK(lim::gamma(0.0, 0.3) == 0.0);
    CHECK(lim::gamma(0.7, 0.0) == 0.0);
    CHECK(close_rel(lim::gamma(0.25, 0.5), 1.3541666666666667, 1e-15));
    CHECK(lim::gamma(0.25, 0.5) == lim::gamma(0.5, 0.25));
    CHECK_THROWS_AS(lim::gamma(-0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(lim::gamma(0.5, 1.5), std::domain_error);

    CHECK(lim::u_inf(0.0) == 0.0);
    CHECK(lim::u_inf(1.0) == 1.0);
    CHECK(close_rel(lim::u_inf(0.5), 0.75, 1e-15));
}

TEST_CASE("centered gamma vanishes on the t = 1 edge") {
    for (double s : {0.0, 0.1, 0.33, 0.75, 1.0}) {
        CHECK(std::abs(lim::gamma_centered(s, 1.0)) <= 1e-14);
        CHECK(std::abs(lim::gamma_centered(1.0, s)) <= 1e-14);
    }
}

TEST_CASE("branch boundary s + t = 1 is continuous") {
    for (double s : {0.1, 0.3, 0.45}) {
        for (double delta : {1e-3, 1e-4}) {
            const double jump =
                std::abs(lim::gamma(s, 1.0 - s + delta) - lim::gamma(s, 1.0 - s - delta));
            CHECK(jump <= 10.0 * delta);
        }
    }
}

TEST_CASE("finite-n weights: endpoint identities") {
    for (std::size_t n : {50u, 333u}) {
        CHECK(lim::gamma_finite_n(n, 0, n / 2) == 0.0);
        CHECK(close_rel(lim::gamma_finite_n(n, n, n), 4.0, 1e-13));
    }
}

TEST_CASE("finite-n converges at rate 1/n (halving ratio near 1/2)") {
    // Unit-sized version of the acceptance check. Sample sizes must be
    // multiples of the 20-point grid or index truncation pollutes the error.
    const double e500 = grid_error(500, false);
    const double e1000 = grid_error(1000, false);
    const double ratio = e1000 / e500;
    CHECK(ratio >= 0.3);
    CHECK(ratio <= 0.7);

    const double c500 = grid_error(500, true);
    const double c1000 = grid_error(1000, true);
    const double cratio = c1000 / c500;
    CHECK(cratio >= 0.3);
    CHECK(cratio <= 0.7);
}

TEST_CASE("finite-n matches the pinned interior value") {
    // gamma(0.25, 0.5) with the O(1/n) remainder at n = 10000.
    const double approx = lim::gamma_finite_n(10000, 2500, 5000);
    CHECK(std::abs(approx - 1.3541666666666667) < 1e-3);
}

TEST_CASE("gamma grid at m = 25 is positive semidefinite") {
    const std::size_t dim = 26;
    std::vector<double> matrix(dim * dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            matrix[a * dim + b] = lim::gamma(static_cast<double>(a) / 25.0,
                                             static_cast<double>(b) / 25.0);
        }
    }
    const auto eig = jacobi_eigenvalues(std::move(matrix), dim);
    for (double lambda : eig) CHECK(lambda >= -1e-8);
}
