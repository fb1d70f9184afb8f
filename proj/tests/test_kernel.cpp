#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "odsup/errors.hpp"
#include "odsup/kernel.hpp"
#include "test_helpers.hpp"

using namespace odsup;

namespace {

// Brute-force row sums: the independent oracle for lag_sums.
std::vector<double> brute_rows(const Kernel& k, const ObservationSet& obs) {
    const std::size_t n = obs.size();
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) r[i] += eval_pair(k, obs, i, j);
        }
    }
    return r;
}

}  // namespace

TEST_CASE("eval_pair built-in values") {
    // Two identical points and a unit-distance pair.
    auto obs = ObservationSet::vectors({0.0, 0.0, 1.0, 0.0, 0.0, 0.0}, 3, 2);
    CHECK(eval_pair(Kernel::expneg(), obs, 0, 2) == 1.0);  // exp(0)
    CHECK(eval_pair(Kernel::invquartic(), obs, 0, 1) == 0.5);  // 1/(1+1)

    // p = 5, x = (1,1,1,1,1), y = 0: scalar-math oracle exp(-sqrt(5)).
    std::vector<double> data(10, 0.0);
    std::fill(data.begin(), data.begin() + 5, 1.0);
    data.resize(15, 0.0);
    auto obs5 = ObservationSet::vectors(std::move(data), 3, 5);
    CHECK(close_rel(eval_pair(Kernel::expneg(), obs5, 0, 1), std::exp(-std::sqrt(5.0)), 1e-15));
    CHECK(close_rel(eval_pair(Kernel::expneg(), obs5, 0, 1), 0.1069, 1e-3));
}

TEST_CASE("eval_pair is bit-for-bit symmetric for built-ins") {
    auto obs = random_observations(5, 25, 4);
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<std::size_t> pick(0, 24);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t i = pick(gen), j = pick(gen);
        if (i == j) continue;
        for (const Kernel& k : {Kernel::expneg(), Kernel::invquartic()}) {
            CHECK(eval_pair(k, obs, i, j) == eval_pair(k, obs, j, i));
        }
    }
}

TEST_CASE("eval_pair rejects bad indices and kind mismatches") {
    auto obs = random_observations(1, 5, 2);
    CHECK_THROWS_AS(eval_pair(Kernel::expneg(), obs, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(eval_pair(Kernel::expneg(), obs, 0, 5), std::out_of_range);
    CHECK_THROWS_AS(eval_pair(Kernel::precomputed(), obs, 0, 1), ConfigError);

    auto mat = ObservationSet::kernel_matrix(std::vector<double>(9, 1.0), 3);
    CHECK_THROWS_AS(eval_pair(Kernel::expneg(), mat, 0, 1), ConfigError);
}

TEST_CASE("lag_sums: constant kernel counts pairs per lag") {
    const std::size_t n = 17;
    // Via the constant built-in and via an explicit all-ones matrix.
    auto obs = random_observations(2, n, 3);
    auto ones = ObservationSet::kernel_matrix(std::vector<double>(n * n, 1.0), n);
    for (const auto& [kernel, data] :
         {std::pair{Kernel::constant(), &obs}, std::pair{Kernel::precomputed(), &ones}}) {
        const LagSums lags = lag_sums(kernel, *data);
        for (std::size_t d = 1; d < n; ++d) {
            CHECK(lags.by_lag[d] == static_cast<double>(n - d));
        }
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(lags.row[i] == static_cast<double>(n - 1));
        }
    }
}

TEST_CASE("lag_sums: n = 3 product kernel, enumerated by hand") {
    // Data (0, 1, 2) with h(x, y) = x*y via a precomputed matrix:
    //   pairs (0,1) -> 0, (1,2) -> 2, (0,2) -> 0
    //   S(1) = 0 + 2 = 2, S(2) = 0; rows r = (0, 2, 2).
    std::vector<double> product = {0, 0, 0, 0, 1, 2, 0, 2, 4};
    auto obs = ObservationSet::kernel_matrix(std::move(product), 3);
    const LagSums lags = lag_sums(Kernel::precomputed(), obs);
    CHECK(lags.by_lag[1] == 2.0);
    CHECK(lags.by_lag[2] == 0.0);
    CHECK(lags.row[0] == 0.0);
    CHECK(lags.row[1] == 2.0);
    CHECK(lags.row[2] == 2.0);
    // Matches the brute-force row oracle.
    const auto rows = brute_rows(Kernel::precomputed(), obs);
    for (std::size_t i = 0; i < 3; ++i) CHECK(lags.row[i] == rows[i]);
}

TEST_CASE("pair accounting: 2 sum_d S(d) = sum_i r_i") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto obs = random_observations(seed, 40, 5);
        const LagSums lags = lag_sums(Kernel::expneg(), obs);
        double lag_total = 0.0, row_total = 0.0;
        for (double s : lags.by_lag) lag_total += s;
        for (double r : lags.row) row_total += r;
        CHECK(close_rel(2.0 * lag_total, row_total, 1e-12));
    }
}

TEST_CASE("precomputed matrix round-trips the built-in kernel") {
    const std::size_t n = 30;
    auto obs = random_observations(9, n, 4);
    std::vector<double> matrix(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) matrix[i * n + j] = eval_pair(Kernel::expneg(), obs, i, j);
        }
    }
    // Arbitrary diagonal must be ignored.
    for (std::size_t i = 0; i < n; ++i) matrix[i * n + i] = 123.0 + static_cast<double>(i);
    auto mat = ObservationSet::kernel_matrix(std::move(matrix), n);

    const LagSums direct = lag_sums(Kernel::expneg(), obs);
    const LagSums via_matrix = lag_sums(Kernel::precomputed(), mat);
    for (std::size_t d = 1; d < n; ++d) {
        CHECK(close_rel(direct.by_lag[d], via_matrix.by_lag[d], 1e-12));
    }
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(close_rel(direct.row[i], via_matrix.row[i], 1e-12));
    }
}

TEST_CASE("distance-matrix input matches the vector built-ins") {
    const std::size_t n = 20;
    auto obs = random_observations(31, n, 3);
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double ss = 0.0;
            for (std::size_t d = 0; d < 3; ++d) {
                const double diff = obs.row(i)[d] - obs.row(j)[d];
                ss += diff * diff;
            }
            dist[i * n + j] = std::sqrt(ss);
        }
    }
    auto dmat = ObservationSet::distance_matrix(std::move(dist), n);
    const LagSums a = lag_sums(Kernel::expneg(), obs);
    const LagSums b = lag_sums(Kernel::of_distance(DistanceTransform::ExpNeg), dmat);
    for (std::size_t d = 1; d < n; ++d) CHECK(close_rel(a.by_lag[d], b.by_lag[d], 1e-12));
}

TEST_CASE("asymmetric matrices: tolerated within 1e-9, rejected beyond") {
    std::vector<double> nearly = {0.0, 1.0, 1.0,
                                  1.0 + 1e-12, 0.0, 1.0,
                                  1.0, 1.0, 0.0};
    auto obs = ObservationSet::kernel_matrix(nearly, 3);
    // Symmetrized by averaging both orders.
    CHECK(obs.matrix_at(0, 1) == obs.matrix_at(1, 0));
    CHECK(close_rel(obs.matrix_at(0, 1), 1.0 + 0.5e-12, 1e-15));

    std::vector<double> bad = {0.0, 1.0, 1.0,
                               1.1, 0.0, 1.0,
                               1.0, 1.0, 0.0};
    CHECK_THROWS_AS(ObservationSet::kernel_matrix(bad, 3), InputError);
}

TEST_CASE("non-finite kernel values abort the run as numerical failures") {
    // NaN observation: eval and lag_sums must throw rather than skip the pair.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto obs = ObservationSet::vectors({0.0, 1.0, nan, 3.0}, 4, 1);
    CHECK_THROWS_AS(eval_pair(Kernel::expneg(), obs, 1, 2), NumericError);
    CHECK_THROWS_AS(lag_sums(Kernel::expneg(), obs), NumericError);
    CHECK_THROWS_AS(lag_sums(Kernel::expneg(), obs, 4), NumericError);

    // Infinite entry in a precomputed kernel matrix.
    std::vector<double> inf_matrix(9, 1.0);
    inf_matrix[1] = std::numeric_limits<double>::infinity();
    inf_matrix[3] = std::numeric_limits<double>::infinity();
    auto mat = ObservationSet::kernel_matrix(std::move(inf_matrix), 3);
    CHECK_THROWS_AS(lag_sums(Kernel::precomputed(), mat), NumericError);
}

TEST_CASE("lag_sums is bit-identical across thread counts") {
    auto obs = random_observations(77, 151, 5);
    const LagSums one = lag_sums(Kernel::expneg(), obs, 1);
    for (unsigned threads : {2u, 3u, 4u, 7u}) {
        const LagSums many = lag_sums(Kernel::expneg(), obs, threads);
        for (std::size_t d = 1; d < obs.size(); ++d) {
            CHECK(one.by_lag[d] == many.by_lag[d]);
        }
        for (std::size_t i = 0; i < obs.size(); ++i) {
            CHECK(one.row[i] == many.row[i]);
        }
    }
}
