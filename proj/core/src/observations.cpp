#include "odsup/observations.hpp"

#include <cmath>
#include <string>

#include "odsup/errors.hpp"

namespace odsup {

namespace {

constexpr double kSymmetryRelTol = 1e-9;

void require_min_size(std::size_t n) {
    if (n < 3) {
        throw InputError("need at least 3 observations, got " + std::to_string(n));
    }
}

// Non-finite entries are deliberately admitted here: they surface later as a
// NumericError when a kernel evaluation touches them, which is the error
// class (and CLI exit code) reserved for numerical failure.

// Symmetrize in place; reject asymmetry beyond tolerance relative to the
// largest entry magnitude.
void symmetrize(std::vector<double>& m, std::size_t n, const char* what) {
    double scale = 0.0;
    for (double v : m) scale = std::max(scale, std::abs(v));
    const double tol = kSymmetryRelTol * std::max(scale, 1e-300);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = m[i * n + j];
            const double b = m[j * n + i];
            if (std::abs(a - b) > tol) {
                throw InputError(std::string(what) + " matrix asymmetric beyond tolerance at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
            }
            const double avg = 0.5 * (a + b);
            m[i * n + j] = avg;
            m[j * n + i] = avg;
        }
    }
}

}  // namespace

ObservationSet ObservationSet::vectors(std::vector<double> data, std::size_t n, std::size_t p) {
    require_min_size(n);
    if (p < 1) throw InputError("vector observations need dimension >= 1");
    if (data.size() != n * p) {
        throw InputError("vector data has " + std::to_string(data.size()) +
                         " values, expected n*p = " + std::to_string(n * p));
    }
    return ObservationSet(DataKind::Vectors, std::move(data), n, p);
}

ObservationSet ObservationSet::kernel_matrix(std::vector<double> values, std::size_t n) {
    require_min_size(n);
    if (values.size() != n * n) {
        throw InputError("kernel matrix has " + std::to_string(values.size()) +
                         " values, expected n*n = " + std::to_string(n * n));
    }
    symmetrize(values, n, "kernel");
    return ObservationSet(DataKind::KernelMatrix, std::move(values), n, 0);
}

ObservationSet ObservationSet::distance_matrix(std::vector<double> values, std::size_t n) {
    require_min_size(n);
    if (values.size() != n * n) {
        throw InputError("distance matrix has " + std::to_string(values.size()) +
                         " values, expected n*n = " + std::to_string(n * n));
    }
    symmetrize(values, n, "distance");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && values[i * n + j] < 0.0) {
                throw InputError("negative off-diagonal distance at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
        }
    }
    return ObservationSet(DataKind::DistanceMatrix, std::move(values), n, 0);
}

std::span<const double> ObservationSet::row(std::size_t i) const {
    if (kind_ != DataKind::Vectors) throw InputError("row access requires vector data");
    if (i >= n_) throw std::out_of_range("observation index out of range");
    return std::span<const double>(data_.data() + i * p_, p_);
}

double ObservationSet::matrix_at(std::size_t i, std::size_t j) const {
    if (kind_ == DataKind::Vectors) throw InputError("matrix access requires matrix data");
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    return data_[i * n_ + j];
}

}  // namespace odsup
