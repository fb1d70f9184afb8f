#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace odsup {

enum class DataKind { Vectors, KernelMatrix, DistanceMatrix };

// A sample of n data objects, held either as dense p-dimensional vectors or
// as a precomputed symmetric n-by-n matrix of pairwise kernel or distance
// values. Matrix input within 1e-9 relative asymmetry (scaled by the largest
// entry magnitude) is symmetrized by averaging; anything worse is rejected.
// Diagonal entries of matrix input are ignored throughout.
class ObservationSet {
public:
    static ObservationSet vectors(std::vector<double> data, std::size_t n, std::size_t p);
    static ObservationSet kernel_matrix(std::vector<double> values, std::size_t n);
    static ObservationSet distance_matrix(std::vector<double> values, std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t dim() const noexcept { return p_; }  // 0 for matrix input
    DataKind kind() const noexcept { return kind_; }

    // Vectors only.
    std::span<const double> row(std::size_t i) const;

    // Matrix kinds only; returns the symmetrized entry.
    double matrix_at(std::size_t i, std::size_t j) const;

private:
    ObservationSet(DataKind kind, std::vector<double> data, std::size_t n, std::size_t p)
        : kind_(kind), data_(std::move(data)), n_(n), p_(p) {}

    DataKind kind_;
    std::vector<double> data_;
    std::size_t n_;
    std::size_t p_;
};

}  // namespace odsup
