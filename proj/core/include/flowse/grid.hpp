#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "flowse/vec.hpp"

namespace flowse {

/// Dense F x T grid of complex values, row-major. Rows index frequency bins,
/// columns index time frames.
class ComplexGrid {
public:
    ComplexGrid() = default;
    ComplexGrid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    std::complex<double>& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::complex<double>* data() { return data_.data(); }
    const std::complex<double>* data() const { return data_.data(); }

    bool same_shape(const ComplexGrid& other) const { return rows_ == other.rows_ && cols_ == other.cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::complex<double>> data_;
};

bool all_finite(const ComplexGrid& g);

/// Stacked-real view of a complex grid: all real parts (row-major), then all
/// imaginary parts. Length 2 * rows * cols.
Vec grid_to_real(const ComplexGrid& g);
ComplexGrid real_to_grid(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace flowse
