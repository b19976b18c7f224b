#pragma once

#include <cstddef>
#include <vector>

#include "mdcoint/errors.hpp"

namespace mdcoint {

/// Dense column-major matrix of doubles.
///
/// Deliberately minimal: the estimators use Eigen internally via Map, and
/// this type keeps the linear-algebra backend out of the public headers.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_columns(const std::vector<std::vector<double>>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    std::vector<double> column(std::size_t j) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace mdcoint
