#include "mdcoint/matrix.hpp"

namespace mdcoint {

Matrix Matrix::from_columns(const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) return Matrix();
    const std::size_t n = columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != n) throw AlignmentError("matrix columns differ in length");
    }
    Matrix m(n, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
    if (j >= cols_) throw Error("matrix column index out of range");
    return std::vector<double>(data_.begin() + static_cast<std::ptrdiff_t>(j * rows_),
                               data_.begin() + static_cast<std::ptrdiff_t>((j + 1) * rows_));
}

}  // namespace mdcoint
