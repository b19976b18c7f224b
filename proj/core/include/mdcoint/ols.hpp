#pragma once

#include <vector>

#include "mdcoint/matrix.hpp"

namespace mdcoint {

/// Least-squares fit. When an intercept is requested it is coefficient 0,
/// followed by the design columns in order.
struct OlsFit {
    std::vector<double> coefficients;
    std::vector<double> residuals;
    Matrix covariance;   ///< sigma2 * (X'X)^-1
    double r_squared = 0.0;
    double sigma2 = 0.0;  ///< RSS / (n - k)
    double rss = 0.0;
    double aic = 0.0;     ///< n*ln(RSS/n) + 2k, for lag selection
    std::size_t n = 0;
    std::size_t k = 0;
    bool intercept = false;

    std::vector<double> standard_errors() const;
};

/// Ordinary least squares via a column-pivoted QR decomposition. Throws
/// EstimationError on rank-deficient designs (reciprocal condition estimate
/// below 1e-12) or when rows <= columns.
OlsFit ols(const std::vector<double>& y, const Matrix& X, bool intercept);

}  // namespace mdcoint
