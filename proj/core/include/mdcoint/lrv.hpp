#pragma once

#include <vector>

#include "mdcoint/matrix.hpp"

namespace mdcoint {

/// Bartlett-kernel long-run covariance of a residual panel.
///
/// With demeaned autocovariances Gamma_j = (1/n) sum_t u_t u_{t-j}' and
/// weights w_j = 1 - j/(bw+1):
///   omega  = Gamma_0 + sum_j w_j (Gamma_j + Gamma_j')
///   lambda = Gamma_0 / 2 + sum_j w_j Gamma_j        (so omega = lambda + lambda')
struct LrvEstimate {
    Matrix omega;
    Matrix lambda;
    Matrix gamma0;
    double bandwidth = 0.0;
};

/// Kernel estimate with the given bandwidth (lags 1..floor(bandwidth) enter).
/// Requires 0 <= bandwidth < rows and at least 2 rows.
LrvEstimate bartlett_lrv(const Matrix& u, double bandwidth);

/// Newey-West (1994) automatic plug-in bandwidth for the Bartlett kernel,
/// without prewhitening, using n_lag = floor(4*(n/100)^(2/9)) pilot lags.
/// Zero-variance residuals yield bandwidth 0. Requires >= 16 rows.
double nw_bandwidth(const Matrix& u);

/// Scalar convenience: long-run variance of one series at the automatic
/// bandwidth.
double long_run_variance(const std::vector<double>& u);

}  // namespace mdcoint
