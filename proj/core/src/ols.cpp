#include "mdcoint/ols.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mdcoint/errors.hpp"

namespace mdcoint {

std::vector<double> OlsFit::standard_errors() const {
    std::vector<double> se(coefficients.size());
    for (std::size_t i = 0; i < se.size(); ++i) se[i] = std::sqrt(covariance(i, i));
    return se;
}

OlsFit ols(const std::vector<double>& y, const Matrix& X, bool intercept) {
    const std::size_t n = y.size();
    if (X.rows() != n) throw EstimationError("ols: y and X row counts differ");
    const std::size_t k = X.cols() + (intercept ? 1 : 0);
    if (k == 0) throw EstimationError("ols: empty design");
    if (n <= k)
        throw EstimationError("ols: " + std::to_string(n) + " observations cannot identify " +
                              std::to_string(k) + " coefficients");

    Eigen::MatrixXd A(n, k);
    if (intercept) A.col(0).setOnes();
    if (X.cols() > 0)
        A.rightCols(X.cols()) =
            Eigen::Map<const Eigen::MatrixXd>(X.data(), X.rows(), X.cols());
    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(n));

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    const auto& R = qr.matrixR();
    const double r_max = std::abs(R(0, 0));
    const double r_min = std::abs(R(static_cast<Eigen::Index>(k) - 1,
                                    static_cast<Eigen::Index>(k) - 1));
    if (!(r_max > 0.0) || r_min / r_max < 1e-12)
        throw EstimationError("ols: singular design (reciprocal condition below 1e-12)");

    const Eigen::VectorXd beta = qr.solve(yv);
    const Eigen::VectorXd resid = yv - A * beta;
    const double rss = resid.squaredNorm();
    const double sigma2 = rss / static_cast<double>(n - k);

    // (X'X)^-1 = P (R'R)^-1 P' from the pivoted factorization
    const Eigen::MatrixXd Rk =
        R.topLeftCorner(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k))
            .triangularView<Eigen::Upper>();
    const Eigen::MatrixXd Rinv =
        Rk.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(
            static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
    Eigen::MatrixXd xtx_inv = Rinv * Rinv.transpose();
    xtx_inv = qr.colsPermutation() * xtx_inv * qr.colsPermutation().transpose();

    OlsFit fit;
    fit.n = n;
    fit.k = k;
    fit.intercept = intercept;
    fit.coefficients.assign(beta.data(), beta.data() + k);
    fit.residuals.assign(resid.data(), resid.data() + n);
    fit.covariance = Matrix(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            fit.covariance(i, j) = sigma2 * xtx_inv(static_cast<Eigen::Index>(i),
                                                    static_cast<Eigen::Index>(j));
    fit.rss = rss;
    fit.sigma2 = sigma2;

    double tss = 0.0;
    if (intercept) {
        const double mean = yv.mean();
        tss = (yv.array() - mean).square().sum();
    } else {
        tss = yv.squaredNorm();
    }
    fit.r_squared = tss > 0.0 ? 1.0 - rss / tss : 0.0;
    if (intercept && fit.r_squared < 0.0 && fit.r_squared > -1e-12) fit.r_squared = 0.0;

    fit.aic = static_cast<double>(n) * std::log(rss / static_cast<double>(n)) +
              2.0 * static_cast<double>(k);
    return fit;
}

}  // namespace mdcoint
