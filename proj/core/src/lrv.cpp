#include "mdcoint/lrv.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mdcoint/errors.hpp"

namespace mdcoint {

LrvEstimate bartlett_lrv(const Matrix& u, double bandwidth) {
    const std::size_t n = u.rows();
    const std::size_t q = u.cols();
    if (n < 2) throw EstimationError("bartlett_lrv: need at least 2 rows");
    if (!(bandwidth >= 0.0))
        throw DomainError("bartlett_lrv: bandwidth must be nonnegative");
    if (bandwidth >= static_cast<double>(n))
        throw DomainError("bartlett_lrv: bandwidth " + std::to_string(bandwidth) +
                          " must be below the sample size " + std::to_string(n));

    Eigen::MatrixXd U = Eigen::Map<const Eigen::MatrixXd>(u.data(), n, q);
    U.rowwise() -= U.colwise().mean();

    const auto to_matrix = [q](const Eigen::MatrixXd& src) {
        Matrix out(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                out(i, j) = src(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        return out;
    };

    const Eigen::MatrixXd gamma0 = (U.transpose() * U) / static_cast<double>(n);
    Eigen::MatrixXd omega = gamma0;
    Eigen::MatrixXd lambda = 0.5 * gamma0;
    const int max_lag = static_cast<int>(std::floor(bandwidth));
    for (int j = 1; j <= max_lag; ++j) {
        const double w = 1.0 - static_cast<double>(j) / (bandwidth + 1.0);
        // Gamma_j = (1/n) sum_{t=j}^{n-1} u_t u_{t-j}'
        const Eigen::MatrixXd gj = (U.bottomRows(n - j).transpose() * U.topRows(n - j)) /
                                   static_cast<double>(n);
        omega += w * (gj + gj.transpose());
        lambda += w * gj;
    }

    LrvEstimate est;
    est.omega = to_matrix(omega);
    est.lambda = to_matrix(lambda);
    est.gamma0 = to_matrix(gamma0);
    est.bandwidth = bandwidth;
    return est;
}

double nw_bandwidth(const Matrix& u) {
    const std::size_t n = u.rows();
    if (n < 16) throw EstimationError("nw_bandwidth: need at least 16 rows, got " +
                                      std::to_string(n));

    // equal-weight aggregate of the residual columns
    std::vector<double> v(n, 0.0);
    for (std::size_t j = 0; j < u.cols(); ++j)
        for (std::size_t i = 0; i < n; ++i) v[i] += u(i, j);
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;

    const int pilot = static_cast<int>(
        std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));

    std::vector<double> acov(static_cast<std::size_t>(pilot) + 1, 0.0);
    for (int j = 0; j <= pilot; ++j) {
        double s = 0.0;
        for (std::size_t t = static_cast<std::size_t>(j); t < n; ++t)
            s += v[t] * v[t - static_cast<std::size_t>(j)];
        acov[static_cast<std::size_t>(j)] = s / static_cast<double>(n);
    }

    // degenerate residuals: no dependence structure to measure
    if (!(acov[0] > 0.0)) return 0.0;

    double s0 = acov[0];
    double s1 = 0.0;
    for (int j = 1; j <= pilot; ++j) {
        s0 += 2.0 * acov[static_cast<std::size_t>(j)];
        s1 += 2.0 * static_cast<double>(j) * acov[static_cast<std::size_t>(j)];
    }
    if (!(s0 > 0.0)) return 0.0;  // plug-in ratio undefined; fall back to no smoothing

    const double gamma_hat = 1.1447 * std::cbrt((s1 / s0) * (s1 / s0));
    double bw = gamma_hat * std::cbrt(static_cast<double>(n));
    if (!(bw >= 0.0)) bw = 0.0;
    const double cap = static_cast<double>(n) - 2.0;
    if (bw > cap) bw = cap;
    return bw;
}

double long_run_variance(const std::vector<double>& u) {
    Matrix m(u.size(), 1);
    for (std::size_t i = 0; i < u.size(); ++i) m(i, 0) = u[i];
    return bartlett_lrv(m, nw_bandwidth(m)).omega(0, 0);
}

}  // namespace mdcoint
