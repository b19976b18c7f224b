#include "mdcoint/cointegration.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "mdcoint/errors.hpp"
#include "mdcoint/format.hpp"
#include "mdcoint/lrv.hpp"
#include "mdcoint/ols.hpp"
#include "mdcoint/structural.hpp"

namespace mdcoint {

namespace detail {
// quantile table defined in hansen_table.cpp
extern const int kLcMaxM;
extern const double kLcPValues[6];
extern const double kLcQuantiles[6][6];
}  // namespace detail

double normal_two_sided_p(double t) { return std::erfc(std::abs(t) / std::sqrt(2.0)); }

namespace {

Eigen::Map<const Eigen::MatrixXd> map_matrix(const Matrix& m) {
    return Eigen::Map<const Eigen::MatrixXd>(m.data(), m.rows(), m.cols());
}

// kernel quantities shared by the FM estimator and the stability test:
// w_t = (u_t, dx_t'), Omega its long-run covariance, and the one-sided
// lagged-by-current sums that enter the bias correction
struct FmKernel {
    double bandwidth = 0.0;
    double o11 = 0.0;
    Eigen::VectorXd o21;          // m x 1
    Eigen::MatrixXd o22;          // m x m
    Eigen::VectorXd o22inv_o21;   // Omega22^-1 omega21
    Eigen::VectorXd correction;   // d21 - D22 Omega22^-1 omega21
    double omega11_2 = 0.0;       // o11 - o12 Omega22^-1 o21
    double gamma0_uu = 0.0;
};

FmKernel fm_kernel(const Eigen::VectorXd& u_levels, const Eigen::MatrixXd& X) {
    const Eigen::Index T = X.rows();
    const Eigen::Index m = X.cols();
    const Eigen::Index n = T - 1;

    Matrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(1 + m));
    for (Eigen::Index t = 1; t < T; ++t) {
        w(static_cast<std::size_t>(t - 1), 0) = u_levels(t);
        for (Eigen::Index j = 0; j < m; ++j)
            w(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(1 + j)) =
                X(t, j) - X(t - 1, j);
    }

    const double bw = nw_bandwidth(w);
    const LrvEstimate lrv = bartlett_lrv(w, bw);
    const Eigen::MatrixXd omega = map_matrix(lrv.omega);
    const Eigen::MatrixXd lambda = map_matrix(lrv.lambda);
    const Eigen::MatrixXd gamma0 = map_matrix(lrv.gamma0);
    // one-sided sum with the lagged index first: Gamma0 + sum w_j Gamma_j'
    const Eigen::MatrixXd delta_lc = lambda.transpose() + 0.5 * gamma0;

    FmKernel k;
    k.bandwidth = bw;
    k.o11 = omega(0, 0);
    k.o21 = omega.block(1, 0, m, 1);
    k.o22 = omega.block(1, 1, m, m);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(k.o22);
    if (ldlt.info() != Eigen::Success)
        throw EstimationError("fmols: long-run covariance of the differenced regressors "
                              "is not factorizable");
    k.o22inv_o21 = ldlt.solve(k.o21);
    const Eigen::VectorXd d21 = delta_lc.block(1, 0, m, 1);
    const Eigen::MatrixXd d22 = delta_lc.block(1, 1, m, m);
    k.correction = d21 - d22 * k.o22inv_o21;
    k.omega11_2 = k.o11 - k.o21.dot(k.o22inv_o21);
    k.gamma0_uu = gamma0(0, 0);
    return k;
}

std::vector<double> levels_residuals(const std::vector<double>& y, const Eigen::MatrixXd& X,
                                     const Eigen::VectorXd& theta) {
    std::vector<double> out(y.size());
    for (Eigen::Index t = 0; t < X.rows(); ++t) {
        double fitted = theta(0);
        for (Eigen::Index j = 0; j < X.cols(); ++j) fitted += theta(j + 1) * X(t, j);
        out[static_cast<std::size_t>(t)] = y[static_cast<std::size_t>(t)] - fitted;
    }
    return out;
}

int default_max_k(std::size_t T) {
    const int k = static_cast<int>(
        std::floor(4.0 * std::pow(static_cast<double>(T) / 100.0, 0.25)));
    return std::min(8, std::max(0, k));
}

}  // namespace

CointEstimate dols(const std::vector<double>& y, const Matrix& X, int max_k) {
    const std::size_t T = y.size();
    const std::size_t m = X.cols();
    if (X.rows() != T) throw EstimationError("dols: y and X row counts differ");
    if (m == 0) throw EstimationError("dols: no regressors");

    const bool explicit_k = max_k >= 0;
    int kmax = explicit_k ? max_k : default_max_k(T);
    auto design_cols = [m](int k) {
        return 1 + m + (k >= 1 ? m * (2 * static_cast<std::size_t>(k) + 1) : 0);
    };
    auto feasible = [&](int k) {
        const long rows = static_cast<long>(T) - 1 - 2 * k;
        return rows > static_cast<long>(design_cols(k)) + 2;
    };
    if (explicit_k && !feasible(kmax))
        throw EstimationError("dols: sample too short for max_k = " + std::to_string(kmax));
    while (kmax > 0 && !feasible(kmax)) --kmax;
    if (!feasible(0)) throw EstimationError("dols: sample too short");

    const Eigen::Map<const Eigen::MatrixXd> Xe(X.data(), T, m);

    // leads/lags j = -k..k of the differenced regressors; k = 0 is the
    // static levels regression
    auto build = [&](int k, std::size_t first, std::size_t last) {
        const std::size_t rows = last - first + 1;
        const std::size_t cols = design_cols(k) - 1;  // intercept added by ols()
        Matrix D(rows, cols);
        std::vector<double> yy(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::size_t t = first + i;
            yy[i] = y[t];
            std::size_t c = 0;
            for (std::size_t j = 0; j < m; ++j)
                D(i, c++) = Xe(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j));
            if (k >= 1) {
                for (int lag = -k; lag <= k; ++lag) {
                    const Eigen::Index ts = static_cast<Eigen::Index>(static_cast<long>(t) + lag);
                    for (std::size_t j = 0; j < m; ++j)
                        D(i, c++) = Xe(ts, static_cast<Eigen::Index>(j)) -
                                    Xe(ts - 1, static_cast<Eigen::Index>(j));
                }
            }
        }
        return std::make_pair(std::move(yy), std::move(D));
    };

    // AIC on the common estimable sample so candidate models are comparable
    const std::size_t c_first = kmax >= 1 ? static_cast<std::size_t>(kmax) + 1 : 0;
    const std::size_t c_last = kmax >= 1 ? T - 1 - static_cast<std::size_t>(kmax) : T - 1;
    int best_k = 0;
    double best_aic = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kmax; ++k) {
        auto [yy, D] = build(k, c_first, c_last);
        const OlsFit fit = ols(yy, D, true);
        if (fit.aic < best_aic) {
            best_aic = fit.aic;
            best_k = k;
        }
    }

    // re-estimate the chosen model on its maximal sample
    const std::size_t first = best_k >= 1 ? static_cast<std::size_t>(best_k) + 1 : 0;
    const std::size_t last = best_k >= 1 ? T - 1 - static_cast<std::size_t>(best_k) : T - 1;
    auto [yy, D] = build(best_k, first, last);
    const OlsFit fit = ols(yy, D, true);

    // long-run vs short-run variance of the dynamic residual rescales the
    // OLS covariance
    Matrix u(fit.residuals.size(), 1);
    for (std::size_t i = 0; i < fit.residuals.size(); ++i) u(i, 0) = fit.residuals[i];
    const double lam2 = bartlett_lrv(u, nw_bandwidth(u)).omega(0, 0);
    const double gamma0 = fit.rss / static_cast<double>(fit.n);
    const double scale = (lam2 > 0.0 && gamma0 > 0.0) ? lam2 / gamma0 : 1.0;

    CointEstimate est;
    est.method = CointMethod::dols;
    est.leads_lags = best_k;
    est.coefficients.assign(fit.coefficients.begin(), fit.coefficients.begin() + 1 + m);
    est.standard_errors.resize(1 + m);
    for (std::size_t i = 0; i < 1 + m; ++i)
        est.standard_errors[i] = std::sqrt(fit.covariance(i, i) * scale);
    est.r_squared = fit.r_squared;
    est.long_run_variance = lam2;

    Eigen::VectorXd theta(1 + m);
    for (std::size_t i = 0; i < 1 + m; ++i) theta(static_cast<Eigen::Index>(i)) = est.coefficients[i];
    est.residuals = levels_residuals(y, Xe, theta);
    return est;
}

CointEstimate fmols(const std::vector<double>& y, const Matrix& X) {
    const std::size_t T = y.size();
    const std::size_t m = X.cols();
    if (X.rows() != T) throw EstimationError("fmols: y and X row counts differ");
    if (m == 0) throw EstimationError("fmols: no regressors");
    if (T < 50) throw EstimationError("fmols: need at least 50 observations, got " +
                                      std::to_string(T));

    const Eigen::Map<const Eigen::MatrixXd> Xe(X.data(), T, m);
    const OlsFit fit0 = ols(y, X, true);
    Eigen::VectorXd u0(T);
    for (std::size_t t = 0; t < T; ++t) u0(static_cast<Eigen::Index>(t)) = fit0.residuals[t];

    const FmKernel k = fm_kernel(u0, Xe);
    const Eigen::Index n = static_cast<Eigen::Index>(T) - 1;

    Eigen::MatrixXd A(n, 1 + m);
    Eigen::VectorXd yplus(n);
    for (Eigen::Index t = 1; t < static_cast<Eigen::Index>(T); ++t) {
        A(t - 1, 0) = 1.0;
        double corr = 0.0;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j) {
            A(t - 1, 1 + j) = Xe(t, j);
            corr += k.o22inv_o21(j) * (Xe(t, j) - Xe(t - 1, j));
        }
        yplus(t - 1) = y[static_cast<std::size_t>(t)] - corr;
    }

    Eigen::VectorXd rhs = A.transpose() * yplus;
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j)
        rhs(1 + j) -= static_cast<double>(n) * k.correction(j);

    const Eigen::MatrixXd AtA = A.transpose() * A;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(AtA);
    if (ldlt.info() != Eigen::Success)
        throw EstimationError("fmols: singular design");
    const Eigen::VectorXd theta = ldlt.solve(rhs);

    CointEstimate est;
    est.method = CointMethod::fmols;
    est.bandwidth = k.bandwidth;
    est.coefficients.assign(theta.data(), theta.data() + 1 + m);
    est.residuals = levels_residuals(y, Xe, theta);

    const Eigen::MatrixXd AtA_inv = ldlt.solve(Eigen::MatrixXd::Identity(1 + m, 1 + m));
    const double ov = std::max(k.omega11_2, 0.0);
    est.standard_errors.resize(1 + m);
    for (std::size_t i = 0; i < 1 + m; ++i)
        est.standard_errors[i] =
            std::sqrt(ov * AtA_inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));
    est.long_run_variance = k.omega11_2;

    double rss = 0.0, tss = 0.0, mean = 0.0;
    for (Eigen::Index t = 1; t < static_cast<Eigen::Index>(T); ++t)
        mean += y[static_cast<std::size_t>(t)];
    mean /= static_cast<double>(n);
    for (Eigen::Index t = 1; t < static_cast<Eigen::Index>(T); ++t) {
        const double u = est.residuals[static_cast<std::size_t>(t)];
        rss += u * u;
        tss += (y[static_cast<std::size_t>(t)] - mean) * (y[static_cast<std::size_t>(t)] - mean);
    }
    est.r_squared = tss > 0.0 ? std::max(0.0, 1.0 - rss / tss) : 0.0;
    return est;
}

LcResult lc_p_value(double statistic, int m) {
    if (m < 1) throw EstimationError("lc_p_value: m must be >= 1");
    LcResult r;
    r.statistic = statistic;
    r.m = m;
    const int row = std::min(m, detail::kLcMaxM) - 1;
    const double* q = detail::kLcQuantiles[row];
    const double* p = detail::kLcPValues;
    if (statistic <= q[0]) {
        r.p_value = p[0];
        r.p_band = ">0.2";
        return r;
    }
    if (statistic >= q[5]) {
        r.p_value = p[5];
        r.p_band = "<0.01";
        return r;
    }
    for (int i = 0; i < 5; ++i) {
        if (statistic <= q[i + 1]) {
            const double f = (statistic - q[i]) / (q[i + 1] - q[i]);
            r.p_value = p[i] + f * (p[i + 1] - p[i]);
            break;
        }
    }
    r.p_band = format_fixed(r.p_value, 2);
    return r;
}

LcResult hansen_lc(const CointEstimate& est, const Matrix& X) {
    const std::size_t T = X.rows();
    const std::size_t m = X.cols();
    if (est.residuals.size() != T)
        throw EstimationError("hansen_lc: estimate residuals and panel rows differ");
    if (est.coefficients.size() != 1 + m)
        throw EstimationError("hansen_lc: estimate was not produced on this panel");

    const Eigen::Map<const Eigen::MatrixXd> Xe(X.data(), T, m);
    Eigen::VectorXd u(T);
    for (std::size_t t = 0; t < T; ++t) u(static_cast<Eigen::Index>(t)) = est.residuals[t];

    // reconstruct y to scale the degeneracy guard
    double yvar = 0.0, ymean = 0.0;
    std::vector<double> yrec(T);
    for (std::size_t t = 0; t < T; ++t) {
        double fitted = est.coefficients[0];
        for (std::size_t j = 0; j < m; ++j) fitted += est.coefficients[1 + j] * Xe(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j));
        yrec[t] = fitted + est.residuals[t];
        ymean += yrec[t];
    }
    ymean /= static_cast<double>(T);
    for (std::size_t t = 0; t < T; ++t) yvar += (yrec[t] - ymean) * (yrec[t] - ymean);
    yvar /= static_cast<double>(T);

    const FmKernel k = fm_kernel(u, Xe);
    LcResult zero = lc_p_value(0.0, static_cast<int>(m));
    if (!(k.omega11_2 > 0.0) || k.gamma0_uu <= 1e-24 * yvar) return zero;

    const Eigen::Index n = static_cast<Eigen::Index>(T) - 1;
    Eigen::MatrixXd Z(n, 1 + m);
    Eigen::VectorXd uplus(n);
    for (Eigen::Index t = 1; t < static_cast<Eigen::Index>(T); ++t) {
        Z(t - 1, 0) = 1.0;
        double corr = 0.0;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j) {
            Z(t - 1, 1 + j) = Xe(t, j);
            corr += k.o22inv_o21(j) * (Xe(t, j) - Xe(t - 1, j));
        }
        uplus(t - 1) = u(t) - corr;
    }

    const Eigen::MatrixXd M = Z.transpose() * Z;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(M);
    if (ldlt.info() != Eigen::Success) throw EstimationError("hansen_lc: singular moment matrix");

    Eigen::VectorXd S = Eigen::VectorXd::Zero(1 + m);
    double acc = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) {
        Eigen::VectorXd score = Z.row(t).transpose() * uplus(t);
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j)
            score(1 + j) -= k.correction(j);
        S += score;
        acc += S.dot(ldlt.solve(S));
    }
    const double stat = acc / (static_cast<double>(n) * k.omega11_2);
    return lc_p_value(stat, static_cast<int>(m));
}

WaldResult wald_t(const CointEstimate& est, std::size_t index, double value) {
    if (index >= est.coefficients.size())
        throw EstimationError("wald_t: coefficient index " + std::to_string(index) +
                              " out of range");
    WaldResult r;
    r.index = index;
    r.hypothesized = value;
    const double se = est.standard_errors[index];
    if (!(se > 0.0)) throw EstimationError("wald_t: standard error is not positive");
    r.t_statistic = (est.coefficients[index] - value) / se;
    r.p_value = normal_two_sided_p(r.t_statistic);
    return r;
}

namespace {

Eq15MethodResult eq15_from(const CointEstimate& est, const Matrix& X) {
    Eq15MethodResult r;
    r.estimate = est;
    r.kappa0 = est.coefficients[0];
    r.kappa1 = -est.coefficients[1];
    r.se_kappa0 = est.standard_errors[0];
    r.se_kappa1 = est.standard_errors[1];
    r.lc = hansen_lc(est, X);
    r.wald_kappa1_one.index = 1;
    r.wald_kappa1_one.hypothesized = 1.0;
    r.wald_kappa1_one.t_statistic = (r.kappa1 - 1.0) / r.se_kappa1;
    r.wald_kappa1_one.p_value = normal_two_sided_p(r.wald_kappa1_one.t_statistic);
    try {
        const auto [sigma, delta] = structural_from_kappa({r.kappa0, r.kappa1});
        r.structural.ok = true;
        r.structural.sigma = sigma;
        r.structural.delta = delta;
    } catch (const DomainError& e) {
        r.structural.ok = false;
        r.structural.note = e.what();
    }
    return r;
}

Eq20MethodResult eq20_from(const CointEstimate& est, const Matrix& X) {
    Eq20MethodResult r;
    r.estimate = est;
    r.omega = {est.coefficients[0], -est.coefficients[1], est.coefficients[2],
               est.coefficients[3]};
    r.se = {est.standard_errors[0], est.standard_errors[1], est.standard_errors[2],
            est.standard_errors[3]};
    r.lc = hansen_lc(est, X);
    r.wald_omega1_one.index = 1;
    r.wald_omega1_one.hypothesized = 1.0;
    r.wald_omega1_one.t_statistic = (r.omega[1] - 1.0) / r.se[1];
    r.wald_omega1_one.p_value = normal_two_sided_p(r.wald_omega1_one.t_statistic);
    r.wald_omega3_one.index = 3;
    r.wald_omega3_one.hypothesized = 1.0;
    r.wald_omega3_one.t_statistic = (r.omega[3] - 1.0) / r.se[3];
    r.wald_omega3_one.p_value = normal_two_sided_p(r.wald_omega3_one.t_statistic);
    return r;
}

}  // namespace

Eq15Result estimate_eq15(const AlignedPanel& panel, int max_k, const std::string& y_col,
                         const std::string& spread_col) {
    const auto& y = panel.column(y_col);
    const Matrix X = panel.to_matrix({spread_col});
    Eq15Result out;
    out.dols = eq15_from(dols(y, X, max_k), X);
    out.fmols = eq15_from(fmols(y, X), X);
    return out;
}

Eq20Result estimate_eq20(const AlignedPanel& panel, ScaleKind scale, AggregateKind aggregate,
                         int max_k, const std::string& y_col, const std::string& oc_col,
                         const std::string& spread_col, const std::string& scale_col) {
    const auto& y = panel.column(y_col);
    const Matrix X = panel.to_matrix({oc_col, spread_col, scale_col});
    Eq20Result out;
    out.scale = scale;
    out.aggregate = aggregate;
    out.dols = eq20_from(dols(y, X, max_k), X);
    out.fmols = eq20_from(fmols(y, X), X);
    return out;
}

}  // namespace mdcoint
