#include "mdcoint/unit_root.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mdcoint/lrv.hpp"
#include "mdcoint/ols.hpp"

namespace mdcoint {

namespace {

// MacKinnon asymptotic critical values, constant only
constexpr double kCrit1 = -3.43;
constexpr double kCrit5 = -2.86;
constexpr double kCrit10 = -2.57;

void check_input(const std::vector<double>& y) {
    if (y.size() < 25)
        throw EstimationError("unit-root test needs at least 25 observations, got " +
                              std::to_string(y.size()));
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    const double span = *hi - *lo;
    if (!(span > 1e-12 * (std::abs(*hi) + std::abs(*lo) + 1.0)))
        throw DomainError("unit-root test on a constant series (zero variance)");
}

// Dickey-Fuller regression for a given lag order p over observations
// t = first..T-1: dy_t on (const, y_{t-1}, dy_{t-1}..dy_{t-p})
OlsFit df_regression(const std::vector<double>& y, int p, int first) {
    const int T = static_cast<int>(y.size());
    const int rows = T - first;
    Matrix X(static_cast<std::size_t>(rows), static_cast<std::size_t>(1 + p));
    std::vector<double> dy(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        const int t = first + i;
        dy[static_cast<std::size_t>(i)] = y[t] - y[t - 1];
        X(static_cast<std::size_t>(i), 0) = y[t - 1];
        for (int j = 1; j <= p; ++j)
            X(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                y[t - j] - y[t - j - 1];
    }
    return ols(dy, X, true);
}

}  // namespace

Significance unit_root_significance(double statistic) {
    if (statistic < kCrit1) return Significance::at_1pct;
    if (statistic < kCrit5) return Significance::at_5pct;
    if (statistic < kCrit10) return Significance::at_10pct;
    return Significance::none;
}

const char* significance_stars(Significance s) {
    switch (s) {
        case Significance::at_1pct: return "***";
        case Significance::at_5pct: return "**";
        case Significance::at_10pct: return "*";
        default: return "";
    }
}

UnitRootResult adf(const std::vector<double>& y, int max_lags) {
    check_input(y);
    const int T = static_cast<int>(y.size());
    int pmax = max_lags >= 0
                   ? max_lags
                   : static_cast<int>(std::floor(
                         12.0 * std::pow(static_cast<double>(T) / 100.0, 0.25)));
    // keep the selection sample comfortably larger than the widest design
    while (pmax > 0 && T - 1 - pmax < pmax + 10) --pmax;

    int best_p = 0;
    double best_aic = std::numeric_limits<double>::infinity();
    for (int p = 0; p <= pmax; ++p) {
        const OlsFit fit = df_regression(y, p, pmax + 1);
        if (fit.aic < best_aic) {
            best_aic = fit.aic;
            best_p = p;
        }
    }

    const OlsFit fit = df_regression(y, best_p, best_p + 1);
    const double stat = fit.coefficients[1] / std::sqrt(fit.covariance(1, 1));

    UnitRootResult r;
    r.test = UnitRootTest::adf;
    r.statistic = stat;
    r.lags_or_bandwidth = best_p;
    r.significance = unit_root_significance(stat);
    r.t_effective = static_cast<int>(fit.n);
    return r;
}

UnitRootResult adf(const TimeSeries& y, int max_lags) { return adf(y.values(), max_lags); }

UnitRootResult pp(const std::vector<double>& y) {
    check_input(y);
    const OlsFit fit = df_regression(y, 0, 1);
    const double n = static_cast<double>(fit.n);
    const double se_rho = std::sqrt(fit.covariance(1, 1));
    const double t0 = fit.coefficients[1] / se_rho;

    const double gamma0 = fit.rss / n;
    Matrix u(fit.residuals.size(), 1);
    for (std::size_t i = 0; i < fit.residuals.size(); ++i) u(i, 0) = fit.residuals[i];
    const double bw = nw_bandwidth(u);
    double lam2 = bartlett_lrv(u, bw).omega(0, 0);
    if (!(lam2 > 0.0)) lam2 = gamma0;

    const double s = std::sqrt(fit.sigma2);
    const double stat = std::sqrt(gamma0 / lam2) * t0 -
                        0.5 * (lam2 - gamma0) / std::sqrt(lam2) * (n * se_rho / s);

    UnitRootResult r;
    r.test = UnitRootTest::pp;
    r.statistic = stat;
    r.lags_or_bandwidth = bw;
    r.significance = unit_root_significance(stat);
    r.t_effective = static_cast<int>(fit.n);
    return r;
}

UnitRootResult pp(const TimeSeries& y) { return pp(y.values()); }

}  // namespace mdcoint
