#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mdcoint/matrix.hpp"
#include "mdcoint/timeseries.hpp"

namespace mdcoint {

enum class CointMethod { dols, fmols };

/// Estimated cointegrating regression. Coefficients are in regression space:
/// intercept first, then the I(1) regressor columns in design order.
/// `residuals` are the levels residuals y_t - theta'(1, x_t) over the full
/// sample, regardless of the observations the estimator itself consumed.
struct CointEstimate {
    CointMethod method = CointMethod::dols;
    std::vector<double> coefficients;
    std::vector<double> standard_errors;
    double r_squared = 0.0;
    std::vector<double> residuals;
    int leads_lags = 0;            ///< DOLS: selected k
    double bandwidth = 0.0;        ///< FMOLS: kernel bandwidth
    double long_run_variance = 0.0;  ///< of the equation error, as used for inference
};

/// Dynamic OLS (levels plus leads and lags of the differenced regressors).
/// k is chosen by AIC over 0..max_k on a common sample; max_k < 0 applies
/// the default rule min(8, floor(4*(T/100)^(1/4))). Standard errors rescale
/// the OLS covariance by the ratio of long-run to short-run residual
/// variance (Bartlett kernel, Newey-West bandwidth).
CointEstimate dols(const std::vector<double>& y, const Matrix& X, int max_k = -1);

/// Phillips-Hansen fully modified OLS with endogeneity and serial-
/// correlation corrections from the Bartlett kernel at the Newey-West
/// automatic bandwidth. Requires T >= 50.
CointEstimate fmols(const std::vector<double>& y, const Matrix& X);

/// Hansen parameter-stability test. The null hypothesis is cointegration
/// (stable parameters); large statistics reject it.
struct LcResult {
    double statistic = 0.0;
    int m = 0;              ///< number of I(1) regressors
    double p_value = 0.0;   ///< interpolated, clamped to the table range [0.01, 0.2]
    std::string p_band;     ///< display form: ">0.2", "<0.01", or e.g. "0.07"
};

/// L_c from cumulative fully modified scores evaluated at the supplied
/// estimate's coefficients. X must be the regressor panel the estimate was
/// produced on.
LcResult hansen_lc(const CointEstimate& est, const Matrix& X);

/// Interpolated asymptotic p-value for the L_c statistic with m I(1)
/// regressors and a constant term. The embedded table covers m = 1..6;
/// larger systems fall back to the m = 6 row.
LcResult lc_p_value(double statistic, int m);

/// Wald t-test of a single coefficient against a hypothesized value, with a
/// two-sided standard-normal p-value.
struct WaldResult {
    std::size_t index = 0;
    double hypothesized = 0.0;
    double t_statistic = 0.0;
    double p_value = 1.0;
};

WaldResult wald_t(const CointEstimate& est, std::size_t index, double value);

/// Two-sided normal p-value helper shared by the Wald reports.
double normal_two_sided_p(double t);

/// Result of estimating the relative money demand equation
/// ln(M/(S*M*)) = kappa0 - kappa1*spread by one method. kappa1 is the
/// negated regression slope so that its sign matches the reported tables.
struct StructuralRecovery {
    bool ok = false;
    double sigma = 0.0;
    double delta = 0.0;
    std::string note;  ///< set when the kappa estimate is not invertible
};

struct Eq15MethodResult {
    CointEstimate estimate;
    double kappa0 = 0.0, kappa1 = 0.0;
    double se_kappa0 = 0.0, se_kappa1 = 0.0;
    LcResult lc;
    WaldResult wald_kappa1_one;  ///< t for H0: kappa1 = 1
    StructuralRecovery structural;
};

struct Eq15Result {
    Eq15MethodResult dols;
    Eq15MethodResult fmols;
};

/// Runs both estimators on a panel holding the deposit-ratio log and the
/// opportunity-cost spread (column names overridable).
Eq15Result estimate_eq15(const AlignedPanel& panel, int max_k = -1,
                         const std::string& y_col = "ln_money_ratio",
                         const std::string& spread_col = "oc_spread");

enum class ScaleKind { consumption, output };
enum class AggregateKind { m2, m1 };

/// Scale-demand equation estimate by one method. omega1 is the negated
/// regression coefficient on ln(oc); omega2 and omega3 keep their regression
/// signs.
struct Eq20MethodResult {
    CointEstimate estimate;
    std::array<double, 4> omega{};
    std::array<double, 4> se{};
    LcResult lc;
    WaldResult wald_omega1_one;
    WaldResult wald_omega3_one;
};

struct Eq20Result {
    Eq20MethodResult dols;
    Eq20MethodResult fmols;
    ScaleKind scale = ScaleKind::consumption;
    AggregateKind aggregate = AggregateKind::m2;
};

Eq20Result estimate_eq20(const AlignedPanel& panel, ScaleKind scale = ScaleKind::consumption,
                         AggregateKind aggregate = AggregateKind::m2, int max_k = -1,
                         const std::string& y_col = "ln_real_money",
                         const std::string& oc_col = "ln_oc",
                         const std::string& spread_col = "oc_spread",
                         const std::string& scale_col = "ln_scale");

}  // namespace mdcoint
