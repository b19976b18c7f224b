#pragma once

#include <utility>

#include "mdcoint/errors.hpp"

namespace mdcoint {

/// Deep parameters of the two-money CES demand system.
///
/// Utility nests consumption with a liquidity aggregate produced from real
/// domestic and foreign money balances; both nests are CES. sigma is the
/// elasticity of substitution between the two moneys, zeta the elasticity
/// between consumption and liquidity. sigma (zeta) = 0 is the Leontief
/// limit, = 1 the Cobb-Douglas limit.
struct StructuralParams {
    double theta = 0.5;  ///< consumption share in utility, in (0,1)
    double delta = 0.5;  ///< domestic-money share in liquidity, in (0,1)
    double sigma = 0.5;  ///< money-money elasticity of substitution, >= 0
    double zeta = 0.5;   ///< consumption-liquidity elasticity of substitution, >= 0
    double phi = 0.0;    ///< monthly holding cost, >= 0
    double s = 0.0;      ///< long-run log opportunity-cost spread

    void validate() const;

    double gamma() const;  ///< (sigma-1)/sigma, requires sigma > 0
    double eta() const;    ///< (zeta-1)/zeta, requires zeta > 0
    double psi() const;    ///< ((1-delta)/delta)^sigma
};

/// Cointegrating-vector parameterization of the relative-demand equation:
/// ln(M/(S*M*)) = kappa0 - kappa1 * spread.
struct ReducedForm15 {
    double kappa0 = 0.0;
    double kappa1 = 0.0;
};

/// Cointegrating-vector parameterization of the scale-demand equation:
/// ln(M/P) = omega0 - omega1*ln(oc) + omega2*spread + omega3*ln(X/P).
struct ReducedForm20 {
    double omega0 = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double omega3 = 0.0;
};

/// CES liquidity aggregate of real domestic and foreign balances.
/// sigma = 1 evaluates the Cobb-Douglas limit m^delta * fm^(1-delta);
/// sigma = 0 the Leontief limit min(m, fm).
double liquidity(double m_real, double fm_real, double delta, double sigma);

/// CES utility over consumption and the liquidity aggregate; zeta = 1
/// evaluates the Cobb-Douglas limit.
double utility(double x_real, double m_real, double fm_real, const StructuralParams& p);

/// Optimal foreign-to-domestic balance ratio (S*M*)/M implied by the
/// intratemporal first-order conditions: [((1-delta)/delta)*(oc/oc*)]^sigma.
double optimal_ratio(double oc, double oc_star, double sigma, double delta);

/// Normalized first-order-condition residuals at the model optimum,
/// computed with central finite differences of the utility function.
struct FocResiduals {
    double domestic = 0.0;  ///< U_m / (oc * U_x) - 1
    double foreign = 0.0;   ///< U_fm / (oc* * U_x) - 1
};

/// Places (m, fm) at the closed-form optimum for given opportunity costs and
/// consumption, then checks both first-order conditions numerically. A
/// correct demand function makes both residuals vanish.
FocResiduals verify_foc(const StructuralParams& p, double oc, double oc_star, double x_real);

/// Closed-form real money demand M/P given opportunity costs and real
/// consumption. Scale elasticity is unitary: demand is linear in x_real.
double money_demand_exact(double oc, double oc_star, double x_real,
                          const StructuralParams& p);

/// Log money demand linearized in the spread around p.s; exact at
/// spread == p.s, with quadratic error away from it.
double money_demand_linearized(double oc, double oc_star, double x_real,
                               const StructuralParams& p);

/// Forward map to the relative-demand cointegrating vector:
/// kappa0 = sigma*ln(delta/(1-delta)), kappa1 = sigma.
ReducedForm15 kappa_from_structural(double sigma, double delta);

/// Inverse map; requires kappa1 > 0 (a non-positive estimated elasticity is
/// not invertible). Returns (sigma, delta).
std::pair<double, double> structural_from_kappa(const ReducedForm15& k);

/// Forward map to the scale-demand cointegrating vector. sigma = 1 is a
/// removable singularity: pass cobb_douglas_limit = true to evaluate the
/// limit, otherwise it is rejected.
ReducedForm20 omega_from_structural(const StructuralParams& p, bool cobb_douglas_limit = false);

/// "complementarity" for sigma < 1, "substitutability" for sigma > 1.
const char* substitution_label(double sigma);

}  // namespace mdcoint
