#include "mdcoint/structural.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mdcoint {

namespace {

constexpr double kUnitElasticityTol = 1e-9;  // |sigma-1| below this -> Cobb-Douglas branch

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be positive, got " + std::to_string(v));
}

// log of a two-term CES aggregate: (1/e) * ln(w*a^e + (1-w)*b^e), evaluated
// in log space so large negative exponents (sigma near 0) do not overflow
double log_ces(double ln_a, double ln_b, double w, double e) {
    const double ea = e * ln_a;
    const double eb = e * ln_b;
    const double m = std::max(ea, eb);
    return (m + std::log(w * std::exp(ea - m) + (1.0 - w) * std::exp(eb - m))) / e;
}

}  // namespace

void StructuralParams::validate() const {
    if (!(theta > 0.0 && theta < 1.0))
        throw DomainError("theta must lie in (0,1), got " + std::to_string(theta));
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("delta must lie in (0,1), got " + std::to_string(delta));
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw DomainError("sigma must be nonnegative, got " + std::to_string(sigma));
    if (!(zeta >= 0.0) || !std::isfinite(zeta))
        throw DomainError("zeta must be nonnegative, got " + std::to_string(zeta));
    if (!(phi >= 0.0)) throw DomainError("phi must be nonnegative, got " + std::to_string(phi));
    if (!std::isfinite(s)) throw DomainError("long-run spread s must be finite");
}

double StructuralParams::gamma() const {
    if (!(sigma > 0.0)) throw DomainError("gamma undefined for sigma = 0");
    return (sigma - 1.0) / sigma;
}

double StructuralParams::eta() const {
    if (!(zeta > 0.0)) throw DomainError("eta undefined for zeta = 0");
    return (zeta - 1.0) / zeta;
}

double StructuralParams::psi() const {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("psi requires delta in (0,1), got " + std::to_string(delta));
    return std::pow((1.0 - delta) / delta, sigma);
}

double liquidity(double m_real, double fm_real, double delta, double sigma) {
    require_positive(m_real, "domestic real balance");
    require_positive(fm_real, "foreign real balance");
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("delta must lie in (0,1), got " + std::to_string(delta));
    if (!(sigma >= 0.0)) throw DomainError("sigma must be nonnegative");

    if (sigma == 0.0) return std::min(m_real, fm_real);  // Leontief
    if (std::abs(sigma - 1.0) < kUnitElasticityTol)      // Cobb-Douglas
        return std::exp(delta * std::log(m_real) + (1.0 - delta) * std::log(fm_real));
    const double g = (sigma - 1.0) / sigma;
    return std::exp(log_ces(std::log(m_real), std::log(fm_real), delta, g));
}

double utility(double x_real, double m_real, double fm_real, const StructuralParams& p) {
    require_positive(x_real, "consumption");
    const double liq = liquidity(m_real, fm_real, p.delta, p.sigma);
    if (p.zeta == 0.0) return std::min(x_real, liq);
    if (std::abs(p.zeta - 1.0) < kUnitElasticityTol)
        return std::exp(p.theta * std::log(x_real) + (1.0 - p.theta) * std::log(liq));
    const double e = (p.zeta - 1.0) / p.zeta;
    return std::exp(log_ces(std::log(x_real), std::log(liq), p.theta, e));
}

double optimal_ratio(double oc, double oc_star, double sigma, double delta) {
    require_positive(oc, "opportunity cost");
    require_positive(oc_star, "foreign opportunity cost");
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("delta must lie in (0,1), got " + std::to_string(delta));
    if (!(sigma >= 0.0)) throw DomainError("sigma must be nonnegative");
    if (sigma == 0.0) return 1.0;  // perfect complements: fixed proportions
    return std::exp(sigma * (std::log((1.0 - delta) / delta) + std::log(oc / oc_star)));
}

namespace {

// log of the closed-form demand, shared by the exact and linearized paths
double log_money_demand(double ln_oc, double ln_spread_arg, double x_real,
                        const StructuralParams& p) {
    // ln_spread_arg = ln(oc) - ln(oc*)
    const double base = p.zeta * std::log((1.0 - p.theta) / p.theta) - p.zeta * ln_oc +
                        std::log(x_real);
    if (std::abs(p.sigma - 1.0) < kUnitElasticityTol) {
        // sigma -> 1 limit of the delta and bracket terms
        const double l = std::log((1.0 - p.delta) / p.delta);
        return base + p.zeta * std::log(p.delta) +
               (p.zeta - 1.0) * (1.0 - p.delta) * (l + ln_spread_arg);
    }
    const double sm1 = p.sigma - 1.0;
    // psi * (oc/oc*)^(sigma-1), kept in logs until the log1p
    const double ln_tail = p.sigma * std::log((1.0 - p.delta) / p.delta) + sm1 * ln_spread_arg;
    return base + p.sigma * (p.zeta - 1.0) / sm1 * std::log(p.delta) +
           (p.zeta - p.sigma) / sm1 * std::log1p(std::exp(ln_tail));
}

}  // namespace

double money_demand_exact(double oc, double oc_star, double x_real,
                          const StructuralParams& p) {
    require_positive(oc, "opportunity cost");
    require_positive(oc_star, "foreign opportunity cost");
    require_positive(x_real, "real consumption");
    p.validate();
    return std::exp(
        log_money_demand(std::log(oc), std::log(oc) - std::log(oc_star), x_real, p));
}

double money_demand_linearized(double oc, double oc_star, double x_real,
                               const StructuralParams& p) {
    require_positive(oc, "opportunity cost");
    require_positive(oc_star, "foreign opportunity cost");
    require_positive(x_real, "real consumption");
    p.validate();
    const bool cd = std::abs(p.sigma - 1.0) < kUnitElasticityTol;
    const ReducedForm20 w = omega_from_structural(p, cd);
    const double u = std::log(oc) - std::log(oc_star);
    return w.omega0 - w.omega1 * std::log(oc) + w.omega2 * u + w.omega3 * std::log(x_real);
}

namespace {

// extended-precision log-utility for the finite-difference verifier; the
// consumption elasticity can be minuscule when zeta is large and costs are
// small, and double precision would drown it in rounding noise
long double log_ces_ld(long double la, long double lb, long double w, long double e) {
    const long double ea = e * la;
    const long double eb = e * lb;
    const long double mx = std::max(ea, eb);
    return (mx + std::log(w * std::exp(ea - mx) + (1.0L - w) * std::exp(eb - mx))) / e;
}

long double ln_utility_ld(const StructuralParams& p, long double lx, long double lm,
                          long double lf) {
    const long double delta = p.delta;
    const long double theta = p.theta;
    long double l_liq;
    if (std::abs(p.sigma - 1.0) < kUnitElasticityTol) {
        l_liq = delta * lm + (1.0L - delta) * lf;
    } else {
        const long double g = (static_cast<long double>(p.sigma) - 1.0L) / p.sigma;
        l_liq = log_ces_ld(lm, lf, delta, g);
    }
    if (std::abs(p.zeta - 1.0) < kUnitElasticityTol) return theta * lx + (1.0L - theta) * l_liq;
    const long double e = (static_cast<long double>(p.zeta) - 1.0L) / p.zeta;
    return log_ces_ld(lx, l_liq, theta, e);
}

}  // namespace

FocResiduals verify_foc(const StructuralParams& p, double oc, double oc_star, double x_real) {
    require_positive(oc, "opportunity cost");
    require_positive(oc_star, "foreign opportunity cost");
    require_positive(x_real, "real consumption");
    p.validate();
    if (!(p.sigma > 0.0) || !(p.zeta > 0.0))
        throw DomainError("verify_foc needs strictly positive elasticities (the Leontief "
                          "corner has no smooth first-order conditions)");

    // the first-order conditions pin only ratios given x; the closed-form
    // demand fixes the absolute scale of (m, fm)
    const double m = money_demand_exact(oc, oc_star, x_real, p);
    const double fm = optimal_ratio(oc, oc_star, p.sigma, p.delta) * m;

    const long double lx = std::log(static_cast<long double>(x_real));
    const long double lm = std::log(static_cast<long double>(m));
    const long double lf = std::log(static_cast<long double>(fm));

    // central differences of ln U in log-argument space (relative step 1e-6)
    // give the elasticities e_v = v U_v / U directly
    constexpr long double h = 1e-6L;
    auto elasticity = [&](int which) {
        long double a[3] = {lx, lm, lf};
        a[which] += h;
        const long double up = ln_utility_ld(p, a[0], a[1], a[2]);
        a[which] -= 2.0L * h;
        const long double dn = ln_utility_ld(p, a[0], a[1], a[2]);
        const long double d = (up - dn) / (2.0L * h);
        if (!std::isfinite(static_cast<double>(d)))
            throw EstimationError("non-finite numerical derivative in verify_foc");
        return d;
    };
    const long double e_x = elasticity(0);
    const long double e_m = elasticity(1);
    const long double e_f = elasticity(2);
    if (!(e_x > 0.0L)) throw EstimationError("non-positive marginal utility of consumption");

    // U_m / U_x = (e_m x) / (e_x m) must equal oc, and likewise for fm
    const long double r_dom = (e_m * x_real) / (e_x * m * oc) - 1.0L;
    const long double r_for = (e_f * x_real) / (e_x * fm * oc_star) - 1.0L;
    return {static_cast<double>(r_dom), static_cast<double>(r_for)};
}

ReducedForm15 kappa_from_structural(double sigma, double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("delta must lie in (0,1), got " + std::to_string(delta));
    if (!(sigma >= 0.0)) throw DomainError("sigma must be nonnegative");
    return {sigma * std::log(delta / (1.0 - delta)), sigma};
}

std::pair<double, double> structural_from_kappa(const ReducedForm15& k) {
    if (!(k.kappa1 > 0.0))
        throw DomainError("kappa1 = " + std::to_string(k.kappa1) +
                          " is not invertible: the implied elasticity of substitution "
                          "must be positive");
    const double sigma = k.kappa1;
    const double delta = 1.0 / (1.0 + std::exp(-k.kappa0 / sigma));
    return {sigma, delta};
}

ReducedForm20 omega_from_structural(const StructuralParams& p, bool cobb_douglas_limit) {
    p.validate();
    if (std::abs(p.sigma - 1.0) < kUnitElasticityTol) {
        if (!cobb_douglas_limit)
            throw DomainError("omega map is singular at sigma = 1; request the "
                              "Cobb-Douglas limit explicitly");
        // at sigma = 1 the demand is exactly linear in the spread
        const double l = std::log((1.0 - p.delta) / p.delta);
        ReducedForm20 w;
        w.omega0 = p.zeta * std::log((1.0 - p.theta) / p.theta) + p.zeta * std::log(p.delta) +
                   (p.zeta - 1.0) * (1.0 - p.delta) * l;
        w.omega1 = p.zeta;
        w.omega2 = (p.zeta - 1.0) * (1.0 - p.delta);
        w.omega3 = 1.0;
        return w;
    }
    const double sm1 = p.sigma - 1.0;
    const double psi = p.psi();
    const double e = psi * std::exp(sm1 * p.s);  // psi * exp((sigma-1)*s)
    const double share = e / (1.0 + e);
    ReducedForm20 w;
    w.omega0 = p.zeta * std::log((1.0 - p.theta) / p.theta) +
               p.sigma * (p.zeta - 1.0) / sm1 * std::log(p.delta) +
               (p.zeta - p.sigma) / sm1 * (std::log1p(e) - p.s * sm1 * share);
    w.omega1 = p.zeta;
    w.omega2 = (p.zeta - p.sigma) * share;
    w.omega3 = 1.0;
    return w;
}

const char* substitution_label(double sigma) {
    if (sigma < 1.0) return "complementarity";
    if (sigma > 1.0) return "substitutability";
    return "unit elasticity";
}

}  // namespace mdcoint
