#pragma once

#include <cstdint>
#include <vector>

#include "mdcoint/config.hpp"
#include "mdcoint/timeseries.hpp"

namespace mdcoint {

/// Stationary AR(1) error process: z_t = rho*z_{t-1} + sd*e_t, |rho| < 1.
struct Ar1Spec {
    double rho = 0.0;
    double sd = 1.0;
};

/// Specification of a cointegrated system in triangular form: two
/// cointegrating regressions y1, y2 on a common m-dimensional I(1) block Y3,
/// whose first differences are drift plus stationary AR(1) noise.
struct SimSpec {
    int m = 1;                   ///< number of I(1) regressors
    std::vector<double> a1;      ///< cointegrating coefficients of y1 (length m)
    std::vector<double> a2;      ///< cointegrating coefficients of y2 (length m)
    double mu1 = 0.0;            ///< intercept of y1
    double mu2 = 0.0;            ///< intercept of y2
    std::vector<double> mu3;     ///< drift of the regressor block (length m)
    int T = 200;                 ///< sample length, >= 50
    Ar1Spec z1;                  ///< equation error of y1
    Ar1Spec z2;                  ///< equation error of y2
    std::vector<Ar1Spec> z3;     ///< regressor innovations (length m)
    double endo_corr = 0.0;      ///< corr(z1 innovation, average Z3 innovation), |.| < 1
    std::uint64_t seed = 0;

    void validate() const;

    /// Reads the [sim] section of a config (keys: m, T, seed, a1, a2, mu1,
    /// mu2, mu3, z1_rho, z1_sd, z2_rho, z2_sd, z3_rho, z3_sd, endo_corr).
    static SimSpec from_config(const Config& cfg, const std::string& section = "sim");
    void to_config(Config& cfg, const std::string& section = "sim") const;
};

/// Simulates the triangular system. Deterministic given spec.seed; returns a
/// monthly panel with columns y1, y2, Y3_1..Y3_m starting at 2000-01.
AlignedPanel simulate_triangular(const SimSpec& spec);

}  // namespace mdcoint
