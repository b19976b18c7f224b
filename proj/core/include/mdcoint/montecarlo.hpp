#pragma once

#include <string>
#include <vector>

#include "mdcoint/cointegration.hpp"
#include "mdcoint/simulate.hpp"

namespace mdcoint {

/// Replication summary for one estimator and one levels coefficient.
struct McCoefficientRow {
    std::string estimator;  ///< "OLS", "DOLS", "FMOLS"
    std::string name;       ///< "mu1", "a1_1", ...
    double truth = 0.0;
    double mean = 0.0;
    double bias = 0.0;
    double rmse = 0.0;
    double mc_se = 0.0;  ///< standard error of the mean estimate
};

/// Replication summary for one test at a fixed nominal level.
struct McTestRow {
    std::string name;  ///< e.g. "lc_fmols_reject_5pct"
    double rate = 0.0;
    double mc_se = 0.0;
    int replications = 0;
};

struct McSummary {
    std::vector<McCoefficientRow> coefficients;
    std::vector<McTestRow> tests;
    int replications = 0;
};

/// Runs `replications` seeded draws of the triangular design (seed = spec.seed
/// + rep) and summarizes coefficient recovery for static OLS, DOLS and FMOLS
/// of y1 on the regressor block, plus rejection rates of the stability test
/// (FMOLS scores, 5% band) and of ADF at 5% on y1 (I(1): size) and on the
/// levels residual (stationary under cointegration: power).
McSummary run_montecarlo(const SimSpec& spec, int replications, int max_k = -1,
                         bool with_unit_root_rates = true);

/// Rejection rate of the 5%-band stability test under the given design.
McTestRow mc_lc_rejection(const SimSpec& spec, int replications);

/// ADF 5% rejection rate on seeded AR(1) paths (rho = 1 gives a pure random
/// walk, i.e. test size; |rho| < 1 gives power).
McTestRow mc_adf_rejection(double rho, int T, int replications, std::uint64_t seed);

}  // namespace mdcoint
