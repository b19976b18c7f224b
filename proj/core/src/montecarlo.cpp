#include "mdcoint/montecarlo.hpp"

#include <cmath>

#include "mdcoint/ols.hpp"
#include "mdcoint/rng.hpp"
#include "mdcoint/unit_root.hpp"

namespace mdcoint {

namespace {

struct Accumulator {
    double sum = 0.0;
    double sumsq = 0.0;
    int n = 0;
    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++n;
    }
    double mean() const { return n ? sum / n : 0.0; }
    double var() const {
        if (n < 2) return 0.0;
        const double m = mean();
        return (sumsq - n * m * m) / (n - 1);
    }
    double se_of_mean() const { return n ? std::sqrt(var() / n) : 0.0; }
};

double rate_se(double rate, int n) {
    return n ? std::sqrt(rate * (1.0 - rate) / n) : 0.0;
}

bool rejects_at_5pct(const UnitRootResult& r) {
    return r.significance == Significance::at_5pct || r.significance == Significance::at_1pct;
}

}  // namespace

McSummary run_montecarlo(const SimSpec& spec, int replications, int max_k,
                         bool with_unit_root_rates) {
    if (replications < 1) throw EstimationError("montecarlo: need at least 1 replication");
    spec.validate();

    const int m = spec.m;
    const std::size_t ncoef = 1 + static_cast<std::size_t>(m);
    std::vector<std::string> methods = {"OLS", "DOLS", "FMOLS"};
    std::vector<std::vector<Accumulator>> acc(methods.size(),
                                              std::vector<Accumulator>(ncoef));
    std::vector<std::vector<Accumulator>> sqerr(methods.size(),
                                                std::vector<Accumulator>(ncoef));
    int lc_reject = 0;
    int adf_y1_reject = 0;
    int adf_resid_reject = 0;

    std::vector<std::string> x_names;
    for (int j = 1; j <= m; ++j) x_names.push_back("Y3_" + std::to_string(j));

    for (int rep = 0; rep < replications; ++rep) {
        SimSpec draw = spec;
        draw.seed = spec.seed + static_cast<std::uint64_t>(rep);
        const AlignedPanel panel = simulate_triangular(draw);
        const auto& y = panel.column("y1");
        const Matrix X = panel.to_matrix(x_names);

        const OlsFit sols = ols(y, X, true);
        const CointEstimate d = dols(y, X, max_k);
        const CointEstimate f = fmols(y, X);

        for (std::size_t i = 0; i < ncoef; ++i) {
            const double truth = i == 0 ? spec.mu1 : spec.a1[i - 1];
            const double vals[3] = {sols.coefficients[i], d.coefficients[i],
                                    f.coefficients[i]};
            for (std::size_t mth = 0; mth < 3; ++mth) {
                acc[mth][i].add(vals[mth]);
                sqerr[mth][i].add((vals[mth] - truth) * (vals[mth] - truth));
            }
        }

        if (hansen_lc(f, X).p_value <= 0.05) ++lc_reject;

        if (with_unit_root_rates) {
            if (rejects_at_5pct(adf(y))) ++adf_y1_reject;
            if (rejects_at_5pct(adf(f.residuals))) ++adf_resid_reject;
        }
    }

    McSummary out;
    out.replications = replications;
    for (std::size_t mth = 0; mth < methods.size(); ++mth) {
        for (std::size_t i = 0; i < ncoef; ++i) {
            McCoefficientRow row;
            row.estimator = methods[mth];
            row.name = i == 0 ? "mu1" : "a1_" + std::to_string(i);
            row.truth = i == 0 ? spec.mu1 : spec.a1[i - 1];
            row.mean = acc[mth][i].mean();
            row.bias = row.mean - row.truth;
            row.rmse = std::sqrt(sqerr[mth][i].mean());
            row.mc_se = acc[mth][i].se_of_mean();
            out.coefficients.push_back(row);
        }
    }
    const double lc_rate = static_cast<double>(lc_reject) / replications;
    out.tests.push_back({"lc_fmols_reject_5pct", lc_rate, rate_se(lc_rate, replications),
                         replications});
    if (with_unit_root_rates) {
        const double ry = static_cast<double>(adf_y1_reject) / replications;
        const double rr = static_cast<double>(adf_resid_reject) / replications;
        out.tests.push_back({"adf_y1_reject_5pct", ry, rate_se(ry, replications), replications});
        out.tests.push_back(
            {"adf_residual_reject_5pct", rr, rate_se(rr, replications), replications});
    }
    return out;
}

McTestRow mc_lc_rejection(const SimSpec& spec, int replications) {
    spec.validate();
    std::vector<std::string> x_names;
    for (int j = 1; j <= spec.m; ++j) x_names.push_back("Y3_" + std::to_string(j));
    int reject = 0;
    for (int rep = 0; rep < replications; ++rep) {
        SimSpec draw = spec;
        draw.seed = spec.seed + static_cast<std::uint64_t>(rep);
        const AlignedPanel panel = simulate_triangular(draw);
        const auto& y = panel.column("y1");
        const Matrix X = panel.to_matrix(x_names);
        if (hansen_lc(fmols(y, X), X).p_value <= 0.05) ++reject;
    }
    const double rate = static_cast<double>(reject) / replications;
    return {"lc_fmols_reject_5pct", rate, rate_se(rate, replications), replications};
}

McTestRow mc_adf_rejection(double rho, int T, int replications, std::uint64_t seed) {
    int reject = 0;
    for (int rep = 0; rep < replications; ++rep) {
        NormalRng rng(seed + static_cast<std::uint64_t>(rep));
        std::vector<double> y(static_cast<std::size_t>(T));
        double prev = rng.next();
        y[0] = prev;
        for (int t = 1; t < T; ++t) {
            prev = rho * prev + rng.next();
            y[static_cast<std::size_t>(t)] = prev;
        }
        if (rejects_at_5pct(adf(y))) ++reject;
    }
    const double rate = static_cast<double>(reject) / replications;
    const std::string label = rho >= 1.0 ? "adf_size_5pct" : "adf_power_5pct";
    return {label, rate, rate_se(rate, replications), replications};
}

}  // namespace mdcoint
