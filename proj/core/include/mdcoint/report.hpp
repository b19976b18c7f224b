#pragma once

#include <string>
#include <vector>

#include "mdcoint/cointegration.hpp"
#include "mdcoint/montecarlo.hpp"
#include "mdcoint/unit_root.hpp"

namespace mdcoint {

struct UnitRootRow {
    std::string variable;
    UnitRootResult adf;
    UnitRootResult pp;
};

/// Plain-text table of ADF/PP results, one variable per row. Stars flag
/// rejection of the unit-root null at 1/5/10%.
std::string render_unit_root_report(const std::vector<UnitRootRow>& rows,
                                    const std::string& dataset_label);
std::string unit_root_csv(const std::vector<UnitRootRow>& rows);

/// Side-by-side DOLS/FMOLS table for the relative money demand equation,
/// with the stability statistic, the Wald test of a unit spread coefficient,
/// and the recovered structural parameters.
std::string render_eq15_report(const Eq15Result& r, const std::string& dataset_label,
                               const std::string& sample, double mean_spread);
std::string eq15_csv(const Eq15Result& r);

/// Side-by-side DOLS/FMOLS table for the scale money demand equation.
std::string render_eq20_report(const Eq20Result& r, const std::string& dataset_label,
                               const std::string& sample);
std::string eq20_csv(const Eq20Result& r);

/// Monte-Carlo summary (bias/RMSE rows, then test rejection rates).
std::string montecarlo_csv(const McSummary& s);

/// Stars for a two-sided normal test of coefficient = 0.
const char* coefficient_stars(double coefficient, double se);

}  // namespace mdcoint
