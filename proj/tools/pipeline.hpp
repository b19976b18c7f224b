#pragma once

#include <string>

#include "mdcoint/config.hpp"
#include "mdcoint/cointegration.hpp"
#include "mdcoint/timeseries.hpp"

namespace mdcoint::cli {

/// Canonical regression panel column names produced by the transform step.
inline constexpr const char* kLnMoneyRatio = "ln_money_ratio";
inline constexpr const char* kLnRealMoney = "ln_real_money";
inline constexpr const char* kLnOc = "ln_oc";
inline constexpr const char* kLnOcStar = "ln_oc_star";
inline constexpr const char* kSpread = "oc_spread";
inline constexpr const char* kLnScale = "ln_scale";

ScaleKind scale_kind(const Config& cfg);
AggregateKind aggregate_kind(const Config& cfg);

/// Holding cost from [transform]: exactly one of phi_annual / phi_monthly.
double resolve_phi(const Config& cfg);

/// Ingests the raw CSVs named in [data]/[columns] and applies the
/// deterministic transforms: rates to monthly opportunity costs and their
/// spread, nominal aggregate to log real money, deposit ratio to its log,
/// quarterly consumption through the cubic spline (or monthly output),
/// everything aligned to the common monthly range.
AlignedPanel build_regression_panel(const Config& cfg);

/// Output directory: --out flag beats [output] dir beats $MDCOINT_OUT
/// beats ".". Creates the directory if needed.
std::string resolve_output_dir(const Config& cfg, const std::string& flag_value);

}  // namespace mdcoint::cli
