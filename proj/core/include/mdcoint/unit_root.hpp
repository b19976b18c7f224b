#pragma once

#include <vector>

#include "mdcoint/timeseries.hpp"

namespace mdcoint {

enum class UnitRootTest { adf, pp };

/// Rejection band against the MacKinnon constant-only asymptotic critical
/// values (-3.43 / -2.86 / -2.57 at 1/5/10%).
enum class Significance { none, at_10pct, at_5pct, at_1pct };

struct UnitRootResult {
    UnitRootTest test = UnitRootTest::adf;
    double statistic = 0.0;
    double lags_or_bandwidth = 0.0;  ///< ADF: selected lag order; PP: kernel bandwidth
    Significance significance = Significance::none;
    int t_effective = 0;
};

/// Augmented Dickey-Fuller test with a constant. Lag order is chosen by AIC
/// over 0..max_lags on a common sample; max_lags < 0 applies the Schwert
/// ceiling floor(12*(T/100)^(1/4)). Requires T >= 25 and a non-constant
/// series.
UnitRootResult adf(const std::vector<double>& y, int max_lags = -1);
UnitRootResult adf(const TimeSeries& y, int max_lags = -1);

/// Phillips-Perron Z_t test with a constant; the serial-correlation
/// correction uses the Bartlett kernel at the Newey-West automatic bandwidth.
UnitRootResult pp(const std::vector<double>& y);
UnitRootResult pp(const TimeSeries& y);

Significance unit_root_significance(double statistic);
const char* significance_stars(Significance s);

}  // namespace mdcoint
