#pragma once

#include "mdcoint/timeseries.hpp"

namespace mdcoint {

/// Proportional per-month cost of holding money (account fees, card costs,
/// theft/loss risk). Keeps the opportunity cost positive through episodes of
/// zero or mildly negative interest rates.
struct HoldingCost {
    double phi_monthly = 0.0;

    explicit HoldingCost(double phi);
};

/// Converts an annual cost rate (decimal fraction) to the equivalent monthly
/// rate: (1 + annual)^(1/12) - 1.
HoldingCost monthly_phi(double annual_rate);

/// Opportunity cost of holding money: oc_t = (rate_t + phi) / (1 + rate_t),
/// where rate_t is the monthly decimal rate set at t for the period t -> t+1
/// (discounted to the present). The result keeps the input's date index.
TimeSeries opportunity_cost(const TimeSeries& rate, HoldingCost phi);

/// Annualized percent rates to monthly decimals: (1 + a/100)^(1/12) - 1.
TimeSeries annual_to_monthly_rate(const TimeSeries& annual_percent);

/// Element-wise natural log; rejects non-positive values naming the date.
TimeSeries log_series(const TimeSeries& s);

/// ln(oc_t) - ln(oc*_t) for two aligned positive monthly series.
TimeSeries spread(const TimeSeries& oc, const TimeSeries& oc_star);

/// Natural cubic spline interpolation of a quarterly series to monthly
/// frequency. Each quarterly value is pinned to the middle month of its
/// quarter; the output covers the months between the first and last knot and
/// passes through every knot exactly.
TimeSeries spline_to_monthly(const TimeSeries& quarterly);

}  // namespace mdcoint
