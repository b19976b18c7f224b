#include "mdcoint/transforms.hpp"

#include <cmath>

namespace mdcoint {

HoldingCost::HoldingCost(double phi) : phi_monthly(phi) {
    if (!(phi >= 0.0) || !std::isfinite(phi))
        throw DomainError("holding cost must be nonnegative, got " + std::to_string(phi));
}

HoldingCost monthly_phi(double annual_rate) {
    if (!(annual_rate > -1.0))
        throw DomainError("annual holding cost must exceed -1, got " +
                          std::to_string(annual_rate));
    return HoldingCost(std::pow(1.0 + annual_rate, 1.0 / 12.0) - 1.0);
}

TimeSeries opportunity_cost(const TimeSeries& rate, HoldingCost phi) {
    std::vector<double> out(rate.size());
    for (std::size_t t = 0; t < rate.size(); ++t) {
        const double r = rate[t];
        if (!(r > -1.0))
            throw DomainError("rate at " + rate.period(t).to_string() + " is " +
                              std::to_string(r) + ", must exceed -1");
        if (!(r + phi.phi_monthly > 0.0))
            throw DomainError("rate plus holding cost at " + rate.period(t).to_string() +
                              " is non-positive (negative-rate regime exceeds phi)");
        out[t] = (r + phi.phi_monthly) / (1.0 + r);
    }
    return rate.with_values("oc_" + rate.name(), std::move(out));
}

TimeSeries annual_to_monthly_rate(const TimeSeries& annual_percent) {
    std::vector<double> out(annual_percent.size());
    for (std::size_t t = 0; t < annual_percent.size(); ++t) {
        const double a = annual_percent[t];
        if (!(a > -100.0))
            throw DomainError("annual rate at " + annual_percent.period(t).to_string() +
                              " is " + std::to_string(a) + " percent, must exceed -100");
        out[t] = std::pow(1.0 + a / 100.0, 1.0 / 12.0) - 1.0;
    }
    return annual_percent.with_values(annual_percent.name() + "_monthly", std::move(out));
}

TimeSeries log_series(const TimeSeries& s) {
    std::vector<double> out(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (!(s[t] > 0.0))
            throw DomainError("log of non-positive value in '" + s.name() + "' at " +
                              s.period(t).to_string());
        out[t] = std::log(s[t]);
    }
    return s.with_values("ln_" + s.name(), std::move(out));
}

TimeSeries spread(const TimeSeries& oc, const TimeSeries& oc_star) {
    if (oc.frequency() != Frequency::monthly || oc_star.frequency() != Frequency::monthly)
        throw AlignmentError("spread: both series must be monthly");
    if (oc.start() != oc_star.start() || oc.size() != oc_star.size())
        throw AlignmentError("spread: series '" + oc.name() + "' and '" + oc_star.name() +
                             "' are not aligned");
    std::vector<double> out(oc.size());
    for (std::size_t t = 0; t < oc.size(); ++t) {
        if (!(oc[t] > 0.0) || !(oc_star[t] > 0.0))
            throw DomainError("spread: non-positive opportunity cost at " +
                              oc.period(t).to_string());
        out[t] = std::log(oc[t]) - std::log(oc_star[t]);
    }
    return oc.with_values("spread", std::move(out));
}

TimeSeries spline_to_monthly(const TimeSeries& quarterly) {
    if (quarterly.frequency() != Frequency::quarterly)
        throw DomainError("spline_to_monthly expects a quarterly series, got '" +
                          quarterly.name() + "'");
    const std::size_t n = quarterly.size();
    if (n < 4)
        throw DomainError("spline_to_monthly needs at least 4 quarterly observations, got " +
                          std::to_string(n));

    // knot t_k sits at the middle month of quarter k; quarters are 3 months
    // apart so the abscissas are equally spaced with h = 3
    const int first_month = 3 * quarterly.start().index + 1;
    const double h = 3.0;
    const auto& y = quarterly.values();

    // natural spline: zero second derivative at both ends; interior second
    // derivatives m solve a tridiagonal system (Thomas algorithm)
    std::vector<double> m(n, 0.0);
    if (n > 2) {
        const std::size_t k = n - 2;  // unknowns m[1..n-2]
        std::vector<double> diag(k, 2.0 * h / 3.0);
        std::vector<double> off(k, h / 6.0);
        std::vector<double> rhs(k);
        for (std::size_t i = 0; i < k; ++i)
            rhs[i] = (y[i + 2] - 2.0 * y[i + 1] + y[i]) / h;
        for (std::size_t i = 1; i < k; ++i) {
            const double w = off[i] / diag[i - 1];
            diag[i] -= w * off[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        m[k] = rhs[k - 1] / diag[k - 1];
        for (std::size_t i = k - 1; i >= 1; --i)
            m[i] = (rhs[i - 1] - off[i - 1] * m[i + 1]) / diag[i - 1];
    }

    const std::size_t out_len = 3 * (n - 1) + 1;
    std::vector<double> out(out_len);
    for (std::size_t t = 0; t < out_len; ++t) {
        std::size_t seg = t / 3;
        if (seg > n - 2) seg = n - 2;
        const double a = static_cast<double>(t) - 3.0 * static_cast<double>(seg);  // x - x_i
        const double b = h - a;                                                    // x_{i+1} - x
        out[t] = m[seg] * b * b * b / (6.0 * h) + m[seg + 1] * a * a * a / (6.0 * h) +
                 (y[seg] / h - m[seg] * h / 6.0) * b +
                 (y[seg + 1] / h - m[seg + 1] * h / 6.0) * a;
    }
    return TimeSeries(quarterly.name() + "_monthly", {Frequency::monthly, first_month},
                      std::move(out));
}

}  // namespace mdcoint
