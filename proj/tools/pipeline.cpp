#include "pipeline.hpp"

#include <cstdlib>
#include <filesystem>

#include "mdcoint/csv.hpp"
#include "mdcoint/transforms.hpp"

namespace mdcoint::cli {

namespace {

// element-wise ratio over the common range
TimeSeries series_ratio(const TimeSeries& num, const TimeSeries& den, const std::string& name) {
    const AlignedPanel p = align({num, den});
    const auto& a = p.column(num.name());
    const auto& b = p.column(den.name());
    std::vector<double> out(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (b[i] == 0.0)
            throw DomainError("division by zero in '" + den.name() + "' at " +
                              p.period(i).to_string());
        out[i] = a[i] / b[i];
    }
    return TimeSeries(name, p.start(), std::move(out));
}

std::string column_name(const Config& cfg, const std::string& key, const std::string& fallback) {
    return cfg.get_or("columns", key, fallback);
}

TimeSeries renamed(const TimeSeries& s, std::string name) {
    return TimeSeries(std::move(name), s.start(), s.values());
}

}  // namespace

ScaleKind scale_kind(const Config& cfg) {
    const std::string s = cfg.get_or("transform", "scale", "consumption");
    if (s == "consumption") return ScaleKind::consumption;
    if (s == "output") return ScaleKind::output;
    throw ConfigError("[transform] scale must be 'consumption' or 'output', got '" + s + "'");
}

AggregateKind aggregate_kind(const Config& cfg) {
    const std::string a = cfg.get_or("transform", "aggregate", "M2");
    if (a == "M2" || a == "m2") return AggregateKind::m2;
    if (a == "M1" || a == "m1") return AggregateKind::m1;
    throw ConfigError("[transform] aggregate must be 'M2' or 'M1', got '" + a + "'");
}

double resolve_phi(const Config& cfg) {
    const bool has_annual = cfg.has("transform", "phi_annual");
    const bool has_monthly = cfg.has("transform", "phi_monthly");
    if (has_annual == has_monthly)
        throw ConfigError("[transform] needs exactly one of phi_annual / phi_monthly");
    if (has_annual) return monthly_phi(cfg.get_double("transform", "phi_annual")).phi_monthly;
    return HoldingCost(cfg.get_double("transform", "phi_monthly")).phi_monthly;
}

AlignedPanel build_regression_panel(const Config& cfg) {
    const std::string monthly_path = cfg.get("data", "monthly");
    const ScaleKind scale = scale_kind(cfg);
    const AggregateKind aggregate = aggregate_kind(cfg);
    const HoldingCost phi(resolve_phi(cfg));

    CsvSchema schema;
    schema.date_column = column_name(cfg, "date", "date");
    const std::string agg_key = aggregate == AggregateKind::m2 ? "aggregate_m2" : "aggregate_m1";
    const std::string agg_col =
        column_name(cfg, agg_key, aggregate == AggregateKind::m2 ? "m2" : "m1");
    schema.columns = {
        {agg_col, "aggregate"},
        {column_name(cfg, "price", "cpi"), "price"},
        {column_name(cfg, "rate", "rate"), "rate"},
        {column_name(cfg, "rate_star", "rate_star"), "rate_star"},
        {column_name(cfg, "deposit_ratio", "deposit_ratio"), "deposit_ratio"},
    };
    if (scale == ScaleKind::output)
        schema.columns.push_back({column_name(cfg, "output", "output"), "scale_raw"});

    const auto series = load_csv(monthly_path, schema);
    const TimeSeries& aggregate_ts = series[0];
    const TimeSeries& price = series[1];
    const TimeSeries& rate = series[2];
    const TimeSeries& rate_star = series[3];
    const TimeSeries& deposit_ratio = series[4];

    const TimeSeries oc = opportunity_cost(annual_to_monthly_rate(rate), phi);
    const TimeSeries oc_star = opportunity_cost(annual_to_monthly_rate(rate_star), phi);
    const AlignedPanel oc_panel = align({oc, oc_star});
    const TimeSeries oc_a(oc.name(), oc_panel.start(), oc_panel.column(oc.name()));
    const TimeSeries oc_b(oc_star.name(), oc_panel.start(), oc_panel.column(oc_star.name()));

    TimeSeries scale_raw = [&]() {
        if (scale == ScaleKind::output) return series[5];
        const std::string quarterly_path = cfg.get("data", "quarterly");
        CsvSchema qschema;
        qschema.date_column = column_name(cfg, "date", "date");
        qschema.columns = {{column_name(cfg, "consumption", "consumption"), "scale_raw"}};
        const auto qseries = load_csv(quarterly_path, qschema);
        return spline_to_monthly(qseries[0]);
    }();

    const TimeSeries ln_money_ratio = renamed(log_series(deposit_ratio), kLnMoneyRatio);
    const TimeSeries ln_real_money =
        renamed(log_series(series_ratio(aggregate_ts, price, "real_money")), kLnRealMoney);
    const TimeSeries ln_oc = renamed(log_series(oc_a), kLnOc);
    const TimeSeries ln_oc_star = renamed(log_series(oc_b), kLnOcStar);
    const TimeSeries oc_spread = renamed(spread(oc_a, oc_b), kSpread);
    const TimeSeries ln_scale =
        renamed(log_series(series_ratio(scale_raw, price, "real_scale")), kLnScale);

    return align({ln_money_ratio, ln_real_money, ln_oc, ln_oc_star, oc_spread, ln_scale});
}

std::string resolve_output_dir(const Config& cfg, const std::string& flag_value) {
    std::string dir = flag_value;
    if (dir.empty()) dir = cfg.get_or("output", "dir", "");
    if (dir.empty()) {
        if (const char* env = std::getenv("MDCOINT_OUT")) dir = env;
    }
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace mdcoint::cli
