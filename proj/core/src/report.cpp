#include "mdcoint/report.hpp"

#include <cmath>

#include "mdcoint/format.hpp"
#include "mdcoint/structural.hpp"

namespace mdcoint {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string num(double v, int dec = 4) { return format_fixed(v, dec); }

const char* method_name(CointMethod m) { return m == CointMethod::dols ? "DOLS" : "FMOLS"; }

std::string coef_cell(double v, double se) {
    return num(v) + coefficient_stars(v, se);
}

std::string se_cell(double se) { return "(" + num(se) + ")"; }

std::string lc_cell(const LcResult& lc) {
    return num(lc.statistic, 3) + " (" + lc.p_band + ")";
}

std::string wald_cell(const WaldResult& w) {
    return num(std::abs(w.t_statistic), 2) + " (" + num(w.p_value, 2) + ")";
}

constexpr std::size_t kLabel = 22;
constexpr std::size_t kCol = 18;

void row(std::string& out, const std::string& label, const std::string& a,
         const std::string& b) {
    out += pad(label, kLabel) + pad(a, kCol) + pad(b, kCol);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
}

}  // namespace

const char* coefficient_stars(double coefficient, double se) {
    if (!(se > 0.0)) return "";
    const double t = std::abs(coefficient / se);
    if (t >= 2.5758293035489004) return "***";
    if (t >= 1.959963984540054) return "**";
    if (t >= 1.6448536269514722) return "*";
    return "";
}

std::string render_unit_root_report(const std::vector<UnitRootRow>& rows,
                                    const std::string& dataset_label) {
    std::string out;
    out += "Unit root tests (regressions include a constant)\n";
    out += "Dataset: " + dataset_label + "\n\n";
    out += pad("variable", kLabel) + pad("ADF", 12) + pad("lags", 6) + pad("PP", 12) +
           pad("bandwidth", 10) + "\n";
    for (const auto& r : rows) {
        out += pad(r.variable, kLabel);
        out += pad(num(r.adf.statistic, 3) + significance_stars(r.adf.significance), 12);
        out += pad(std::to_string(static_cast<int>(r.adf.lags_or_bandwidth)), 6);
        out += pad(num(r.pp.statistic, 3) + significance_stars(r.pp.significance), 12);
        out += pad(num(r.pp.lags_or_bandwidth, 2), 10);
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    out += "\nNull hypothesis: unit root. ***/**/* reject at the 1/5/10% level\n";
    out += "(asymptotic constant-only critical values -3.43 / -2.86 / -2.57).\n";
    return out;
}

std::string unit_root_csv(const std::vector<UnitRootRow>& rows) {
    std::string out = "variable,test,statistic,lags_or_bandwidth,stars,t_effective\n";
    for (const auto& r : rows) {
        out += r.variable + ",ADF," + format_shortest(r.adf.statistic) + "," +
               format_shortest(r.adf.lags_or_bandwidth) + "," +
               significance_stars(r.adf.significance) + "," +
               std::to_string(r.adf.t_effective) + "\n";
        out += r.variable + ",PP," + format_shortest(r.pp.statistic) + "," +
               format_shortest(r.pp.lags_or_bandwidth) + "," +
               significance_stars(r.pp.significance) + "," + std::to_string(r.pp.t_effective) +
               "\n";
    }
    return out;
}

std::string render_eq15_report(const Eq15Result& r, const std::string& dataset_label,
                               const std::string& sample, double mean_spread) {
    std::string out;
    out += "Relative money demand: ln(M/(S*M*)) = kappa0 - kappa1 * spread\n";
    out += "Dataset: " + dataset_label + "    Sample: " + sample + "\n\n";
    row(out, "", "DOLS", "FMOLS");
    row(out, "kappa0", coef_cell(r.dols.kappa0, r.dols.se_kappa0),
        coef_cell(r.fmols.kappa0, r.fmols.se_kappa0));
    row(out, "", se_cell(r.dols.se_kappa0), se_cell(r.fmols.se_kappa0));
    row(out, "kappa1", coef_cell(r.dols.kappa1, r.dols.se_kappa1),
        coef_cell(r.fmols.kappa1, r.fmols.se_kappa1));
    row(out, "", se_cell(r.dols.se_kappa1), se_cell(r.fmols.se_kappa1));
    row(out, "R^2", num(r.dols.estimate.r_squared, 3), num(r.fmols.estimate.r_squared, 3));
    row(out, "Lc statistic", lc_cell(r.dols.lc), lc_cell(r.fmols.lc));
    row(out, "Wald |t|: kappa1=1", wald_cell(r.dols.wald_kappa1_one),
        wald_cell(r.fmols.wald_kappa1_one));
    row(out, "leads/lags k", std::to_string(r.dols.estimate.leads_lags), "-");
    row(out, "bandwidth", "-", num(r.fmols.estimate.bandwidth, 2));
    out += "\nStructural parameters implied by kappa (sigma = kappa1):\n";
    for (const Eq15MethodResult* m : {&r.dols, &r.fmols}) {
        out += "  " + std::string(method_name(m->estimate.method)) + ": ";
        if (m->structural.ok) {
            out += "sigma = " + num(m->structural.sigma) + " (" +
                   substitution_label(m->structural.sigma) + "), delta = " +
                   num(m->structural.delta) + "\n";
        } else {
            out += "not invertible (kappa1 <= 0)\n";
        }
    }
    out += "Mean observed spread: " + num(mean_spread, 5) + "\n";
    out += "\n***/**/*: coefficient significant at 1/5/10% (two-sided normal).\n";
    out += "Lc null hypothesis: cointegration with stable parameters; p-band from\n";
    out += "the embedded asymptotic table (constant term, m = 1).\n";
    return out;
}

namespace {

void method_csv_rows(std::string& out, const std::string& eq, const Eq15MethodResult& m) {
    const std::string tag = method_name(m.estimate.method);
    out += eq + "," + tag + ",kappa0," + format_shortest(m.kappa0) + "," +
           format_shortest(m.se_kappa0) + "," + coefficient_stars(m.kappa0, m.se_kappa0) + ",\n";
    out += eq + "," + tag + ",kappa1," + format_shortest(m.kappa1) + "," +
           format_shortest(m.se_kappa1) + "," + coefficient_stars(m.kappa1, m.se_kappa1) + ",\n";
    out += eq + "," + tag + ",r_squared," + format_shortest(m.estimate.r_squared) + ",,,\n";
    out += eq + "," + tag + ",lc_statistic," + format_shortest(m.lc.statistic) + ",,," +
           m.lc.p_band + "\n";
    out += eq + "," + tag + ",wald_kappa1_eq_1," + format_shortest(m.wald_kappa1_one.t_statistic) +
           ",,," + format_shortest(m.wald_kappa1_one.p_value) + "\n";
    if (m.structural.ok) {
        out += eq + "," + tag + ",sigma," + format_shortest(m.structural.sigma) + ",,,\n";
        out += eq + "," + tag + ",delta," + format_shortest(m.structural.delta) + ",,,\n";
    } else {
        out += eq + "," + tag + ",sigma,,,,not invertible\n";
    }
}

void method_csv_rows(std::string& out, const std::string& eq, const Eq20MethodResult& m) {
    const std::string tag = method_name(m.estimate.method);
    const char* names[4] = {"omega0", "omega1", "omega2", "omega3"};
    for (int i = 0; i < 4; ++i) {
        out += eq + "," + tag + "," + names[i] + "," + format_shortest(m.omega[static_cast<std::size_t>(i)]) + "," +
               format_shortest(m.se[static_cast<std::size_t>(i)]) + "," +
               coefficient_stars(m.omega[static_cast<std::size_t>(i)], m.se[static_cast<std::size_t>(i)]) + ",\n";
    }
    out += eq + "," + tag + ",r_squared," + format_shortest(m.estimate.r_squared) + ",,,\n";
    out += eq + "," + tag + ",lc_statistic," + format_shortest(m.lc.statistic) + ",,," +
           m.lc.p_band + "\n";
    out += eq + "," + tag + ",wald_omega1_eq_1," +
           format_shortest(m.wald_omega1_one.t_statistic) + ",,," +
           format_shortest(m.wald_omega1_one.p_value) + "\n";
    out += eq + "," + tag + ",wald_omega3_eq_1," +
           format_shortest(m.wald_omega3_one.t_statistic) + ",,," +
           format_shortest(m.wald_omega3_one.p_value) + "\n";
}

}  // namespace

std::string eq15_csv(const Eq15Result& r) {
    std::string out = "equation,method,field,value,se,stars,extra\n";
    method_csv_rows(out, "eq15", r.dols);
    method_csv_rows(out, "eq15", r.fmols);
    return out;
}

std::string render_eq20_report(const Eq20Result& r, const std::string& dataset_label,
                               const std::string& sample) {
    std::string out;
    out += "Money demand: ln(M/P) = omega0 - omega1*ln(oc) + omega2*spread + omega3*ln(X/P)\n";
    out += "Dataset: " + dataset_label + "    Sample: " + sample + "\n";
    out += "Aggregate: " + std::string(r.aggregate == AggregateKind::m2 ? "M2" : "M1") +
           "    Scale: " +
           (r.scale == ScaleKind::consumption ? "household consumption" : "industrial production") +
           "\n\n";
    row(out, "", "DOLS", "FMOLS");
    const char* names[4] = {"omega0", "omega1", "omega2", "omega3"};
    for (std::size_t i = 0; i < 4; ++i) {
        row(out, names[i], coef_cell(r.dols.omega[i], r.dols.se[i]),
            coef_cell(r.fmols.omega[i], r.fmols.se[i]));
        row(out, "", se_cell(r.dols.se[i]), se_cell(r.fmols.se[i]));
    }
    row(out, "R^2", num(r.dols.estimate.r_squared, 3), num(r.fmols.estimate.r_squared, 3));
    row(out, "Lc statistic", lc_cell(r.dols.lc), lc_cell(r.fmols.lc));
    row(out, "Wald |t|: omega1=1", wald_cell(r.dols.wald_omega1_one),
        wald_cell(r.fmols.wald_omega1_one));
    row(out, "Wald |t|: omega3=1", wald_cell(r.dols.wald_omega3_one),
        wald_cell(r.fmols.wald_omega3_one));
    row(out, "leads/lags k", std::to_string(r.dols.estimate.leads_lags), "-");
    row(out, "bandwidth", "-", num(r.fmols.estimate.bandwidth, 2));
    out += "\nomega1 is reported with the sign convention of the demand equation\n";
    out += "(the negated regression coefficient on ln(oc)).\n";
    out += "***/**/*: coefficient significant at 1/5/10% (two-sided normal).\n";
    out += "Lc null hypothesis: cointegration with stable parameters; p-band from\n";
    out += "the embedded asymptotic table (constant term, m = 3).\n";
    return out;
}

std::string eq20_csv(const Eq20Result& r) {
    std::string out = "equation,method,field,value,se,stars,extra\n";
    method_csv_rows(out, "eq20", r.dols);
    method_csv_rows(out, "eq20", r.fmols);
    return out;
}

std::string montecarlo_csv(const McSummary& s) {
    std::string out = "kind,estimator,name,truth,mean,bias,rmse,mc_se,rate,replications\n";
    for (const auto& c : s.coefficients) {
        out += "coef," + c.estimator + "," + c.name + "," + format_shortest(c.truth) + "," +
               format_shortest(c.mean) + "," + format_shortest(c.bias) + "," +
               format_shortest(c.rmse) + "," + format_shortest(c.mc_se) + ",," +
               std::to_string(s.replications) + "\n";
    }
    for (const auto& t : s.tests) {
        out += "test,," + t.name + ",,,,," + format_shortest(t.mc_se) + "," +
               format_shortest(t.rate) + "," + std::to_string(t.replications) + "\n";
    }
    return out;
}

}  // namespace mdcoint
