#include "mdcoint/simulate.hpp"

#include <cmath>

#include "mdcoint/format.hpp"
#include "mdcoint/rng.hpp"

namespace mdcoint {

namespace {

void check_ar1(const Ar1Spec& a, const char* what, bool allow_zero_sd) {
    if (!(std::abs(a.rho) < 1.0))
        throw DomainError(std::string(what) + ": |AR(1) coefficient| must be < 1, got " +
                          std::to_string(a.rho));
    if (!(allow_zero_sd ? a.sd >= 0.0 : a.sd > 0.0))
        throw DomainError(std::string(what) + ": innovation sd must be positive, got " +
                          std::to_string(a.sd));
}

// stationary AR(1) path of length T; the initial state is drawn from the
// stationary distribution so the process is mean-zero throughout
std::vector<double> ar1_path(const Ar1Spec& a, const std::vector<double>& innov) {
    std::vector<double> z(innov.size());
    double prev = innov.empty() ? 0.0 : innov.front() * a.sd / std::sqrt(1.0 - a.rho * a.rho);
    z[0] = prev;
    for (std::size_t t = 1; t < innov.size(); ++t) {
        prev = a.rho * prev + a.sd * innov[t];
        z[t] = prev;
    }
    return z;
}

}  // namespace

void SimSpec::validate() const {
    if (m < 1) throw DomainError("SimSpec: m must be >= 1");
    if (T < 50) throw DomainError("SimSpec: T must be >= 50, got " + std::to_string(T));
    auto need = [&](const std::vector<double>& v, const char* what) {
        if (static_cast<int>(v.size()) != m)
            throw DomainError(std::string("SimSpec: ") + what + " must have length m = " +
                              std::to_string(m));
    };
    need(a1, "a1");
    need(a2, "a2");
    need(mu3, "mu3");
    if (static_cast<int>(z3.size()) != m)
        throw DomainError("SimSpec: z3 must have length m = " + std::to_string(m));
    // z1/z2 may be noiseless (exact cointegration); the regressor block must
    // stay stochastic or the design is collinear with the constant
    check_ar1(z1, "z1", true);
    check_ar1(z2, "z2", true);
    for (const auto& a : z3) check_ar1(a, "z3", false);
    if (!(std::abs(endo_corr) < 1.0))
        throw DomainError("SimSpec: |endo_corr| must be < 1");
}

AlignedPanel simulate_triangular(const SimSpec& spec) {
    spec.validate();
    const int T = spec.T;
    const int m = spec.m;
    NormalRng rng(spec.seed);

    // raw innovations; z1's is tilted toward the average regressor
    // innovation when endo_corr != 0
    std::vector<std::vector<double>> e3(m, std::vector<double>(T));
    std::vector<double> e1(T), e2(T);
    for (int t = 0; t < T; ++t) {
        for (int j = 0; j < m; ++j) e3[j][t] = rng.next();
        double bar = 0.0;
        for (int j = 0; j < m; ++j) bar += e3[j][t];
        bar /= std::sqrt(static_cast<double>(m));
        const double c = spec.endo_corr;
        e1[t] = c * bar + std::sqrt(1.0 - c * c) * rng.next();
        e2[t] = rng.next();
    }

    const auto z1 = ar1_path(spec.z1, e1);
    const auto z2 = ar1_path(spec.z2, e2);

    // I(1) block: Y3_0 = Z3_0, then cumulated drift plus AR(1) noise
    std::vector<std::vector<double>> y3(m, std::vector<double>(T));
    for (int j = 0; j < m; ++j) {
        const auto zj = ar1_path(spec.z3[static_cast<std::size_t>(j)], e3[j]);
        y3[j][0] = zj[0];
        for (int t = 1; t < T; ++t) y3[j][t] = y3[j][t - 1] + spec.mu3[j] + zj[t];
    }

    std::vector<double> y1(T), y2(T);
    for (int t = 0; t < T; ++t) {
        double s1 = spec.mu1, s2 = spec.mu2;
        for (int j = 0; j < m; ++j) {
            s1 += spec.a1[j] * y3[j][t];
            s2 += spec.a2[j] * y3[j][t];
        }
        y1[t] = s1 + z1[t];
        y2[t] = s2 + z2[t];
    }

    std::vector<std::string> names = {"y1", "y2"};
    std::vector<std::vector<double>> cols = {std::move(y1), std::move(y2)};
    for (int j = 0; j < m; ++j) {
        names.push_back("Y3_" + std::to_string(j + 1));
        cols.push_back(std::move(y3[j]));
    }
    return AlignedPanel(Period::monthly(2000, 1), std::move(names), std::move(cols));
}

SimSpec SimSpec::from_config(const Config& cfg, const std::string& section) {
    SimSpec s;
    s.m = cfg.get_int_or(section, "m", 1);
    s.T = cfg.get_int_or(section, "T", 200);
    s.seed = cfg.get_u64_or(section, "seed", 0);
    s.a1 = cfg.has(section, "a1") ? cfg.get_double_list(section, "a1")
                                  : std::vector<double>(s.m, 1.0);
    s.a2 = cfg.has(section, "a2") ? cfg.get_double_list(section, "a2")
                                  : std::vector<double>(s.m, 1.0);
    s.mu1 = cfg.get_double_or(section, "mu1", 0.0);
    s.mu2 = cfg.get_double_or(section, "mu2", 0.0);
    s.mu3 = cfg.has(section, "mu3") ? cfg.get_double_list(section, "mu3")
                                    : std::vector<double>(s.m, 0.0);
    s.z1 = {cfg.get_double_or(section, "z1_rho", 0.0), cfg.get_double_or(section, "z1_sd", 1.0)};
    s.z2 = {cfg.get_double_or(section, "z2_rho", 0.0), cfg.get_double_or(section, "z2_sd", 1.0)};
    const double rho3 = cfg.get_double_or(section, "z3_rho", 0.0);
    const double sd3 = cfg.get_double_or(section, "z3_sd", 1.0);
    s.z3.assign(static_cast<std::size_t>(s.m), Ar1Spec{rho3, sd3});
    s.endo_corr = cfg.get_double_or(section, "endo_corr", 0.0);
    s.validate();
    return s;
}

void SimSpec::to_config(Config& cfg, const std::string& section) const {
    auto join = [](const std::vector<double>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += format_shortest(v[i]);
        }
        return out;
    };
    cfg.set(section, "m", std::to_string(m));
    cfg.set(section, "T", std::to_string(T));
    cfg.set(section, "seed", std::to_string(seed));
    cfg.set(section, "a1", join(a1));
    cfg.set(section, "a2", join(a2));
    cfg.set(section, "mu1", format_shortest(mu1));
    cfg.set(section, "mu2", format_shortest(mu2));
    cfg.set(section, "mu3", join(mu3));
    cfg.set(section, "z1_rho", format_shortest(z1.rho));
    cfg.set(section, "z1_sd", format_shortest(z1.sd));
    cfg.set(section, "z2_rho", format_shortest(z2.rho));
    cfg.set(section, "z2_sd", format_shortest(z2.sd));
    cfg.set(section, "z3_rho", format_shortest(z3.empty() ? 0.0 : z3.front().rho));
    cfg.set(section, "z3_sd", format_shortest(z3.empty() ? 1.0 : z3.front().sd));
    cfg.set(section, "endo_corr", format_shortest(endo_corr));
}

}  // namespace mdcoint
