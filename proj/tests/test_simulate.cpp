#include <doctest.h>

#include <cmath>

#include "mdcoint/ols.hpp"
#include "mdcoint/simulate.hpp"

using namespace mdcoint;

namespace {

SimSpec base_spec() {
    SimSpec s;
    s.m = 1;
    s.a1 = {-0.5};
    s.a2 = {1.0};
    s.mu1 = 2.0;
    s.mu2 = 0.0;
    s.mu3 = {0.0};
    s.T = 200;
    s.z1 = {0.5, 1.0};
    s.z2 = {0.3, 1.0};
    s.z3 = {{0.5, 1.0}};
    s.seed = 99;
    return s;
}

}  // namespace

TEST_CASE("noiseless simulation cointegrates exactly") {
    SimSpec s = base_spec();
    s.z1.sd = 0.0;
    s.z2.sd = 0.0;
    const AlignedPanel p = simulate_triangular(s);
    const auto& y1 = p.column("y1");
    const auto& x = p.column("Y3_1");
    // zero error process: y1 carries the cointegrating combination exactly
    for (std::size_t t = 0; t < p.rows(); ++t)
        CHECK(y1[t] == s.mu1 + s.a1[0] * x[t]);
}

TEST_CASE("fixed seed reproduces the panel bit for bit") {
    const AlignedPanel a = simulate_triangular(base_spec());
    const AlignedPanel b = simulate_triangular(base_spec());
    REQUIRE(a.rows() == b.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t t = 0; t < a.rows(); ++t)
            CHECK(a.column(j)[t] == b.column(j)[t]);

    SimSpec other = base_spec();
    other.seed = 100;
    const AlignedPanel c = simulate_triangular(other);
    bool any_diff = false;
    for (std::size_t t = 0; t < a.rows() && !any_diff; ++t)
        any_diff = a.column("y1")[t] != c.column("y1")[t];
    CHECK(any_diff);
}

TEST_CASE("OLS on simulated data recovers the cointegrating coefficient") {
    // Monte-Carlo oracle: 200 replications at T = 2000
    SimSpec s = base_spec();
    s.T = 2000;
    double sum = 0.0, sumsq = 0.0;
    const int reps = 200;
    for (int rep = 0; rep < reps; ++rep) {
        s.seed = 1000 + static_cast<std::uint64_t>(rep);
        const AlignedPanel p = simulate_triangular(s);
        Matrix X(p.rows(), 1);
        for (std::size_t t = 0; t < p.rows(); ++t) X(t, 0) = p.column("Y3_1")[t];
        const OlsFit fit = ols(p.column("y1"), X, true);
        sum += fit.coefficients[1];
        sumsq += fit.coefficients[1] * fit.coefficients[1];
    }
    const double mean = sum / reps;
    const double sd = std::sqrt(sumsq / reps - mean * mean);
    INFO("mean = ", mean, ", sd = ", sd);
    CHECK(std::abs(mean - (-0.5)) < 0.05);
    CHECK(sd < 0.05);
}

TEST_CASE("drift accumulates in the regressor block") {
    SimSpec s = base_spec();
    s.mu3 = {0.5};
    s.T = 400;
    const AlignedPanel p = simulate_triangular(s);
    const auto& x = p.column("Y3_1");
    CHECK(x.back() > 100.0);  // 0.5 * 400 = 200 plus noise
}

TEST_CASE("spec validation") {
    SimSpec s = base_spec();
    s.T = 10;
    CHECK_THROWS_AS(simulate_triangular(s), DomainError);
    s = base_spec();
    s.z1.rho = 1.0;
    CHECK_THROWS_AS(simulate_triangular(s), DomainError);
    s = base_spec();
    s.z3[0].sd = 0.0;  // regressors must stay stochastic
    CHECK_THROWS_AS(simulate_triangular(s), DomainError);
    s = base_spec();
    s.a1 = {1.0, 2.0};  // wrong length
    CHECK_THROWS_AS(simulate_triangular(s), DomainError);
}

TEST_CASE("sim spec config round trip") {
    SimSpec s = base_spec();
    s.m = 2;
    s.a1 = {-0.5, 1.2};
    s.a2 = {1.0, 0.0};
    s.mu3 = {0.0, 0.1};
    s.z3 = {{0.5, 1.0}, {0.5, 1.0}};
    s.endo_corr = 0.8;
    Config cfg;
    s.to_config(cfg);
    const SimSpec r = SimSpec::from_config(cfg);
    CHECK(r.m == s.m);
    CHECK(r.T == s.T);
    CHECK(r.seed == s.seed);
    CHECK(r.a1 == s.a1);
    CHECK(r.a2 == s.a2);
    CHECK(r.mu1 == s.mu1);
    CHECK(r.mu3 == s.mu3);
    CHECK(r.endo_corr == s.endo_corr);
    CHECK(r.z1.rho == s.z1.rho);
    CHECK(r.z3[1].sd == s.z3[1].sd);

    // the serialized text parses back to the same spec
    const Config reparsed = Config::parse_string(cfg.to_string());
    const SimSpec r2 = SimSpec::from_config(reparsed);
    CHECK(r2.a1 == s.a1);
    CHECK(r2.seed == s.seed);
}

TEST_CASE("endogenous correlation tilts the error toward the regressors") {
    SimSpec s = base_spec();
    s.T = 5000;
    s.endo_corr = 0.8;
    s.z1.rho = 0.0;
    s.z3 = {{0.0, 1.0}};
    const AlignedPanel p = simulate_triangular(s);
    // recover z1 = y1 - mu1 - a1 * Y3 and the regressor innovations
    const auto& y1 = p.column("y1");
    const auto& x = p.column("Y3_1");
    double num = 0.0, d1 = 0.0, d2 = 0.0;
    for (std::size_t t = 1; t < p.rows(); ++t) {
        const double e1 = (y1[t] - s.mu1 - s.a1[0] * x[t]);
        const double e3 = x[t] - x[t - 1];
        num += e1 * e3;
        d1 += e1 * e1;
        d2 += e3 * e3;
    }
    const double corr = num / std::sqrt(d1 * d2);
    CHECK(corr > 0.7);
    CHECK(corr < 0.9);
}
