#include <doctest.h>

#include <cmath>

#include "mdcoint/ols.hpp"
#include "mdcoint/rng.hpp"
#include "mdcoint/unit_root.hpp"

using namespace mdcoint;

namespace {

std::vector<double> ar1(double rho, int T, std::uint64_t seed) {
    NormalRng rng(seed);
    std::vector<double> y(static_cast<std::size_t>(T));
    double prev = rng.next();
    y[0] = prev;
    for (int t = 1; t < T; ++t) {
        prev = rho * prev + rng.next();
        y[static_cast<std::size_t>(t)] = prev;
    }
    return y;
}

std::vector<double> random_walk(int T, std::uint64_t seed) {
    NormalRng rng(seed);
    std::vector<double> y(static_cast<std::size_t>(T));
    double level = 0.0;
    for (int t = 0; t < T; ++t) {
        level += rng.next();
        y[static_cast<std::size_t>(t)] = level;
    }
    return y;
}

bool rejects_5pct(const UnitRootResult& r) {
    return r.significance == Significance::at_5pct || r.significance == Significance::at_1pct;
}

}  // namespace

TEST_CASE("degenerate inputs are rejected") {
    const std::vector<double> constant(50, 3.14);
    CHECK_THROWS_AS(adf(constant), DomainError);
    CHECK_THROWS_AS(pp(constant), DomainError);
    CHECK_THROWS_AS(adf(std::vector<double>(10, 1.0)), EstimationError);
    CHECK_THROWS_AS(pp(std::vector<double>(10, 1.0)), EstimationError);
}

TEST_CASE("adf and pp are invariant to level shifts") {
    const auto y = random_walk(300, 7);
    std::vector<double> shifted = y;
    for (auto& v : shifted) v += 250.0;
    CHECK(adf(y).statistic == doctest::Approx(adf(shifted).statistic).epsilon(1e-8));
    CHECK(pp(y).statistic == doctest::Approx(pp(shifted).statistic).epsilon(1e-8));
}

TEST_CASE("adf with p = 0 equals the base regression t-ratio") {
    const auto y = ar1(0.8, 200, 3);
    const UnitRootResult r = adf(y, 0);
    // build the same regression by hand
    Matrix X(y.size() - 1, 1);
    std::vector<double> dy(y.size() - 1);
    for (std::size_t t = 1; t < y.size(); ++t) {
        X(t - 1, 0) = y[t - 1];
        dy[t - 1] = y[t] - y[t - 1];
    }
    const OlsFit fit = ols(dy, X, true);
    const double t_ratio = fit.coefficients[1] / std::sqrt(fit.covariance(1, 1));
    CHECK(r.statistic == doctest::Approx(t_ratio).epsilon(1e-12));
    CHECK(r.lags_or_bandwidth == 0.0);
}

TEST_CASE("significance bands are monotone in the statistic") {
    CHECK(unit_root_significance(-3.5) == Significance::at_1pct);
    CHECK(unit_root_significance(-3.0) == Significance::at_5pct);
    CHECK(unit_root_significance(-2.6) == Significance::at_10pct);
    CHECK(unit_root_significance(-1.0) == Significance::none);
    CHECK(std::string(significance_stars(Significance::at_1pct)) == "***");
    CHECK(std::string(significance_stars(Significance::none)).empty());
}

TEST_CASE("adf keeps size on random walks and rejects stationary series") {
    // smoke-scale Monte Carlo; the acceptance suite runs the full design
    int size_rejections = 0;
    int power_rejections = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        if (rejects_5pct(adf(random_walk(300, 100 + static_cast<std::uint64_t>(rep)))))
            ++size_rejections;
        if (rejects_5pct(adf(ar1(0.5, 300, 900 + static_cast<std::uint64_t>(rep)))))
            ++power_rejections;
    }
    INFO("size rejections: ", size_rejections, "/", reps);
    INFO("power rejections: ", power_rejections, "/", reps);
    CHECK(size_rejections <= 15);
    CHECK(power_rejections >= 90);
}

TEST_CASE("pp behaves like adf on random walks and rejects iid noise") {
    int size_rejections = 0;
    int adf_size_rejections = 0;
    int noise_rejections = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        const auto walk = random_walk(300, 4000 + static_cast<std::uint64_t>(rep));
        if (rejects_5pct(pp(walk))) ++size_rejections;
        if (rejects_5pct(adf(walk))) ++adf_size_rejections;
        if (pp(ar1(0.0, 300, 6000 + static_cast<std::uint64_t>(rep))).significance ==
            Significance::at_1pct)
            ++noise_rejections;
    }
    INFO("pp size: ", size_rejections, ", adf size: ", adf_size_rejections);
    // comparable non-rejection rates (within 10 percentage points)
    CHECK(std::abs(size_rejections - adf_size_rejections) <= 10);
    CHECK(noise_rejections >= 95);
}

TEST_CASE("pp reports a bandwidth") {
    const auto y = ar1(0.5, 300, 12);
    const UnitRootResult r = pp(y);
    CHECK(r.test == UnitRootTest::pp);
    CHECK(r.lags_or_bandwidth >= 0.0);
    CHECK(r.t_effective == 299);
}
