#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mdcoint/transforms.hpp"

using namespace mdcoint;

namespace {

TimeSeries monthly_series(std::vector<double> v, const char* name = "s") {
    return TimeSeries(name, Period::monthly(2000, 1), std::move(v));
}

// independent high-precision oracle for (1+a)^(1/12) - 1
double geometric_monthly_oracle(double annual) {
    return static_cast<double>(std::expm1l(std::log1pl(static_cast<long double>(annual)) / 12.0L));
}

}  // namespace

TEST_CASE("monthly_phi matches the 1% anchor") {
    const double phi = monthly_phi(0.01).phi_monthly;
    CHECK(phi == doctest::Approx(0.00082953).epsilon(0).scale(1).epsilon(1e-7 / 0.00082953));
    CHECK(phi > 0.0008294);
    CHECK(phi < 0.0008296);
    CHECK(monthly_phi(0.0).phi_monthly == 0.0);
}

TEST_CASE("monthly_phi agrees with the high-precision oracle") {
    const double v = monthly_phi(0.02).phi_monthly;
    CHECK(v > 0.00165);
    CHECK(v < 0.00166);
    CHECK(v == doctest::Approx(geometric_monthly_oracle(0.02)).epsilon(1e-12));
}

TEST_CASE("monthly_phi domain errors") {
    CHECK_THROWS_AS(monthly_phi(-1.0), DomainError);
    CHECK_THROWS_AS(monthly_phi(-1.5), DomainError);
    // negative but > -1 would produce a negative holding cost, which the
    // type invariant rejects
    CHECK_THROWS_AS(monthly_phi(-0.5), DomainError);
}

TEST_CASE("opportunity_cost formula and edge cases") {
    const HoldingCost phi = monthly_phi(0.01);

    SUBCASE("zero rate returns phi itself") {
        const auto oc = opportunity_cost(monthly_series({0.0, 0.0}), phi);
        CHECK(oc[0] == doctest::Approx(phi.phi_monthly).epsilon(1e-15));
    }
    SUBCASE("rate exactly offsetting phi is rejected") {
        CHECK_THROWS_AS(opportunity_cost(monthly_series({-phi.phi_monthly}), phi), DomainError);
    }
    SUBCASE("worked value at rate 0.002") {
        const auto oc = opportunity_cost(monthly_series({0.002}), HoldingCost(0.00082953));
        const long double oracle = (0.002L + 0.00082953L) / (1.0L + 0.002L);
        CHECK(oc[0] == doctest::Approx(0.0028239).epsilon(1e-7 / 0.0028239));
        CHECK(oc[0] == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-14));
    }
    SUBCASE("error message names the date") {
        try {
            opportunity_cost(TimeSeries("r", Period::monthly(2003, 5), {0.01, -0.002}), phi);
            FAIL("expected DomainError");
        } catch (const DomainError& e) {
            CHECK(std::string(e.what()).find("2003-06") != std::string::npos);
        }
    }
}

TEST_CASE("opportunity_cost is monotone in the rate") {
    const HoldingCost phi = monthly_phi(0.01);
    std::vector<double> grid;
    for (double r = -0.0005; r < 0.05; r += 0.0013) grid.push_back(r);
    const auto oc = opportunity_cost(monthly_series(grid), phi);
    for (std::size_t i = 1; i < oc.size(); ++i) CHECK(oc[i] > oc[i - 1]);
}

TEST_CASE("annual_to_monthly_rate") {
    CHECK(annual_to_monthly_rate(monthly_series({0.0}))[0] == 0.0);
    // 12.6825% annual is 1% monthly: (1.01)^12 = 1.126825030...
    const auto m = annual_to_monthly_rate(monthly_series({12.6825}));
    CHECK(m[0] == doctest::Approx(0.01).epsilon(1e-6 / 0.01));
    CHECK(m[0] == doctest::Approx(geometric_monthly_oracle(0.126825)).epsilon(1e-13));
    const auto neg = annual_to_monthly_rate(monthly_series({-1.0}));
    CHECK(neg[0] < 0.0);
    CHECK(std::isfinite(neg[0]));
    CHECK_THROWS_AS(annual_to_monthly_rate(monthly_series({-100.0})), DomainError);
}

TEST_CASE("log_series") {
    const auto ones = log_series(monthly_series({1.0, 1.0, 1.0}));
    for (std::size_t i = 0; i < ones.size(); ++i) CHECK(ones[i] == 0.0);
    CHECK(log_series(monthly_series({std::exp(1.0)}))[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(log_series(monthly_series({0.5}))[0] ==
          doctest::Approx(-0.6931471805599453).epsilon(1e-9 / 0.69));
    try {
        log_series(TimeSeries("p", Period::monthly(2001, 1), {1.0, 0.0}));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("2001-02") != std::string::npos);
    }
}

TEST_CASE("log and exp are inverse to 1e-12") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    std::vector<double> v(64);
    for (auto& x : v) x = std::exp(dist(gen));
    const auto back = log_series(monthly_series(v));
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(std::exp(back[i]) == doctest::Approx(v[i]).epsilon(1e-12));
}

TEST_CASE("spread") {
    const auto oc = monthly_series({0.003, 0.004}, "oc");
    SUBCASE("identical series give zero") {
        const auto s = spread(oc, monthly_series({0.003, 0.004}, "oc_star"));
        CHECK(s[0] == 0.0);
        CHECK(s[1] == 0.0);
    }
    SUBCASE("ratio e gives one") {
        std::vector<double> scaled = {0.003 * std::exp(1.0), 0.004 * std::exp(1.0)};
        const auto s = spread(monthly_series(scaled, "oc"), monthly_series({0.003, 0.004}, "oc_star"));
        CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("ln(1.5) anchor") {
        const auto s = spread(monthly_series({0.003}, "oc"), monthly_series({0.002}, "oc_star"));
        CHECK(s[0] == doctest::Approx(0.4054651081081644).epsilon(1e-9 / 0.405));
    }
    SUBCASE("misaligned index is rejected") {
        const TimeSeries shifted("oc_star", Period::monthly(2000, 2), {0.003, 0.004});
        CHECK_THROWS_AS(spread(oc, shifted), AlignmentError);
    }
}

namespace {

// independent oracle: natural-spline second derivatives from a dense
// Gaussian elimination, evaluated with the textbook cubic coefficients
std::vector<double> spline_oracle(const std::vector<double>& y) {
    const std::size_t n = y.size();
    const double h = 3.0;
    const std::size_t k = n - 2;
    std::vector<std::vector<double>> A(k, std::vector<double>(k, 0.0));
    std::vector<double> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        A[i][i] = 2.0 * h / 3.0;
        if (i > 0) A[i][i - 1] = h / 6.0;
        if (i + 1 < k) A[i][i + 1] = h / 6.0;
        rhs[i] = (y[i + 2] - 2.0 * y[i + 1] + y[i]) / h;
    }
    // dense Gaussian elimination with partial pivoting
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < k; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> msol(k);
    for (std::size_t i = k; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t c = i + 1; c < k; ++c) s -= A[i][c] * msol[c];
        msol[i] = s / A[i][i];
    }
    std::vector<double> m(n, 0.0);
    for (std::size_t i = 0; i < k; ++i) m[i + 1] = msol[i];

    // evaluate in the b/c/d coefficient form
    std::vector<double> out(3 * (n - 1) + 1);
    for (std::size_t t = 0; t < out.size(); ++t) {
        std::size_t seg = std::min(t / 3, n - 2);
        const double x = static_cast<double>(t) - 3.0 * static_cast<double>(seg);
        const double b = (y[seg + 1] - y[seg]) / h - h * (2.0 * m[seg] + m[seg + 1]) / 6.0;
        const double c = m[seg] / 2.0;
        const double d = (m[seg + 1] - m[seg]) / (6.0 * h);
        out[t] = y[seg] + b * x + c * x * x + d * x * x * x;
    }
    return out;
}

}  // namespace

TEST_CASE("spline_to_monthly") {
    SUBCASE("constants are reproduced exactly") {
        const TimeSeries q("c", Period::quarterly(1999, 1), {5.5, 5.5, 5.5, 5.5, 5.5});
        const auto m = spline_to_monthly(q);
        CHECK(m.size() == 13);
        CHECK(m.frequency() == Frequency::monthly);
        // knots sit at the middle month of each quarter
        CHECK(m.start().to_string() == "1999-02");
        for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == doctest::Approx(5.5).epsilon(1e-15));
    }
    SUBCASE("linear data stay linear in the month index") {
        const TimeSeries q("c", Period::quarterly(2000, 1), {1.0, 2.0, 3.0, 4.0});
        const auto m = spline_to_monthly(q);
        REQUIRE(m.size() == 10);
        for (std::size_t i = 0; i < m.size(); ++i)
            CHECK(m[i] == doctest::Approx(1.0 + static_cast<double>(i) / 3.0).epsilon(1e-13));
        // knots exact
        CHECK(m[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(m[3] == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(m[9] == doctest::Approx(4.0).epsilon(1e-15));
    }
    SUBCASE("eight arbitrary knots match the dense-solver oracle") {
        const std::vector<double> y = {2.0, -1.0, 0.5, 4.0, 3.0, 3.5, -2.0, 1.0};
        const TimeSeries q("c", Period::quarterly(2001, 1), y);
        const auto m = spline_to_monthly(q);
        const auto oracle = spline_oracle(y);
        REQUIRE(m.size() == oracle.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            CHECK(m[i] == doctest::Approx(oracle[i]).epsilon(1e-11));
        for (std::size_t knot = 0; knot < y.size(); ++knot) {
            const double rel = std::abs(m[3 * knot] - y[knot]) / std::abs(y[knot]);
            CHECK(rel <= 1e-10);
        }
    }
    SUBCASE("too few points fail") {
        const TimeSeries q("c", Period::quarterly(2001, 1), {1.0, 2.0, 3.0});
        CHECK_THROWS_AS(spline_to_monthly(q), DomainError);
    }
    SUBCASE("monthly input is rejected") {
        CHECK_THROWS_AS(spline_to_monthly(monthly_series({1, 2, 3, 4})), DomainError);
    }
}
