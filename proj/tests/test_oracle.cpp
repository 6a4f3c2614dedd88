#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "checks.hpp"
#include "oracle.hpp"
#include <stdexcept>

using namespace trigspline;
using namespace trigspline::oracle;

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

TEST(Oracle, Periods) {
    EXPECT_EQ(series_period(SeriesId::HFull, {.count = 9}), 9);
    EXPECT_EQ(series_period(SeriesId::HEven, {.i2 = 0, .count = 9}), 16);
    EXPECT_EQ(series_period(SeriesId::CEven, {.i2 = 1, .count = 9}), 18);
    EXPECT_EQ(series_period(SeriesId::HOdd, {.i2 = 0, .count = 9}), 20);
    EXPECT_EQ(series_period(SeriesId::SOdd, {.i2 = 1, .count = 9}), 18);
}

TEST(Oracle, TailBoundCoversTruncationDifference) {
    const SeriesParams slow{0, 0, FactorKind::Power, 1, 0, 1, 3};
    const double gap = std::abs(brute_series(SeriesId::HFull, slow, 0.0, 1'000'000) -
                                brute_series(SeriesId::HFull, slow, 0.0, 10'000'000));
    EXPECT_LE(gap, analytic_tail_bound(SeriesId::HFull, slow, 1'000'000));
    EXPECT_GT(gap, 1e-9);

    const SeriesParams fast{0, 0, FactorKind::Power, 3, 0, 1, 3};
    EXPECT_LT(std::abs(brute_series(SeriesId::HFull, fast, 0.0, 1'000'000) -
                       brute_series(SeriesId::HFull, fast, 0.0, 10'000'000)),
              1e-12);
}

TEST(Oracle, LeadingTermAndTailSum) {
    // With only m = 0 the denominator is k^-(1+r); the full series adds the
    // aliased terms, each at most (mN - k)^-(1+r) per branch.
    const SeriesParams p{0, 0, FactorKind::Power, 5, 0, 1, 9};
    const double leading = brute_series(SeriesId::HFull, p, 0.0, 0);
    EXPECT_DOUBLE_EQ(leading, 1.0);
    double aliased = 0.0;
    for (int m = 1; m <= 1000; ++m)
        aliased += 2 * std::pow(m * 9 - 1, -6.0);
    EXPECT_LE(std::abs(brute_series(SeriesId::HFull, p, 0.0) - leading), aliased);
}

TEST(Oracle, SineSeriesVanishAtZero) {
    for (int r = 1; r <= 3; ++r) {
        EXPECT_EQ(brute_series(SeriesId::SOdd, {0, 0, FactorKind::Power, r, 0, 2, 7}, 0.0, 1000), 0.0);
        EXPECT_EQ(brute_series(SeriesId::SFull, {0, 0, FactorKind::Riemann, r, 0, 3, 7}, 0.0, 1000), 0.0);
    }
}

TEST(Oracle, TrigPolynomial) {
    Eigen::VectorXd a(2), b(2);
    a << 1.0, 0.5;
    b << -2.0, 0.0;
    for (double t : {0.0, 0.8, 2.5})
        EXPECT_NEAR(trig_polynomial(3.0, a, b, t), 1.5 + std::cos(t) + 0.5 * std::cos(2 * t) - 2 * std::sin(t),
                    1e-15);
}

TEST(Oracle, Simpson) {
    EXPECT_NEAR(simpson([](double x) { return x * x * x - 2 * x; }, 0.0, 2.0, 2), 0.0, 1e-15);
    EXPECT_NEAR(simpson([](double x) { return std::exp(x); }, 0.0, 1.0, 100), std::exp(1.0) - 1, 1e-9);
    EXPECT_THROW(simpson([](double x) { return x; }, 0.0, 1.0, 3), std::invalid_argument);
    const double area = quadrature_unit_integral([](std::span<const double> ts) {
        return Eigen::Map<const Eigen::VectorXd>(ts.data(), static_cast<Eigen::Index>(ts.size()))
            .array()
            .cos()
            .square()
            .matrix()
            .eval();
    });
    EXPECT_NEAR(area, pi, 1e-12);
}

TEST(Oracle, PeriodicCubicSpline) {
    const GridSpec grid{GridFamily::Full, 0, 9};
    const PeriodicCubicSpline constant(grid, Eigen::VectorXd::Constant(9, 2.0));
    EXPECT_NEAR(constant(1.234), 2.0, 1e-14);
    EXPECT_LT(constant.moments().cwiseAbs().maxCoeff(), 1e-14);

    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int indicator : {0, 1}) {
        const GridSpec g{GridFamily::Full, indicator, 7};
        Eigen::VectorXd values(7);
        for (int j = 0; j < 7; ++j)
            values(j) = dist(rng);
        const PeriodicCubicSpline s(g, values);
        const Eigen::VectorXd x = nodes(g);
        for (int j = 0; j < 7; ++j)
            EXPECT_NEAR(s(x(j)), values(j), 1e-13);
        EXPECT_NEAR(s(0.3), s(0.3 + 2 * pi), 1e-13);
    }
}

TEST(Oracle, CubicSplineReproducesBSpline) {
    const GridSpec grid{GridFamily::Full, 0, 9};
    const Eigen::VectorXd x = nodes(grid);
    const Eigen::VectorXd values = x.unaryExpr([](double t) { return periodic_cubic_bspline(9, 0.0, t); });
    const PeriodicCubicSpline s(grid, values);
    for (int i = 0; i < 60; ++i) {
        const double t = 2 * pi * i / 60;
        EXPECT_NEAR(s(t), periodic_cubic_bspline(9, 0.0, t), 1e-13);
    }
}

TEST(Oracle, CubicBSplineShape) {
    const double h = 2 * pi / 9;
    for (double t : {0.0, 0.2, 1.9, 4.4}) {
        double sum = 0.0;
        for (int j = 0; j < 9; ++j)
            sum += periodic_cubic_bspline(9, j * h, t);
        EXPECT_NEAR(sum * h, 1.0, 1e-14);
    }
    EXPECT_NEAR(simpson([](double t) { return periodic_cubic_bspline(9, 0.0, t); }, -pi, pi, 900), 1.0, 1e-13);
    EXPECT_NEAR(periodic_cubic_bspline(9, 0.0, 0.0), 2.0 / 3 / h, 1e-14);
    EXPECT_EQ(periodic_cubic_bspline(9, 0.0, 2.5 * h), 0.0);
}

TEST(Oracle, DeterminantTolerance) {
    EXPECT_EQ(reference_determinants().size(), 36u);
    EXPECT_TRUE(determinant_matches(25.2, 25.1548));
    EXPECT_FALSE(determinant_matches(25.5, 25.1548));
    EXPECT_TRUE(determinant_matches(5e-7, 1e-7));
    EXPECT_FALSE(determinant_matches(1e-11, 0.0));
}

TEST(Oracle, SupportedConfigs) {
    const auto configs = supported_configs(FactorKind::Power, 3, 0, 9, TruncationPolicy::fixed(10));
    EXPECT_EQ(configs.size(), 8u);
    for (const SplineConfig& c : configs)
        EXPECT_NO_THROW(validate(c));
}

TEST(Checks, FastChecksPass) {
    for (int id : {1, 4, 7}) {
        const CheckResult r = run_check(id);
        EXPECT_TRUE(r.passed) << r.id << " " << r.name << ": " << r.detail;
    }
    EXPECT_THROW(run_check(0), std::out_of_range);
    EXPECT_THROW(run_check(check_count + 1), std::out_of_range);
}
