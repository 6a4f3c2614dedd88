#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "checks.hpp"
#include "oracle.hpp"
#include "trigspline/error.hpp"
#include "trigspline/fundamental.hpp"

using namespace trigspline;

namespace {

constexpr double pi = std::numbers::pi;

SplineConfig config(SplineFamily family, int i1, int i2, FactorKind factor, int r, int q, int n) {
    return {family, i1, i2, factor, r, q, n, default_truncation(r, q)};
}

std::vector<SplineConfig> all_configs(int r, int q, int n) {
    std::vector<SplineConfig> out;
    for (FactorKind f : {FactorKind::Power, FactorKind::Riemann})
        for (const SplineConfig& c : oracle::supported_configs(f, r, q, n, default_truncation(r, q)))
            out.push_back(c);
    return out;
}

} // namespace

TEST(Fundamental, CardinalAtNodes) {
    for (int r = 1; r <= 4; ++r)
        for (const SplineConfig& cfg : all_configs(r, 0, 7)) {
            const FundamentalBasis basis(cfg);
            const Eigen::VectorXd& x = basis.nodes();
            const Eigen::MatrixXd m = basis.values(std::span<const double>(x.data(), x.size()));
            EXPECT_LT((m - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff(), 1e-10)
                << to_string(cfg.family) << cfg.i1 << cfg.i2 << " r=" << r;
        }
}

TEST(Fundamental, PartitionOfUnity) {
    for (const SplineConfig& cfg : all_configs(3, 0, 9)) {
        if (cfg.family == SplineFamily::Odd)
            continue;
        const FundamentalBasis basis(cfg);
        for (double t : {0.0, 0.45, 1.7, 3.0})
            EXPECT_NEAR(basis.values(t).sum(), 1.0, 1e-10);
    }
}

TEST(Fundamental, FullBasisIsTranslates) {
    const FundamentalBasis basis(config(SplineFamily::Full, 1, 0, FactorKind::Riemann, 2, 0, 9));
    const double h = 2 * pi / 9;
    for (double t : {0.3, 2.0, 5.1})
        for (int k = 2; k <= 9; ++k)
            EXPECT_NEAR(basis(k, t), basis(1, t - (k - 1) * h), 1e-12);
}

TEST(Fundamental, EvenSlopeVanishesAtZero) {
    for (int i2 : {0, 1}) {
        const FundamentalBasis basis(config(SplineFamily::Even, 0, i2, FactorKind::Power, 3, 1, 6));
        EXPECT_LT(basis.values(0.0).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Fundamental, OddVanishesAtEnds) {
    for (int i : {0, 1}) {
        const FundamentalBasis basis(config(SplineFamily::Odd, i, i, FactorKind::Riemann, 3, 0, 6));
        EXPECT_LT(basis.values(0.0).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT(basis.values(pi).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Fundamental, SameSplineAsCoefficientForm) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    for (int r = 1; r <= 3; ++r)
        for (int q = 0; q < r; ++q)
            for (const SplineConfig& cfg : all_configs(r, q, 7)) {
                Samples s{interpolation_grid(cfg), Eigen::VectorXd(7)};
                for (int j = 0; j < 7; ++j)
                    s.values(j) = value(rng);
                const TrigSpline reference(cfg, coefficients(s));
                for (double t : {0.1, 1.2, 2.9})
                    EXPECT_NEAR(eval_via_fundamentals(cfg, s, t), reference(t), 1e-9)
                        << to_string(cfg.family) << cfg.i1 << cfg.i2 << " r=" << r << " q=" << q;
            }
}

TEST(Fundamental, CubicApproximationOfSineConvergesAtFourthOrder) {
    auto max_error = [](int n) {
        const SplineConfig cfg = config(SplineFamily::Odd, 0, 0, FactorKind::Power, 3, 0, n);
        const Samples s{interpolation_grid(cfg), nodes(interpolation_grid(cfg)).array().sin()};
        double worst = 0.0;
        for (int i = 0; i <= 50; ++i) {
            const double t = pi * i / 50;
            worst = std::max(worst, std::abs(eval_via_fundamentals(cfg, s, t) - std::sin(t)));
        }
        return worst;
    };
    const double coarse = max_error(9);
    const double fine = max_error(19);
    EXPECT_LT(coarse, 1e-4);
    EXPECT_GT(coarse / fine, 10.0);
}

TEST(Fundamental, DeltaSampleSelectsOneFunction) {
    const SplineConfig cfg = config(SplineFamily::Even, 0, 0, FactorKind::Riemann, 2, 0, 7);
    Samples s{interpolation_grid(cfg), Eigen::VectorXd::Zero(7)};
    s.values(3) = 1.0;
    const std::vector<double> ts{0.2, 1.0, 2.4};
    const Eigen::VectorXd via = eval_via_fundamentals(cfg, s, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
        EXPECT_NEAR(via(static_cast<Eigen::Index>(i)), fundamental_even(cfg, 4, ts[i]), 1e-13);
}

TEST(Fundamental, FreeFunctionsMatchBasis) {
    const SplineConfig full = config(SplineFamily::Full, 0, 1, FactorKind::Power, 2, 0, 9);
    const SplineConfig odd = config(SplineFamily::Odd, 1, 1, FactorKind::Power, 2, 0, 5);
    EXPECT_NEAR(fundamental_full(full, 3, 1.1), FundamentalBasis(full)(3, 1.1), 1e-14);
    EXPECT_NEAR(fundamental_odd(odd, 2, 0.8), FundamentalBasis(odd)(2, 0.8), 1e-14);
    EXPECT_THROW(fundamental_even(full, 1, 0.0), InvalidArgument);
}

TEST(Fundamental, RejectsBadInput) {
    const FundamentalBasis basis(config(SplineFamily::Full, 0, 0, FactorKind::Power, 2, 0, 9));
    EXPECT_THROW(basis(0, 0.0), InvalidArgument);
    EXPECT_THROW(basis(10, 0.0), InvalidArgument);
    const SplineConfig cfg = config(SplineFamily::Full, 0, 0, FactorKind::Power, 2, 0, 9);
    EXPECT_THROW(eval_via_fundamentals(cfg, Samples{{GridFamily::Full, 1, 9}, Eigen::VectorXd::Ones(9)}, 0.0),
                 InvalidArgument);
}
