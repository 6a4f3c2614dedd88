#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "trigspline/bsplines.hpp"
#include "trigspline/error.hpp"
#include "trigspline/splines.hpp"

using namespace trigspline;

namespace {

constexpr double pi = std::numbers::pi;

BSplineKind kind(std::string_view label, int r, int n = 9, int q = 0) {
    BSplineKind k = parse_bspline_kind(label);
    k.order = r;
    k.count = n;
    k.derivative = q;
    k.truncation = default_truncation(r, q);
    return k;
}

Samples random_samples(std::mt19937_64& rng, int indicator, int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Samples s{{GridFamily::Full, indicator, n}, Eigen::VectorXd(n)};
    for (int j = 0; j < n; ++j)
        s.values(j) = dist(rng);
    return s;
}

} // namespace

TEST(BSplines, NamesRoundTrip) {
    for (const BSplineKind& k : all_bspline_kinds(2, 9, default_truncation(2, 0))) {
        const BSplineKind parsed = parse_bspline_kind(name(k));
        EXPECT_EQ(parsed.normalization, k.normalization);
        EXPECT_EQ(parsed.factor, k.factor);
    }
    EXPECT_EQ(name(all_bspline_kinds(1, 9, {}).front()), "BR");
    EXPECT_THROW(parse_bspline_kind("BX"), InvalidArgument);
}

TEST(BSplines, TranslatesOfOneShape) {
    for (std::string_view label : {"BC", "BR0", "BC1"}) {
        const BSplineBasis basis(kind(label, 3));
        const double h = 2 * pi / 9;
        for (double t : {0.1, 1.3, 4.0})
            for (int j = 2; j <= 9; ++j)
                EXPECT_NEAR(basis(j, t), basis(1, t - (j - 1) * h), 1e-12) << label;
    }
}

TEST(BSplines, PeriodicAndSymmetric) {
    const BSplineBasis basis(kind("BR", 2));
    for (double u : {0.05, 0.7, 2.2}) {
        EXPECT_NEAR(basis(1, u), basis(1, -u), 1e-12);
        EXPECT_NEAR(basis(4, u), basis(4, u + 2 * pi), 1e-12);
    }
}

TEST(BSplines, UnitIntegral) {
    for (int r = 1; r <= 3; ++r) {
        const BSplineBasis basis(kind("BC", r));
        const double integral = oracle::simpson([&](double t) { return basis(1, t); }, -pi, pi, 9'000);
        EXPECT_NEAR(integral, 1.0, 1e-10) << "r=" << r;
    }
}

TEST(BSplines, CubicRiemannMatchesClassicalBSpline) {
    const BSplineBasis basis(kind("BR", 3));
    for (int i = 0; i < 100; ++i) {
        const double t = 2 * pi * i / 100;
        EXPECT_NEAR(basis(1, t), oracle::periodic_cubic_bspline(9, 0.0, t), 1e-6);
    }
}

TEST(BSplines, NormalizerMatchesDenominatorSeries) {
    for (int r = 1; r <= 4; ++r) {
        const Eigen::VectorXd d = bspline_normalizer(kind("BC0", r));
        for (int k = 1; k <= 4; ++k)
            EXPECT_NEAR(d(k - 1), h_full(0, 0, FactorKind::Power, r + 1, k, 9, default_truncation(r + 1, 0)),
                        1e-12 * std::abs(d(k - 1)));
    }
    EXPECT_TRUE(bspline_normalizer(kind("BR", 2)).isOnes());
}

TEST(BSplines, DeterminantExamples) {
    EXPECT_NEAR(std::abs(collocation_matrix(kind("BR", 1)).determinant), 25.1548, 0.01 * 25.1548);
    EXPECT_NEAR(std::abs(collocation_matrix(kind("BC0", 2)).determinant), 1134.7, 0.01 * 1134.7);
    const CollocationSystem singular = collocation_matrix(kind("BC", 11));
    EXPECT_LT(std::abs(singular.determinant), 1e-20);
    EXPECT_TRUE(singular.singular());
}

TEST(BSplines, SingularSystemThrows) {
    const CollocationSystem sys = collocation_matrix(kind("BC", 11));
    const Samples ones{sys.grid, Eigen::VectorXd::Ones(9)};
    try {
        solve_basis_coefficients(sys, ones);
        FAIL() << "expected SingularSystem";
    } catch (const SingularSystem& e) {
        EXPECT_DOUBLE_EQ(e.determinant(), sys.determinant);
    }
}

TEST(BSplines, ConstantReproduced) {
    const BSplineKind k = kind("BC0", 3);
    const Samples ones{{GridFamily::Full, 0, 9}, Eigen::VectorXd::Ones(9)};
    const BSplineExpansion s = bspline_interpolate(k, ones);
    for (double t : {0.0, 0.37, 3.3})
        EXPECT_NEAR(s(t), 1.0, 1e-10);
}

TEST(BSplines, CollocationInterpolates) {
    std::mt19937_64 rng(41);
    for (int indicator : {0, 1}) {
        const Samples s = random_samples(rng, indicator, 9);
        const BSplineExpansion e = bspline_interpolate(kind("BR1", 2), s);
        const Eigen::VectorXd x = nodes(s.grid);
        const Eigen::VectorXd y = e(std::span<const double>(x.data(), x.size()));
        EXPECT_LT((y - s.values).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(BSplines, SameSplineAsCoefficientForm) {
    std::mt19937_64 rng(42);
    for (int r = 1; r <= 3; ++r)
        for (int indicator : {0, 1}) {
            const Samples s = random_samples(rng, indicator, 9);
            const SplineConfig cfg{SplineFamily::Full, 0, indicator, FactorKind::Power, r, 0, 9,
                                   default_truncation(r, 0)};
            const TrigSpline reference = interpolate(cfg, s);
            for (const BSplineKind& k : all_bspline_kinds(r, 9, default_truncation(r, 0))) {
                if (k.factor != FactorKind::Power)
                    continue;
                const BSplineExpansion e = bspline_interpolate(k, s);
                for (double t : {0.2, 1.9, 5.5})
                    EXPECT_NEAR(e(t), reference(t), 1e-9) << name(k) << " r=" << r;
            }
        }
}

TEST(BSplines, DerivativeBasis) {
    std::mt19937_64 rng(43);
    const Samples s = random_samples(rng, 0, 9);
    const BSplineExpansion value = bspline_interpolate(kind("BC", 3), s);
    const BSplineExpansion slope = bspline_interpolate(kind("BC", 3, 9, 1), s);
    const double h = 1e-5;
    for (double t : {0.4, 2.1, 4.8})
        EXPECT_NEAR((value(t + h) - value(t - h)) / (2 * h), slope(t), 1e-6);
}

TEST(BSplines, BatchMatchesPointwise) {
    const BSplineBasis basis(kind("BR0", 2));
    const std::vector<double> ts{0.0, 1.0, 2.5};
    const Eigen::MatrixXd m = basis.values(ts);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (int j = 1; j <= 9; ++j)
            EXPECT_NEAR(m(i, j - 1), bspline_eval(kind("BR0", 2), j, ts[static_cast<std::size_t>(i)]), 1e-14);
}

TEST(BSplines, RejectsBadInput) {
    EXPECT_THROW(validate(kind("BC", 0)), InvalidArgument);
    EXPECT_THROW(validate(kind("BC", 2, 8)), InvalidArgument);
    EXPECT_THROW(validate(kind("BC", 2, 9, 3)), InvalidArgument);
    EXPECT_THROW(collocation_matrix(kind("BC", 2, 9, 1)), InvalidArgument);
    EXPECT_THROW(collocation_matrix(kind("BC", 2), 2), InvalidArgument);
    const BSplineBasis basis(kind("BC", 2));
    EXPECT_THROW(basis(0, 0.0), InvalidArgument);
    EXPECT_THROW(basis(10, 0.0), InvalidArgument);
    const CollocationSystem sys = collocation_matrix(kind("BC", 2));
    EXPECT_THROW(solve_basis_coefficients(sys, Samples{{GridFamily::Full, 1, 9}, Eigen::VectorXd::Ones(9)}),
                 InvalidArgument);
}
