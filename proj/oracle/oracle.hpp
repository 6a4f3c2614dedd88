#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "trigspline/factors.hpp"
#include "trigspline/grids.hpp"

namespace trigspline::oracle {

struct OracleConfig {
    std::int64_t reference_terms = 1'000'000;
    int quadrature_intervals = 10'000;
};

enum class SeriesId { HFull, CFull, SFull, HEven, CEven, HOdd, SOdd };

std::string_view to_string(SeriesId id);

/// Parameters of one kernel series. Full series use both indicators (the
/// numerators only i1); half-range series use `i2` as the grid indicator.
struct SeriesParams {
    int i1 = 0;
    int i2 = 0;
    FactorKind factor = FactorKind::Power;
    int order = 1;
    int derivative = 0;
    int harmonic = 1;
    int count = 9;
};

/// Knots per period of the series (N, 2(N-1), 2N or 2(N+1)).
int series_period(SeriesId id, const SeriesParams& p);

/// The kernel series summed term by term in ascending m with compensated
/// accumulation.
double brute_series(SeriesId id, const SeriesParams& p, double t, std::int64_t terms);
double brute_series(SeriesId id, const SeriesParams& p, double t, const OracleConfig& cfg = {});

/// Bound on the terms dropped after m = terms:
/// 2c Σ_{m>M} (mP - k)^(q-1-r), with c = 1 (power) or (P/π)^(1+r) (Riemann).
double analytic_tail_bound(SeriesId id, const SeriesParams& p, std::int64_t terms);

/// Trigonometric polynomial ½a0 + Σ a_k cos kt + b_k sin kt summed directly.
double trig_polynomial(double a0, const Eigen::VectorXd& a, const Eigen::VectorXd& b, double t);

/// C² periodic cubic interpolation spline on a uniform full grid, from the
/// cyclic tridiagonal system for the second derivatives.
class PeriodicCubicSpline {
public:
    PeriodicCubicSpline(const GridSpec& grid, const Eigen::VectorXd& values);

    double operator()(double t) const;
    const Eigen::VectorXd& moments() const { return moments_; }

private:
    double origin_;
    double step_;
    Eigen::VectorXd values_;
    Eigen::VectorXd moments_;
};

/// Uniform cubic B-spline with knot spacing h = 2π/N centred at `center`,
/// scaled by 1/h and wrapped to period 2π.
double periodic_cubic_bspline(int count, double center, double t);

/// Composite Simpson rule over [a, b] with an even number of intervals.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

/// Composite Simpson over [-π, π] for an evaluator taking all abscissae at once.
double quadrature_unit_integral(const std::function<Eigen::VectorXd(std::span<const double>)>& f,
                                const OracleConfig& cfg = {});

} // namespace trigspline::oracle
