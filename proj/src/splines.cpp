#include "trigspline/splines.hpp"

#include <string>
#include <utility>

#include "trigspline/error.hpp"

namespace trigspline {

namespace {

GridFamily grid_family(SplineFamily family) {
    switch (family) {
    case SplineFamily::Full:
        return GridFamily::Full;
    case SplineFamily::Even:
        return GridFamily::EvenClosed;
    case SplineFamily::Odd:
        return GridFamily::OddOpen;
    }
    return GridFamily::Full;
}

Parity parity_of(SplineFamily family) {
    switch (family) {
    case SplineFamily::Full:
        return Parity::Full;
    case SplineFamily::Even:
        return Parity::Even;
    case SplineFamily::Odd:
        return Parity::Odd;
    }
    return Parity::Full;
}

void require_family(const SplineConfig& cfg, SplineFamily family) {
    if (cfg.family != family)
        throw InvalidArgument("spline config is " + std::string(to_string(cfg.family)) + ", expected " +
                              std::string(to_string(family)));
}

} // namespace

void validate(const SplineConfig& cfg) {
    if (cfg.i1 < 0 || cfg.i1 > 1 || cfg.i2 < 0 || cfg.i2 > 1)
        throw InvalidArgument("grid indicators must be 0 or 1");
    const bool supported = cfg.family == SplineFamily::Full ||
                           (cfg.family == SplineFamily::Even && cfg.i1 == 0) ||
                           (cfg.family == SplineFamily::Odd && cfg.i1 == cfg.i2);
    if (!supported)
        throw InvalidArgument("unsupported indicator pair (" + std::to_string(cfg.i1) + "," +
                              std::to_string(cfg.i2) + ") for " + std::string(to_string(cfg.family)) +
                              " splines");
    if (cfg.order < 1)
        throw InvalidArgument("spline order r must be >= 1");
    if (cfg.derivative < 0 || cfg.derivative > cfg.order)
        throw InvalidArgument("derivative order q must satisfy 0 <= q <= r");
    validate(GridSpec{grid_family(cfg.family), cfg.i2, cfg.count});
}

GridSpec interpolation_grid(const SplineConfig& cfg) {
    validate(cfg);
    return {grid_family(cfg.family), cfg.i2, cfg.count};
}

SeriesLayout series_layout(const SplineConfig& cfg) {
    validate(cfg);
    switch (cfg.family) {
    case SplineFamily::Full:
        return full_layout(cfg.i1, cfg.i2, cfg.count);
    case SplineFamily::Even:
        return even_layout(cfg.i2, cfg.count);
    case SplineFamily::Odd:
        return odd_layout(cfg.i2, cfg.count);
    }
    return {};
}

KernelSpec kernel_spec(const SplineConfig& cfg) {
    return {series_layout(cfg), cfg.factor, cfg.order, cfg.derivative,
            harmonic_count(interpolation_grid(cfg)), cfg.truncation};
}

SplineConfig with_derivative(SplineConfig cfg, int derivative) {
    cfg.derivative = derivative;
    return cfg;
}

SplineFamily family_of(GridFamily grid) {
    switch (grid) {
    case GridFamily::Full:
        return SplineFamily::Full;
    case GridFamily::EvenClosed:
        return SplineFamily::Even;
    case GridFamily::OddOpen:
        return SplineFamily::Odd;
    }
    return SplineFamily::Full;
}

std::string_view to_string(SplineFamily family) {
    switch (family) {
    case SplineFamily::Full:
        return "full";
    case SplineFamily::Even:
        return "even";
    case SplineFamily::Odd:
        return "odd";
    }
    return "?";
}

SplineFamily parse_spline_family(std::string_view name) {
    return family_of(parse_grid_family(name));
}

// ---------------------------------------------------------------------------

TrigSpline::TrigSpline(const SplineConfig& cfg, TrigCoefficients coeffs)
    : cfg_(cfg), coeffs_(std::move(coeffs)), table_(kernel_spec(cfg)) {
    const GridSpec grid = interpolation_grid(cfg);
    if (coeffs_.parity != parity_of(cfg.family) || !(coeffs_.grid == grid))
        throw InvalidArgument("coefficients were not computed on the spline's interpolation grid");

    const int K = table_.harmonics();
    const Eigen::VectorXd& h = table_.denominators();
    cos_weights_.setZero(K);
    sin_weights_.setZero(K);
    for (int k = 1; k <= K; ++k) {
        const double w = synthesis_weight(grid, k) / h(k - 1);
        if (coeffs_.a.size() > 0)
            cos_weights_(k - 1) = w * coeffs_.a(k - 1);
        if (coeffs_.b.size() > 0)
            sin_weights_(k - 1) = w * coeffs_.b(k - 1);
    }
}

double TrigSpline::combine(const KernelValues& kv) const {
    return 0.5 * coeffs_.a0 * constant_term(cfg_.derivative) + cos_weights_.dot(kv.c) + sin_weights_.dot(kv.s);
}

double TrigSpline::operator()(double t) const {
    return combine(table_.evaluate(t));
}

Eigen::VectorXd TrigSpline::operator()(std::span<const double> ts) const {
    const TailSums sums = table_.accumulate(ts);
    Eigen::VectorXd out(static_cast<Eigen::Index>(ts.size()));
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) = combine(table_.assemble(sums, i, ts[i]));
    return out;
}

TrigSpline interpolate(const SplineConfig& cfg, const Samples& samples) {
    if (!(samples.grid == interpolation_grid(cfg)))
        throw InvalidArgument("samples do not live on the spline's interpolation grid");
    return TrigSpline(cfg, coefficients(samples));
}

double eval_full(const SplineConfig& cfg, const TrigCoefficients& coeffs, double t) {
    require_family(cfg, SplineFamily::Full);
    return TrigSpline(cfg, coeffs)(t);
}

double eval_even(const SplineConfig& cfg, const TrigCoefficients& coeffs, double t) {
    require_family(cfg, SplineFamily::Even);
    return TrigSpline(cfg, coeffs)(t);
}

double eval_odd(const SplineConfig& cfg, const TrigCoefficients& coeffs, double t) {
    require_family(cfg, SplineFamily::Odd);
    return TrigSpline(cfg, coeffs)(t);
}

} // namespace trigspline
