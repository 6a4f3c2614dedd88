#include "trigspline/discrete_fourier.hpp"

#include <cmath>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

namespace {

void check_samples(const Samples& samples, GridFamily family) {
    validate(samples.grid);
    if (samples.grid.family != family)
        throw InvalidArgument(std::string("samples live on a ") + std::string(to_string(samples.grid.family)) +
                              " grid, expected " + std::string(to_string(family)));
    if (samples.values.size() != samples.grid.count)
        throw InvalidArgument("expected " + std::to_string(samples.grid.count) + " samples, got " +
                              std::to_string(samples.values.size()));
}

} // namespace

int harmonic_count(const GridSpec& grid) {
    switch (grid.family) {
    case GridFamily::Full:
        return (grid.count - 1) / 2;
    case GridFamily::EvenClosed:
        return grid.count - 1;
    case GridFamily::OddOpen:
        return grid.count;
    }
    return 0;
}

double synthesis_weight(const GridSpec& grid, int harmonic) {
    if (grid.family == GridFamily::EvenClosed && grid.indicator == 0 && harmonic == grid.count - 1)
        return 0.5;
    if (grid.family == GridFamily::OddOpen && grid.indicator == 1 && harmonic == grid.count)
        return 0.5;
    return 1.0;
}

TrigCoefficients full_coeffs(const Samples& samples) {
    check_samples(samples, GridFamily::Full);
    const int count = samples.grid.count;
    const int n = harmonic_count(samples.grid);
    const Eigen::VectorXd x = nodes(samples.grid);
    const double scale = 2.0 / count;

    TrigCoefficients out;
    out.parity = Parity::Full;
    out.grid = samples.grid;
    out.a0 = scale * samples.values.sum();
    out.a.setZero(n);
    out.b.setZero(n);
    for (int k = 1; k <= n; ++k) {
        const Eigen::ArrayXd arg = k * x.array();
        out.a(k - 1) = scale * (samples.values.array() * arg.cos()).sum();
        out.b(k - 1) = scale * (samples.values.array() * arg.sin()).sum();
    }
    return out;
}

TrigCoefficients even_coeffs(const Samples& samples) {
    check_samples(samples, GridFamily::EvenClosed);
    const int count = samples.grid.count;
    const Eigen::VectorXd x = nodes(samples.grid);

    Eigen::ArrayXd weights = Eigen::ArrayXd::Ones(count);
    double scale = 2.0 / count;
    if (samples.grid.indicator == 0) {
        weights(0) = 0.5;
        weights(count - 1) = 0.5;
        scale = 2.0 / (count - 1);
    }
    const Eigen::ArrayXd wf = weights * samples.values.array();

    TrigCoefficients out;
    out.parity = Parity::Even;
    out.grid = samples.grid;
    out.a0 = scale * wf.sum();
    out.a.setZero(count - 1);
    for (int k = 1; k <= count - 1; ++k)
        out.a(k - 1) = scale * (wf * (k * x.array()).cos()).sum();
    return out;
}

TrigCoefficients odd_coeffs(const Samples& samples) {
    check_samples(samples, GridFamily::OddOpen);
    const int count = samples.grid.count;
    const Eigen::VectorXd x = nodes(samples.grid);
    const double scale = samples.grid.indicator == 0 ? 2.0 / (count + 1) : 2.0 / count;

    TrigCoefficients out;
    out.parity = Parity::Odd;
    out.grid = samples.grid;
    out.b.setZero(count);
    for (int k = 1; k <= count; ++k)
        out.b(k - 1) = scale * (samples.values.array() * (k * x.array()).sin()).sum();
    return out;
}

TrigCoefficients coefficients(const Samples& samples) {
    switch (samples.grid.family) {
    case GridFamily::Full:
        return full_coeffs(samples);
    case GridFamily::EvenClosed:
        return even_coeffs(samples);
    case GridFamily::OddOpen:
        return odd_coeffs(samples);
    }
    throw InvalidArgument("unknown grid family");
}

double evaluate_polynomial(const TrigCoefficients& coeffs, double x) {
    double value = 0.5 * coeffs.a0;
    for (Eigen::Index i = 0; i < coeffs.a.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        value += synthesis_weight(coeffs.grid, k) * coeffs.a(i) * std::cos(k * x);
    }
    for (Eigen::Index i = 0; i < coeffs.b.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        value += synthesis_weight(coeffs.grid, k) * coeffs.b(i) * std::sin(k * x);
    }
    return value;
}

} // namespace trigspline
