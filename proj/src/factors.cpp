#include "trigspline/factors.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

namespace {

double integer_power(double base, int exponent) {
    double result = 1.0;
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

} // namespace

ConvergenceFactor ConvergenceFactor::riemann(int period) {
    if (period < 2)
        throw InvalidArgument("Riemann factor needs a period of at least 2 knots, got " +
                              std::to_string(period));
    return {FactorKind::Riemann, period};
}

ConvergenceFactor ConvergenceFactor::make(FactorKind kind, int period) {
    return kind == FactorKind::Power ? power() : riemann(period);
}

double sigma(const ConvergenceFactor& factor, int order, std::int64_t harmonic) {
    if (order < 1)
        throw InvalidArgument("spline order must be >= 1");
    if (harmonic < 1)
        throw InvalidArgument("harmonic index must be >= 1");
    const int exponent = 1 + order;
    if (factor.kind == FactorKind::Power)
        return integer_power(1.0 / static_cast<double>(harmonic), exponent);

    // sin(πk/P) with k = wP + rem reduces to (-1)^w sin(π rem/P).
    const std::int64_t period = factor.period;
    const std::int64_t wraps = harmonic / period;
    const std::int64_t rem = harmonic % period;
    if (rem == 0)
        return 0.0;
    double s = std::sin(std::numbers::pi * static_cast<double>(rem) / static_cast<double>(period));
    if (wraps % 2 != 0)
        s = -s;
    const double x = std::numbers::pi * static_cast<double>(harmonic) / static_cast<double>(period);
    return integer_power(s / x, exponent);
}

double reflection_sign(const ConvergenceFactor& factor, int order) {
    if (factor.kind == FactorKind::Riemann)
        return 1.0;
    return (order + 1) % 2 == 0 ? 1.0 : -1.0;
}

double decay_constant(const ConvergenceFactor& factor, int order) {
    if (factor.kind == FactorKind::Power)
        return 1.0;
    return integer_power(static_cast<double>(factor.period) / std::numbers::pi, 1 + order);
}

std::string_view to_string(FactorKind kind) {
    return kind == FactorKind::Power ? "power" : "riemann";
}

FactorKind parse_factor_kind(std::string_view name) {
    if (name == "power")
        return FactorKind::Power;
    if (name == "riemann")
        return FactorKind::Riemann;
    throw InvalidArgument("unknown convergence factor '" + std::string(name) + "'");
}

} // namespace trigspline
