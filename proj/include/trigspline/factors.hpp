#pragma once

#include <cstdint>
#include <string_view>

namespace trigspline {

enum class FactorKind {
    Riemann, ///< (sin(πk/P) / (πk/P))^(1+r)
    Power    ///< (1/k)^(1+r)
};

/// A convergence multiplier σ(r, k) damping harmonic k of a spline of
/// order r. The Riemann kind depends on `period`, the number of knots per
/// 2π; on the full grid that is N itself.
struct ConvergenceFactor {
    FactorKind kind = FactorKind::Power;
    int period = 0;

    static ConvergenceFactor power() { return {FactorKind::Power, 0}; }
    static ConvergenceFactor riemann(int period);
    /// The factor of the given kind for a series with `period` knots per 2π.
    static ConvergenceFactor make(FactorKind kind, int period);
};

/// σ(r, k) for k >= 1. Power is strictly positive; Riemann is exactly zero
/// at multiples of the period and carries the sign of sin(πk/P) otherwise.
double sigma(const ConvergenceFactor& factor, int order, std::int64_t harmonic);

/// s with σ(r, -k) = s·σ(r, k): (-1)^(1+r) for the power factor, +1 for the
/// (even) Riemann factor. This is the sign carried by the reflected (mP - k)
/// branch of the full-grid kernel sums.
double reflection_sign(const ConvergenceFactor& factor, int order);

/// c with |σ(r, k)| <= c·k^-(1+r) for all k >= 1.
double decay_constant(const ConvergenceFactor& factor, int order);

std::string_view to_string(FactorKind kind);
FactorKind parse_factor_kind(std::string_view name);

} // namespace trigspline
