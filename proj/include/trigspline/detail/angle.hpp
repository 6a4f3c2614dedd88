#pragma once

#include <cmath>
#include <complex>

namespace trigspline::detail {

/// multiple·t reduced into [-π, π]. The product is carried as an exact
/// hi + lo pair and 2π as a two-term constant, so large harmonics keep the
/// accuracy of t itself.
inline double reduced_angle(double multiple, double t) {
    constexpr double two_pi_hi = 6.283185307179586;
    constexpr double two_pi_lo = 2.4492935982947064e-16;
    const double hi = multiple * t;
    const double lo = std::fma(multiple, t, -hi);
    const double wraps = std::nearbyint(hi / two_pi_hi);
    const double r = std::fma(-wraps, two_pi_hi, hi);
    return std::fma(-wraps, two_pi_lo, r) + lo;
}

inline std::complex<double> unit(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

/// i^q, the phase shift of a q-th derivative.
inline std::complex<double> derivative_phase(int derivative) {
    switch (((derivative % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace trigspline::detail
