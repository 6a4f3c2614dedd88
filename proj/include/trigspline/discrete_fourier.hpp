#pragma once

#include <Eigen/Dense>

#include "trigspline/grids.hpp"

namespace trigspline {

/// Function values f_j sampled at the nodes of `grid`.
struct Samples {
    GridSpec grid;
    Eigen::VectorXd values;
};

enum class Parity { Full, Even, Odd };

/// Coefficients of the interpolating trigonometric polynomial.
///
/// Storage is 0-based: `a(k - 1)` holds a_k. Full grids with N = 2n + 1 give
/// n cosine and n sine coefficients; even grids give N - 1 cosine
/// coefficients; odd grids give N sine coefficients and a0 = 0.
struct TrigCoefficients {
    Parity parity = Parity::Full;
    GridSpec grid;
    double a0 = 0.0;
    Eigen::VectorXd a;
    Eigen::VectorXd b;
};

/// Coefficients on Δ1: a_k, b_k = (2/N) Σ f_j {cos, sin}(k x_j), k = 1..n.
TrigCoefficients full_coeffs(const Samples& samples);

/// Cosine coefficients on Δ2, k = 1..N-1. The unshifted grid uses
/// trapezoid weights ½ on both endpoints; the shifted grid plain averages.
TrigCoefficients even_coeffs(const Samples& samples);

/// Sine coefficients on Δ3, k = 1..N, with weight 2/(N+1) on the
/// unshifted grid and 2/N on the shifted one.
TrigCoefficients odd_coeffs(const Samples& samples);

/// Dispatches on the grid family.
TrigCoefficients coefficients(const Samples& samples);

/// Synthesis weight of harmonic k (1-based) on a grid: ½ for the Nyquist
/// harmonic of Δ2^(0) (k = N-1) and Δ3^(1) (k = N), 1 otherwise.
double synthesis_weight(const GridSpec& grid, int harmonic);

/// Number of harmonics the grid carries (n, N-1 or N).
int harmonic_count(const GridSpec& grid);

/// Evaluates the interpolating polynomial at x. At the grid nodes this
/// reproduces the samples.
double evaluate_polynomial(const TrigCoefficients& coeffs, double x);

} // namespace trigspline
