#pragma once

#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "trigspline/discrete_fourier.hpp"
#include "trigspline/factors.hpp"
#include "trigspline/grids.hpp"
#include "trigspline/kernels.hpp"

namespace trigspline {

enum class SplineFamily { Full, Even, Odd };

/// One member of a spline family. `i1` selects the knot grid and `i2` the
/// interpolation grid.
struct SplineConfig {
    SplineFamily family = SplineFamily::Full;
    int i1 = 0;
    int i2 = 0;
    FactorKind factor = FactorKind::Power;
    int order = 3;
    int derivative = 0;
    int count = 9;
    TruncationPolicy truncation;
};

/// Throws InvalidArgument for unsupported (family, i1, i2) pairs, q > r and
/// invalid node counts. Full accepts every pair, Even (0,0) and (0,1), Odd
/// (0,0) and (1,1).
void validate(const SplineConfig& cfg);

/// The grid the spline interpolates on.
GridSpec interpolation_grid(const SplineConfig& cfg);

SeriesLayout series_layout(const SplineConfig& cfg);
KernelSpec kernel_spec(const SplineConfig& cfg);

/// Same configuration with a different derivative order.
SplineConfig with_derivative(SplineConfig cfg, int derivative);

SplineFamily family_of(GridFamily grid);
std::string_view to_string(SplineFamily family);
SplineFamily parse_spline_family(std::string_view name);

/// 1 for q = 0, 0 otherwise: the weight of the constant term.
inline double constant_term(int derivative) { return derivative == 0 ? 1.0 : 0.0; }

/// An interpolation spline in coefficient form,
///
///   ½a0·I(q) + Σ_k w_k (a_k C_k(t) + b_k S_k(t)) / H_k,
///
/// with w_k the synthesis weight of the interpolation grid.
class TrigSpline {
public:
    TrigSpline(const SplineConfig& cfg, TrigCoefficients coeffs);

    const SplineConfig& config() const { return cfg_; }
    const TrigCoefficients& coefficients() const { return coeffs_; }
    const KernelTable& table() const { return table_; }

    double operator()(double t) const;
    Eigen::VectorXd operator()(std::span<const double> ts) const;

private:
    double combine(const KernelValues& kv) const;

    SplineConfig cfg_;
    TrigCoefficients coeffs_;
    KernelTable table_;
    Eigen::VectorXd cos_weights_; ///< w_k a_k / H_k
    Eigen::VectorXd sin_weights_; ///< w_k b_k / H_k
};

/// Coefficients from the samples, then the spline through them.
TrigSpline interpolate(const SplineConfig& cfg, const Samples& samples);

double eval_full(const SplineConfig& cfg, const TrigCoefficients& coeffs, double t);
double eval_even(const SplineConfig& cfg, const TrigCoefficients& coeffs, double t);
double eval_odd(const SplineConfig& cfg, const TrigCoefficients& coeffs, double t);

} // namespace trigspline
