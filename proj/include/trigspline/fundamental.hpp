#pragma once

#include <span>

#include <Eigen/Dense>

#include "trigspline/discrete_fourier.hpp"
#include "trigspline/kernels.hpp"
#include "trigspline/splines.hpp"

namespace trigspline {

/// The cardinal splines φ_1..φ_N of a spline configuration: φ_k is 1 at
/// interpolation node k and 0 at the others (for q = 0).
///
/// Full:  φ_k(t) = (1/N)[I(q) + 2 Σ_j C_j(t - x_k) / H_j]
/// Even:  φ_k(t) = c_k [½I(q) + Σ_j v_j C_j(t) cos(j x_k) / H_j]
/// Odd:   φ_k(t) = c   Σ_j v_j S_j(t) sin(j x_k) / H_j
///
/// with c_k = 2/(N-1) (halved at both ends) on Δ2^(0), 2/N on Δ2^(1) and
/// Δ3^(1), 2/(N+1) on Δ3^(0), and v_j = ½ on the last harmonic of Δ2^(0)
/// and Δ3^(1).
class FundamentalBasis {
public:
    explicit FundamentalBasis(const SplineConfig& cfg);

    const SplineConfig& config() const { return cfg_; }
    int size() const { return cfg_.count; }
    const Eigen::VectorXd& nodes() const { return nodes_; }

    /// φ_k(t) for 1-based k.
    double operator()(int k, double t) const;
    /// All φ_k(t), index k-1.
    Eigen::VectorXd values(double t) const;
    /// Row i holds φ_k(ts[i]) for every k.
    Eigen::MatrixXd values(std::span<const double> ts) const;

private:
    Eigen::VectorXd row(const TailSums& sums, Eigen::Index column, double t) const;

    SplineConfig cfg_;
    KernelTable table_;
    Eigen::VectorXd nodes_;
    Eigen::VectorXd constant_;  ///< weight of I(q) per k
    Eigen::MatrixXd weights_;   ///< (k, j): weight of C_j/H_j or S_j/H_j (half-range families)
};

double fundamental_full(const SplineConfig& cfg, int k, double t);
double fundamental_even(const SplineConfig& cfg, int k, double t);
double fundamental_odd(const SplineConfig& cfg, int k, double t);

/// Σ_k f_k φ_k(t).
double eval_via_fundamentals(const SplineConfig& cfg, const Samples& samples, double t);
Eigen::VectorXd eval_via_fundamentals(const SplineConfig& cfg, const Samples& samples,
                                      std::span<const double> ts);

} // namespace trigspline
