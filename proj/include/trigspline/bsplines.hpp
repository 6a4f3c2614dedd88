#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "trigspline/discrete_fourier.hpp"
#include "trigspline/factors.hpp"
#include "trigspline/kernels.hpp"

namespace trigspline {

enum class BSplineNormalization {
    FirstKind,      ///< no denominator (BC, BR)
    SecondKindSame, ///< normalizer with I1 = 0 (BC0, BR0)
    SecondKindCross ///< normalizer with I1 = 1 (BC1, BR1)
};

/// A trigonometric B-spline family on Δ1^(0) knots. Power factor gives the
/// BC kinds, Riemann the BR kinds.
struct BSplineKind {
    BSplineNormalization normalization = BSplineNormalization::FirstKind;
    FactorKind factor = FactorKind::Power;
    int order = 1;
    int derivative = 0;
    int count = 9;
    TruncationPolicy truncation;
};

/// "BC", "BC0", "BC1", "BR", "BR0" or "BR1".
std::string name(const BSplineKind& kind);

/// Kind for one of the six names, with the remaining fields defaulted.
BSplineKind parse_bspline_kind(std::string_view name);

/// All six kinds in display order BR, BC, BR0, BC0, BR1, BC1.
std::vector<BSplineKind> all_bspline_kinds(int order, int count, const TruncationPolicy& truncation);

void validate(const BSplineKind& kind);

/// D_k, k = 1..n, dividing harmonic k of the B-spline. Ones for the first
/// kind; for the second kind
///
///   |σ(r+1, k)| + Σ_m (±1)^m [|σ(r+1, mN+k)| + (-1)^r |σ(r+1, mN-k)|]
///
/// with the alternation (-1)^m present for the cross normalization.
Eigen::VectorXd bspline_normalizer(const BSplineKind& kind);

/// B_j(t) = (1/π)[½I(q) + Σ_k C_k(t - x_j) / D_k], x_j on Δ1^(0).
class BSplineBasis {
public:
    explicit BSplineBasis(const BSplineKind& kind);

    const BSplineKind& kind() const { return kind_; }
    int size() const { return kind_.count; }
    const KernelTable& table() const { return table_; }
    const Eigen::VectorXd& normalizer() const { return normalizer_; }

    /// B_j(t) for 1-based j.
    double operator()(int j, double t) const;
    /// All B_j(t), index j-1.
    Eigen::VectorXd values(double t) const;
    /// Row i holds B_j(ts[i]) for every j.
    Eigen::MatrixXd values(std::span<const double> ts) const;

private:
    double combine(const KernelValues& kv) const;

    BSplineKind kind_;
    KernelTable table_;
    Eigen::VectorXd normalizer_;
    Eigen::VectorXd centers_;
};

double bspline_eval(const BSplineKind& kind, int j, double t);

inline constexpr double default_singularity_floor = 1e-12;

/// Collocation matrix M(k, j) = B_j(x_k) on Δ1^(indicator) and its
/// determinant from an LU factorization with partial pivoting.
struct CollocationSystem {
    BSplineKind kind;
    GridSpec grid;
    Eigen::MatrixXd matrix;
    double determinant = 0.0;

    /// |det| below floor·(max |M(k, j)|)^N.
    bool singular(double floor = default_singularity_floor) const;
};

CollocationSystem collocation_matrix(const BSplineKind& kind, int indicator = 0);

/// α with M·α = f. Throws SingularSystem (carrying the determinant) when the
/// system is singular at the given floor.
Eigen::VectorXd solve_basis_coefficients(const CollocationSystem& sys, const Samples& samples,
                                         double floor = default_singularity_floor);

/// Σ_j α_j B_j(t).
class BSplineExpansion {
public:
    BSplineExpansion(BSplineBasis basis, Eigen::VectorXd alpha);

    const Eigen::VectorXd& alpha() const { return alpha_; }
    const BSplineBasis& basis() const { return basis_; }

    double operator()(double t) const;
    Eigen::VectorXd operator()(std::span<const double> ts) const;

private:
    BSplineBasis basis_;
    Eigen::VectorXd alpha_;
};

/// Interpolates samples on Δ1^(I) in the basis of `kind`, which may carry
/// any derivative order; the coefficients come from the q = 0 system.
BSplineExpansion bspline_interpolate(const BSplineKind& kind, const Samples& samples,
                                     double floor = default_singularity_floor);

} // namespace trigspline
