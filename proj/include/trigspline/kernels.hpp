#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "trigspline/factors.hpp"

namespace trigspline {

// ---------------------------------------------------------------------------
// Truncation of the m-series
// ---------------------------------------------------------------------------

/// Sum exactly `terms` values of m (0 keeps only the leading harmonic).
struct FixedTerms {
    std::int64_t terms = 0;
};

/// Sum the fewest m-terms whose analytic tail bound is below `epsilon`,
/// never more than `max_terms`.
struct TailTolerance {
    double epsilon = 1e-12;
    std::int64_t max_terms = 100'000;
};

inline constexpr double default_tail_epsilon = 1e-12;
inline constexpr std::int64_t default_max_terms = 100'000;
inline constexpr std::int64_t default_fixed_terms = 10'000;

/// Upper bound on Σ_{m>M} (|w(mP+k)| + |w(mP-k)|) over every k <= max_harmonic,
/// for term weights |w(l)| <= constant·l^-decay.
struct TailBound {
    int period = 1;
    int max_harmonic = 0;
    double constant = 1.0;
    int decay = 2;
    double scale = 1.0; ///< the bound is divided by this

    /// +inf when the series is not absolutely convergent (decay <= 1).
    double operator()(std::int64_t terms) const;
};

class TruncationPolicy {
public:
    using Mode = std::variant<FixedTerms, TailTolerance>;

    TruncationPolicy() : mode_(TailTolerance{}) {}

    static TruncationPolicy fixed(std::int64_t terms);
    static TruncationPolicy tolerance(double epsilon, std::int64_t max_terms = default_max_terms);

    const Mode& mode() const { return mode_; }
    bool is_fixed() const { return std::holds_alternative<FixedTerms>(mode_); }

    /// Number of m-terms to keep for a series with the given tail bound.
    std::int64_t resolve(const TailBound& bound) const;

private:
    explicit TruncationPolicy(Mode mode) : mode_(mode) {}
    Mode mode_;
};

/// TailTolerance(epsilon, 1e5) while the derivative series converges
/// absolutely (q <= r-1); FixedTerms(1e4) for q = r, where terms only decay
/// like 1/m.
TruncationPolicy default_truncation(int order, int derivative, double epsilon = default_tail_epsilon);

// ---------------------------------------------------------------------------
// Series layouts
// ---------------------------------------------------------------------------

/// Shape of the kernel sums
///
///   H(k)    = σ(k) + Σ_m a(m) [σ(mP+k) + ρ σ(mP-k)]
///   C(k, t) = σ(k)k^q cos(kt + qπ/2)
///             + Σ_m b(m) [σ(mP+k)(mP+k)^q cos((mP+k)t + qπ/2) + ρ σ(mP-k)(mP-k)^q cos(...)]
///   S(k, t) = same with sin and -ρ on the reflected branch
///
/// where a(m), b(m) are 1 or (-1)^m and ρ is either the factor's reflection
/// sign (full grids) or +1 (half-range grids).
struct SeriesLayout {
    int period = 3;
    bool alternating_denominator = false;
    bool alternating_numerator = false;
    bool factor_parity_reflection = true;

    friend bool operator==(const SeriesLayout&, const SeriesLayout&) = default;
};

/// Δ1 with knot grid i1 and interpolation grid i2: period N, denominator
/// sign (-1)^(m(i1+i2)), numerator sign (-1)^(m·i1).
SeriesLayout full_layout(int i1, int i2, int count);
/// Δ2^(indicator): period 2(N-1) without alternation, or 2N with an
/// alternating denominator.
SeriesLayout even_layout(int indicator, int count);
/// Δ3^(indicator): period 2(N+1) without alternation, or 2N with an
/// alternating numerator.
SeriesLayout odd_layout(int indicator, int count);

/// Convergence factor matched to the layout's knot count.
ConvergenceFactor layout_factor(const SeriesLayout& layout, FactorKind kind);

double reflection(const SeriesLayout& layout, const ConvergenceFactor& factor, int order);

/// σ(r, l)·l^q.
double term_weight(const ConvergenceFactor& factor, int order, int derivative, std::int64_t harmonic);

TailBound tail_bound(const SeriesLayout& layout, const ConvergenceFactor& factor, int order,
                     int derivative, int max_harmonic);

// ---------------------------------------------------------------------------
// Single-value sums (streamed, no caching)
// ---------------------------------------------------------------------------

struct KernelPair {
    double c = 0.0;
    double s = 0.0;
};

/// H(k) truncated after `terms` values of m. Throws DegenerateKernel when
/// |H| < 1e-300.
double denominator_sum(const SeriesLayout& layout, FactorKind kind, int order, int harmonic,
                       std::int64_t terms);

/// C(k, t) and S(k, t) truncated after `terms` values of m.
KernelPair numerator_sums(const SeriesLayout& layout, FactorKind kind, int order, int derivative,
                          int harmonic, double t, std::int64_t terms);

double h_full(int i1, int i2, FactorKind kind, int order, int harmonic, int count,
              const TruncationPolicy& truncation);
double c_full(int i1, FactorKind kind, int order, int derivative, int harmonic, int count, double t,
              const TruncationPolicy& truncation);
double s_full(int i1, FactorKind kind, int order, int derivative, int harmonic, int count, double t,
              const TruncationPolicy& truncation);

double h_even(int indicator, FactorKind kind, int order, int harmonic, int count,
              const TruncationPolicy& truncation);
double c_even(int indicator, FactorKind kind, int order, int derivative, int harmonic, int count,
              double t, const TruncationPolicy& truncation);

double h_odd(int indicator, FactorKind kind, int order, int harmonic, int count,
             const TruncationPolicy& truncation);
double s_odd(int indicator, FactorKind kind, int order, int derivative, int harmonic, int count,
             double t, const TruncationPolicy& truncation);

// ---------------------------------------------------------------------------
// Precomputed table for repeated evaluation
// ---------------------------------------------------------------------------

struct KernelSpec {
    SeriesLayout layout;
    FactorKind factor = FactorKind::Power;
    int order = 1;
    int derivative = 0;
    int harmonics = 1; ///< k runs over 1..harmonics
    TruncationPolicy truncation;
};

/// C_k and S_k at one point, index k-1.
struct KernelValues {
    Eigen::VectorXd c;
    Eigen::VectorXd s;
};

/// Σ_m b(m)·(±1)^m·w(mP±k)·e^{imPt} per harmonic (rows) and point (columns).
struct TailSums {
    Eigen::MatrixXcd plus;
    Eigen::MatrixXcd minus;
};

/// Denominators H_k and the term weights of C_k/S_k for one configuration,
/// immutable after construction. A tail tolerance is applied relative to
/// min_k |σ(k)|, the size of the smallest denominator, since every consumer
/// divides by H_k. Evaluation at P points costs O(P·K·M)
/// multiply-adds and no trigonometric calls inside the m-loop: the phases
/// e^{imPt} come from a recurrence re-seeded from reduced angles every block.
class KernelTable {
public:
    explicit KernelTable(const KernelSpec& spec);

    const KernelSpec& spec() const { return spec_; }
    const ConvergenceFactor& factor() const { return factor_; }
    int harmonics() const { return spec_.harmonics; }
    std::int64_t terms() const { return terms_; }

    /// H_k at index k-1.
    const Eigen::VectorXd& denominators() const { return denominators_; }

    /// Tail sums at every t. With parity 1 each term picks up (-1)^m, which
    /// is what a shift by an odd multiple of π/P does to e^{imPt}.
    TailSums accumulate(std::span<const double> ts, int parity = 0) const;

    /// C_k, S_k at u from the sums accumulated at t (column `column`), where
    /// t - u is a lattice shift whose parity matches the accumulation.
    KernelValues assemble(const TailSums& sums, Eigen::Index column, double u) const;

    KernelValues evaluate(double t) const;
    std::vector<KernelValues> evaluate(std::span<const double> ts) const;

    /// Parity of shift·P/π; throws unless the shift is a multiple of π/P.
    int lattice_parity(double shift) const;

private:
    KernelSpec spec_;
    ConvergenceFactor factor_;
    std::int64_t terms_ = 0;
    double reflection_ = 1.0;
    Eigen::VectorXd leading_;      ///< σ(k)k^q
    Eigen::MatrixXd weights_;      ///< rows [0, K): plus branch, [K, 2K): reflected branch; column m-1
    Eigen::VectorXd denominators_;
};

} // namespace trigspline
