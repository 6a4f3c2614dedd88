#include "trigspline/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "trigspline/detail/angle.hpp"
#include "trigspline/error.hpp"

namespace trigspline {

using detail::derivative_phase;
using detail::reduced_angle;
using detail::unit;

namespace {

constexpr double degenerate_threshold = 1e-300;

double alternation(bool alternating, std::int64_t m) {
    return alternating && (m % 2 != 0) ? -1.0 : 1.0;
}

void require_order(int order, int derivative) {
    if (order < 1)
        throw InvalidArgument("spline order r must be >= 1, got " + std::to_string(order));
    if (derivative < 0 || derivative > order)
        throw InvalidArgument("derivative order q must satisfy 0 <= q <= r, got q=" +
                              std::to_string(derivative) + ", r=" + std::to_string(order));
}

void require_harmonic(int harmonic, int max_harmonic) {
    if (harmonic < 1 || harmonic > max_harmonic)
        throw InvalidArgument("harmonic " + std::to_string(harmonic) + " outside 1.." +
                              std::to_string(max_harmonic));
}

int full_harmonics(int count) {
    if (count < 3 || count % 2 == 0)
        throw InvalidArgument("full grid needs an odd N >= 3, got " + std::to_string(count));
    return (count - 1) / 2;
}

void require_indicator(int indicator) {
    if (indicator != 0 && indicator != 1)
        throw InvalidArgument("grid indicator must be 0 or 1");
}

double checked_denominator(double h, int harmonic) {
    if (!(std::abs(h) >= degenerate_threshold))
        throw DegenerateKernel("kernel denominator H vanishes for harmonic " + std::to_string(harmonic));
    return h;
}

} // namespace

// ---------------------------------------------------------------------------

double TailBound::operator()(std::int64_t terms) const {
    if (decay <= 1)
        return std::numeric_limits<double>::infinity();
    // Terms beyond M are bounded by c·(mP - K)^-p; the first one explicitly,
    // the rest by the integral from M+1.
    const double base = static_cast<double>(terms + 1) * period - max_harmonic;
    const double first = std::pow(base, -decay);
    const double rest = std::pow(base, 1 - decay) / (static_cast<double>(period) * (decay - 1));
    return 2.0 * constant * (first + rest) / scale;
}

TruncationPolicy TruncationPolicy::fixed(std::int64_t terms) {
    if (terms < 0)
        throw InvalidArgument("fixed truncation needs M >= 0");
    return TruncationPolicy(FixedTerms{terms});
}

TruncationPolicy TruncationPolicy::tolerance(double epsilon, std::int64_t max_terms) {
    if (!(epsilon > 0.0))
        throw InvalidArgument("tail tolerance must be positive");
    if (max_terms < 1)
        throw InvalidArgument("tail tolerance needs M_max >= 1");
    return TruncationPolicy(TailTolerance{epsilon, max_terms});
}

std::int64_t TruncationPolicy::resolve(const TailBound& bound) const {
    if (const auto* f = std::get_if<FixedTerms>(&mode_))
        return f->terms;
    const auto& tol = std::get<TailTolerance>(mode_);
    if (bound(tol.max_terms) > tol.epsilon)
        return tol.max_terms;
    std::int64_t lo = 1, hi = tol.max_terms;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (bound(mid) <= tol.epsilon)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

TruncationPolicy default_truncation(int order, int derivative, double epsilon) {
    if (derivative >= order)
        return TruncationPolicy::fixed(default_fixed_terms);
    return TruncationPolicy::tolerance(epsilon, default_max_terms);
}

// ---------------------------------------------------------------------------

SeriesLayout full_layout(int i1, int i2, int count) {
    require_indicator(i1);
    require_indicator(i2);
    full_harmonics(count);
    return {count, (i1 + i2) % 2 != 0, i1 % 2 != 0, true};
}

SeriesLayout even_layout(int indicator, int count) {
    require_indicator(indicator);
    if (count < 2)
        throw InvalidArgument("even grid needs N >= 2");
    if (indicator == 0)
        return {2 * (count - 1), false, false, false};
    return {2 * count, true, false, false};
}

SeriesLayout odd_layout(int indicator, int count) {
    require_indicator(indicator);
    if (count < 1)
        throw InvalidArgument("odd grid needs N >= 1");
    if (indicator == 0)
        return {2 * (count + 1), false, false, false};
    return {2 * count, false, true, false};
}

ConvergenceFactor layout_factor(const SeriesLayout& layout, FactorKind kind) {
    return ConvergenceFactor::make(kind, layout.period);
}

double reflection(const SeriesLayout& layout, const ConvergenceFactor& factor, int order) {
    return layout.factor_parity_reflection ? reflection_sign(factor, order) : 1.0;
}

double term_weight(const ConvergenceFactor& factor, int order, int derivative, std::int64_t harmonic) {
    double w = sigma(factor, order, harmonic);
    const double l = static_cast<double>(harmonic);
    for (int i = 0; i < derivative; ++i)
        w *= l;
    return w;
}

TailBound tail_bound(const SeriesLayout& layout, const ConvergenceFactor& factor, int order,
                     int derivative, int max_harmonic) {
    return {layout.period, max_harmonic, decay_constant(factor, order), 1 + order - derivative};
}

// ---------------------------------------------------------------------------

double denominator_sum(const SeriesLayout& layout, FactorKind kind, int order, int harmonic,
                       std::int64_t terms) {
    require_order(order, 0);
    const ConvergenceFactor factor = layout_factor(layout, kind);
    const double rho = reflection(layout, factor, order);
    const std::int64_t p = layout.period;
    // Smallest terms first.
    double tail = 0.0;
    for (std::int64_t m = terms; m >= 1; --m) {
        const double pair = sigma(factor, order, m * p + harmonic) + rho * sigma(factor, order, m * p - harmonic);
        tail += alternation(layout.alternating_denominator, m) * pair;
    }
    return checked_denominator(sigma(factor, order, harmonic) + tail, harmonic);
}

KernelPair numerator_sums(const SeriesLayout& layout, FactorKind kind, int order, int derivative,
                          int harmonic, double t, std::int64_t terms) {
    require_order(order, derivative);
    const ConvergenceFactor factor = layout_factor(layout, kind);
    const double rho = reflection(layout, factor, order);
    const std::int64_t p = layout.period;
    const std::complex<double> phase = derivative_phase(derivative);

    double c = 0.0, s = 0.0;
    for (std::int64_t m = terms; m >= 1; --m) {
        const std::int64_t up = m * p + harmonic;
        const std::int64_t down = m * p - harmonic;
        const double sign = alternation(layout.alternating_numerator, m);
        const std::complex<double> zp = phase * unit(reduced_angle(static_cast<double>(up), t));
        const std::complex<double> zm = phase * unit(reduced_angle(static_cast<double>(down), t));
        const double wp = term_weight(factor, order, derivative, up);
        const double wm = rho * term_weight(factor, order, derivative, down);
        c += sign * (wp * zp.real() + wm * zm.real());
        s += sign * (wp * zp.imag() - wm * zm.imag());
    }
    const std::complex<double> z0 = phase * unit(reduced_angle(harmonic, t));
    const double w0 = term_weight(factor, order, derivative, harmonic);
    return {w0 * z0.real() + c, w0 * z0.imag() + s};
}

namespace {

std::int64_t resolve_terms(const SeriesLayout& layout, FactorKind kind, int order, int derivative,
                           int harmonic, const TruncationPolicy& truncation) {
    const ConvergenceFactor factor = layout_factor(layout, kind);
    return truncation.resolve(tail_bound(layout, factor, order, derivative, harmonic));
}

double denominator_for(const SeriesLayout& layout, FactorKind kind, int order, int harmonic,
                       const TruncationPolicy& truncation) {
    return denominator_sum(layout, kind, order, harmonic,
                           resolve_terms(layout, kind, order, 0, harmonic, truncation));
}

KernelPair numerator_for(const SeriesLayout& layout, FactorKind kind, int order, int derivative,
                         int harmonic, double t, const TruncationPolicy& truncation) {
    return numerator_sums(layout, kind, order, derivative, harmonic, t,
                          resolve_terms(layout, kind, order, derivative, harmonic, truncation));
}

} // namespace

double h_full(int i1, int i2, FactorKind kind, int order, int harmonic, int count,
              const TruncationPolicy& truncation) {
    require_harmonic(harmonic, full_harmonics(count));
    return denominator_for(full_layout(i1, i2, count), kind, order, harmonic, truncation);
}

double c_full(int i1, FactorKind kind, int order, int derivative, int harmonic, int count, double t,
              const TruncationPolicy& truncation) {
    require_harmonic(harmonic, full_harmonics(count));
    return numerator_for(full_layout(i1, 0, count), kind, order, derivative, harmonic, t, truncation).c;
}

double s_full(int i1, FactorKind kind, int order, int derivative, int harmonic, int count, double t,
              const TruncationPolicy& truncation) {
    require_harmonic(harmonic, full_harmonics(count));
    return numerator_for(full_layout(i1, 0, count), kind, order, derivative, harmonic, t, truncation).s;
}

double h_even(int indicator, FactorKind kind, int order, int harmonic, int count,
              const TruncationPolicy& truncation) {
    const SeriesLayout layout = even_layout(indicator, count);
    require_harmonic(harmonic, count - 1);
    return denominator_for(layout, kind, order, harmonic, truncation);
}

double c_even(int indicator, FactorKind kind, int order, int derivative, int harmonic, int count,
              double t, const TruncationPolicy& truncation) {
    const SeriesLayout layout = even_layout(indicator, count);
    require_harmonic(harmonic, count - 1);
    return numerator_for(layout, kind, order, derivative, harmonic, t, truncation).c;
}

double h_odd(int indicator, FactorKind kind, int order, int harmonic, int count,
             const TruncationPolicy& truncation) {
    const SeriesLayout layout = odd_layout(indicator, count);
    require_harmonic(harmonic, count);
    return denominator_for(layout, kind, order, harmonic, truncation);
}

double s_odd(int indicator, FactorKind kind, int order, int derivative, int harmonic, int count,
             double t, const TruncationPolicy& truncation) {
    const SeriesLayout layout = odd_layout(indicator, count);
    require_harmonic(harmonic, count);
    return numerator_for(layout, kind, order, derivative, harmonic, t, truncation).s;
}

// ---------------------------------------------------------------------------

KernelTable::KernelTable(const KernelSpec& spec)
    : spec_(spec), factor_(layout_factor(spec.layout, spec.factor)) {
    require_order(spec.order, spec.derivative);
    const int K = spec.harmonics;
    const std::int64_t p = spec.layout.period;
    if (K < 1 || K > p / 2 + (p % 2))
        throw InvalidArgument("kernel table harmonics must lie in 1..P/2");
    TailBound bound = tail_bound(spec.layout, factor_, spec.order, spec.derivative, K);
    bound.scale = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= K; ++k)
        bound.scale = std::min(bound.scale, std::abs(sigma(factor_, spec.order, k)));
    terms_ = spec.truncation.resolve(bound);
    reflection_ = reflection(spec.layout, factor_, spec.order);

    leading_.resize(K);
    weights_.resize(2 * K, terms_);
    denominators_.resize(K);
    for (int k = 1; k <= K; ++k) {
        leading_(k - 1) = term_weight(factor_, spec.order, spec.derivative, k);
        double tail = 0.0;
        for (std::int64_t m = terms_; m >= 1; --m) {
            const std::int64_t up = m * p + k;
            const std::int64_t down = m * p - k;
            const double sp = sigma(factor_, spec.order, up);
            const double sm = reflection_ * sigma(factor_, spec.order, down);
            tail += alternation(spec.layout.alternating_denominator, m) * (sp + sm);
            double ap = sp, am = sm;
            for (int i = 0; i < spec.derivative; ++i) {
                ap *= static_cast<double>(up);
                am *= static_cast<double>(down);
            }
            weights_(k - 1, m - 1) = ap;
            weights_(K + k - 1, m - 1) = am;
        }
        denominators_(k - 1) = checked_denominator(sigma(factor_, spec.order, k) + tail, k);
    }
}

TailSums KernelTable::accumulate(std::span<const double> ts, int parity) const {
    const Eigen::Index K = spec_.harmonics;
    const Eigen::Index T = static_cast<Eigen::Index>(ts.size());
    const double period = spec_.layout.period;
    const bool alternate = spec_.layout.alternating_numerator != (parity % 2 != 0);

    // Columns [0, T): cosine parts, [T, 2T): sine parts of e^{imPt}.
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(2 * K, 2 * T);
    constexpr Eigen::Index block = 256;
    Eigen::MatrixXd phases(block, 2 * T);
    std::vector<std::complex<double>> steps(ts.size());
    for (Eigen::Index i = 0; i < T; ++i)
        steps[i] = unit(reduced_angle(period, ts[i]));

    for (std::int64_t m0 = 1; m0 <= terms_; m0 += block) {
        const Eigen::Index len = static_cast<Eigen::Index>(std::min<std::int64_t>(block, terms_ - m0 + 1));
        for (Eigen::Index i = 0; i < T; ++i) {
            std::complex<double> z = unit(reduced_angle(static_cast<double>(m0) * period, ts[i]));
            for (Eigen::Index j = 0; j < len; ++j) {
                const double sign = alternate && ((m0 + j) % 2 != 0) ? -1.0 : 1.0;
                phases(j, i) = sign * z.real();
                phases(j, T + i) = sign * z.imag();
                z *= steps[i];
            }
        }
        acc.noalias() += weights_.middleCols(m0 - 1, len) * phases.topRows(len);
    }

    TailSums sums;
    sums.plus.resize(K, T);
    sums.minus.resize(K, T);
    sums.plus.real() = acc.topLeftCorner(K, T);
    sums.plus.imag() = acc.topRightCorner(K, T);
    sums.minus.real() = acc.bottomLeftCorner(K, T);
    sums.minus.imag() = acc.bottomRightCorner(K, T);
    return sums;
}

KernelValues KernelTable::assemble(const TailSums& sums, Eigen::Index column, double u) const {
    const int K = spec_.harmonics;
    const std::complex<double> phase = derivative_phase(spec_.derivative);
    KernelValues out{Eigen::VectorXd(K), Eigen::VectorXd(K)};
    for (int k = 1; k <= K; ++k) {
        const std::complex<double> e = unit(reduced_angle(k, u));
        const std::complex<double> head = leading_(k - 1) * e + e * sums.plus(k - 1, column);
        const std::complex<double> reflected = std::conj(e) * sums.minus(k - 1, column);
        out.c(k - 1) = std::real(phase * (head + reflected));
        out.s(k - 1) = std::imag(phase * (head - reflected));
    }
    return out;
}

KernelValues KernelTable::evaluate(double t) const {
    const double ts[1] = {t};
    return assemble(accumulate(ts), 0, t);
}

std::vector<KernelValues> KernelTable::evaluate(std::span<const double> ts) const {
    const TailSums sums = accumulate(ts);
    std::vector<KernelValues> out;
    out.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out.push_back(assemble(sums, static_cast<Eigen::Index>(i), ts[i]));
    return out;
}

int KernelTable::lattice_parity(double shift) const {
    const double steps = shift * spec_.layout.period / std::numbers::pi;
    const double nearest = std::nearbyint(steps);
    if (std::abs(steps - nearest) > 1e-9 * std::max(1.0, std::abs(steps)))
        throw InvalidArgument("shift is not a multiple of π/P for this kernel");
    const auto n = static_cast<long long>(nearest);
    return static_cast<int>(((n % 2) + 2) % 2);
}

} // namespace trigspline
