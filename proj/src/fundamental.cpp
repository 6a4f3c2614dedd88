#include "trigspline/fundamental.hpp"

#include <cmath>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

FundamentalBasis::FundamentalBasis(const SplineConfig& cfg)
    : cfg_(cfg), table_(kernel_spec(cfg)), nodes_(trigspline::nodes(interpolation_grid(cfg))) {
    const int count = cfg.count;
    const int K = table_.harmonics();
    const Eigen::VectorXd& h = table_.denominators();
    const double iq = constant_term(cfg.derivative);

    constant_.setZero(count);
    weights_.setZero(count, K);
    switch (cfg.family) {
    case SplineFamily::Full:
        constant_.setConstant(iq / count);
        weights_ = (2.0 / count) * h.cwiseInverse().transpose().replicate(count, 1);
        break;
    case SplineFamily::Even: {
        const double scale = cfg.i2 == 0 ? 2.0 / (count - 1) : 2.0 / count;
        for (int k = 1; k <= count; ++k) {
            double c = scale;
            if (cfg.i2 == 0 && (k == 1 || k == count))
                c *= 0.5;
            constant_(k - 1) = 0.5 * c * iq;
            for (int j = 1; j <= K; ++j) {
                const double v = cfg.i2 == 0 && j == count - 1 ? 0.5 : 1.0;
                weights_(k - 1, j - 1) = c * v * std::cos(j * nodes_(k - 1)) / h(j - 1);
            }
        }
        break;
    }
    case SplineFamily::Odd: {
        const double scale = cfg.i2 == 0 ? 2.0 / (count + 1) : 2.0 / count;
        for (int k = 1; k <= count; ++k)
            for (int j = 1; j <= K; ++j) {
                const double v = cfg.i2 == 1 && j == count ? 0.5 : 1.0;
                weights_(k - 1, j - 1) = scale * v * std::sin(j * nodes_(k - 1)) / h(j - 1);
            }
        break;
    }
    }
}

Eigen::VectorXd FundamentalBasis::row(const TailSums& sums, Eigen::Index column, double t) const {
    const int count = cfg_.count;
    if (cfg_.family == SplineFamily::Full) {
        // The shift by x_k is applied to the harmonic phase only; the tail
        // sums stay at t, which carries the lattice sign of x_k^(1).
        Eigen::VectorXd out(count);
        for (int k = 0; k < count; ++k)
            out(k) = constant_(k) + weights_.row(k).dot(table_.assemble(sums, column, t - nodes_(k)).c);
        return out;
    }
    const KernelValues kv = table_.assemble(sums, column, t);
    const Eigen::VectorXd& series = cfg_.family == SplineFamily::Even ? kv.c : kv.s;
    return constant_ + weights_ * series;
}

double FundamentalBasis::operator()(int k, double t) const {
    if (k < 1 || k > cfg_.count)
        throw InvalidArgument("fundamental index " + std::to_string(k) + " outside 1.." +
                              std::to_string(cfg_.count));
    return values(t)(k - 1);
}

Eigen::VectorXd FundamentalBasis::values(double t) const {
    const double ts[1] = {t};
    return row(table_.accumulate(ts), 0, t);
}

Eigen::MatrixXd FundamentalBasis::values(std::span<const double> ts) const {
    const TailSums sums = table_.accumulate(ts);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(ts.size()), cfg_.count);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        out.row(i) = row(sums, i, ts[i]).transpose();
    return out;
}

namespace {

double fundamental_of(const SplineConfig& cfg, SplineFamily family, int k, double t) {
    if (cfg.family != family)
        throw InvalidArgument("spline config is " + std::string(to_string(cfg.family)) + ", expected " +
                              std::string(to_string(family)));
    return FundamentalBasis(cfg)(k, t);
}

void require_grid(const SplineConfig& cfg, const Samples& samples) {
    if (!(samples.grid == interpolation_grid(cfg)))
        throw InvalidArgument("samples do not live on the spline's interpolation grid");
    if (samples.values.size() != cfg.count)
        throw InvalidArgument("sample count does not match the grid");
}

} // namespace

double fundamental_full(const SplineConfig& cfg, int k, double t) {
    return fundamental_of(cfg, SplineFamily::Full, k, t);
}

double fundamental_even(const SplineConfig& cfg, int k, double t) {
    return fundamental_of(cfg, SplineFamily::Even, k, t);
}

double fundamental_odd(const SplineConfig& cfg, int k, double t) {
    return fundamental_of(cfg, SplineFamily::Odd, k, t);
}

double eval_via_fundamentals(const SplineConfig& cfg, const Samples& samples, double t) {
    require_grid(cfg, samples);
    return FundamentalBasis(cfg).values(t).dot(samples.values);
}

Eigen::VectorXd eval_via_fundamentals(const SplineConfig& cfg, const Samples& samples,
                                      std::span<const double> ts) {
    require_grid(cfg, samples);
    return FundamentalBasis(cfg).values(ts) * samples.values;
}

} // namespace trigspline
