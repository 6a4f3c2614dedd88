#include "checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "trigspline/bsplines.hpp"
#include "trigspline/discrete_fourier.hpp"
#include "trigspline/fundamental.hpp"
#include "trigspline/kernels.hpp"

namespace trigspline::oracle {

namespace {

constexpr double pi = std::numbers::pi;
constexpr FactorKind both_factors[] = {FactorKind::Power, FactorKind::Riemann};

struct Tally {
    int total = 0;
    int failed = 0;
    double worst = 0.0;
    std::string first_failure;

    void record(bool ok, double error, const std::string& what) {
        ++total;
        worst = std::max(worst, error);
        if (!ok && failed++ == 0)
            first_failure = what;
    }

    void finish(CheckResult& out, const std::string& measure) const {
        out.passed = failed == 0 && total > 0;
        std::ostringstream s;
        s.precision(3);
        s << (total - failed) << "/" << total << " ok, worst " << measure << " " << worst;
        if (failed > 0)
            s << "; first failure: " << first_failure;
        out.detail = s.str();
    }
};

std::string describe(const SplineConfig& cfg) {
    std::ostringstream s;
    s << to_string(cfg.family) << "(" << cfg.i1 << "," << cfg.i2 << ") " << to_string(cfg.factor)
      << " r=" << cfg.order << " q=" << cfg.derivative << " N=" << cfg.count;
    return s.str();
}

Eigen::VectorXd random_values(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd v(count);
    for (int i = 0; i < count; ++i)
        v(i) = dist(rng);
    return v;
}

std::vector<double> dense_points(double length, int count) {
    std::vector<double> t(count);
    for (int i = 0; i < count; ++i)
        t[i] = length * (i + 0.5) / count;
    return t;
}

Samples random_samples(std::mt19937_64& rng, const SplineConfig& cfg) {
    return {interpolation_grid(cfg), random_values(rng, cfg.count)};
}

// ---------------------------------------------------------------------------

void determinant_table(CheckResult& out, const CheckOptions&) {
    const TruncationPolicy tol = TruncationPolicy::tolerance(1e-12);
    Tally tally;
    for (const DeterminantCell& cell : reference_determinants()) {
        BSplineKind kind = parse_bspline_kind(cell.kind);
        kind.order = cell.order;
        kind.count = 9;
        kind.truncation = tol;
        const double det = std::abs(collocation_matrix(kind, 0).determinant);
        const double err = cell.expected > 1e-6 ? std::abs(det - cell.expected) / cell.expected
                                                : std::abs(det - cell.expected);
        std::ostringstream what;
        what << cell.kind << " r=" << cell.order << " |det|=" << det << " expected " << cell.expected;
        tally.record(determinant_matches(det, cell.expected), err, what.str());
    }
    tally.finish(out, "deviation");
}

void interpolation(CheckResult& out, const CheckOptions& options) {
    std::mt19937_64 rng(options.seed + 2);
    Tally tally;
    for (int count : {7, 9})
        for (FactorKind factor : both_factors)
            for (int r = 1; r <= 5; ++r)
                for (const SplineConfig& cfg : supported_configs(factor, r, 0, count, default_truncation(r, 0))) {
                    const Samples s = random_samples(rng, cfg);
                    const Eigen::VectorXd x = nodes(s.grid);
                    const Eigen::VectorXd y = interpolate(cfg, s)(std::span<const double>(x.data(), x.size()));
                    const double residual = (y - s.values).cwiseAbs().maxCoeff();
                    const double bound = 1e-7 * (1.0 + s.values.cwiseAbs().maxCoeff());
                    tally.record(residual < bound, residual, describe(cfg));
                }
    tally.finish(out, "residual");
}

void cross_representation(CheckResult& out, const CheckOptions& options) {
    std::mt19937_64 rng(options.seed + 3);
    Tally tally;
    const int count = 9;
    for (FactorKind factor : both_factors)
        for (int r = 1; r <= 3; ++r) {
            const TruncationPolicy trunc = default_truncation(r, 0);
            for (const SplineConfig& cfg : supported_configs(factor, r, 0, count, trunc)) {
                const Samples s = random_samples(rng, cfg);
                const std::vector<double> t = dense_points(domain_length(s.grid.family), 500);
                const Eigen::VectorXd coefficient_form = interpolate(cfg, s)(t);
                const Eigen::VectorXd fundamental_form = eval_via_fundamentals(cfg, s, t);
                const double diff = (coefficient_form - fundamental_form).cwiseAbs().maxCoeff();
                tally.record(diff < 1e-6, diff, "fundamental " + describe(cfg));
            }
            for (int indicator : {0, 1}) {
                SplineConfig cfg{SplineFamily::Full, 0, indicator, factor, r, 0, count, trunc};
                const Samples s = random_samples(rng, cfg);
                const std::vector<double> t = dense_points(2.0 * pi, 500);
                const Eigen::VectorXd coefficient_form = interpolate(cfg, s)(t);
                for (BSplineKind kind : all_bspline_kinds(r, count, trunc)) {
                    if (kind.factor != factor)
                        continue;
                    const Eigen::VectorXd bspline_form = bspline_interpolate(kind, s)(t);
                    const double diff = (coefficient_form - bspline_form).cwiseAbs().maxCoeff();
                    tally.record(diff < 1e-6, diff, name(kind) + " on grid " + std::to_string(indicator) +
                                                        " r=" + std::to_string(r));
                }
            }
        }
    tally.finish(out, "max abs diff");
}

void polynomial_coincidence(CheckResult& out, const CheckOptions& options) {
    std::mt19937_64 rng(options.seed + 4);
    Tally tally;
    const SplineConfig cfg{SplineFamily::Full, 0, 0, FactorKind::Riemann, 3, 0, 9, default_truncation(3, 0)};
    const std::vector<double> t = dense_points(2.0 * pi, 1000);
    for (int set = 0; set < 5; ++set) {
        const Samples s = random_samples(rng, cfg);
        const Eigen::VectorXd trig = interpolate(cfg, s)(t);
        const PeriodicCubicSpline cubic(s.grid, s.values);
        double diff = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
            diff = std::max(diff, std::abs(trig(static_cast<Eigen::Index>(i)) - cubic(t[i])));
        tally.record(diff < 1e-6, diff, "sample set " + std::to_string(set));
    }
    tally.finish(out, "max abs error");
}

void unit_integral(CheckResult& out, const CheckOptions& options) {
    // The r = 1 kinds are only continuous; rounding the interval count up to
    // a multiple of the knot count puts every kink on a quadrature node.
    const int count = 9;
    OracleConfig quadrature = options.oracle;
    const int step = 2 * count;
    quadrature.quadrature_intervals = (options.oracle.quadrature_intervals + step - 1) / step * step;
    Tally tally;
    for (int r = 1; r <= 5; ++r)
        for (const BSplineKind& kind : all_bspline_kinds(r, count, default_truncation(r, 0))) {
            const BSplineBasis basis(kind);
            const double integral = quadrature_unit_integral(
                [&](std::span<const double> t) -> Eigen::VectorXd { return basis.values(t).col(0); },
                quadrature);
            const double err = std::abs(integral - 1.0);
            tally.record(err < 1e-6, err, name(kind) + " r=" + std::to_string(r));
        }
    tally.finish(out, "|integral - 1|");
}

void delta_and_gram(CheckResult& out, const CheckOptions&) {
    Tally tally;
    for (int count : {7, 9})
        for (FactorKind factor : both_factors)
            for (int r = 1; r <= 5; ++r)
                for (const SplineConfig& cfg : supported_configs(factor, r, 0, count, default_truncation(r, 0))) {
                    const FundamentalBasis basis(cfg);
                    const Eigen::VectorXd& x = basis.nodes();
                    // Row j holds φ_k(x_j).
                    const Eigen::MatrixXd phi = basis.values(std::span<const double>(x.data(), x.size()));
                    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(count, count);
                    const double delta = (phi - identity).cwiseAbs().maxCoeff();
                    const double gram = (phi.transpose() * phi - identity).cwiseAbs().maxCoeff();
                    tally.record(delta < 1e-8 && gram < 1e-8, std::max(delta, gram), describe(cfg));
                }
    tally.finish(out, "deviation");
}

void boundary_zeros(CheckResult& out, const CheckOptions& options) {
    std::mt19937_64 rng(options.seed + 7);
    Tally tally;
    const double ends[] = {0.0, pi};
    for (int count : {7, 9})
        for (FactorKind factor : both_factors)
            for (int r = 1; r <= 5; ++r)
                for (int q = 0; q < r; q += 2)
                    for (int i : {0, 1}) {
                        const SplineConfig cfg{SplineFamily::Odd, i, i, factor, r, q, count, default_truncation(r, q)};
                        const Samples s = random_samples(rng, cfg);
                        const Eigen::VectorXd spline = interpolate(cfg, s)(ends);
                        const Eigen::MatrixXd phi = FundamentalBasis(cfg).values(ends);
                        const double worst = std::max(spline.cwiseAbs().maxCoeff(), phi.cwiseAbs().maxCoeff());
                        tally.record(worst < 1e-10, worst, describe(cfg));
                    }
    tally.finish(out, "|value|");
}

void derivative_consistency(CheckResult& out, const CheckOptions& options) {
    std::mt19937_64 rng(options.seed + 8);
    Tally tally;
    const double h = 1e-5;
    for (FactorKind factor : both_factors)
        for (int r = 2; r <= 5; ++r)
            for (int q = 0; q <= r - 2; ++q)
                for (const SplineConfig& base : supported_configs(factor, r, q, 9, default_truncation(r, q))) {
                    const Samples s = random_samples(rng, base);
                    SplineConfig next = with_derivative(base, q + 1);
                    next.truncation = default_truncation(r, q + 1);
                    const TrigCoefficients coeffs = coefficients(s);
                    const TrigSpline f(base, coeffs);
                    const TrigSpline df(next, coeffs);

                    std::uniform_real_distribution<double> dist(0.0, domain_length(s.grid.family));
                    std::vector<double> t(20), shifted;
                    for (double& v : t)
                        v = dist(rng);
                    for (double v : t) {
                        shifted.push_back(v + h);
                        shifted.push_back(v - h);
                    }
                    const Eigen::VectorXd fv = f(shifted);
                    const Eigen::VectorXd dv = df(t);
                    double worst = 0.0;
                    for (std::size_t i = 0; i < t.size(); ++i) {
                        const double fd = (fv(2 * i) - fv(2 * i + 1)) / (2 * h);
                        worst = std::max(worst, std::abs(fd - dv(static_cast<Eigen::Index>(i))));
                    }
                    tally.record(worst < 1e-5, worst, describe(base));
                }
    tally.finish(out, "error");
}

void kernel_oracle(CheckResult& out, const CheckOptions& options) {
    std::mt19937_64 rng(options.seed + 9);
    Tally tally;
    constexpr SeriesId ids[] = {SeriesId::HFull, SeriesId::CFull, SeriesId::SFull, SeriesId::HEven,
                                SeriesId::CEven, SeriesId::HOdd,  SeriesId::SOdd};
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int n = 0; n < 200; ++n) {
        const SeriesId id = ids[pick(0, 6)];
        SeriesParams p;
        p.factor = both_factors[pick(0, 1)];
        p.order = pick(1, 5);
        p.derivative = pick(0, p.order - 1);
        p.i1 = pick(0, 1);
        p.i2 = pick(0, 1);
        const double t = std::uniform_real_distribution<double>(0.0, 2.0 * pi)(rng);
        const TruncationPolicy trunc = default_truncation(p.order, p.derivative);

        double main = 0.0;
        SeriesLayout layout;
        int q = p.derivative;
        switch (id) {
        case SeriesId::HFull:
        case SeriesId::CFull:
        case SeriesId::SFull:
            p.count = 2 * pick(1, 8) + 1;
            p.harmonic = pick(1, (p.count - 1) / 2);
            if (id == SeriesId::HFull) {
                main = h_full(p.i1, p.i2, p.factor, p.order, p.harmonic, p.count, trunc);
                layout = full_layout(p.i1, p.i2, p.count);
                q = 0;
            } else if (id == SeriesId::CFull) {
                main = c_full(p.i1, p.factor, p.order, p.derivative, p.harmonic, p.count, t, trunc);
                layout = full_layout(p.i1, 0, p.count);
            } else {
                main = s_full(p.i1, p.factor, p.order, p.derivative, p.harmonic, p.count, t, trunc);
                layout = full_layout(p.i1, 0, p.count);
            }
            break;
        case SeriesId::HEven:
        case SeriesId::CEven:
            p.count = pick(3, 16);
            p.harmonic = pick(1, p.count - 1);
            layout = even_layout(p.i2, p.count);
            if (id == SeriesId::HEven) {
                main = h_even(p.i2, p.factor, p.order, p.harmonic, p.count, trunc);
                q = 0;
            } else {
                main = c_even(p.i2, p.factor, p.order, p.derivative, p.harmonic, p.count, t, trunc);
            }
            break;
        case SeriesId::HOdd:
        case SeriesId::SOdd:
            p.count = pick(3, 16);
            p.harmonic = pick(1, p.count);
            layout = odd_layout(p.i2, p.count);
            if (id == SeriesId::HOdd) {
                main = h_odd(p.i2, p.factor, p.order, p.harmonic, p.count, trunc);
                q = 0;
            } else {
                main = s_odd(p.i2, p.factor, p.order, p.derivative, p.harmonic, p.count, t, trunc);
            }
            break;
        }
        const std::int64_t terms = trunc.resolve(
            tail_bound(layout, layout_factor(layout, p.factor), p.order, q, p.harmonic));
        const double reference = brute_series(id, p, t, options.oracle);
        const double tolerance = std::max(1e-10, analytic_tail_bound(id, p, terms));
        const double diff = std::abs(main - reference);

        std::ostringstream what;
        what << to_string(id) << " " << to_string(p.factor) << " r=" << p.order << " q=" << p.derivative
             << " k=" << p.harmonic << " N=" << p.count << " diff " << diff << " > " << tolerance;
        tally.record(diff <= tolerance, diff, what.str());
    }
    tally.finish(out, "abs diff");
}

struct Entry {
    const char* name;
    void (*run)(CheckResult&, const CheckOptions&);
};

constexpr Entry entries[check_count] = {
    {"determinant table", determinant_table},
    {"interpolation property", interpolation},
    {"cross-representation equivalence", cross_representation},
    {"periodic cubic coincidence", polynomial_coincidence},
    {"B-spline unit integral", unit_integral},
    {"fundamental delta and orthogonality", delta_and_gram},
    {"odd boundary zeros", boundary_zeros},
    {"derivative consistency", derivative_consistency},
    {"kernel oracle agreement", kernel_oracle},
};

} // namespace

const std::vector<DeterminantCell>& reference_determinants() {
    static const std::vector<DeterminantCell> cells = [] {
        const int orders[] = {1, 2, 3, 4, 5, 11};
        const std::pair<const char*, std::array<double, 6>> rows[] = {
            {"BR", {25.1548, 1.46797, 0.3538, 0.0770, 0.0189, 5.893e-6}},
            {"BC", {9.88e-4, 2.44e-8, 5.5e-10, 1.7e-13, 1.1e-15, 0.0}},
            {"BR0", {6.4396e3, 105.3279, 512.0283, 103.5795, 246.0022, 117.3284}},
            {"BC0", {1.0271e6, 1.1347e3, 8.1665e4, 3.7613e3, 3.9236e4, 1.8713e4}},
            {"BR1", {434.9783, 837.8267, 116.5782, 324.7136, 101.8178, 94.1006}},
            {"BC1", {6.9376e4, 9.0262e3, 1.8593e4, 1.1791e4, 1.6239e4, 1.5008e4}},
        };
        std::vector<DeterminantCell> out;
        for (const auto& [kind, values] : rows)
            for (int i = 0; i < 6; ++i)
                out.push_back({kind, orders[i], values[i]});
        return out;
    }();
    return cells;
}

bool determinant_matches(double computed, double expected) {
    if (expected == 0.0)
        return std::abs(computed) < 1e-12;
    if (expected <= 1e-6)
        return std::abs(computed - expected) <= 1e-6;
    return std::abs(computed - expected) <= 0.01 * expected;
}

std::vector<SplineConfig> supported_configs(FactorKind factor, int order, int derivative, int count,
                                            const TruncationPolicy& truncation) {
    std::vector<SplineConfig> out;
    for (int i1 : {0, 1})
        for (int i2 : {0, 1})
            out.push_back({SplineFamily::Full, i1, i2, factor, order, derivative, count, truncation});
    for (int i2 : {0, 1})
        out.push_back({SplineFamily::Even, 0, i2, factor, order, derivative, count, truncation});
    for (int i : {0, 1})
        out.push_back({SplineFamily::Odd, i, i, factor, order, derivative, count, truncation});
    return out;
}

CheckResult run_check(int id, const CheckOptions& options) {
    if (id < 1 || id > check_count)
        throw std::out_of_range("no check " + std::to_string(id));
    const Entry& entry = entries[id - 1];
    CheckResult out;
    out.id = id;
    out.name = entry.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        entry.run(out, options);
    } catch (const std::exception& e) {
        out.passed = false;
        out.detail = std::string("error: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<CheckResult> run_checks(const std::vector<int>& ids, const CheckOptions& options) {
    std::vector<CheckResult> out;
    for (int id : ids)
        out.push_back(run_check(id, options));
    return out;
}

} // namespace trigspline::oracle
