#include "trigspline/bsplines.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "trigspline/error.hpp"
#include "trigspline/grids.hpp"
#include "trigspline/splines.hpp"

namespace trigspline {

namespace {

KernelSpec numerator_spec(const BSplineKind& kind) {
    return {full_layout(0, 0, kind.count), kind.factor, kind.order, kind.derivative, (kind.count - 1) / 2,
            kind.truncation};
}

} // namespace

std::string name(const BSplineKind& kind) {
    std::string out = kind.factor == FactorKind::Power ? "BC" : "BR";
    if (kind.normalization == BSplineNormalization::SecondKindSame)
        out += '0';
    else if (kind.normalization == BSplineNormalization::SecondKindCross)
        out += '1';
    return out;
}

BSplineKind parse_bspline_kind(std::string_view text) {
    BSplineKind kind;
    if (text.size() < 2 || text.size() > 3 || text[0] != 'B' || (text[1] != 'C' && text[1] != 'R'))
        throw InvalidArgument("unknown B-spline kind '" + std::string(text) + "'");
    kind.factor = text[1] == 'C' ? FactorKind::Power : FactorKind::Riemann;
    if (text.size() == 3) {
        if (text[2] == '0')
            kind.normalization = BSplineNormalization::SecondKindSame;
        else if (text[2] == '1')
            kind.normalization = BSplineNormalization::SecondKindCross;
        else
            throw InvalidArgument("unknown B-spline kind '" + std::string(text) + "'");
    }
    return kind;
}

std::vector<BSplineKind> all_bspline_kinds(int order, int count, const TruncationPolicy& truncation) {
    std::vector<BSplineKind> out;
    for (const char* label : {"BR", "BC", "BR0", "BC0", "BR1", "BC1"}) {
        BSplineKind kind = parse_bspline_kind(label);
        kind.order = order;
        kind.count = count;
        kind.truncation = truncation;
        out.push_back(kind);
    }
    return out;
}

void validate(const BSplineKind& kind) {
    validate(GridSpec{GridFamily::Full, 0, kind.count});
    if (kind.order < 1)
        throw InvalidArgument("B-spline order r must be >= 1");
    if (kind.derivative < 0 || kind.derivative > kind.order)
        throw InvalidArgument("derivative order q must satisfy 0 <= q <= r");
}

Eigen::VectorXd bspline_normalizer(const BSplineKind& kind) {
    validate(kind);
    const int n = (kind.count - 1) / 2;
    if (kind.normalization == BSplineNormalization::FirstKind)
        return Eigen::VectorXd::Ones(n);

    const bool cross = kind.normalization == BSplineNormalization::SecondKindCross;
    const int order = kind.order + 1;
    const SeriesLayout layout = full_layout(cross ? 1 : 0, 0, kind.count);
    const ConvergenceFactor factor = layout_factor(layout, kind.factor);
    const std::int64_t terms = kind.truncation.resolve(tail_bound(layout, factor, order, 0, n));
    const double rho = order % 2 == 0 ? -1.0 : 1.0;
    const std::int64_t p = kind.count;

    Eigen::VectorXd out(n);
    for (int k = 1; k <= n; ++k) {
        double tail = 0.0;
        for (std::int64_t m = terms; m >= 1; --m) {
            const double pair = std::abs(sigma(factor, order, m * p + k)) + rho * std::abs(sigma(factor, order, m * p - k));
            tail += cross && m % 2 != 0 ? -pair : pair;
        }
        out(k - 1) = std::abs(sigma(factor, order, k)) + tail;
        if (!(std::abs(out(k - 1)) >= 1e-300))
            throw DegenerateKernel("B-spline normalizer vanishes for harmonic " + std::to_string(k));
    }
    return out;
}

// ---------------------------------------------------------------------------

BSplineBasis::BSplineBasis(const BSplineKind& kind)
    : kind_(kind), table_((validate(kind), numerator_spec(kind))), normalizer_(bspline_normalizer(kind)),
      centers_(nodes(GridSpec{GridFamily::Full, 0, kind.count})) {}

double BSplineBasis::combine(const KernelValues& kv) const {
    return (0.5 * constant_term(kind_.derivative) + kv.c.cwiseQuotient(normalizer_).sum()) / std::numbers::pi;
}

double BSplineBasis::operator()(int j, double t) const {
    if (j < 1 || j > kind_.count)
        throw InvalidArgument("B-spline index " + std::to_string(j) + " outside 1.." + std::to_string(kind_.count));
    const double ts[1] = {t};
    return combine(table_.assemble(table_.accumulate(ts), 0, t - centers_(j - 1)));
}

Eigen::VectorXd BSplineBasis::values(double t) const {
    const double ts[1] = {t};
    return values(std::span<const double>(ts)).row(0).transpose();
}

Eigen::MatrixXd BSplineBasis::values(std::span<const double> ts) const {
    // Knots sit a multiple of 2π/N apart, so e^{imNt} is the same at every
    // t - x_j and one accumulation serves all translates.
    const TailSums sums = table_.accumulate(ts);
    Eigen::MatrixXd out(static_cast<Eigen::Index>(ts.size()), kind_.count);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (int j = 0; j < kind_.count; ++j)
            out(i, j) = combine(table_.assemble(sums, i, ts[i] - centers_(j)));
    return out;
}

double bspline_eval(const BSplineKind& kind, int j, double t) {
    return BSplineBasis(kind)(j, t);
}

// ---------------------------------------------------------------------------

bool CollocationSystem::singular(double floor) const {
    const double scale = matrix.cwiseAbs().maxCoeff();
    return !(std::abs(determinant) >= floor * std::pow(scale, static_cast<double>(matrix.rows())));
}

CollocationSystem collocation_matrix(const BSplineKind& kind, int indicator) {
    if (kind.derivative != 0)
        throw InvalidArgument("collocation needs the q = 0 basis");
    const GridSpec grid{GridFamily::Full, indicator, kind.count};
    const Eigen::VectorXd x = nodes(grid);
    const BSplineBasis basis(kind);

    CollocationSystem sys{kind, grid, basis.values(std::span<const double>(x.data(), x.size())), 0.0};
    sys.determinant = Eigen::PartialPivLU<Eigen::MatrixXd>(sys.matrix).determinant();
    return sys;
}

Eigen::VectorXd solve_basis_coefficients(const CollocationSystem& sys, const Samples& samples, double floor) {
    if (!(samples.grid == sys.grid))
        throw InvalidArgument("samples do not live on the collocation grid");
    if (samples.values.size() != sys.matrix.rows())
        throw InvalidArgument("sample count does not match the collocation system");
    if (sys.singular(floor)) {
        std::ostringstream what;
        what << name(sys.kind) << " collocation matrix is singular (det = " << sys.determinant << ")";
        throw SingularSystem(what.str(), sys.determinant);
    }
    return Eigen::PartialPivLU<Eigen::MatrixXd>(sys.matrix).solve(samples.values);
}

BSplineExpansion::BSplineExpansion(BSplineBasis basis, Eigen::VectorXd alpha)
    : basis_(std::move(basis)), alpha_(std::move(alpha)) {
    if (alpha_.size() != basis_.size())
        throw InvalidArgument("expansion needs one coefficient per B-spline");
}

double BSplineExpansion::operator()(double t) const {
    return basis_.values(t).dot(alpha_);
}

Eigen::VectorXd BSplineExpansion::operator()(std::span<const double> ts) const {
    return basis_.values(ts) * alpha_;
}

BSplineExpansion bspline_interpolate(const BSplineKind& kind, const Samples& samples, double floor) {
    if (samples.grid.family != GridFamily::Full)
        throw InvalidArgument("B-spline interpolation needs samples on a full grid");
    BSplineKind base = kind;
    base.derivative = 0;
    const CollocationSystem sys = collocation_matrix(base, samples.grid.indicator);
    Eigen::VectorXd alpha = solve_basis_coefficients(sys, samples, floor);
    if (kind.derivative == 0)
        return BSplineExpansion(BSplineBasis(base), std::move(alpha));
    return BSplineExpansion(BSplineBasis(kind), std::move(alpha));
}

} // namespace trigspline
