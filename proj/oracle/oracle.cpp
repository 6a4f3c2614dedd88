#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace trigspline::oracle {

namespace {

constexpr double pi = std::numbers::pi;

struct Neumaier {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double s = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - s) + x;
        else
            carry += (x - s) + sum;
        sum = s;
    }
    double value() const { return sum + carry; }
};

double factor_value(FactorKind kind, int order, int period, double l) {
    double base = 1.0 / l;
    if (kind == FactorKind::Riemann) {
        const double x = pi * l / period;
        base = std::sin(x) / x;
    }
    return std::pow(base, order + 1);
}

// Rotation of (cos θ, sin θ) by qπ/2.
std::pair<double, double> shifted(double angle, int derivative) {
    const double c = std::cos(angle), s = std::sin(angle);
    switch (derivative % 4) {
    case 0:
        return {c, s};
    case 1:
        return {-s, c};
    case 2:
        return {-c, -s};
    default:
        return {s, -c};
    }
}

bool is_denominator(SeriesId id) {
    return id == SeriesId::HFull || id == SeriesId::HEven || id == SeriesId::HOdd;
}

} // namespace

std::string_view to_string(SeriesId id) {
    switch (id) {
    case SeriesId::HFull:
        return "h_full";
    case SeriesId::CFull:
        return "c_full";
    case SeriesId::SFull:
        return "s_full";
    case SeriesId::HEven:
        return "h_even";
    case SeriesId::CEven:
        return "c_even";
    case SeriesId::HOdd:
        return "h_odd";
    case SeriesId::SOdd:
        return "s_odd";
    }
    return "?";
}

int series_period(SeriesId id, const SeriesParams& p) {
    switch (id) {
    case SeriesId::HFull:
    case SeriesId::CFull:
    case SeriesId::SFull:
        return p.count;
    case SeriesId::HEven:
    case SeriesId::CEven:
        return p.i2 == 0 ? 2 * (p.count - 1) : 2 * p.count;
    case SeriesId::HOdd:
    case SeriesId::SOdd:
        return p.i2 == 0 ? 2 * (p.count + 1) : 2 * p.count;
    }
    return 0;
}

double brute_series(SeriesId id, const SeriesParams& p, double t, std::int64_t terms) {
    const int period = series_period(id, p);
    const int r = p.order;
    const int q = is_denominator(id) ? 0 : p.derivative;
    const double k = p.harmonic;

    bool full = false, alternate = false;
    switch (id) {
    case SeriesId::HFull:
        full = true;
        alternate = (p.i1 + p.i2) % 2 != 0;
        break;
    case SeriesId::CFull:
    case SeriesId::SFull:
        full = true;
        alternate = p.i1 % 2 != 0;
        break;
    case SeriesId::HEven:
        alternate = p.i2 == 1;
        break;
    case SeriesId::SOdd:
        alternate = p.i2 == 1;
        break;
    default:
        break;
    }
    // σ1(r, -l) = (-1)^(1+r) σ1(r, l); the Riemann factor is even.
    const double rho = full && p.factor == FactorKind::Power && r % 2 == 0 ? -1.0 : 1.0;

    auto amplitude = [&](double l) { return factor_value(p.factor, r, period, l) * std::pow(l, q); };
    auto term = [&](double l, double sign_reflected) {
        const double w = amplitude(l);
        if (is_denominator(id))
            return w;
        const auto [c, s] = shifted(l * t, q);
        const bool cosine = id == SeriesId::CFull || id == SeriesId::CEven;
        return w * (cosine ? c : sign_reflected * s);
    };

    Neumaier acc;
    acc.add(term(k, 1.0));
    for (std::int64_t m = 1; m <= terms; ++m) {
        const double up = static_cast<double>(m) * period + k;
        const double down = static_cast<double>(m) * period - k;
        const double pair = term(up, 1.0) + rho * term(down, -1.0);
        acc.add(alternate && m % 2 != 0 ? -pair : pair);
    }
    return acc.value();
}

double brute_series(SeriesId id, const SeriesParams& p, double t, const OracleConfig& cfg) {
    return brute_series(id, p, t, cfg.reference_terms);
}

double analytic_tail_bound(SeriesId id, const SeriesParams& p, std::int64_t terms) {
    const double period = series_period(id, p);
    const int q = is_denominator(id) ? 0 : p.derivative;
    const int decay = 1 + p.order - q;
    if (decay <= 1)
        return INFINITY;
    const double c = p.factor == FactorKind::Power ? 1.0 : std::pow(period / pi, 1 + p.order);
    const double base = (terms + 1) * period - p.harmonic;
    return 2.0 * c * (std::pow(base, -decay) + std::pow(base, 1 - decay) / (period * (decay - 1)));
}

double trig_polynomial(double a0, const Eigen::VectorXd& a, const Eigen::VectorXd& b, double t) {
    double sum = 0.5 * a0;
    for (Eigen::Index k = 0; k < a.size(); ++k)
        sum += a(k) * std::cos((k + 1) * t);
    for (Eigen::Index k = 0; k < b.size(); ++k)
        sum += b(k) * std::sin((k + 1) * t);
    return sum;
}

// ---------------------------------------------------------------------------

PeriodicCubicSpline::PeriodicCubicSpline(const GridSpec& grid, const Eigen::VectorXd& values)
    : origin_(node(grid, 1)), step_(2.0 * pi / grid.count), values_(values) {
    if (grid.family != GridFamily::Full)
        throw std::invalid_argument("periodic cubic spline needs a full grid");
    const int n = grid.count;
    if (values.size() != n)
        throw std::invalid_argument("sample count does not match the grid");

    // M_{j-1} + 4 M_j + M_{j+1} = 6 (f_{j+1} - 2 f_j + f_{j-1}) / h², cyclic.
    Eigen::VectorXd rhs(n);
    for (int j = 0; j < n; ++j)
        rhs(j) = 6.0 * (values((j + 1) % n) - 2.0 * values(j) + values((j + n - 1) % n)) / (step_ * step_);

    // Sherman-Morrison: A = T + u vᵀ with T tridiagonal.
    const double gamma = -4.0;
    Eigen::VectorXd diag = Eigen::VectorXd::Constant(n, 4.0);
    diag(0) -= gamma;
    diag(n - 1) -= 1.0 / gamma;
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    u(0) = gamma;
    u(n - 1) = 1.0;

    auto thomas = [&](Eigen::VectorXd d) {
        Eigen::VectorXd c(n), b = diag;
        c(0) = 1.0 / b(0);
        d(0) /= b(0);
        for (int i = 1; i < n; ++i) {
            const double denom = b(i) - c(i - 1);
            c(i) = 1.0 / denom;
            d(i) = (d(i) - d(i - 1)) / denom;
        }
        for (int i = n - 2; i >= 0; --i)
            d(i) -= c(i) * d(i + 1);
        return d;
    };
    const Eigen::VectorXd y = thomas(rhs);
    const Eigen::VectorXd z = thomas(u);
    const double factor = (y(0) + y(n - 1) / gamma) / (1.0 + z(0) + z(n - 1) / gamma);
    moments_ = y - factor * z;
}

double PeriodicCubicSpline::operator()(double t) const {
    const int n = static_cast<int>(values_.size());
    double s = (t - origin_) / step_;
    s -= n * std::floor(s / n);
    int j = static_cast<int>(std::floor(s));
    if (j >= n)
        j = n - 1;
    const double a = s - j;
    const double b = 1.0 - a;
    const int j1 = (j + 1) % n;
    const double h2 = step_ * step_;
    return b * values_(j) + a * values_(j1) +
           h2 / 6.0 * ((b * b * b - b) * moments_(j) + (a * a * a - a) * moments_(j1));
}

double periodic_cubic_bspline(int count, double center, double t) {
    const double h = 2.0 * pi / count;
    double d = std::remainder(t - center, 2.0 * pi);
    double total = 0.0;
    for (int wrap = -1; wrap <= 1; ++wrap) {
        const double x = std::abs(d + wrap * 2.0 * pi) / h;
        if (x < 1.0)
            total += 2.0 / 3.0 - x * x + 0.5 * x * x * x;
        else if (x < 2.0)
            total += (2.0 - x) * (2.0 - x) * (2.0 - x) / 6.0;
    }
    return total / h;
}

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals < 2 || intervals % 2 != 0)
        throw std::invalid_argument("Simpson needs an even interval count");
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

double quadrature_unit_integral(const std::function<Eigen::VectorXd(std::span<const double>)>& f,
                                const OracleConfig& cfg) {
    const int n = cfg.quadrature_intervals;
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("Simpson needs an even interval count");
    const double h = 2.0 * pi / n;
    std::vector<double> x(n + 1);
    for (int i = 0; i <= n; ++i)
        x[i] = -pi + i * h;
    const Eigen::VectorXd y = f(x);
    double sum = y(0) + y(n);
    for (int i = 1; i < n; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * y(i);
    return sum * h / 3.0;
}

} // namespace trigspline::oracle
