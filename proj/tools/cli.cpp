#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "trigspline/bsplines.hpp"
#include "trigspline/discrete_fourier.hpp"
#include "trigspline/error.hpp"
#include "trigspline/fundamental.hpp"
#include "trigspline/grids.hpp"
#include "trigspline/splines.hpp"

namespace trigspline::cli {

namespace {

constexpr double pi = std::numbers::pi;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "");
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        out << format_double(v);
                    else
                        out << v;
                },
                row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
        rows.push_back(obj);
    }
    out << rows.dump(2) << '\n';
}

struct Options {
    std::string format = "csv";
    std::string family = "full";
    int indicator = 0;
    int i1 = 0;
    int i2 = 0;
    std::string factor = "power";
    int order = 3;
    int derivative = 0;
    int count = 9;
    std::string samples;
    std::string points = "dense:200";
    std::optional<std::int64_t> trunc_terms;
    std::optional<double> trunc_tol;
    std::string kind = "BC0";
    std::string form = "coefficient";
    std::string kinds = "all";
    std::vector<int> orders{1, 2, 3, 4, 5, 11};
    std::vector<int> only;
    std::uint64_t seed = oracle::CheckOptions{}.seed;
};

TruncationPolicy truncation(const Options& o, int order, int derivative) {
    if (o.trunc_terms)
        return TruncationPolicy::fixed(*o.trunc_terms);
    if (o.trunc_tol)
        return TruncationPolicy::tolerance(*o.trunc_tol);
    if (const char* env = std::getenv("TRIGSPLINE_TRUNC_TOL"); env && *env) {
        double eps = 0.0;
        try {
            eps = std::stod(env);
        } catch (const std::exception&) {
            throw UsageError("TRIGSPLINE_TRUNC_TOL is not a number: " + std::string(env));
        }
        return default_truncation(order, derivative, eps);
    }
    return default_truncation(order, derivative);
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep))
        out.push_back(trim(field));
    return out;
}

double parse_number(const std::string& text, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError(where + ": not a number '" + text + "'");
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

Samples read_samples(const std::string& path, GridFamily family, int indicator) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty())
        throw UsageError(path + ": empty samples file");
    const std::vector<std::string> header = split(lines[0]);
    if (header.size() != 2 || (header[0] != "j" && header[0] != "x") || header[1] != "f")
        throw UsageError(path + ": header must be 'j,f' or 'x,f'");
    const bool by_index = header[0] == "j";

    const int count = static_cast<int>(lines.size()) - 1;
    Samples s{GridSpec{family, indicator, count}, Eigen::VectorXd::Zero(count)};
    try {
        validate(s.grid);
    } catch (const InvalidArgument& e) {
        throw UsageError(path + ": " + e.what());
    }
    std::vector<bool> seen(count, false);
    for (int row = 1; row <= count; ++row) {
        const std::vector<std::string> fields = split(lines[row]);
        const std::string where = path + ":" + std::to_string(row + 1);
        if (fields.size() != 2)
            throw UsageError(where + ": expected two fields");
        int j = row;
        if (by_index) {
            const double jv = parse_number(fields[0], where);
            j = static_cast<int>(jv);
            if (jv != j || j < 1 || j > count || seen[j - 1])
                throw UsageError(where + ": index must list each of 1.." + std::to_string(count) + " once");
        } else {
            const double x = parse_number(fields[0], where);
            if (std::abs(x - node(s.grid, j)) > 1e-9)
                throw UsageError(where + ": x = " + fields[0] + " does not match grid node " + std::to_string(j) +
                                 " (" + format_double(node(s.grid, j)) + ")");
        }
        seen[j - 1] = true;
        s.values(j - 1) = parse_number(fields[1], where);
    }
    return s;
}

std::vector<double> read_points(const std::string& spec, double low, double high, bool closed) {
    const auto colon = spec.find(':');
    const std::string mode = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    std::vector<double> t;
    if (mode == "dense") {
        const double k = parse_number(arg, "--points");
        const int count = static_cast<int>(k);
        if (count != k || count < 2)
            throw UsageError("--points dense:K needs an integer K >= 2");
        const int intervals = closed ? count - 1 : count;
        for (int i = 0; i < count; ++i)
            t.push_back(low + (high - low) * i / intervals);
    } else if (mode == "list") {
        const std::vector<std::string> lines = read_lines(arg);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::string field = split(lines[i]).front();
            if (i == 0 && field == "t")
                continue;
            t.push_back(parse_number(field, arg + ":" + std::to_string(i + 1)));
        }
        if (t.empty())
            throw UsageError(arg + ": no points");
    } else {
        throw UsageError("--points must be dense:K or list:FILE");
    }
    return t;
}

std::vector<double> spline_points(const Options& o, GridFamily family, std::ostream& err) {
    const bool full = family == GridFamily::Full;
    std::vector<double> t = read_points(o.points, 0.0, full ? 2.0 * pi : pi, !full);
    if (!full) {
        std::size_t outside = 0;
        for (double v : t)
            outside += v < 0.0 || v > pi;
        if (outside > 0)
            err << "warning: " << outside << " point(s) outside [0, pi]; even and odd splines are extended by symmetry\n";
    }
    return t;
}

GridFamily grid_family(const std::string& name) {
    try {
        return parse_grid_family(name);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

SplineConfig spline_config(const Options& o, int count) {
    SplineConfig cfg{family_of(grid_family(o.family)), o.i1, o.i2, parse_factor_kind(o.factor), o.order,
                     o.derivative, count, truncation(o, o.order, o.derivative)};
    try {
        validate(cfg);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

// ---------------------------------------------------------------------------

Table cmd_grid(const Options& o) {
    const GridSpec grid{grid_family(o.family), o.indicator, o.count};
    const Eigen::VectorXd x = nodes(grid);
    Table t{{"j", "x"}, {}};
    for (Eigen::Index j = 0; j < x.size(); ++j)
        t.rows.push_back({static_cast<long long>(j + 1), x(j)});
    return t;
}

Table cmd_coeffs(const Options& o) {
    const TrigCoefficients c = coefficients(read_samples(o.samples, grid_family(o.family), o.indicator));
    Table t{{"k", "a_k", "b_k"}, {}};
    t.rows.push_back({0LL, c.a0, 0.0});
    const Eigen::Index count = std::max(c.a.size(), c.b.size());
    for (Eigen::Index k = 0; k < count; ++k)
        t.rows.push_back({static_cast<long long>(k + 1), k < c.a.size() ? c.a(k) : 0.0, k < c.b.size() ? c.b(k) : 0.0});
    return t;
}

Table cmd_eval(const Options& o, std::ostream& err) {
    const GridFamily family = grid_family(o.family);
    const Samples s = read_samples(o.samples, family, o.i2);
    const SplineConfig cfg = spline_config(o, s.grid.count);
    const std::vector<double> ts = spline_points(o, family, err);
    Eigen::VectorXd v;
    if (o.form == "fundamental") {
        v = eval_via_fundamentals(cfg, s, ts);
    } else if (o.form == "bspline") {
        if (family != GridFamily::Full || o.i1 != 0)
            throw UsageError("the B-spline form needs --family full --i1 0");
        BSplineKind kind;
        try {
            kind = parse_bspline_kind(o.kind);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        kind.order = o.order;
        kind.derivative = o.derivative;
        kind.count = s.grid.count;
        kind.truncation = cfg.truncation;
        v = bspline_interpolate(kind, s)(ts);
    } else {
        v = interpolate(cfg, s)(ts);
    }
    Table t{{"t", "value"}, {}};
    for (std::size_t i = 0; i < ts.size(); ++i)
        t.rows.push_back({ts[i], v(static_cast<Eigen::Index>(i))});
    return t;
}

Table cmd_basis(const Options& o, std::ostream& err) {
    Eigen::MatrixXd values;
    std::vector<double> ts;
    std::string prefix;
    if (o.kind == "fundamental") {
        const SplineConfig cfg = spline_config(o, o.count);
        ts = spline_points(o, grid_family(o.family), err);
        values = FundamentalBasis(cfg).values(ts);
        prefix = "phi";
    } else {
        BSplineKind kind;
        try {
            kind = parse_bspline_kind(o.kind);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        kind.order = o.order;
        kind.derivative = o.derivative;
        kind.count = o.count;
        kind.truncation = truncation(o, o.order, o.derivative);
        try {
            validate(kind);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        ts = read_points(o.points, 0.0, 2.0 * pi, false);
        values = BSplineBasis(kind).values(ts);
        prefix = o.kind;
    }
    Table t{{"t"}, {}};
    for (Eigen::Index j = 0; j < values.cols(); ++j)
        t.columns.push_back(prefix + "_" + std::to_string(j + 1));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<Cell> row{ts[i]};
        for (Eigen::Index j = 0; j < values.cols(); ++j)
            row.push_back(values(static_cast<Eigen::Index>(i), j));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_det(const Options& o) {
    std::vector<std::string> names;
    if (o.kinds == "all")
        names = {"BR", "BC", "BR0", "BC0", "BR1", "BC1"};
    else
        names = split(o.kinds);
    Table t{{"kind"}, {}};
    for (int r : o.orders)
        t.columns.push_back("r=" + std::to_string(r));
    for (const std::string& label : names) {
        BSplineKind kind;
        try {
            kind = parse_bspline_kind(label);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        std::vector<Cell> row{label};
        for (int r : o.orders) {
            kind.order = r;
            kind.count = o.count;
            kind.truncation = truncation(o, r, 0);
            try {
                validate(kind);
            } catch (const InvalidArgument& e) {
                throw UsageError(e.what());
            }
            row.push_back(std::abs(collocation_matrix(kind, o.indicator).determinant));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

int cmd_check(const Options& o, std::ostream& out) {
    std::vector<int> ids = o.only;
    if (ids.empty())
        for (int id = 1; id <= oracle::check_count; ++id)
            ids.push_back(id);
    for (int id : ids)
        if (id < 1 || id > oracle::check_count)
            throw UsageError("no check " + std::to_string(id));

    oracle::CheckOptions options;
    options.seed = o.seed;
    int failures = 0;
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (int id : ids) {
        const oracle::CheckResult r = oracle::run_check(id, options);
        failures += r.passed ? 0 : 1;
        if (o.format == "json") {
            report.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            out << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << ". " << r.name << ": " << r.detail << '\n';
            out.flush();
        }
    }
    if (o.format == "json")
        out << report.dump(2) << '\n';
    else
        out << (ids.size() - failures) << "/" << ids.size() << " checks passed\n";
    return failures == 0 ? exit_ok : exit_check_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Trigonometric interpolation splines"};
    app.name("trigspline");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto add_truncation = [&](CLI::App* cmd) {
        auto* terms = cmd->add_option("--trunc-terms", o.trunc_terms, "Sum exactly M terms of each series")
                          ->check(CLI::NonNegativeNumber);
        auto* tol = cmd->add_option("--trunc-tol", o.trunc_tol, "Tail tolerance of each series")
                        ->check(CLI::PositiveNumber);
        terms->excludes(tol);
    };
    auto add_spline = [&](CLI::App* cmd) {
        cmd->add_option("--family", o.family, "full, even or odd")->check(CLI::IsMember({"full", "even", "odd"}));
        cmd->add_option("--i1", o.i1, "Knot grid indicator")->check(CLI::Range(0, 1));
        cmd->add_option("--i2", o.i2, "Interpolation grid indicator")->check(CLI::Range(0, 1));
        cmd->add_option("--factor", o.factor, "riemann or power")->check(CLI::IsMember({"riemann", "power"}));
        cmd->add_option("--r", o.order, "Spline order")->check(CLI::PositiveNumber);
        cmd->add_option("--q", o.derivative, "Derivative order")->check(CLI::NonNegativeNumber);
        add_truncation(cmd);
    };

    auto* grid = app.add_subcommand("grid", "Print grid nodes");
    grid->add_option("--family", o.family, "full, even or odd")->check(CLI::IsMember({"full", "even", "odd"}));
    grid->add_option("--i", o.indicator, "Grid indicator")->check(CLI::Range(0, 1));
    grid->add_option("--n", o.count, "Node count")->required();

    auto* coeffs = app.add_subcommand("coeffs", "Interpolation polynomial coefficients of samples");
    coeffs->add_option("--family", o.family, "full, even or odd")->check(CLI::IsMember({"full", "even", "odd"}));
    coeffs->add_option("--i", o.indicator, "Grid indicator")->check(CLI::Range(0, 1));
    coeffs->add_option("--samples", o.samples, "CSV with header j,f or x,f")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate the interpolation spline of samples");
    add_spline(eval);
    eval->add_option("--samples", o.samples, "CSV with header j,f or x,f on the --i2 grid")->required();
    eval->add_option("--points", o.points, "dense:K or list:FILE");
    eval->add_option("--form", o.form, "coefficient, fundamental or bspline")
        ->check(CLI::IsMember({"coefficient", "fundamental", "bspline"}));
    eval->add_option("--kind", o.kind, "B-spline kind of the bspline form");

    auto* basis = app.add_subcommand("basis", "Tabulate B-splines or fundamental splines");
    add_spline(basis);
    basis->add_option("--kind", o.kind, "BC, BC0, BC1, BR, BR0, BR1 or fundamental");
    basis->add_option("--n", o.count, "Node count");
    basis->add_option("--points", o.points, "dense:K or list:FILE");

    auto* det = app.add_subcommand("det", "Collocation determinants of the B-spline kinds");
    det->add_option("--kinds", o.kinds, "'all' or a comma list of kinds");
    det->add_option("--r", o.orders, "Comma list of orders")->delimiter(',');
    det->add_option("--n", o.count, "Node count");
    det->add_option("--i", o.indicator, "Collocation grid indicator")->check(CLI::Range(0, 1));
    add_truncation(det);

    auto* check = app.add_subcommand("check", "Run the acceptance checks");
    check->add_option("--only", o.only, "Comma list of check ids")->delimiter(',');
    check->add_option("--seed", o.seed, "Seed of the randomized checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Table table;
        if (*check)
            return cmd_check(o, out);
        if (*grid)
            table = cmd_grid(o);
        else if (*coeffs)
            table = cmd_coeffs(o);
        else if (*eval)
            table = cmd_eval(o, err);
        else if (*basis)
            table = cmd_basis(o, err);
        else if (*det)
            table = cmd_det(o);
        if (o.format == "json")
            write_json(table, out);
        else
            write_csv(table, out);
        return exit_ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return exit_numerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    }
}

} // namespace trigspline::cli
