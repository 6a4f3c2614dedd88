#include "trigspline/grids.hpp"

#include <numbers>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

void validate(const GridSpec& grid) {
    if (grid.indicator != 0 && grid.indicator != 1)
        throw InvalidArgument("grid indicator must be 0 or 1, got " + std::to_string(grid.indicator));
    switch (grid.family) {
    case GridFamily::Full:
        if (grid.count < 3 || grid.count % 2 == 0)
            throw InvalidArgument("full grid needs an odd node count N >= 3, got " +
                                  std::to_string(grid.count));
        break;
    case GridFamily::EvenClosed:
        if (grid.count < 2)
            throw InvalidArgument("even grid needs N >= 2, got " + std::to_string(grid.count));
        break;
    case GridFamily::OddOpen:
        if (grid.count < 1)
            throw InvalidArgument("odd grid needs N >= 1, got " + std::to_string(grid.count));
        break;
    }
}

double node(const GridSpec& grid, int j) {
    validate(grid);
    if (j < 1 || j > grid.count)
        throw InvalidArgument("node index " + std::to_string(j) + " outside 1.." +
                              std::to_string(grid.count));
    // π·num/den in extended precision, rounded once.
    auto at = [](long double num, long double den) {
        return static_cast<double>(std::numbers::pi_v<long double> * num / den);
    };
    const long double n = grid.count;
    switch (grid.family) {
    case GridFamily::Full:
        return grid.indicator == 0 ? at(2.0L * (j - 1), n) : at(2.0L * j - 1.0L, n);
    case GridFamily::EvenClosed:
        return grid.indicator == 0 ? at(j - 1.0L, n - 1.0L) : at(2.0L * j - 1.0L, 2.0L * n);
    case GridFamily::OddOpen:
        return grid.indicator == 0 ? at(j, n + 1.0L) : at(2.0L * j - 1.0L, 2.0L * n);
    }
    return 0.0;
}

Eigen::VectorXd nodes(const GridSpec& grid) {
    validate(grid);
    Eigen::VectorXd x(grid.count);
    for (int j = 1; j <= grid.count; ++j)
        x(j - 1) = node(grid, j);
    return x;
}

double domain_length(GridFamily family) {
    return family == GridFamily::Full ? 2.0 * std::numbers::pi : std::numbers::pi;
}

std::string_view to_string(GridFamily family) {
    switch (family) {
    case GridFamily::Full:
        return "full";
    case GridFamily::EvenClosed:
        return "even";
    case GridFamily::OddOpen:
        return "odd";
    }
    return "?";
}

GridFamily parse_grid_family(std::string_view name) {
    if (name == "full")
        return GridFamily::Full;
    if (name == "even")
        return GridFamily::EvenClosed;
    if (name == "odd")
        return GridFamily::OddOpen;
    throw InvalidArgument("unknown grid family '" + std::string(name) + "'");
}

} // namespace trigspline
