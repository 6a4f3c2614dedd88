#pragma once

#include <string_view>

#include <Eigen/Dense>

namespace trigspline {

/// The three uniform grid families. `Full` lives on [0, 2π), the other two
/// on [0, π].
enum class GridFamily {
    Full,       ///< Δ1: N = 2n + 1 nodes over one period
    EvenClosed, ///< Δ2: hosts even (cosine) interpolation
    OddOpen     ///< Δ3: hosts odd (sine) interpolation
};

/// One member of a grid family. `indicator` selects the unshifted (0) or
/// half-step shifted (1) node set.
struct GridSpec {
    GridFamily family = GridFamily::Full;
    int indicator = 0;
    int count = 3;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Throws InvalidArgument unless the spec satisfies the family's node-count
/// rule (Full: odd and >= 3, EvenClosed: >= 2, OddOpen: >= 1).
void validate(const GridSpec& grid);

/// Node x_j for 1-based j, computed from the closed formula.
double node(const GridSpec& grid, int j);

/// All nodes, x(0) = x_1.
Eigen::VectorXd nodes(const GridSpec& grid);

/// Length of the interval the family covers: 2π for Full, π otherwise.
double domain_length(GridFamily family);

std::string_view to_string(GridFamily family);
GridFamily parse_grid_family(std::string_view name);

} // namespace trigspline
