#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace knotgas {

/// Sign-change location of a - b, linearly interpolated.
struct Crossing {
    double T;     ///< interpolated crossing temperature
    double value; ///< interpolated ordinate at the crossing
};

/// All crossings of two curves sampled on the same grid. Grid points where
/// either curve is NaN are skipped.
std::vector<Crossing> find_crossings(std::span<const double> grid,
                                     std::span<const double> a,
                                     std::span<const double> b);

struct Extremum {
    std::size_t index;
    double T;
    double value;
};

/// Deepest interior local minimum (strictly below both neighbours), if any.
std::optional<Extremum> interior_minimum(std::span<const double> grid,
                                         std::span<const double> values);

/// Highest interior local maximum (strictly above both neighbours), if any.
std::optional<Extremum> interior_maximum(std::span<const double> grid,
                                         std::span<const double> values);

} // namespace knotgas
