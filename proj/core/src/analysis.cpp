#include "knotgas/analysis.hpp"

#include <cmath>

namespace knotgas {

std::vector<Crossing> find_crossings(std::span<const double> grid,
                                     std::span<const double> a,
                                     std::span<const double> b) {
    std::vector<Crossing> out;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double d0 = a[i] - b[i];
        const double d1 = a[i + 1] - b[i + 1];
        if (std::isnan(d0) || std::isnan(d1))
            continue;
        if (d0 == 0.0) {
            out.push_back({grid[i], a[i]});
            continue;
        }
        if (d0 * d1 < 0.0) {
            const double t = d0 / (d0 - d1);
            out.push_back({grid[i] + t * (grid[i + 1] - grid[i]),
                           a[i] + t * (a[i + 1] - a[i])});
        }
    }
    return out;
}

std::optional<Extremum> interior_minimum(std::span<const double> grid,
                                         std::span<const double> values) {
    std::optional<Extremum> best;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (std::isnan(values[i - 1]) || std::isnan(values[i]) || std::isnan(values[i + 1]))
            continue;
        if (values[i] < values[i - 1] && values[i] < values[i + 1])
            if (!best || values[i] < best->value)
                best = Extremum{i, grid[i], values[i]};
    }
    return best;
}

std::optional<Extremum> interior_maximum(std::span<const double> grid,
                                         std::span<const double> values) {
    std::optional<Extremum> best;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (std::isnan(values[i - 1]) || std::isnan(values[i]) || std::isnan(values[i + 1]))
            continue;
        if (values[i] > values[i - 1] && values[i] > values[i + 1])
            if (!best || values[i] > best->value)
                best = Extremum{i, grid[i], values[i]};
    }
    return best;
}

} // namespace knotgas
