#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

#include "knotgas/errors.hpp"

namespace knotgas {

/// Shared tolerances for the root finder and the damped fixed-point loop.
struct SolverSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_iter = 200;
    double damping = 0.5; ///< fixed-point mixing factor in (0, 1]
};

void validate(const SolverSettings& settings);

/// Central difference with one Richardson refinement step:
/// (4 D(h/2) - D(h)) / 3 with D(h) = (f(x+h) - f(x-h)) / 2h.
template <class F>
double central_derivative(F&& f, double x, double h) {
    if (!(h > 0.0))
        throw domain_error("central_derivative requires a positive step");
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double h2 = 0.5 * h;
    const double d2 = (f(x + h2) - f(x - h2)) / (2.0 * h2);
    return (4.0 * d2 - d1) / 3.0;
}

/// Default step for thermodynamic derivatives at argument x.
inline double derivative_step(double x) {
    return 1e-4 * std::max(std::abs(x), 1.0);
}

/// Step clipped so that x - 2h stays positive (temperature derivatives).
inline double derivative_step_positive(double x) {
    return std::min(derivative_step(x), 0.25 * x);
}

/// Root of f on [lo, hi] by bisection with secant acceleration. Requires a
/// sign change over the bracket; the result always lies inside it. Returns
/// once |f(x)| <= abs_tol or the bracket width falls below rel_tol * |x|.
double solve_root(const std::function<double(double)>& f, double lo, double hi,
                  const SolverSettings& settings = {});

/// Damped fixed point of g: iterates x <- (1 - damping) x + damping g(x)
/// until |x - g(x)| <= abs_tol. Throws convergence_error (carrying the last
/// residual) when the iteration budget runs out.
double fixed_point(const std::function<double(double)>& g, double x0,
                   const SolverSettings& settings = {});

} // namespace knotgas
