#include "knotgas/numerics.hpp"

#include <cmath>
#include <string>

namespace knotgas {

void validate(const SolverSettings& s) {
    if (!(s.abs_tol > 0.0) || !(s.rel_tol > 0.0))
        throw domain_error("solver tolerances must be positive");
    if (s.max_iter < 1)
        throw domain_error("solver iteration cap must be at least 1");
    if (!(s.damping > 0.0) || s.damping > 1.0)
        throw domain_error("fixed-point damping must lie in (0, 1]");
}

double solve_root(const std::function<double(double)>& f, double lo, double hi,
                  const SolverSettings& settings) {
    validate(settings);
    if (!(lo < hi))
        throw bracketing_error("root bracket is empty");
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (fa * fb > 0.0)
        throw bracketing_error("no sign change over [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");

    for (int it = 0; it < settings.max_iter; ++it) {
        // secant proposal on even iterations, plain bisection on odd ones;
        // the alternation bounds the bracket shrink rate from below
        double x = 0.5 * (a + b);
        if (it % 2 == 0 && fb != fa) {
            const double s = b - fb * (b - a) / (fb - fa);
            if (s > a && s < b)
                x = s;
        }
        const double fx = f(x);
        if (std::abs(fx) <= settings.abs_tol)
            return x;
        if (fa * fx <= 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        if (b - a <= settings.rel_tol * std::abs(0.5 * (a + b)))
            return 0.5 * (a + b);
    }
    throw convergence_error("solve_root: no convergence after " +
                                std::to_string(settings.max_iter) + " iterations",
                            std::min(std::abs(fa), std::abs(fb)));
}

double fixed_point(const std::function<double(double)>& g, double x0,
                   const SolverSettings& settings) {
    validate(settings);
    double x = x0;
    double residual = std::numeric_limits<double>::infinity();
    for (int it = 0; it < settings.max_iter; ++it) {
        const double gx = g(x);
        if (!std::isfinite(gx))
            throw convergence_error("fixed_point: map returned a non-finite value", residual);
        residual = std::abs(x - gx);
        if (residual <= settings.abs_tol)
            return x;
        x = (1.0 - settings.damping) * x + settings.damping * gx;
    }
    throw convergence_error("fixed_point: residual " + std::to_string(residual) +
                                " after " + std::to_string(settings.max_iter) + " iterations",
                            residual);
}

} // namespace knotgas
