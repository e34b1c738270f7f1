#pragma once

#include <stdexcept>
#include <string>

namespace knotgas {

/// Base class of every failure raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Geometry that cannot host the confined spectrum (R <= d, nonpositive
/// topological-factor denominator, ...).
class geometry_error : public error {
public:
    using error::error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

/// Bose fugacity at or beyond the z = 1 singularity.
class divergence_error : public error {
public:
    using error::error;
};

/// Level sum reached the hard cap before the tail bound was met.
class truncation_error : public error {
public:
    using error::error;
};

/// Root bracket does not contain a sign change.
class bracketing_error : public error {
public:
    using error::error;
};

/// Iterative solver exhausted its iteration budget.
class convergence_error : public error {
public:
    convergence_error(const std::string& what, double residual)
        : error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Bracket expansion failed to enclose a root.
class no_solution_error : public error {
public:
    using error::error;
};

} // namespace knotgas
