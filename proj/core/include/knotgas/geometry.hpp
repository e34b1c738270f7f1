#pragma once

#include <limits>

#include "knotgas/errors.hpp"

namespace knotgas {

/// Quantum-statistics discriminant: chi = +1 for fermions, -1 for bosons.
struct Statistics {
    int chi = +1;

    static constexpr Statistics fermions() { return {+1}; }
    static constexpr Statistics bosons() { return {-1}; }

    bool is_fermion() const { return chi > 0; }
    double max_occupation() const {
        return chi > 0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    const char* name() const { return chi > 0 ? "fermion" : "boson"; }
};

/// Throws domain_error unless chi is +1 or -1.
Statistics statistics_from_chi(int chi);

/// Torus-knot confinement geometry in natural units (hbar = k_B = 1):
/// energies and temperatures in eV, lengths in 1/eV, mass in eV.
///
/// Derived members are populated by make_torus_geometry and must not be
/// edited independently of R and d.
struct TorusGeometry {
    double R = 0.0;  ///< outer radius
    double d = 0.0;  ///< tube radius
    int p = 1;       ///< toroidal loop count
    int alpha = 1;   ///< winding number
    double M = 1.0;  ///< particle mass

    double eta = 0.0;           ///< arccosh(R/d)
    double a = 0.0;             ///< sqrt(R^2 - d^2)
    double circumference = 0.0; ///< 2 pi a
};

/// One-dimensional ring of radius R (periodic boundary conditions).
struct RingGeometry {
    double R = 1.0;
    double M = 1.0;
};

/// Validates R > d > 0, p >= 1, alpha >= 1, M > 0 and the positivity of the
/// topological-factor denominator alpha^2 + sinh^2(eta) - 1, then fills in
/// the derived fields.
TorusGeometry make_torus_geometry(double R, double d, int p, int alpha, double M);

RingGeometry make_ring_geometry(double R, double M);

/// F(alpha, eta) = cosh^2(eta) / (alpha^2 + sinh^2(eta) - 1), the
/// geometry/topology multiplier of the quadratic dispersion. Strictly
/// positive for any geometry accepted at construction; equals coth^2(eta)
/// for alpha = 1 and decreases with alpha.
double topological_factor(const TorusGeometry& geom);

/// Coefficient c of the quadratic level ladder E_n = c n^2,
/// c = F(alpha, eta) / (2 M a^2 p^2).
double torus_level_coefficient(const TorusGeometry& geom);

/// E_n = n^2 / (2 M a^2 p^2) * F(alpha, eta), n >= 0. Level 0 is 0.
double torus_level(long n, const TorusGeometry& geom);

/// E_k = k^2 / (2 M R^2), k >= 0.
double ring_level(long k, const RingGeometry& geom);

/// Coefficient of the ring ladder E_k = c k^2, c = 1 / (2 M R^2).
double ring_level_coefficient(const RingGeometry& geom);

} // namespace knotgas
