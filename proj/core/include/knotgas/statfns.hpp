#pragma once

#include "knotgas/geometry.hpp"

namespace knotgas::statfns {

/// z = exp(mu / T). Throws domain_error for T <= 0.
double fugacity(double mu, double T);

/// Unified quantum-statistics function
///   h_sigma(z) = (1/Gamma(sigma)) \int_0^inf t^{sigma-1} / (z^{-1} e^t + chi) dt,
/// the Fermi-Dirac integral family for chi = +1 and the Bose/polylog family
/// for chi = -1. Evaluated by adaptive quadrature to the given absolute
/// tolerance; the interval is split at t = max(1, ln z) with the head mapped
/// by t = s^2 (removes the t^{sigma-1} endpoint singularity) and the tail by
/// an exponential substitution.
///
/// Domain: sigma > 0, z > 0; bosons additionally require z < 1, except that
/// z within 1e-12 of 1 is admitted for sigma > 1 and evaluated by an
/// accelerated series instead of quadrature.
double h(double sigma, double z, Statistics stats, double abs_tol = 1e-10);

/// Same function parameterized by log_z = ln z = mu/T. Avoids fugacity
/// overflow in the degenerate fermion regime (mu/T of order 10^4 is fine).
double h_from_log(double sigma, double log_z, Statistics stats, double abs_tol = 1e-10);

struct SeriesResult {
    double value;            ///< partial sum
    double truncation_bound; ///< bound on the neglected tail, from the next-term magnitude
};

/// Independent series route: partial sum of
///   sum_{k>=1} (-chi)^{k+1} z^k / k^sigma
/// over the first `terms` terms. Converges for |z| < 1; z = 1 is admitted
/// for fermions (alternating) and for bosons with sigma > 1.
SeriesResult h_series_oracle(double sigma, double z, Statistics stats, int terms);

/// chi * ln(1 + chi z): the zero-energy boundary term of the level sums.
/// Equals h_1(z) on the common domain.
double log_occupancy_term(double z, Statistics stats);

/// Gamma function by the 9-term Lanczos approximation (g = 7); relative
/// error ~1e-13 over the arguments used here.
double gamma_fn(double x);

/// Riemann zeta for s > 0, s != 1, through the Dirichlet eta function with
/// alternating-series acceleration.
double riemann_zeta(double s);

} // namespace knotgas::statfns
