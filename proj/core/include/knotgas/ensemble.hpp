#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "knotgas/geometry.hpp"
#include "knotgas/numerics.hpp"

namespace knotgas {

/// One grand-canonical state point (natural units, eV).
struct ThermoPoint {
    double T = 1.0;
    double mu = 0.0;
};

/// Bosons need mu strictly below the lowest level (0); this guard gap keeps
/// the fugacity away from the z = 1 divergence.
inline constexpr double kBosonMuGuard = 1e-12;

/// Throws domain_error / divergence_error when the point is unusable for the
/// given statistics.
void validate(const ThermoPoint& point, Statistics stats);

/// Truncation control for the direct level sums. The running sum is cut once
/// the per-level contribution drops below tail_bound relative to it (the
/// default 1e-12 mirrors the Gaussian-like decay of the quadratic ladder).
struct TruncationPolicy {
    double tail_bound = 1e-12;
    std::size_t hard_cap = 1000000;
};

void validate(const TruncationPolicy& policy);

/// All state quantities evaluated at one point. Entropy and heat capacity
/// are dimensionless (k_B = 1); the variance is of the particle number.
struct ThermoQuantities {
    double grand_potential = 0.0;
    double internal_energy = 0.0;
    double entropy = 0.0;
    double heat_capacity = 0.0;
    double particle_number = 0.0;
    double number_variance = 0.0;
    double thermal_wavelength = 0.0;
};

/// lambda = sqrt(2 pi / (M T)).
double thermal_wavelength(double M, double T);

/// Mean occupation 1 / (exp((E - mu)/T) + chi). Fermion values lie in (0, 1);
/// the boson branch requires E > mu.
double occupation(double E, const ThermoPoint& point, Statistics stats);

/// Diagnostics of one truncated level sum.
struct LevelSum {
    double value = 0.0;
    double tail_estimate = 0.0; ///< geometric bound on the neglected tail
    std::size_t levels = 0;     ///< highest level index included
};

// ---------------------------------------------------------------------------
// direct truncated sums over the ladder E_n = c n^2 (n = 0 counted once,
// degeneracy 2 for n >= 1)
// ---------------------------------------------------------------------------

double grand_potential_sum(const TorusGeometry& geom, const ThermoPoint& point,
                           Statistics stats, const TruncationPolicy& trunc = {});
double particle_number(const TorusGeometry& geom, const ThermoPoint& point,
                       Statistics stats, const TruncationPolicy& trunc = {});
double internal_energy(const TorusGeometry& geom, const ThermoPoint& point,
                       Statistics stats, const TruncationPolicy& trunc = {});
double entropy(const TorusGeometry& geom, const ThermoPoint& point,
               Statistics stats, const TruncationPolicy& trunc = {});
/// dU/dT at fixed mu, central differences over the direct-sum energy.
double heat_capacity(const TorusGeometry& geom, const ThermoPoint& point,
                     Statistics stats, const TruncationPolicy& trunc = {});
/// T dN/dmu = sum of N(1 - chi N) over states.
double number_variance(const TorusGeometry& geom, const ThermoPoint& point,
                       Statistics stats, const TruncationPolicy& trunc = {});

/// Detailed variant of the grand-potential sum, exposing the tail bound and
/// the number of levels used.
LevelSum grand_potential_sum_detailed(const TorusGeometry& geom, const ThermoPoint& point,
                                      Statistics stats, const TruncationPolicy& trunc = {});

// ring counterparts (same ladder with c = 1/(2 M R^2))
double ring_grand_potential_sum(const RingGeometry& geom, const ThermoPoint& point,
                                Statistics stats, const TruncationPolicy& trunc = {});
double ring_particle_number(const RingGeometry& geom, const ThermoPoint& point,
                            Statistics stats, const TruncationPolicy& trunc = {});
double ring_internal_energy(const RingGeometry& geom, const ThermoPoint& point,
                            Statistics stats, const TruncationPolicy& trunc = {});

// ---------------------------------------------------------------------------
// Euler-Maclaurin closed forms. For the even quadratic ladder the summed
// boundary corrections cancel exactly and
//   Phi = -(p L T / (lambda sqrt(F))) h_{3/2}(z),
// with superexponentially small error once lambda << L p / sqrt(F).
// ---------------------------------------------------------------------------

double grand_potential_em(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats);
/// -dPhi_em/dmu by Richardson-refined central differences.
double particle_number_em(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats);
double ring_grand_potential_em(const RingGeometry& geom, const ThermoPoint& point, Statistics stats);

// ---------------------------------------------------------------------------
// Published closed forms reproduced verbatim, mixed prefactors and all, for
// the paper_literal comparison channel. These are dimensionally inconsistent
// and can overflow to inf/nan by construction; they are emitted for
// side-by-side inspection only and never feed any other computation.
// ---------------------------------------------------------------------------

double grand_potential_paper(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats);
double internal_energy_paper(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats);
double particle_number_paper(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats);

// ---------------------------------------------------------------------------
// channel evaluation and sweeps
// ---------------------------------------------------------------------------

enum class Channel { direct, euler_maclaurin, paper_literal };

const char* channel_name(Channel channel);

/// Every quantity at one point through the chosen evaluation channel.
/// direct: truncated sums (the source of truth).
/// euler_maclaurin: consistent closed form plus its derivatives.
/// paper_literal: verbatim published forms; entropy, heat capacity and the
/// variance have no published closed form and are reported as NaN.
ThermoQuantities evaluate(const TorusGeometry& geom, const ThermoPoint& point,
                          Statistics stats, Channel channel,
                          const TruncationPolicy& trunc = {});

struct SweepFailure {
    std::size_t index;
    std::string message;
};

/// One row per grid temperature, in grid order. Failed points carry NaN
/// quantities and an entry in failures.
struct SweepResult {
    std::vector<double> temperatures;
    std::vector<ThermoQuantities> rows;
    std::vector<SweepFailure> failures;
};

/// Evaluates every grid point independently at fixed mu. Points may be
/// computed in parallel (threads = 0 picks the hardware count); the output
/// is ordered by grid index and identical for any thread count.
SweepResult sweep(const TorusGeometry& geom, std::span<const double> T_grid, double mu,
                  Statistics stats, Channel channel, const TruncationPolicy& trunc = {},
                  int threads = 0);

} // namespace knotgas
