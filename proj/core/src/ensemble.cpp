#include "knotgas/ensemble.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "knotgas/parallel.hpp"
#include "knotgas/statfns.hpp"

namespace knotgas {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ln(1 + chi e^x) without overflow; the boson branch needs x < 0.
double log1p_chi_exp(double x, int chi) {
    if (chi > 0)
        return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
    if (x >= 0.0)
        throw domain_error("bose logarithm ln(1 - e^x) requires x < 0");
    return std::log1p(-std::exp(x));
}

double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// Occupation from the reduced variable x = (E - mu)/T.
double occupation_x(double x, int chi) {
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + chi * e);
    }
    return 1.0 / (std::exp(x) + chi);
}

// Per-state entropy, stable at both occupation extremes.
double entropy_term_x(double x, int chi) {
    if (chi > 0) {
        const double occ = occupation_x(x, chi);
        return occ * softplus(x) + (1.0 - occ) * softplus(-x);
    }
    const double occ = occupation_x(x, chi);
    const double l = -std::log1p(-std::exp(-x)); // ln(1 + occ)
    return occ * x + (1.0 + 2.0 * occ) * l;
}

// Truncated sum over the ladder E_n = coeff n^2 with degeneracy 2 for n >= 1.
// term(E) is the single-state contribution. Terms may grow while E < mu
// (degenerate fermions), so the tail cut only engages past that point.
template <class TermFn>
LevelSum sum_over_levels(double coeff, double mu, const TruncationPolicy& trunc, TermFn&& term) {
    validate(trunc);
    double sum = term(0.0);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1;; ++n) {
        if (n > trunc.hard_cap)
            throw truncation_error("level sum hit the hard cap of " +
                                   std::to_string(trunc.hard_cap) +
                                   " levels before meeting the tail bound");
        const double E = coeff * static_cast<double>(n) * static_cast<double>(n);
        const double t = 2.0 * term(E);
        sum += t;
        const double mag = std::abs(t);
        if (E > mu && mag <= trunc.tail_bound * std::abs(sum)) {
            double tail = mag;
            if (mag > 0.0 && mag < prev) {
                const double r = mag / prev;
                tail = mag * r / (1.0 - r);
            }
            return {sum, tail, n};
        }
        prev = mag;
    }
}

struct LadderSums {
    double coeff;
    ThermoPoint point;
    Statistics stats;
    TruncationPolicy trunc;

    double beta() const { return 1.0 / point.T; }

    LevelSum grand_potential_detail() const {
        const double b = beta();
        const int chi = stats.chi;
        const double mu = point.mu;
        auto res = sum_over_levels(coeff, mu, trunc, [&](double E) {
            return log1p_chi_exp(b * (mu - E), chi);
        });
        const double scale = -chi * point.T;
        return {scale * res.value, std::abs(scale) * res.tail_estimate, res.levels};
    }
    double grand_potential() const { return grand_potential_detail().value; }

    double particle_number() const {
        const double b = beta();
        const int chi = stats.chi;
        const double mu = point.mu;
        return sum_over_levels(coeff, mu, trunc, [&](double E) {
                   return occupation_x(b * (E - mu), chi);
               })
            .value;
    }

    double internal_energy() const {
        const double b = beta();
        const int chi = stats.chi;
        const double mu = point.mu;
        return sum_over_levels(coeff, mu, trunc, [&](double E) {
                   return E * occupation_x(b * (E - mu), chi);
               })
            .value;
    }

    double entropy() const {
        const double b = beta();
        const int chi = stats.chi;
        const double mu = point.mu;
        return sum_over_levels(coeff, mu, trunc, [&](double E) {
                   return entropy_term_x(b * (E - mu), chi);
               })
            .value;
    }

    double number_variance() const {
        const double b = beta();
        const int chi = stats.chi;
        const double mu = point.mu;
        return sum_over_levels(coeff, mu, trunc, [&](double E) {
                   const double occ = occupation_x(b * (E - mu), chi);
                   return occ * (1.0 - chi * occ);
               })
            .value;
    }
};

LadderSums torus_sums(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats,
                      const TruncationPolicy& trunc) {
    validate(point, stats);
    return {torus_level_coefficient(geom), point, stats, trunc};
}

LadderSums ring_sums(const RingGeometry& geom, const ThermoPoint& point, Statistics stats,
                     const TruncationPolicy& trunc) {
    validate(point, stats);
    return {ring_level_coefficient(geom), point, stats, trunc};
}

// p L / sqrt(F): the effective one-dimensional length of the knot.
double effective_length(const TorusGeometry& geom) {
    return static_cast<double>(geom.p) * geom.circumference /
           std::sqrt(topological_factor(geom));
}

// Closed-form continuum grand potential for a quadratic ladder living on an
// effective length Leff: Phi = -(Leff T / lambda) h_{3/2}(z).
double em_grand_potential(double eff_len, double M, const ThermoPoint& point, Statistics stats) {
    const double lam = thermal_wavelength(M, point.T);
    return -(eff_len * point.T / lam) *
           statfns::h_from_log(1.5, point.mu / point.T, stats);
}

// ln(1 + chi e^y) exactly as printed in the published forms, overflow and
// sign defects included (y here is the *fugacity*, not its logarithm).
double paper_log_term(double y, int chi) {
    if (chi > 0)
        return y > 700.0 ? y : std::log(1.0 + std::exp(y));
    return std::log(1.0 - std::exp(y));
}

} // namespace

void validate(const ThermoPoint& point, Statistics stats) {
    if (!(point.T > 0.0))
        throw domain_error("temperature must be positive, got T=" + std::to_string(point.T));
    if (stats.chi < 0 && !(point.mu < -kBosonMuGuard))
        throw divergence_error("bosons require mu < 0 (lowest level is 0); got mu=" +
                               std::to_string(point.mu));
}

void validate(const TruncationPolicy& policy) {
    if (!(policy.tail_bound > 0.0))
        throw domain_error("truncation tail bound must be positive");
    if (policy.hard_cap < 1)
        throw domain_error("truncation hard cap must be at least 1");
}

double thermal_wavelength(double M, double T) {
    if (!(M > 0.0) || !(T > 0.0))
        throw domain_error("thermal wavelength requires M > 0 and T > 0");
    return std::sqrt(2.0 * std::numbers::pi / (M * T));
}

double occupation(double E, const ThermoPoint& point, Statistics stats) {
    if (!(point.T > 0.0))
        throw domain_error("occupation requires T > 0");
    if (stats.chi < 0 && !(E > point.mu))
        throw domain_error("bose occupation requires E > mu");
    return occupation_x((E - point.mu) / point.T, stats.chi);
}

double grand_potential_sum(const TorusGeometry& geom, const ThermoPoint& point,
                           Statistics stats, const TruncationPolicy& trunc) {
    return torus_sums(geom, point, stats, trunc).grand_potential();
}

LevelSum grand_potential_sum_detailed(const TorusGeometry& geom, const ThermoPoint& point,
                                      Statistics stats, const TruncationPolicy& trunc) {
    return torus_sums(geom, point, stats, trunc).grand_potential_detail();
}

double particle_number(const TorusGeometry& geom, const ThermoPoint& point,
                       Statistics stats, const TruncationPolicy& trunc) {
    return torus_sums(geom, point, stats, trunc).particle_number();
}

double internal_energy(const TorusGeometry& geom, const ThermoPoint& point,
                       Statistics stats, const TruncationPolicy& trunc) {
    return torus_sums(geom, point, stats, trunc).internal_energy();
}

double entropy(const TorusGeometry& geom, const ThermoPoint& point,
               Statistics stats, const TruncationPolicy& trunc) {
    return torus_sums(geom, point, stats, trunc).entropy();
}

double heat_capacity(const TorusGeometry& geom, const ThermoPoint& point,
                     Statistics stats, const TruncationPolicy& trunc) {
    validate(point, stats);
    const double h = derivative_step_positive(point.T);
    return central_derivative(
        [&](double T) { return internal_energy(geom, {T, point.mu}, stats, trunc); },
        point.T, h);
}

double number_variance(const TorusGeometry& geom, const ThermoPoint& point,
                       Statistics stats, const TruncationPolicy& trunc) {
    return torus_sums(geom, point, stats, trunc).number_variance();
}

double ring_grand_potential_sum(const RingGeometry& geom, const ThermoPoint& point,
                                Statistics stats, const TruncationPolicy& trunc) {
    return ring_sums(geom, point, stats, trunc).grand_potential();
}

double ring_particle_number(const RingGeometry& geom, const ThermoPoint& point,
                            Statistics stats, const TruncationPolicy& trunc) {
    return ring_sums(geom, point, stats, trunc).particle_number();
}

double ring_internal_energy(const RingGeometry& geom, const ThermoPoint& point,
                            Statistics stats, const TruncationPolicy& trunc) {
    return ring_sums(geom, point, stats, trunc).internal_energy();
}

double grand_potential_em(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats) {
    validate(point, stats);
    return em_grand_potential(effective_length(geom), geom.M, point, stats);
}

double particle_number_em(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats) {
    validate(point, stats);
    double h = derivative_step(point.mu);
    if (stats.chi < 0)
        h = std::min(h, 0.45 * -point.mu); // keep mu + 2h below the divergence
    return -central_derivative(
        [&](double mu) { return grand_potential_em(geom, {point.T, mu}, stats); },
        point.mu, h);
}

double ring_grand_potential_em(const RingGeometry& geom, const ThermoPoint& point, Statistics stats) {
    validate(point, stats);
    return em_grand_potential(2.0 * std::numbers::pi * geom.R, geom.M, point, stats);
}

double grand_potential_paper(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats) {
    validate(point, stats);
    const double lam = thermal_wavelength(geom.M, point.T);
    const double w = point.mu / point.T;
    const double pref = static_cast<double>(geom.p) / std::sqrt(topological_factor(geom));
    return pref * (geom.circumference / lam) * statfns::h_from_log(1.5, w, stats) -
           statfns::h_from_log(1.0, w, stats);
}

double internal_energy_paper(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats) {
    validate(point, stats);
    const int chi = stats.chi;
    const double T = point.T;
    const double mu = point.mu;
    const double z = std::exp(mu / T);
    const double w = mu / T;
    const double lam = thermal_wavelength(geom.M, T);
    const double pl = static_cast<double>(geom.p) * geom.circumference /
                      std::sqrt(topological_factor(geom));
    return chi * (mu * z / T) * paper_log_term(z, chi) +
           (lam * mu * z / T) * pl * statfns::h_from_log(0.5, w, stats) +
           (1.5 * lam) * pl * statfns::h_from_log(1.5, w, stats) -
           statfns::h_from_log(1.0, w, stats);
}

double particle_number_paper(const TorusGeometry& geom, const ThermoPoint& point, Statistics stats) {
    validate(point, stats);
    const int chi = stats.chi;
    const double T = point.T;
    const double z = std::exp(point.mu / T);
    const double w = point.mu / T;
    const double lam = thermal_wavelength(geom.M, T);
    const double pl = static_cast<double>(geom.p) * geom.circumference /
                      std::sqrt(topological_factor(geom));
    return (chi * z / T) * pl * paper_log_term(z, chi) +
           (lam * z / T) * pl * statfns::h_from_log(1.5, w, stats);
}

const char* channel_name(Channel channel) {
    switch (channel) {
    case Channel::direct:
        return "direct";
    case Channel::euler_maclaurin:
        return "euler_maclaurin";
    case Channel::paper_literal:
        return "paper_literal";
    }
    return "?";
}

ThermoQuantities evaluate(const TorusGeometry& geom, const ThermoPoint& point,
                          Statistics stats, Channel channel, const TruncationPolicy& trunc) {
    validate(point, stats);
    ThermoQuantities q;
    q.thermal_wavelength = thermal_wavelength(geom.M, point.T);

    switch (channel) {
    case Channel::direct: {
        const LadderSums sums = torus_sums(geom, point, stats, trunc);
        q.grand_potential = sums.grand_potential();
        q.internal_energy = sums.internal_energy();
        q.entropy = sums.entropy();
        q.particle_number = sums.particle_number();
        q.number_variance = sums.number_variance();
        q.heat_capacity = heat_capacity(geom, point, stats, trunc);
        break;
    }
    case Channel::euler_maclaurin: {
        q.grand_potential = grand_potential_em(geom, point, stats);
        q.particle_number = particle_number_em(geom, point, stats);
        const double hT = derivative_step_positive(point.T);
        q.entropy = -central_derivative(
            [&](double T) { return grand_potential_em(geom, {T, point.mu}, stats); },
            point.T, hT);
        q.internal_energy = q.grand_potential + point.T * q.entropy + point.mu * q.particle_number;
        auto energy_at = [&](double T) {
            const ThermoPoint pt{T, point.mu};
            const double phi = grand_potential_em(geom, pt, stats);
            const double n = particle_number_em(geom, pt, stats);
            const double s = -central_derivative(
                [&](double TT) { return grand_potential_em(geom, {TT, point.mu}, stats); },
                T, derivative_step_positive(T));
            return phi + T * s + point.mu * n;
        };
        q.heat_capacity = central_derivative(energy_at, point.T, hT);
        double hmu = derivative_step(point.mu);
        if (stats.chi < 0)
            hmu = std::min(hmu, 0.4 * -point.mu);
        q.number_variance =
            point.T * central_derivative(
                          [&](double mu) { return particle_number_em(geom, {point.T, mu}, stats); },
                          point.mu, hmu);
        break;
    }
    case Channel::paper_literal: {
        q.grand_potential = grand_potential_paper(geom, point, stats);
        q.internal_energy = internal_energy_paper(geom, point, stats);
        q.particle_number = particle_number_paper(geom, point, stats);
        q.entropy = kNaN;        // no published closed form
        q.heat_capacity = kNaN;  // no published closed form
        q.number_variance = kNaN;
        break;
    }
    }
    return q;
}

SweepResult sweep(const TorusGeometry& geom, std::span<const double> T_grid, double mu,
                  Statistics stats, Channel channel, const TruncationPolicy& trunc,
                  int threads) {
    for (std::size_t i = 0; i + 1 < T_grid.size(); ++i)
        if (!(T_grid[i] < T_grid[i + 1]))
            throw domain_error("temperature grid must be strictly increasing");

    SweepResult result;
    result.temperatures.assign(T_grid.begin(), T_grid.end());
    result.rows.assign(T_grid.size(), ThermoQuantities{});
    std::vector<std::string> errors(T_grid.size());

    parallel_for(T_grid.size(), threads, [&](std::size_t i) {
        try {
            result.rows[i] = evaluate(geom, {T_grid[i], mu}, stats, channel, trunc);
        } catch (const std::exception& e) {
            errors[i] = e.what();
            ThermoQuantities bad;
            bad.grand_potential = bad.internal_energy = bad.entropy = kNaN;
            bad.heat_capacity = bad.particle_number = bad.number_variance = kNaN;
            bad.thermal_wavelength = kNaN;
            result.rows[i] = bad;
        }
    });

    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            result.failures.push_back({i, errors[i]});
    return result;
}

} // namespace knotgas
