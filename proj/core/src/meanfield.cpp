#include "knotgas/meanfield.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "knotgas/statfns.hpp"

namespace knotgas {

namespace {

// Shift applied to the chemical potential by the mean field.
ThermoPoint shifted(const ThermoPoint& point, double u_prime) {
    return {point.T, point.mu - u_prime};
}

MeanFieldState ideal_state(double N, double L, const ThermoPoint& point) {
    MeanFieldState st;
    st.N_bar = N;
    st.n_bar = N / L;
    st.u_prime = 0.0;
    st.z_eff = std::exp(point.mu / point.T);
    st.converged = true;
    st.residual = 0.0;
    return st;
}

// Fixed point on the particle number: N -> N_kinetic(mu - u'(N/L)).
// z_eff is filled in by the caller (it knows the statistics).
template <class NumberFn>
MeanFieldState solve_state(NumberFn&& number_at_shift, double L,
                           const InteractionModel& model, const SolverSettings& settings) {
    auto map = [&](double N) { return number_at_shift(model.u_prime(N / L)); };
    const double start = number_at_shift(model.u_prime(0.0));

    double N = 0.0;
    try {
        N = fixed_point(map, start, settings);
    } catch (const convergence_error&) {
        SolverSettings retry = settings;
        retry.damping = 0.1; // fall back on a stiffer map
        N = fixed_point(map, start, retry);
    }

    MeanFieldState st;
    st.N_bar = N;
    st.n_bar = N / L;
    st.u_prime = model.u_prime(st.n_bar);
    st.converged = true;
    st.residual = std::abs(N - map(N));
    return st;
}

double torus_length(const TorusGeometry& geom) { return geom.circumference; }
double ring_length(const RingGeometry& geom) { return 2.0 * std::numbers::pi * geom.R; }

// ln(1 + chi e^y) as printed (y is a fugacity in the published forms).
double paper_log_term(double y, int chi) {
    if (chi > 0)
        return y > 700.0 ? y : std::log(1.0 + std::exp(y));
    return std::log(1.0 - std::exp(y));
}

} // namespace

double InteractionModel::u(double n) const {
    double value = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 0;)
        value = value * n + coefficients[k];
    return value;
}

double InteractionModel::u_prime(double n) const {
    double value = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 1;)
        value = value * n + static_cast<double>(k) * coefficients[k];
    return value;
}

bool InteractionModel::is_zero() const {
    for (double c : coefficients)
        if (c != 0.0)
            return false;
    return true;
}

const char* pipeline_name(Pipeline pipeline) {
    switch (pipeline) {
    case Pipeline::none:
        return "none";
    case Pipeline::selfconsistent:
        return "selfconsistent";
    case Pipeline::linear:
        return "linear";
    }
    return "?";
}

double effective_fugacity(const ThermoPoint& point, double u_prime, Statistics stats) {
    if (!(point.T > 0.0))
        throw domain_error("effective fugacity requires T > 0");
    const double z = std::exp((point.mu - u_prime) / point.T);
    if (stats.chi < 0 && z >= 1.0)
        throw divergence_error("bose effective fugacity reached " + std::to_string(z) +
                               " >= 1; the interaction does not stabilize this mu");
    return z;
}

MeanFieldState self_consistent_density(const TorusGeometry& geom, const ThermoPoint& point,
                                       const InteractionModel& model, Statistics stats,
                                       const SolverSettings& settings,
                                       const TruncationPolicy& trunc) {
    validate(point, stats);
    const double L = torus_length(geom);
    if (model.is_zero())
        return ideal_state(particle_number(geom, point, stats, trunc), L, point);

    auto number_at_shift = [&](double up) {
        const ThermoPoint pt = shifted(point, up);
        validate(pt, stats); // boson shift must keep mu_eff < 0
        return particle_number(geom, pt, stats, trunc);
    };
    MeanFieldState st = solve_state(number_at_shift, L, model, settings);
    st.z_eff = effective_fugacity(point, st.u_prime, stats);
    return st;
}

MeanFieldState mean_field_state(const TorusGeometry& geom, const ThermoPoint& point,
                                const InteractionModel& model, Statistics stats,
                                Pipeline pipeline, const SolverSettings& settings,
                                const TruncationPolicy& trunc) {
    validate(point, stats);
    if (pipeline == Pipeline::none || model.is_zero())
        return ideal_state(particle_number(geom, point, stats, trunc), torus_length(geom), point);
    if (pipeline == Pipeline::selfconsistent)
        return self_consistent_density(geom, point, model, stats, settings, trunc);

    // linear pipeline: the density is fixed once by the ideal-Fermi-gas form
    MeanFieldState st;
    st.n_bar = linear_approx_density(point, geom.M);
    st.u_prime = model.u_prime(st.n_bar);
    st.z_eff = effective_fugacity(point, st.u_prime, stats);
    st.N_bar = particle_number(geom, shifted(point, st.u_prime), stats, trunc);
    st.converged = true;
    st.residual = 0.0; // the defining relation holds by construction
    return st;
}

double grand_potential_interacting(const TorusGeometry& geom, const ThermoPoint& point,
                                   const InteractionModel& model, Statistics stats,
                                   Pipeline pipeline, const SolverSettings& settings,
                                   const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    const double L = torus_length(geom);
    return grand_potential_sum(geom, shifted(point, st.u_prime), stats, trunc) +
           L * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double internal_energy_interacting(const TorusGeometry& geom, const ThermoPoint& point,
                                   const InteractionModel& model, Statistics stats,
                                   Pipeline pipeline, const SolverSettings& settings,
                                   const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    return internal_energy(geom, shifted(point, st.u_prime), stats, trunc) +
           torus_length(geom) * model.u(st.n_bar);
}

double internal_energy_interacting_net(const TorusGeometry& geom, const ThermoPoint& point,
                                       const InteractionModel& model, Statistics stats,
                                       Pipeline pipeline, const SolverSettings& settings,
                                       const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    return internal_energy(geom, shifted(point, st.u_prime), stats, trunc) +
           torus_length(geom) * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double entropy_interacting(const TorusGeometry& geom, const ThermoPoint& point,
                           const InteractionModel& model, Statistics stats,
                           Pipeline pipeline, const SolverSettings& settings,
                           const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    return entropy(geom, shifted(point, st.u_prime), stats, trunc);
}

double particle_number_interacting(const TorusGeometry& geom, const ThermoPoint& point,
                                   const InteractionModel& model, Statistics stats,
                                   Pipeline pipeline, const SolverSettings& settings,
                                   const TruncationPolicy& trunc) {
    return mean_field_state(geom, point, model, stats, pipeline, settings, trunc).N_bar;
}

double number_variance_interacting(const TorusGeometry& geom, const ThermoPoint& point,
                                   const InteractionModel& model, Statistics stats,
                                   Pipeline pipeline, const SolverSettings& settings,
                                   const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    return number_variance(geom, shifted(point, st.u_prime), stats, trunc);
}

double heat_capacity_interacting(const TorusGeometry& geom, const ThermoPoint& point,
                                 const InteractionModel& model, Statistics stats,
                                 Pipeline pipeline, const SolverSettings& settings,
                                 const TruncationPolicy& trunc) {
    validate(point, stats);
    const double h = derivative_step_positive(point.T);
    return central_derivative(
        [&](double T) {
            return internal_energy_interacting(geom, {T, point.mu}, model, stats, pipeline,
                                               settings, trunc);
        },
        point.T, h);
}

double grand_potential_interacting_em(const TorusGeometry& geom, const ThermoPoint& point,
                                      const InteractionModel& model, Statistics stats,
                                      Pipeline pipeline, const SolverSettings& settings,
                                      const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    return grand_potential_em(geom, shifted(point, st.u_prime), stats) +
           torus_length(geom) * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double grand_potential_interacting_paper(const TorusGeometry& geom, const ThermoPoint& point,
                                         const InteractionModel& model, Statistics stats,
                                         Pipeline pipeline, const SolverSettings& settings,
                                         const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    return grand_potential_paper(geom, shifted(point, st.u_prime), stats) +
           torus_length(geom) * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double internal_energy_interacting_paper(const TorusGeometry& geom, const ThermoPoint& point,
                                         const InteractionModel& model, Statistics stats,
                                         Pipeline pipeline, const SolverSettings& settings,
                                         const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    const int chi = stats.chi;
    const double T = point.T;
    const double zeff = st.z_eff;
    const double weff = (point.mu - st.u_prime) / T;
    const double lam = thermal_wavelength(geom.M, T);
    const double pl = static_cast<double>(geom.p) * geom.circumference /
                      std::sqrt(topological_factor(geom));
    return chi * (point.mu * zeff / T) * paper_log_term(zeff, chi) +
           (lam * point.mu * zeff / T) * pl * statfns::h_from_log(0.5, weff, stats) +
           (1.5 * lam) * pl * statfns::h_from_log(1.5, weff, stats) -
           statfns::h_from_log(1.0, weff, stats) +
           torus_length(geom) * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double particle_number_interacting_paper(const TorusGeometry& geom, const ThermoPoint& point,
                                         const InteractionModel& model, Statistics stats,
                                         Pipeline pipeline, const SolverSettings& settings,
                                         const TruncationPolicy& trunc) {
    const MeanFieldState st = mean_field_state(geom, point, model, stats, pipeline, settings, trunc);
    const int chi = stats.chi;
    const double T = point.T;
    const double zeff = st.z_eff;
    const double weff = (point.mu - st.u_prime) / T;
    const double lam = thermal_wavelength(geom.M, T);
    const double pl = static_cast<double>(geom.p) * geom.circumference /
                      std::sqrt(topological_factor(geom));
    return (chi * zeff / T) * pl * paper_log_term(zeff, chi) +
           (lam * zeff / T) * pl * statfns::h_from_log(1.5, weff, stats);
}

MeanFieldState ring_self_consistent_density(const RingGeometry& geom, const ThermoPoint& point,
                                            const InteractionModel& model, Statistics stats,
                                            const SolverSettings& settings,
                                            const TruncationPolicy& trunc) {
    validate(point, stats);
    const double L = ring_length(geom);
    if (model.is_zero())
        return ideal_state(ring_particle_number(geom, point, stats, trunc), L, point);

    auto number_at_shift = [&](double up) {
        const ThermoPoint pt = shifted(point, up);
        validate(pt, stats);
        return ring_particle_number(geom, pt, stats, trunc);
    };
    MeanFieldState st = solve_state(number_at_shift, L, model, settings);
    st.z_eff = effective_fugacity(point, st.u_prime, stats);
    return st;
}

double ring_grand_potential_interacting(const RingGeometry& geom, const ThermoPoint& point,
                                        const InteractionModel& model, Statistics stats,
                                        const SolverSettings& settings,
                                        const TruncationPolicy& trunc) {
    const MeanFieldState st =
        ring_self_consistent_density(geom, point, model, stats, settings, trunc);
    const double L = ring_length(geom);
    return ring_grand_potential_em(geom, shifted(point, st.u_prime), stats) +
           L * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double ring_grand_potential_interacting_direct(const RingGeometry& geom, const ThermoPoint& point,
                                               const InteractionModel& model, Statistics stats,
                                               const SolverSettings& settings,
                                               const TruncationPolicy& trunc) {
    const MeanFieldState st =
        ring_self_consistent_density(geom, point, model, stats, settings, trunc);
    const double L = ring_length(geom);
    return ring_grand_potential_sum(geom, shifted(point, st.u_prime), stats, trunc) +
           L * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double ring_grand_potential_interacting_paper(const RingGeometry& geom, const ThermoPoint& point,
                                              const InteractionModel& model, Statistics stats,
                                              const SolverSettings& settings,
                                              const TruncationPolicy& trunc) {
    const MeanFieldState st =
        ring_self_consistent_density(geom, point, model, stats, settings, trunc);
    const double L = ring_length(geom);
    const double lam = thermal_wavelength(geom.M, point.T);
    const double weff = (point.mu - st.u_prime) / point.T;
    return (L / lam) * statfns::h_from_log(1.5, weff, stats) -
           statfns::h_from_log(1.0, weff, stats) +
           L * model.u(st.n_bar) - st.u_prime * st.N_bar;
}

double linear_approx_density(const ThermoPoint& point, double M) {
    if (!(point.T > 0.0) || !(M > 0.0))
        throw domain_error("linear_approx_density requires T > 0 and M > 0");
    const double w = point.mu / point.T;
    return (1.0 / std::sqrt(2.0)) *
           std::pow(M * point.T / std::numbers::pi, 1.5) *
           statfns::h_from_log(1.5, w, Statistics::fermions());
}

double fermi_level_solve(const TorusGeometry& geom, double T, double N_target,
                         const InteractionModel& model, Pipeline pipeline,
                         const SolverSettings& settings, const TruncationPolicy& trunc) {
    if (!(N_target > 0.0))
        throw domain_error("fermi_level_solve requires a positive target particle number");
    if (!(T > 0.0))
        throw domain_error("fermi_level_solve requires T > 0");
    const Statistics stats = Statistics::fermions();

    auto mismatch = [&](double mu) {
        return particle_number_interacting(geom, {T, mu}, model, stats, pipeline, settings,
                                           trunc) -
               N_target;
    };

    // N is monotone in mu; expand around the zero-T filling estimate
    const double c = torus_level_coefficient(geom);
    const double half = 0.5 * (N_target + 1.0);
    double lo = -std::max(1.0, 20.0 * T);
    double hi = c * half * half + 10.0 * T + 1.0;
    int expansions = 0;
    while (mismatch(lo) > 0.0) {
        lo = 2.0 * lo - 1.0;
        if (++expansions > 60)
            throw no_solution_error("no chemical potential this low reaches N=" +
                                    std::to_string(N_target));
    }
    while (mismatch(hi) < 0.0) {
        hi = 2.0 * hi + 1.0;
        if (++expansions > 60)
            throw no_solution_error("bracket expansion failed: N(mu) stays below " +
                                    std::to_string(N_target) + " up to mu=" +
                                    std::to_string(hi));
    }
    return solve_root(mismatch, lo, hi, settings);
}

} // namespace knotgas
