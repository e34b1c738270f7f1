#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotgas/ensemble.hpp"
#include "knotgas/meanfield.hpp"

namespace knotgas {

enum class Spacing { linear, log };

/// Temperature grid specification, "start:stop:count[:log]" on the command
/// line.
struct TemperatureGrid {
    double start = 0.005;
    double stop = 1.0;
    int points = 60;
    Spacing spacing = Spacing::log;

    std::vector<double> values() const;
};

/// Parses "start:stop:count" or "start:stop:count:log" / ":linear".
TemperatureGrid parse_temperature_grid(const std::string& text);

/// Full description of one run. Defaults reproduce the figure-style
/// configuration: R=2, d=1, p=2, M=1, alpha in {1,5,7}, mu=1 eV for
/// fermions (-0.1 eV for bosons).
struct RunConfig {
    double R = 2.0;
    double d = 1.0;
    int p = 2;
    double M = 1.0;
    std::vector<int> alphas = {1, 5, 7};

    Statistics stats = Statistics::fermions();
    std::optional<double> mu;
    std::optional<double> N_target;
    TemperatureGrid temps;

    std::vector<double> interaction;  ///< u(n) coefficients, constant term first
    std::vector<Pipeline> pipelines = {Pipeline::selfconsistent};

    std::string out_dir = "out";
    std::vector<Channel> channels = {Channel::direct, Channel::euler_maclaurin,
                                     Channel::paper_literal};
    int spectrum_levels = 64;

    SolverSettings solver;
    TruncationPolicy trunc;
    int threads = 0; ///< 0 = hardware concurrency

    /// Geometry for one winding number (validates on construction).
    TorusGeometry geometry(int alpha) const;
    /// The interaction model (empty coefficient list = ideal).
    InteractionModel model() const;
    /// mu actually used: the configured one, or the statistics default.
    double effective_mu() const;
};

/// Fills statistics-dependent defaults and checks the cross-field
/// invariants; throws domain_error / geometry_error / divergence_error with
/// a diagnostic naming the violated invariant.
void finalize_and_validate(RunConfig& config);

Statistics parse_statistics(const std::string& text);
Channel parse_channel(const std::string& text);
Pipeline parse_pipeline(const std::string& text);

} // namespace knotgas
