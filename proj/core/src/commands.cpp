#include "knotgas/commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <map>

#include "knotgas/analysis.hpp"
#include "knotgas/csv.hpp"
#include "knotgas/parallel.hpp"

namespace knotgas {

namespace {

namespace fs = std::filesystem;

void ensure_out_dir(const RunConfig& config) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec)
        throw error("cannot create output directory " + config.out_dir + ": " + ec.message());
}

std::string out_path(const RunConfig& config, const std::string& name) {
    return (fs::path(config.out_dir) / name).string();
}

const char* pipeline_suffix(Pipeline p) {
    switch (p) {
    case Pipeline::none:
        return "ideal";
    case Pipeline::selfconsistent:
        return "sc";
    case Pipeline::linear:
        return "lin";
    }
    return "?";
}

InteractionModel compare_model(const RunConfig& config) {
    if (!config.interaction.empty())
        return config.model();
    // documented default for figure-style comparisons
    return InteractionModel::quadratic(kDefaultQuadraticCoupling);
}

struct InteractingRow {
    double Phi = 0.0, U = 0.0, Unet = 0.0, S = 0.0, C = 0.0, N = 0.0, varN = 0.0;
    bool failed = false;
    std::string message;
};

InteractingRow evaluate_interacting(const TorusGeometry& geom, const ThermoPoint& pt,
                                    const InteractionModel& model, const RunConfig& config,
                                    Pipeline pipeline) {
    InteractingRow row;
    try {
        row.Phi = grand_potential_interacting(geom, pt, model, config.stats, pipeline,
                                              config.solver, config.trunc);
        row.U = internal_energy_interacting(geom, pt, model, config.stats, pipeline,
                                            config.solver, config.trunc);
        row.Unet = internal_energy_interacting_net(geom, pt, model, config.stats, pipeline,
                                                   config.solver, config.trunc);
        row.S = entropy_interacting(geom, pt, model, config.stats, pipeline, config.solver,
                                    config.trunc);
        row.C = heat_capacity_interacting(geom, pt, model, config.stats, pipeline,
                                          config.solver, config.trunc);
        row.N = particle_number_interacting(geom, pt, model, config.stats, pipeline,
                                            config.solver, config.trunc);
        row.varN = number_variance_interacting(geom, pt, model, config.stats, pipeline,
                                               config.solver, config.trunc);
    } catch (const std::exception& e) {
        row.failed = true;
        row.message = e.what();
        row.Phi = row.U = row.Unet = row.S = row.C = row.N = row.varN =
            std::numeric_limits<double>::quiet_NaN();
    }
    return row;
}

} // namespace

int cmd_spectrum(const RunConfig& config) {
    try {
        ensure_out_dir(config);
        CsvWriter csv(out_path(config, "spectrum.csv"), {"n", "alpha", "energy_eV"});
        for (int alpha : config.alphas) {
            const TorusGeometry geom = config.geometry(alpha);
            for (int n = 0; n < config.spectrum_levels; ++n)
                csv.write_row({std::to_string(n), std::to_string(alpha),
                               format_double(torus_level(n, geom))});
        }
    } catch (const std::exception& e) {
        std::cerr << "spectrum: " << e.what() << "\n";
        return kExitNumericError;
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& config) {
    std::size_t failed_points = 0;
    std::size_t total_points = 0;
    try {
        ensure_out_dir(config);
        const std::vector<double> grid = config.temps.values();
        const double mu = config.effective_mu();

        // direct-channel results per alpha feed the summary detectors
        std::map<int, SweepResult> direct;

        for (int alpha : config.alphas) {
            const TorusGeometry geom = config.geometry(alpha);
            const std::string name = std::string("sweep_") + config.stats.name() + "_alpha" +
                                     std::to_string(alpha) + ".csv";
            CsvWriter csv(out_path(config, name),
                          {"T", "Phi", "U", "S", "C", "N", "varN", "channel"});
            for (Channel channel : config.channels) {
                const SweepResult res =
                    sweep(geom, grid, mu, config.stats, channel, config.trunc, config.threads);
                total_points += grid.size();
                for (const auto& f : res.failures) {
                    ++failed_points;
                    std::cerr << "sweep: alpha=" << alpha << " channel="
                              << channel_name(channel) << " T=" << grid[f.index] << ": "
                              << f.message << "\n";
                }
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const ThermoQuantities& q = res.rows[i];
                    csv.write_row({format_double(grid[i]), format_double(q.grand_potential),
                                   format_double(q.internal_energy), format_double(q.entropy),
                                   format_double(q.heat_capacity),
                                   format_double(q.particle_number),
                                   format_double(q.number_variance), channel_name(channel)});
                }
                if (channel == Channel::direct)
                    direct.emplace(alpha, res);
            }
            if (!direct.count(alpha))
                direct.emplace(alpha, sweep(geom, grid, mu, config.stats, Channel::direct,
                                            config.trunc, config.threads));
        }

        // summary: pairwise internal-energy crossings and N minima
        CsvWriter summary(out_path(config, std::string("sweep_summary_") + config.stats.name() +
                                               ".csv"),
                          {"kind", "alpha_a", "alpha_b", "T_eV", "value"});
        auto curve = [&](int alpha, auto member) {
            std::vector<double> v;
            for (const auto& q : direct.at(alpha).rows)
                v.push_back(q.*member);
            return v;
        };
        for (std::size_t i = 0; i < config.alphas.size(); ++i) {
            for (std::size_t j = i + 1; j < config.alphas.size(); ++j) {
                const int a = config.alphas[i];
                const int b = config.alphas[j];
                const auto ua = curve(a, &ThermoQuantities::internal_energy);
                const auto ub = curve(b, &ThermoQuantities::internal_energy);
                for (const Crossing& c : find_crossings(grid, ua, ub))
                    summary.write_row({"inversion", std::to_string(a), std::to_string(b),
                                       format_double(c.T), format_double(c.value)});
            }
        }
        for (int alpha : config.alphas) {
            const auto n_curve = curve(alpha, &ThermoQuantities::particle_number);
            if (auto m = interior_minimum(grid, n_curve))
                summary.write_row({"n_minimum", std::to_string(alpha), "",
                                   format_double(m->T), format_double(m->value)});
        }
    } catch (const std::exception& e) {
        std::cerr << "sweep: " << e.what() << "\n";
        return kExitNumericError;
    }
    if (failed_points == 0)
        return kExitOk;
    return failed_points == total_points ? kExitNumericError : kExitPartialFailure;
}

int cmd_compare(const RunConfig& config) {
    std::size_t failed_points = 0;
    try {
        ensure_out_dir(config);
        const std::vector<double> grid = config.temps.values();
        const double mu = config.effective_mu();
        const InteractionModel model = compare_model(config);

        for (int alpha : config.alphas) {
            const TorusGeometry geom = config.geometry(alpha);

            std::vector<std::string> header = {"T",       "Phi_ideal", "U_ideal", "S_ideal",
                                               "C_ideal", "N_ideal",   "varN_ideal"};
            for (Pipeline p : config.pipelines) {
                const std::string sfx = pipeline_suffix(p);
                for (const char* q : {"Phi_", "U_", "Unet_", "S_", "C_", "N_", "varN_"})
                    header.push_back(q + sfx);
                for (const char* q : {"dPhi_", "dU_", "dUnet_", "dS_", "dC_", "dN_", "dvarN_"})
                    header.push_back(q + sfx);
            }
            const std::string name = std::string("compare_") + config.stats.name() + "_alpha" +
                                     std::to_string(alpha) + ".csv";
            CsvWriter csv(out_path(config, name), header);

            const SweepResult ideal = sweep(geom, grid, mu, config.stats, Channel::direct,
                                            config.trunc, config.threads);
            for (const auto& f : ideal.failures) {
                ++failed_points;
                std::cerr << "compare: ideal alpha=" << alpha << " T=" << grid[f.index] << ": "
                          << f.message << "\n";
            }

            // interacting rows, one vector per pipeline, parallel over the grid
            std::vector<std::vector<InteractingRow>> rows(config.pipelines.size());
            for (std::size_t ip = 0; ip < config.pipelines.size(); ++ip) {
                rows[ip].assign(grid.size(), InteractingRow{});
                const Pipeline pipeline = config.pipelines[ip];
                parallel_for(grid.size(), config.threads, [&](std::size_t i) {
                    rows[ip][i] = evaluate_interacting(geom, {grid[i], mu}, model, config,
                                                       pipeline);
                });
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    if (rows[ip][i].failed) {
                        ++failed_points;
                        std::cerr << "compare: " << pipeline_name(pipeline) << " alpha=" << alpha
                                  << " T=" << grid[i] << ": " << rows[ip][i].message << "\n";
                    }
                }
            }

            for (std::size_t i = 0; i < grid.size(); ++i) {
                const ThermoQuantities& q0 = ideal.rows[i];
                std::vector<std::string> row = {
                    format_double(grid[i]),          format_double(q0.grand_potential),
                    format_double(q0.internal_energy), format_double(q0.entropy),
                    format_double(q0.heat_capacity), format_double(q0.particle_number),
                    format_double(q0.number_variance)};
                for (std::size_t ip = 0; ip < config.pipelines.size(); ++ip) {
                    const InteractingRow& r = rows[ip][i];
                    for (double v : {r.Phi, r.U, r.Unet, r.S, r.C, r.N, r.varN})
                        row.push_back(format_double(v));
                    row.push_back(format_double(r.Phi - q0.grand_potential));
                    row.push_back(format_double(r.U - q0.internal_energy));
                    row.push_back(format_double(r.Unet - q0.internal_energy));
                    row.push_back(format_double(r.S - q0.entropy));
                    row.push_back(format_double(r.C - q0.heat_capacity));
                    row.push_back(format_double(r.N - q0.particle_number));
                    row.push_back(format_double(r.varN - q0.number_variance));
                }
                csv.write_row(row);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "compare: " << e.what() << "\n";
        return kExitNumericError;
    }
    return failed_points == 0 ? kExitOk : kExitPartialFailure;
}

int cmd_fermi(const RunConfig& config) {
    std::size_t failed_points = 0;
    try {
        if (!config.N_target)
            throw domain_error("fermi requires N_target");
        if (!config.stats.is_fermion())
            throw domain_error("the Fermi level is a fermionic quantity; use --stats fermion");
        ensure_out_dir(config);
        const std::vector<double> grid = config.temps.values();
        const InteractionModel model = config.model();
        const Pipeline pipeline = config.pipelines.front();

        CsvWriter csv(out_path(config, std::string("fermi_") + config.stats.name() + ".csv"),
                      {"T", "alpha", "mu0_ideal", "mu0_interacting"});
        for (int alpha : config.alphas) {
            const TorusGeometry geom = config.geometry(alpha);
            struct Pair {
                double ideal, interacting;
            };
            std::vector<Pair> solved(grid.size(),
                                     {std::numeric_limits<double>::quiet_NaN(),
                                      std::numeric_limits<double>::quiet_NaN()});
            std::vector<std::string> errors(grid.size());
            parallel_for(grid.size(), config.threads, [&](std::size_t i) {
                try {
                    solved[i].ideal =
                        fermi_level_solve(geom, grid[i], *config.N_target,
                                          InteractionModel::ideal(), Pipeline::none,
                                          config.solver, config.trunc);
                    solved[i].interacting =
                        fermi_level_solve(geom, grid[i], *config.N_target, model, pipeline,
                                          config.solver, config.trunc);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            });
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (!errors[i].empty()) {
                    ++failed_points;
                    std::cerr << "fermi: alpha=" << alpha << " T=" << grid[i] << ": "
                              << errors[i] << "\n";
                }
                csv.write_row({format_double(grid[i]), std::to_string(alpha),
                               format_double(solved[i].ideal),
                               format_double(solved[i].interacting)});
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "fermi: " << e.what() << "\n";
        return kExitNumericError;
    }
    return failed_points == 0 ? kExitOk : kExitPartialFailure;
}

} // namespace knotgas
