#include "knotgas/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace knotgas {

std::vector<double> TemperatureGrid::values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        v.push_back(start);
        return v;
    }
    if (spacing == Spacing::linear) {
        const double step = (stop - start) / (points - 1);
        for (int i = 0; i < points; ++i)
            v.push_back(start + step * i);
    } else {
        const double ratio = std::log(stop / start) / (points - 1);
        for (int i = 0; i < points; ++i)
            v.push_back(start * std::exp(ratio * i));
    }
    v.back() = stop; // pin the endpoint against accumulated rounding
    return v;
}

TemperatureGrid parse_temperature_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw domain_error("temperature grid must be start:stop:count[:log|:linear], got '" +
                           text + "'");
    TemperatureGrid grid;
    try {
        grid.start = std::stod(parts[0]);
        grid.stop = std::stod(parts[1]);
        grid.points = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw domain_error("could not parse temperature grid '" + text + "'");
    }
    grid.spacing = Spacing::log;
    if (parts.size() == 4) {
        if (parts[3] == "log")
            grid.spacing = Spacing::log;
        else if (parts[3] == "linear")
            grid.spacing = Spacing::linear;
        else
            throw domain_error("unknown grid spacing '" + parts[3] + "'");
    }
    return grid;
}

TorusGeometry RunConfig::geometry(int alpha) const {
    return make_torus_geometry(R, d, p, alpha, M);
}

InteractionModel RunConfig::model() const {
    return InteractionModel{interaction};
}

double RunConfig::effective_mu() const {
    if (mu)
        return *mu;
    return stats.is_fermion() ? 1.0 : -0.1;
}

Statistics parse_statistics(const std::string& text) {
    if (text == "fermion" || text == "fermions")
        return Statistics::fermions();
    if (text == "boson" || text == "bosons")
        return Statistics::bosons();
    throw domain_error("statistics must be 'fermion' or 'boson', got '" + text + "'");
}

Channel parse_channel(const std::string& text) {
    if (text == "direct")
        return Channel::direct;
    if (text == "euler_maclaurin")
        return Channel::euler_maclaurin;
    if (text == "paper_literal")
        return Channel::paper_literal;
    throw domain_error("channel must be direct, euler_maclaurin or paper_literal; got '" +
                       text + "'");
}

Pipeline parse_pipeline(const std::string& text) {
    if (text == "none")
        return Pipeline::none;
    if (text == "selfconsistent")
        return Pipeline::selfconsistent;
    if (text == "linear")
        return Pipeline::linear;
    throw domain_error("pipeline must be none, selfconsistent or linear; got '" + text + "'");
}

void finalize_and_validate(RunConfig& config) {
    if (config.alphas.empty())
        throw domain_error("alpha list must not be empty");
    if (config.mu && config.N_target)
        throw domain_error("exactly one of mu / N_target may be given, not both");

    // construct every geometry once so invalid ones are named up front
    for (int alpha : config.alphas)
        (void)config.geometry(alpha);

    const TemperatureGrid& g = config.temps;
    if (!(g.start > 0.0) || !(g.stop > 0.0))
        throw domain_error("temperature grid must be strictly positive");
    if (g.points < 1)
        throw domain_error("temperature grid needs at least one point");
    if (g.points > 1 && !(g.stop > g.start))
        throw domain_error("temperature grid must be strictly increasing");

    if (!config.N_target) {
        const double mu = config.effective_mu();
        if (!config.stats.is_fermion() && !(mu < -kBosonMuGuard))
            throw divergence_error("bosons require mu < 0 (fugacity z >= 1 diverges); got mu=" +
                                   std::to_string(mu));
    } else if (!(*config.N_target > 0.0)) {
        throw domain_error("N_target must be positive");
    }

    if (config.channels.empty())
        throw domain_error("channel list must not be empty");
    if (config.pipelines.empty())
        throw domain_error("pipeline list must not be empty");
    if (config.spectrum_levels < 1)
        throw domain_error("spectrum needs at least one level");

    validate(config.solver);
    validate(config.trunc);
}

} // namespace knotgas
