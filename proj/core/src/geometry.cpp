#include "knotgas/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace knotgas {

Statistics statistics_from_chi(int chi) {
    if (chi != +1 && chi != -1)
        throw domain_error("statistics discriminant chi must be +1 (fermions) or -1 (bosons), got " +
                           std::to_string(chi));
    return Statistics{chi};
}

TorusGeometry make_torus_geometry(double R, double d, int p, int alpha, double M) {
    if (!(d > 0.0) || !(R > d))
        throw geometry_error("invalid geometry: torus radii must satisfy R > d > 0 "
                             "(arccosh(R/d) undefined otherwise); got R=" +
                             std::to_string(R) + ", d=" + std::to_string(d));
    if (p < 1)
        throw geometry_error("invalid geometry: loop count p must be a positive integer");
    if (alpha < 1)
        throw geometry_error("invalid geometry: winding number alpha must be a positive integer");
    if (!(M > 0.0))
        throw geometry_error("invalid geometry: particle mass must be positive");

    TorusGeometry g;
    g.R = R;
    g.d = d;
    g.p = p;
    g.alpha = alpha;
    g.M = M;
    g.eta = std::acosh(R / d);
    g.a = std::sqrt(R * R - d * d);
    g.circumference = 2.0 * std::numbers::pi * g.a;

    const double sh2 = (R / d) * (R / d) - 1.0; // sinh^2(eta)
    const double denom = static_cast<double>(alpha) * alpha + sh2 - 1.0;
    if (!(denom > 0.0))
        throw geometry_error("degenerate topology: alpha^2 + sinh^2(eta) - 1 = " +
                             std::to_string(denom) + " must be positive");
    return g;
}

RingGeometry make_ring_geometry(double R, double M) {
    if (!(R > 0.0))
        throw geometry_error("invalid geometry: ring radius must be positive");
    if (!(M > 0.0))
        throw geometry_error("invalid geometry: particle mass must be positive");
    return RingGeometry{R, M};
}

double topological_factor(const TorusGeometry& geom) {
    const double ch = std::cosh(geom.eta);
    const double sh = std::sinh(geom.eta);
    const double alpha = static_cast<double>(geom.alpha);
    return ch * ch / (alpha * alpha + sh * sh - 1.0);
}

double torus_level_coefficient(const TorusGeometry& geom) {
    const double p = static_cast<double>(geom.p);
    return topological_factor(geom) / (2.0 * geom.M * geom.a * geom.a * p * p);
}

double torus_level(long n, const TorusGeometry& geom) {
    if (n < 0)
        throw domain_error("level index must be nonnegative");
    const double x = static_cast<double>(n);
    return x * x * torus_level_coefficient(geom);
}

double ring_level_coefficient(const RingGeometry& geom) {
    return 1.0 / (2.0 * geom.M * geom.R * geom.R);
}

double ring_level(long k, const RingGeometry& geom) {
    if (k < 0)
        throw domain_error("level index must be nonnegative");
    const double x = static_cast<double>(k);
    return x * x * ring_level_coefficient(geom);
}

} // namespace knotgas
