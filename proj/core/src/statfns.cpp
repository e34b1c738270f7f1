#include "knotgas/statfns.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace knotgas::statfns {

namespace {

constexpr double pi = std::numbers::pi;

// Fugacities within this window of z = 1 are treated as z = 1 on the boson
// side (quadrature degrades at the integrable endpoint singularity).
constexpr double kUnitFugacityWindow = 1e-12;

// 15-point Kronrod rule with embedded 7-point Gauss estimate.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
double gauss_kronrod_15(F&& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double x = hw * kXgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            resg += kWg[j / 2] * (f1 + f2);
    }
    err = std::abs((resk - resg) * hw);
    return resk * hw;
}

template <class F>
double adaptive_quadrature(F&& f, double a, double b, double tol, int depth = 0) {
    double err = 0.0;
    const double value = gauss_kronrod_15(f, a, b, err);
    if (err <= tol || depth >= 48)
        return value;
    const double m = 0.5 * (a + b);
    return adaptive_quadrature(f, a, m, 0.5 * tol, depth + 1) +
           adaptive_quadrature(f, m, b, 0.5 * tol, depth + 1);
}

// 1 / (e^{t-w} + chi) without forming e^{w}.
double occupancy_kernel(double t, double w, int chi) {
    const double x = t - w;
    if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + chi * e);
    }
    return 1.0 / (std::exp(x) + chi);
}

// Dirichlet eta(s) = sum_{k>=1} (-1)^{k+1} k^{-s} by the Cohen-Rodriguez
// Villegas-Zagier acceleration; full double precision for s > 0.
double dirichlet_eta(double s) {
    constexpr int n = 32;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::pow(static_cast<double>(k + 1), -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return acc / d;
}

// Bose h_sigma for z within kUnitFugacityWindow of 1, sigma > 1. Expansion
// around the endpoint: zeta(sigma) + Gamma(1-sigma) (-ln z)^{sigma-1}
// + zeta(sigma-1) ln z + O((ln z)^2); with |ln z| <= 1e-12 the neglected
// terms are far below double precision.
double bose_near_unit_fugacity(double sigma, double log_z) {
    const double w = std::min(log_z, 0.0);
    double value = riemann_zeta(sigma);
    const bool integer_sigma = std::abs(sigma - std::round(sigma)) < 1e-9;
    if (!integer_sigma && w < 0.0) {
        value += gamma_fn(1.0 - sigma) * std::pow(-w, sigma - 1.0);
        if (std::abs(sigma - 2.0) > 1e-9)
            value += riemann_zeta(sigma - 1.0) * w;
    }
    return value;
}

} // namespace

double fugacity(double mu, double T) {
    if (!(T > 0.0))
        throw domain_error("fugacity requires T > 0, got T=" + std::to_string(T));
    return std::exp(mu / T);
}

double gamma_fn(double x) {
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5)
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    x -= 1.0;
    double a = coef[0];
    for (int i = 1; i < 9; ++i)
        a += coef[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double riemann_zeta(double s) {
    if (!(s > 0.0) || s == 1.0)
        throw domain_error("riemann_zeta requires s > 0, s != 1");
    return dirichlet_eta(s) / (1.0 - std::pow(2.0, 1.0 - s));
}

double h_from_log(double sigma, double log_z, Statistics stats, double abs_tol) {
    if (!(sigma > 0.0))
        throw domain_error("h_sigma requires sigma > 0");
    if (!std::isfinite(log_z))
        throw domain_error("h_sigma requires a finite fugacity");
    if (!(abs_tol > 0.0))
        throw domain_error("h_sigma requires a positive tolerance");
    const int chi = stats.chi;
    const double w = log_z;

    if (chi < 0) {
        if (w > kUnitFugacityWindow)
            throw divergence_error("bose h_sigma diverges for z > 1 (z=" +
                                   std::to_string(std::exp(w)) + ")");
        if (w >= -kUnitFugacityWindow) {
            if (sigma <= 1.0)
                throw divergence_error("bose h_sigma(z -> 1) diverges for sigma <= 1");
            return bose_near_unit_fugacity(sigma, w);
        }
    }

    const double t0 = std::max(1.0, w);
    const double tol = 0.5 * abs_tol * gamma_fn(sigma);

    // head: t = s^2 on [0, t0]
    auto head = [=](double s) {
        const double t = s * s;
        return 2.0 * std::pow(s, 2.0 * sigma - 1.0) * occupancy_kernel(t, w, chi);
    };
    double integral = adaptive_quadrature(head, 0.0, std::sqrt(t0), tol);

    // tail: t = t0 - ln(1 - u) on [t0, inf)
    auto tail = [=](double u) {
        const double t = t0 - std::log1p(-u);
        return std::pow(t, sigma - 1.0) * occupancy_kernel(t, w, chi) / (1.0 - u);
    };
    integral += adaptive_quadrature(tail, 0.0, 1.0, tol);

    return integral / gamma_fn(sigma);
}

double h(double sigma, double z, Statistics stats, double abs_tol) {
    if (!(z > 0.0))
        throw domain_error("h_sigma requires z > 0, got z=" + std::to_string(z));
    return h_from_log(sigma, std::log(z), stats, abs_tol);
}

SeriesResult h_series_oracle(double sigma, double z, Statistics stats, int terms) {
    if (!(sigma > 0.0))
        throw domain_error("series route requires sigma > 0");
    if (terms < 1)
        throw domain_error("series route requires at least one term");
    if (z < 0.0 || z > 1.0)
        throw domain_error("series route converges only for 0 <= z <= 1");
    if (z == 1.0 && stats.chi < 0 && sigma <= 1.0)
        throw domain_error("series route at z = 1 requires sigma > 1 for bosons");
    if (z == 0.0)
        return {0.0, 0.0};

    // (-chi)^{k+1}: fermions alternate starting at +z, bosons stay positive.
    const double ratio = -static_cast<double>(stats.chi);
    double sum = 0.0;
    double zk = 1.0;
    double sign = 1.0;
    for (int k = 1; k <= terms; ++k) {
        zk *= z;
        sum += sign * zk / std::pow(static_cast<double>(k), sigma);
        sign *= ratio;
    }
    const double next = zk * z / std::pow(static_cast<double>(terms + 1), sigma);
    double bound;
    if (stats.chi > 0) {
        bound = next; // alternating series
    } else if (z < 1.0) {
        bound = next / (1.0 - z); // geometric majorant
    } else {
        // z = 1, sigma > 1: integral comparison for the monotone tail
        bound = std::pow(static_cast<double>(terms), 1.0 - sigma) / (sigma - 1.0);
    }
    return {sum, bound};
}

double log_occupancy_term(double z, Statistics stats) {
    if (!(z > 0.0))
        throw domain_error("log_occupancy_term requires z > 0");
    if (stats.chi > 0)
        return std::log1p(z);
    if (z >= 1.0)
        throw divergence_error("bose boundary term -ln(1 - z) diverges for z >= 1");
    return -std::log1p(-z);
}

} // namespace knotgas::statfns
