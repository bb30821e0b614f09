#include "cylhardy/constants.hpp"

#include "cylhardy/errors.hpp"
#include "cylhardy/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cylhardy {

namespace {

constexpr double kBranchTol = 1e-12;

void require_interp_inputs(double theta, double p, double sigma) {
    if (!(p > 2.0)) throw_domain("k_interp requires p > 2");
    if (!(sigma > 0.0)) throw_domain("k_interp requires sigma > 0");
    const double vt1 = vartheta(p, 1);
    if (theta < vt1 - kBranchTol) throw_domain("k_interp requires theta >= vartheta(p,1) = " + std::to_string(vt1));
    if (theta > 1.0 + kBranchTol) throw_domain("k_interp requires theta <= 1");
}

// D = 2 + (2 theta - 1) p, written so it vanishes exactly at the endpoint.
double d_factor(double theta, double p) {
    return 2.0 * p * (theta - vartheta(p, 1));
}

double log_i2(double p) {
    const double t = 2.0 / (p - 2.0);
    return 0.5 * std::log(M_PI) + log_gamma_fn(t) - log_gamma_fn(t + 0.5);
}

} // namespace

double k_interp(double theta, double p, double sigma) {
    require_interp_inputs(theta, p, sigma);

    const double li2 = log_i2(p);
    const double lip = std::log(4.0 / (p + 2.0)) + li2;
    const double lj2 = std::log(4.0 / ((p + 2.0) * (p - 2.0))) + li2;

    double log_h = 0.0;
    const double vt1 = vartheta(p, 1);
    if (theta > vt1 + kBranchTol) {
        const double dd = d_factor(theta, p);
        log_h = ((p - 2.0) / (2.0 * p)) * std::log(dd / ((p - 2.0) * sigma * sigma))
              + theta * std::log(2.0 * p * theta * sigma * sigma / dd);
    }
    // theta == vartheta(p,1): h = 1 and the constant is sigma-independent.

    const double log_k = (2.0 / p) * lip - log_h
                       - (0.5 - 1.0 / p) * lj2 - (0.5 + 1.0 / p) * li2;
    return std::exp(log_k);
}

double lambda_extremal(double theta, double p, double sigma) {
    require_interp_inputs(theta, p, sigma);
    if (theta <= vartheta(p, 1) + kBranchTol)
        throw_domain("no extremal at theta = vartheta(p,1); lambda_extremal requires theta > vartheta(p,1)");
    return 0.5 * (p - 2.0) * sigma * std::sqrt((p + 2.0) / d_factor(theta, p));
}

double c_star_interp(const Params& params) {
    if (params.mode != Mode::Interpolation)
        throw_domain("c_star_interp requires interpolation-mode parameters");
    if (params.d < 2)
        throw_domain("c_star_interp requires d >= 2 (for d = 1 use k_interp directly)");
    const double log_k = std::log(k_interp(params.theta, params.p, params.sigma));
    const double log_area = log_sphere_area(params.d);
    return std::exp(log_k - ((params.p - 2.0) / params.p) * log_area);
}

double c_hs(double p, int d) {
    if (d < 3) throw_domain("c_hs requires d >= 3");
    const double p_crit = 2.0 * d / (d - 2.0);
    if (!(p >= 2.0) || p > p_crit * (1.0 + 1e-12))
        throw_domain("c_hs requires 2 <= p <= 2d/(d-2)");
    if (p == 2.0) return 4.0 / ((d - 2.0) * (d - 2.0));
    return c_star_interp(Params::interpolation(d, 0.0, p, 1.0));
}

double sobolev_constant(int d) {
    if (d < 3) throw_domain("sobolev_constant requires d >= 3");
    const double log_gamma_ratio = log_gamma_fn(static_cast<double>(d)) - log_gamma_fn(0.5 * d);
    return std::exp((2.0 / d) * log_gamma_ratio) / (M_PI * d * (d - 2.0));
}

double k_log_hardy(double gamma, double sigma) {
    if (!(sigma > 0.0)) throw_domain("k_log_hardy requires sigma > 0");
    if (gamma < 0.25) throw_domain("k_log_hardy requires gamma >= 1/4");
    const double half_log_2pie = 0.5 * std::log(2.0 * M_PI * std::exp(1.0));
    if (gamma == 0.25) return 2.0 * gamma * std::log(gamma) + half_log_2pie;
    const double q = 4.0 * gamma - 1.0;
    return 2.0 * gamma * std::log(gamma) - 0.5 * q * std::log(q / (4.0 * sigma * sigma)) + half_log_2pie;
}

double c_star_glh(double gamma, double a, int d) {
    if (d < 1) throw_domain("c_star_glh requires d >= 1");
    if (gamma < 0.25) throw_domain("c_star_glh requires gamma >= 1/4");
    const double sigma = 0.5 * (d - 2.0) - a;
    if (!(sigma > 0.0)) throw_domain("c_star_glh requires a < (d-2)/2");

    double log_base = log_gamma_fn(0.5 * d) - 0.5 * (std::log(8.0) + (d + 1.0) * std::log(M_PI) + 1.0);
    // log_base = -log|S^(d-1)| - (1/2) log(2 pi e); the line d = 1 carries
    // no sphere factor.
    if (d == 1) log_base += std::log(2.0);
    if (gamma == 0.25) {
        // 4 Gamma(d/2)^2 / (8 pi^(d+1) e)
        return std::exp(std::log(4.0) + 2.0 * log_base);
    }
    const double q = 4.0 * gamma - 1.0;
    const double log_c = -std::log(gamma)
                       + (1.0 / (2.0 * gamma)) * log_base
                       + (q / (4.0 * gamma)) * std::log(q / (4.0 * sigma * sigma));
    return std::exp(log_c);
}

double c_star_lh(int d) {
    if (d < 3) throw_domain("c_star_lh requires d >= 3");
    const double log_c = std::log(4.0 / d)
                       + (2.0 / d) * log_gamma_fn(0.5 * d)
                       - std::log(M_PI)
                       - (1.0 / d) * std::log(8.0 * M_PI * std::exp(1.0))
                       + (1.0 - 1.0 / d) * std::log((d - 1.0) / ((d - 2.0) * (d - 2.0)));
    return std::exp(log_c);
}

double k_d_sigma(int d, double sigma) {
    if (d < 2) throw_domain("k_d_sigma requires d >= 2");
    if (!(sigma > 0.0)) throw_domain("k_d_sigma requires sigma > 0");
    // 1/2 log(2 pi e^2 sigma^2 |S^(d-1)|^2)
    return 0.5 * std::log(2.0 * M_PI) + 1.0 + std::log(sigma) + log_sphere_area(d);
}

namespace {

// log of the chain bound at interpolation level k in (0,2):
//   (1 - k/p) log C*(1, P_k, a) + 2 (k/p + theta - 1) log(2/(d-2-2a)),
// with P_k = 2(p-k)/(2-k).
double log_chain_term(double k, const Params& params) {
    const double p = params.p;
    const double pk = 2.0 * (p - k) / (2.0 - k);
    const double log_c = std::log(c_star_interp(Params::interpolation(params.d, params.a, pk, 1.0)));
    const double log_hardy_half = std::log(1.0 / params.sigma);
    return (1.0 - k / p) * log_c + 2.0 * (k / p + params.theta - 1.0) * log_hardy_half;
}

bool radial_known_optimal(int d, double a) {
    return d >= 3 && a >= 0.0;
}

} // namespace

UpperBound upper_bound_interp(const Params& params, int k_grid) {
    if (params.mode != Mode::Interpolation)
        throw_domain("upper_bound_interp requires interpolation-mode parameters");
    const int d = params.d;
    if (d < 2) throw_domain("upper_bound_interp requires d >= 2");
    if (k_grid < 1) throw_domain("upper_bound_interp requires k_grid >= 1");

    const double margin = 1e-9;
    double k_lo = std::max(0.0, (1.0 - params.theta) * params.p) + margin;
    double k_hi = 2.0 - margin;
    if (d >= 3) k_hi = std::min(k_hi, d - 0.5 * (d - 2.0) * params.p - margin);
    if (!(k_lo < k_hi))
        throw_domain("upper_bound_interp: empty admissible interpolation range for these parameters");

    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= k_grid; ++j) {
        const double k = k_lo + (k_hi - k_lo) * j / k_grid;
        best = std::min(best, log_chain_term(k, params));
    }
    return {std::exp(best), !radial_known_optimal(d, params.a)};
}

UpperBound upper_bound_glh(double gamma, double a, int d) {
    if (d < 2) throw_domain("upper_bound_glh requires d >= 2");
    const double sigma = 0.5 * (d - 2.0) - a;
    if (!(sigma > 0.0)) throw_domain("upper_bound_glh requires a < (d-2)/2");
    const double gamma_min = d / 4.0;
    if (gamma < gamma_min || (d == 2 && gamma <= 0.5))
        throw_domain("upper_bound_glh requires gamma >= d/4 (strictly above 1/2 when d = 2)");
    const double pk = 4.0 * gamma / (2.0 * gamma - 1.0);
    const double value = c_star_interp(Params::interpolation(d, a, pk, 1.0));
    return {value, !radial_known_optimal(d, a)};
}

LinearizationCoeffs linearization_coeffs(const Params& params) {
    if (params.mode != Mode::Interpolation)
        throw_domain("linearization_coeffs requires interpolation-mode parameters");
    const double p = params.p;
    const double theta = params.theta;
    const double sigma = params.sigma;
    const double dd = d_factor(theta, p);
    if (!(theta > vartheta(p, 1) + kBranchTol))
        throw_domain("linearization_coeffs requires theta > vartheta(p,1): no extremal to linearize around");

    LinearizationCoeffs c;
    c.kappa = sigma * sigma * p * (p - 1.0) * (p + 2.0) / (2.0 * dd);
    c.mu = sigma * sigma * (p + 2.0) / dd;
    c.lambda = lambda_extremal(theta, p, sigma);
    const double i2 = cosh_moment(4.0 / (p - 2.0));
    c.nu = 4.0 * p * sigma * sigma * (1.0 - theta) * c.lambda / (dd * theta * i2);
    return c;
}

double eig_interp(int i, int j, const Params& params) {
    if (i < 0 || j < 0) throw_domain("eig_interp requires i >= 0, j >= 0");
    const LinearizationCoeffs c = linearization_coeffs(params);
    const double r = std::sqrt(1.0 + 4.0 * c.kappa / (c.lambda * c.lambda));
    if (r < 2.0 * j + 1.0 - 1e-12)
        throw_domain("eig_interp: mode j = " + std::to_string(j) + " lies outside the discrete spectrum");
    const double bind = r - (1.0 + 2.0 * j);
    return c.mu + static_cast<double>(i) * (params.d + i - 2.0)
         - 0.25 * c.lambda * c.lambda * bind * bind;
}

double eig_glh(int i, int j, double gamma, double a, int d) {
    if (i < 0 || j < 0) throw_domain("eig_glh requires i >= 0, j >= 0");
    if (d < 2) throw_domain("eig_glh requires d >= 2");
    if (!(gamma > 0.25)) throw_domain("eig_glh requires gamma > 1/4");
    const double sigma = 0.5 * (d - 2.0) - a;
    if (!(sigma > 0.0)) throw_domain("eig_glh requires a < (d-2)/2");
    const double big_a = 4.0 * sigma * sigma / (4.0 * gamma - 1.0);
    return static_cast<double>(i) * (d + i - 2.0) + big_a * (j - 1.0);
}

double theta_breaking(double a, double p, int d) {
    if (d < 2) throw_domain("theta_breaking requires d >= 2");
    if (!(p >= 2.0)) throw_domain("theta_breaking requires p >= 2");
    const double sigma = 0.5 * (d - 2.0) - a;
    if (!(sigma > 0.0)) throw_domain("theta_breaking requires a < (d-2)/2");
    const double quad = d * static_cast<double>(d) + 4.0 * a * a - 4.0 * a * (d - 2.0);
    return (p - 2.0) / (32.0 * (d - 1.0) * p)
         * ((p + 2.0) * (p + 2.0) * quad - 4.0 * p * (p + 4.0) * (d - 1.0));
}

double a_minus(double p, int d) {
    if (d < 2) throw_domain("a_minus requires d >= 2");
    if (!(p >= 2.0)) throw_domain("a_minus requires p >= 2");
    return 0.5 * (d - 2.0) - 2.0 * (d - 1.0) / (p + 2.0);
}

Region region_interp(const Params& params) {
    if (params.mode != Mode::Interpolation)
        throw_domain("region_interp requires interpolation-mode parameters");
    if (params.d < 2) throw_domain("region_interp requires d >= 2");
    if (params.d >= 3) {
        const double p_crit = 2.0 * params.d / (params.d - 2.0);
        if (params.p >= p_crit * (1.0 - 1e-12)) return Region::NotDecided;
    }
    const double cap = theta_breaking(params.a, params.p, params.d);
    return params.theta < cap ? Region::Breaking : Region::NotDecided;
}

Region region_glh(double gamma, double a, int d) {
    if (d < 2) throw_domain("region_glh requires d >= 2");
    if (gamma < 0.25) throw_domain("region_glh requires gamma >= 1/4");
    const double sigma = 0.5 * (d - 2.0) - a;
    if (!(sigma > 0.0)) throw_domain("region_glh requires a < (d-2)/2");
    const double gamma_low = d / 4.0;
    if (gamma < gamma_low || (d == 2 && gamma <= 0.5))
        throw_domain("region_glh requires gamma >= d/4 (strictly above 1/2 when d = 2)");
    const double gamma_high = 0.25 * (1.0 + 4.0 * sigma * sigma / (d - 1.0));
    return gamma < gamma_high ? Region::Breaking : Region::NotDecided;
}

} // namespace cylhardy
