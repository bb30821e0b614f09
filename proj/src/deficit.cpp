#include "cylhardy/deficit.hpp"

#include "cylhardy/angular.hpp"
#include "cylhardy/constants.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cylhardy {

const char* inequality_name(InequalityId id) {
    switch (id) {
        case InequalityId::Interp1D: return "interp_1d";
        case InequalityId::GLH1D: return "glh_1d";
        case InequalityId::LSICylinder: return "lsi_cylinder";
        case InequalityId::Hardy: return "hardy";
        case InequalityId::HS: return "hardy_sobolev";
    }
    return "unknown";
}

namespace {

using GI = GridIntegral;

std::vector<double> strided(const std::vector<double>& v, int stride) {
    std::vector<double> out;
    out.reserve((v.size() - 1) / stride + 1);
    for (std::size_t k = 0; k < v.size(); k += stride) out.push_back(v[k]);
    return out;
}

// Centered differences inside, one-sided O(h^2) stencils at the ends.
std::vector<double> derivative(const std::vector<double>& f, double h) {
    const int n = static_cast<int>(f.size());
    std::vector<double> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (int k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - f[k - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

double l1_scale(const std::vector<double>& f, double h) {
    double acc = 0.0;
    for (double v : f) acc += std::fabs(v);
    return acc * h + 1e-300;
}

// Leveled Richardson on composite Simpson. `order` is the leading error
// exponent of a single-level estimate: 4 for plain sampled integrands,
// 2 when the integrand involves centered differences. Levels need
// n == 1 (mod 4) resp. (mod 8); degraded fallbacks stay conservative.
GI leveled(const std::function<double(int)>& estimate, int n, int order, double scale) {
    const bool two_levels = (n - 1) % 4 == 0 && n >= 9;
    const bool three_levels = (n - 1) % 8 == 0 && n >= 17;
    const double gain = std::pow(2.0, order);
    const double floor = 1e-15 * scale;

    const double j1 = estimate(1);
    if (!two_levels) return {j1, std::fabs(j1) * 1e-6 + floor};
    const double j2 = estimate(2);
    const double r1 = (gain * j1 - j2) / (gain - 1.0);
    if (!three_levels) return {r1, std::fabs(j1 - j2) / (gain - 1.0) + floor};
    const double j4 = estimate(4);
    const double r2 = (gain * j2 - j4) / (gain - 1.0);
    return {r1, std::fabs(r1 - r2) / 4.0 + floor};
}

// q: power of the profile in the integrand, controlling the tail width.
double tail_bound(const Profile& w, const std::vector<double>& integrand, double q) {
    const double edge = std::max(std::fabs(integrand.front()), std::fabs(integrand.back()));
    if (edge == 0.0) return 0.0;
    const double rate = q * w.decay_rate();
    if (w.decay() == DecayKind::Exponential) return 2.0 * edge / rate;
    return edge / (rate * w.half_width());
}

GI integrate_plain(const Profile& w, const std::vector<double>& integrand, double q) {
    auto est = [&](int stride) {
        return simpson(strided(integrand, stride), stride * w.h());
    };
    GI gi = leveled(est, w.n(), 4, l1_scale(integrand, w.h()));
    gi.error += tail_bound(w, integrand, q);
    return gi;
}

// int (w')^2, with the derivative recomputed per level so Richardson
// removes the O(h^2) differencing error.
GI integrate_derivsq(const Profile& w) {
    auto est = [&](int stride) {
        const std::vector<double> c = strided(w.values(), stride);
        const std::vector<double> d = derivative(c, stride * w.h());
        std::vector<double> d2(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) d2[k] = d[k] * d[k];
        return simpson(d2, stride * w.h());
    };
    GI gi = leveled(est, w.n(), 2, std::max(w.amplitude() * w.amplitude(), 1e-300));
    const std::vector<double> d = derivative(w.values(), w.h());
    const double edge = std::max(d.front() * d.front(), d.back() * d.back());
    gi.error += (w.decay() == DecayKind::Exponential)
                    ? 2.0 * edge / (2.0 * w.decay_rate())
                    : edge / (2.0 * w.decay_rate() * w.half_width());
    return gi;
}

// int w w' (zero analytically for decaying profiles; kept for the report).
GI integrate_cross(const Profile& w) {
    auto est = [&](int stride) {
        const std::vector<double> c = strided(w.values(), stride);
        const std::vector<double> d = derivative(c, stride * w.h());
        std::vector<double> f(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) f[k] = c[k] * d[k];
        return simpson(f, stride * w.h());
    };
    return leveled(est, w.n(), 2, std::max(w.amplitude() * w.amplitude(), 1e-300));
}

double xlogx(double x2) {
    return x2 < 1e-300 ? 0.0 : x2 * std::log(x2);
}

void require_nonzero(const Profile& w) {
    if (w.amplitude() == 0.0) throw_domain("degenerate input: profile is identically zero");
}

std::vector<double> power_abs(const std::vector<double>& v, double p) {
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = std::pow(std::fabs(v[k]), p);
    return out;
}

std::vector<double> squares(const std::vector<double>& v) {
    std::vector<double> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * v[k];
    return out;
}

} // namespace

GridIntegral profile_l2(const Profile& w) {
    return integrate_plain(w, squares(w.values()), 2.0);
}

GridIntegral profile_dirichlet(const Profile& w) {
    return integrate_derivsq(w);
}

GridIntegral profile_power(const Profile& w, double p) {
    return integrate_plain(w, power_abs(w.values(), p), p);
}

GridIntegral profile_integral(const Profile& anchor, const std::vector<double>& integrand,
                              double tail_power) {
    if (integrand.size() != anchor.values().size())
        throw_domain("profile_integral: integrand length must match the grid");
    return integrate_plain(anchor, integrand, tail_power);
}

DeficitReport quotient_interp(const Profile& w, double theta, double p, double sigma,
                              const QuadratureConfig& cfg) {
    require_nonzero(w);
    const double K = k_interp(theta, p, sigma);

    const GI M = integrate_plain(w, squares(w.values()), 2.0);
    const GI P = integrate_plain(w, power_abs(w.values(), p), p);
    const GI G = integrate_derivsq(w);

    const double energy = G.value + sigma * sigma * M.value;
    const double lhs = std::pow(P.value, 2.0 / p);
    const double rhs = K * std::pow(energy, theta) * std::pow(M.value, 1.0 - theta);

    DeficitReport rep;
    rep.inequality_id = InequalityId::Interp1D;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.deficit = rhs - lhs;
    const double d_energy = G.error + sigma * sigma * M.error;
    rep.quad_error = theta * rhs / energy * d_energy
                   + (1.0 - theta) * rhs / M.value * M.error
                   + (2.0 / p) * lhs / P.value * P.error
                   + 1e-14 * (std::fabs(lhs) + std::fabs(rhs)) + cfg.abs_tol * 1e-2;
    return rep;
}

DeficitReport deficit_glh(const Profile& w, double gamma, double sigma,
                          const QuadratureConfig& cfg) {
    require_nonzero(w);
    const double kls = k_log_hardy(gamma, sigma);

    const GI M = integrate_plain(w, squares(w.values()), 2.0);
    const GI G = integrate_derivsq(w);
    std::vector<double> ent(w.n());
    for (int k = 0; k < w.n(); ++k) ent[k] = xlogx(w.values()[k] * w.values()[k]);
    const GI E = integrate_plain(w, ent, 1.9);  // w^2 log w^2 decays a shade slower than w^2

    const double lhs = E.value / M.value - std::log(M.value) + kls;
    const double arg = G.value / M.value + sigma * sigma;
    const double rhs = 2.0 * gamma * std::log(arg);

    DeficitReport rep;
    rep.inequality_id = InequalityId::GLH1D;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.deficit = rhs - lhs;
    rep.quad_error = E.error / M.value
                   + (std::fabs(E.value) / (M.value * M.value) + 1.0 / M.value) * M.error
                   + 2.0 * gamma / arg * (G.error / M.value + G.value / (M.value * M.value) * M.error)
                   + 1e-14 * (std::fabs(lhs) + std::fabs(rhs)) + cfg.abs_tol * 1e-2;
    return rep;
}

DeficitReport verify_lsi_cylinder(const Profile& w0, int i, double amplitude,
                                  int d, double sigma, const QuadratureConfig& cfg) {
    require_nonzero(w0);
    if (d < 2) throw_domain("verify_lsi_cylinder requires d >= 2");
    if (!(sigma > 0.0)) throw_domain("verify_lsi_cylinder requires sigma > 0");
    const double kds = k_d_sigma(d, sigma);

    const AngularRule rule = AngularRule::make(d);
    const std::vector<double> y = harmonic_on_axis(i, rule);
    double m_ang = 0.0, e_ang = 0.0, y2 = 0.0;
    for (int q = 0; q < rule.size(); ++q) {
        const double g = 1.0 + amplitude * y[q];
        m_ang += rule.w[q] * g * g;
        e_ang += rule.w[q] * xlogx(g * g);
        y2 += rule.w[q] * y[q] * y[q];
    }
    const double dir_ang = amplitude * amplitude * angular_eigenvalue(i, d) * y2;

    const GI M0 = integrate_plain(w0, squares(w0.values()), 2.0);
    const GI S0 = integrate_derivsq(w0);
    std::vector<double> entv(w0.n());
    for (int k = 0; k < w0.n(); ++k) entv[k] = xlogx(w0.values()[k] * w0.values()[k]);
    const GI E0 = integrate_plain(w0, entv, 1.9);

    const double area = sphere_area(d);
    const double mass = area * M0.value * m_ang;
    const double dirichlet = area * (S0.value * m_ang + M0.value * dir_ang);
    const double entropy = area * (m_ang * E0.value + M0.value * e_ang);

    const double lhs = entropy / mass - std::log(mass) + kds;
    const double grad_const = std::max(2.0 / (d - 1.0), 2.0 * sigma * sigma);
    const double rhs = grad_const * dirichlet / mass;

    DeficitReport rep;
    rep.inequality_id = InequalityId::LSICylinder;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.deficit = rhs - lhs;
    const double d_mass = area * M0.error * m_ang;
    const double d_dir = area * (S0.error * m_ang + M0.error * dir_ang);
    const double d_ent = area * (m_ang * E0.error + M0.error * std::fabs(e_ang));
    rep.quad_error = d_ent / mass
                   + (std::fabs(entropy) / (mass * mass) + 1.0 / mass) * d_mass
                   + grad_const * (d_dir / mass + dirichlet / (mass * mass) * d_mass)
                   + 1e-14 * (std::fabs(lhs) + std::fabs(rhs)) + cfg.abs_tol * 1e-2;
    return rep;
}

DeficitReport verify_hardy(const EuclideanProfile& u, const QuadratureConfig& cfg) {
    const Profile w = from_euclidean(u);
    require_nonzero(w);
    const double sigma = 0.5 * (u.d - 2.0) - u.a;
    const double area = sphere_area(u.d);

    const GI M = integrate_plain(w, squares(w.values()), 2.0);
    const GI G = integrate_derivsq(w);
    const GI C = integrate_cross(w);

    DeficitReport rep;
    rep.inequality_id = InequalityId::Hardy;
    rep.lhs = area * sigma * sigma * M.value;
    rep.rhs = rep.lhs + area * (G.value + 2.0 * sigma * C.value);
    rep.deficit = area * (G.value + 2.0 * sigma * C.value);
    rep.quad_error = area * (G.error + 2.0 * sigma * C.error + std::fabs(C.value) * 2.0 * sigma)
                   + 1e-14 * (std::fabs(rep.lhs) + std::fabs(rep.rhs)) + cfg.abs_tol * 1e-2;
    return rep;
}

DeficitReport verify_hs(const EuclideanProfile& u, double p, const QuadratureConfig& cfg) {
    if (u.d < 3) throw_domain("verify_hs requires d >= 3");
    if (std::fabs(u.a) > 1e-14) throw_domain("verify_hs requires a = 0");
    const double chs = c_hs(p, u.d);
    const Profile w = from_euclidean(u);
    require_nonzero(w);
    const double sigma = 0.5 * (u.d - 2.0);
    const double area = sphere_area(u.d);

    const GI M = integrate_plain(w, squares(w.values()), 2.0);
    const GI P = integrate_plain(w, power_abs(w.values(), p), p);
    const GI G = integrate_derivsq(w);
    const GI C = integrate_cross(w);

    const double dirichlet = area * (G.value + 2.0 * sigma * C.value + sigma * sigma * M.value);
    const double lhs = std::pow(area * P.value, 2.0 / p);
    const double rhs = chs * dirichlet;

    DeficitReport rep;
    rep.inequality_id = InequalityId::HS;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.deficit = rhs - lhs;
    rep.quad_error = chs * area * (G.error + 2.0 * sigma * (C.error + std::fabs(C.value)) + sigma * sigma * M.error)
                   + (2.0 / p) * lhs / (area * P.value) * area * P.error
                   + 1e-14 * (std::fabs(lhs) + std::fabs(rhs)) + cfg.abs_tol * 1e-2;
    return rep;
}

} // namespace cylhardy
