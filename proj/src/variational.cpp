#include "cylhardy/variational.hpp"

#include "cylhardy/angular.hpp"
#include "cylhardy/constants.hpp"
#include "cylhardy/deficit.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cylhardy {

namespace {

void require_shared_grid(const Profile& w0, const Profile& w1) {
    if (w0.n() != w1.n() || w0.half_width() != w1.half_width())
        throw_domain("two-mode state needs both profiles on one shared grid");
}

const Profile& tail_anchor(const TwoModeState& state) {
    if (state.w1.amplitude() == 0.0) return state.w0;
    if (state.w0.decay() == state.w1.decay() &&
        state.w1.decay_rate() < state.w0.decay_rate())
        return state.w1;
    return state.w0;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

// Discretization of the deficit functional
//   J[w] = energy - K^(-1/theta) * P^(2/(p theta)) * mass^(-(1-theta)/theta)
// on the shared grid: trapezoid masses, forward-difference Dirichlet terms,
// the angular rule for the p-term. Gradients are exact for this discrete J,
// and the minimized objective is the scale-invariant J * mass_ref / mass.
struct DiscreteDeficit {
    int n = 0;
    int d = 0;
    double h = 0.0;
    double sigma2 = 0.0;
    double p = 0.0;
    double theta = 0.0;
    double coef = 0.0;   // K^(-1/theta)
    double beta = 0.0;   // 2/(p*theta)
    double expo = 0.0;   // (1-theta)/theta
    std::vector<double> aw;  // angular weights
    std::vector<double> ay;  // Y_1 at the angular nodes

    DiscreteDeficit(const Params& params, const Profile& grid_holder) {
        n = grid_holder.n();
        d = params.d;
        h = grid_holder.h();
        sigma2 = params.sigma * params.sigma;
        p = params.p;
        theta = params.theta;
        coef = std::pow(k_interp(params.theta, params.p, params.sigma), -1.0 / theta);
        beta = 2.0 / (p * theta);
        expo = (1.0 - theta) / theta;
        const AngularRule rule = AngularRule::make(d, 64);
        aw = rule.w;
        ay = harmonic_on_axis(1, rule);
    }

    double tw(int k) const { return (k == 0 || k == n - 1) ? 0.5 : 1.0; }

    double mass(const std::vector<double>& x0, const std::vector<double>& x1) const {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += tw(k) * (x0[k] * x0[k] + x1[k] * x1[k]);
        return acc * h;
    }

    // J and, when g0/g1 are non-null, its exact gradient (ends pinned).
    double deficit(const std::vector<double>& x0, const std::vector<double>& x1,
                   std::vector<double>* g0, std::vector<double>* g1) const {
        double m = 0.0, ang = 0.0, dir = 0.0, pterm = 0.0;
        for (int k = 0; k < n; ++k) {
            const double t = tw(k);
            m += t * (x0[k] * x0[k] + x1[k] * x1[k]);
            ang += t * x1[k] * x1[k];
            double f = 0.0;
            for (std::size_t q = 0; q < aw.size(); ++q) {
                const double v = x0[k] + ay[q] * x1[k];
                f += aw[q] * std::pow(std::fabs(v), p);
            }
            pterm += t * f;
        }
        for (int k = 0; k + 1 < n; ++k) {
            const double d0 = x0[k + 1] - x0[k];
            const double d1 = x1[k + 1] - x1[k];
            dir += d0 * d0 + d1 * d1;
        }
        m *= h;
        ang *= h * (d - 1.0);
        dir /= h;
        pterm = std::max(pterm * h, 1e-300);

        const double energy = dir + ang + sigma2 * m;
        const double pull = coef * std::pow(pterm, beta) * std::pow(m, -expo);
        const double value = energy - pull;
        if (!g0) return value;

        // dJ/dx = dE - coef [beta P^(beta-1) m^(-expo) dP - expo P^beta m^(-expo-1) dM]
        const double cp = coef * beta * std::pow(pterm, beta - 1.0) * std::pow(m, -expo);
        const double cm = coef * expo * std::pow(pterm, beta) * std::pow(m, -expo - 1.0);
        g0->assign(n, 0.0);
        g1->assign(n, 0.0);
        for (int k = 0; k < n; ++k) {
            const double t = tw(k);
            double dp0 = 0.0, dp1 = 0.0;
            for (std::size_t q = 0; q < aw.size(); ++q) {
                const double v = x0[k] + ay[q] * x1[k];
                const double s = v >= 0.0 ? 1.0 : -1.0;
                const double dv = p * std::pow(std::fabs(v), p - 1.0) * s;
                dp0 += aw[q] * dv;
                dp1 += aw[q] * dv * ay[q];
            }
            const double dm = 2.0 * h * t;
            (*g0)[k] = sigma2 * dm * x0[k] - cp * h * t * dp0 + cm * dm * x0[k];
            (*g1)[k] = (sigma2 + d - 1.0) * dm * x1[k] - cp * h * t * dp1 + cm * dm * x1[k];
            if (k > 0) {
                (*g0)[k] += 2.0 / h * (x0[k] - x0[k - 1]);
                (*g1)[k] += 2.0 / h * (x1[k] - x1[k - 1]);
            }
            if (k + 1 < n) {
                (*g0)[k] += 2.0 / h * (x0[k] - x0[k + 1]);
                (*g1)[k] += 2.0 / h * (x1[k] - x1[k + 1]);
            }
        }
        return value;
    }

    // Scale-invariant objective F = J * m_ref / m and its gradient.
    double objective(const std::vector<double>& x0, const std::vector<double>& x1,
                     double m_ref, std::vector<double>* g0, std::vector<double>* g1) const {
        const double m = mass(x0, x1);
        const double j = deficit(x0, x1, g0, g1);
        const double f = j * m_ref / m;
        if (g0) {
            for (int k = 0; k < n; ++k) {
                const double t = 2.0 * h * tw(k);
                (*g0)[k] = m_ref / m * ((*g0)[k] - j / m * t * x0[k]);
                (*g1)[k] = m_ref / m * ((*g1)[k] - j / m * t * x1[k]);
            }
            // Dirichlet ends: the boundary values stay fixed.
            (*g0)[0] = (*g0)[n - 1] = 0.0;
            (*g1)[0] = (*g1)[n - 1] = 0.0;
        }
        return f;
    }
};

} // namespace

TwoModeState make_two_mode(Profile w0, Profile w1) {
    require_shared_grid(w0, w1);
    if (w0.amplitude() == 0.0)
        throw_domain("degenerate input: radial mode is identically zero");
    return {std::move(w0), std::move(w1)};
}

QuotientValue evaluate_quotient(const TwoModeState& state, const Params& params,
                                const QuadratureConfig& cfg) {
    if (params.mode != Mode::Interpolation)
        throw_domain("evaluate_quotient needs interpolation-mode parameters");
    require_shared_grid(state.w0, state.w1);

    const GridIntegral m0 = profile_l2(state.w0);
    const GridIntegral m1 = profile_l2(state.w1);
    const GridIntegral g0 = profile_dirichlet(state.w0);
    const GridIntegral g1 = profile_dirichlet(state.w1);

    const double mass = m0.value + m1.value;
    if (!(mass > 0.0)) throw_domain("degenerate input: two-mode state has zero mass");
    const double mass_err = m0.error + m1.error;

    const double s2 = params.sigma * params.sigma;
    const double energy = g0.value + g1.value + (params.d - 1.0) * m1.value + s2 * mass;
    const double energy_err = g0.error + g1.error + (params.d - 1.0) * m1.error + s2 * mass_err;

    const AngularRule rule = AngularRule::make(params.d, 64);
    const std::vector<double> y1 = harmonic_on_axis(1, rule);
    const std::vector<double>& a = state.w0.values();
    const std::vector<double>& b = state.w1.values();
    std::vector<double> f(a.size(), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        double acc = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double v = a[k] + y1[q] * b[k];
            acc += rule.w[q] * std::pow(std::fabs(v), params.p);
        }
        f[k] = acc;
    }
    const GridIntegral pint = profile_integral(tail_anchor(state), f, params.p);
    if (!(pint.value > 0.0)) throw_domain("degenerate input: two-mode state vanishes a.e.");

    QuotientValue out;
    out.params = params;
    out.lhs = std::pow(pint.value, 2.0 / params.p);
    out.energy = energy;
    out.mass = mass;
    out.quotient = out.lhs / (std::pow(energy, params.theta) * std::pow(mass, 1.0 - params.theta));
    const double rel = (2.0 / params.p) * pint.error / pint.value
                     + params.theta * energy_err / energy
                     + (1.0 - params.theta) * mass_err / mass;
    out.quad_error = out.quotient * rel + 1e-14 * out.quotient + cfg.abs_tol * 1e-2;
    return out;
}

MinimizeResult minimize_deficit(const Params& params, const TwoModeState& init,
                                int max_iterations, double rel_tol) {
    if (params.mode != Mode::Interpolation)
        throw_domain("minimize_deficit needs interpolation-mode parameters");
    require_shared_grid(init.w0, init.w1);
    if (max_iterations < 0) throw_domain("minimize_deficit: max_iterations must be >= 0");
    if (!(rel_tol >= 0.0)) throw_domain("minimize_deficit: rel_tol must be >= 0");

    const DiscreteDeficit dd(params, init.w0);
    std::vector<double> x0 = init.w0.values();
    std::vector<double> x1 = init.w1.values();
    const double m_ref = dd.mass(x0, x1);
    if (!(m_ref > 0.0)) throw_domain("degenerate input: two-mode state has zero mass");

    std::vector<double> g0, g1, t0(dd.n), t1(dd.n);
    double f = dd.objective(x0, x1, m_ref, &g0, &g1);
    double step = dd.h / 8.0;
    int it = 0;
    bool stalled = false;

    for (; it < max_iterations; ++it) {
        const double gnorm2 = dot(g0, g0) + dot(g1, g1);
        if (!(gnorm2 > 0.0)) break;

        bool accepted = false;
        double ft = f;
        for (int half = 0; half < 40; ++half) {
            for (int k = 0; k < dd.n; ++k) {
                t0[k] = x0[k] - step * g0[k];
                t1[k] = x1[k] - step * g1[k];
            }
            ft = dd.objective(t0, t1, m_ref, nullptr, nullptr);
            if (ft <= f - 1e-4 * step * gnorm2) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            stalled = true;
            break;
        }
        x0.swap(t0);
        x1.swap(t1);
        step *= 1.3;

        // The objective is invariant under scaling, so renormalizing the
        // mass preserves the accepted decrease.
        const double c = std::sqrt(m_ref / dd.mass(x0, x1));
        for (int k = 0; k < dd.n; ++k) {
            x0[k] *= c;
            x1[k] *= c;
        }
        const double f_new = dd.objective(x0, x1, m_ref, &g0, &g1);
        const bool converged = f - f_new <= rel_tol * (std::fabs(f) + std::fabs(f_new) + 1e-30);
        f = f_new;
        if (converged) {
            ++it;
            break;
        }
    }

    TwoModeState state{Profile::from_samples(
                           GridSpec::make(init.w0.half_width(), init.w0.n()), std::move(x0),
                           init.w0.decay(), init.w0.decay_rate()),
                       Profile::from_samples(
                           GridSpec::make(init.w1.half_width(), init.w1.n()), std::move(x1),
                           init.w1.decay(), init.w1.decay_rate())};
    const QuotientValue qv = evaluate_quotient(state, params);
    const double kval = k_interp(params.theta, params.p, params.sigma);
    return {std::move(state), qv, qv.quotient / kval - 1.0, qv.quad_error / kval,
            f, it, stalled};
}

TwoModeState make_breaking_init(const Params& params, double eps, const GridSpec& grid) {
    if (params.mode != Mode::Interpolation)
        throw_domain("make_breaking_init needs interpolation-mode parameters");
    if (!std::isfinite(eps)) throw_domain("make_breaking_init: eps must be finite");

    Profile w0 = interp_extremal(params.theta, params.p, params.sigma, grid);

    // The i = 1 ground state of the linearization is known in closed form:
    // phi(s) = cosh(lambda s)^(-p/(p-2)) = extremal^(p/2), so the start state
    // w0 + eps * ||w0|| * phi/||phi|| needs no eigensolver.
    const double lam = lambda_extremal(params.theta, params.p, params.sigma);
    const double t = 2.0 / (params.p - 2.0);
    const double q = params.p * t;
    const double norm_w0 = std::sqrt(cosh_moment(2.0 * t) / lam);
    const double norm_phi = std::sqrt(cosh_moment(q) / lam);
    const double scale = eps * norm_w0 / norm_phi;

    auto log_cosh = [](double x) {
        const double ax = std::fabs(x);
        return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
    };
    Profile w1 = Profile::sample(
        [&](double s) { return scale * std::exp(-0.5 * q * log_cosh(lam * s)); },
        grid, DecayKind::Exponential, 0.5 * q * lam);
    return {std::move(w0), std::move(w1)};
}

} // namespace cylhardy
