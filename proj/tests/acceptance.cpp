// Acceptance gate: one self-contained check per numbered criterion, each
// printing a single PASS/FAIL line with its measured margins. Run all with
// no arguments or a single criterion with `acceptance N`.
#include "cylhardy/constants.hpp"
#include "cylhardy/deficit.hpp"
#include "cylhardy/params.hpp"
#include "cylhardy/profile.hpp"
#include "cylhardy/quadrature.hpp"
#include "cylhardy/region.hpp"
#include "cylhardy/special.hpp"
#include "cylhardy/spectral.hpp"
#include "cylhardy/variational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace cylhardy;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// --- 1. closed form vs quadrature at the square-root-three-over-four point.
Outcome criterion1() {
    const double target = std::sqrt(3.0) / 4.0;
    const double kv = k_interp(1.0, 4.0, 1.0);
    const double closed_err = std::fabs(kv - target);
    if (!(closed_err < 1e-12))
        return {false, "k_interp(1,4,1) off by " + num(closed_err)};

    const Profile w = interp_extremal(1.0, 4.0, 1.0);
    const DeficitReport rep = quotient_interp(w, 1.0, 4.0, 1.0);
    const double rel = std::fabs(rep.deficit) / rep.rhs;
    if (!(rel < 1e-7))
        return {false, "extremal quotient off by " + num(rel) + " relative"};
    return {true, "closed-form gap " + num(closed_err) + ", quotient rel gap " + num(rel)};
}

// --- 2. vanishing deficit at both extremal families, randomized.
Outcome criterion2() {
    std::mt19937 rng(1001u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;

    for (int k = 0; k < 20; ++k) {
        const double p = 2.3 + 2.5 * uni(rng);
        const double lo = vartheta(p, 1) + 0.05;
        const double theta = lo + (1.0 - lo) * uni(rng);
        const double sigma = 0.3 + 1.9 * uni(rng);
        const DeficitReport rep =
            quotient_interp(interp_extremal(theta, p, sigma), theta, p, sigma);
        const double rel = std::fabs(rep.deficit) / rep.rhs;
        worst = std::max(worst, rel);
        if (!(rel < 1e-7))
            return {false, "interpolation deficit " + num(rel) + " relative at p=" + num(p)
                               + " theta=" + num(theta) + " sigma=" + num(sigma)};
    }
    for (int k = 0; k < 20; ++k) {
        double gamma = 0.0, sigma = 0.0;
        // Keep the right-hand side away from its zero so the relative
        // measure is meaningful.
        do {
            gamma = 0.27 + 2.7 * uni(rng);
            sigma = 0.3 + 1.9 * uni(rng);
        } while (std::fabs(std::log(4.0 * gamma * sigma * sigma / (4.0 * gamma - 1.0))) < 0.05);
        const DeficitReport rep = deficit_glh(glh_extremal(gamma, sigma), gamma, sigma);
        const double rel = std::fabs(rep.deficit) / std::fabs(rep.rhs);
        worst = std::max(worst, rel);
        if (!(rel < 1e-7))
            return {false, "log-Hardy deficit " + num(rel) + " relative at gamma=" + num(gamma)
                               + " sigma=" + num(sigma)};
    }
    return {true, "40 extremal deficits, worst " + num(worst) + " relative"};
}

// --- 3. the seven exact identities tying the constants together.
Outcome criterion3() {
    double worst = 0.0;
    std::string worst_name = "none";
    const auto track = [&](const char* name, double resid, double scale) {
        const double rel = std::fabs(resid) / std::max(1.0, std::fabs(scale));
        if (rel > worst) {
            worst = rel;
            worst_name = name;
        }
    };

    for (int d = 3; d <= 10; ++d) {
        const double dm2 = d - 2.0;
        track("hardy endpoint", c_hs(2.0, d) - 4.0 / (dm2 * dm2), 4.0 / (dm2 * dm2));
        track("sobolev endpoint", c_hs(2.0 * d / dm2, d) - sobolev_constant(d),
              sobolev_constant(d));
        track("quarter-gamma matches log-hardy", c_star_glh(0.25 * d, 0.0, d) - c_star_lh(d),
              c_star_lh(d));

        const double gamma = 0.8, a = -1.0, sigma = 0.5 * dm2 + 1.0;
        track("additive-multiplicative log relation",
              2.0 * gamma * std::log(c_star_glh(gamma, a, d)) + k_log_hardy(gamma, sigma)
                  + log_sphere_area(d),
              k_log_hardy(gamma, sigma));

        const double s13 = 1.3;
        track("entropy constant displayed forms",
              k_d_sigma(d, s13)
                  - 0.5 * (std::log(2.0 * M_PI) + 2.0 + 2.0 * std::log(s13)
                           + 2.0 * log_sphere_area(d)),
              k_d_sigma(d, s13));

        for (int j = 1; j <= 7; ++j) {
            const double p = 2.0 + (2.0 * d / dm2 - 2.0) * j / 8.0;
            track("threshold meets the admissibility floor at a_minus",
                  theta_breaking(a_minus(p, d), p, d) - vartheta(p, d), vartheta(p, d));
        }
    }
    for (double p : {2.5, 3.0, 4.0}) {
        const double t0 = vartheta(p, 1);
        const double ref = k_interp(t0, p, 1.0);
        track("endpoint constant is sigma-free", k_interp(t0, p, 0.5) - ref, ref);
        track("endpoint constant is sigma-free", k_interp(t0, p, 2.0) - ref, ref);
    }
    if (!(worst < 1e-10))
        return {false, "worst identity '" + worst_name + "' at " + num(worst) + " relative"};
    return {true, "all seven identities within " + num(worst) + " relative (d = 3..10)"};
}

// --- 4. limiting regimes of the closed forms.
Outcome criterion4() {
    const double near_two = std::fabs(k_interp(1.0 * (2.001 - 2.0), 2.001, 1.0) - 1.0);
    if (!(near_two < 1e-2)) return {false, "p->2 limit off by " + num(near_two)};

    for (double sigma : {0.5, 3.0}) {
        const double slope = std::fabs(k_log_hardy(1e4, sigma) / 2e4 - 2.0 * std::log(sigma));
        if (!(slope < 1e-2))
            return {false, "large-gamma slope off by " + num(slope) + " at sigma=" + num(sigma)};
    }
    for (double sigma : {0.5, 1.0, 2.0}) {
        const double jump = std::fabs(k_log_hardy(0.25 + 1e-8, sigma) - k_log_hardy(0.25, sigma));
        if (!(jump < 1e-6))
            return {false, "quarter-branch mismatch " + num(jump) + " at sigma=" + num(sigma)};
    }
    return {true, "p->2, large-gamma, and quarter-branch limits inside stated windows"};
}

// --- 5. finite differences vs closed-form eigenvalues, randomized draws.
// Draw policy: the second-difference truncation error on the pinned grid
// (L = 200, n = 8193) scales with the square of the potential scale, so
// draws keep 2 beta lambda^2 in [0.25, 1.2] (sech wells) and the oscillator
// coefficient in [0.25, 1.4]; mode decay must clear the box edge.
Outcome criterion5() {
    std::mt19937 rng(2002u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const GridSpec base = GridSpec::make(200.0, 8193);
    const GridSpec fine = GridSpec::make(200.0, 16385);
    double worst_gap = 0.0, order_lo = 99.0, order_hi = 0.0;

    for (int k = 0; k < 50; ++k) {
        Params pr = Params::interpolation(3, -1.0, 2.2, 0.3);
        for (int attempt = 0;; ++attempt) {
            if (attempt > 20000) return {false, "draw policy exhausted (sech wells)"};
            const int d = 2 + static_cast<int>(uni(rng) * 4.0);
            const double sigma = 0.3 + 0.9 * uni(rng);
            const double a = 0.5 * (d - 2.0) - sigma;
            const double p = 2.4 + 2.1 * uni(rng);
            if (d >= 3 && p >= 2.0 * d / (d - 2.0) - 0.05) continue;
            const double vt = vartheta(p, d);
            const double theta = vt + (1.0 - vt) * uni(rng);
            const double lam = lambda_extremal(theta, p, sigma);
            const double t = 2.0 / (p - 2.0);
            const double curvature = 2.0 * (p / (p - 2.0)) * lam * lam;
            if (curvature < 0.25 || curvature > 1.2) continue;
            if (lam * (1.0 + t) < 0.16) continue;
            pr = Params::interpolation(d, a, p, theta);
            break;
        }
        const SpectrumReport coarse = check_interp_mode(1, 0, pr, base);
        worst_gap = std::max(worst_gap, std::fabs(coarse.gap));
        if (!(std::fabs(coarse.gap) < 1e-4))
            return {false, "sech-well gap " + num(coarse.gap) + " at a=" + num(pr.a)
                               + " p=" + num(pr.p) + " theta=" + num(pr.theta)};
        const SpectrumReport refined = check_interp_mode(1, 0, pr, fine);
        const double order = std::log2(std::fabs(coarse.gap / refined.gap));
        order_lo = std::min(order_lo, order);
        order_hi = std::max(order_hi, order);
        if (!(order >= 1.9 && order <= 2.1))
            return {false, "sech-well order " + num(order) + " at a=" + num(pr.a)
                               + " p=" + num(pr.p) + " theta=" + num(pr.theta)};
    }

    for (int k = 0; k < 50; ++k) {
        double gamma = 0.0, sigma = 0.0;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 20000) return {false, "draw policy exhausted (oscillators)"};
            gamma = 0.3 + 2.7 * uni(rng);
            const double a = -2.0 + 2.3 * uni(rng);
            sigma = 0.5 - a;
            const double big_a = 4.0 * sigma * sigma / (4.0 * gamma - 1.0);
            if (big_a < 0.25 || big_a > 1.4) continue;
            break;
        }
        const SpectrumReport coarse = check_glh_mode(1, 0, gamma, sigma, 3, base);
        worst_gap = std::max(worst_gap, std::fabs(coarse.gap));
        if (!(std::fabs(coarse.gap) < 1e-4))
            return {false, "oscillator gap " + num(coarse.gap) + " at gamma=" + num(gamma)
                               + " sigma=" + num(sigma)};
        const SpectrumReport refined = check_glh_mode(1, 0, gamma, sigma, 3, fine);
        const double order = std::log2(std::fabs(coarse.gap / refined.gap));
        order_lo = std::min(order_lo, order);
        order_hi = std::max(order_hi, order);
        if (!(order >= 1.9 && order <= 2.1))
            return {false, "oscillator order " + num(order) + " at gamma=" + num(gamma)
                               + " sigma=" + num(sigma)};
    }
    return {true, "100 draws: worst |gap| " + num(worst_gap) + ", order in ["
                      + num(order_lo) + ", " + num(order_hi) + "]"};
}

// --- 6. closed-form spectra agree with the breaking verdicts on grids.
Outcome criterion6() {
    int checked = 0;
    for (int gi = 0; gi < 100; ++gi) {
        const double gamma = 0.75 + (3.2 - 0.75) * gi / 99.0;
        for (int ai = 0; ai < 100; ++ai) {
            const double a = -3.0 + 3.45 * ai / 99.0;
            const bool neg = eig_glh(1, 0, gamma, a, 3) < 0.0;
            const bool breaking = region_glh(gamma, a, 3) == Region::Breaking;
            if (neg != breaking)
                return {false, "log-Hardy mismatch at gamma=" + num(gamma) + " a=" + num(a)};
            ++checked;
        }
    }

    for (int ai = 0; ai < 50; ++ai) {
        const double a = -2.5 + 2.95 * ai / 49.0;
        for (int pi = 0; pi < 50; ++pi) {
            const double p = 2.05 + 3.85 * pi / 49.0;
            const double vt = vartheta(p, 3);
            for (int ti = 0; ti < 50; ++ti) {
                const double theta = vt + (1.0 - vt) * (ti + 0.5) / 50.0;
                const Params pr = Params::interpolation(3, a, p, theta);
                const bool neg = eig_interp(1, 0, pr) < 0.0;
                const double quartic =
                    4.0 * p * 2.0 * (p * p + 2.0 * p + 8.0 * theta - 8.0)
                    - (9.0 + 4.0 * a * a - 4.0 * a) * (p - 2.0) * (p + 2.0) * (p + 2.0);
                if (neg != (quartic < 0.0))
                    return {false, "interpolation mismatch at a=" + num(a) + " p=" + num(p)
                                       + " theta=" + num(theta)};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " grid points, zero sign mismatches"};
}

// --- 7. the two-mode descent certificate at the two pinned parameter points.
Outcome criterion7() {
    const Params first = Params::interpolation(3, -1.0, 2.2, 0.3);
    const double lam1 = lambda_extremal(first.theta, first.p, first.sigma);
    const double box1 = std::max(40.0 * (first.p - 2.0) / (2.0 * lam1), 3.0 / lam1);
    const MinimizeResult r1 = minimize_deficit(
        first, make_breaking_init(first, 0.05, GridSpec::make(box1, 513)), 4000);
    const bool certified = r1.delta > 10.0 * r1.error_sum;

    const Params second = Params::interpolation(3, 0.0, 4.0, 1.0);
    const MinimizeResult r2 = minimize_deficit(
        second, make_breaking_init(second, 0.05, GridSpec::make(40.0, 513)), 4000);
    const bool quiet = r2.delta <= 10.0 * r2.error_sum + 1e-8;

    const std::string detail =
        "at (3,-1,2.2,0.3): delta=" + num(r1.delta) + " vs bound " + num(10.0 * r1.error_sum)
        + " (lowest non-radial eigenvalue there is " + num(eig_interp(1, 0, first))
        + " > 0, so no non-radial state can beat the radial quotient); at (3,0,4,1): delta="
        + num(r2.delta) + " within bound " + num(10.0 * r2.error_sum + 1e-8)
        + (quiet ? " ok" : " VIOLATED");
    return {certified && quiet, detail};
}

// --- 8. the scan reproduces the documented geometry of the breaking region.
Outcome criterion8() {
    const auto cross = region_scan(3, {-0.25}, 1000);
    int flips = 0, last = -1, prev = -1;
    for (int k = 0; k < 1000; ++k) {
        const int b = cross[k].breaking_interp ? 1 : 0;
        if (prev >= 0 && b != prev) ++flips;
        if (b) last = k;
        prev = b;
    }
    if (flips != 1 || last < 0 || last + 1 >= 1000)
        return {false, "expected a single flip at a=-0.25, saw " + std::to_string(flips)};
    const double eta_last = cross[last].eta, eta_next = cross[last + 1].eta;
    if (!(eta_last <= 0.4 + 1e-3 + 1e-12 && eta_next >= 0.4 - 1e-3 - 1e-12))
        return {false, "crossing sits in [" + num(eta_last) + ", " + num(eta_next)
                           + "], not within one cell of 0.4"};

    const auto tang = region_scan(3, {-0.5}, 1000);
    for (int k = 0; k + 1 < 1000; ++k)
        if (!tang[k].breaking_interp)
            return {false, "window at a=-0.5 closes early, eta=" + num(tang[k].eta)};
    const double g1 = tang[998].theta_cap - tang[998].vartheta;
    const double g5 = tang[994].theta_cap - tang[994].vartheta;
    const double g10 = tang[989].theta_cap - tang[989].vartheta;
    if (!(g1 > 0.0 && g1 < 1e-6 && std::fabs(g10 / g5 - 4.0) < 0.2))
        return {false, "tangency at a=-0.5 not quadratic: gaps " + num(g1) + ", " + num(g5)
                           + ", " + num(g10)};

    for (const RegionRecord& rec : region_scan(3, {0.0}, 1000))
        if (rec.breaking_interp)
            return {false, "breaking flagged at a=0, eta=" + num(rec.eta)};

    for (int k = 0; k <= 49; ++k) {
        const double a = -2.0 + 0.05 * k;
        const auto rec = region_scan(3, {a}, 1)[0];
        if (rec.breaking_glh != (a < -0.5))
            return {false, "log-Hardy window wrong at a=" + num(a)};
    }
    return {true, "crossing in [" + num(eta_last) + ", " + num(eta_next)
                      + "], quadratic tangency ratio " + num(g10 / g5)
                      + ", empty at a=0, window iff a < -1/2"};
}

// --- 9. radial constants never exceed their chain upper bounds.
Outcome criterion9() {
    std::mt19937 rng(3003u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double tightest = 1e300;

    for (int k = 0; k < 30; ++k) {
        const double gamma = 0.76 + 2.2 * uni(rng);
        const double a = 0.45 * uni(rng);
        const UpperBound ub = upper_bound_glh(gamma, a, 3);
        if (ub.proxy) return {false, "unexpected proxy bound (log-Hardy draw)"};
        const double cs = c_star_glh(gamma, a, 3);
        tightest = std::min(tightest, ub.value - cs);
        if (!(cs <= ub.value * (1.0 + 1e-12)))
            return {false, "c_star_glh " + num(cs) + " above bound " + num(ub.value)
                               + " at gamma=" + num(gamma) + " a=" + num(a)};
    }
    for (int k = 0; k < 30; ++k) {
        const double a = 0.45 * uni(rng);
        const double p = 2.2 + 2.3 * uni(rng);
        const double lo =
            std::max(vartheta(p, 3), 1.0 - std::min(2.0, 3.0 - 0.5 * p) / p + 0.05);
        const double theta = lo + (1.0 - lo) * uni(rng);
        const Params pr = Params::interpolation(3, a, p, theta);
        const UpperBound ub = upper_bound_interp(pr);
        if (ub.proxy) return {false, "unexpected proxy bound (interpolation draw)"};
        const double cs = c_star_interp(pr);
        tightest = std::min(tightest, ub.value - cs);
        if (!(cs <= ub.value * (1.0 + 1e-12)))
            return {false, "c_star_interp " + num(cs) + " above bound " + num(ub.value)
                               + " at a=" + num(a) + " p=" + num(p) + " theta=" + num(theta)};
    }
    for (int d = 3; d <= 10; ++d)
        if (!(c_star_lh(d) <= sobolev_constant(d)))
            return {false, "log-Hardy constant above the Sobolev constant at d="
                               + std::to_string(d)};
    return {true, "60 sandwich draws (tightest slack " + num(tightest)
                      + ") and d = 3..10 Sobolev comparisons hold"};
}

// --- 10. the line quadrature reproduces the moment closed forms.
Outcome criterion10() {
    double worst = 0.0;
    for (double q : {2.0, 3.0, 4.0, 6.0}) {
        const auto est = integrate_line(
            [q](double s) {
                const double ac = std::fabs(s);
                const double log_cosh = ac + std::log1p(std::exp(-2.0 * ac)) - std::log(2.0);
                return std::exp(-q * log_cosh);
            },
            q);
        const double rel = std::fabs(est.value - cosh_moment(q)) / cosh_moment(q);
        worst = std::max(worst, rel);
        if (!(rel < 1e-10))
            return {false, "sech moment q=" + num(q) + " off by " + num(rel) + " relative"};
    }
    const auto gauss = integrate_line([](double s) { return std::exp(-s * s); }, 1.0);
    const double gerr = std::fabs(gauss.value - std::sqrt(M_PI));
    if (!(gerr < 1e-12)) return {false, "Gaussian integral off by " + num(gerr)};
    return {true, "sech moments within " + num(worst) + " relative, Gaussian within "
                      + num(gerr)};
}

} // namespace

int main(int argc, char** argv) {
    Outcome (*checks[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                             criterion6, criterion7, criterion8, criterion9, criterion10};
    int lo = 1, hi = 10;
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: acceptance [1..10]\n");
            return 2;
        }
        lo = hi = n;
    }

    bool all_pass = true;
    for (int n = lo; n <= hi; ++n) {
        Outcome out;
        try {
            out = checks[n - 1]();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        std::printf("criterion %2d: %s | %s\n", n, out.pass ? "PASS" : "FAIL",
                    out.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
