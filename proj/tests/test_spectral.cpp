#include "doctest.h"

#include "cylhardy/constants.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/spectral.hpp"

#include <cmath>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

using namespace cylhardy;

namespace {

SchrodingerSpec pt_well(double kappa, double lam, double shift, double L, int n) {
    SchrodingerSpec spec;
    spec.potential = [kappa, lam](double s) {
        const double c = std::cosh(lam * s);
        return -kappa / (c * c);
    };
    spec.angular_term = shift;
    spec.half_width = L;
    spec.n = n;
    return spec;
}

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        ab += a[k] * b[k];
        aa += a[k] * a[k];
        bb += b[k] * b[k];
    }
    return std::fabs(ab) / std::sqrt(aa * bb);
}

} // namespace

TEST_CASE("reflectionless well ground state") {
    const double lam = 1.0;
    const auto vals = lowest_eigenvalues(pt_well(2.0 * lam * lam, lam, 0.0, 30.0, 16385), 1);
    REQUIRE(vals.size() == 1);
    CHECK(std::fabs(vals[0] + lam * lam) < 1e-6);
}

TEST_CASE("free box bottom sits at the angular shift") {
    SchrodingerSpec spec;
    spec.potential = [](double) { return 0.0; };
    spec.angular_term = 7.0;
    spec.half_width = 50.0;
    spec.n = 8193;
    const auto vals = lowest_eigenvalues(spec, 1);
    const double dirichlet_bottom = std::pow(M_PI / 100.0, 2.0);
    CHECK(std::fabs(vals[0] - (7.0 + dirichlet_bottom)) < 1e-6);
    // The Dirichlet offset itself is the only deviation from the shift.
    CHECK(std::fabs(vals[0] - 7.0) < 1e-3);
}

TEST_CASE("harmonic oscillator ladder") {
    const double A = 2.0;
    SchrodingerSpec spec;
    spec.potential = [A](double s) { return 0.25 * A * A * s * s - 1.5 * A; };
    spec.angular_term = 0.0;
    const GridSpec g = oscillator_grid(A, 4);
    spec.half_width = g.half_width;
    spec.n = g.n;
    const auto vals = lowest_eigenvalues(spec, 4);
    REQUIRE(vals.size() == 4);
    for (int j = 0; j < 4; ++j) CHECK(std::fabs(vals[j] - A * (j - 1.0)) < 1e-3);
}

TEST_CASE("eigenvector parity") {
    const auto pairs = lowest_eigenpairs(pt_well(6.0, 1.0, 0.0, 30.0, 4097), 2);
    REQUIRE(pairs.size() == 2);
    const int m = (int)pairs[0].vector.size();
    // Count nodes only where the vector is above the far-tail noise floor.
    const auto sign_changes = [m](const std::vector<double>& v) {
        int changes = 0;
        double last = 0.0;
        for (int k = 0; k < m; ++k) {
            if (std::fabs(v[k]) < 1e-9) continue;
            if (last != 0.0 && last * v[k] < 0.0) ++changes;
            last = v[k];
        }
        return changes;
    };
    CHECK(sign_changes(pairs[0].vector) == 0);
    CHECK(sign_changes(pairs[1].vector) == 1);
    for (int k = 0; k < m / 2; k += m / 16) {
        CHECK(pairs[0].vector[k]
              == doctest::Approx(pairs[0].vector[m - 1 - k]).epsilon(1e-7));
        CHECK(pairs[1].vector[k]
              == doctest::Approx(-pairs[1].vector[m - 1 - k]).epsilon(1e-7));
    }
}

TEST_CASE("eigensolver input validation and boundary certification") {
    SchrodingerSpec spec;
    CHECK_THROWS_AS(lowest_eigenvalues(spec, 1), std::domain_error);
    CHECK_THROWS_AS(lowest_eigenvalues(pt_well(2.0, 1.0, 0.0, 30.0, 4097), 2000),
                    std::domain_error);
    CHECK_THROWS_AS(lowest_eigenvalues(pt_well(2.0, 1.0, 0.0, 30.0, 4097), 0),
                    std::domain_error);
    // Shallow wide well: the bound state at -0.04 decays too slowly for a
    // 30-wide box, so certification must fail and suggest a wider one.
    CHECK_THROWS_WITH_AS(lowest_eigenpairs(pt_well(0.08, 0.2, 0.0, 30.0, 4097), 1),
                         doctest::Contains("domain too small"), accuracy_error);
}

TEST_CASE("interpolation mode cross-check at the reference point") {
    const Params pr = Params::interpolation(3, -1.0, 2.2, 0.3);
    const SpectrumReport rep = check_interp_mode(1, 0, pr);
    CHECK(rep.closed_form == doctest::Approx(0.228125).epsilon(1e-12));
    // The pure h^2 truncation error of this well at the default grid is
    // 1.21e-4; refinement tests below confirm nothing else contributes.
    CHECK(std::fabs(rep.gap) < 1.5e-4);
    CHECK(rep.numeric > 0.0);
    CHECK(rep.numeric == doctest::Approx(rep.closed_form + rep.gap).epsilon(1e-12));
    CHECK(rep.n == 8193);
    CHECK(rep.half_width == 200.0);
}

TEST_CASE("radial ground mode matches and is the p/2 power of the extremal") {
    const Params pr = Params::interpolation(3, 0.0, 4.0, 1.0);
    const SpectrumReport rep = check_interp_mode(0, 0, pr);
    CHECK(rep.closed_form == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(std::fabs(rep.gap) < 1e-4);

    const LinearizationCoeffs c = linearization_coeffs(pr);
    SchrodingerSpec spec;
    const double kap = c.kappa, lam = c.lambda, mu = c.mu;
    spec.potential = [kap, lam, mu](double s) {
        const double ch = std::cosh(lam * s);
        return mu - kap / (ch * ch);
    };
    spec.angular_term = 0.0;
    spec.half_width = 200.0;
    spec.n = 8193;
    const auto pairs = lowest_eigenpairs(spec, 1);
    const int m = (int)pairs[0].vector.size();
    std::vector<double> wbar_half_p(m), wbar(m);
    const double t = 2.0 / (pr.p - 2.0);
    const double h = 2.0 * spec.half_width / (spec.n - 1);
    for (int k = 0; k < m; ++k) {
        const double s = -spec.half_width + (k + 1) * h;
        wbar[k] = std::pow(std::cosh(lam * s), -t);
        wbar_half_p[k] = std::pow(wbar[k], 0.5 * pr.p);
    }
    // The ground eigenfunction is the p/2 power of the extremal profile, not
    // the profile itself; the two coincide only in the p -> 2 limit.
    CHECK(correlation(pairs[0].vector, wbar_half_p) > 0.999999);
    CHECK(correlation(pairs[0].vector, wbar) < 0.99);
}

TEST_CASE("first nonradial mode is nonnegative without weights") {
    const SpectrumReport rep = check_interp_mode(1, 0, Params::interpolation(3, 0.0, 4.0, 1.0));
    CHECK(rep.closed_form == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(rep.numeric > 0.0);
    CHECK(std::fabs(rep.gap) < 1e-4);
}

TEST_CASE("ladder identities confirmed by finite differences") {
    // The (0,1) mode is the translation zero mode and (1,1) sits at d-1, exactly.
    for (auto [d, a, p, th] : {std::tuple<int, double, double, double>{3, -1.0, 2.2, 0.3},
                               {4, -0.7, 2.6, 0.5},
                               {2, -1.3, 3.0, 0.8}}) {
        const Params pr = Params::interpolation(d, a, p, th);
        CHECK(std::fabs(eig_interp(0, 1, pr)) < 1e-12);
        CHECK(eig_interp(1, 1, pr) == doctest::Approx(d - 1.0).epsilon(1e-12));
    }
    const SpectrumReport rep = check_interp_mode(1, 1, Params::interpolation(3, -1.0, 2.2, 0.3));
    CHECK(rep.closed_form == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::fabs(rep.numeric - 2.0) < 1e-3);
}

TEST_CASE("sector zero with theta below one is rejected") {
    CHECK_THROWS_AS(check_interp_mode(0, 0, Params::interpolation(3, -1.0, 2.2, 0.3)),
                    std::domain_error);
    CHECK_THROWS_AS(check_interp_mode(-1, 0, Params::interpolation(3, 0.0, 4.0, 1.0)),
                    std::domain_error);
}

TEST_CASE("oscillator mode cross-checks") {
    {
        // sigma = 3/2, gamma = 0.9: A = 9/2.6 and the (1,0) mode is negative.
        const SpectrumReport rep = check_glh_mode(1, 0, 0.9, 1.5, 3);
        CHECK(rep.closed_form == doctest::Approx(2.0 - 9.0 / 2.6).epsilon(1e-12));
        CHECK(rep.numeric < 0.0);
        CHECK(std::fabs(rep.gap) < 1e-3);
    }
    {
        // A = d-1 puts the mode exactly at zero.
        const SpectrumReport rep = check_glh_mode(1, 0, 0.75, 1.0, 3);
        CHECK(rep.closed_form == 0.0);
        CHECK(std::fabs(rep.numeric) < 1e-4);
    }
    {
        const double A = 4.0 / 2.2;
        const SpectrumReport rep = check_glh_mode(2, 0, 0.8, 1.0, 3);
        CHECK(rep.closed_form == doctest::Approx(6.0 - A).epsilon(1e-12));
        CHECK(std::fabs(rep.gap) < 1e-3);
    }
    CHECK_THROWS_AS(check_glh_mode(1, 0, 0.25, 1.0, 3), std::domain_error);
    CHECK_THROWS_AS(check_glh_mode(1, 0, 0.9, 0.0, 3), std::domain_error);
    CHECK_THROWS_AS(check_glh_mode(1, -1, 0.9, 1.0, 3), std::domain_error);
}

TEST_CASE("finite-difference gaps shrink at second order") {
    const Params pr = Params::interpolation(3, -1.0, 2.2, 0.3);
    const SpectrumReport coarse = check_interp_mode(1, 0, pr, GridSpec::make(200.0, 4097));
    const SpectrumReport fine = check_interp_mode(1, 0, pr, GridSpec::make(200.0, 8193));
    const double ratio = std::fabs(coarse.gap) / std::fabs(fine.gap);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);

    const GridSpec g = oscillator_grid(9.0 / 2.6, 1);
    const SpectrumReport oc =
        check_glh_mode(1, 0, 0.9, 1.5, 3, GridSpec::make(g.half_width, 4097));
    const SpectrumReport of =
        check_glh_mode(1, 0, 0.9, 1.5, 3, GridSpec::make(g.half_width, 8193));
    const double oratio = std::fabs(oc.gap) / std::fabs(of.gap);
    CHECK(oratio > 3.5);
    CHECK(oratio < 4.5);
}

TEST_CASE("negative-eigenvalue count agrees with the breaking verdicts") {
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    // Six draws conditioned on each verdict so both branches are exercised.
    for (int it = 0; it < 12; ++it) {
        const bool want_breaking = it % 2 == 0;
        // Redraw until the verdict matches the target, the lowest mode is
        // clear of zero, and the well curvature keeps the h^2 discretization
        // error far below that margin.
        Params pr = Params::interpolation(3, 0.0, 4.0, 1.0);
        int attempts = 0;
        for (;; ++attempts) {
            REQUIRE(attempts < 2000);
            const double a = -2.0 + 2.2 * uni(rng);
            const double p = 2.3 + 2.2 * uni(rng);
            const double vt = vartheta(p, 3);
            const double th = vt + (1.0 - vt) * uni(rng);
            pr = Params::interpolation(3, a, p, th);
            const LinearizationCoeffs c = linearization_coeffs(pr);
            const double curvature = 2.0 * pr.p / (pr.p - 2.0) * c.lambda * c.lambda;
            if (std::fabs(eig_interp(1, 0, pr)) > 0.1 && curvature < 6.0
                && (region_interp(pr) == Region::Breaking) == want_breaking)
                break;
        }
        SchrodingerSpec spec;
        const LinearizationCoeffs c = linearization_coeffs(pr);
        const double kap = c.kappa, lam = c.lambda, mu = c.mu;
        spec.potential = [kap, lam, mu](double s) {
            const double ch = std::cosh(lam * s);
            return mu - kap / (ch * ch);
        };
        spec.angular_term = 2.0;
        spec.half_width = 200.0;
        spec.n = 4097;
        // Two modes suffice: the second sits at d-1 = 2 exactly, and the
        // ladder increases with j, so any negative must be the first.
        const auto vals = lowest_eigenvalues(spec, 2);
        int negatives = 0;
        for (double v : vals) negatives += v < 0.0;
        CAPTURE(pr.a);
        CAPTURE(pr.p);
        CAPTURE(pr.theta);
        CHECK(negatives == (want_breaking ? 1 : 0));
    }

    for (int it = 0; it < 12; ++it) {
        const bool want_breaking = it % 2 == 0;
        double g = 1.0, a = -1.0;
        int attempts = 0;
        for (;; ++attempts) {
            REQUIRE(attempts < 2000);
            g = 0.76 + 2.0 * uni(rng);
            a = -2.5 + 2.8 * uni(rng);
            if (std::fabs(eig_glh(1, 0, g, a, 3)) > 0.05
                && (region_glh(g, a, 3) == Region::Breaking) == want_breaking)
                break;
        }
        const double sg = 0.5 - a;
        const double A = 4.0 * sg * sg / (4.0 * g - 1.0);
        SchrodingerSpec spec;
        spec.potential = [A](double s) { return 0.25 * A * A * s * s - 1.5 * A; };
        spec.angular_term = 2.0;
        const GridSpec box = oscillator_grid(A, 3);
        spec.half_width = box.half_width;
        spec.n = box.n;
        const auto vals = lowest_eigenvalues(spec, 3);
        int negatives = 0;
        for (double v : vals) negatives += v < 0.0;
        CAPTURE(g);
        CAPTURE(a);
        CHECK(negatives == (want_breaking ? 1 : 0));
    }
}
