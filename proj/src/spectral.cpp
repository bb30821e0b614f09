#include "cylhardy/spectral.hpp"

#include "cylhardy/angular.hpp"
#include "cylhardy/constants.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cylhardy {

namespace {

constexpr int kDefaultN = 8193;

double sech2(double x) {
    const double e = std::exp(-std::fabs(x));
    const double c = 0.5 * (1.0 / e + e);  // cosh, overflow-safe via 1/e = e^|x|
    return 1.0 / (c * c);
}

} // namespace

std::vector<EigenPair> lowest_eigenpairs(const SchrodingerSpec& spec, int count) {
    if (!spec.potential) throw_domain("SchrodingerSpec needs a potential");
    if (spec.n < 5) throw_domain("SchrodingerSpec needs n >= 5");
    if (!(spec.half_width > 0.0)) throw_domain("SchrodingerSpec needs half_width > 0");
    const int m = spec.n - 2;  // interior nodes
    if (count < 1 || count > m / 4)
        throw_domain("lowest_eigenpairs: count must be in [1, (n-2)/4]");

    const double h = 2.0 * spec.half_width / (spec.n - 1);
    std::vector<double> diag(m), off(m - 1, -1.0 / (h * h));
    for (int k = 0; k < m; ++k) {
        const double s = -spec.half_width + (k + 1) * h;
        const double v = spec.potential(s);
        if (!std::isfinite(v)) throw_domain("potential must be finite on the grid");
        diag[k] = 2.0 / (h * h) + v + spec.angular_term;
    }

    const std::vector<double> values = tridiag_eigenvalues(diag, off, count);
    // The decay check certifies bound states only: a mode at or above the
    // boundary potential level is a box artifact and legitimately fills the box.
    double threshold = std::min(spec.potential(-spec.half_width),
                                spec.potential(spec.half_width)) + spec.angular_term;
    if (!std::isfinite(threshold)) threshold = std::numeric_limits<double>::infinity();
    std::vector<EigenPair> out(count);
    for (int k = 0; k < count; ++k) {
        double residual = 0.0;
        out[k].value = values[k];
        out[k].vector = tridiag_eigenvector(diag, off, values[k], &residual);
        if (!(residual < 1e-8 * (2.0 / (h * h) + std::fabs(values[k]))))
            throw accuracy_error("eigenvector residual too large for eigenvalue "
                                 + std::to_string(values[k]), values[k], residual);
        const double edge = std::max(std::fabs(out[k].vector.front()),
                                     std::fabs(out[k].vector.back()));
        if (out[k].value < threshold && edge > 1e-12)
            throw accuracy_error("domain too small: eigenfunction reaches the boundary; "
                                 "suggested half_width = " + std::to_string(2.0 * spec.half_width),
                                 values[k], edge);
    }
    return out;
}

std::vector<double> lowest_eigenvalues(const SchrodingerSpec& spec, int count) {
    std::vector<double> out;
    out.reserve(count);
    for (const EigenPair& pair : lowest_eigenpairs(spec, count)) out.push_back(pair.value);
    return out;
}

SpectrumReport check_interp_mode(int i, int j, const Params& params, const GridSpec& grid) {
    if (i < 0 || j < 0) throw_domain("check_interp_mode requires i, j >= 0");
    if (i == 0 && params.theta < 1.0 - 1e-12)
        throw_domain("check_interp_mode: sector i = 0 with theta < 1 involves the rank-one "
                     "coupling term and is not certified; use i >= 1 or theta = 1");
    const LinearizationCoeffs c = linearization_coeffs(params);
    const double closed = eig_interp(i, j, params);

    SchrodingerSpec spec;
    const double kappa = c.kappa;
    const double lambda = c.lambda;
    const double mu = c.mu;
    spec.potential = [kappa, lambda, mu](double s) { return -kappa * sech2(lambda * s) + mu; };
    spec.angular_term = angular_eigenvalue(i, params.d);
    spec.half_width = grid.half_width;
    spec.n = grid.n;

    SpectrumReport rep;
    rep.i = i;
    rep.j = j;
    rep.closed_form = closed;
    rep.numeric = lowest_eigenvalues(spec, j + 1)[j];
    rep.gap = rep.numeric - rep.closed_form;
    rep.half_width = grid.half_width;
    rep.n = grid.n;
    return rep;
}

SpectrumReport check_interp_mode(int i, int j, const Params& params) {
    return check_interp_mode(i, j, params, GridSpec::make(200.0, kDefaultN));
}

SpectrumReport check_glh_mode(int i, int j, double gamma, double sigma, int d,
                              const GridSpec& grid) {
    if (i < 0 || j < 0) throw_domain("check_glh_mode requires i, j >= 0");
    if (d < 2) throw_domain("check_glh_mode requires d >= 2");
    if (!(gamma > 0.25)) throw_domain("check_glh_mode requires gamma > 1/4");
    if (!(sigma > 0.0)) throw_domain("check_glh_mode requires sigma > 0");
    const double big_a = 4.0 * sigma * sigma / (4.0 * gamma - 1.0);
    const double closed = angular_eigenvalue(i, d) + big_a * (j - 1.0);

    SchrodingerSpec spec;
    spec.potential = [big_a](double s) { return 0.25 * big_a * big_a * s * s - 1.5 * big_a; };
    spec.angular_term = angular_eigenvalue(i, d);
    spec.half_width = grid.half_width;
    spec.n = grid.n;

    SpectrumReport rep;
    rep.i = i;
    rep.j = j;
    rep.closed_form = closed;
    rep.numeric = lowest_eigenvalues(spec, j + 1)[j];
    rep.gap = rep.numeric - rep.closed_form;
    rep.half_width = grid.half_width;
    rep.n = grid.n;
    return rep;
}

SpectrumReport check_glh_mode(int i, int j, double gamma, double sigma, int d) {
    const double big_a = 4.0 * sigma * sigma / (4.0 * gamma - 1.0);
    return check_glh_mode(i, j, gamma, sigma, d, oscillator_grid(big_a, j + 1));
}

GridSpec oscillator_grid(double big_a, int count) {
    if (!(big_a > 0.0)) throw_domain("oscillator_grid requires A > 0");
    const double half = 12.0 * std::max(1.0, 1.0 / std::sqrt(big_a))
                      * std::sqrt(2.0 * count + 10.0);
    return GridSpec::make(half, kDefaultN);
}

} // namespace cylhardy
