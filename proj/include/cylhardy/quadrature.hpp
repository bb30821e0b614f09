#pragma once

#include <functional>
#include <vector>

namespace cylhardy {

// Tolerances for all quadrature-backed routines. The environment variable
// CYLHARDY_QUAD_TOL, when set, overrides both tolerances of defaults().
struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_refinements = 24;

    static QuadratureConfig defaults();
};

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0; // certified bound: refinement estimate + tail bound
};

// Integral of f over the whole real line. f must decay at least like
// exp(-decay_rate*|s|) up to a moderate amplitude factor; the truncation
// radius is chosen from that rate so the analytic tail bound stays below
// abs_tol/10. Composite Simpson with interval halving until the refinement
// estimate meets the tolerance. Throws accuracy_error (carrying the best
// estimate) when max_refinements is exhausted.
IntegralEstimate integrate_line(const std::function<double(double)>& f,
                                double decay_rate,
                                const QuadratureConfig& cfg = QuadratureConfig::defaults());

// Composite Simpson on uniformly sampled values, spacing h, odd count.
double simpson(const std::vector<double>& values, double h);

// Simpson value together with a refinement error estimate obtained by
// comparing against the half-resolution grid (Richardson style). Falls back
// to a conservative trapezoid comparison when the count is not 1 mod 4.
IntegralEstimate simpson_with_error(const std::vector<double>& values, double h);

} // namespace cylhardy
