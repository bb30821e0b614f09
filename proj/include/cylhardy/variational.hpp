#pragma once

#include "cylhardy/params.hpp"
#include "cylhardy/profile.hpp"
#include "cylhardy/quadrature.hpp"

namespace cylhardy {

// Two-mode ansatz on the cylinder: w(s,omega) = w0(s) + w1(s) Y_1(omega),
// with Y_1 the first L^2(dmu)-normalized spherical harmonic. Both profiles
// live on one shared grid.
struct TwoModeState {
    Profile w0;
    Profile w1;
};

TwoModeState make_two_mode(Profile w0, Profile w1);

// Interpolation-quotient data, all cylinder integrals against ds x dmu:
//   energy = int (|w0'|^2 + |w1'|^2 + (d-1) w1^2) + sigma^2 int (w0^2 + w1^2)
//   quotient = (int_C |w|^p)^(2/p) / (energy^theta mass^(1-theta)).
// Any state's quotient is a rigorous lower bound on the unrestricted sharp
// constant after sphere-area normalization; a quotient strictly above
// k_interp(theta, p, sigma) certifies a non-radial state beating the radial
// optimum.
struct QuotientValue {
    double lhs = 0.0;
    double energy = 0.0;
    double mass = 0.0;
    double quotient = 0.0;
    double quad_error = 0.0;  // bound on the quotient's numerical error
    Params params;
};

QuotientValue evaluate_quotient(const TwoModeState& state, const Params& params,
                                const QuadratureConfig& cfg = QuadratureConfig::defaults());

struct MinimizeResult {
    TwoModeState state;
    QuotientValue quotient;
    double delta = 0.0;      // quotient / K(theta,p,sigma) - 1
    double error_sum = 0.0;  // quadrature error entering delta
    double objective = 0.0;  // final value of the discrete deficit functional
    int iterations = 0;
    bool stalled = false;
};

// Gradient descent with Armijo backtracking on the discretized deficit
//   J[w] = energy - K^(-1/theta) lhs_p^(1/theta) mass^(-(1-theta)/theta),
// kept scale-free by mass renormalization. The returned delta > 0 certifies
// a non-radial state beating the radial sharp constant (up to error_sum).
MinimizeResult minimize_deficit(const Params& params, const TwoModeState& init,
                                int max_iterations = 10000, double rel_tol = 1e-10);

// Start state for the bifurcation test: w0 = the radial extremal, w1 = eps
// times the sector i = 1 finite-difference ground state, scaled by ||w0||_L2.
TwoModeState make_breaking_init(const Params& params, double eps, const GridSpec& grid);

} // namespace cylhardy
