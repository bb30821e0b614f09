#pragma once

#include "cylhardy/params.hpp"

namespace cylhardy {

// Sharp constant of the one-dimensional interpolation inequality
//   (int |w|^p)^(2/p) <= K(theta,p,sigma) (int |w'|^2 + sigma^2 int w^2)^theta (int w^2)^(1-theta)
// for p > 2, sigma > 0, vartheta(p,1) <= theta <= 1. At theta = vartheta(p,1)
// the constant is sigma-independent (Gagliardo-Nirenberg endpoint).
double k_interp(double theta, double p, double sigma);

// Scale of the sech-power extremal w(s) = cosh(lambda s)^(-2/(p-2)).
// Requires theta > vartheta(p,1); at the endpoint no extremal exists.
double lambda_extremal(double theta, double p, double sigma);

// Sharp constant among radial functions, C*(theta,p,a), d >= 2.
double c_star_interp(const Params& params);

// Radial Hardy-Sobolev constant (a = 0), 2 <= p <= 2d/(d-2), d >= 3.
// Interpolates between the Hardy constant 4/(d-2)^2 at p = 2 and the
// Sobolev constant at the critical exponent.
double c_hs(double p, int d);

// Best constant in the Sobolev inequality on R^d, d >= 3.
double sobolev_constant(int d);

// Sharp additive constant K(gamma,sigma) of the one-dimensional
// logarithmic inequality; gamma >= 1/4, sigma > 0. The gamma = 1/4
// endpoint has its own closed form.
double k_log_hardy(double gamma, double sigma);

// Sharp constant of the generalized logarithmic Hardy inequality among
// radial functions; gamma >= 1/4, d >= 1, a < (d-2)/2.
double c_star_glh(double gamma, double a, int d);

// Radial logarithmic Hardy constant, the gamma = d/4, a = 0 case; d >= 3.
double c_star_lh(int d);

// Additive constant of the log-Sobolev inequality on the cylinder
// R x S^(d-1); d >= 2, sigma > 0.
double k_d_sigma(int d, double sigma);

// Upper bound obtained from the Hoelder/CKN chain. The CKN constants are
// replaced by their radial values; proxy is set when (d,a) falls outside
// the regimes where radial optimality is known (d = 1, or d >= 3 with
// a >= 0), in which case the value certifiably bounds only C*.
struct UpperBound {
    double value = 0.0;
    bool proxy = false;
};

// k_grid is the number of subintervals of the uniform k-grid; doubling it
// refines the grid in place (new points interleave the old ones), so the
// minimum is non-increasing under doubling.
UpperBound upper_bound_interp(const Params& params, int k_grid = 512);
UpperBound upper_bound_glh(double gamma, double a, int d);

// Coefficients of the quadratic form governing the second variation around
// the radial extremal: Q[phi] = int |grad phi|^2 - kappa int wbar^(p-2) phi^2
// + mu int phi^2 - nu (int wbar phi)^2, with all integrals taken against
// ds x (normalized sphere measure). nu vanishes at theta = 1.
struct LinearizationCoeffs {
    double kappa = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double lambda = 0.0;
};

LinearizationCoeffs linearization_coeffs(const Params& params);

// Closed-form eigenvalue of mode (i,j): spherical harmonic degree i >= 0,
// longitudinal quantum number j >= 0. Throws when the mode is not in the
// discrete spectrum of the Poeschl-Teller well.
double eig_interp(int i, int j, const Params& params);

// Same for the logarithmic-Hardy linearization (harmonic oscillator):
// lambda_{i,j} = i(d+i-2) + A(j-1) with A = 4 sigma^2/(4 gamma - 1).
double eig_glh(int i, int j, double gamma, double a, int d);

// Threshold Theta(a,p,d): radial symmetry breaks for vartheta <= theta < Theta.
double theta_breaking(double a, double p, int d);

// Largest a for which the breaking window [vartheta, Theta) is nonempty.
double a_minus(double p, int d);

enum class Region { Breaking, NotDecided };

// Verdict of the symmetry-breaking test. Breaking is a proved verdict;
// NotDecided covers both proved-symmetric-unknown and out-of-theorem ranges.
Region region_interp(const Params& params);
Region region_glh(double gamma, double a, int d);

} // namespace cylhardy
