#pragma once

#include "cylhardy/profile.hpp"
#include "cylhardy/quadrature.hpp"

namespace cylhardy {

enum class InequalityId { Interp1D, GLH1D, LSICylinder, Hardy, HS };

const char* inequality_name(InequalityId id);

// Composite-Simpson value on a profile's grid with leveled Richardson
// extrapolation and a decay-envelope tail bound. tail_power is the power of
// the profile in the integrand (it sets the tail width).
struct GridIntegral {
    double value = 0.0;
    double error = 0.0;
};

GridIntegral profile_l2(const Profile& w);                   // int w^2
GridIntegral profile_dirichlet(const Profile& w);            // int (w')^2
GridIntegral profile_power(const Profile& w, double p);      // int |w|^p
GridIntegral profile_integral(const Profile& anchor, const std::vector<double>& integrand,
                              double tail_power);

// Both sides of one inequality instance, oriented so deficit = rhs - lhs >= 0
// is the claim; quad_error bounds the numerical uncertainty of the deficit.
struct DeficitReport {
    InequalityId inequality_id = InequalityId::Interp1D;
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;
    double quad_error = 0.0;
};

// (int |w|^p)^(2/p) vs K(theta,p,sigma) (int w'^2 + sigma^2 int w^2)^theta (int w^2)^(1-theta).
// Derivatives by centered differences; raw (unnormalized) sides.
DeficitReport quotient_interp(const Profile& w, double theta, double p, double sigma,
                              const QuadratureConfig& cfg = QuadratureConfig::defaults());

// int w^2 log(w^2 / int w^2) + K(gamma,sigma) int w^2 vs
// 2 gamma int w^2 log(int w'^2 / int w^2 + sigma^2), reported per unit
// L^2 mass so the deficit is invariant under w -> c*w.
DeficitReport deficit_glh(const Profile& w, double gamma, double sigma,
                          const QuadratureConfig& cfg = QuadratureConfig::defaults());

// Cylinder log-Sobolev check for w(s,omega) = w0(s) (1 + amplitude * Y_i(omega)):
// entropy + K_d^sigma * mass vs max{2/(d-1), 2 sigma^2} * Dirichlet,
// per unit cylinder mass. The angular direction reduces to a 1D rule.
DeficitReport verify_lsi_cylinder(const Profile& w0, int i, double amplitude,
                                  int d, double sigma,
                                  const QuadratureConfig& cfg = QuadratureConfig::defaults());

// Weighted Hardy inequality for the radial profile u:
// (d-2-2a)^2/4 * int u^2 |x|^(-2a-2) dx vs int |grad u|^2 |x|^(-2a) dx,
// evaluated by log-radial quadrature on the cylinder side.
DeficitReport verify_hardy(const EuclideanProfile& u,
                           const QuadratureConfig& cfg = QuadratureConfig::defaults());

// Radial Hardy-Sobolev check (a = 0, d >= 3, 2 < p <= 2d/(d-2)):
// (int |u|^p |x|^(-bp) dx)^(2/p) vs c_hs(p,d) int |grad u|^2 dx.
DeficitReport verify_hs(const EuclideanProfile& u, double p,
                        const QuadratureConfig& cfg = QuadratureConfig::defaults());

} // namespace cylhardy
