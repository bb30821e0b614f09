#pragma once

namespace cylhardy {

// Gamma function for real x > 0, Lanczos approximation.
// Relative accuracy better than 1e-13 on (0, 50]; overflows past x ~ 171.
double gamma_fn(double x);

// log Gamma(x) for x > 0. Safe for large arguments where gamma_fn overflows.
double log_gamma_fn(double x);

// f(q) = integral of cosh(s)^(-q) over the real line
//      = sqrt(pi) * Gamma(q/2) / Gamma((q+1)/2),  q > 0.
double cosh_moment(double q);

// Surface measure of the unit sphere S^(d-1) in R^d: 2 pi^(d/2) / Gamma(d/2).
// d = 1 gives 2 (the two-point sphere S^0), which is the correct weight for
// one-dimensional radial integration.
double sphere_area(int d);
double log_sphere_area(int d);

// Unit sphere S^(d-1), d >= 2, with its surface measure.
struct SphereGeometry {
    int d;
    double area;

    static SphereGeometry make(int d);
};

} // namespace cylhardy
