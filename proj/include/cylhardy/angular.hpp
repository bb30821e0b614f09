#pragma once

#include <functional>
#include <vector>

namespace cylhardy {

// Reduction of integrals over the unit sphere S^(d-1) against its normalized
// measure to one dimension: for F depending on a single coordinate direction,
// int F dmu = int_{-1}^{1} F(t) (1-t^2)^((d-3)/2) dt / Z_d. Gauss nodes for
// exactly that weight (d = 2 gives the Chebyshev endpoint-singular case),
// so polynomial integrands up to degree 2*size-1 are exact.
struct AngularRule {
    int d = 0;
    std::vector<double> t;  // ascending, symmetric about 0
    std::vector<double> w;  // positive, sums to 1

    static AngularRule make(int d, int size = 64);

    int size() const { return static_cast<int>(t.size()); }
    double integrate(const std::function<double(double)>& f) const;
};

// Values at the rule's nodes of the degree-i axis-symmetric spherical
// harmonic, L^2(dmu)-normalized: Y_0 = 1, Y_1 = sqrt(d)*t, ... with
// -Laplace-Beltrami eigenvalue i(d+i-2).
std::vector<double> harmonic_on_axis(int i, const AngularRule& rule);

double angular_eigenvalue(int i, int d);

} // namespace cylhardy
