#pragma once

#include "cylhardy/params.hpp"
#include "cylhardy/profile.hpp"

#include <functional>
#include <vector>

namespace cylhardy {

// 1D Schrodinger operator -d^2/ds^2 + potential(s) + angular_term on
// [-L, L] with Dirichlet ends, discretized by the 3-point stencil.
// angular_term carries the i(d+i-2) spherical-harmonic shift.
struct SchrodingerSpec {
    std::function<double(double)> potential;
    double angular_term = 0.0;
    double half_width = 0.0;
    int n = 0;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;  // interior nodes, unit l2 norm
};

// Ascending lowest eigenvalues; each value certified by the Sturm count,
// each vector by an O(1e-8) relative residual and by |v| <= 1e-12 at the
// first/last interior node (a posteriori Dirichlet-truncation check).
std::vector<EigenPair> lowest_eigenpairs(const SchrodingerSpec& spec, int count);
std::vector<double> lowest_eigenvalues(const SchrodingerSpec& spec, int count);

struct SpectrumReport {
    int i = 0;
    int j = 0;
    double closed_form = 0.0;
    double numeric = 0.0;
    double gap = 0.0;  // numeric - closed_form
    double half_width = 0.0;
    int n = 0;
};

// Finite-difference cross-check of the closed-form eigenvalue lambda_{i,j}
// of the linearization around the interpolation extremal (Poeschl-Teller
// well -kappa sech^2(lambda s) + mu). The rank-one term vanishes on
// sectors i >= 1 and at theta = 1; other cases are rejected.
SpectrumReport check_interp_mode(int i, int j, const Params& params, const GridSpec& grid);
SpectrumReport check_interp_mode(int i, int j, const Params& params);  // L = 200, n = 8193

// Same for the logarithmic-Hardy linearization (harmonic oscillator
// (A^2/4) s^2 - (3/2) A with A = 4 sigma^2/(4 gamma - 1)).
SpectrumReport check_glh_mode(int i, int j, double gamma, double sigma, int d,
                              const GridSpec& grid);
SpectrumReport check_glh_mode(int i, int j, double gamma, double sigma, int d);

// Default oscillator box: L = 12 max(1, A^(-1/2)) sqrt(2 count + 10).
GridSpec oscillator_grid(double big_a, int count);

} // namespace cylhardy
