#pragma once

#include <vector>

namespace cylhardy {

// Symmetric tridiagonal eigen-solver: Sturm-sequence bisection for values,
// inverse iteration for vectors. diag has size m, off size m-1.

// Number of eigenvalues strictly below x.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x);

// The `count` smallest eigenvalues, ascending, each bisected to
// ~1e-14 * spectral_radius absolute accuracy.
std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& off, int count);

// Unit eigenvector for an isolated eigenvalue estimate, by fixed-shift
// inverse iteration in extended precision. Residual ||T v - lambda v|| is
// returned through *residual when non-null.
std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off, double lambda,
                                        double* residual = nullptr);

} // namespace cylhardy
