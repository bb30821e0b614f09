#include "cylhardy/angular.hpp"

#include "cylhardy/errors.hpp"
#include "cylhardy/tridiag.hpp"

#include <cmath>

namespace cylhardy {

namespace {

// Off-diagonal entries of the Jacobi matrix for the orthonormal polynomials
// of the weight (1-t^2)^alpha on [-1,1] (zero diagonal by symmetry).
// b_1^2 = 1/(2 alpha + 3) in reduced form so alpha = -1/2 is regular.
std::vector<double> jacobi_offdiag(double alpha, int m) {
    std::vector<double> b(m - 1);
    b[0] = std::sqrt(1.0 / (2.0 * alpha + 3.0));
    for (int k = 2; k < m; ++k)
        b[k - 1] = std::sqrt(k * (k + 2.0 * alpha)
                             / ((2.0 * k + 2.0 * alpha + 1.0) * (2.0 * k + 2.0 * alpha - 1.0)));
    return b;
}

} // namespace

AngularRule AngularRule::make(int d, int size) {
    if (d < 2) throw_domain("AngularRule requires d >= 2");
    if (size < 2 || size > 4096) throw_domain("AngularRule size out of range");

    const double alpha = 0.5 * (d - 3);
    const std::vector<double> diag(size, 0.0);
    const std::vector<double> off = jacobi_offdiag(alpha, size);

    AngularRule rule;
    rule.d = d;
    rule.t = tridiag_eigenvalues(diag, off, size);
    rule.w.resize(size);
    double wsum = 0.0;
    for (int q = 0; q < size; ++q) {
        const std::vector<double> v = tridiag_eigenvector(diag, off, rule.t[q]);
        rule.w[q] = v[0] * v[0];  // Golub-Welsch; mu_0 = 1 after normalization
        wsum += rule.w[q];
    }
    for (double& wq : rule.w) wq /= wsum;

    // Enforce the exact +-t symmetry bisection only delivers to tolerance.
    for (int q = 0; q < size / 2; ++q) {
        const int r = size - 1 - q;
        const double tq = 0.5 * (rule.t[q] - rule.t[r]);
        rule.t[q] = tq;
        rule.t[r] = -tq;
        const double wq = 0.5 * (rule.w[q] + rule.w[r]);
        rule.w[q] = wq;
        rule.w[r] = wq;
    }
    if (size % 2 == 1) rule.t[size / 2] = 0.0;
    return rule;
}

double AngularRule::integrate(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (int q = 0; q < size(); ++q) acc += w[q] * f(t[q]);
    return acc;
}

std::vector<double> harmonic_on_axis(int i, const AngularRule& rule) {
    if (i < 0) throw_domain("harmonic_on_axis requires i >= 0");
    const int m = rule.size();
    if (i >= m) throw_domain("harmonic degree exceeds rule resolution");
    const double alpha = 0.5 * (rule.d - 3);
    const std::vector<double> b = jacobi_offdiag(alpha, std::max(i + 1, 2));

    std::vector<double> out(m);
    for (int q = 0; q < m; ++q) {
        double prev = 0.0, cur = 1.0;  // p_{-1}, p_0
        for (int k = 0; k < i; ++k) {
            const double next = (rule.t[q] * cur - (k > 0 ? b[k - 1] * prev : 0.0)) / b[k];
            prev = cur;
            cur = next;
        }
        out[q] = cur;
    }
    return out;
}

double angular_eigenvalue(int i, int d) {
    if (i < 0 || d < 2) throw_domain("angular_eigenvalue requires i >= 0, d >= 2");
    return static_cast<double>(i) * (d + i - 2.0);
}

} // namespace cylhardy
