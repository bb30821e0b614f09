#include "cylhardy/tridiag.hpp"

#include "cylhardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <numeric>

namespace cylhardy {

namespace {

void check_shape(const std::vector<double>& diag, const std::vector<double>& off) {
    if (diag.empty()) throw_domain("tridiagonal matrix must be nonempty");
    if (off.size() + 1 != diag.size())
        throw_domain("tridiagonal off-diagonal must have size diag.size() - 1");
}

// Gershgorin bounds; every eigenvalue lies in [lo, hi].
std::pair<double, double> spectral_bounds(const std::vector<double>& diag,
                                          const std::vector<double>& off) {
    const int m = static_cast<int>(diag.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < m; ++i) {
        const double radius = (i > 0 ? std::fabs(off[i - 1]) : 0.0)
                            + (i + 1 < m ? std::fabs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    return {lo, hi};
}

} // namespace

int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
    check_shape(diag, off);
    const int m = static_cast<int>(diag.size());
    // LDL^T pivots of T - xI; the count of negative pivots equals the count
    // of eigenvalues below x (Sylvester). Zero pivots are nudged.
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < m; ++i) {
        if (q == 0.0) q = tiny;
        q = diag[i] - x - off[i - 1] * off[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> tridiag_eigenvalues(const std::vector<double>& diag,
                                        const std::vector<double>& off, int count) {
    check_shape(diag, off);
    const int m = static_cast<int>(diag.size());
    if (count < 1 || count > m) throw_domain("tridiag_eigenvalues: bad count");

    auto [lo, hi] = spectral_bounds(diag, off);
    const double span = std::max(hi - lo, 1.0);
    const double tol = 1e-14 * span + 1e-300;

    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) {
        // Invariant: fewer than k+1 eigenvalues below a, at least k+1 below b.
        double a = lo, b = hi + tol;
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(diag, off, mid) >= k + 1) b = mid;
            else a = mid;
        }
        out[k] = 0.5 * (a + b);
    }
    return out;
}

namespace {

// Solves (T - lambda I) x = b in place by LU with partial pivoting
// specialized to the tridiagonal band (one fill-in diagonal). Extended
// precision keeps the decayed tails of bound-state eigenvectors clean, which
// the a posteriori boundary check upstream depends on.
void shifted_solve(const std::vector<long double>& diag, const std::vector<long double>& off,
                   long double lambda, std::vector<long double>& x) {
    const int m = static_cast<int>(diag.size());
    std::vector<long double> d0(m), d1(m, 0.0L), d2(m, 0.0L);
    std::vector<long double> sub(m, 0.0L);
    for (int i = 0; i < m; ++i) d0[i] = diag[i] - lambda;
    for (int i = 0; i + 1 < m; ++i) { d1[i] = off[i]; sub[i] = off[i]; }

    const long double tiny = std::numeric_limits<long double>::epsilon();
    for (int i = 0; i + 1 < m; ++i) {
        if (std::fabs(sub[i]) > std::fabs(d0[i])) {
            std::swap(d0[i], sub[i]);
            std::swap(d1[i], d0[i + 1]);
            if (i + 2 < m) { d2[i] = d1[i + 1]; d1[i + 1] = 0.0L; }
            std::swap(x[i], x[i + 1]);
        }
        if (d0[i] == 0.0L) d0[i] = tiny;
        const long double l = sub[i] / d0[i];
        d0[i + 1] -= l * d1[i];
        if (i + 2 < m) d1[i + 1] -= l * d2[i];
        x[i + 1] -= l * x[i];
    }
    if (d0[m - 1] == 0.0L) d0[m - 1] = tiny;
    for (int i = m - 1; i >= 0; --i) {
        long double v = x[i];
        if (i + 1 < m) v -= d1[i] * x[i + 1];
        if (i + 2 < m) v -= d2[i] * x[i + 2];
        x[i] = v / d0[i];
    }
}

} // namespace

std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off, double lambda,
                                        double* residual) {
    check_shape(diag, off);
    const int m = static_cast<int>(diag.size());
    auto [lo, hi] = spectral_bounds(diag, off);
    const double span = std::max(hi - lo, 1.0);

    const std::vector<long double> d(diag.begin(), diag.end());
    const std::vector<long double> e(off.begin(), off.end());

    // Deterministic pseudo-random start: a symmetric start vector has exactly
    // zero overlap with odd-parity eigenvectors and stalls the iteration.
    std::vector<long double> v(m);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < m; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        v[i] = static_cast<long double>(state >> 11) / 9007199254740992.0L - 0.5L;
    }

    // Inverse iteration with the shift held fixed at the bisection value: the
    // shift is already accurate to ~1e-14 * span, so each pass damps foreign
    // components by ~(1e-14 * span) / gap and the target dominates after two.
    long double res = span;
    for (int pass = 0; pass < 4; ++pass) {
        shifted_solve(d, e, static_cast<long double>(lambda), v);
        long double nv = 0.0L;
        for (const long double c : v) nv += c * c;
        nv = std::sqrt(nv);
        if (!(nv > 0.0L) || !std::isfinite(static_cast<double>(nv))) {
            std::fill(v.begin(), v.end(), 0.0L);
            v[pass % m] = 1.0L;
            continue;
        }
        for (long double& c : v) c /= nv;

        res = 0.0L;
        for (int i = 0; i < m; ++i) {
            long double tv = (d[i] - lambda) * v[i];
            if (i > 0) tv += e[i - 1] * v[i - 1];
            if (i + 1 < m) tv += e[i] * v[i + 1];
            res += tv * tv;
        }
        res = std::sqrt(res);
        if (res < 1e-13L * span) break;
    }
    if (residual) *residual = static_cast<double>(res);

    // Deterministic sign: largest-magnitude component positive.
    int imax = 0;
    for (int i = 1; i < m; ++i)
        if (std::fabs(v[i]) > std::fabs(v[imax])) imax = i;
    std::vector<double> out(m);
    const long double flip = v[imax] < 0.0L ? -1.0L : 1.0L;
    for (int i = 0; i < m; ++i) out[i] = static_cast<double>(flip * v[i]);
    return out;
}

} // namespace cylhardy
