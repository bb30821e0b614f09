#include "cylhardy/params.hpp"
#include "cylhardy/errors.hpp"

#include <cmath>
#include <string>

namespace cylhardy {

double vartheta(double p, int d) {
    if (d < 1) throw_domain("vartheta: dimension must be >= 1");
    if (!(p >= 2.0)) throw_domain("vartheta: exponent must satisfy p >= 2");
    return double(d) * (p - 2.0) / (2.0 * p);
}

namespace {

double sigma_of(int d, double a) {
    const double sigma = 0.5 * (double(d) - 2.0 - 2.0 * a);
    if (!(sigma > 0.0))
        throw_domain("Params: need a < (d-2)/2 so that sigma = (d-2-2a)/2 > 0");
    return sigma;
}

} // namespace

Params Params::interpolation(int d, double a, double p, double theta) {
    if (d < 1) throw_domain("Params: dimension must be >= 1");
    Params q;
    q.d = d;
    q.a = a;
    q.sigma = sigma_of(d, a);
    if (!(p > 2.0)) throw_domain("Params: interpolation mode needs p > 2");
    if (d >= 3) {
        const double pstar = 2.0 * d / (double(d) - 2.0);
        if (p > pstar * (1.0 + 1e-12))
            throw_domain("Params: p exceeds the critical exponent 2d/(d-2)");
    }
    const double lo = vartheta(p, d);
    if (theta < lo - 1e-12 || theta > 1.0 + 1e-12)
        throw_domain("Params: theta must lie in [vartheta(p,d), 1]");
    q.p = p;
    q.theta = theta;
    q.gamma = 0.0;
    q.eta = 1.0 - lo;
    q.mode = Mode::Interpolation;
    return q;
}

Params Params::log_hardy(int d, double a, double gamma) {
    if (d < 1) throw_domain("Params: dimension must be >= 1");
    Params q;
    q.d = d;
    q.a = a;
    q.sigma = sigma_of(d, a);
    if (!(gamma >= 0.25))
        throw_domain("Params: log-Hardy mode needs gamma >= 1/4");
    q.p = 2.0;
    q.theta = 0.0;
    q.gamma = gamma;
    q.eta = 1.0;
    q.mode = Mode::LogHardy;
    return q;
}

} // namespace cylhardy
