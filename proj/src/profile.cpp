#include "cylhardy/profile.hpp"

#include "cylhardy/constants.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/format.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace cylhardy {

namespace {

double log_cosh(double x) {
    const double ax = std::fabs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

// Envelope value A * exp(-rate*|s|) resp. A * exp(-rate*s^2), with the
// exponent halved: the certification tolerates a factor-two margin.
double slack_envelope(DecayKind decay, double rate, double amplitude, double s) {
    const double arg = (decay == DecayKind::Exponential) ? std::fabs(s) : s * s;
    return amplitude * std::exp(-0.5 * rate * arg);
}

void certify(const GridSpec& grid, const std::vector<double>& values,
             DecayKind decay, double rate, double amplitude) {
    if (amplitude == 0.0) return;
    const double core = (decay == DecayKind::Exponential) ? 1.0 / rate : 1.0 / std::sqrt(rate);
    if (grid.h() > 0.7 * core)
        throw accuracy_error("grid too coarse to resolve the declared decay rate: h = "
                             + fmt17(grid.h()) + " exceeds 0.7 * core width " + fmt17(0.7 * core),
                             0.0, std::numeric_limits<double>::infinity());
    const double bound = std::max(slack_envelope(decay, rate, amplitude, grid.half_width),
                                  amplitude * 1e-280);
    if (std::fabs(values.front()) > bound || std::fabs(values.back()) > bound)
        throw_domain("profile violates its declared decay envelope at the grid boundary "
                     "(boundary samples " + fmt17(values.front()) + ", " + fmt17(values.back())
                     + " exceed " + fmt17(bound) + ")");
}

} // namespace

GridSpec GridSpec::make(double half_width, int n) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw_domain("GridSpec requires half_width > 0");
    if (n < 5 || n % 2 == 0)
        throw_domain("GridSpec requires an odd sample count n >= 5");
    if (n > (1 << 24))
        throw_domain("GridSpec sample count too large");
    return GridSpec{half_width, n};
}

GridSpec GridSpec::auto_for(DecayKind decay, double decay_rate) {
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        throw_domain("GridSpec::auto_for requires decay_rate > 0");
    const double half = (decay == DecayKind::Exponential) ? 40.0 / decay_rate
                                                          : std::sqrt(40.0 / decay_rate);
    return make(half, 8193);
}

Profile Profile::sample(const std::function<double(double)>& f, const GridSpec& grid,
                        DecayKind decay, double decay_rate) {
    std::vector<double> values(grid.n);
    for (int k = 0; k < grid.n; ++k) values[k] = f(grid.s(k));
    return from_samples(grid, std::move(values), decay, decay_rate);
}

Profile Profile::from_samples(const GridSpec& grid, std::vector<double> values,
                              DecayKind decay, double decay_rate) {
    GridSpec checked = GridSpec::make(grid.half_width, grid.n);
    if (static_cast<int>(values.size()) != checked.n)
        throw_domain("profile sample count does not match its grid");
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        throw_domain("profile requires decay_rate > 0");

    double amplitude = 0.0;
    for (double v : values) {
        if (!std::isfinite(v)) throw_domain("profile samples must be finite");
        amplitude = std::max(amplitude, std::fabs(v));
    }
    bool even = true;
    for (int k = 0; k < checked.n && even; ++k)
        even = std::fabs(values[k] - values[checked.n - 1 - k]) < 1e-12;

    certify(checked, values, decay, decay_rate, amplitude);

    Profile p;
    p.grid_ = checked;
    p.values_ = std::move(values);
    p.decay_ = decay;
    p.decay_rate_ = decay_rate;
    p.amplitude_ = amplitude;
    p.even_ = even;
    return p;
}

Profile interp_extremal(double theta, double p, double sigma, const GridSpec& grid) {
    const double lambda = lambda_extremal(theta, p, sigma);
    const double t = 2.0 / (p - 2.0);
    const double rate = lambda * t;  // asymptotic decay of cosh(lambda s)^(-t)
    auto w = [lambda, t](double s) { return std::exp(-t * log_cosh(lambda * s)); };
    return Profile::sample(w, grid, DecayKind::Exponential, rate);
}

Profile interp_extremal(double theta, double p, double sigma) {
    const double lambda = lambda_extremal(theta, p, sigma);
    const double t = 2.0 / (p - 2.0);
    // 40/rate alone is not enough for p near 2: the exponential regime only
    // starts at |s| ~ 1/lambda, so keep at least three widths of the well.
    const double half = std::max(40.0 / (lambda * t), 3.0 / lambda);
    return interp_extremal(theta, p, sigma, GridSpec::make(half, 8193));
}

Profile glh_extremal(double gamma, double sigma, const GridSpec& grid) {
    if (!(gamma > 0.25))
        throw_domain("no extremal exists for gamma <= 1/4; glh_extremal requires gamma > 1/4");
    if (!(sigma > 0.0)) throw_domain("glh_extremal requires sigma > 0");
    const double g = sigma * sigma / (4.0 * gamma - 1.0);
    const double amp = std::pow(2.0 * g / M_PI, 0.25);
    auto w = [g, amp](double s) { return amp * std::exp(-g * s * s); };
    return Profile::sample(w, grid, DecayKind::Gaussian, g);
}

Profile glh_extremal(double gamma, double sigma) {
    if (!(gamma > 0.25))
        throw_domain("no extremal exists for gamma <= 1/4; glh_extremal requires gamma > 1/4");
    if (!(sigma > 0.0)) throw_domain("glh_extremal requires sigma > 0");
    const double g = sigma * sigma / (4.0 * gamma - 1.0);
    return glh_extremal(gamma, sigma, GridSpec::auto_for(DecayKind::Gaussian, g));
}

EuclideanProfile to_euclidean(const Profile& w, int d, double a) {
    if (d < 1) throw_domain("to_euclidean requires d >= 1");
    const double sigma = 0.5 * (d - 2.0) - a;
    if (!(sigma > 0.0)) throw_domain("to_euclidean requires a < (d-2)/2");

    const int n = w.n();
    EuclideanProfile out;
    out.r.resize(n);
    out.u.resize(n);
    out.d = d;
    out.a = a;
    out.grid = w.grid();
    out.decay = w.decay();
    out.decay_rate = w.decay_rate();
    for (int m = 0; m < n; ++m) {
        const int k = n - 1 - m;  // ascending r = exp(-s) reverses the s order
        const double s = w.s(k);
        out.r[m] = std::exp(-s);
        out.u[m] = std::exp(sigma * s) * w.values()[k];
        if (!std::isfinite(out.u[m]))
            throw_domain("to_euclidean: transformed values overflow; profile decays slower than r^(-(d-2-2a)/2)");
    }
    return out;
}

Profile from_euclidean(const EuclideanProfile& u) {
    const int d = u.d;
    if (d < 1) throw_domain("from_euclidean requires d >= 1");
    const double sigma = 0.5 * (d - 2.0) - u.a;
    if (!(sigma > 0.0)) throw_domain("from_euclidean requires a < (d-2)/2");

    const int n = static_cast<int>(u.r.size());
    if (n != static_cast<int>(u.u.size()) || n != u.grid.n)
        throw_domain("from_euclidean: inconsistent sample counts");
    std::vector<double> values(n);
    for (int m = 0; m < n; ++m) {
        const int k = n - 1 - m;
        const double s = u.grid.s(k);
        if (!(u.r[m] > 0.0) || std::fabs(-std::log(u.r[m]) - s) > 1e-9 * std::max(1.0, std::fabs(s)))
            throw_domain("from_euclidean requires a log-uniform radial grid symmetric about r = 1");
        values[k] = std::exp(-sigma * s) * u.u[m];
    }
    return Profile::from_samples(u.grid, std::move(values), u.decay, u.decay_rate);
}

void write_csv(std::ostream& out, const Profile& w) {
    out << "s,w\n";
    for (int k = 0; k < w.n(); ++k)
        out << fmt17(w.s(k)) << ',' << fmt17(w.values()[k]) << '\n';
}

void write_csv(std::ostream& out, const EuclideanProfile& u) {
    out << "r,u\n";
    for (std::size_t m = 0; m < u.r.size(); ++m)
        out << fmt17(u.r[m]) << ',' << fmt17(u.u[m]) << '\n';
}

namespace {

// Parses two-column numeric CSV, skipping one optional header line.
void read_two_columns(std::istream& in, std::vector<double>& x, std::vector<double>& y) {
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double c0 = 0.0, c1 = 0.0;
        if (!(row >> c0 >> c1)) {
            if (first) { first = false; continue; }  // header
            throw_domain("malformed CSV row: " + line);
        }
        first = false;
        x.push_back(c0);
        y.push_back(c1);
    }
    if (x.size() < 5) throw_domain("CSV profile needs at least 5 rows");
}

GridSpec grid_from_axis(const std::vector<double>& s) {
    const int n = static_cast<int>(s.size());
    if (n % 2 == 0) throw_domain("CSV profile needs an odd sample count");
    const double half = s.back();
    if (!(half > 0.0) || std::fabs(s.front() + half) > 1e-9 * std::max(1.0, half))
        throw_domain("CSV grid must be symmetric about 0");
    GridSpec grid = GridSpec::make(half, n);
    for (int k = 0; k < n; ++k)
        if (std::fabs(s[k] - grid.s(k)) > 1e-9 * std::max(1.0, half))
            throw_domain("CSV grid must be uniform");
    return grid;
}

} // namespace

Profile read_profile_csv(std::istream& in, DecayKind decay, double decay_rate) {
    std::vector<double> s, w;
    read_two_columns(in, s, w);
    return Profile::from_samples(grid_from_axis(s), std::move(w), decay, decay_rate);
}

EuclideanProfile read_euclidean_csv(std::istream& in, int d, double a,
                                    DecayKind decay, double decay_rate) {
    std::vector<double> r, u;
    read_two_columns(in, r, u);
    std::vector<double> s(r.size());
    for (std::size_t m = 0; m < r.size(); ++m) {
        if (!(r[m] > 0.0)) throw_domain("radial CSV grid must be positive");
        s[m] = -std::log(r[r.size() - 1 - m]);
    }
    EuclideanProfile out;
    out.r = std::move(r);
    out.u = std::move(u);
    out.d = d;
    out.a = a;
    out.grid = grid_from_axis(s);
    out.decay = decay;
    out.decay_rate = decay_rate;
    return out;
}

} // namespace cylhardy
