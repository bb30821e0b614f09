#pragma once

#include "cylhardy/params.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace cylhardy {

enum class DecayKind { Exponential, Gaussian };

// Uniform symmetric grid on [-L, L] with an odd number of samples, so s = 0
// is a node and composite Simpson weights apply directly.
struct GridSpec {
    double half_width = 0.0;
    int n = 0;

    static GridSpec make(double half_width, int n);
    // n = 8193 with L = 40/rate (exponential) or sqrt(40/rate) (Gaussian):
    // tails below 1e-17 at the boundary, core well resolved.
    static GridSpec auto_for(DecayKind decay, double decay_rate);

    double h() const { return 2.0 * half_width / (n - 1); }
    double s(int k) const { return -half_width + k * h(); }
};

// Immutable sampled function on a GridSpec with a certified decay envelope:
// |w(s)| stays within a factor-two-in-the-exponent margin of
// amplitude * exp(-rate*|s|) (or exp(-rate*s^2)) near the boundary.
class Profile {
public:
    static Profile sample(const std::function<double(double)>& f, const GridSpec& grid,
                          DecayKind decay, double decay_rate);
    // Adopts precomputed samples (descent iterates, file input). Same
    // certification as sample(); a conservative (small) rate is always safe.
    static Profile from_samples(const GridSpec& grid, std::vector<double> values,
                                DecayKind decay, double decay_rate);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    int n() const { return grid_.n; }
    double half_width() const { return grid_.half_width; }
    double h() const { return grid_.h(); }
    double s(int k) const { return grid_.s(k); }
    DecayKind decay() const { return decay_; }
    double decay_rate() const { return decay_rate_; }
    double amplitude() const { return amplitude_; }
    bool even_symmetric() const { return even_; }

private:
    Profile() = default;

    GridSpec grid_;
    std::vector<double> values_;
    DecayKind decay_ = DecayKind::Exponential;
    double decay_rate_ = 1.0;
    double amplitude_ = 0.0;
    bool even_ = false;
};

// Optimal profile of the 1D interpolation inequality,
// w(s) = cosh(lambda*s)^(-2/(p-2)), normalized by w(0) = 1.
Profile interp_extremal(double theta, double p, double sigma, const GridSpec& grid);
Profile interp_extremal(double theta, double p, double sigma);

// L^2-normalized Gaussian optimizer of the 1D logarithmic inequality,
// w(s) = (4 sigma^2 / (2 pi (4 gamma - 1)))^(1/4) exp(-sigma^2 s^2/(4 gamma - 1)).
// The caller divides by |S^(d-1)|^(1/2) when a cylinder normalization is wanted.
Profile glh_extremal(double gamma, double sigma, const GridSpec& grid);
Profile glh_extremal(double gamma, double sigma);

// Radial function on R^d in the weighted-Sobolev setting, sampled on a
// log-uniform radial grid: u(r) = r^(-(d-2-2a)/2) w(-log r).
struct EuclideanProfile {
    std::vector<double> r;  // ascending, log-uniform, symmetric about r = 1
    std::vector<double> u;
    int d = 0;
    double a = 0.0;
    GridSpec grid;          // the source cylinder grid (s = -log r)
    DecayKind decay = DecayKind::Exponential;
    double decay_rate = 1.0;  // of the underlying cylinder profile
};

EuclideanProfile to_euclidean(const Profile& w, int d, double a);
Profile from_euclidean(const EuclideanProfile& u);
EuclideanProfile read_euclidean_csv(std::istream& in, int d, double a,
                                    DecayKind decay, double decay_rate);

// CSV serialization for external plotting; full double precision.
void write_csv(std::ostream& out, const Profile& w);
void write_csv(std::ostream& out, const EuclideanProfile& u);
Profile read_profile_csv(std::istream& in, DecayKind decay, double decay_rate);

} // namespace cylhardy
