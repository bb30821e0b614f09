#pragma once

namespace cylhardy {

// theta(p,d) = d(p-2)/(2p), the smallest admissible interpolation exponent.
double vartheta(double p, int d);

enum class Mode { Interpolation, LogHardy };

// Validated parameter pack shared by the interpolation-type and the
// logarithmic-Hardy-type operations.
//
//   sigma = (d-2-2a)/2 > 0,   eta = 1 - vartheta(p,d) = b - a,
//
// Interpolation mode: 2 < p <= 2d/(d-2) for d >= 3 (p > 2 for d in {1,2})
// and vartheta(p,d) <= theta <= 1. LogHardy mode: p = 2, theta = 0 and
// gamma >= 1/4 (stronger conditions such as gamma >= d/4 are checked by the
// operations that need them).
struct Params {
    int d = 3;
    double a = 0.0;
    double p = 2.0;
    double theta = 1.0;
    double gamma = 0.0;
    double sigma = 0.0;
    double eta = 0.0;
    Mode mode = Mode::Interpolation;

    static Params interpolation(int d, double a, double p, double theta);
    static Params log_hardy(int d, double a, double gamma);
};

} // namespace cylhardy
