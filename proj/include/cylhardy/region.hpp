#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace cylhardy {

// One grid point of the symmetry-breaking scan at fixed dimension. The
// exponent is tied to eta through p = 2d/(d-2+2 eta), so eta in (0,1]
// sweeps p from just below the critical exponent down to 2.
struct RegionRecord {
    double a = 0.0;
    double eta = 0.0;
    double vartheta = 0.0;   // smallest admissible theta at this (d, eta)
    double theta_cap = 0.0;  // breaking threshold Theta(a, p, d)
    bool breaking_interp = false;
    double gamma_low = 0.0;   // d/4
    double gamma_high = 0.0;  // (1 + 4 sigma^2/(d-1))/4
    bool breaking_glh = false;
};

// Without queries the flags report a nonempty breaking window at the grid
// point (vartheta < theta_cap resp. gamma_low < gamma_high). With a query
// value set, the corresponding flag answers membership for that value.
struct RegionQuery {
    std::optional<double> theta;
    std::optional<double> gamma;
};

// Row-major in (a, eta) with eta = k/eta_steps, k = 1..eta_steps.
// Rejects empty inputs, a >= (d-2)/2, and scans above 1e6 points.
std::vector<RegionRecord> region_scan(int d, const std::vector<double>& a_values,
                                      int eta_steps, const RegionQuery& query = {});

// Header plus one line per record; flags as 0/1, floats at full precision.
void write_region_csv(std::ostream& out, const std::vector<RegionRecord>& records);

} // namespace cylhardy
