#include "cylhardy/region.hpp"

#include "cylhardy/constants.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/format.hpp"
#include "cylhardy/params.hpp"

#include <cmath>
#include <ostream>

namespace cylhardy {

namespace {

bool interp_flag(int d, double p, double vt, double cap,
                 const std::optional<double>& theta_query) {
    if (d >= 3) {
        const double p_crit = 2.0 * d / (d - 2.0);
        if (p >= p_crit * (1.0 - 1e-12)) return false;
    }
    if (!theta_query) return vt < cap;
    const double th = *theta_query;
    if (th < vt - 1e-12 || th > 1.0 + 1e-12) return false;
    return th < cap;
}

} // namespace

std::vector<RegionRecord> region_scan(int d, const std::vector<double>& a_values,
                                      int eta_steps, const RegionQuery& query) {
    if (d < 2) throw_domain("region_scan requires d >= 2");
    if (a_values.empty()) throw_domain("region_scan: empty a range");
    if (eta_steps < 1) throw_domain("region_scan: need at least one eta step");
    if (a_values.size() * static_cast<std::size_t>(eta_steps) > 1000000u)
        throw_domain("region_scan: grid exceeds 1e6 points");
    if (query.gamma && *query.gamma < 0.25)
        throw_domain("region_scan: gamma query must be >= 1/4");

    std::vector<RegionRecord> out;
    out.reserve(a_values.size() * eta_steps);
    for (double a : a_values) {
        const double sigma = 0.5 * (d - 2.0) - a;
        if (!(sigma > 0.0)) throw_domain("region_scan requires a < (d-2)/2");
        for (int k = 1; k <= eta_steps; ++k) {
            const double eta = static_cast<double>(k) / eta_steps;
            const double p = 2.0 * d / (d - 2.0 + 2.0 * eta);
            RegionRecord rec;
            rec.a = a;
            rec.eta = eta;
            rec.vartheta = vartheta(p, d);
            rec.theta_cap = theta_breaking(a, p, d);
            rec.breaking_interp = interp_flag(d, p, rec.vartheta, rec.theta_cap, query.theta);
            rec.gamma_low = d / 4.0;
            rec.gamma_high = 0.25 * (1.0 + 4.0 * sigma * sigma / (d - 1.0));
            // A gamma query below the admissible floor is simply outside the
            // proved window, not an error for the whole scan.
            rec.breaking_glh = query.gamma
                                   ? (*query.gamma >= rec.gamma_low
                                      && !(d == 2 && *query.gamma <= 0.5)
                                      && *query.gamma < rec.gamma_high)
                                   : rec.gamma_high > rec.gamma_low;
            out.push_back(rec);
        }
    }
    return out;
}

void write_region_csv(std::ostream& out, const std::vector<RegionRecord>& records) {
    out << "a,eta,vartheta,theta_cap,breaking_interp,gamma_low,gamma_high,breaking_glh\n";
    for (const RegionRecord& r : records) {
        out << fmt17(r.a) << ',' << fmt17(r.eta) << ',' << fmt17(r.vartheta) << ','
            << fmt17(r.theta_cap) << ',' << (r.breaking_interp ? 1 : 0) << ','
            << fmt17(r.gamma_low) << ',' << fmt17(r.gamma_high) << ','
            << (r.breaking_glh ? 1 : 0) << '\n';
    }
}

} // namespace cylhardy
