#include "cylhardy/quadrature.hpp"
#include "cylhardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cylhardy {

QuadratureConfig QuadratureConfig::defaults() {
    static const QuadratureConfig cfg = [] {
        QuadratureConfig c;
        if (const char* env = std::getenv("CYLHARDY_QUAD_TOL")) {
            char* end = nullptr;
            const double tol = std::strtod(env, &end);
            if (end != env && tol > 0.0 && std::isfinite(tol)) {
                c.abs_tol = tol;
                c.rel_tol = tol;
            }
        }
        return c;
    }();
    return cfg;
}

double simpson(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    if (n < 3 || n % 2 == 0) throw_domain("simpson: need an odd count >= 3");
    if (!(h > 0.0) || !std::isfinite(h)) throw_domain("simpson: step must be positive and finite");
    double odd = 0.0, even = 0.0;
    for (std::size_t k = 1; k + 1 < n; k += 2) odd += values[k];
    for (std::size_t k = 2; k + 1 < n; k += 2) even += values[k];
    return h / 3.0 * (values.front() + values.back() + 4.0 * odd + 2.0 * even);
}

IntegralEstimate simpson_with_error(const std::vector<double>& values, double h) {
    const std::size_t n = values.size();
    const double fine = simpson(values, h);
    if (n % 4 == 1) {
        std::vector<double> half;
        half.reserve((n + 1) / 2);
        for (std::size_t k = 0; k < n; k += 2) half.push_back(values[k]);
        const double coarse = simpson(half, 2.0 * h);
        return {fine, std::abs(fine - coarse) / 15.0};
    }
    // Conservative fallback: Simpson vs trapezoid difference.
    double trap = 0.5 * (values.front() + values.back());
    for (std::size_t k = 1; k + 1 < n; ++k) trap += values[k];
    trap *= h;
    return {fine, 0.5 * std::abs(fine - trap)};
}

IntegralEstimate integrate_line(const std::function<double(double)>& f,
                                double decay_rate, const QuadratureConfig& cfg) {
    if (!(decay_rate > 0.0)) throw_domain("integrate_line: decay rate must be positive");

    // Empirical amplitude of the decay envelope |f(s)| <= A exp(-rate*|s|),
    // probed at a handful of scale points.
    double amp = 0.0;
    for (double m : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double s = m / decay_rate;
        amp = std::max({amp, std::abs(f(s)) * std::exp(m), std::abs(f(-s)) * std::exp(m)});
    }
    if (amp == 0.0) amp = 1.0;

    // Tail bound 2*A/rate * exp(-rate*T) <= abs_tol/10.
    double T = std::log(20.0 * amp / (decay_rate * cfg.abs_tol)) / decay_rate;
    T = std::clamp(T, 8.0 / decay_rate, 400.0 / decay_rate);
    const double tail = 2.0 * amp / decay_rate * std::exp(-decay_rate * T);

    std::size_t n = 129;
    std::vector<double> values(n);
    auto fill = [&](std::size_t count) {
        values.resize(count);
        const double h = 2.0 * T / double(count - 1);
        for (std::size_t k = 0; k < count; ++k) values[k] = f(-T + double(k) * h);
        return h;
    };

    double h = fill(n);
    double prev = simpson(values, h);
    for (int r = 0; r < cfg.max_refinements; ++r) {
        n = 2 * n - 1;
        h = fill(n);
        const double cur = simpson(values, h);
        const double diff = std::abs(cur - prev);
        if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) {
            return {cur, diff / 15.0 + tail};
        }
        prev = cur;
    }
    throw accuracy_error("integrate_line: no convergence within max_refinements",
                         prev, std::abs(prev) * cfg.rel_tol + tail);
}

} // namespace cylhardy
