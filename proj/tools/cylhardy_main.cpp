#include "CLI11.hpp"

#include "cylhardy/angular.hpp"
#include "cylhardy/constants.hpp"
#include "cylhardy/deficit.hpp"
#include "cylhardy/errors.hpp"
#include "cylhardy/format.hpp"
#include "cylhardy/json_writer.hpp"
#include "cylhardy/params.hpp"
#include "cylhardy/profile.hpp"
#include "cylhardy/region.hpp"
#include "cylhardy/spectral.hpp"
#include "cylhardy/special.hpp"
#include "cylhardy/variational.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

using namespace cylhardy;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

bool given(double v) { return !std::isnan(v); }

double need(double v, const char* flag, const std::string& ctx) {
    if (!given(v)) throw_domain(ctx + " needs " + flag);
    return v;
}

int need_d(int d, const std::string& ctx) {
    if (d < 1) throw_domain(ctx + " needs --d");
    return d;
}

// sigma may be given directly or derived from (d, a).
double resolve_sigma(double sigma, int d, double a, const std::string& ctx) {
    if (given(sigma)) return sigma;
    if (d >= 1 && given(a)) {
        const double s = 0.5 * (d - 2.0) - a;
        if (!(s > 0.0)) throw_domain(ctx + ": need a < (d-2)/2 so that sigma > 0");
        return s;
    }
    throw_domain(ctx + " needs --sigma or the pair --d, --a");
}

GridSpec resolve_grid(DecayKind kind, double rate, double half_width, int n) {
    GridSpec g = GridSpec::auto_for(kind, rate);
    if (given(half_width)) g.half_width = half_width;
    if (n > 0) g.n = n;
    return GridSpec::make(g.half_width, g.n);
}

// Default box of the sech-power extremal: wide enough for the p -> 2 slow
// tail, never narrower than three core widths.
double interp_default_half_width(double lambda, double p) {
    const double rate = lambda * 2.0 / (p - 2.0);
    return std::max(40.0 / rate, 3.0 / lambda);
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw_domain("cannot open output file: " + path);
    return file;
}

struct ProfileFlags {
    std::string profile = "extremal";
    std::string decay = "exp";
    double rate = 1.0;
    double half_width = kUnset;
    int n = 0;
};

DecayKind decay_kind(const std::string& name) {
    if (name == "exp") return DecayKind::Exponential;
    if (name == "gauss") return DecayKind::Gaussian;
    throw_domain("unknown decay kind (use exp or gauss): " + name);
}

bool is_file_spec(const std::string& spec) { return spec.rfind("file:", 0) == 0; }

Profile profile_from_file(const ProfileFlags& pf) {
    const std::string path = pf.profile.substr(5);
    std::ifstream in(path);
    if (!in) throw_domain("cannot open profile file: " + path);
    return read_profile_csv(in, decay_kind(pf.decay), pf.rate);
}

Profile named_cylinder_profile(const ProfileFlags& pf, const std::string& ctx,
                               const std::function<Profile()>& extremal) {
    if (is_file_spec(pf.profile)) return profile_from_file(pf);
    if (pf.profile == "extremal") {
        if (!extremal) throw_domain(ctx + " has no extremal profile");
        return extremal();
    }
    if (pf.profile == "gaussian") {
        const GridSpec g = resolve_grid(DecayKind::Gaussian, 0.5, pf.half_width, pf.n);
        return Profile::sample([](double s) { return std::exp(-0.5 * s * s); }, g,
                               DecayKind::Gaussian, 0.5);
    }
    if (pf.profile == "sech") {
        const GridSpec g = resolve_grid(DecayKind::Exponential, 1.0, pf.half_width, pf.n);
        return Profile::sample([](double s) { return 1.0 / std::cosh(s); }, g,
                               DecayKind::Exponential, 1.0);
    }
    throw_domain(ctx + ": unknown profile (use extremal, gaussian, sech, or file:PATH): "
                 + pf.profile);
}

void print_json(const JsonWriter& j) { std::cout << j.str() << "\n"; }

const char* region_name(Region r) {
    return r == Region::Breaking ? "Breaking" : "NotDecided";
}

struct ConstArgs {
    std::string name;
    int d = 0;
    double a = kUnset, p = kUnset, theta = kUnset, gamma = kUnset, sigma = kUnset;
    int i = 0, j = 0;
    int k_grid = 512;
};

void run_const(const ConstArgs& c) {
    const std::string ctx = "const " + c.name;
    JsonWriter out;
    out.put("name", c.name);
    JsonWriter ps;
    JsonWriter value_obj;
    double value = kUnset;
    std::string verdict;
    bool proxy = false, have_proxy = false, have_obj = false;

    if (c.name == "k-interp") {
        const double sg = resolve_sigma(c.sigma, c.d, c.a, ctx);
        ps.put("theta", need(c.theta, "--theta", ctx));
        ps.put("p", need(c.p, "--p", ctx));
        ps.put("sigma", sg);
        value = k_interp(c.theta, c.p, sg);
    } else if (c.name == "lambda-extremal") {
        const double sg = resolve_sigma(c.sigma, c.d, c.a, ctx);
        ps.put("theta", need(c.theta, "--theta", ctx));
        ps.put("p", need(c.p, "--p", ctx));
        ps.put("sigma", sg);
        value = lambda_extremal(c.theta, c.p, sg);
    } else if (c.name == "c-star-interp" || c.name == "region-interp"
               || c.name == "upper-bound-interp" || c.name == "linearization"
               || c.name == "eig-interp") {
        const Params params = Params::interpolation(
            need_d(c.d, ctx), need(c.a, "--a", ctx), need(c.p, "--p", ctx),
            need(c.theta, "--theta", ctx));
        ps.put("d", params.d);
        ps.put("a", params.a);
        ps.put("p", params.p);
        ps.put("theta", params.theta);
        if (c.name == "c-star-interp") {
            value = c_star_interp(params);
        } else if (c.name == "region-interp") {
            verdict = region_name(region_interp(params));
        } else if (c.name == "upper-bound-interp") {
            ps.put("k_grid", c.k_grid);
            const UpperBound ub = upper_bound_interp(params, c.k_grid);
            value = ub.value;
            proxy = ub.proxy;
            have_proxy = true;
        } else if (c.name == "linearization") {
            const LinearizationCoeffs lc = linearization_coeffs(params);
            value_obj.put("kappa", lc.kappa);
            value_obj.put("mu", lc.mu);
            value_obj.put("nu", lc.nu);
            value_obj.put("lambda", lc.lambda);
            have_obj = true;
        } else {
            ps.put("i", c.i);
            ps.put("j", c.j);
            value = eig_interp(c.i, c.j, params);
        }
    } else if (c.name == "c-hs") {
        ps.put("p", need(c.p, "--p", ctx));
        ps.put("d", need_d(c.d, ctx));
        value = c_hs(c.p, c.d);
    } else if (c.name == "sobolev") {
        ps.put("d", need_d(c.d, ctx));
        value = sobolev_constant(c.d);
    } else if (c.name == "k-log-hardy") {
        const double sg = resolve_sigma(c.sigma, c.d, c.a, ctx);
        ps.put("gamma", need(c.gamma, "--gamma", ctx));
        ps.put("sigma", sg);
        value = k_log_hardy(c.gamma, sg);
    } else if (c.name == "c-star-glh") {
        ps.put("gamma", need(c.gamma, "--gamma", ctx));
        ps.put("a", need(c.a, "--a", ctx));
        ps.put("d", need_d(c.d, ctx));
        value = c_star_glh(c.gamma, c.a, c.d);
    } else if (c.name == "c-star-lh") {
        ps.put("d", need_d(c.d, ctx));
        value = c_star_lh(c.d);
    } else if (c.name == "k-d-sigma") {
        const double sg = resolve_sigma(c.sigma, c.d, c.a, ctx);
        ps.put("d", need_d(c.d, ctx));
        ps.put("sigma", sg);
        value = k_d_sigma(c.d, sg);
    } else if (c.name == "upper-bound-glh") {
        ps.put("gamma", need(c.gamma, "--gamma", ctx));
        ps.put("a", need(c.a, "--a", ctx));
        ps.put("d", need_d(c.d, ctx));
        const UpperBound ub = upper_bound_glh(c.gamma, c.a, c.d);
        value = ub.value;
        proxy = ub.proxy;
        have_proxy = true;
    } else if (c.name == "eig-glh") {
        ps.put("gamma", need(c.gamma, "--gamma", ctx));
        ps.put("a", need(c.a, "--a", ctx));
        ps.put("d", need_d(c.d, ctx));
        ps.put("i", c.i);
        ps.put("j", c.j);
        value = eig_glh(c.i, c.j, c.gamma, c.a, c.d);
    } else if (c.name == "theta-breaking") {
        ps.put("a", need(c.a, "--a", ctx));
        ps.put("p", need(c.p, "--p", ctx));
        ps.put("d", need_d(c.d, ctx));
        value = theta_breaking(c.a, c.p, c.d);
    } else if (c.name == "a-minus") {
        ps.put("p", need(c.p, "--p", ctx));
        ps.put("d", need_d(c.d, ctx));
        value = a_minus(c.p, c.d);
    } else if (c.name == "region-glh") {
        ps.put("gamma", need(c.gamma, "--gamma", ctx));
        ps.put("a", need(c.a, "--a", ctx));
        ps.put("d", need_d(c.d, ctx));
        verdict = region_name(region_glh(c.gamma, c.a, c.d));
    } else {
        throw_domain("unknown constant name: " + c.name);
    }

    out.put_object("params", ps);
    if (!verdict.empty())
        out.put("value", verdict);
    else if (have_obj)
        out.put_object("value", value_obj);
    else
        out.put("value", value);
    if (have_proxy) out.put("proxy", proxy);
    print_json(out);
}

struct VerifyArgs {
    std::string which;
    int d = 0;
    double a = kUnset, p = kUnset, theta = kUnset, gamma = kUnset, sigma = kUnset;
    int i = 1;
    double amplitude = 0.1;
    ProfileFlags pf;
};

int run_verify(const VerifyArgs& v) {
    const std::string ctx = "verify " + v.which;
    DeficitReport rep;
    if (v.which == "interp") {
        const double sg = resolve_sigma(v.sigma, v.d, v.a, ctx);
        const double theta = need(v.theta, "--theta", ctx);
        const double p = need(v.p, "--p", ctx);
        const Profile w = named_cylinder_profile(v.pf, ctx, [&] {
            const double lam = lambda_extremal(theta, p, sg);
            GridSpec g = GridSpec::make(interp_default_half_width(lam, p), 8193);
            if (given(v.pf.half_width)) g.half_width = v.pf.half_width;
            if (v.pf.n > 0) g.n = v.pf.n;
            return interp_extremal(theta, p, sg, GridSpec::make(g.half_width, g.n));
        });
        rep = quotient_interp(w, theta, p, sg);
    } else if (v.which == "glh") {
        const double sg = resolve_sigma(v.sigma, v.d, v.a, ctx);
        const double gamma = need(v.gamma, "--gamma", ctx);
        const Profile w = named_cylinder_profile(v.pf, ctx, [&]() -> Profile {
            if (!(gamma > 0.25)) return glh_extremal(gamma, sg);  // throws, clear message
            const double rate = sg * sg / (4.0 * gamma - 1.0);
            const GridSpec g = resolve_grid(DecayKind::Gaussian, rate, v.pf.half_width, v.pf.n);
            return glh_extremal(gamma, sg, g);
        });
        rep = deficit_glh(w, gamma, sg);
    } else if (v.which == "lsi") {
        const int d = need_d(v.d, ctx);
        const double sg = resolve_sigma(v.sigma, v.d, v.a, ctx);
        const Profile w0 = named_cylinder_profile(v.pf, ctx, [&] {
            const double rate = 1.0 / (4.0 * sg * sg);
            const GridSpec g = resolve_grid(DecayKind::Gaussian, rate, v.pf.half_width, v.pf.n);
            return Profile::sample([&](double s) { return std::exp(-rate * s * s); }, g,
                                   DecayKind::Gaussian, rate);
        });
        rep = verify_lsi_cylinder(w0, v.i, v.amplitude, d, sg);
    } else if (v.which == "hardy" || v.which == "hs") {
        const int d = need_d(v.d, ctx);
        const double a = v.which == "hs" ? (given(v.a) ? v.a : 0.0) : need(v.a, "--a", ctx);
        EuclideanProfile u;
        if (is_file_spec(v.pf.profile)) {
            const std::string path = v.pf.profile.substr(5);
            std::ifstream in(path);
            if (!in) throw_domain("cannot open profile file: " + path);
            u = read_euclidean_csv(in, d, a, decay_kind(v.pf.decay), v.pf.rate);
        } else if (v.which == "hs" && v.pf.profile == "extremal") {
            const double p = need(v.p, "--p", ctx);
            const double sg = 0.5 * (d - 2.0);
            const double lam = lambda_extremal(1.0, p, sg);
            const GridSpec g = given(v.pf.half_width) || v.pf.n > 0
                                   ? resolve_grid(DecayKind::Exponential,
                                                  lam * 2.0 / (p - 2.0), v.pf.half_width, v.pf.n)
                                   : GridSpec::make(interp_default_half_width(lam, p), 8193);
            u = to_euclidean(interp_extremal(1.0, p, sg, g), d, a);
        } else {
            const Profile w = named_cylinder_profile(v.pf, ctx, {});
            u = to_euclidean(w, d, a);
        }
        rep = v.which == "hardy" ? verify_hardy(u) : verify_hs(u, need(v.p, "--p", ctx));
    } else {
        throw_domain("unknown verification (use interp, glh, lsi, hardy, or hs): " + v.which);
    }

    const bool verified = rep.deficit >= -rep.quad_error;
    JsonWriter out;
    out.put("inequality", inequality_name(rep.inequality_id));
    out.put("profile", v.pf.profile);
    out.put("lhs", rep.lhs);
    out.put("rhs", rep.rhs);
    out.put("deficit", rep.deficit);
    out.put("quad_error", rep.quad_error);
    out.put("verified", verified);
    print_json(out);
    return verified ? 0 : 1;
}

struct ExtremalArgs {
    std::string family;
    int d = 0;
    double a = kUnset, p = kUnset, theta = kUnset, gamma = kUnset, sigma = kUnset;
    double half_width = kUnset;
    int n = 0;
    bool euclidean = false;
    std::string out_path;
};

void run_extremal(const ExtremalArgs& e) {
    const std::string ctx = "extremal " + e.family;
    Profile w = [&] {
        if (e.family == "interp") {
            const double sg = resolve_sigma(e.sigma, e.d, e.a, ctx);
            const double theta = need(e.theta, "--theta", ctx);
            const double p = need(e.p, "--p", ctx);
            const double lam = lambda_extremal(theta, p, sg);
            const GridSpec g = given(e.half_width) || e.n > 0
                                   ? resolve_grid(DecayKind::Exponential,
                                                  lam * 2.0 / (p - 2.0), e.half_width, e.n)
                                   : GridSpec::make(interp_default_half_width(lam, p), 8193);
            return interp_extremal(theta, p, sg, g);
        }
        if (e.family == "glh") {
            const double sg = resolve_sigma(e.sigma, e.d, e.a, ctx);
            const double gamma = need(e.gamma, "--gamma", ctx);
            const double rate = gamma > 0.25 ? sg * sg / (4.0 * gamma - 1.0) : 1.0;
            const GridSpec g = resolve_grid(DecayKind::Gaussian, rate, e.half_width, e.n);
            return glh_extremal(gamma, sg, g);
        }
        throw_domain("unknown extremal family (use interp or glh): " + e.family);
    }();

    std::ofstream file;
    std::ostream& sink = open_sink(file, e.out_path);
    if (e.euclidean) {
        const int d = need_d(e.d, ctx + " --euclidean");
        write_csv(sink, to_euclidean(w, d, need(e.a, "--a", ctx + " --euclidean")));
    } else {
        write_csv(sink, w);
    }
}

struct SpectrumArgs {
    std::string family;
    int d = 0;
    double a = kUnset, p = kUnset, theta = kUnset, gamma = kUnset, sigma = kUnset;
    int i = 1, j = 0;
    double half_width = kUnset;
    int n = 0;
    bool refine = false;
};

void run_spectrum(const SpectrumArgs& s) {
    const std::string ctx = "spectrum " + s.family;
    auto run = [&](int n_override) -> SpectrumReport {
        if (s.family == "interp") {
            const Params params = Params::interpolation(
                need_d(s.d, ctx), need(s.a, "--a", ctx), need(s.p, "--p", ctx),
                need(s.theta, "--theta", ctx));
            GridSpec g = GridSpec::make(given(s.half_width) ? s.half_width : 200.0,
                                        s.n > 0 ? s.n : 8193);
            if (n_override > 0) g = GridSpec::make(g.half_width, n_override);
            return check_interp_mode(s.i, s.j, params, g);
        }
        if (s.family == "glh") {
            const double sg = resolve_sigma(s.sigma, s.d, s.a, ctx);
            const double gamma = need(s.gamma, "--gamma", ctx);
            const int d = need_d(s.d, ctx);
            if (given(s.half_width) || s.n > 0 || n_override > 0) {
                const double big_a = 4.0 * sg * sg / (4.0 * gamma - 1.0);
                GridSpec g = oscillator_grid(big_a, s.j + 1);
                if (given(s.half_width)) g.half_width = s.half_width;
                if (s.n > 0) g.n = s.n;
                if (n_override > 0) g.n = n_override;
                g = GridSpec::make(g.half_width, g.n);
                return check_glh_mode(s.i, s.j, gamma, sg, d, g);
            }
            return check_glh_mode(s.i, s.j, gamma, sg, d);
        }
        throw_domain("unknown spectrum family (use interp or glh): " + s.family);
    };

    const SpectrumReport base = run(0);
    JsonWriter out;
    out.put("family", s.family);
    out.put("i", base.i);
    out.put("j", base.j);
    out.put("closed_form", base.closed_form);
    out.put("numeric", base.numeric);
    out.put("gap", base.gap);
    out.put("half_width", base.half_width);
    out.put("n", base.n);
    if (s.refine) {
        const SpectrumReport fine = run(2 * base.n - 1);
        out.put("refined_numeric", fine.numeric);
        out.put("refined_gap", fine.gap);
        out.put("order", std::log2(std::fabs(base.gap) / std::fabs(fine.gap)));
    }
    print_json(out);
}

struct RegionArgs {
    int d = 0;
    double a = kUnset, a_max = kUnset;
    int a_steps = 1;
    int eta_steps = 100;
    std::string mode = "window";
    double theta = kUnset, gamma = kUnset;
    std::string out_path;
};

void run_region(const RegionArgs& r) {
    const std::string ctx = "region";
    const int d = need_d(r.d, ctx);
    const double a_lo = need(r.a, "--a", ctx);
    const double a_hi = given(r.a_max) ? r.a_max : a_lo;
    if (r.a_steps < 1) throw_domain("region: --a-steps must be >= 1");
    if (a_hi < a_lo) throw_domain("region: empty a range (--a-max below --a)");

    std::vector<double> a_values;
    a_values.reserve(r.a_steps);
    for (int k = 0; k < r.a_steps; ++k)
        a_values.push_back(r.a_steps == 1
                               ? a_lo
                               : a_lo + (a_hi - a_lo) * k / (r.a_steps - 1));

    RegionQuery query;
    if (r.mode == "query") {
        if (!given(r.theta) && !given(r.gamma))
            throw_domain("region --mode query needs --theta and/or --gamma");
        if (given(r.theta)) query.theta = r.theta;
        if (given(r.gamma)) query.gamma = r.gamma;
    } else if (r.mode == "window") {
        if (given(r.theta) || given(r.gamma))
            throw_domain("region --mode window takes no --theta/--gamma (use --mode query)");
    } else {
        throw_domain("region: unknown --mode (use window or query): " + r.mode);
    }

    const std::vector<RegionRecord> records = region_scan(d, a_values, r.eta_steps, query);
    std::ofstream file;
    std::ostream& sink = open_sink(file, r.out_path);
    write_region_csv(sink, records);
}

struct MinimizeArgs {
    int d = 0;
    double a = kUnset, p = kUnset, theta = kUnset;
    double eps = 0.05;
    double half_width = kUnset;
    int n = 2049;
    int max_iterations = 10000;
    double rel_tol = 1e-10;
    bool refine = false;
    std::string state_path;
};

void run_minimize(const MinimizeArgs& m) {
    const std::string ctx = "minimize";
    const Params params = Params::interpolation(need_d(m.d, ctx), need(m.a, "--a", ctx),
                                                need(m.p, "--p", ctx),
                                                need(m.theta, "--theta", ctx));
    const double lam = lambda_extremal(params.theta, params.p, params.sigma);
    const double half_width = given(m.half_width)
                                  ? m.half_width
                                  : interp_default_half_width(lam, params.p);
    auto run = [&](int n) {
        const GridSpec grid = GridSpec::make(half_width, n);
        const TwoModeState init = make_breaking_init(params, m.eps, grid);
        return minimize_deficit(params, init, m.max_iterations, m.rel_tol);
    };

    const MinimizeResult res = run(m.n);
    const double area_norm = std::exp(-(params.p - 2.0) / params.p * log_sphere_area(params.d));
    JsonWriter out;
    out.put("d", params.d);
    out.put("a", params.a);
    out.put("p", params.p);
    out.put("theta", params.theta);
    out.put("eps", m.eps);
    out.put("delta", res.delta);
    out.put("error_sum", res.error_sum);
    out.put("quotient", res.quotient.quotient);
    out.put("normalized_quotient", res.quotient.quotient * area_norm);
    out.put("c_star", c_star_interp(params));
    out.put("objective", res.objective);
    out.put("iterations", res.iterations);
    out.put("stalled", res.stalled);
    out.put("half_width", half_width);
    out.put("n", m.n);
    if (m.refine) {
        const MinimizeResult fine = run(2 * m.n - 1);
        out.put("refined_delta", fine.delta);
        out.put("refined_objective", fine.objective);
    }
    print_json(out);

    if (!m.state_path.empty()) {
        std::ofstream file(m.state_path);
        if (!file) throw_domain("cannot open output file: " + m.state_path);
        file << "s,w0,w1\n";
        const Profile& w0 = res.state.w0;
        const Profile& w1 = res.state.w1;
        for (int k = 0; k < w0.n(); ++k)
            file << fmt17(w0.s(k)) << ',' << fmt17(w0.values()[k]) << ','
                 << fmt17(w1.values()[k]) << '\n';
    }
}

void add_profile_flags(CLI::App* sub, ProfileFlags& pf) {
    sub->add_option("--profile", pf.profile,
                    "trial profile: extremal, gaussian, sech, or file:PATH");
    sub->add_option("--decay", pf.decay, "decay kind for file profiles (exp or gauss)");
    sub->add_option("--rate", pf.rate, "decay rate for file profiles");
    sub->add_option("--half-width", pf.half_width, "grid half width override");
    sub->add_option("--n", pf.n, "grid size override (odd)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp constants, extremal profiles, linearization spectra, and "
                 "symmetry-breaking certificates for weighted interpolation and "
                 "logarithmic Hardy inequalities on the cylinder"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file ([subcommand] sections)");

    ConstArgs ca;
    CLI::App* c = app.add_subcommand("const", "closed-form constants and verdicts")
                      ->configurable();
    c->add_option("name", ca.name, "constant name (e.g. k-interp, c-star-glh, a-minus)")
        ->required();
    c->add_option("--d", ca.d, "dimension");
    c->add_option("--a", ca.a, "weight exponent a");
    c->add_option("--p", ca.p, "integrability exponent p");
    c->add_option("--theta", ca.theta, "interpolation exponent theta");
    c->add_option("--gamma", ca.gamma, "logarithmic exponent gamma");
    c->add_option("--sigma", ca.sigma, "cylinder parameter sigma (overrides d, a)");
    c->add_option("--i", ca.i, "spherical harmonic degree");
    c->add_option("--j", ca.j, "longitudinal quantum number");
    c->add_option("--k-grid", ca.k_grid, "subintervals of the upper-bound k-grid");

    VerifyArgs va;
    CLI::App* v = app.add_subcommand("verify", "quadrature check of one inequality instance")
                      ->configurable();
    v->add_option("which", va.which, "inequality: interp, glh, lsi, hardy, or hs")->required();
    v->add_option("--d", va.d, "dimension");
    v->add_option("--a", va.a, "weight exponent a");
    v->add_option("--p", va.p, "integrability exponent p");
    v->add_option("--theta", va.theta, "interpolation exponent theta");
    v->add_option("--gamma", va.gamma, "logarithmic exponent gamma");
    v->add_option("--sigma", va.sigma, "cylinder parameter sigma (overrides d, a)");
    v->add_option("--i", va.i, "spherical harmonic degree (lsi)");
    v->add_option("--amplitude", va.amplitude, "angular perturbation amplitude (lsi)");
    add_profile_flags(v, va.pf);

    ExtremalArgs ea;
    CLI::App* e = app.add_subcommand("extremal", "export an extremal profile as CSV")
                      ->configurable();
    e->add_option("family", ea.family, "extremal family: interp or glh")->required();
    e->add_option("--d", ea.d, "dimension");
    e->add_option("--a", ea.a, "weight exponent a");
    e->add_option("--p", ea.p, "integrability exponent p");
    e->add_option("--theta", ea.theta, "interpolation exponent theta");
    e->add_option("--gamma", ea.gamma, "logarithmic exponent gamma");
    e->add_option("--sigma", ea.sigma, "cylinder parameter sigma (overrides d, a)");
    e->add_option("--half-width", ea.half_width, "grid half width override");
    e->add_option("--n", ea.n, "grid size override (odd)");
    e->add_flag("--euclidean", ea.euclidean, "export as radial profile u(r) (needs --d, --a)");
    e->add_option("--out", ea.out_path, "output file (default stdout)");

    SpectrumArgs sa;
    CLI::App* s = app.add_subcommand("spectrum",
                                     "closed-form vs finite-difference linearization eigenvalue")
                      ->configurable();
    s->add_option("family", sa.family, "linearization family: interp or glh")->required();
    s->add_option("--d", sa.d, "dimension");
    s->add_option("--a", sa.a, "weight exponent a");
    s->add_option("--p", sa.p, "integrability exponent p");
    s->add_option("--theta", sa.theta, "interpolation exponent theta");
    s->add_option("--gamma", sa.gamma, "logarithmic exponent gamma");
    s->add_option("--sigma", sa.sigma, "cylinder parameter sigma (overrides d, a)");
    s->add_option("--i", sa.i, "spherical harmonic degree");
    s->add_option("--j", sa.j, "longitudinal quantum number");
    s->add_option("--half-width", sa.half_width, "grid half width override");
    s->add_option("--n", sa.n, "grid size override (odd)");
    s->add_flag("--refine", sa.refine, "double the grid and report the convergence order");

    RegionArgs ra;
    CLI::App* r = app.add_subcommand("region", "symmetry-breaking region scan as CSV")
                      ->configurable();
    r->add_option("--d", ra.d, "dimension")->required();
    r->add_option("--a", ra.a, "weight exponent a (range start)")->required();
    r->add_option("--a-max", ra.a_max, "range end (default: --a)");
    r->add_option("--a-steps", ra.a_steps, "number of a samples");
    r->add_option("--eta-steps", ra.eta_steps, "eta grid: eta = k/eta-steps, k = 1..eta-steps");
    r->add_option("--mode", ra.mode, "flag semantics: window (nonempty window) or query");
    r->add_option("--theta", ra.theta, "theta membership query (mode=query)");
    r->add_option("--gamma", ra.gamma, "gamma membership query (mode=query)");
    r->add_option("--out", ra.out_path, "output file (default stdout)");

    MinimizeArgs ma;
    CLI::App* m = app.add_subcommand("minimize",
                                     "two-mode descent certifying a non-radial quotient")
                      ->configurable();
    m->add_option("--d", ma.d, "dimension")->required();
    m->add_option("--a", ma.a, "weight exponent a")->required();
    m->add_option("--p", ma.p, "integrability exponent p")->required();
    m->add_option("--theta", ma.theta, "interpolation exponent theta")->required();
    m->add_option("--eps", ma.eps, "initial non-radial amplitude");
    m->add_option("--half-width", ma.half_width, "grid half width override");
    m->add_option("--n", ma.n, "grid size (odd)");
    m->add_option("--max-iterations", ma.max_iterations, "descent iteration cap");
    m->add_option("--rel-tol", ma.rel_tol, "relative decrease stopping threshold");
    m->add_flag("--refine", ma.refine, "rerun on a doubled grid and report the refined delta");
    m->add_option("--out-state", ma.state_path, "write the final state as CSV (s, w0, w1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return 2;
    }

    // Dispatch after parsing: a config file section re-triggers subcommand
    // callbacks inside CLI11, so callbacks would run the work twice.
    try {
        if (*c)
            run_const(ca);
        else if (*v)
            return run_verify(va);
        else if (*e)
            run_extremal(ea);
        else if (*s)
            run_spectrum(sa);
        else if (*r)
            run_region(ra);
        else if (*m)
            run_minimize(ma);
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const cylhardy::accuracy_error& ex) {
        std::cerr << "accuracy error: " << ex.what() << " (best value "
                  << cylhardy::fmt17(ex.best_value()) << ", error bound "
                  << cylhardy::fmt17(ex.best_error()) << ")\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    }
    return 0;
}
