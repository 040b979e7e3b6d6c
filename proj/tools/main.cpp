// Command-line surface over the cover/doubling machinery. Every subcommand
// writes a schema-versioned JSON report; identical inputs and seeds reproduce
// the artifacts byte for byte.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cb/bernstein.hpp"
#include "cb/cartan.hpp"
#include "cb/cover2d.hpp"
#include "cb/curve.hpp"
#include "cb/family.hpp"
#include "cb/json_io.hpp"
#include "cb/resultant.hpp"
#include "cb/rng.hpp"
#include "cb/svg.hpp"
#include "cb/weierstrass.hpp"

namespace {

using cb::Complex;
using cb::json;

constexpr int kSchema = 1;

cb::UnivariatePoly random_test_poly(cb::Rng& rng) {
    const int deg = 1 + static_cast<int>(rng.next() % 6);
    std::vector<Complex> cs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : cs) c = rng.in_unit_disk();
    if (std::abs(cs.back()) < 0.1) cs.back() = Complex{0.4, 0.2};
    return cb::UnivariatePoly(cs);
}

Complex parse_complex(const std::string& s) {
    std::stringstream ss(s);
    double re = 0.0, im = 0.0;
    char comma = ',';
    ss >> re;
    if (ss >> comma && comma == ',') ss >> im;
    return Complex{re, im};
}

cb::C2 parse_c2(const std::string& s) {
    std::stringstream ss(s);
    double a[4] = {0.0, 0.0, 0.0, 0.0};
    char comma;
    for (int i = 0; i < 4; ++i) {
        ss >> a[i];
        ss >> comma;
    }
    return cb::C2{Complex{a[0], a[1]}, Complex{a[2], a[3]}};
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << report.dump(2) << "\n";
    else
        cb::save_json(report, out_path);
}

// --config file.json expands into --key=value tokens right after the
// subcommand, so explicit flags still win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] != "--config") continue;
        const json cfg = cb::load_json(args[i + 1]);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                   args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        std::vector<std::string> injected;
        for (const auto& [key, value] : cfg.items()) {
            if (value.is_string())
                injected.push_back("--" + key + "=" + value.get<std::string>());
            else
                injected.push_back("--" + key + "=" + value.dump());
        }
        args.insert(args.begin() + 1, injected.begin(), injected.end());
        break;
    }
    return args;
}

json frame_json(const cb::Frame& f) { return cb::to_json(f); }

int run_bernstein(const std::string& f_path, const std::string& trace_path, double mu,
                  const std::string& center, double R, int budget, std::uint64_t seed,
                  int truncation_degree, const std::string& out) {
    const cb::BivariatePoly f = cb::bivariate_from_json(cb::load_json(f_path));
    cb::BernsteinQuery q;
    q.mu = mu;
    q.center = parse_c2(center);
    q.R = R;
    q.budget = budget;
    q.seed = seed;
    cb::BernsteinReport rep;
    if (trace_path.empty()) {
        rep = cb::bernstein_exponent(f, q);
    } else {
        const cb::BivariatePoly f2 = cb::bivariate_from_json(cb::load_json(trace_path));
        rep = cb::bernstein_trace_exponent(f, f2, q);
    }
    json out_j = cb::to_json(rep);
    out_j["schema"] = kSchema;
    out_j["query"] = {{"mu", mu}, {"R", R}, {"center", center}, {"budget", budget},
                      {"seed", seed}, {"trace", !trace_path.empty()}};
    if (truncation_degree >= 0) {
        // a degree-N stand-in for a normalized analytic function carries this
        // much sup error on the sampled geometry
        const double reach = std::min(0.999, cb::norm(q.center) + R);
        out_j["truncation"] = {{"degree", truncation_degree},
                               {"tail_bound", cb::truncation_tail_bound(truncation_degree, reach)}};
    }
    emit(out_j, out);
    return 0;
}

int run_resultant(const std::string& f_path, const std::string& g_path, double delta,
                  const std::string& out) {
    const cb::UnivariatePoly f = cb::univariate_from_json(cb::load_json(f_path));
    const cb::UnivariatePoly g = cb::univariate_from_json(cb::load_json(g_path));
    const Complex sylvester = cb::resultant_sylvester(f, g);
    const Complex oracle = cb::resultant_product_oracle(f, g);
    json rep{{"schema", kSchema},
             {"sylvester", {sylvester.real(), sylvester.imag()}},
             {"product_oracle", {oracle.real(), oracle.imag()}},
             {"relative_gap",
              std::abs(sylvester - oracle) / std::max(1e-300, std::abs(sylvester))}};
    if (delta > 0.0) rep["witnesses"] = cb::to_json(cb::check_resultant_witnesses(f, g, delta));
    emit(rep, out);
    return 0;
}

int run_cover1d(const std::string& p_path, const std::string& center, double radius, double H,
                int samples, std::uint64_t seed, const std::string& out,
                const std::string& svg_path) {
    const cb::UnivariatePoly p = cb::univariate_from_json(cb::load_json(p_path));
    const cb::Disk domain{parse_complex(center), radius};
    const auto [cover, cert] = cb::cartan_cover_poly(p, domain, H);
    const auto audit = cb::validate_certificate(p, domain, cover, cert.lower_bound_log,
                                                samples, seed);
    json rep{{"schema", kSchema},
             {"cover", cb::to_json(cover)},
             {"lower_bound_log", cert.lower_bound_log},
             {"audit",
              {{"samples", audit.sample_count},
               {"violations", audit.violations},
               {"worst_value_log", audit.worst_value_log},
               {"worst_point", {audit.worst_point.real(), audit.worst_point.imag()}}}}};
    emit(rep, out);
    if (!svg_path.empty()) {
        std::vector<Complex> marks;
        if (p.degree() >= 1)
            for (const auto& z : cb::roots(p)) marks.push_back(z);
        cb::save_text(cb::svg_disks(domain, cover.disks, marks), svg_path);
    }
    return audit.violations == 0 ? 0 : 1;
}

int run_cover2d(const std::string& f1_path, const std::string& f2_path, double H, double eps0,
                int depth, int samples, std::uint64_t seed, const std::string& out,
                const std::string& svg_path, const std::string& report_path) {
    const cb::BivariatePoly f1 =
        cb::normalize_on_ball(cb::bivariate_from_json(cb::load_json(f1_path)));
    const cb::BivariatePoly f2 =
        cb::normalize_on_ball(cb::bivariate_from_json(cb::load_json(f2_path)));
    cb::EstimateOptions eo;
    eo.seed = seed;
    const cb::TransversalityData data = cb::estimate_inputs(f1, f2, eps0, depth, eo);
    cb::BuildOptions bo;
    bo.seed = seed;
    const cb::CoverResult res = cb::build_cover(f1, f2, data, H, bo);
    const cb::VerificationReport ver = cb::verify_cover(f1, f2, res, samples, seed + 1);

    json cover_j = cb::to_json(res.cover);
    cover_j["schema"] = kSchema;
    cover_j["threshold_log"] = res.threshold_log;
    emit(cover_j, out);

    json rep{{"schema", kSchema},
             {"inputs",
              {{"H0", data.H0},
               {"H1", data.H1},
               {"K1", data.K1},
               {"B0", data.B0},
               {"gates_ok", data.gates_ok},
               {"boxes_processed", data.boxes_processed},
               {"depth_used", data.depth_used}}},
             {"K", res.cover.K},
             {"c_pipeline", res.c_pipeline},
             {"threshold_log", res.threshold_log},
             {"achieved_exterior_log", res.achieved_exterior_log},
             {"coverage_ok", res.coverage_ok},
             {"verification",
              {{"samples", ver.samples},
               {"violations", ver.violations},
               {"worst_margin", ver.worst_margin},
               {"margin_quantiles", ver.margin_quantiles}}}};
    json prov = json::array();
    for (const auto& p : res.provenance)
        prov.push_back({{"input_ball", p.input_ball}, {"w_disk", p.w_disk}, {"z_disk", p.z_disk}});
    rep["provenance"] = prov;
    json diags = json::array();
    for (const auto& d : res.diagnostics)
        diags.push_back({{"k1", d.k1},
                         {"k2", d.k2},
                         {"rho0", d.rho0},
                         {"r1", d.r1},
                         {"n_disks", d.n_disks},
                         {"cartan_lb", d.cartan_lb},
                         {"fit_residual", d.fit_residual},
                         {"achieved_exterior", d.achieved_exterior}});
    rep["passes"] = diags;
    if (!report_path.empty()) cb::save_json(rep, report_path);

    if (!svg_path.empty()) {
        std::vector<Complex> slices{Complex{}, Complex{0.5 * std::exp(-H), 0.0}};
        cb::save_text(cb::svg_cover_slices(res.cover, 0.25, slices), svg_path);
    }
    return ver.violations == 0 ? 0 : 1;
}

int run_weierstrass(const std::string& f_path, double scale, std::uint64_t seed,
                    const std::string& out) {
    const cb::BivariatePoly f = cb::bivariate_from_json(cb::load_json(f_path));
    cb::Frame frame;
    frame.scale = scale;
    const cb::UnivariatePoly phi = cb::frame_fiber(f, frame, Complex{});
    if (phi.is_zero())
        throw cb::Error(cb::Err::AllZero, "weierstrass: the base fiber vanishes identically");
    double circle_min = 0.0;
    const double rho0 = cb::select_circle(phi, -1e300, &circle_min);
    double r1 = cb::select_r1(f, frame, rho0, circle_min);
    cb::WeierstrassFactorization wf;
    bool prepared = false;
    for (int attempt = 0; attempt < 8 && !prepared; ++attempt) {
        try {
            wf = cb::prepare(f, frame, rho0, r1);
            prepared = true;
        } catch (const cb::Error& e) {
            if (e.code() != cb::Err::ZeroOnContour) throw;
            r1 *= 0.5;
        }
    }
    if (!prepared) throw cb::Error(cb::Err::ZeroOnContour, "weierstrass: no admissible r1 found");
    const auto bounds = cb::check_cofactor_bounds(wf, f);
    const double residual = cb::factorization_residual(wf, f);
    json rep = cb::to_json(wf);
    rep["schema"] = kSchema;
    rep["seed"] = seed;
    rep["cofactor_bounds"] = {{"holds", bounds.holds},
                       {"inf_log_g", bounds.inf_log_g},
                       {"sup_log_g", bounds.sup_log_g},
                       {"lower_bound", bounds.lower_bound},
                       {"upper_bound", bounds.upper_bound}};
    rep["factorization_residual"] = residual;
    emit(rep, out);
    return bounds.holds ? 0 : 1;
}

int run_curve(const std::string& f2_path, const std::string& region, const std::string& atlas_out) {
    const cb::BivariatePoly f2 = cb::bivariate_from_json(cb::load_json(f2_path));
    // region: "zre,zim,wre,wim,radius"
    std::stringstream ss(region);
    double a[5] = {0.0, 0.0, 0.0, 0.0, 0.5};
    char comma;
    for (int i = 0; i < 5; ++i) {
        ss >> a[i];
        ss >> comma;
    }
    const cb::Ball2 ball{cb::C2{Complex{a[0], a[1]}, Complex{a[2], a[3]}}, a[4]};
    const auto atlas = cb::build_atlas(f2, ball);
    json charts = json::array();
    double worst_residual = 0.0;
    for (const auto& ch : atlas) {
        json samples = json::array();
        for (std::size_t i = 0; i < ch.params.size(); ++i)
            samples.push_back({{"t", {ch.params[i].real(), ch.params[i].imag()}},
                               {"z", {ch.points[i].z.real(), ch.points[i].z.imag()}},
                               {"w", {ch.points[i].w.real(), ch.points[i].w.imag()}}});
        charts.push_back({{"kind", ch.kind == cb::ChartKind::Puiseux ? "puiseux" : "regular"},
                          {"swapped", ch.swapped},
                          {"p", ch.p},
                          {"base", {ch.base_point.z.real(), ch.base_point.z.imag(),
                                    ch.base_point.w.real(), ch.base_point.w.imag()}},
                          {"epsilon", ch.epsilon},
                          {"delta", ch.delta},
                          {"residual", ch.residual},
                          {"samples", samples}});
        worst_residual = std::max(worst_residual, ch.residual);
    }
    json rep{{"schema", kSchema},
             {"charts", charts},
             {"chart_count", atlas.size()},
             {"worst_residual", worst_residual}};
    emit(rep, atlas_out);
    return worst_residual <= 1e-8 ? 0 : 1;
}

int run_dirichlet(int k, double lambda, int N, const std::string& omega, std::uint64_t seed,
                  const std::string& v_str, bool with_doubling, double r0,
                  const std::string& out) {
    const Complex om = parse_complex(omega);
    const auto spec =
        cb::TestFamilySpec::random_trig(k, lambda, N, {om.real(), om.imag()}, seed);
    const cb::C2 v = parse_c2(v_str);
    const auto d = cb::dirichlet_determinant(spec, v);
    json rep{{"schema", kSchema},
             {"k", k},
             {"lambda", lambda},
             {"N", N},
             {"omega", {spec.omega[0], spec.omega[1]}},
             {"seed", seed},
             {"value", {d.mantissa.real(), d.mantissa.imag()}},
             {"log_scale", d.log_scale},
             {"log_abs", d.log_abs()}};
    if (with_doubling) {
        rep["doubling_r0"] = r0;
        rep["doubling"] = cb::family_doubling(spec, v, r0, 4);
    }
    emit(rep, out);
    return 0;
}

int run_verify(const std::string& suite, const std::string& out) {
    json rep{{"schema", kSchema}, {"suite", suite}};
    json failures = json::array();
    bool pass = true;
    auto line = [&](const std::string& name, bool ok, const json& detail) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) {
            pass = false;
            failures.push_back({{"check", name}, {"detail", detail}});
        }
    };

    if (suite == "example-logR") {
        const auto r = cb::verify_example_logR({0.05, 0.1, 0.2});
        json samples = json::array();
        for (const auto& s : r.samples) {
            samples.push_back({{"R", s.R}, {"B", s.B}, {"expected_B", s.expected_B}});
            line("logR.R=" + std::to_string(s.R), s.pass,
                 {{"B", s.B}, {"expected", s.expected_B}});
        }
        line("logR.slope", std::abs(r.slope - 1.0) <= 0.05, {{"slope", r.slope}});
        rep["samples"] = samples;
        rep["slope"] = r.slope;
    } else if (suite == "prop32") {
        cb::Rng rng(515);
        int violations = 0;
        for (int i = 0; i < 40; ++i) {
            cb::UnivariatePoly phi = random_test_poly(rng);
            const double M = cb::circle_extrema(phi, Complex{}, 1.0).max_log_abs;
            phi = Complex{std::exp(-M), 0.0} * phi;
            const auto pr = cb::check_doubling_bound(phi, 0.05 * rng.in_unit_disk(),
                                             0.02 + 0.1 * rng.uniform(), 0.25);
            if (!pr.holds) ++violations;
        }
        line("prop32.sweep", violations == 0, {{"violations", violations}});
    } else if (suite == "cartan1d") {
        cb::Rng rng(616);
        int violations = 0;
        for (int i = 0; i < 20; ++i) {
            std::vector<Complex> zeros;
            const int n = 1 + static_cast<int>(rng.next() % 6);
            for (int j = 0; j < n; ++j) zeros.push_back(rng.in_unit_disk());
            const auto [cover, lb] = cb::cartan_cover_1d(zeros, 5.0);
            for (int s = 0; s < 500; ++s) {
                const Complex z = 2.0 * rng.in_unit_disk();
                if (cover.contains(z)) continue;
                double lg = 0.0;
                for (const auto& a : zeros) lg += std::log(std::abs(z - a));
                if (lg < lb) ++violations;
            }
        }
        line("cartan1d.exterior", violations == 0, {{"violations", violations}});
    } else if (suite == "resultant-forms") {
        cb::Rng rng(717);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto f = random_test_poly(rng);
            const auto g = random_test_poly(rng);
            const Complex a = cb::resultant_sylvester(f, g);
            const Complex b = cb::resultant_product_oracle(f, g);
            worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(a) + std::abs(b)));
        }
        line("resultant.agreement", worst <= 1e-8, {{"worst", worst}});
    } else {
        throw CLI::ValidationError("--suite",
                                   "unknown suite (expected example-logR, prop32, cartan1d or "
                                   "resultant-forms)");
    }
    rep["pass"] = pass;
    rep["failures"] = failures;
    emit(rep, out);
    return pass ? 0 : 1;
}

int run_plot(const std::string& cover_path, const std::string& center, double radius,
             const std::string& out_svg) {
    json j = cb::load_json(cover_path);
    if (j.contains("cover")) j = j.at("cover");  // accept the cover1d report wrapper
    const cb::Car1Cover cover = cb::car1_from_json(j);
    const cb::Disk domain{parse_complex(center), radius};
    cb::save_text(cb::svg_disks(domain, cover.disks), out_svg);
    return 0;
}

}  // namespace


int main(int argc, char** argv) {
    CLI::App app{"Cartan covers and doubling exponents for pairs of functions on C^2"};
    app.require_subcommand(1);

    std::string out = "-";
    // bernstein
    auto* sb = app.add_subcommand("bernstein", "doubling exponent on balls or on a curve trace");
    std::string b_f, b_trace, b_center = "0,0,0,0";
    double b_mu = 0.25, b_R = 0.25;
    int b_budget = 4096;
    std::uint64_t b_seed = 20260713;
    std::string b_out = "-";
    sb->add_option("--f", b_f, "function JSON")->required();
    sb->add_option("--trace", b_trace, "curve function JSON (restrict to {f2=0})");
    sb->add_option("--mu", b_mu, "inner/outer radius ratio");
    sb->add_option("--center", b_center, "ball center re,im,re,im");
    sb->add_option("--R", b_R, "outer radius");
    sb->add_option("--budget", b_budget, "sphere sampling budget");
    sb->add_option("--seed", b_seed, "sampler seed");
    int b_trunc = -1;
    sb->add_option("--truncation-degree", b_trunc,
                   "report the Cauchy tail bound for a degree-N truncation");
    sb->add_option("--out", b_out, "report path or - for stdout");

    // resultant
    auto* sr = app.add_subcommand("resultant", "Sylvester determinant and the product oracle");
    std::string r_f, r_g, r_out = "-";
    double r_delta = 0.0;
    sr->add_option("--f", r_f)->required();
    sr->add_option("--g", r_g)->required();
    sr->add_option("--delta", r_delta, "also run the quantitative checks at this delta");
    sr->add_option("--out", r_out);

    // cover1d
    auto* s1 = app.add_subcommand("cover1d", "exceptional disks for one polynomial");
    std::string c1_p, c1_center = "0,0", c1_out = "-", c1_svg;
    double c1_radius = 1.0, c1_H = 3.0;
    int c1_samples = 10000;
    std::uint64_t c1_seed = 20260713;
    s1->add_option("--p", c1_p)->required();
    s1->add_option("--center", c1_center, "domain center re,im");
    s1->add_option("--radius", c1_radius, "domain radius");
    s1->add_option("--H", c1_H)->required();
    s1->add_option("--samples", c1_samples, "exterior audit samples");
    s1->add_option("--seed", c1_seed);
    s1->add_option("--out", c1_out);
    s1->add_option("--svg", c1_svg, "draw the cover");

    // cover2d
    auto* s2 = app.add_subcommand("cover2d", "ball cover of the joint near-zero set");
    std::string c2_f1, c2_f2, c2_out = "-", c2_svg, c2_report;
    double c2_H = 5.0, c2_eps0 = 1e-12;
    int c2_depth = 44, c2_samples = 10000;
    std::uint64_t c2_seed = 20260713;
    s2->add_option("--f1", c2_f1)->required();
    s2->add_option("--f2", c2_f2)->required();
    s2->add_option("--H", c2_H)->required();
    s2->add_option("--eps0", c2_eps0, "input-cover level");
    s2->add_option("--depth", c2_depth, "max subdivision depth");
    s2->add_option("--samples", c2_samples, "verification samples");
    s2->add_option("--seed", c2_seed);
    s2->add_option("--out", c2_out, "cover JSON path");
    s2->add_option("--svg", c2_svg, "fixed-w slices of the cover");
    s2->add_option("--report", c2_report, "verification report JSON");

    // weierstrass
    auto* sw = app.add_subcommand("weierstrass", "monic-factor preparation in a frame");
    std::string w_f, w_out = "-";
    double w_scale = 1.0;
    std::uint64_t w_seed = 20260713;
    sw->add_option("--f", w_f)->required();
    sw->add_option("--scale", w_scale, "frame scale");
    sw->add_option("--seed", w_seed);
    sw->add_option("--out", w_out);

    // curve
    auto* sc = app.add_subcommand("curve", "branch atlas of {f2 = 0}");
    std::string cu_f2, cu_region = "0,0,0,0,0.5", cu_out = "-";
    sc->add_option("--f2", cu_f2)->required();
    sc->add_option("--region", cu_region, "ball zre,zim,wre,wim,radius");
    sc->add_option("--atlas-out", cu_out);

    // dirichlet
    auto* sd = app.add_subcommand("dirichlet", "trigonometric determinant family");
    int d_k = 1, d_N = 8;
    double d_lambda = 2.0, d_r0 = 0.1353352832366127;
    std::string d_omega = "0.61803398874989484,0.41421356237309515";
    std::string d_v = "0,0,0,0", d_out = "-";
    std::uint64_t d_seed = 20260713;
    bool d_doubling = false;
    sd->add_option("--k", d_k, "trig degree");
    sd->add_option("--lambda", d_lambda);
    sd->add_option("--N", d_N, "determinant size");
    sd->add_option("--omega", d_omega, "shift re,im pair of reals");
    sd->add_option("--seed", d_seed);
    sd->add_option("--v", d_v, "evaluation point re,im,re,im");
    sd->add_flag("--doubling", d_doubling, "also estimate the doubling exponent");
    sd->add_option("--r0", d_r0, "rescaling radius for the doubling estimate");
    sd->add_option("--out", d_out);

    // verify
    auto* sv = app.add_subcommand("verify", "golden verification suites");
    std::string v_suite = "example-logR", v_out = "-";
    sv->add_option("--suite", v_suite, "example-logR | prop32 | cartan1d | resultant-forms");
    sv->add_option("--out", v_out);

    // plot
    auto* sp = app.add_subcommand("plot", "draw a disk cover as SVG");
    std::string p_cover, p_center = "0,0", p_out = "cover.svg";
    double p_radius = 1.0;
    sp->add_option("--cover", p_cover)->required();
    sp->add_option("--center", p_center);
    sp->add_option("--radius", p_radius);
    sp->add_option("--out", p_out);

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        args = expand_config(std::move(args));
        std::vector<const char*> cargs{argv[0]};
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const cb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sb->parsed())
            return run_bernstein(b_f, b_trace, b_mu, b_center, b_R, b_budget, b_seed, b_trunc,
                                 b_out);
        if (sr->parsed()) return run_resultant(r_f, r_g, r_delta, r_out);
        if (s1->parsed())
            return run_cover1d(c1_p, c1_center, c1_radius, c1_H, c1_samples, c1_seed, c1_out,
                               c1_svg);
        if (s2->parsed())
            return run_cover2d(c2_f1, c2_f2, c2_H, c2_eps0, c2_depth, c2_samples, c2_seed, c2_out,
                               c2_svg, c2_report);
        if (sw->parsed()) return run_weierstrass(w_f, w_scale, w_seed, w_out);
        if (sc->parsed()) return run_curve(cu_f2, cu_region, cu_out);
        if (sd->parsed())
            return run_dirichlet(d_k, d_lambda, d_N, d_omega, d_seed, d_v, d_doubling, d_r0,
                                 d_out);
        if (sv->parsed()) return run_verify(v_suite, v_out);
        if (sp->parsed()) return run_plot(p_cover, p_center, p_radius, p_out);
    } catch (const cb::Error& e) {
        json failure{{"schema", kSchema}, {"error", cb::err_name(e.code())}, {"message", e.what()}};
        std::cout << failure.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    (void)out;
    return 2;
}
