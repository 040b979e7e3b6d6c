// End-to-end acceptance runs. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any fails. Pass --cli <path> to include
// the byte-level determinism run of the command-line tool.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
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
#include "cb/weierstrass.hpp"

namespace {

using cb::BivariatePoly;
using cb::Complex;
using cb::UnivariatePoly;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

UnivariatePoly random_poly(cb::Rng& rng, int degree, double lead_floor) {
    std::vector<Complex> cs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : cs) c = rng.in_unit_disk();
    while (std::abs(cs.back()) < lead_floor) cs.back() = rng.in_unit_disk();
    return UnivariatePoly(cs);
}

// ---------------------------------------------------------------------------

void criterion1_resultant_agreement() {
    const auto t0 = std::chrono::steady_clock::now();
    cb::Rng rng(11001);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(rng.next() % 6);
        const int m = 1 + static_cast<int>(rng.next() % 6);
        const UnivariatePoly f = random_poly(rng, n, 0.1);
        const UnivariatePoly g = random_poly(rng, m, 0.1);
        const Complex a = cb::resultant_sylvester(f, g);
        const Complex b = cb::resultant_product_oracle(f, g);
        worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(a) + std::abs(b)));
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "resultant determinant vs product oracle, 1000 pairs, worst rel err " << worst << ", "
       << secs << " s";
    report(1, worst <= 1e-8 && secs < 10.0, os.str());
}

void criterion2_lemma51_sweep() {
    cb::Rng rng(11002);
    int bad = 0, applied1 = 0, applied2 = 0;
    for (int i = 0; i < 500; ++i) {
        const UnivariatePoly f = random_poly(rng, 1 + static_cast<int>(rng.next() % 5), 0.1);
        const UnivariatePoly g = random_poly(rng, 1 + static_cast<int>(rng.next() % 5), 0.1);
        const double delta = 0.02 + 0.9 * rng.uniform();
        const auto rep = cb::check_resultant_witnesses(f, g, delta);
        if (!rep.part0_holds || !rep.part1_holds || !rep.part2_holds) ++bad;
        applied1 += rep.part1_applies ? 1 : 0;
        applied2 += rep.part2_applies ? 1 : 0;
    }
    for (int i = 0; i < 20; ++i) {
        // a root of g sits within eps of a root of f
        const int n = 2 + static_cast<int>(rng.next() % 3);
        const UnivariatePoly f = random_poly(rng, n, 0.2);
        const auto zf = cb::roots(f);
        const double eps = std::pow(10.0, -4.0 - 4.0 * rng.uniform());
        const Complex shifted = zf[rng.next() % zf.size()] + eps * rng.unit_complex();
        std::vector<Complex> gz{shifted};
        for (int j = 0; j < 1 + static_cast<int>(rng.next() % 2); ++j)
            gz.push_back(2.0 * rng.in_unit_disk());
        const UnivariatePoly g = UnivariatePoly::from_roots(gz, Complex{0.8, 0.1});
        const auto rep = cb::check_resultant_witnesses(f, g, 1e-3);
        if (!rep.part0_holds || !rep.part1_holds || !rep.part2_holds) ++bad;
        applied1 += rep.part1_applies ? 1 : 0;
    }
    std::ostringstream os;
    os << "quantitative resultant bounds, 520 pairs, false assertions " << bad << " (part1 applied "
       << applied1 << "x, part2 " << applied2 << "x)";
    report(2, bad == 0 && applied1 > 0, os.str());
}

void criterion3_cartan_certificates() {
    const auto t0 = std::chrono::steady_clock::now();
    cb::Rng rng(11003);
    long violations = 0;
    bool budget_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int deg = 1 + static_cast<int>(rng.next() % 6);
        const UnivariatePoly p = random_poly(rng, deg, 0.1);
        const auto zeros = cb::roots(p);
        for (const double H : {3.0, 5.0, 8.0}) {
            const auto [cover, lb] = cb::cartan_cover_1d(zeros, H);
            if (cover.total_radius() > std::exp(-H)) budget_ok = false;
            int produced = 0;
            while (produced < 10000) {
                Complex z;
                if (produced % 2 == 0) {
                    const auto& d = cover.disks[rng.next() % cover.disks.size()];
                    z = d.center + d.radius * (1.0 + 1e-9 + rng.uniform()) * rng.unit_complex();
                } else {
                    z = 3.0 * rng.in_unit_disk();
                }
                if (cover.contains(z)) continue;
                ++produced;
                double lg = 0.0;
                for (const auto& a : zeros) lg += std::log(std::abs(z - a));
                if (lg < lb) ++violations;
            }
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "exceptional-disk certificates, 100 polys x {3,5,8} x 1e4 samples, violations "
       << violations << ", " << secs << " s";
    report(3, violations == 0 && budget_ok && secs < 60.0, os.str());
}

void criterion4_weierstrass_residual() {
    int checked = 0, bad = 0;
    double worst_resid_ratio = 0.0;
    const cb::Frame id_frame{};

    auto audit = [&](const BivariatePoly& f, const cb::WeierstrassFactorization& wf) {
        ++checked;
        double sup_abs = 0.0;
        for (const auto& pt : wf.g_points) sup_abs = std::max(sup_abs, std::abs(f.eval(pt)));
        const double resid = cb::factorization_residual(wf, f);
        worst_resid_ratio = std::max(worst_resid_ratio, resid / std::max(sup_abs, 1e-300));
        if (resid > 1e-8 * std::max(sup_abs, 1e-300)) ++bad;
        if (wf.k > 0) {
            for (std::size_t g = 0; g < wf.w_grid.size(); ++g)
                for (const auto& root : cb::roots(wf.P_at(g)))
                    if (std::abs(root) > wf.rho0 * (1.0 + 1e-8)) ++bad;
        }
        if (!cb::check_cofactor_bounds(wf, f).holds) ++bad;
    };

    // the three closed-form factorizations
    {
        const BivariatePoly f = BivariatePoly::monomial(2, 0) - BivariatePoly::monomial(0, 1);
        audit(f, cb::prepare(f, id_frame, 0.2, 0.01));
        const BivariatePoly g =
            (BivariatePoly::monomial(1, 0) - BivariatePoly::constant(0.01)) *
            (BivariatePoly::constant(3.0) + BivariatePoly::monomial(1, 0) +
             BivariatePoly::monomial(0, 1));
        audit(g, cb::prepare(g, id_frame, 0.2, 0.05));
        const BivariatePoly h = BivariatePoly::monomial(1, 0);
        audit(h, cb::prepare(h, id_frame, 0.2, 0.05));
    }

    // 50 random pairs of a near factor and a far factor
    cb::Rng rng(11004);
    int done = 0;
    while (done < 50) {
        const Complex a = 0.08 * rng.in_unit_disk();
        const Complex beta = 0.4 * rng.in_unit_disk();
        const BivariatePoly near_factor = BivariatePoly::monomial(1, 0) -
                                          BivariatePoly::constant(a) -
                                          beta * BivariatePoly::monomial(0, 1);
        BivariatePoly far = BivariatePoly::constant(Complex{2.0 + 2.0 * rng.uniform(), 0.5});
        far = far + rng.in_unit_disk() * BivariatePoly::monomial(1, 0);
        far = far + rng.in_unit_disk() * BivariatePoly::monomial(0, 1);
        far = far + 0.3 * rng.in_unit_disk() * BivariatePoly::monomial(1, 1);
        const BivariatePoly f = near_factor * far;
        const UnivariatePoly phi = cb::frame_fiber(f, id_frame, Complex{});
        double circle_min = 0.0;
        double rho0 = 0.0;
        try {
            rho0 = cb::select_circle(phi, -1e300, &circle_min);
        } catch (const cb::Error&) {
            continue;
        }
        double r1 = cb::select_r1(f, id_frame, rho0, circle_min);
        bool prepared = false;
        for (int att = 0; att < 6 && !prepared; ++att) {
            try {
                audit(f, cb::prepare(f, id_frame, rho0, r1));
                prepared = true;
            } catch (const cb::Error& e) {
                if (e.code() != cb::Err::ZeroOnContour) throw;
                r1 *= 0.5;
            }
        }
        if (prepared) ++done;
    }
    std::ostringstream os;
    os << "factorization residual/confinement/bounds on " << checked
       << " preparations, failures " << bad << ", worst residual ratio " << worst_resid_ratio;
    report(4, bad == 0 && checked == 53, os.str());
}

void criterion5_cover_pipeline() {
    bool ok = true;
    std::ostringstream os;
    // closed form pair
    {
        const BivariatePoly f1 = cb::normalize_on_ball(BivariatePoly::monomial(1, 0) -
                                                       BivariatePoly::monomial(0, 1));
        const BivariatePoly f2 = cb::normalize_on_ball(BivariatePoly::monomial(1, 0) +
                                                       BivariatePoly::monomial(0, 1));
        const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
        const auto res = cb::build_cover(f1, f2, data, 5.0);
        const auto ver = cb::verify_cover(f1, f2, res, 100000, 5);
        ok = ok && res.cover.balls.size() == 1 && ver.violations == 0 && res.coverage_ok;
        os << "linear pair: K=" << res.cover.K << " violations=" << ver.violations << "/1e5";

        // negative control at unit-scale constants
        cb::TransversalityData small = data;
        small.B0 = 1.0;
        small.H0 = 1.9;
        small.H1 = 2.0;
        small.K1 = 1;
        small.input_cover.balls.clear();
        small.input_cover.balls.emplace_back(cb::C2{}, std::exp(-2.0));
        small.input_cover.H = 2.0;
        small.input_cover.K = 1;
        auto ctrl = cb::build_cover(f1, f2, small, 2.0);
        const auto good = cb::verify_cover(f1, f2, ctrl, 20000, 17);
        for (auto& b : ctrl.cover.balls) b.radius /= 10.0;
        ctrl.cover.H += std::log(10.0);
        const cb::C2 focus{};
        const auto leak =
            cb::verify_cover(f1, f2, ctrl, 20000, 17, &focus, 0.3 * std::exp(-2.0));
        ok = ok && good.violations == 0 && leak.violations > 0;
        os << "; control leaks=" << leak.violations;
    }
    // random transversal pairs with a forced common zero at the origin
    cb::Rng rng(11005);
    int built = 0, tried = 0;
    double worst_c = 0.0;
    while (built < 10 && tried < 60) {
        ++tried;
        auto lin = [&rng]() {
            BivariatePoly f = rng.in_unit_disk() * BivariatePoly::monomial(1, 0) +
                              rng.in_unit_disk() * BivariatePoly::monomial(0, 1) +
                              (0.4 * rng.in_unit_disk()) * BivariatePoly::monomial(1, 1) +
                              (0.3 * rng.in_unit_disk()) * BivariatePoly::monomial(2, 0);
            return cb::normalize_on_ball(f);
        };
        const BivariatePoly f1 = lin();
        const BivariatePoly f2 = lin();
        try {
            const auto data = cb::estimate_inputs(f1, f2, 1e-13, 44);
            const auto res = cb::build_cover(f1, f2, data, 5.0);
            res.cover.validate();
            const auto ver = cb::verify_cover(f1, f2, res, 10000, 23 + built);
            if (ver.violations != 0) ok = false;
            worst_c = std::max(worst_c, res.c_pipeline);
            ++built;
        } catch (const cb::Error&) {
            continue;  // rejected draw (non-transversal at this level)
        }
    }
    ok = ok && built == 10 && worst_c <= 1.0;
    os << "; random pairs built=" << built << " worst K/(K1 B0^2 H0^2)=" << worst_c;
    report(5, ok, os.str());
}

void criterion6_golden_logR() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = cb::verify_example_logR({0.05, 0.1, 0.2});
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "singular-point doubling: max |B - log(sqrt15/R)| = " << rep.max_abs_err << ", slope "
       << rep.slope << ", " << secs << " s";
    report(6, rep.all_pass && std::abs(rep.slope - 1.0) <= 0.05 && secs < 30.0, os.str());
}

void criterion7_doubling_bound() {
    cb::Rng rng(11007);
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
        const int deg = 1 + static_cast<int>(rng.next() % 8);
        UnivariatePoly phi = random_poly(rng, deg, 0.05);
        const double M = cb::circle_extrema(phi, Complex{}, 1.0).max_log_abs;
        phi = Complex{std::exp(-M), 0.0} * phi;
        const Complex z0 = 0.124 * rng.in_unit_disk();
        const double r = 0.01 + 0.114 * rng.uniform();
        for (const double mu : {0.5, 0.25, 0.125}) {
            if (!cb::check_doubling_bound(phi, z0, r, mu).holds) ++violations;
        }
    }
    std::ostringstream os;
    os << "doubling bound with traced constants, 200 polys x 3 mu, violations " << violations;
    report(7, violations == 0, os.str());
}

void criterion8_monodromy() {
    bool ok = true;
    const BivariatePoly sq = BivariatePoly::monomial(2, 0) - BivariatePoly::monomial(0, 1);
    const auto m2 = cb::branch_order(sq, Complex{}, 0.1);
    ok = ok && m2.orders.size() == 1 && m2.orders[0] == 2;
    const BivariatePoly cu = BivariatePoly::monomial(3, 0) - BivariatePoly::monomial(0, 1);
    const auto m3 = cb::branch_order(cu, Complex{}, 0.1);
    ok = ok && m3.orders.size() == 1 && m3.orders[0] == 3;

    cb::Rng rng(11008);
    int partition_failures = 0;
    for (int i = 0; i < 20; ++i) {
        const Complex a = 0.4 * rng.in_unit_disk();
        const Complex c = Complex{0.7, 0.0} + 0.5 * rng.in_unit_disk();
        const Complex ws = 0.3 * rng.in_unit_disk();
        const Complex far = Complex{2.4, -0.8} + rng.in_unit_disk();
        const BivariatePoly lin = BivariatePoly::monomial(1, 0) - BivariatePoly::constant(a);
        const BivariatePoly f2 =
            (lin * lin - c * (BivariatePoly::monomial(0, 1) - BivariatePoly::constant(ws))) *
            (BivariatePoly::monomial(1, 0) - BivariatePoly::constant(far));
        const auto mono = cb::branch_order(f2, ws, 0.02);
        int total = 0;
        for (const int p : mono.orders) total += p;
        if (total != static_cast<int>(mono.base_roots.size())) ++partition_failures;
    }
    std::ostringstream os;
    os << "branch orders: parabola p=2, cubic p=3, partition failures " << partition_failures
       << "/20";
    report(8, ok && partition_failures == 0, os.str());
}

void criterion9_bezout() {
    const BivariatePoly f1 = BivariatePoly::monomial(2, 0) - BivariatePoly::monomial(0, 1);
    const BivariatePoly f2 = BivariatePoly::monomial(1, 0) - BivariatePoly::monomial(0, 2);
    const auto hand = cb::bezout_count(f1, f2);
    bool ok = hand.solutions.size() == 4;

    cb::Rng rng(11009);
    int done = 0, over = 0, tried = 0;
    while (done < 100 && tried < 300) {
        ++tried;
        std::vector<std::vector<Complex>> g1(3, std::vector<Complex>(3));
        std::vector<std::vector<Complex>> g2(3, std::vector<Complex>(3));
        for (auto& row : g1)
            for (auto& c : row) c = rng.in_unit_disk();
        for (auto& row : g2)
            for (auto& c : row) c = rng.in_unit_disk();
        try {
            const auto r = cb::bezout_count(BivariatePoly(g1), BivariatePoly(g2));
            if (static_cast<int>(r.solutions.size()) > r.degree_product) ++over;
            ++done;
        } catch (const cb::Error&) {
            continue;
        }
    }
    std::ostringstream os;
    os << "intersection counts: z^2-w/z-w^2 gives " << hand.solutions.size()
       << ", random coprime pairs checked " << done << ", over-bound " << over;
    report(9, ok && done == 100 && over == 0, os.str());
}

void criterion10_trace_shape() {
    // regular charts: f1 vanishing on the curve at a smooth point keeps the
    // trace doubling flat across nested radii
    const BivariatePoly f2 = BivariatePoly::monomial(2, 0) - BivariatePoly::monomial(0, 1);
    bool ok = true;
    double worst_var = 0.0;
    const std::vector<BivariatePoly> f1s{
        BivariatePoly::monomial(1, 0) - BivariatePoly::monomial(0, 1),  // z - w
        BivariatePoly::monomial(1, 0) + BivariatePoly::monomial(0, 1) -
            BivariatePoly::constant(2.0)};  // z + w - 2
    for (const auto& f1 : f1s) {
        double lo = 1e300, hi = -1e300;
        for (const double R : {0.05, 0.1, 0.2}) {
            cb::BernsteinQuery q;
            q.center = cb::C2{Complex{1.0, 0.0}, Complex{1.0, 0.0}};  // on the curve, regular
            q.R = R;
            q.mu = 0.25;
            const double B = cb::bernstein_trace_exponent(f1, f2, q).B;
            lo = std::min(lo, B);
            hi = std::max(hi, B);
        }
        const double variation = (hi - lo) / std::max(hi, 1e-300);
        worst_var = std::max(worst_var, variation);
        ok = ok && variation <= 0.25;
    }
    // singular point: the exponent must grow like log(1/R)
    const auto rep = cb::verify_example_logR({0.05, 0.1, 0.2});
    ok = ok && std::abs(rep.slope - 1.0) <= 0.05;
    std::ostringstream os;
    os << "trace shapes: regular-chart variation " << worst_var << " (cap 0.25), singular slope "
       << rep.slope;
    report(10, ok, os.str());
}

void criterion11_determinism(const std::string& cli_path) {
    bool ok = true;
    std::ostringstream os;
    if (!cli_path.empty()) {
        const std::string dir = "/tmp/cb_accept";
        std::system(("mkdir -p " + dir).c_str());
        {
            std::ofstream f(dir + "/f1.json");
            f << R"({"degz":1,"degw":1,"coeffs":[{"i":1,"j":0,"re":1.0,"im":0.0},{"i":0,"j":1,"re":-1.0,"im":0.0}]})";
        }
        {
            std::ofstream f(dir + "/f2.json");
            f << R"({"degz":1,"degw":1,"coeffs":[{"i":1,"j":0,"re":1.0,"im":0.0},{"i":0,"j":1,"re":1.0,"im":0.0}]})";
        }
        const std::string base = cli_path + " cover2d --f1 " + dir + "/f1.json --f2 " + dir +
                                 "/f2.json --H 6 --seed 7 --samples 2000";
        const int rc1 = std::system((base + " --out " + dir + "/a.json > /dev/null").c_str());
        const int rc2 = std::system((base + " --out " + dir + "/b.json > /dev/null").c_str());
        const int cmp = std::system(("cmp -s " + dir + "/a.json " + dir + "/b.json").c_str());
        ok = ok && rc1 == 0 && rc2 == 0 && cmp == 0;
        os << "cover2d artifacts byte-identical across runs: " << (cmp == 0 ? "yes" : "NO");

        const int rv1 = std::system(
            (cli_path + " verify --suite example-logR --out " + dir + "/v1.json > /dev/null")
                .c_str());
        const int rv2 = std::system(
            (cli_path + " verify --suite example-logR --out " + dir + "/v2.json > /dev/null")
                .c_str());
        const int vcmp = std::system(("cmp -s " + dir + "/v1.json " + dir + "/v2.json").c_str());
        ok = ok && rv1 == 0 && rv2 == 0 && vcmp == 0;
        os << "; verify reports identical: " << (vcmp == 0 ? "yes" : "NO");
    } else {
        // in-process fallback: the full report pipeline twice
        const BivariatePoly f1 = cb::normalize_on_ball(BivariatePoly::monomial(1, 0) -
                                                       BivariatePoly::monomial(0, 1));
        const BivariatePoly f2 = cb::normalize_on_ball(BivariatePoly::monomial(1, 0) +
                                                       BivariatePoly::monomial(0, 1));
        const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
        const auto ra = cb::build_cover(f1, f2, data, 6.0);
        const auto rb = cb::build_cover(f1, f2, data, 6.0);
        ok = cb::to_json(ra.cover).dump() == cb::to_json(rb.cover).dump();
        os << "in-process cover artifacts identical: " << (ok ? "yes" : "NO");
    }
    report(11, ok, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    criterion1_resultant_agreement();
    criterion2_lemma51_sweep();
    criterion3_cartan_certificates();
    criterion4_weierstrass_residual();
    criterion5_cover_pipeline();
    criterion6_golden_logR();
    criterion7_doubling_bound();
    criterion8_monodromy();
    criterion9_bezout();
    criterion10_trace_shape();
    criterion11_determinism(cli_path);

    if (g_failures == 0) {
        std::printf("all 11 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
