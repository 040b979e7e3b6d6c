#include "cb/cover2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cb/bernstein.hpp"
#include "cb/resultant.hpp"
#include "cb/rng.hpp"

namespace cb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_abs2(const BivariatePoly& f1, const BivariatePoly& f2, const C2& v) {
    const double a = std::abs(f1.eval(v));
    const double b = std::abs(f2.eval(v));
    const double m = std::sqrt(a * a + b * b);
    return m > 0.0 ? std::log(m) : kLogZero;
}
}  // namespace

void TransversalityData::validate() const {
    if (!std::isfinite(H0) || !std::isfinite(H1) || !std::isfinite(B0))
        throw Error(Err::BadInput, "TransversalityData: non-finite levels");
    if (K1 != static_cast<int>(input_cover.balls.size()))
        throw Error(Err::BadInput, "TransversalityData: K1 inconsistent with the cover");
    input_cover.validate();
}

BivariatePoly normalize_on_ball(const BivariatePoly& f) {
    const double s = f.coeff_abs_sum();
    if (s <= 0.0) throw Error(Err::AllZero, "normalize_on_ball: zero polynomial");
    return Complex{1.0 / s, 0.0} * f;
}

// ---------------------------------------------------------------------------
// Input estimation by box subdivision

namespace {

struct Box {
    std::array<std::int64_t, 4> idx;  // center coordinate = (2 idx + 1) * 2^-(level+1)
};

struct FnData {
    const BivariatePoly* f;
    BivariatePoly dz, dw;
    double hess;  // remainder bound: |f(v+d) - f(v) - Df d| <= 0.5 hess |d|^2
};

double box_coord(std::int64_t k, int level) {
    return static_cast<double>(2 * k + 1) * std::ldexp(1.0, -(level + 1));
}

C2 box_center(const Box& b, int level) {
    return C2{Complex{box_coord(b.idx[0], level), box_coord(b.idx[1], level)},
              Complex{box_coord(b.idx[2], level), box_coord(b.idx[3], level)}};
}

// Certified positivity of max(|f1|,|f2|) - eps0 over the box.
bool can_discard(const std::array<FnData, 2>& fs, const C2& c, double r, double eps0) {
    for (const auto& fd : fs) {
        const double fv = std::abs(fd.f->eval(c));
        const double g = std::sqrt(std::norm(fd.dz.eval(c)) + std::norm(fd.dw.eval(c)));
        if (fv - g * r - 0.5 * fd.hess * r * r >= eps0) return true;
    }
    return false;
}

double hess_bound(const BivariatePoly& f) {
    double s = 0.0;
    for (int i = 0; i <= f.degz(); ++i)
        for (int j = 0; j <= f.degw(); ++j)
            s += std::abs(f.coeff(i, j)) * std::ldexp(1.0, i + j);
    return 2.0 * s;
}

struct Clusters {
    std::vector<C2> centers;
    double radius = 0.0;  // uniform enclosing radius
};

Clusters cluster_boxes(const std::vector<Box>& boxes, int level) {
    const double h = std::ldexp(1.0, -(level + 1));
    const double link = 2.05 * 2.0 * h;
    const std::size_t n = boxes.size();
    std::vector<int> group(n, -1);
    std::vector<C2> centers(n);
    for (std::size_t i = 0; i < n; ++i) centers[i] = box_center(boxes[i], level);
    int ng = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        group[i] = ng;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (group[b] >= 0) continue;
                if (norm(centers[a] - centers[b]) <= link) {
                    group[b] = ng;
                    stack.push_back(b);
                }
            }
        }
        ++ng;
    }
    Clusters out;
    for (int g = 0; g < ng; ++g) {
        C2 lo{{1e9, 1e9}, {1e9, 1e9}}, hi{{-1e9, -1e9}, {-1e9, -1e9}};
        for (std::size_t i = 0; i < n; ++i) {
            if (group[i] != g) continue;
            const C2& c = centers[i];
            lo.z = {std::min(lo.z.real(), c.z.real()), std::min(lo.z.imag(), c.z.imag())};
            lo.w = {std::min(lo.w.real(), c.w.real()), std::min(lo.w.imag(), c.w.imag())};
            hi.z = {std::max(hi.z.real(), c.z.real()), std::max(hi.z.imag(), c.z.imag())};
            hi.w = {std::max(hi.w.real(), c.w.real()), std::max(hi.w.imag(), c.w.imag())};
        }
        const C2 mid = 0.5 * (lo + hi);
        double rad = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (group[i] == g) rad = std::max(rad, norm(centers[i] - mid));
        out.centers.push_back(mid);
        out.radius = std::max(out.radius, rad + 2.0 * h);
    }
    return out;
}

}  // namespace

TransversalityData estimate_inputs(const BivariatePoly& f1, const BivariatePoly& f2, double eps0,
                                   int subdivision_depth, const EstimateOptions& opts) {
    if (!(eps0 > 0.0 && eps0 < 1.0))
        throw Error(Err::BadInput, "estimate_inputs: eps0 must be in (0,1)");
    std::array<FnData, 2> fs{FnData{&f1, f1.dz(), f1.dw(), hess_bound(f1)},
                             FnData{&f2, f2.dz(), f2.dw(), hess_bound(f2)}};

    TransversalityData data;
    data.ratio = opts.ratio;
    data.B0 = std::max({1.0, bernstein_sup_exponent(as_fn(f1), 0.25, opts.b0_centers, opts.seed),
                        bernstein_sup_exponent(as_fn(f2), 0.25, opts.b0_centers, opts.seed + 1)});

    const int depth_cap = std::min(subdivision_depth, opts.max_depth);
    std::vector<Box> boxes{Box{{0, 0, 0, 0}}};  // level 0: |coords| <= 1/2
    long processed = 1;
    Clusters clusters;
    bool gates = false;
    int level = 0;
    for (level = 1; level <= depth_cap; ++level) {
        std::vector<Box> next;
        const double h = std::ldexp(1.0, -(level + 1));
        const double r = 2.0 * h;
        for (const auto& b : boxes) {
            for (int m = 0; m < 16; ++m) {
                Box child;
                for (int a = 0; a < 4; ++a)
                    child.idx[static_cast<std::size_t>(a)] =
                        2 * b.idx[static_cast<std::size_t>(a)] + ((m >> a) & 1);
                const C2 c = box_center(child, level);
                if (norm(c) > 0.5 + r) continue;  // clear of B(0,1/2)
                if (can_discard(fs, c, r, eps0)) continue;
                next.push_back(child);
            }
        }
        processed += static_cast<long>(next.size());
        boxes = std::move(next);
        if (processed > opts.box_budget || boxes.size() > 200000)
            throw Error(Err::SubdivisionBudgetExceeded,
                        "estimate_inputs: survivors will not coarsen; the pair looks "
                        "non-transversal at this level");
        if (boxes.empty()) break;
        if (level >= 10 && boxes.size() <= 4096) {
            clusters = cluster_boxes(boxes, level);
            const double H1 = -std::log(clusters.radius);
            const double logK1 =
                std::log(std::max<double>(1.0, static_cast<double>(clusters.centers.size())));
            if (H1 >= opts.ratio * std::max(data.B0, logK1)) {
                gates = true;
                break;
            }
        }
    }
    data.boxes_processed = processed;
    data.depth_used = std::min(level, depth_cap);

    if (boxes.empty()) {
        // zero-free at level eps0: empty cover, gates trivially satisfiable
        data.K1 = 0;
        data.H1 = opts.ratio * data.B0 + 1.0;
        data.H0 = std::max(-std::log(eps0), opts.ratio * data.H1);
        data.gates_ok = true;
        data.input_cover.H = data.H1;
        data.input_cover.K = 0;
        return data;
    }
    if (clusters.centers.empty()) {
        if (boxes.size() > 4096)
            throw Error(Err::SubdivisionBudgetExceeded,
                        "estimate_inputs: survivor set too large to enclose");
        clusters = cluster_boxes(boxes, data.depth_used);
    }

    data.K1 = static_cast<int>(clusters.centers.size());
    data.H1 = -std::log(clusters.radius);
    // enlarging H0 only shrinks the set the cover must contain
    data.H0 = std::max(-std::log(eps0), opts.ratio * data.H1);
    data.gates_ok =
        gates && data.H0 >= opts.ratio * data.H1 &&
        data.H1 >= opts.ratio * std::max(data.B0, std::log(std::max(1.0, double(data.K1))));
    data.input_cover.H = data.H1;
    data.input_cover.K = data.K1;
    const double radius = std::exp(-data.H1);
    for (const auto& c : clusters.centers) data.input_cover.balls.emplace_back(c, radius);
    data.input_cover.validate();
    return data;
}

// ---------------------------------------------------------------------------
// The two-directional pipeline

namespace {

struct PassResult {
    std::vector<Disk> disks;  // in the pass's transverse coordinate
    PassDiagnostics diag;
};

// One preparation direction: both functions share the frame, the circle and
// the coefficient disk; the resultant of the monic factors is fitted in the
// transverse variable and its zeros drive the 1-D exceptional disks.
PassResult run_pass(const BivariatePoly& f1, const BivariatePoly& f2, const Frame& frame,
                    double H, const BuildOptions& opts) {
    PassResult pr;

    const UnivariatePoly phi1 = frame_fiber(f1, frame, Complex{});
    const UnivariatePoly phi2 = frame_fiber(f2, frame, Complex{});
    std::vector<const UnivariatePoly*> both{&phi1, &phi2};
    double joint_min = 0.0;
    const double rho0 = select_circle(both, -1e300, &joint_min);
    pr.diag.rho0 = rho0;

    const double min1 = circle_extrema(phi1, Complex{}, rho0).min_log_abs;
    const double min2 = circle_extrema(phi2, Complex{}, rho0).min_log_abs;
    double r1 = std::min(select_r1(f1, frame, rho0, min1), select_r1(f2, frame, rho0, min2));

    WeierstrassFactorization wf1, wf2;
    bool prepared = false;
    for (int attempt = 0; attempt < 8 && !prepared; ++attempt) {
        try {
            wf1 = prepare(f1, frame, rho0, r1);
            wf2 = prepare(f2, frame, rho0, r1);
            prepared = true;
        } catch (const Error& e) {
            if (e.code() != Err::ZeroOnContour && e.code() != Err::WindingNotInteger) throw;
            r1 *= 0.5;
        }
    }
    if (!prepared) throw Error(Err::ZeroOnContour, "run_pass: no zero-free coefficient disk");
    pr.diag.r1 = r1;
    pr.diag.k1 = wf1.k;
    pr.diag.k2 = wf2.k;

    const CofactorBoundsReport bd1 = check_cofactor_bounds(wf1, f1);
    const CofactorBoundsReport bd2 = check_cofactor_bounds(wf2, f2);
    // certified cofactor floor, with a continuity allowance for the w-grid
    const double inf_g = std::min(bd1.lower_bound, bd2.lower_bound) - 0.1;

    if (wf1.k == 0 || wf2.k == 0) {
        // a zero-free factor pins |f_i| >= |g_i| floor on the whole polydisk
        pr.diag.achieved_exterior =
            (wf1.k == 0 ? bd1.lower_bound : bd2.lower_bound) - 0.1;
        return pr;
    }

    // resultant of the monic factors on a sampling ring, Taylor-fitted
    const double r_fit = 0.5 * r1;
    const int NR = 96;
    std::vector<Complex> samples(NR);
    double sample_scale = 0.0;
    for (int l = 0; l < NR; ++l) {
        const double t = kTwoPi * l / NR;
        const Complex w = r_fit * Complex{std::cos(t), std::sin(t)};
        const UnivariatePoly P1 = weierstrass_poly_at(f1, frame, rho0, w, wf1.k);
        const UnivariatePoly P2 = weierstrass_poly_at(f2, frame, rho0, w, wf2.k);
        samples[static_cast<std::size_t>(l)] = resultant_sylvester(P1, P2);
        sample_scale = std::max(sample_scale, std::abs(samples[static_cast<std::size_t>(l)]));
    }
    if (sample_scale < 1e-12)
        throw Error(Err::DegenerateResultant,
                    "run_pass: resultant of the prepared factors vanishes identically");

    const int dfit = std::min({opts.max_fit_degree, NR / 2});
    std::vector<Complex> cs(static_cast<std::size_t>(dfit) + 1, Complex{});
    for (int q = 0; q <= dfit; ++q) {
        Complex acc{};
        for (int l = 0; l < NR; ++l) {
            const double t = -kTwoPi * q * l / NR;
            acc += samples[static_cast<std::size_t>(l)] * Complex{std::cos(t), std::sin(t)};
        }
        acc /= static_cast<double>(NR) * std::pow(r_fit, q);
        cs[static_cast<std::size_t>(q)] = acc;
    }
    double cmax = 0.0;
    for (int q = 0; q <= dfit; ++q)
        cmax = std::max(cmax, std::abs(cs[static_cast<std::size_t>(q)]) * std::pow(r_fit, q));
    for (int q = 0; q <= dfit; ++q)
        if (std::abs(cs[static_cast<std::size_t>(q)]) * std::pow(r_fit, q) < 1e-13 * cmax)
            cs[static_cast<std::size_t>(q)] = Complex{};
    UnivariatePoly rfit(std::move(cs));

    // residual audit at fresh interior points
    double resid = 0.0;
    for (int l = 0; l < 8; ++l) {
        const double t = kTwoPi * (l + 0.37) / 8.0;
        const Complex w = 0.35 * r1 * Complex{std::cos(t), std::sin(t)};
        const UnivariatePoly P1 = weierstrass_poly_at(f1, frame, rho0, w, wf1.k);
        const UnivariatePoly P2 = weierstrass_poly_at(f2, frame, rho0, w, wf2.k);
        resid = std::max(resid, std::abs(resultant_sylvester(P1, P2) - rfit.eval(w)));
    }
    pr.diag.fit_residual = resid;

    // exceptional disks for the fitted resultant at the doubled level
    const Disk domain{Complex{}, r1 / 4.0};
    auto [cover_w, cert] = cartan_cover_poly(rfit, domain, 2.0 * H);
    pr.diag.n_disks = static_cast<int>(cover_w.disks.size());
    pr.diag.cartan_lb = cert.lower_bound_log;
    pr.disks = cover_w.disks;

    // true-resultant floor off the disks, then the two-sided bound pushes it
    // down to both monic factors and through the cofactors to |F|
    const double floor_R = std::exp(cert.lower_bound_log);
    const double floor_true = floor_R - resid - 1e-13 * sample_scale;
    double lam = floor_true > 0.0 ? std::log(floor_true) : cert.lower_bound_log - 2.0;

    double R51 = 1.0;
    const int s51 = std::max(wf1.k, wf2.k);
    for (std::size_t g = 0; g < wf1.w_grid.size(); g += 7) {
        const ResultantBounds rb = ResultantBounds::compute(wf1.P_at(g), wf2.P_at(g));
        R51 = std::max(R51, rb.R);
    }
    const double ach_P = static_cast<double>(s51) * lam -
                         std::pow(static_cast<double>(s51), 3) * std::log(2.0 * R51);
    pr.diag.achieved_exterior = ach_P + inf_g;
    return pr;
}

}  // namespace

CoverResult build_cover(const BivariatePoly& f1, const BivariatePoly& f2,
                        const TransversalityData& data, double H, const BuildOptions& opts) {
    if (H < 1.0) throw Error(Err::BadInput, "build_cover: need H >= 1");
    data.validate();

    CoverResult res;
    res.H = H;
    res.data = data;
    res.threshold_log = -H * data.B0 * data.B0 * data.H0;
    res.achieved_exterior_log = -data.H0 - 0.5 * std::log(2.0);  // outside the input balls
    res.cover.H = H;
    const double r_ball = std::exp(-H);
    const double scale = 0.125;

    for (std::size_t bi = 0; bi < data.input_cover.balls.size(); ++bi) {
        const C2 v0 = data.input_cover.balls[bi].center;
        Rng rng(opts.seed * 1315423911u + bi);

        const double M1 = max_log_ball(as_fn(f1), v0, scale, 1024, opts.seed + 3);
        const double M2 = max_log_ball(as_fn(f2), v0, scale, 1024, opts.seed + 4);

        // joint regular directions for both functions, nearly orthogonal
        C2 e1, e2;
        bool have = false;
        double slack = 2.0 * data.B0;
        for (int attempt = 0; attempt < 5 && !have; ++attempt, slack *= 2.0) {
            int tries = 0;
            bool found1 = false;
            while (tries < opts.max_direction_tries) {
                ++tries;
                const C2 e = rng.on_sphere3();
                if (found1 && std::abs(inner(e, e1)) > 0.1) continue;
                const UnivariatePoly q1 = f1.restrict_to_line(v0, scale * e);
                const UnivariatePoly q2 = f2.restrict_to_line(v0, scale * e);
                if (q1.is_zero() || q2.is_zero()) continue;
                if (circle_extrema(q1, Complex{}, 0.25).max_log_abs < M1 - slack) continue;
                if (circle_extrema(q2, Complex{}, 0.25).max_log_abs < M2 - slack) continue;
                if (!found1) {
                    e1 = e;
                    found1 = true;
                } else {
                    e2 = e;
                    have = true;
                    break;
                }
            }
        }
        if (!have)
            throw Error(Err::NoRegularDirection, "build_cover: no jointly regular frame found");

        const Frame frame{e1, e2, v0, scale};
        const PassResult pw = run_pass(f1, f2, frame, H, opts);            // disks in w
        const PassResult pz = run_pass(f1, f2, frame.swapped(), H, opts);  // disks in z
        res.diagnostics.push_back(pw.diag);
        res.diagnostics.push_back(pz.diag);

        const double ach_ball = std::min(pw.diag.achieved_exterior, pz.diag.achieved_exterior);
        res.achieved_exterior_log = std::min(res.achieved_exterior_log, ach_ball);

        // the input ball must sit inside both validity polydisks
        const double sigma_min =
            frame.scale * std::sqrt(1.0 - std::abs(inner(frame.e1, frame.e2)));
        const double pullback = std::exp(-data.H1) / sigma_min;
        const double z_ok = std::min(pw.diag.rho0, pz.diag.r1 > 0.0 ? pz.diag.r1 / 4.0 : 1.0);
        const double w_ok = std::min(pz.diag.rho0, pw.diag.r1 > 0.0 ? pw.diag.r1 / 4.0 : 1.0);
        if (pullback > std::min(z_ok, w_ok)) res.coverage_ok = false;

        for (std::size_t l = 0; l < pz.disks.size(); ++l)
            for (std::size_t k = 0; k < pw.disks.size(); ++k) {
                const Complex zc = pz.disks[l].center;
                const Complex wc = pw.disks[k].center;
                const double rframe = std::hypot(pz.disks[l].radius, pw.disks[k].radius);
                const double ramb = frame.max_stretch() * rframe;
                if (ramb > r_ball)
                    throw Error(Err::BadInput,
                                "build_cover: internal level left a ball above exp(-H)");
                res.cover.balls.emplace_back(frame.to_ambient(zc, wc), r_ball);
                res.provenance.push_back(
                    BallProvenance{static_cast<int>(bi), static_cast<int>(k), static_cast<int>(l)});
            }
    }

    res.cover.K = static_cast<int>(res.cover.balls.size());
    res.cover.validate();
    const double denom =
        std::max(1.0, data.K1 * data.B0 * data.B0 * data.H0 * data.H0);
    res.c_pipeline = static_cast<double>(res.cover.K) / denom;
    if (res.achieved_exterior_log < res.threshold_log) res.coverage_ok = false;
    return res;
}

VerificationReport verify_cover(const BivariatePoly& f1, const BivariatePoly& f2,
                                const CoverResult& result, int n_samples, std::uint64_t seed,
                                const C2* focus_center, double focus_radius) {
    VerificationReport rep;
    rep.threshold_log = result.threshold_log;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    Rng rng(seed);
    std::vector<double> margins;
    margins.reserve(static_cast<std::size_t>(n_samples));
    int produced = 0;
    long guard = 0;
    const long guard_max = 200L * n_samples;
    while (produced < n_samples && guard < guard_max) {
        ++guard;
        C2 v;
        if (focus_center && focus_radius > 0.0) {
            v = *focus_center + focus_radius * rng.in_unit_ball();
            if (norm(v) > 0.25) continue;
        } else {
            v = 0.25 * rng.in_unit_ball();
        }
        if (result.cover.contains(v)) continue;
        ++produced;
        const double lv = log_abs2(f1, f2, v);
        const double margin = lv - result.threshold_log;
        margins.push_back(margin);
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_point = v;
        }
        if (margin < 0.0) ++rep.violations;
    }
    rep.samples = produced;
    std::sort(margins.begin(), margins.end());
    if (!margins.empty()) {
        for (const double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const std::size_t idx = std::min(
                margins.size() - 1, static_cast<std::size_t>(q * (margins.size() - 1) + 0.5));
            rep.margin_quantiles.push_back(margins[idx]);
        }
    }
    return rep;
}

}  // namespace cb
