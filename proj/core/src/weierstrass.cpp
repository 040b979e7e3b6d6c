#include "cb/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cb/rng.hpp"

namespace cb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_abs(Complex v) {
    const double a = std::abs(v);
    return a > 0.0 ? std::log(a) : kLogZero;
}
}  // namespace

void Frame::validate() const {
    if (std::abs(norm(e1) - 1.0) > 1e-9 || std::abs(norm(e2) - 1.0) > 1e-9)
        throw Error(Err::BadInput, "Frame: directions must be unit vectors");
    if (std::abs(inner(e1, e2)) > 0.1)
        throw Error(Err::BadInput, "Frame: directions must be nearly orthogonal");
    if (!(scale > 0.0)) throw Error(Err::BadInput, "Frame: scale must be positive");
}

double Frame::max_stretch() const {
    // Gram matrix of (e1,e2) has eigenvalues 1 +- |<e1,e2>|.
    return scale * std::sqrt(1.0 + std::abs(inner(e1, e2)));
}

RegularDirection find_regular_direction(const BivariatePoly& f, const C2& v0, double R0, double m,
                                        int max_tries, std::uint64_t seed) {
    std::vector<const BivariatePoly*> fs{&f};
    return find_joint_regular_direction(fs, v0, R0, m, max_tries, seed);
}

RegularDirection find_joint_regular_direction(const std::vector<const BivariatePoly*>& fs,
                                              const C2& v0, double R0, double m, int max_tries,
                                              std::uint64_t seed, const C2* avoid) {
    for (const auto* f : fs)
        if (f->max_abs_coeff() <= 0.0)
            throw Error(Err::AllZero, "find_regular_direction: zero polynomial");
    Rng rng(seed);
    for (int attempt = 1; attempt <= max_tries; ++attempt) {
        const C2 e = rng.on_sphere3();
        if (avoid && std::abs(inner(e, *avoid)) > 0.1) continue;
        double worst = std::numeric_limits<double>::infinity();
        double worst_angle = 0.0;
        bool ok = true;
        for (const auto* f : fs) {
            const UnivariatePoly restricted = f->restrict_to_line(v0, e);
            if (restricted.is_zero()) {
                ok = false;
                break;
            }
            const CircleExtrema ex = circle_extrema(restricted, 0.0, R0 / 4.0);
            if (ex.max_log_abs < worst) {
                worst = ex.max_log_abs;
                worst_angle = ex.argmax_angle;
            }
            if (ex.max_log_abs < m) {
                ok = false;
                break;
            }
        }
        if (ok) {
            RegularDirection rd;
            rd.direction = e;
            rd.m_level = m;
            const Complex zstar =
                (R0 / 4.0) * Complex{std::cos(worst_angle), std::sin(worst_angle)};
            rd.witness = v0 + zstar * e;
            rd.witness_log = worst;
            rd.tries = attempt;
            return rd;
        }
    }
    throw Error(Err::NoRegularDirection, "no m-regular direction within the try budget");
}

double select_circle(const std::vector<const UnivariatePoly*>& restrictions, double threshold_log,
                     double* achieved_min) {
    for (const auto* p : restrictions)
        if (p->is_zero()) throw Error(Err::AllZero, "select_circle: zero restriction");
    double best_rho = 0.0, best_min = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < 128; ++j) {
        const double rho = 0.125 + (j + 0.5) / 128.0 * 0.125;
        double circle_min = std::numeric_limits<double>::infinity();
        for (const auto* p : restrictions) {
            const CircleExtrema ex = circle_extrema(*p, 0.0, rho);
            circle_min = std::min(circle_min, ex.min_log_abs);
        }
        if (circle_min > best_min) {
            best_min = circle_min;
            best_rho = rho;
        }
    }
    if (achieved_min) *achieved_min = best_min;
    if (best_min < threshold_log)
        throw Error(Err::NoGoodCircle, "select_circle: every candidate circle dips below threshold");
    return best_rho;
}

double select_circle(const UnivariatePoly& restriction, double threshold_log,
                     double* achieved_min) {
    std::vector<const UnivariatePoly*> rs{&restriction};
    return select_circle(rs, threshold_log, achieved_min);
}

double select_r1(const BivariatePoly& f, const Frame& frame, double rho0, double circle_min_log,
                 double r1_cap) {
    // |f~(z,w) - f~(z,0)| <= |w| * sup |d f~/dw| over the polydisk; the sup is
    // bounded through the gradient of f at points within |origin| + 2*scale of
    // the origin. Solving cauchy * r1 <= circle_min/4 keeps the contour
    // zero-free with margin.
    (void)rho0;
    const double reach = std::max(1.0, cb::norm(frame.origin) + 2.0 * frame.scale);
    const double grad_bound = f.coeff_abs_sum() * (f.total_degree() + 1.0) *
                              std::pow(reach, std::max(0, f.total_degree() - 1));
    const double cauchy = std::max(1e-300, grad_bound * frame.max_stretch());
    const double r1 = std::min(r1_cap, std::exp(circle_min_log) / (4.0 * cauchy));
    return std::max(r1, 1e-8);
}

UnivariatePoly frame_fiber(const BivariatePoly& f, const Frame& frame, Complex w) {
    const C2 base = frame.origin + frame.scale * (w * frame.e2);
    return f.restrict_to_line(base, frame.scale * frame.e1);
}

namespace {

// Winding number by phase tracking; requires every step < pi.
int winding_number(const std::vector<Complex>& values, bool* resolved) {
    double total = 0.0;
    *resolved = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Complex a = values[i];
        const Complex b = values[(i + 1) % values.size()];
        if (a == Complex{} || b == Complex{}) {
            *resolved = false;
            return 0;
        }
        const double d = std::arg(b / a);
        if (std::abs(d) > 2.8) *resolved = false;
        total += d;
    }
    const double k = total / kTwoPi;
    const double nearest = std::round(k);
    if (std::abs(k - nearest) > 0.1) *resolved = false;
    return static_cast<int>(nearest);
}

// Interior zero count and power sums of one fiber by adaptive trapezoid
// contour quadrature.
struct FiberPrep {
    int k = 0;
    std::vector<Complex> b;  // b_1 .. b_k
};

FiberPrep contour_prep(const UnivariatePoly& fw, double rho0, double f_scale, int start_nodes,
                       int max_nodes) {
    int nodes = start_nodes;
    std::vector<Complex> b_prev;
    while (true) {
        std::vector<Complex> zs(static_cast<std::size_t>(nodes));
        std::vector<Complex> vals(static_cast<std::size_t>(nodes));
        double min_abs = std::numeric_limits<double>::infinity();
        for (int i = 0; i < nodes; ++i) {
            const double t = kTwoPi * i / nodes;
            const Complex z = rho0 * Complex{std::cos(t), std::sin(t)};
            zs[static_cast<std::size_t>(i)] = z;
            vals[static_cast<std::size_t>(i)] = fw.eval(z);
            min_abs = std::min(min_abs, std::abs(vals[static_cast<std::size_t>(i)]));
        }
        if (min_abs <= 1e-13 * (f_scale + fw.eval_abs_scale(rho0)))
            throw Error(Err::ZeroOnContour, "fiber vanishes on the contour");

        bool resolved = false;
        const int kw = winding_number(vals, &resolved);
        if (!resolved) {
            if (nodes >= max_nodes)
                throw Error(Err::WindingNotInteger, "winding number unresolved at max nodes");
            nodes *= 2;
            continue;
        }
        if (kw < 0) throw Error(Err::WindingNotInteger, "negative winding number");
        if (kw == 0) return {0, {}};

        const UnivariatePoly dfw = fw.derivative();
        std::vector<Complex> b(static_cast<std::size_t>(kw), Complex{});
        for (int i = 0; i < nodes; ++i) {
            const Complex z = zs[static_cast<std::size_t>(i)];
            const Complex ratio = dfw.eval(z) / vals[static_cast<std::size_t>(i)];
            Complex zp = z;
            for (int p = 0; p < kw; ++p) {
                b[static_cast<std::size_t>(p)] += zp * ratio * z;
                zp *= z;
            }
        }
        for (auto& bp : b) bp /= static_cast<double>(nodes);

        if (b_prev.size() == b.size()) {
            double drift = 0.0;
            for (std::size_t p = 0; p < b.size(); ++p)
                drift = std::max(drift, std::abs(b[p] - b_prev[p]));
            if (drift <= 1e-10 * (1.0 + rho0)) return {kw, std::move(b)};
        }
        if (nodes >= max_nodes) return {kw, std::move(b)};
        b_prev = std::move(b);
        nodes *= 2;
    }
}

// Newton's identities: e_j = (1/j) sum_{i=1..j} (-1)^{i-1} e_{j-i} b_i, then
// the coefficient of z^j in the monic factor is (-1)^{k-j} e_{k-j}.
std::vector<Complex> coeffs_from_power_sums(int k, const std::vector<Complex>& b) {
    std::vector<Complex> e(static_cast<std::size_t>(k) + 1, Complex{});
    e[0] = 1.0;
    for (int j = 1; j <= k; ++j) {
        Complex acc{};
        double sign = 1.0;
        for (int i = 1; i <= j; ++i) {
            acc += sign * e[static_cast<std::size_t>(j - i)] * b[static_cast<std::size_t>(i - 1)];
            sign = -sign;
        }
        e[static_cast<std::size_t>(j)] = acc / static_cast<double>(j);
    }
    std::vector<Complex> a(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const int idx = k - j;
        a[static_cast<std::size_t>(j)] =
            ((idx % 2 == 0) ? 1.0 : -1.0) * e[static_cast<std::size_t>(idx)];
    }
    return a;
}

}  // namespace

UnivariatePoly weierstrass_poly_at(const BivariatePoly& f, const Frame& frame, double rho0,
                                   Complex w, int expected_k, int max_nodes) {
    const UnivariatePoly fw = frame_fiber(f, frame, w);
    const FiberPrep fp = contour_prep(fw, rho0, f.max_abs_coeff(), 512, max_nodes);
    if (expected_k >= 0 && fp.k != expected_k)
        throw Error(Err::WindingNotInteger, "weierstrass_poly_at: winding number changed");
    std::vector<Complex> cs = coeffs_from_power_sums(fp.k, fp.b);
    cs.push_back(Complex{1.0, 0.0});
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly WeierstrassFactorization::P_at(std::size_t grid_index) const {
    std::vector<Complex> cs = a_coeffs.at(grid_index);
    cs.push_back(Complex{1.0, 0.0});
    return UnivariatePoly(std::move(cs));
}

Complex WeierstrassFactorization::eval_P(std::size_t grid_index, Complex z) const {
    Complex acc{1.0, 0.0};
    const auto& a = a_coeffs[grid_index];
    for (std::size_t j = a.size(); j-- > 0;) acc = acc * z + a[j];
    return acc;
}

WeierstrassFactorization prepare(const BivariatePoly& f, const Frame& frame, double rho0,
                                 double r1, const PrepareOptions& opts) {
    frame.validate();
    if (!(rho0 > 0.0) || !(r1 > 0.0)) throw Error(Err::BadInput, "prepare: rho0, r1 > 0");

    WeierstrassFactorization wf;
    wf.rho0 = rho0;
    wf.r1 = r1;
    wf.frame = frame;

    // rings plus center; ring radii spread over (0, r1]
    wf.w_grid.push_back(Complex{});
    for (int q = 1; q <= opts.grid_rings; ++q) {
        const double rr = r1 * q / opts.grid_rings;
        for (int a = 0; a < opts.grid_angles; ++a) {
            const double t = kTwoPi * a / opts.grid_angles;
            wf.w_grid.emplace_back(rr * std::cos(t), rr * std::sin(t));
        }
    }

    const double f_scale = f.max_abs_coeff();
    int k = -1;
    wf.a_coeffs.resize(wf.w_grid.size());
    for (std::size_t gidx = 0; gidx < wf.w_grid.size(); ++gidx) {
        const UnivariatePoly fw = frame_fiber(f, frame, wf.w_grid[gidx]);
        const FiberPrep fp =
            contour_prep(fw, rho0, f_scale, opts.contour_nodes, opts.max_contour_nodes);
        if (k < 0)
            k = fp.k;
        else if (k != fp.k)
            throw Error(Err::WindingNotInteger, "prepare: winding number varies across the grid");
        wf.a_coeffs[gidx] = coeffs_from_power_sums(fp.k, fp.b);
    }
    wf.k = k;

    // validation samples: z-rings inside the contour, g = f/P pointwise
    for (std::size_t gidx = 0; gidx < wf.w_grid.size(); ++gidx) {
        const Complex w = wf.w_grid[gidx];
        const UnivariatePoly fw = frame_fiber(f, frame, w);
        for (int q = 0; q < 3; ++q) {
            const double rr = rho0 * (0.25 + 0.25 * q);
            for (int a = 0; a < 8; ++a) {
                const double t = kTwoPi * (a + 0.31 * static_cast<double>(q)) / 8.0;
                const Complex z = rr * Complex{std::cos(t), std::sin(t)};
                const Complex P = wf.eval_P(gidx, z);
                if (std::abs(P) < 1e-14) continue;
                wf.g_points.push_back(C2{z, w});
                wf.g_grid_index.push_back(gidx);
                wf.g_samples.push_back(fw.eval(z) / P);
            }
        }
    }
    return wf;
}

double factorization_residual(const WeierstrassFactorization& wf, const BivariatePoly& f) {
    // g reconstructed from boundary data: g(z,w) = (1/2 pi i) oint f/P / (zeta - z) dzeta.
    // If P failed to swallow exactly the interior zeros, the reconstruction
    // disagrees with f/P and the residual blows up.
    double worst = 0.0;
    const int nodes = 1024;
    std::size_t prev_gidx = wf.w_grid.size();
    std::vector<Complex> boundary(static_cast<std::size_t>(nodes));
    UnivariatePoly fw;
    for (std::size_t gi = 0; gi < wf.g_points.size(); ++gi) {
        const std::size_t gidx = wf.g_grid_index[gi];
        if (gidx != prev_gidx) {
            fw = frame_fiber(f, wf.frame, wf.w_grid[gidx]);
            for (int i = 0; i < nodes; ++i) {
                const double t = kTwoPi * i / nodes;
                const Complex zeta = wf.rho0 * Complex{std::cos(t), std::sin(t)};
                boundary[static_cast<std::size_t>(i)] = fw.eval(zeta) / wf.eval_P(gidx, zeta);
            }
            prev_gidx = gidx;
        }
        const Complex z = wf.g_points[gi].z;
        if (std::abs(z) >= 0.85 * wf.rho0) continue;
        Complex g_cauchy{};
        for (int i = 0; i < nodes; ++i) {
            const double t = kTwoPi * i / nodes;
            const Complex zeta = wf.rho0 * Complex{std::cos(t), std::sin(t)};
            // dzeta = i zeta dt; the 1/(2 pi i) folds into the average
            g_cauchy += boundary[static_cast<std::size_t>(i)] * zeta / (zeta - z);
        }
        g_cauchy /= static_cast<double>(nodes);
        const Complex resid = fw.eval(z) - wf.eval_P(gidx, z) * g_cauchy;
        worst = std::max(worst, std::abs(resid));
    }
    return worst;
}

CofactorBoundsReport check_cofactor_bounds(const WeierstrassFactorization& wf, const BivariatePoly& f,
                             bool throw_on_violation) {
    CofactorBoundsReport rep;
    rep.inf_log_f_contour = std::numeric_limits<double>::infinity();
    for (std::size_t gidx = 0; gidx < wf.w_grid.size(); ++gidx) {
        const UnivariatePoly fw = frame_fiber(f, wf.frame, wf.w_grid[gidx]);
        const CircleExtrema ex = circle_extrema(fw, 0.0, wf.rho0);
        rep.inf_log_f_contour = std::min(rep.inf_log_f_contour, ex.min_log_abs);
    }
    // sup over the unit polydisk in frame coordinates: torus scan plus
    // alternating 1-D golden refinement in the two angles
    double supf = kLogZero;
    const int nt = 96;
    double bi = 0.0, bj = 0.0;
    auto at_angles = [&](double ti, double tj) {
        const Complex z{std::cos(ti), std::sin(ti)};
        const Complex w{std::cos(tj), std::sin(tj)};
        return log_abs(f.eval(wf.frame.to_ambient(z, w)));
    };
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nt; ++j) {
            const double v = at_angles(kTwoPi * i / nt, kTwoPi * j / nt);
            if (v > supf) {
                supf = v;
                bi = kTwoPi * i / nt;
                bj = kTwoPi * j / nt;
            }
        }
    double span = kTwoPi / nt;
    for (int round = 0; round < 40; ++round) {
        double improved_i = bi, improved_j = bj;
        for (int s = -2; s <= 2; ++s) {
            const double v1 = at_angles(bi + s * span / 2.0, bj);
            if (v1 > supf) {
                supf = v1;
                improved_i = bi + s * span / 2.0;
            }
            const double v2 = at_angles(bi, bj + s * span / 2.0);
            if (v2 > supf) {
                supf = v2;
                improved_j = bj + s * span / 2.0;
            }
        }
        bi = improved_i;
        bj = improved_j;
        span *= 0.6;
    }
    rep.sup_log_f_polydisk = supf;

    rep.inf_log_g = std::numeric_limits<double>::infinity();
    rep.sup_log_g = -std::numeric_limits<double>::infinity();
    C2 worst;
    for (std::size_t i = 0; i < wf.g_samples.size(); ++i) {
        const double v = log_abs(wf.g_samples[i]);
        if (v < rep.inf_log_g) {
            rep.inf_log_g = v;
            worst = wf.g_points[i];
        }
        rep.sup_log_g = std::max(rep.sup_log_g, v);
    }
    rep.worst_point = worst;

    rep.lower_bound = rep.inf_log_f_contour - wf.k * std::log(2.0 * wf.rho0);
    rep.upper_bound = rep.sup_log_f_polydisk + wf.k * std::log(2.0);
    rep.holds = rep.inf_log_g >= rep.lower_bound - 1e-7 && rep.sup_log_g <= rep.upper_bound + 1e-7;
    if (!rep.holds && throw_on_violation)
        throw Error(Err::BoundViolated, "check_cofactor_bounds: factorization bound violated");
    return rep;
}

}  // namespace cb
