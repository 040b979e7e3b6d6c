#include "cb/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cb/parallel.hpp"
#include "cb/rng.hpp"

namespace cb {

namespace {

double log_abs(Complex v) {
    const double a = std::abs(v);
    return a > 0.0 ? std::log(a) : kLogZero;
}

// One sampling pass over the boundary sphere followed by shrinking-cap ascent.
double sphere_pass(const Fn2& f, const C2& center, double R, int budget, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<C2> dirs(static_cast<std::size_t>(budget));
    for (auto& d : dirs) d = rng.on_sphere3();
    std::vector<double> vals(dirs.size());
    parallel_for(dirs.size(), [&](std::size_t i) { vals[i] = log_abs(f(center + R * dirs[i])); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] > vals[best]) best = i;

    C2 u = dirs[best];
    double bv = vals[best];
    double cap = 0.4;
    for (int round = 0; round < 30; ++round) {
        for (int k = 0; k < 48; ++k) {
            C2 cand =
                u + cap * C2{{rng.gaussian(), rng.gaussian()}, {rng.gaussian(), rng.gaussian()}};
            const double nr = norm(cand);
            if (nr < 1e-12) continue;
            cand = (1.0 / nr) * cand;
            const double v = log_abs(f(center + R * cand));
            if (v > bv) {
                bv = v;
                u = cand;
            }
        }
        cap *= 0.62;
    }
    return bv;
}

}  // namespace

double max_log_ball(const Fn2& f, const C2& center, double R, int budget, std::uint64_t seed,
                    double tol) {
    if (!(R > 0.0)) throw Error(Err::BadInput, "max_log_ball: R > 0 required");
    if (budget < 64) budget = 64;
    double prev = sphere_pass(f, center, R, budget, seed);
    for (int b = 2 * budget; b <= 8 * budget; b *= 2) {
        const double cur = sphere_pass(f, center, R, b, seed + 1);
        if (std::abs(cur - prev) < tol || (cur == kLogZero && prev == kLogZero))
            return std::max(cur, prev);
        prev = std::max(cur, prev);
    }
    throw Error(Err::BudgetTooSmall, "max_log_ball: estimate still moving at 8x budget");
}

BernsteinReport bernstein_exponent(const Fn2& f, const BernsteinQuery& q) {
    q.validate();
    BernsteinReport rep;
    rep.M_outer = max_log_ball(f, q.center, q.R, q.budget, q.seed);
    rep.M_inner = max_log_ball(f, q.center, q.mu * q.R, q.budget, q.seed);
    rep.samples_used = 2L * q.budget;
    if (rep.M_outer == kLogZero && rep.M_inner == kLogZero) {
        rep.is_identically_zero = true;
        rep.B = 0.0;
        return rep;
    }
    rep.B = rep.M_outer - rep.M_inner;
    return rep;
}

BernsteinReport bernstein_exponent(const BivariatePoly& f, const BernsteinQuery& q) {
    if (f.max_abs_coeff() <= 1e-14) {
        BernsteinReport rep;
        rep.is_identically_zero = true;
        return rep;
    }
    return bernstein_exponent(as_fn(f), q);
}

// ---------------------------------------------------------------------------
// Trace suprema

namespace {

// w-values where f2(., w) vanishes identically: common roots of all
// coefficient polynomials (the vertical components of the curve).
std::vector<Complex> vertical_fibers(const BivariatePoly& f2) {
    std::vector<UnivariatePoly> coeffs;
    for (int i = 0; i <= f2.degz(); ++i) {
        auto c = f2.coeff_in_w(i);
        if (!c.is_zero()) coeffs.push_back(std::move(c));
    }
    if (coeffs.empty()) return {};
    std::size_t shortest = 0;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i].degree() < coeffs[shortest].degree()) shortest = i;
    if (coeffs[shortest].degree() < 1) return {};
    std::vector<Complex> out;
    const double scale = f2.max_abs_coeff();
    for (const auto& w : roots(coeffs[shortest])) {
        bool all_zero = true;
        for (const auto& c : coeffs)
            if (std::abs(c.eval(w)) > 1e-9 * scale * (1.0 + c.eval_abs_scale(w))) {
                all_zero = false;
                break;
            }
        if (all_zero) out.push_back(w);
    }
    return out;
}

struct TraceMax {
    double value = kLogZero;
    bool found = false;
    Complex best_w;
};

// Points of {f2=0} in the ball over one w-fiber, fed into the running max.
void scan_fiber(const BivariatePoly& f1, const BivariatePoly& f2, const C2& center, double R,
                Complex w, double f2_scale, TraceMax& acc) {
    const double dw2 = std::norm(w - center.w);
    if (dw2 > R * R) return;
    const UnivariatePoly fiber = f2.at_w(w);
    if (fiber.max_abs_coeff() <= 1e-13 * f2_scale) {
        // the whole z-line belongs to Z; the sup over the allowed z-disk sits
        // on its boundary circle
        const double rho = std::sqrt(std::max(0.0, R * R - dw2));
        double v;
        if (rho < 1e-300) {
            v = log_abs(f1.eval(center.z, w));
        } else {
            v = circle_extrema_fn([&](Complex z) { return f1.eval(z, w); }, center.z, rho, 256)
                    .max_log_abs;
        }
        if (!acc.found || v > acc.value) {
            acc.value = v;
            acc.best_w = w;
        }
        acc.found = true;
        return;
    }
    if (fiber.degree() < 1) return;
    for (const auto& zr : roots(fiber)) {
        if (std::norm(zr - center.z) + dw2 > R * R * (1.0 + 1e-12)) continue;
        const double v = log_abs(f1.eval(zr, w));
        if (!acc.found || v > acc.value) {
            acc.value = v;
            acc.best_w = w;
        }
        acc.found = true;
    }
}

TraceMax trace_sup(const BivariatePoly& f1, const BivariatePoly& f2, const C2& center, double R) {
    const double f2_scale = f2.max_abs_coeff();
    TraceMax acc;

    for (const auto& wv : vertical_fibers(f2)) scan_fiber(f1, f2, center, R, wv, f2_scale, acc);

    const int N = 257;  // odd, so the center fiber is hit exactly
    const double step = 2.0 * R / (N - 1);
    std::vector<TraceMax> rows(static_cast<std::size_t>(N));
    parallel_for(static_cast<std::size_t>(N), [&](std::size_t i) {
        for (int j = 0; j < N; ++j) {
            const Complex w = center.w + Complex{step * (static_cast<double>(i) - (N - 1) / 2.0),
                                                 step * (static_cast<double>(j) - (N - 1) / 2.0)};
            scan_fiber(f1, f2, center, R, w, f2_scale, rows[i]);
        }
    });
    for (const auto& r : rows) {
        if (r.found && (!acc.found || r.value > acc.value)) {
            acc.value = r.value;
            acc.best_w = r.best_w;
        }
        acc.found = acc.found || r.found;
    }
    if (!acc.found) return acc;

    // local refinement around the best fiber
    double cell = step;
    Complex w0 = acc.best_w;
    for (int round = 0; round < 4; ++round) {
        TraceMax local = acc;
        const int M = 17;
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < M; ++j) {
                const Complex w = w0 + Complex{cell * (2.0 * i / (M - 1) - 1.0),
                                               cell * (2.0 * j / (M - 1) - 1.0)};
                scan_fiber(f1, f2, center, R, w, f2_scale, local);
            }
        if (local.value > acc.value) {
            acc = local;
            w0 = local.best_w;
        }
        cell /= (M - 1) / 2.0;
    }
    return acc;
}

}  // namespace

double max_log_trace(const BivariatePoly& f1, const BivariatePoly& f2, const C2& center,
                     double R) {
    const TraceMax m = trace_sup(f1, f2, center, R);
    if (!m.found) throw Error(Err::EmptyTrace, "max_log_trace: ball does not meet the curve");
    return m.value;
}

BernsteinReport bernstein_trace_exponent(const BivariatePoly& f1, const BivariatePoly& f2,
                                         const BernsteinQuery& q) {
    q.validate();
    BernsteinReport rep;
    if (f1.max_abs_coeff() <= 1e-14) {
        rep.is_identically_zero = true;
        return rep;
    }
    const TraceMax inner = trace_sup(f1, f2, q.center, q.mu * q.R);
    if (!inner.found)
        throw Error(Err::EmptyTrace, "bernstein_trace_exponent: inner ball misses the curve");
    const TraceMax outer = trace_sup(f1, f2, q.center, q.R);
    rep.M_inner = inner.value;
    rep.M_outer = std::max(outer.value, inner.value);
    rep.samples_used = 2L * 257L * 257L;
    if (rep.M_outer == kLogZero) {
        // f1 vanishes at every sampled trace point
        rep.is_identically_zero = true;
        rep.B = 0.0;
        return rep;
    }
    rep.B = rep.M_outer - rep.M_inner;
    return rep;
}

double bernstein_sup_exponent(const Fn2& f, double mu, int center_samples, std::uint64_t seed) {
    Rng rng(seed);
    double best = 0.0;
    const double ladder[] = {0.25, 0.125, 0.0625};
    std::vector<C2> centers{C2{}};
    for (int i = 1; i < center_samples; ++i) centers.push_back(0.25 * rng.in_unit_ball());
    for (const auto& v0 : centers)
        for (const double R : ladder) {
            BernsteinQuery q;
            q.center = v0;
            q.R = R;
            q.mu = mu;
            q.budget = 1024;
            q.seed = seed + 17;
            const BernsteinReport rep = bernstein_exponent(f, q);
            if (!rep.is_identically_zero) best = std::max(best, rep.B);
        }
    return best;
}

// ---------------------------------------------------------------------------
// Harnack and the doubling bound with traced constants

HarnackVerdict check_harnack(const Fn1& h, Complex center, double R, Complex z, int n_samples,
                             double tol) {
    const double r = std::abs(z - center);
    if (!(r < R)) throw Error(Err::BadInput, "check_harnack: need |z - center| < R");

    // a zero inside shows up as nonzero boundary winding
    double winding = 0.0;
    Complex prev = h(center + R * Complex{1.0, 0.0});
    if (prev == Complex{}) throw Error(Err::NotZeroFree, "check_harnack: zero on boundary");
    const double two_pi = 2.0 * std::numbers::pi;
    double M = log_abs(prev);
    for (int i = 1; i <= n_samples; ++i) {
        const double t = two_pi * i / n_samples;
        const Complex cur = h(center + R * Complex{std::cos(t), std::sin(t)});
        if (cur == Complex{}) throw Error(Err::NotZeroFree, "check_harnack: zero on boundary");
        winding += std::arg(cur / prev);
        M = std::max(M, log_abs(cur));
        prev = cur;
    }
    if (std::abs(winding) > 0.5)
        throw Error(Err::NotZeroFree, "check_harnack: nonzero winding number on boundary");

    HarnackVerdict v;
    v.M = M;
    v.log_h_center = log_abs(h(center));
    v.log_h_z = log_abs(h(z));
    const double osc = v.M - v.log_h_center;
    v.lower = -2.0 * r / (R - r) * osc;
    v.upper = 2.0 * r / (R + r) * osc;
    const double diff = v.log_h_z - v.log_h_center;
    v.holds = diff >= v.lower - tol && diff <= v.upper + tol;
    return v;
}

namespace {

// zero count in D(0, radius) by boundary phase tracking; the radius is nudged
// within [lo, hi] when a zero sits (numerically) on the circle. Robust for
// high degrees where simultaneous root-finding struggles.
int zeros_in_disk_winding(const UnivariatePoly& p, double lo, double hi) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double mid = 0.5 * (lo + hi);
    const double span = 0.5 * (hi - lo);
    for (int bump = 0; bump < 12; ++bump) {
        const double rr =
            mid + (bump % 2 == 0 ? 1.0 : -1.0) * span * static_cast<double>(bump) / 12.0;
        for (int nodes = 1024; nodes <= 16384; nodes *= 2) {
            double total = 0.0;
            bool ok = true;
            Complex prev = p.eval(Complex{rr, 0.0});
            if (prev == Complex{}) break;
            for (int i = 1; i <= nodes && ok; ++i) {
                const double t = two_pi * i / nodes;
                const Complex cur = p.eval(rr * Complex{std::cos(t), std::sin(t)});
                if (cur == Complex{}) {
                    ok = false;
                    break;
                }
                const double d = std::arg(cur / prev);
                if (std::abs(d) > 2.8) ok = false;
                total += d;
                prev = cur;
            }
            if (!ok) continue;
            const double k = total / two_pi;
            if (std::abs(k - std::round(k)) < 0.1) return static_cast<int>(std::round(k));
        }
    }
    throw Error(Err::NoConvergence, "zeros_in_disk_winding: boundary winding unresolved");
}

}  // namespace

DoublingBoundReport check_doubling_bound(const UnivariatePoly& phi, Complex z0, double r, double mu) {
    if (!(std::abs(z0) < 0.125) || !(r < 0.125) || !(mu > 0.0 && mu < 1.0))
        throw Error(Err::BadInput, "check_doubling_bound: need |z0| < 1/8, r < 1/8, mu in (0,1)");
    const double M01 = circle_extrema(phi, 0.0, 1.0).max_log_abs;
    if (M01 > 1e-9)
        throw Error(Err::NormalizationViolated, "check_doubling_bound: M_phi(0,1) must be <= 0");

    DoublingBoundReport rep;
    if (phi.degree() >= 1) {
        rep.n_quarter3 = zeros_in_disk_winding(phi, 0.74, 0.76);
        // the cofactor split must stay zero-free on the 0.85-disks used by the
        // Harnack steps, yet within the 9/8 distance budget: radius in
        // [0.85, 0.875]
        rep.n_cofactor = zeros_in_disk_winding(phi, 0.851, 0.8745);
    }
    rep.m_quarter = circle_extrema(phi, 0.0, 0.25).max_log_abs;
    rep.B = circle_extrema(phi, z0, r).max_log_abs - circle_extrema(phi, z0, mu * r).max_log_abs;

    // phi = h P with P collecting the zeros in D(0,7/8); h is zero-free there.
    // Mean-value bounds: sup_{D(0,3/4)} log|h| <= n log 4 (circles of radius
    // 1/4 stay inside D(0,1)); sup_{D(0,0.85)} log|h| <= n log 10 (radius 1/10
    // circles); and at the maximizer of phi on D(0,1/4)
    //   M_h(0,1/4) >= m - n log(9/8)    since |P| <= (9/8)^n there.
    const double n0 = static_cast<double>(rep.n_cofactor);
    rep.U_log4 = n0 * std::log(4.0);
    rep.U_log10 = n0 * std::log(10.0);
    rep.M14_lower = rep.m_quarter - n0 * std::log(9.0 / 8.0);

    // Harnack on D(., 1/2) around the inner maximizer covers both increments
    // within distance 2r; the step down to the maximizer on |z| <= 1/4 crosses
    // distance up to 1/2 where the 1/2-disk degenerates, so a 0.6-disk with
    // factor 2*(1/2)/(0.6 - 1/2) = 10 replaces it.
    rep.c1 = 4.0 * mu * r / (0.5 - 2.0 * mu * r);
    rep.c2 = 4.0 * r / (0.5 + 2.0 * r);
    const double osc_quarter = rep.U_log10 - rep.M14_lower;  // >= U10 - M_h(0,1/4)
    const double osc_inner =
        (rep.U_log4 - rep.M14_lower) + 10.0 * osc_quarter;  // >= U4 - M_h(z0, mu r)
    rep.bound = (rep.c1 + rep.c2) * osc_inner + n0 * std::log(1.0 / mu);
    rep.holds = rep.B <= rep.bound + 1e-6;
    return rep;
}

}  // namespace cb
