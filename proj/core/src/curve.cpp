#include "cb/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cb/resultant.hpp"

namespace cb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Globally greedy nearest-neighbor matching: next[perm[i]] continues prev[i].
// Returns max matched drift, or -1 when the sizes differ.
double match_roots(const std::vector<Complex>& prev, const std::vector<Complex>& next,
                   std::vector<int>& perm) {
    if (prev.size() != next.size()) return -1.0;
    const std::size_t k = prev.size();
    perm.assign(k, -1);
    std::vector<bool> used(k, false);
    double drift = 0.0;
    for (std::size_t round = 0; round < k; ++round) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (perm[i] >= 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (used[j]) continue;
                const double d = std::abs(prev[i] - next[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        perm[bi] = static_cast<int>(bj);
        used[bj] = true;
        drift = std::max(drift, best);
    }
    return drift;
}

double min_pairwise(const std::vector<Complex>& zs) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) m = std::min(m, std::abs(zs[i] - zs[j]));
    return m;
}

std::vector<Complex> fiber_roots(const BivariatePoly& f2, Complex w) {
    const UnivariatePoly fw = f2.at_w(w);
    if (fw.degree() < 1) return {};
    return roots(fw);
}

// One adaptive tracking step prev@wa -> wb, splitting when roots drift
// together faster than they stay apart.
std::vector<Complex> step_track(const BivariatePoly& f2, const std::vector<Complex>& prev,
                                Complex wa, Complex wb, int depth, const TrackOptions& opts) {
    const std::vector<Complex> next = fiber_roots(f2, wb);
    std::vector<int> perm;
    const double drift = match_roots(prev, next, perm);
    const double sep =
        next.size() >= 2 ? min_pairwise(next) : std::numeric_limits<double>::infinity();
    if (drift >= 0.0 && (prev.size() < 2 || sep > 2.0 * drift)) {
        std::vector<Complex> matched(prev.size());
        for (std::size_t i = 0; i < prev.size(); ++i)
            matched[i] = next[static_cast<std::size_t>(perm[i])];
        return matched;
    }
    if (depth >= opts.max_depth)
        throw Error(Err::CollisionUnresolved, "root tracking hit a (near-)singular fiber");
    const Complex mid = 0.5 * (wa + wb);
    const std::vector<Complex> half = step_track(f2, prev, wa, mid, depth + 1, opts);
    return step_track(f2, half, mid, wb, depth + 1, opts);
}

}  // namespace

std::vector<std::vector<Complex>> track_branches(const BivariatePoly& f2,
                                                 const std::vector<Complex>& w_path,
                                                 const std::vector<Complex>& z_init,
                                                 const TrackOptions& opts) {
    if (w_path.empty()) throw Error(Err::BadInput, "track_branches: empty path");
    std::vector<std::vector<Complex>> out;
    out.push_back(z_init.empty() ? fiber_roots(f2, w_path.front()) : z_init);
    for (std::size_t i = 1; i < w_path.size(); ++i)
        out.push_back(step_track(f2, out.back(), w_path[i - 1], w_path[i], 0, opts));
    return out;
}

MonodromyResult branch_order(const BivariatePoly& f2, Complex singular_w, double loop_radius,
                             int n_steps) {
    if (loop_radius <= 0.0) throw Error(Err::BadInput, "branch_order: loop radius must be > 0");
    std::vector<Complex> path;
    for (int i = 0; i <= n_steps; ++i) {
        const double t = kTwoPi * i / n_steps;
        path.push_back(singular_w + loop_radius * Complex{std::cos(t), std::sin(t)});
    }
    const auto runs = track_branches(f2, path, {});
    MonodromyResult res;
    res.base_roots = runs.front();
    const std::size_t k = res.base_roots.size();
    if (k == 0) throw Error(Err::BadInput, "branch_order: empty fiber on the loop");

    std::vector<int> perm;
    const double drift = match_roots(runs.back(), res.base_roots, perm);
    const double sep = k >= 2 ? min_pairwise(res.base_roots) : 1.0;
    if (drift < 0.0 || (k >= 2 && drift > 0.45 * sep))
        throw Error(Err::CollisionUnresolved, "branch_order: loop endpoints failed to match");

    std::vector<bool> seen(k, false);
    for (std::size_t s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::vector<int> cycle;
        std::size_t cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cycle.push_back(static_cast<int>(cur));
            cur = static_cast<std::size_t>(perm[cur]);
        }
        res.orders.push_back(static_cast<int>(cycle.size()));
        res.cycles.push_back(std::move(cycle));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Resultants in w by evaluation-interpolation

UnivariatePoly resultant_in_w(const BivariatePoly& f, const BivariatePoly& g) {
    const int n = f.degz(), m = g.degz();
    if (n < 0 || m < 0) throw Error(Err::BadInput, "resultant_in_w: zero polynomial");
    if (n == 0 && m == 0) throw Error(Err::BadInput, "resultant_in_w: both z-degrees are zero");

    const int deg_bound =
        std::max(0, f.degw()) * std::max(m, 1) + std::max(0, g.degw()) * std::max(n, 1);
    const int N = deg_bound + 5;
    const UnivariatePoly lcf = f.coeff_in_w(n);
    const UnivariatePoly lcg = g.coeff_in_w(m);

    Complex ring{1.0, 0.0};
    bool found = false;
    for (double cand : {1.0, 1.37, 0.73, 1.91, 0.55, 2.31}) {
        for (double phase : {0.0, 0.379, 0.811}) {
            const Complex rr = cand * Complex{std::cos(phase), std::sin(phase)};
            bool ok = true;
            for (int l = 0; l < N && ok; ++l) {
                const double t = kTwoPi * l / N;
                const Complex w = rr * Complex{std::cos(t), std::sin(t)};
                if (std::abs(lcf.eval(w)) < 1e-9 * (1.0 + lcf.eval_abs_scale(w)) ||
                    std::abs(lcg.eval(w)) < 1e-9 * (1.0 + lcg.eval_abs_scale(w)))
                    ok = false;
            }
            if (ok) {
                ring = rr;
                found = true;
                break;
            }
        }
        if (found) break;
    }
    if (!found)
        throw Error(Err::BadInput,
                    "resultant_in_w: leading coefficients vanish on every ring tried");

    std::vector<Complex> samples(static_cast<std::size_t>(N));
    for (int l = 0; l < N; ++l) {
        const double t = kTwoPi * l / N;
        const Complex w = ring * Complex{std::cos(t), std::sin(t)};
        const UnivariatePoly fw = f.at_w(w);
        const UnivariatePoly gw = g.at_w(w);
        Complex value;
        if (n >= 1 && m >= 1)
            value = resultant_sylvester(fw, gw);
        else if (n == 0)
            value = std::pow(fw.coeff(0), m);
        else
            value = std::pow(gw.coeff(0), n);
        samples[static_cast<std::size_t>(l)] = value;
    }

    // inverse DFT on the ring; exact for degree < N
    std::vector<Complex> coeffs(static_cast<std::size_t>(deg_bound) + 1, Complex{});
    double scale = 0.0;
    for (const auto& s : samples) scale = std::max(scale, std::abs(s));
    for (int q = 0; q <= deg_bound; ++q) {
        Complex acc{};
        for (int l = 0; l < N; ++l) {
            const double t = -kTwoPi * q * l / N;
            acc += samples[static_cast<std::size_t>(l)] * Complex{std::cos(t), std::sin(t)};
        }
        acc /= static_cast<double>(N);
        acc /= std::pow(ring, q);
        coeffs[static_cast<std::size_t>(q)] = acc;
    }
    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    if (cmax <= 1e-12 * std::max(1.0, scale))
        throw Error(Err::CommonFactor, "resultant_in_w: resultant vanishes identically");
    for (auto& c : coeffs)
        if (std::abs(c) < 1e-11 * cmax) c = Complex{};
    return UnivariatePoly(std::move(coeffs));
}

std::vector<Complex> discriminant_points(const BivariatePoly& f2) {
    std::vector<Complex> pts;
    const int n = f2.degz();
    if (n >= 1) {
        const BivariatePoly df = f2.dz();
        if (!df.is_zero()) {
            const UnivariatePoly disc = resultant_in_w(f2, df);
            if (disc.degree() >= 1)
                for (const auto& w : roots(disc)) pts.push_back(w);
        }
        const UnivariatePoly lc = f2.coeff_in_w(n);
        if (lc.degree() >= 1)
            for (const auto& w : roots(lc)) pts.push_back(w);
    }
    std::vector<Complex> out;
    for (const auto& w : pts) {
        bool dup = false;
        for (const auto& v : out)
            if (std::abs(w - v) < 1e-7 * (1.0 + std::abs(w))) dup = true;
        if (!dup) out.push_back(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Atlas construction

namespace {

std::vector<Complex> vertical_fiber_values(const BivariatePoly& f2) {
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

// Exact division of every z-coefficient by (w - w0), applied while the whole
// fiber at w0 vanishes.
BivariatePoly deflate_vertical(const BivariatePoly& f2, Complex w0, int* multiplicity) {
    BivariatePoly cur = f2;
    int mult = 0;
    while (true) {
        bool divisible = cur.degw() >= 1;
        const double scale = cur.max_abs_coeff();
        for (int i = 0; i <= cur.degz() && divisible; ++i) {
            const UnivariatePoly c = cur.coeff_in_w(i);
            if (!c.is_zero() && std::abs(c.eval(w0)) > 1e-9 * scale * (1.0 + c.eval_abs_scale(w0)))
                divisible = false;
        }
        if (!divisible) break;
        std::vector<std::vector<Complex>> grid(static_cast<std::size_t>(cur.degz()) + 1);
        for (int i = 0; i <= cur.degz(); ++i) {
            const UnivariatePoly c = cur.coeff_in_w(i);
            if (c.is_zero()) continue;
            std::vector<Complex> q(static_cast<std::size_t>(std::max(c.degree(), 1)), Complex{});
            Complex carry{};
            for (int j = c.degree(); j >= 1; --j) {
                carry = c.coeff(j) + carry * w0;
                q[static_cast<std::size_t>(j - 1)] = carry;
            }
            grid[static_cast<std::size_t>(i)] = std::move(q);
        }
        cur = BivariatePoly(std::move(grid));
        ++mult;
    }
    if (multiplicity) *multiplicity = mult;
    return cur;
}

BranchChart make_regular_chart(const BivariatePoly& f2, Complex w_seed, Complex z_root,
                               double epsilon) {
    BranchChart chart;
    chart.kind = ChartKind::Regular;
    chart.base_point = C2{z_root, w_seed};
    chart.p = 1;
    chart.epsilon = epsilon;

    const double scale = std::max(f2.max_abs_coeff(), 1e-300);
    const std::vector<Complex> base = fiber_roots(f2, w_seed);
    std::size_t my_index = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (std::abs(base[i] - z_root) < std::abs(base[my_index] - z_root)) my_index = i;

    const int G = 9;
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b) {
            const Complex t{epsilon * (2.0 * a / (G - 1) - 1.0),
                            epsilon * (2.0 * b / (G - 1) - 1.0)};
            if (std::abs(t) > epsilon) continue;
            const std::vector<Complex> path{w_seed, w_seed + 0.5 * t, w_seed + t};
            const auto run = track_branches(f2, path, base);
            const Complex zeta = run.back()[my_index];
            chart.params.push_back(t);
            chart.points.push_back(C2{zeta, w_seed + t});
            chart.residual =
                std::max(chart.residual, std::abs(f2.eval(zeta, w_seed + t)) / scale);
            chart.delta = std::max(chart.delta, std::abs(zeta - z_root));
        }
    return chart;
}

std::vector<BranchChart> make_puiseux_charts(const BivariatePoly& f2, Complex w_s,
                                             double loop_radius) {
    std::vector<BranchChart> charts;
    const double rho_w = loop_radius / 8.0;
    const MonodromyResult mono = branch_order(f2, w_s, rho_w);
    const double scale = std::max(f2.max_abs_coeff(), 1e-300);

    std::vector<Complex> center_roots;
    {
        const UnivariatePoly fs = f2.at_w(w_s);
        if (fs.degree() >= 1) center_roots = roots(fs);
    }

    const int steps_per_turn = 96;
    for (std::size_t c = 0; c < mono.cycles.size(); ++c) {
        const int p = mono.orders[c];
        BranchChart chart;
        chart.kind = p == 1 ? ChartKind::Regular : ChartKind::Puiseux;
        chart.p = p;
        const double rho_t = std::pow(rho_w, 1.0 / p);
        chart.epsilon = rho_t;

        // the w-loop traversed p times closes the cycle in the t-plane
        std::vector<Complex> fiber = mono.base_roots;
        const std::size_t track_index = static_cast<std::size_t>(mono.cycles[c][0]);
        Complex prev_w = w_s + rho_w;
        const int total = steps_per_turn * p;
        std::vector<std::pair<double, Complex>> angle_root;
        angle_root.emplace_back(0.0, fiber[track_index]);
        for (int i = 1; i <= total; ++i) {
            const double th = kTwoPi * i / steps_per_turn;
            const Complex wb = w_s + rho_w * Complex{std::cos(th), std::sin(th)};
            fiber = step_track(f2, fiber, prev_w, wb, 0, TrackOptions{});
            prev_w = wb;
            angle_root.emplace_back(th, fiber[track_index]);
        }
        for (const auto& [th, zr] : angle_root) {
            const Complex t = rho_t * Complex{std::cos(th / p), std::sin(th / p)};
            const Complex w = w_s + rho_w * Complex{std::cos(th), std::sin(th)};
            chart.params.push_back(t);
            chart.points.push_back(C2{zr, w});
            chart.residual = std::max(chart.residual, std::abs(f2.eval(zr, w)) / scale);
        }

        // radial samples toward the singular point at eight loop angles
        for (int q = 0; q < 8; ++q) {
            const int i = q * total / 8;
            const double th = kTwoPi * i / steps_per_turn;
            Complex cur = angle_root[static_cast<std::size_t>(i)].second;
            Complex wa = w_s + rho_w * Complex{std::cos(th), std::sin(th)};
            std::vector<Complex> full = fiber_roots(f2, wa);
            std::size_t nearest = 0;
            for (std::size_t j = 0; j < full.size(); ++j)
                if (std::abs(full[j] - cur) < std::abs(full[nearest] - cur)) nearest = j;
            for (const double frac : {0.75, 0.5, 0.3, 0.15}) {
                const Complex wb = w_s + frac * rho_w * Complex{std::cos(th), std::sin(th)};
                full = step_track(f2, full, wa, wb, 0, TrackOptions{});
                wa = wb;
                cur = full[nearest];
                const Complex t = std::pow(frac, 1.0 / p) * rho_t *
                                  Complex{std::cos(th / p), std::sin(th / p)};
                chart.params.push_back(t);
                chart.points.push_back(C2{cur, wb});
                chart.residual = std::max(chart.residual, std::abs(f2.eval(cur, wb)) / scale);
            }
            if (q == 0) {
                if (!center_roots.empty()) {
                    std::size_t ci = 0;
                    for (std::size_t j = 0; j < center_roots.size(); ++j)
                        if (std::abs(center_roots[j] - cur) < std::abs(center_roots[ci] - cur))
                            ci = j;
                    chart.base_point = C2{center_roots[ci], w_s};
                    chart.params.push_back(Complex{});
                    chart.points.push_back(chart.base_point);
                } else {
                    chart.base_point = C2{cur, w_s};
                }
            }
        }
        for (const auto& pt : chart.points)
            chart.delta = std::max(chart.delta, std::abs(pt.z - chart.base_point.z));
        charts.push_back(std::move(chart));
    }
    return charts;
}

}  // namespace

C2 BranchChart::nearest_point(Complex t) const {
    if (points.empty()) throw Error(Err::BadInput, "BranchChart: no samples");
    std::size_t best = 0;
    for (std::size_t i = 1; i < params.size(); ++i)
        if (std::abs(params[i] - t) < std::abs(params[best] - t)) best = i;
    return points[best];
}

std::vector<BranchChart> build_atlas(const BivariatePoly& f2, const Ball2& region) {
    if (f2.is_zero() || (f2.degz() <= 0 && f2.degw() <= 0))
        throw Error(Err::NotACurve, "build_atlas: constant function");

    std::vector<BranchChart> atlas;
    const Complex wc = region.center.w;
    const double r = region.radius;

    // vertical components {w = w*} as swapped regular charts over z
    BivariatePoly work = f2;
    for (const auto& wv : vertical_fiber_values(f2)) {
        int mult = 0;
        work = deflate_vertical(work, wv, &mult);
        if (std::abs(wv - wc) > r) continue;
        BranchChart chart;
        chart.kind = ChartKind::Regular;
        chart.swapped = true;
        chart.base_point = C2{region.center.z, wv};
        chart.epsilon = r;
        const int G = 9;
        for (int a = 0; a < G; ++a)
            for (int b = 0; b < G; ++b) {
                const Complex t{r * (2.0 * a / (G - 1) - 1.0), r * (2.0 * b / (G - 1) - 1.0)};
                if (std::abs(t) > r) continue;
                chart.params.push_back(t);
                chart.points.push_back(C2{region.center.z + t, wv});
            }
        chart.delta = r;
        for (const auto& pt : chart.points)
            chart.residual = std::max(
                chart.residual, std::abs(f2.eval(pt)) / std::max(f2.max_abs_coeff(), 1e-300));
        atlas.push_back(std::move(chart));
    }

    if (work.degz() < 1) return atlas;  // only vertical structure remains

    const std::vector<Complex> bad = discriminant_points(work);
    std::vector<Complex> bad_near;
    for (const auto& b : bad)
        if (std::abs(b - wc) < 1.6 * r) bad_near.push_back(b);

    if (bad_near.empty()) {
        // one global graph chart per branch
        for (const auto& z0 : fiber_roots(work, wc))
            atlas.push_back(make_regular_chart(work, wc, z0, r));
        return atlas;
    }

    for (const auto& ws : bad_near) {
        if (std::abs(ws - wc) > r) continue;
        double nearest_other = 2.0 * r;
        for (const auto& other : bad_near)
            if (other != ws) nearest_other = std::min(nearest_other, std::abs(other - ws));
        const double loop = std::min(0.5 * nearest_other, 0.4 * r);
        if (loop < 1e-9) continue;
        for (auto& ch : make_puiseux_charts(work, ws, loop)) atlas.push_back(std::move(ch));
    }

    // regular chart seeds on a grid, radius limited by the bad set and shrunk
    // by the 1/8 covering margin
    const int S = 5;
    for (int a = 0; a < S; ++a)
        for (int b = 0; b < S; ++b) {
            const Complex seed =
                wc + Complex{r * (2.0 * a / (S - 1) - 1.0), r * (2.0 * b / (S - 1) - 1.0)};
            if (std::abs(seed - wc) > r) continue;
            double dist = std::numeric_limits<double>::infinity();
            for (const auto& bp : bad_near) dist = std::min(dist, std::abs(seed - bp));
            const double eps = std::min(0.45 * dist, 0.35 * r) / 8.0;
            if (eps < 1e-8) continue;
            for (const auto& z0 : fiber_roots(work, seed))
                atlas.push_back(make_regular_chart(work, seed, z0, eps));
        }
    return atlas;
}

CrossingCount line_crossing_count(const BivariatePoly& f, const BivariatePoly& g,
                                  const BranchChart& chart, double theta, double xi_lo,
                                  double xi_hi, int n_samples) {
    if (chart.kind != ChartKind::Regular || chart.swapped)
        throw Error(Err::BadInput, "line_crossing_count: needs an unswapped regular chart");
    if (n_samples < 8) n_samples = 8;

    const Complex w0 = chart.base_point.w;
    const Complex z0 = chart.base_point.z;
    const Complex rot{std::cos(-theta), std::sin(-theta)};

    std::vector<Complex> base = fiber_roots(f, w0);
    if (base.empty()) throw Error(Err::BadInput, "line_crossing_count: empty base fiber");
    std::size_t my_index = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (std::abs(base[i] - z0) < std::abs(base[my_index] - z0)) my_index = i;

    // branch values along the real segment, tracked outward from xi = 0
    std::vector<std::pair<double, double>> samples;  // (xi, Im e^{-i theta} g)
    double scale = 0.0;
    for (const double side : {-1.0, 1.0}) {
        std::vector<Complex> fiber = base;
        Complex prev = w0;
        for (int i = 0; i < n_samples; ++i) {
            const double x = (xi_lo + (xi_hi - xi_lo) * i / (n_samples - 1));
            if (side < 0 ? x >= 0.0 : x < 0.0) continue;
            samples.emplace_back(x, 0.0);
        }
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (samples[i].second == 0.0 && (side < 0 ? samples[i].first < 0.0 : samples[i].first >= 0.0))
                order.push_back(i);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return side < 0 ? samples[a].first > samples[b].first
                            : samples[a].first < samples[b].first;
        });
        for (const std::size_t idx : order) {
            const Complex wb = w0 + samples[idx].first;
            fiber = step_track(f, fiber, prev, wb, 0, TrackOptions{});
            prev = wb;
            const Complex val = rot * g.eval(fiber[my_index], wb);
            samples[idx].second = val.imag();
            scale = std::max(scale, std::abs(val));
        }
    }
    std::sort(samples.begin(), samples.end());

    CrossingCount out;
    const double tol = 1e-9 * std::max(scale, 1e-300);
    bool all_small = true;
    for (const auto& [x, v] : samples)
        if (std::abs(v) > tol) all_small = false;
    if (all_small) {
        out.identically_on_line = true;
        return out;
    }
    int prev_sign = 0;
    bool pending_touch = false;
    for (const auto& [x, v] : samples) {
        const int sign = v > tol ? 1 : (v < -tol ? -1 : 0);
        if (sign == 0) {
            if (prev_sign != 0) pending_touch = true;
            continue;
        }
        if (prev_sign != 0 && sign != prev_sign) {
            ++out.crossings;
            pending_touch = false;
        } else if (pending_touch && sign == prev_sign) {
            out.tangential = true;
            pending_touch = false;
        }
        prev_sign = sign;
    }
    return out;
}

BezoutResult bezout_count(const BivariatePoly& f1, const BivariatePoly& f2) {
    BezoutResult res;
    res.degree_product = std::max(f1.total_degree(), 0) * std::max(f2.total_degree(), 0);
    const UnivariatePoly R = resultant_in_w(f1, f2);
    if (R.degree() < 1) return res;  // nonzero constant resultant: no solutions

    std::vector<Complex> ws;
    for (const auto& w : roots(R)) {
        bool dup = false;
        for (const auto& v : ws)
            if (std::abs(w - v) < 1e-6 * (1.0 + std::abs(w))) dup = true;
        if (!dup) ws.push_back(w);
    }
    const double s1 = std::max(f1.max_abs_coeff(), 1e-300);
    const double s2 = std::max(f2.max_abs_coeff(), 1e-300);
    for (const auto& w : ws) {
        const UnivariatePoly p1 = f1.at_w(w);
        const UnivariatePoly p2 = f2.at_w(w);
        const bool dead1 = p1.max_abs_coeff() <= 1e-10 * s1;  // f1 vanishes on the fiber
        const bool dead2 = p2.max_abs_coeff() <= 1e-10 * s2;
        std::vector<Complex> zs;
        if (dead1 && dead2) continue;  // a shared line, not an isolated solution
        if (dead1) {
            if (p2.degree() >= 1) zs = roots(p2);
        } else if (dead2) {
            if (p1.degree() >= 1) zs = roots(p1);
        } else {
            if (p1.degree() < 1 || p2.degree() < 1) continue;
            const auto r2 = roots(p2);
            for (const auto& z : roots(p1)) {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& y : r2) best = std::min(best, std::abs(z - y));
                if (best < 2e-5 * (1.0 + std::abs(z))) zs.push_back(z);
            }
        }
        for (const auto& z : zs) {
            bool dup = false;
            for (const auto& s : res.solutions)
                if (std::abs(s.z - z) < 1e-5 * (1.0 + std::abs(z)) &&
                    std::abs(s.w - w) < 1e-5 * (1.0 + std::abs(w)))
                    dup = true;
            if (!dup) res.solutions.push_back(C2{z, w});
        }
    }
    return res;
}

}  // namespace cb
