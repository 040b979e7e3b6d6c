#include "cb/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

// ---------------------------------------------------------------------------
// UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!is_finite(c)) throw std::invalid_argument("UnivariatePoly: non-finite coefficient");
    trim();
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::monomial(int degree, Complex c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<Complex> cs(static_cast<std::size_t>(degree) + 1, Complex{});
    cs.back() = c;
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly UnivariatePoly::from_roots(const std::vector<Complex>& roots, Complex lead) {
    std::vector<Complex> cs{lead};
    for (const auto& r : roots) {
        cs.push_back(Complex{});
        for (std::size_t j = cs.size() - 1; j > 0; --j) cs[j] = cs[j - 1] - r * cs[j];
        cs[0] = -r * cs[0];
    }
    return UnivariatePoly(std::move(cs));
}

Complex UnivariatePoly::eval(Complex z) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double UnivariatePoly::eval_abs_scale(Complex z) const {
    double acc = 0.0;
    const double az = std::abs(z);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * az + std::abs(*it);
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return UnivariatePoly();
    std::vector<Complex> cs(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        cs[j - 1] = static_cast<double>(j) * coeffs_[j];
    return UnivariatePoly(std::move(cs));
}

double UnivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Complex> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{});
    for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Complex> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{});
    for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = a.coeff(static_cast<int>(j)) - b.coeff(static_cast<int>(j));
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly();
    std::vector<Complex> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly operator*(Complex s, const UnivariatePoly& a) {
    std::vector<Complex> cs = a.coeffs_;
    for (auto& c : cs) c *= s;
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly UnivariatePoly::compose_affine(Complex a, Complex b) const {
    // Horner in (a + b t).
    UnivariatePoly acc;
    const UnivariatePoly lin({a, b});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + UnivariatePoly::constant(*it);
    return acc;
}

UnivariatePoly UnivariatePoly::deflate(Complex root) const {
    if (degree() < 1) return UnivariatePoly();
    std::vector<Complex> q(coeffs_.size() - 1);
    Complex carry = coeffs_.back();
    for (int j = degree() - 1; j >= 0; --j) {
        q[static_cast<std::size_t>(j)] = carry;
        carry = coeffs_[static_cast<std::size_t>(j)] + root * carry;
    }
    return UnivariatePoly(std::move(q));
}

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly::BivariatePoly(std::vector<std::vector<Complex>> grid) : grid_(std::move(grid)) {
    std::size_t cols = 0;
    for (auto& row : grid_) cols = std::max(cols, row.size());
    for (auto& row : grid_) {
        row.resize(cols, Complex{});
        for (const auto& c : row)
            if (!is_finite(c)) throw std::invalid_argument("BivariatePoly: non-finite coefficient");
    }
    trim();
}

void BivariatePoly::trim() {
    auto row_zero = [](const std::vector<Complex>& r) {
        for (const auto& c : r)
            if (c != Complex{}) return false;
        return true;
    };
    while (!grid_.empty() && row_zero(grid_.back())) grid_.pop_back();
    if (grid_.empty()) return;
    std::size_t cols = 0;
    for (const auto& row : grid_)
        for (std::size_t j = row.size(); j > cols; --j)
            if (row[j - 1] != Complex{}) {
                cols = j;
                break;
            }
    for (auto& row : grid_) row.resize(cols);
}

BivariatePoly BivariatePoly::constant(Complex c) {
    return BivariatePoly({{c}});
}

BivariatePoly BivariatePoly::monomial(int i, int j, Complex c) {
    std::vector<std::vector<Complex>> g(static_cast<std::size_t>(i) + 1,
                                        std::vector<Complex>(static_cast<std::size_t>(j) + 1));
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
    return BivariatePoly(std::move(g));
}

BivariatePoly BivariatePoly::from_univariate_z(const UnivariatePoly& p) {
    std::vector<std::vector<Complex>> g;
    for (const auto& c : p.coeffs()) g.push_back({c});
    return BivariatePoly(std::move(g));
}

int BivariatePoly::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < grid_.size(); ++i)
        for (std::size_t j = 0; j < grid_[i].size(); ++j)
            if (grid_[i][j] != Complex{}) d = std::max(d, static_cast<int>(i + j));
    return d;
}

Complex BivariatePoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(grid_.size())) return {};
    const auto& row = grid_[static_cast<std::size_t>(i)];
    if (j >= static_cast<int>(row.size())) return {};
    return row[static_cast<std::size_t>(j)];
}

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& row : grid_)
        for (const auto& c : row) m = std::max(m, std::abs(c));
    return m;
}

double BivariatePoly::coeff_abs_sum() const {
    double s = 0.0;
    for (const auto& row : grid_)
        for (const auto& c : row) s += std::abs(c);
    return s;
}

Complex BivariatePoly::eval(Complex z, Complex w) const {
    Complex acc{};
    for (auto it = grid_.rbegin(); it != grid_.rend(); ++it) {
        Complex rowv{};
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) rowv = rowv * w + *jt;
        acc = acc * z + rowv;
    }
    return acc;
}

BivariatePoly BivariatePoly::dz() const {
    if (grid_.size() <= 1) return BivariatePoly();
    std::vector<std::vector<Complex>> g(grid_.begin() + 1, grid_.end());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (auto& c : g[i]) c *= static_cast<double>(i + 1);
    return BivariatePoly(std::move(g));
}

BivariatePoly BivariatePoly::dw() const {
    if (grid_.empty()) return BivariatePoly();
    std::vector<std::vector<Complex>> g(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (grid_[i].size() <= 1) continue;
        g[i].assign(grid_[i].begin() + 1, grid_[i].end());
        for (std::size_t j = 0; j < g[i].size(); ++j) g[i][j] *= static_cast<double>(j + 1);
    }
    return BivariatePoly(std::move(g));
}

UnivariatePoly BivariatePoly::coeff_in_w(int i) const {
    if (i < 0 || i >= static_cast<int>(grid_.size())) return UnivariatePoly();
    return UnivariatePoly(grid_[static_cast<std::size_t>(i)]);
}

UnivariatePoly BivariatePoly::at_w(Complex w0) const {
    std::vector<Complex> cs(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        Complex acc{};
        for (auto jt = grid_[i].rbegin(); jt != grid_[i].rend(); ++jt) acc = acc * w0 + *jt;
        cs[i] = acc;
    }
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly BivariatePoly::at_z(Complex z0) const {
    return swapped().at_w(z0);
}

BivariatePoly BivariatePoly::swapped() const {
    if (grid_.empty()) return BivariatePoly();
    std::vector<std::vector<Complex>> g(grid_[0].size(), std::vector<Complex>(grid_.size()));
    for (std::size_t i = 0; i < grid_.size(); ++i)
        for (std::size_t j = 0; j < grid_[i].size(); ++j) g[j][i] = grid_[i][j];
    return BivariatePoly(std::move(g));
}

UnivariatePoly BivariatePoly::restrict_to_line(const C2& v0, const C2& e) const {
    // Build (v0.z + t e.z)^i and (v0.w + t e.w)^j incrementally.
    const int dz_ = degz(), dw_ = degw();
    if (dz_ < 0) return UnivariatePoly();
    std::vector<UnivariatePoly> zp(static_cast<std::size_t>(dz_) + 1);
    std::vector<UnivariatePoly> wp(static_cast<std::size_t>(dw_) + 1);
    zp[0] = UnivariatePoly::constant(1.0);
    wp[0] = UnivariatePoly::constant(1.0);
    const UnivariatePoly lz({v0.z, e.z}), lw({v0.w, e.w});
    for (int i = 1; i <= dz_; ++i) zp[static_cast<std::size_t>(i)] = zp[static_cast<std::size_t>(i - 1)] * lz;
    for (int j = 1; j <= dw_; ++j) wp[static_cast<std::size_t>(j)] = wp[static_cast<std::size_t>(j - 1)] * lw;
    UnivariatePoly acc;
    for (int i = 0; i <= dz_; ++i)
        for (int j = 0; j <= dw_; ++j) {
            const Complex c = coeff(i, j);
            if (c == Complex{}) continue;
            acc = acc + c * (zp[static_cast<std::size_t>(i)] * wp[static_cast<std::size_t>(j)]);
        }
    return acc;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    std::vector<std::vector<Complex>> g(
        std::max(a.grid_.size(), b.grid_.size()),
        std::vector<Complex>(std::max(a.degw() + 1, b.degw() + 1) > 0
                                 ? static_cast<std::size_t>(std::max(a.degw() + 1, b.degw() + 1))
                                 : 0));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            g[i][j] = a.coeff(static_cast<int>(i), static_cast<int>(j)) +
                      b.coeff(static_cast<int>(i), static_cast<int>(j));
    return BivariatePoly(std::move(g));
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    return a + (Complex{-1.0, 0.0}) * b;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return BivariatePoly();
    std::vector<std::vector<Complex>> g(
        static_cast<std::size_t>(a.degz() + b.degz()) + 1,
        std::vector<Complex>(static_cast<std::size_t>(a.degw() + b.degw()) + 1));
    for (int i1 = 0; i1 <= a.degz(); ++i1)
        for (int j1 = 0; j1 <= a.degw(); ++j1) {
            const Complex c1 = a.coeff(i1, j1);
            if (c1 == Complex{}) continue;
            for (int i2 = 0; i2 <= b.degz(); ++i2)
                for (int j2 = 0; j2 <= b.degw(); ++j2)
                    g[static_cast<std::size_t>(i1 + i2)][static_cast<std::size_t>(j1 + j2)] +=
                        c1 * b.coeff(i2, j2);
        }
    return BivariatePoly(std::move(g));
}

BivariatePoly operator*(Complex s, const BivariatePoly& a) {
    auto g = a.grid_;
    for (auto& row : g)
        for (auto& c : row) c *= s;
    return BivariatePoly(std::move(g));
}

// ---------------------------------------------------------------------------
// Root finding

namespace {

// Residual acceptance: |p(r)| <= tol * max|c| * max(1,|r|)^deg.
bool residual_ok(const UnivariatePoly& p, Complex r, double tol) {
    const double scale = p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(r)), p.degree());
    return std::abs(p.eval(r)) <= tol * scale;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

bool aberth(const std::vector<Complex>& monic, std::vector<Complex>& zs, int max_iter) {
    const int n = static_cast<int>(monic.size()) - 1;
    UnivariatePoly p(monic);
    UnivariatePoly dp = p.derivative();
    std::vector<bool> frozen(static_cast<std::size_t>(n), false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            if (frozen[static_cast<std::size_t>(k)]) continue;
            Complex zk = zs[static_cast<std::size_t>(k)];
            const Complex pv = p.eval(zk);
            Complex dv = dp.eval(zk);
            if (dv == Complex{}) dv = Complex{1e-300, 0.0};
            const Complex newton = pv / dv;
            Complex sum{};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex diff = zk - zs[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Complex{1e-300, 0.0};
                sum += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * sum;
            const Complex step = (std::abs(denom) > 1e-12) ? newton / denom : newton;
            zs[static_cast<std::size_t>(k)] = zk - step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(zk)))
                frozen[static_cast<std::size_t>(k)] = true;
            else
                all_done = false;
        }
        if (all_done) return true;
    }
    return false;
}

// Clusters collapse to their centroid; for a genuine multiple root the
// centroid is far more accurate than any single member.
std::vector<Complex> collapse_clusters(std::vector<Complex> rs, double cluster_radius) {
    const std::size_t n = rs.size();
    std::vector<int> group(n, -1);
    int ng = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        group[i] = ng;
        // breadth-first over the proximity graph
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (group[b] >= 0) continue;
                const double lim = cluster_radius * (1.0 + std::abs(rs[a]));
                if (std::abs(rs[a] - rs[b]) <= lim) {
                    group[b] = ng;
                    stack.push_back(b);
                }
            }
        }
        ++ng;
    }
    std::vector<Complex> centroid(static_cast<std::size_t>(ng), Complex{});
    std::vector<int> count(static_cast<std::size_t>(ng), 0);
    for (std::size_t i = 0; i < n; ++i) {
        centroid[static_cast<std::size_t>(group[i])] += rs[i];
        ++count[static_cast<std::size_t>(group[i])];
    }
    for (std::size_t g = 0; g < centroid.size(); ++g) centroid[g] /= static_cast<double>(count[g]);
    for (std::size_t i = 0; i < n; ++i) rs[i] = centroid[static_cast<std::size_t>(group[i])];
    return rs;
}

}  // namespace

std::vector<Complex> roots(const UnivariatePoly& p, double tol) {
    RootOptions opts;
    opts.tol = tol;
    return roots(p, opts);
}

std::vector<Complex> roots(const UnivariatePoly& p, const RootOptions& opts) {
    if (p.degree() < 1) throw Error(Err::BadInput, "roots: degree must be >= 1");
    // roots at the origin come off directly
    std::vector<Complex> cs = p.coeffs();
    std::size_t zero_mult = 0;
    while (zero_mult < cs.size() - 1 && cs[zero_mult] == Complex{}) ++zero_mult;
    cs.erase(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(zero_mult));
    std::vector<Complex> out(zero_mult, Complex{});

    const int n = static_cast<int>(cs.size()) - 1;
    if (n == 0) return out;
    std::vector<Complex> monic(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) monic[i] = cs[i] / cs.back();

    std::vector<Complex> zs;
    if (n == 1) {
        zs = {-monic[0]};
    } else {
        // perturbed-circle initial guesses around the root centroid
        const Complex beta = -monic[static_cast<std::size_t>(n) - 1] / static_cast<double>(n);
        double maxc = 0.0;
        for (int i = 0; i < n; ++i) maxc = std::max(maxc, std::abs(monic[static_cast<std::size_t>(i)]));
        const double r0 = 1.0 + maxc;
        zs.resize(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double a = kTwoPi * (static_cast<double>(k) + 0.35) / n + 0.5;
            zs[static_cast<std::size_t>(k)] = beta + 0.7 * r0 * Complex{std::cos(a), std::sin(a)};
        }
        const bool converged = aberth(monic, zs, opts.max_iterations);
        bool ok = converged;
        if (ok) {
            UnivariatePoly pm(monic);
            for (const auto& r : zs) ok = ok && residual_ok(pm, r, std::max(opts.tol, 1e-9));
        }
        if (!ok) zs = companion_roots(monic);
    }

    zs = collapse_clusters(std::move(zs), opts.cluster_radius);
    UnivariatePoly pm(monic);
    for (const auto& r : zs) {
        if (!residual_ok(pm, r, opts.tol * 1e3 + 1e-7))
            throw Error(Err::NoConvergence, "roots: residual test failed");
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Circle extrema

namespace {

double golden_refine(const std::function<double(double)>& f, double lo, double hi, bool maximize) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10) {
        const bool pick_left = maximize ? (fc > fd) : (fc < fd);
        if (pick_left) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

CircleExtrema circle_extrema_fn(const std::function<Complex(Complex)>& f, Complex center,
                                double radius, int n_samples) {
    if (radius <= 0.0) throw Error(Err::BadInput, "circle_extrema: radius must be > 0");
    if (n_samples < 8) n_samples = 8;
    auto at_angle = [&](double t) { return f(center + radius * Complex{std::cos(t), std::sin(t)}); };
    auto log_abs = [&](double t) {
        const double a = std::abs(at_angle(t));
        return a > 0.0 ? std::log(a) : kLogZero;
    };

    CircleExtrema out;
    double best_max = kLogZero, best_min = std::numeric_limits<double>::infinity();
    double arg_max = 0.0, arg_min = 0.0;
    bool hit_zero = false;
    const double step = kTwoPi / n_samples;
    for (int i = 0; i < n_samples; ++i) {
        const double t = step * i;
        const double v = log_abs(t);
        if (v == kLogZero) hit_zero = true;
        if (v > best_max) {
            best_max = v;
            arg_max = t;
        }
        if (v < best_min) {
            best_min = v;
            arg_min = t;
        }
    }
    const double tmax = golden_refine(log_abs, arg_max - step, arg_max + step, true);
    const double vmax = log_abs(tmax);
    out.max_log_abs = std::max(vmax, best_max);
    out.argmax_angle = vmax >= best_max ? std::fmod(tmax + kTwoPi, kTwoPi) : arg_max;
    if (hit_zero) {
        out.min_log_abs = kLogZero;
        out.argmin_angle = arg_min;
        out.minus_infinity = true;
    } else {
        const double tmin = golden_refine(log_abs, arg_min - step, arg_min + step, false);
        const double vmin = log_abs(tmin);
        out.min_log_abs = std::min(vmin, best_min);
        out.argmin_angle = vmin <= best_min ? std::fmod(tmin + kTwoPi, kTwoPi) : arg_min;
        out.minus_infinity = out.min_log_abs == kLogZero;
    }
    return out;
}

CircleExtrema circle_extrema(const UnivariatePoly& p, Complex center, double radius,
                             int n_samples) {
    if (n_samples <= 0) n_samples = 4 * std::max(0, p.degree()) + 64;
    return circle_extrema_fn([&p](Complex z) { return p.eval(z); }, center, radius, n_samples);
}

JensenCount jensen_zero_count(const UnivariatePoly& p, Complex center, double r, double R) {
    if (!(0.0 < r && r < R)) throw Error(Err::BadInput, "jensen_zero_count: need 0 < r < R");
    if (p.degree() < 0) throw Error(Err::AllZero, "jensen_zero_count: zero polynomial");
    JensenCount out;
    if (p.degree() >= 1) {
        for (const auto& root : roots(p)) {
            if (std::abs(root - center) <= r) ++out.count;
        }
    }
    const Complex pc = p.eval(center);
    if (pc == Complex{}) return out;  // CenterIsZero: bound undefined, count still valid
    const double M = circle_extrema(p, center, R).max_log_abs;
    out.jensen_bound = (M - std::log(std::abs(pc))) / std::log(R / r);
    return out;
}

}  // namespace cb
