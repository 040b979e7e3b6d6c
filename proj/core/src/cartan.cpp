#include "cb/cartan.hpp"

#include <algorithm>
#include <cmath>

#include "cb/rng.hpp"

namespace cb {

namespace {

// Tolerance inflation keeping closed-disk point counts robust under roundoff.
constexpr double kEps = 1e-12;

struct CoverDisk {
    Complex center;
    double radius;
    int points_inside;
};

// Largest point count coverable by one closed disk of radius r. Exact search:
// an optimal disk can be centered at a point or at one of the two circles
// through a pair of points at distance <= 2r.
int max_cover(const std::vector<Complex>& pts, double r, Complex* best_center) {
    int best = 0;
    auto consider = [&](Complex c) {
        int cnt = 0;
        for (const auto& p : pts)
            if (std::abs(p - c) <= r * (1.0 + kEps)) ++cnt;
        if (cnt > best) {
            best = cnt;
            if (best_center) *best_center = c;
        }
    };
    for (const auto& p : pts) consider(p);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Complex mid = 0.5 * (pts[i] + pts[j]);
            const double d = std::abs(pts[j] - pts[i]);
            if (d > 2.0 * r || d == 0.0) continue;
            const double h = std::sqrt(std::max(0.0, r * r - 0.25 * d * d));
            const Complex dir = (pts[j] - pts[i]) / d;
            const Complex perp{-dir.imag(), dir.real()};
            consider(mid + h * perp);
            consider(mid - h * perp);
        }
    return best;
}

// One greedy stage: the maximal rank p such that some disk of radius p*gamma
// holds >= p of the remaining points. Removal of everything inside keeps the
// stage ranks summing to the point count.
CoverDisk select_stage(std::vector<Complex>& pts, double gamma) {
    const int n = static_cast<int>(pts.size());
    for (int p = n; p >= 1; --p) {
        Complex center;
        if (max_cover(pts, p * gamma, &center) >= p) {
            CoverDisk d{center, p * gamma, 0};
            std::vector<Complex> rest;
            rest.reserve(pts.size());
            for (const auto& q : pts) {
                if (std::abs(q - center) <= d.radius * (1.0 + kEps))
                    ++d.points_inside;
                else
                    rest.push_back(q);
            }
            pts = std::move(rest);
            return d;
        }
    }
    // unreachable: p = 1 always succeeds with a disk centered at a point
    CoverDisk d{pts.back(), gamma, 1};
    pts.pop_back();
    return d;
}

// Overlapping disks merge into their enclosing disk; the enclosing radius of
// an overlapping pair never exceeds the radius sum, so the budget is kept.
std::vector<Disk> merge_overlaps(std::vector<Disk> disks) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < disks.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < disks.size() && !changed; ++j) {
                const double d = std::abs(disks[i].center - disks[j].center);
                if (d > disks[i].radius + disks[j].radius) continue;
                Disk merged;
                if (d + disks[j].radius <= disks[i].radius) {
                    merged = disks[i];
                } else if (d + disks[i].radius <= disks[j].radius) {
                    merged = disks[j];
                } else {
                    const double r = 0.5 * (d + disks[i].radius + disks[j].radius);
                    const Complex dir = (disks[j].center - disks[i].center) / d;
                    merged = Disk(disks[i].center + (r - disks[i].radius) * dir, r);
                }
                disks[i] = merged;
                disks.erase(disks.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
            }
    }
    return disks;
}

}  // namespace

double Car1Cover::total_radius() const {
    double s = 0.0;
    for (const auto& d : disks) s += d.radius;
    return s;
}

bool Car1Cover::contains(Complex p) const {
    for (const auto& d : disks)
        if (d.contains(p)) return true;
    return false;
}

void Car1Cover::validate(const std::vector<Complex>& zeros) const {
    if (static_cast<int>(disks.size()) > K)
        throw Error(Err::BadInput, "Car1Cover: disk count exceeds K");
    if (total_radius() >= std::exp(-H))
        throw Error(Err::BadInput, "Car1Cover: radius budget exceeded");
    for (const auto& d : disks) {
        bool has_zero = false;
        for (const auto& z : zeros)
            if (d.contains(z)) {
                has_zero = true;
                break;
            }
        if (!has_zero) throw Error(Err::BadInput, "Car1Cover: disk without a zero");
    }
}

bool Car20Cover::contains(const C2& p) const {
    for (const auto& b : balls)
        if (b.contains(p)) return true;
    return false;
}

void Car20Cover::validate() const {
    if (static_cast<int>(balls.size()) > K)
        throw Error(Err::BadInput, "Car20Cover: ball count exceeds K");
    const double r = std::exp(-H);
    for (const auto& b : balls)
        if (std::abs(b.radius - r) > 1e-12 * r)
            throw Error(Err::BadInput, "Car20Cover: ball radius must equal exp(-H)");
}

std::pair<Car1Cover, double> cartan_cover_1d(const std::vector<Complex>& zeros, double H) {
    if (zeros.empty()) throw Error(Err::BadInput, "cartan_cover_1d: need at least one zero");
    if (H < 1.0) throw Error(Err::BadInput, "cartan_cover_1d: need H >= 1");
    const std::size_t n = zeros.size();
    const double budget = std::exp(-H);
    // total radius H'/(n) per rank unit, doubled disks, merge head-room of 2x
    const double gamma = budget / (4.0 * static_cast<double>(n));

    std::vector<Complex> remaining = zeros;
    std::vector<Disk> disks;
    while (!remaining.empty()) {
        const CoverDisk d = select_stage(remaining, gamma);
        disks.emplace_back(d.center, 2.0 * d.radius * (1.0 + 1e-9));
    }
    disks = merge_overlaps(std::move(disks));

    Car1Cover cover;
    cover.disks = std::move(disks);
    cover.H = H;
    cover.K = static_cast<int>(cover.disks.size());
    cover.validate(zeros);

    const double guaranteed_log_lb =
        static_cast<double>(n) * std::log(budget / (4.0 * std::exp(1.0) * static_cast<double>(n)));
    return {std::move(cover), guaranteed_log_lb};
}

std::pair<Car1Cover, MinModulusCertificate> cartan_cover_poly(const UnivariatePoly& p,
                                                              const Disk& domain, double H) {
    if (p.is_zero()) throw Error(Err::AllZero, "cartan_cover_poly: zero polynomial");
    if (H < 1.0) throw Error(Err::BadInput, "cartan_cover_poly: need H >= 1");
    const double R = domain.radius;
    const double triple = 3.0 * R;

    std::vector<Complex> near, far;
    if (p.degree() >= 1) {
        for (const auto& z : roots(p)) {
            if (std::abs(z - domain.center) <= triple)
                near.push_back(z);
            else
                far.push_back(z);
        }
    }

    Car1Cover cover;
    double product_lb = 0.0;  // log of the product over near zeros
    if (!near.empty()) {
        auto [c, lb] = cartan_cover_1d(near, H);
        cover = std::move(c);
        product_lb = lb;
    } else {
        cover.H = H;
        cover.K = 0;
    }

    // cofactor h = lead * prod over far zeros: nonvanishing on D(c, 3R).
    // Harnack at r = R with outer radius 3R gives
    //   log|h(z)| >= 2 log|h(center)| - M_ub  on the domain,
    // where the sup bound M_ub = log|lead| + sum log(|a - c| + 3R) is exact.
    double log_h_center = std::log(std::abs(p.lead()));
    double M_ub = log_h_center;
    for (const auto& a : far) {
        log_h_center += std::log(std::abs(domain.center - a));
        M_ub += std::log(std::abs(a - domain.center) + triple);
    }
    const double cofactor_lb = 2.0 * log_h_center - M_ub;

    MinModulusCertificate cert;
    cert.lower_bound_log = product_lb + cofactor_lb;
    return {std::move(cover), cert};
}

bool cover_membership(const Car1Cover& cover, Complex p) { return cover.contains(p); }
bool cover_membership(const Car20Cover& cover, const C2& p) { return cover.contains(p); }

MinModulusCertificate validate_certificate(const UnivariatePoly& p, const Disk& domain,
                                           const Car1Cover& cover, double lower_bound_log,
                                           int n_samples, std::uint64_t seed) {
    MinModulusCertificate cert;
    cert.lower_bound_log = lower_bound_log;
    cert.worst_value_log = std::numeric_limits<double>::infinity();
    Rng rng(seed);
    int produced = 0;
    int guard = 0;
    while (produced < n_samples && guard < 100 * n_samples) {
        ++guard;
        Complex z;
        if (produced % 3 == 0 && !cover.disks.empty()) {
            // ring samples hugging a cover disk, where the bound is tightest
            const auto& d = cover.disks[static_cast<std::size_t>(rng.next() % cover.disks.size())];
            z = d.center + d.radius * (1.0 + 1e-9 + 0.2 * rng.uniform()) * rng.unit_complex();
            if (!domain.contains(z)) continue;
        } else {
            z = domain.center + domain.radius * rng.in_unit_disk();
        }
        if (cover.contains(z)) continue;
        ++produced;
        const double a = std::abs(p.eval(z));
        const double v = a > 0.0 ? std::log(a) : kLogZero;
        if (v < cert.worst_value_log) {
            cert.worst_value_log = v;
            cert.worst_point = z;
        }
        if (v < lower_bound_log) ++cert.violations;
    }
    cert.sample_count = produced;
    return cert;
}

}  // namespace cb
