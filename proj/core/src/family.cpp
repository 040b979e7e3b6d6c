#include "cb/family.hpp"

#include <cmath>
#include <numbers>

#include "cb/poly.hpp"
#include "cb/rng.hpp"

namespace cb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TestFamilySpec TestFamilySpec::random_trig(int k, double lambda, int N,
                                           std::array<double, 2> omega, std::uint64_t seed) {
    if (k < 0 || N < 1) throw Error(Err::BadInput, "random_trig: need k >= 0 and N >= 1");
    TestFamilySpec spec;
    spec.kind = Kind::TrigDeterminant;
    spec.k = k;
    spec.lambda = lambda;
    spec.N = N;
    spec.omega = omega;
    spec.seed = seed;
    Rng rng(seed);
    const int side = 2 * k + 1;
    spec.c.assign(static_cast<std::size_t>(side), std::vector<Complex>(static_cast<std::size_t>(side)));
    double norm2 = 0.0;
    for (auto& row : spec.c)
        for (auto& cc : row) {
            cc = Complex{rng.gaussian(), rng.gaussian()};
            norm2 += std::norm(cc);
        }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& row : spec.c)
        for (auto& cc : row) cc *= inv;
    spec.validate();
    return spec;
}

void TestFamilySpec::validate() const {
    const int side = 2 * k + 1;
    if (static_cast<int>(c.size()) != side)
        throw Error(Err::BadInput, "TestFamilySpec: coefficient grid size mismatch");
    double norm2 = 0.0;
    for (const auto& row : c) {
        if (static_cast<int>(row.size()) != side)
            throw Error(Err::BadInput, "TestFamilySpec: coefficient grid size mismatch");
        for (const auto& cc : row) norm2 += std::norm(cc);
    }
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw Error(Err::BadInput, "TestFamilySpec: coefficients must sit on the unit sphere");
}

Complex TestFamilySpec::potential(Complex z, Complex w) const {
    Complex acc{};
    for (int m = -k; m <= k; ++m)
        for (int n = -k; n <= k; ++n) {
            const Complex cc = c[static_cast<std::size_t>(m + k)][static_cast<std::size_t>(n + k)];
            if (cc == Complex{}) continue;
            const Complex phase = Complex{0.0, kTwoPi} * (static_cast<double>(m) * z +
                                                          static_cast<double>(n) * w);
            acc += cc * std::exp(phase);
        }
    return acc;
}

ScaledComplex dirichlet_determinant(const TestFamilySpec& spec, const C2& v) {
    if (spec.N < 1) throw Error(Err::BadInput, "dirichlet_determinant: N >= 1");
    ScaledComplex out;
    Complex prev{0.0, 0.0};  // D_{-1}
    Complex cur{1.0, 0.0};   // D_0
    double log_scale = 0.0;
    for (int n = 1; n <= spec.N; ++n) {
        const Complex z = v.z + static_cast<double>(n - 1) * spec.omega[0];
        const Complex w = v.w + static_cast<double>(n - 1) * spec.omega[1];
        const Complex next = spec.lambda * spec.potential(z, w) * cur - prev;
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(cur), std::abs(prev));
        if (mag > 1e150) {
            cur /= mag;
            prev /= mag;
            log_scale += std::log(mag);
        }
    }
    out.mantissa = cur;
    out.log_scale = log_scale;
    return out;
}

double family_doubling(const TestFamilySpec& spec, const C2& v0, double r0, int centers) {
    const Fn2 f = [&spec, &v0, r0](const C2& u) {
        const ScaledComplex d = dirichlet_determinant(spec, v0 + r0 * u);
        // constant log offsets cancel in doubling differences
        return d.mantissa;
    };
    return bernstein_sup_exponent(f, 0.25, centers, spec.seed + 5);
}

double truncation_tail_bound(int N, double r) {
    if (!(r > 0.0 && r < 1.0) || N < 0)
        throw Error(Err::BadInput, "truncation_tail_bound: need 0 < r < 1, N >= 0");
    const double head = std::pow(r, N + 1);
    return head * ((N + 2) * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r));
}

LogRReport verify_example_logR(const std::vector<double>& R_values, double tol) {
    // f1 = z^2 + w on Z = {zw = 0}
    const BivariatePoly f1 = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 1);
    const BivariatePoly f2 = BivariatePoly::monomial(1, 1);
    const double sqrt15 = std::sqrt(15.0);

    LogRReport rep;
    rep.all_pass = true;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const double R : R_values) {
        if (!(R > 0.0 && R < 0.5))
            throw Error(Err::BadInput, "verify_example_logR: need 0 < R < 1/2");
        BernsteinQuery q;
        q.center = C2{Complex{R / 4.0, 0.0}, Complex{}};
        q.R = R;
        q.mu = 0.25;
        const BernsteinReport br = bernstein_trace_exponent(f1, f2, q);

        LogRSample s;
        s.R = R;
        s.B = br.B;
        s.expected_B = std::log(sqrt15 / R);
        s.inner_sup = br.M_inner;
        s.expected_inner = 2.0 * std::log(R / 2.0);
        s.outer_sup = br.M_outer;
        s.expected_outer = std::log(sqrt15 * R / 4.0);
        s.pass = std::abs(s.B - s.expected_B) <= tol &&
                 std::abs(s.inner_sup - s.expected_inner) <= tol &&
                 std::abs(s.outer_sup - s.expected_outer) <= tol;
        rep.max_abs_err = std::max(rep.max_abs_err, std::abs(s.B - s.expected_B));
        rep.all_pass = rep.all_pass && s.pass;
        rep.samples.push_back(s);

        const double x = std::log(1.0 / R);
        sx += x;
        sy += s.B;
        sxx += x * x;
        sxy += x * s.B;
    }
    const double n = static_cast<double>(R_values.size());
    const double denom = n * sxx - sx * sx;
    rep.slope = std::abs(denom) > 1e-12 ? (n * sxy - sx * sy) / denom : 0.0;
    return rep;
}

}  // namespace cb
