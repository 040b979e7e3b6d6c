#include <cmath>

#include "cb/bernstein.hpp"
#include "cb/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using cb::BivariatePoly;
using cb::Complex;
using cb::UnivariatePoly;

namespace {

// degree-60 proxy for exp(-N + N z); the tail below |z| <= 1 is ~1/61!
UnivariatePoly exp_taylor_proxy(double N, int degree = 60) {
    std::vector<Complex> cs(static_cast<std::size_t>(degree) + 1);
    double log_term = -N;  // log of N^k/k! e^-N
    cs[0] = std::exp(log_term);
    for (int k = 1; k <= degree; ++k) {
        log_term += std::log(N) - std::log(static_cast<double>(k));
        cs[static_cast<std::size_t>(k)] = std::exp(log_term);
    }
    return UnivariatePoly(cs);
}

BivariatePoly univar(const UnivariatePoly& p) { return BivariatePoly::from_univariate_z(p); }

}  // namespace

TEST_SUITE_BEGIN("bernstein");

TEST_CASE("ball maximum of the coordinate function") {
    const BivariatePoly f = BivariatePoly::monomial(1, 0);  // z
    const double m = cb::max_log_ball(cb::as_fn(f), cb::C2{}, 1.0, 2048);
    CHECK(m == doctest::Approx(0.0).epsilon(1e-4));
}

TEST_CASE("ball maximum of z*w matches the constrained optimum") {
    const BivariatePoly f = BivariatePoly::monomial(1, 1);
    const double m = cb::max_log_ball(cb::as_fn(f), cb::C2{}, 1.0, 4096);
    CHECK(m == doctest::Approx(std::log(0.5)).epsilon(2e-4));
}

TEST_CASE("ball maximum of z^2 + w near the curve example center") {
    const double R = 0.1;
    const BivariatePoly f = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 1);
    const cb::C2 center{Complex{R / 4.0, 0.0}, Complex{}};
    // the optimum sits on the boundary sphere; a dense polar scan is the oracle
    double oracle = -1e300;
    for (int i = 0; i <= 400; ++i) {
        const double a = R * i / 400.0;  // |w| component
        const double zr = std::sqrt(std::max(0.0, R * R - a * a));
        oracle = std::max(oracle, std::log((R / 4.0 + zr) * (R / 4.0 + zr) + a));
    }
    const double m = cb::max_log_ball(cb::as_fn(f), center, R, 8192);
    CHECK(m == doctest::Approx(oracle).epsilon(5e-4));
}

TEST_CASE("doubling of a pure power is degree times log(1/mu)") {
    const BivariatePoly f = univar(UnivariatePoly::monomial(3));
    cb::BernsteinQuery q;
    q.center = cb::C2{};
    q.R = 0.7;
    q.mu = 0.25;
    q.budget = 4096;
    const auto rep = cb::bernstein_exponent(f, q);
    CHECK(rep.B == doctest::Approx(3.0 * std::log(4.0)).epsilon(1e-3));
}

TEST_CASE("doubling of the exponential proxy matches the closed form") {
    const double N = 8.0;
    const BivariatePoly f = univar(exp_taylor_proxy(N));
    cb::BernsteinQuery q;
    q.center = cb::C2{};
    q.R = 0.125;
    q.mu = 0.25;
    q.budget = 8192;
    const auto rep = cb::bernstein_exponent(f, q);
    // M(0,r) = N(r-1): B = N (1/8 - 1/32) = 3N/32 = 0.75
    CHECK(rep.B == doctest::Approx(0.75).epsilon(1.4e-3));
}

TEST_CASE("identically zero input reports zero exponent") {
    cb::BernsteinQuery q;
    const auto rep = cb::bernstein_exponent(BivariatePoly::zero(), q);
    CHECK(rep.is_identically_zero);
    CHECK(rep.B == 0.0);
}

TEST_CASE("exponent is invariant under scaling and nonnegative") {
    cb::Rng rng(2020);
    for (int trial = 0; trial < 6; ++trial) {
        const BivariatePoly f = cbt::random_bipoly(rng, 2, 2);
        cb::BernsteinQuery q;
        q.center = cb::C2{0.1 * rng.in_unit_disk(), 0.1 * rng.in_unit_disk()};
        q.R = 0.3;
        q.mu = 0.25;
        q.budget = 2048;
        const auto rep = cb::bernstein_exponent(f, q);
        CHECK(rep.B >= -2e-3);
        const auto rep2 = cb::bernstein_exponent(Complex{37.5, -12.0} * f, q);
        CHECK(rep2.B == doctest::Approx(rep.B).epsilon(1e-6));
    }
}

TEST_CASE("chain rule over nested radii") {
    cb::Rng rng(2121);
    const BivariatePoly f = cbt::random_bipoly(rng, 2, 2);
    cb::BernsteinQuery q;
    q.R = 0.4;
    q.budget = 16384;
    const double mu1 = 0.5, mu2 = 0.5;
    q.mu = mu1 * mu2;
    const double lhs = cb::bernstein_exponent(f, q).B;
    q.mu = mu2;
    const double t1 = cb::bernstein_exponent(f, q).B;
    cb::BernsteinQuery q2 = q;
    q2.R = mu2 * q.R;
    q2.mu = mu1;
    const double t2 = cb::bernstein_exponent(f, q2).B;
    CHECK(lhs == doctest::Approx(t1 + t2).epsilon(5e-3));
}

TEST_CASE("classical polynomial doubling bound") {
    cb::Rng rng(2222);
    for (int trial = 0; trial < 8; ++trial) {
        const int deg = 1 + static_cast<int>(rng.next() % 5);
        const UnivariatePoly p = cbt::random_poly(rng, deg, 0.1);
        cb::BernsteinQuery q;
        q.center = cb::C2{0.2 * rng.in_unit_disk(), Complex{}};
        q.R = 0.1 + 0.5 * rng.uniform();
        q.mu = 0.25;
        q.budget = 2048;
        const auto rep = cb::bernstein_exponent(univar(p), q);
        CHECK(rep.B <= deg * std::log(1.0 / q.mu) + 1e-3);
    }
}

TEST_CASE("trace suprema reproduce the singular-point example") {
    const BivariatePoly f1 = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 1);
    const BivariatePoly f2 = BivariatePoly::monomial(1, 1);  // zw
    const double R = 0.1;
    cb::BernsteinQuery q;
    q.center = cb::C2{Complex{R / 4.0, 0.0}, Complex{}};
    q.R = R;
    q.mu = 0.25;
    const auto rep = cb::bernstein_trace_exponent(f1, f2, q);
    CHECK(rep.M_inner == doctest::Approx(2.0 * std::log(R / 2.0)).epsilon(1e-3));
    CHECK(rep.M_outer == doctest::Approx(std::log(std::sqrt(15.0) * R / 4.0)).epsilon(1e-3));
    CHECK(rep.B == doctest::Approx(std::log(std::sqrt(15.0) / R)).epsilon(1e-3));
}

TEST_CASE("trace exponents grow like log(1/R) at the singular point") {
    const BivariatePoly f1 = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 1);
    const BivariatePoly f2 = BivariatePoly::monomial(1, 1);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const double R : {0.05, 0.1, 0.2}) {
        cb::BernsteinQuery q;
        q.center = cb::C2{Complex{R / 4.0, 0.0}, Complex{}};
        q.R = R;
        q.mu = 0.25;
        const double B = cb::bernstein_trace_exponent(f1, f2, q).B;
        const double x = std::log(1.0 / R);
        sx += x;
        sy += B;
        sxx += x * x;
        sxy += x * B;
    }
    const double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);
    CHECK(slope == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("empty trace intersection raises") {
    const BivariatePoly f1 = BivariatePoly::monomial(1, 0);
    const BivariatePoly f2 = BivariatePoly::monomial(1, 0) + BivariatePoly::constant(5.0);
    cb::BernsteinQuery q;
    q.center = cb::C2{};
    q.R = 0.25;
    q.mu = 0.25;
    CHECK_THROWS_AS(cb::bernstein_trace_exponent(f1, f2, q), cb::Error);
}

TEST_CASE("harnack verdict on hand functions") {
    // constant: both sides collapse to zero
    const auto vc = cb::check_harnack([](Complex) { return Complex{2.0, 1.0}; }, Complex{}, 1.0,
                                      Complex{0.3, 0.1});
    CHECK(vc.holds);
    CHECK(vc.lower == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(vc.upper == doctest::Approx(0.0).epsilon(1e-9));

    // exp(z) on the unit disk at z = 0.5: log|h(z)| = Re z
    const auto ve = cb::check_harnack([](Complex z) { return std::exp(z); }, Complex{}, 1.0,
                                      Complex{0.5, 0.0});
    CHECK(ve.holds);
    CHECK(ve.log_h_z == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ve.M == doctest::Approx(1.0).epsilon(1e-6));

    // a zero inside the disk must be detected through the winding number
    CHECK_THROWS_AS(
        cb::check_harnack([](Complex z) { return z - Complex{0.2, 0.1}; }, Complex{}, 1.0,
                          Complex{0.5, 0.0}),
        cb::Error);
}

TEST_CASE("harnack sweep over zero-free exponentials") {
    cb::Rng rng(2323);
    for (int trial = 0; trial < 100; ++trial) {
        const UnivariatePoly p = cbt::random_poly(rng, 3);
        auto h = [&p](Complex z) { return std::exp(p.eval(z)); };
        for (int s = 0; s < 10; ++s) {
            const Complex z = 0.9 * rng.in_unit_disk();
            const auto v = cb::check_harnack(h, Complex{}, 1.0, z, 1024);
            CHECK(v.holds);
        }
    }
}

TEST_CASE("doubling bound with traced constants on hand cases") {
    // normalized pure power: B = -n log mu exactly
    {
        const UnivariatePoly phi = UnivariatePoly::monomial(4);
        const auto rep = cb::check_doubling_bound(phi, Complex{0.05, 0.02}, 0.1, 0.25);
        CHECK(rep.holds);
        CHECK(rep.n_quarter3 == 4);
        CHECK(rep.m_quarter == doctest::Approx(4.0 * std::log(0.25)).epsilon(1e-9));
    }
    // exponential proxy: n = 0, m = -3N/4, B = N r (1 - mu)
    {
        const double N = 8.0;
        UnivariatePoly phi = exp_taylor_proxy(N);
        const double M = cb::circle_extrema(phi, Complex{}, 1.0).max_log_abs;
        phi = Complex{std::exp(-M), 0.0} * phi;
        const double r = 0.1, mu = 0.25;
        const auto rep = cb::check_doubling_bound(phi, Complex{}, r, mu);
        CHECK(rep.holds);
        CHECK(rep.n_quarter3 == 0);
        CHECK(rep.n_cofactor == 0);
        CHECK(rep.m_quarter == doctest::Approx(-0.75 * N).epsilon(1e-6));
        CHECK(rep.B == doctest::Approx(N * r * (1.0 - mu)).epsilon(1e-6));
    }
}

TEST_CASE("doubling bound sweep stays violation-free") {
    cb::Rng rng(2424);
    for (int trial = 0; trial < 60; ++trial) {
        const int deg = 1 + static_cast<int>(rng.next() % 8);
        UnivariatePoly phi = cbt::random_poly(rng, deg, 0.05);
        const double M = cb::circle_extrema(phi, Complex{}, 1.0).max_log_abs;
        phi = Complex{std::exp(-M), 0.0} * phi;
        const Complex z0 = 0.124 * rng.in_unit_disk();
        const double r = 0.01 + 0.114 * rng.uniform();
        for (const double mu : {0.5, 0.25, 0.125}) {
            const auto rep = cb::check_doubling_bound(phi, z0, r, mu);
            CHECK(rep.holds);
        }
    }
}

TEST_CASE("normalization gate") {
    const UnivariatePoly big({0.0, 0.0, 5.0});
    CHECK_THROWS_AS(cb::check_doubling_bound(big, Complex{}, 0.1, 0.25), cb::Error);
}

TEST_SUITE_END();
