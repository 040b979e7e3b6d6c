#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cb/bernstein.hpp"
#include "cb/types.hpp"

namespace cb {

/// Trigonometric-potential test family. The coefficient grid c[m+k][n+k]
/// (|m|,|n| <= k) is kept on the unit sphere: sum |c_{m,n}|^2 = 1 to 1e-12.
struct TestFamilySpec {
    enum class Kind { TrigDeterminant, RandomPoly, Named };
    Kind kind = Kind::TrigDeterminant;
    int k = 1;
    std::vector<std::vector<Complex>> c;
    std::array<double, 2> omega{0.61803398874989484, 0.41421356237309515};
    double lambda = 2.0;
    int N = 8;
    std::uint64_t seed = 20260713;

    static TestFamilySpec random_trig(int k, double lambda, int N, std::array<double, 2> omega,
                                      std::uint64_t seed);
    void validate() const;

    /// V(z,w) = sum c_{m,n} e(mz + nw), e(t) = exp(2 pi i t), for complex z,w.
    Complex potential(Complex z, Complex w) const;
};

/// Complex value carried as mantissa * exp(log_scale); the three-term
/// recurrence rescales whenever the mantissa passes 1e150.
struct ScaledComplex {
    Complex mantissa;
    double log_scale = 0.0;

    Complex value() const { return mantissa * std::exp(log_scale); }
    double log_abs() const {
        const double a = std::abs(mantissa);
        return a > 0.0 ? std::log(a) + log_scale : kLogZero;
    }
};

/// Characteristic determinant of the length-N discrete Schrodinger block with
/// potential V(v + n omega): D_n = lambda V(v + (n-1) omega) D_{n-1} - D_{n-2},
/// D_0 = 1, D_{-1} = 0.
ScaledComplex dirichlet_determinant(const TestFamilySpec& spec, const C2& v);

/// Doubling exponent of f_N(v0 + r0 v) over v in B(0,1) at mu = 1/4.
double family_doubling(const TestFamilySpec& spec, const C2& v0, double r0, int centers = 8);

struct LogRSample {
    double R = 0.0;
    double B = 0.0;
    double expected_B = 0.0;      // log(sqrt(15)/R)
    double inner_sup = 0.0;
    double expected_inner = 0.0;  // 2 log(R/2)
    double outer_sup = 0.0;
    double expected_outer = 0.0;  // log(sqrt(15) R / 4)
    bool pass = false;
};

struct LogRReport {
    std::vector<LogRSample> samples;
    double slope = 0.0;  // of B against log(1/R)
    double max_abs_err = 0.0;
    bool all_pass = false;
};

/// Trace doubling of z^2 + w on {zw = 0} at centers (R/4, 0): the measured
/// exponents must match log(sqrt(15)/R) and their growth in log(1/R) must
/// have unit slope.
LogRReport verify_example_logR(const std::vector<double>& R_values, double tol = 1e-2);

/// Cauchy tail bound for a degree-N truncation of a function with sup <= 1 on
/// the unit bidisk, valid on the closed bidisk of radius r < 1:
/// sum_{d>N} (d+1) r^d.
double truncation_tail_bound(int N, double r);

}  // namespace cb
