#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cb/poly.hpp"
#include "cb/types.hpp"

namespace cb {

using Fn2 = std::function<Complex(const C2&)>;
using Fn1 = std::function<Complex(Complex)>;

inline Fn2 as_fn(const BivariatePoly& f) {
    return [f](const C2& v) { return f.eval(v); };
}

struct BernsteinQuery {
    double mu = 0.25;
    C2 center;
    double R = 0.25;
    int budget = 4096;
    std::uint64_t seed = 20260713;

    void validate() const {
        if (!(mu > 0.0 && mu < 1.0)) throw Error(Err::BadInput, "BernsteinQuery: mu in (0,1)");
        if (!(R > 0.0)) throw Error(Err::BadInput, "BernsteinQuery: R > 0");
    }
};

struct BernsteinReport {
    double M_outer = kLogZero;
    double M_inner = kLogZero;
    double B = 0.0;
    long samples_used = 0;
    bool is_identically_zero = false;
};

/// sup of log|f| over the closed ball B(center, R), attained on the boundary
/// sphere: seeded uniform S^3 sampling (budget points) plus shrinking-cap
/// refinement. Throws BudgetTooSmall when doubling the budget keeps moving
/// the estimate by more than `tol` at 8x the requested budget.
double max_log_ball(const Fn2& f, const C2& center, double R, int budget,
                    std::uint64_t seed = 20260713, double tol = 5e-3);

/// Bernstein exponent M_f(center,R) - M_f(center,muR) on concentric balls.
BernsteinReport bernstein_exponent(const Fn2& f, const BernsteinQuery& query);
BernsteinReport bernstein_exponent(const BivariatePoly& f, const BernsteinQuery& query);

/// Trace exponent on Z = {f2 = 0}: suprema run over ball intersected with Z,
/// sampled by rooting f2(.,w) over a centered w-grid (with exact handling of
/// fibers where f2(.,w) vanishes identically) and locally refined.
BernsteinReport bernstein_trace_exponent(const BivariatePoly& f1, const BivariatePoly& f2,
                                         const BernsteinQuery& query);

/// sup of log|f1| over B(center,R) n {f2=0}; EmptyTrace if the intersection
/// has no points.
double max_log_trace(const BivariatePoly& f1, const BivariatePoly& f2, const C2& center,
                     double R);

/// Doubling exponent of Definition-style sup over all centers in B(0,1/4) and
/// radii R <= 1/4, approximated on a seeded center sample and a radius ladder.
double bernstein_sup_exponent(const Fn2& f, double mu, int center_samples = 24,
                              std::uint64_t seed = 20260713);

struct HarnackVerdict {
    double M = 0.0;              // sup log|h| over the disk (boundary sampling)
    double log_h_center = 0.0;
    double log_h_z = 0.0;
    double lower = 0.0, upper = 0.0;  // the two Harnack side bounds on the increment
    bool holds = false;
};

/// Two-sided Harnack bound for a zero-free analytic h on D(center,R) at a
/// point z inside: -2r/(R-r) (M - log|h(c)|) <= log|h(z)| - log|h(c)| <=
/// 2r/(R+r) (M - log|h(c)|). A nonzero boundary winding number raises
/// NotZeroFree.
HarnackVerdict check_harnack(const Fn1& h, Complex center, double R, Complex z,
                             int n_samples = 2048, double tol = 1e-7);

struct DoublingBoundReport {
    double B = 0.0;          // measured doubling B_phi(mu; z0, r)
    int n_quarter3 = 0;      // zeros in D(0, 3/4)
    int n_cofactor = 0;      // zeros in D(0, 7/8) split off into the factor P
    double m_quarter = 0.0;  // M_phi(0, 1/4)
    double c1 = 0.0, c2 = 0.0;
    double U_log4 = 0.0;     // sup bound for log|h| on D(0,3/4):  n log 4
    double U_log10 = 0.0;    // sup bound for log|h| on D(0,0.85): n log 10
    double M14_lower = 0.0;  // lower bound for M_h(0,1/4)
    double bound = 0.0;      // full traced right-hand side
    bool holds = false;
};

/// Doubling bound for a normalized analytic function through the factorization
/// phi = h P: every constant in the chain is the literal Harnack/mean-value
/// factor for the disks actually used, so the asserted inequality is exact,
/// not asymptotic. Requires M_phi(0,1) <= 1e-9, |z0| < 1/8, r < 1/8.
DoublingBoundReport check_doubling_bound(const UnivariatePoly& phi, Complex z0, double r, double mu);

}  // namespace cb
