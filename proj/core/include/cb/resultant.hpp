#pragma once

#include <optional>
#include <vector>

#include "cb/poly.hpp"
#include "cb/types.hpp"

namespace cb {

/// Quantities controlling the resultant bounds: t = min(|lead|,1),
/// T = max(max|coef|,1), displayed root radii R_f = T_f/t_f * deg g (as used
/// in the two-sided bound), plus the provably safe root bound
/// max(T/t * deg, 1 + T/t).
struct ResultantBounds {
    double t_f = 1.0, t_g = 1.0;
    double T_f = 1.0, T_g = 1.0;
    double R_f_displayed = 1.0, R_g_displayed = 1.0;
    double root_bound_f = 1.0, root_bound_g = 1.0;
    int s = 1;        // max(deg f, deg g)
    double t = 1.0;   // min(t_f, t_g)
    double R = 1.0;   // max(R_f_displayed, R_g_displayed)

    static ResultantBounds compute(const UnivariatePoly& f, const UnivariatePoly& g);
};

/// (m+n) x (m+n) Sylvester matrix of f (deg n) and g (deg m): the first m
/// columns carry shifted copies of f's coefficients, the last n columns carry
/// g's, so det = lead(f)^m lead(g)^n prod(zeros_f - zeros_g).
struct SylvesterMatrix {
    int dim = 0;
    std::vector<std::vector<Complex>> entries;

    static SylvesterMatrix build(const UnivariatePoly& f, const UnivariatePoly& g);
    Complex determinant() const;  // LU with partial pivoting
};

/// Resultant via the Sylvester determinant. Requires deg f, deg g >= 1.
Complex resultant_sylvester(const UnivariatePoly& f, const UnivariatePoly& g);

/// Independent oracle: lead(f)^m lead(g)^n prod_{i,j} (zeta_i - eta_j) from
/// computed roots.
Complex resultant_product_oracle(const UnivariatePoly& f, const UnivariatePoly& g,
                                 double tol = 1e-10);

/// The three equivalent product forms: root differences, (-1)^{mn} b^n prod f(eta_j),
/// and a^m prod g(zeta_i). They must agree pairwise and match the determinant.
struct ResultantForms {
    Complex via_root_products;
    Complex via_f_at_roots_of_g;
    Complex via_g_at_roots_of_f;
};
ResultantForms resultant_forms(const UnivariatePoly& f, const UnivariatePoly& g,
                               double tol = 1e-10);

struct ResultantWitnessReport {
    double delta = 0.0;
    ResultantBounds bounds;
    Complex res;
    double log_abs_res = kLogZero;

    // part (0): computed roots against the safe root bounds
    bool part0_holds = false;
    double worst_root_f = 0.0, worst_root_g = 0.0;

    // part (1): |Res| < delta^m t_g^n implies some eta_j with |f(eta_j)| < delta
    bool part1_applies = false;  // false = vacuous
    bool part1_holds = true;
    std::optional<Complex> part1_witness;
    double part1_witness_value = 0.0;

    // part (2): a common near-zero z forces |Res| < t^{2s} (2R)^{s^2} delta
    bool part2_applies = false;  // false = vacuous
    bool part2_holds = true;
    std::optional<Complex> part2_witness;
    double part2_log_bound = 0.0;
};

/// Verifies the quantitative resultant bounds at a given delta in (0,1).
/// Hypotheses that fail are reported as vacuous rather than asserted.
ResultantWitnessReport check_resultant_witnesses(const UnivariatePoly& f, const UnivariatePoly& g, double delta);

}  // namespace cb
