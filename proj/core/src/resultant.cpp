#include "cb/resultant.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace cb {

ResultantBounds ResultantBounds::compute(const UnivariatePoly& f, const UnivariatePoly& g) {
    const int n = f.degree(), m = g.degree();
    ResultantBounds b;
    b.t_f = std::min(std::abs(f.lead()), 1.0);
    b.t_g = std::min(std::abs(g.lead()), 1.0);
    b.T_f = std::max(f.max_abs_coeff(), 1.0);
    b.T_g = std::max(g.max_abs_coeff(), 1.0);
    b.R_f_displayed = b.T_f / b.t_f * m;
    b.R_g_displayed = b.T_g / b.t_g * n;
    b.root_bound_f = std::max(b.T_f / b.t_f * n, 1.0 + b.T_f / b.t_f);
    b.root_bound_g = std::max(b.T_g / b.t_g * m, 1.0 + b.T_g / b.t_g);
    b.s = std::max(m, n);
    b.t = std::min(b.t_f, b.t_g);
    b.R = std::max(b.R_f_displayed, b.R_g_displayed);
    return b;
}

SylvesterMatrix SylvesterMatrix::build(const UnivariatePoly& f, const UnivariatePoly& g) {
    const int n = f.degree(), m = g.degree();
    if (n < 1 || m < 1) throw Error(Err::BadInput, "Sylvester matrix needs both degrees >= 1");
    SylvesterMatrix s;
    s.dim = n + m;
    s.entries.assign(static_cast<std::size_t>(s.dim),
                     std::vector<Complex>(static_cast<std::size_t>(s.dim), Complex{}));
    // column j < m holds f's coefficients shifted down by j; columns m..m+n-1 hold g's
    for (int j = 0; j < m; ++j)
        for (int k = 0; k <= n; ++k)
            s.entries[static_cast<std::size_t>(j + k)][static_cast<std::size_t>(j)] =
                f.coeff(n - k);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k <= m; ++k)
            s.entries[static_cast<std::size_t>(j + k)][static_cast<std::size_t>(m + j)] =
                g.coeff(m - k);
    return s;
}

Complex SylvesterMatrix::determinant() const {
    Eigen::MatrixXcd M(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            M(i, j) = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
}

Complex resultant_sylvester(const UnivariatePoly& f, const UnivariatePoly& g) {
    return SylvesterMatrix::build(f, g).determinant();
}

ResultantForms resultant_forms(const UnivariatePoly& f, const UnivariatePoly& g, double tol) {
    const int n = f.degree(), m = g.degree();
    if (n < 1 || m < 1) throw Error(Err::BadInput, "resultant needs both degrees >= 1");
    const auto zf = roots(f, tol);
    const auto zg = roots(g, tol);
    ResultantForms out;

    Complex prod = std::pow(f.lead(), m) * std::pow(g.lead(), n);
    for (const auto& zi : zf)
        for (const auto& ej : zg) prod *= (zi - ej);
    out.via_root_products = prod;

    const double sign = (n % 2 == 1 && m % 2 == 1) ? -1.0 : 1.0;
    Complex pf = std::pow(g.lead(), n);
    for (const auto& ej : zg) pf *= f.eval(ej);
    out.via_f_at_roots_of_g = sign * pf;

    Complex pg = std::pow(f.lead(), m);
    for (const auto& zi : zf) pg *= g.eval(zi);
    out.via_g_at_roots_of_f = pg;
    return out;
}

Complex resultant_product_oracle(const UnivariatePoly& f, const UnivariatePoly& g, double tol) {
    return resultant_forms(f, g, tol).via_root_products;
}

ResultantWitnessReport check_resultant_witnesses(const UnivariatePoly& f, const UnivariatePoly& g, double delta) {
    if (!(0.0 < delta && delta < 1.0))
        throw Error(Err::BadInput, "check_resultant_witnesses: delta must be in (0,1)");
    const int n = f.degree(), m = g.degree();
    ResultantWitnessReport rep;
    rep.delta = delta;
    rep.bounds = ResultantBounds::compute(f, g);
    rep.res = resultant_sylvester(f, g);
    const double abs_res = std::abs(rep.res);
    rep.log_abs_res = abs_res > 0.0 ? std::log(abs_res) : kLogZero;

    const auto zf = roots(f);
    const auto zg = roots(g);

    // part (0)
    rep.worst_root_f = 0.0;
    for (const auto& z : zf) rep.worst_root_f = std::max(rep.worst_root_f, std::abs(z));
    rep.worst_root_g = 0.0;
    for (const auto& z : zg) rep.worst_root_g = std::max(rep.worst_root_g, std::abs(z));
    rep.part0_holds = rep.worst_root_f <= rep.bounds.root_bound_f * (1.0 + 1e-9) &&
                      rep.worst_root_g <= rep.bounds.root_bound_g * (1.0 + 1e-9);

    // part (1)
    const double part1_threshold = std::pow(delta, m) * std::pow(rep.bounds.t_g, n);
    if (abs_res < part1_threshold) {
        rep.part1_applies = true;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& ej : zg) {
            const double v = std::abs(f.eval(ej));
            if (v < best) {
                best = v;
                rep.part1_witness = ej;
            }
        }
        rep.part1_witness_value = best;
        rep.part1_holds = best < delta;
    }

    // part (2): search roots of f and g plus a coarse grid for a common near-zero
    const double t = rep.bounds.t;
    const int s = rep.bounds.s;
    const double threshold2 = t * std::pow(delta, s);
    std::vector<Complex> candidates = zf;
    candidates.insert(candidates.end(), zg.begin(), zg.end());
    const double rb = std::max(rep.bounds.root_bound_f, rep.bounds.root_bound_g);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            candidates.emplace_back(rb * (2.0 * (i + 0.5) / 32.0 - 1.0),
                                    rb * (2.0 * (j + 0.5) / 32.0 - 1.0));
    for (const auto& z : candidates) {
        if (std::max(std::abs(f.eval(z)), std::abs(g.eval(z))) < threshold2) {
            rep.part2_applies = true;
            rep.part2_witness = z;
            break;
        }
    }
    if (rep.part2_applies) {
        // compare in log space; (2R)^{s^2} overflows doubles well inside desk scale
        rep.part2_log_bound = 2.0 * s * std::log(t) +
                              static_cast<double>(s) * s * std::log(2.0 * rep.bounds.R) +
                              std::log(delta);
        rep.part2_holds = rep.log_abs_res < rep.part2_log_bound;
    }
    return rep;
}

}  // namespace cb
