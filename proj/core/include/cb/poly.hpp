#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cb/types.hpp"

namespace cb {

/// Dense univariate polynomial over C. coeffs[j] multiplies z^j. The zero
/// polynomial has empty coeffs and degree() == -1; otherwise the leading
/// coefficient is nonzero.
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Complex> coeffs);
    static UnivariatePoly zero() { return UnivariatePoly(); }
    static UnivariatePoly constant(Complex c) { return UnivariatePoly({c}); }
    static UnivariatePoly monomial(int degree, Complex c = 1.0);
    static UnivariatePoly from_roots(const std::vector<Complex>& roots, Complex lead = 1.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : Complex{};
    }
    Complex lead() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

    /// Horner evaluation, highest degree first.
    Complex eval(Complex z) const;
    /// Sum_j |c_j| |z|^j, the natural residual scale at z.
    double eval_abs_scale(Complex z) const;

    UnivariatePoly derivative() const;

    double max_abs_coeff() const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(Complex s, const UnivariatePoly& a);

    /// p(a + b*t) as a polynomial in t.
    UnivariatePoly compose_affine(Complex a, Complex b) const;

    /// Divides by (z - root); the remainder (= p(root)) is discarded.
    UnivariatePoly deflate(Complex root) const;

  private:
    std::vector<Complex> coeffs_;
    void trim();
};

/// Dense bivariate polynomial over C. coeff(i,j) multiplies z^i w^j.
class BivariatePoly {
  public:
    BivariatePoly() = default;
    /// grid[i][j] = coefficient of z^i w^j; trailing all-zero rows/columns trimmed.
    explicit BivariatePoly(std::vector<std::vector<Complex>> grid);
    static BivariatePoly zero() { return BivariatePoly(); }
    static BivariatePoly constant(Complex c);
    static BivariatePoly monomial(int i, int j, Complex c = 1.0);
    static BivariatePoly from_univariate_z(const UnivariatePoly& p);

    bool is_zero() const { return grid_.empty(); }
    int degz() const { return grid_.empty() ? -1 : static_cast<int>(grid_.size()) - 1; }
    int degw() const { return grid_.empty() ? -1 : static_cast<int>(grid_[0].size()) - 1; }
    int total_degree() const;
    Complex coeff(int i, int j) const;
    double max_abs_coeff() const;
    double coeff_abs_sum() const;

    Complex eval(Complex z, Complex w) const;
    Complex eval(const C2& v) const { return eval(v.z, v.w); }

    BivariatePoly dz() const;
    BivariatePoly dw() const;
    /// Coefficient of z^i as a polynomial in w.
    UnivariatePoly coeff_in_w(int i) const;
    /// f(., w0) as a univariate polynomial in z (exact partial evaluation).
    UnivariatePoly at_w(Complex w0) const;
    /// f(z0, .) as a univariate polynomial in w.
    UnivariatePoly at_z(Complex z0) const;
    /// Swap the roles of z and w.
    BivariatePoly swapped() const;
    /// f(v0 + t*e) as a univariate polynomial in t.
    UnivariatePoly restrict_to_line(const C2& v0, const C2& e) const;

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(Complex s, const BivariatePoly& a);

  private:
    std::vector<std::vector<Complex>> grid_;
    void trim();
};

struct RootOptions {
    double tol = 1e-10;
    int max_iterations = 400;
    /// Roots closer than cluster_radius * (1 + |z|) collapse to their centroid,
    /// reported with multiplicity.
    double cluster_radius = 2e-5;
};

/// All degree() roots, with multiplicity. Aberth-Ehrlich simultaneous
/// iteration from perturbed-circle starting points; falls back to companion
/// matrix eigenvalues if the iteration stalls. Throws NoConvergence if both
/// fail the residual test |p(root)| <= tol * max|c| * max(1,|root|)^deg.
std::vector<Complex> roots(const UnivariatePoly& p, double tol = 1e-10);
std::vector<Complex> roots(const UnivariatePoly& p, const RootOptions& opts);

struct CircleExtrema {
    double max_log_abs = 0.0;
    double min_log_abs = 0.0;
    double argmax_angle = 0.0;
    double argmin_angle = 0.0;
    /// Set when a sample hit an exact zero; min_log_abs is then -inf.
    bool minus_infinity = false;
};

/// Max/min of log|p| over the circle |z - center| = radius: uniform sampling
/// followed by golden-section refinement (angle tolerance 1e-10) around the
/// best samples. n_samples = 0 picks the default 4*degree + 64.
CircleExtrema circle_extrema(const UnivariatePoly& p, Complex center, double radius,
                             int n_samples = 0);

/// Same search driven by an arbitrary function of the angle position.
CircleExtrema circle_extrema_fn(const std::function<Complex(Complex)>& f, Complex center,
                                double radius, int n_samples);

struct JensenCount {
    int count = 0;
    std::optional<double> jensen_bound;  // empty when p(center) = 0
};

/// Zeros of p in the closed disk D(center, r) (by root computation) together
/// with the Jensen upper estimate (M_p(center,R) - log|p(center)|)/log(R/r).
JensenCount jensen_zero_count(const UnivariatePoly& p, Complex center, double r, double R);

}  // namespace cb
