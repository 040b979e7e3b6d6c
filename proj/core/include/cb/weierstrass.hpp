#pragma once

#include <vector>

#include "cb/bernstein.hpp"
#include "cb/poly.hpp"
#include "cb/types.hpp"

namespace cb {

/// Affine unitary-ish frame on C^2: u = origin + scale*(z e1 + w e2) with unit
/// e1, e2 and |<e1,e2>| <= 0.1.
struct Frame {
    C2 e1{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    C2 e2{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    C2 origin;
    double scale = 1.0;

    void validate() const;
    C2 to_ambient(Complex z, Complex w) const { return origin + scale * (z * e1 + w * e2); }
    /// Largest singular value of (z,w) -> scale*(z e1 + w e2).
    double max_stretch() const;
    /// Distortion constant recorded with covers built through this frame.
    double distortion() const { return 2.0 / (1.0 - std::abs(inner(e1, e2))); }
    Frame swapped() const { return Frame{e2, e1, origin, scale}; }
};

struct RegularDirection {
    C2 direction;
    double m_level = 0.0;
    C2 witness;          // point on {v0 + z e : |z| <= R0/4} with log|f| >= m
    double witness_log = 0.0;
    int tries = 0;
};

/// Random unit directions until the restricted sup over the quarter disk
/// reaches level m; NoRegularDirection after max_tries.
RegularDirection find_regular_direction(const BivariatePoly& f, const C2& v0, double R0, double m,
                                        int max_tries, std::uint64_t seed);

/// A direction regular for every polynomial in fs simultaneously, optionally
/// constrained to stay nearly orthogonal to `avoid`.
RegularDirection find_joint_regular_direction(const std::vector<const BivariatePoly*>& fs,
                                              const C2& v0, double R0, double m, int max_tries,
                                              std::uint64_t seed, const C2* avoid = nullptr);

/// Radius in (1/8, 1/4) whose circle keeps min log|f(.,0)| above
/// threshold_log, chosen among 128 candidates by the best circle minimum;
/// supports joint selection for several restrictions. NoGoodCircle when every
/// candidate dips below the threshold.
double select_circle(const std::vector<const UnivariatePoly*>& restrictions, double threshold_log,
                     double* achieved_min = nullptr);
double select_circle(const UnivariatePoly& restriction, double threshold_log,
                     double* achieved_min = nullptr);

struct WeierstrassFactorization {
    int k = 0;                 // degree of the monic factor
    double rho0 = 0.0;         // contour radius, in (1/8, 1/4)
    double r1 = 0.0;           // coefficient disk radius
    Frame frame;
    std::vector<Complex> w_grid;
    /// a_coeffs[g][j]: coefficient of z^j (j < k) of P(., w_grid[g]); P is monic.
    std::vector<std::vector<Complex>> a_coeffs;
    /// validation points (z, w) with g = f/P sampled there
    std::vector<C2> g_points;
    std::vector<std::size_t> g_grid_index;
    std::vector<Complex> g_samples;

    UnivariatePoly P_at(std::size_t grid_index) const;
    Complex eval_P(std::size_t grid_index, Complex z) const;
};

struct PrepareOptions {
    int grid_rings = 6;
    int grid_angles = 16;
    int contour_nodes = 512;
    int max_contour_nodes = 8192;
};

/// Weierstrass factorization f = P g on D(0,rho0) x D(0,r1) in the frame
/// coordinates: k from the boundary winding number, power sums of the interior
/// zeros by trapezoidal contour quadrature, coefficients through Newton's
/// identities. f must be zero-free on the contour for every grid w.
WeierstrassFactorization prepare(const BivariatePoly& f, const Frame& frame, double rho0,
                                 double r1, const PrepareOptions& opts = {});

/// r1 from the circle minimum and the Cauchy-type modulus of continuity in w,
/// halved until the contour stays zero-free over the whole grid.
double select_r1(const BivariatePoly& f, const Frame& frame, double rho0, double circle_min_log,
                 double r1_cap = 0.05);

/// f in frame coordinates along one fiber: z -> f(origin + scale(z e1 + w e2)).
UnivariatePoly frame_fiber(const BivariatePoly& f, const Frame& frame, Complex w);

/// The monic factor P(., w) at a single w, by the same contour quadrature as
/// prepare. expected_k < 0 accepts whatever winding number the contour shows.
UnivariatePoly weierstrass_poly_at(const BivariatePoly& f, const Frame& frame, double rho0,
                                   Complex w, int expected_k = -1, int max_nodes = 8192);

struct CofactorBoundsReport {
    double inf_log_f_contour = 0.0;  // over the contour times the w-grid
    double sup_log_f_polydisk = 0.0;
    double inf_log_g = 0.0, sup_log_g = 0.0;
    double lower_bound = 0.0, upper_bound = 0.0;
    bool holds = false;
    C2 worst_point;
};

/// The two-sided bound for g: inf log|g| >= inf_contour log|f| - k log(2 rho0)
/// and sup log|g| <= sup_polydisk log|f| + k log 2. BoundViolated on failure.
CofactorBoundsReport check_cofactor_bounds(const WeierstrassFactorization& wf, const BivariatePoly& f,
                             bool throw_on_violation = false);

/// max |f - P g| over the validation set, via the independent Cauchy-integral
/// reconstruction of g from contour data (g := f/P would be vacuous).
double factorization_residual(const WeierstrassFactorization& wf, const BivariatePoly& f);

}  // namespace cb
