#pragma once

#include <optional>
#include <vector>

#include "cb/poly.hpp"
#include "cb/types.hpp"
#include "cb/weierstrass.hpp"

namespace cb {

enum class ChartKind { Regular, Puiseux };

/// Local parametrization of a branch of Z = {f2 = 0}. Regular charts are
/// graphs w' -> (zeta(w' - w_j), w'); Puiseux charts at a singular fiber are
/// t -> (zeta_i(t), w_j + t^p) with p the monodromy cycle length. Vertical
/// components {w = w_j} are stored as Regular charts with swapped = true,
/// parametrized by z instead.
struct BranchChart {
    ChartKind kind = ChartKind::Regular;
    C2 base_point;
    int p = 1;
    bool swapped = false;
    double epsilon = 0.0;  // parameter-disk radius
    double delta = 0.0;    // z-spread of the samples
    Frame frame;
    std::vector<Complex> params;        // sample parameters in D(0, epsilon)
    std::vector<C2> points;             // curve points, same order
    double residual = 0.0;              // max |f2| over the samples

    /// Curve point for a parameter value: nearest sample (charts carry dense
    /// sample grids; exact evaluation tracks through track_branches).
    C2 nearest_point(Complex t) const;
};

struct CurveSampleCloud {
    std::vector<C2> points;
    std::vector<Complex> source_ws;
};

struct TrackOptions {
    double tol = 1e-9;
    int max_depth = 26;
};

/// Fiber roots along a w-path, each step matched to its predecessor by
/// nearest-neighbor with a collision guard; steps split adaptively when roots
/// drift together. CollisionUnresolved when splitting bottoms out (the path
/// runs into a singular fiber).
std::vector<std::vector<Complex>> track_branches(const BivariatePoly& f2,
                                                 const std::vector<Complex>& w_path,
                                                 const std::vector<Complex>& z_init,
                                                 const TrackOptions& opts = {});

struct MonodromyResult {
    std::vector<std::vector<int>> cycles;  // index cycles over the base fiber
    std::vector<int> orders;               // cycle lengths p_i, summing to k
    std::vector<Complex> base_roots;
};

/// Tracks the fiber once around |w - singular_w| = loop_radius and reads the
/// branch orders off the induced permutation's cycles.
MonodromyResult branch_order(const BivariatePoly& f2, Complex singular_w, double loop_radius,
                             int n_steps = 96);

/// Charts covering Z over a region: regular graphs away from the discriminant
/// locus (zeros of Res_z(f2, dz f2)), Puiseux charts at discriminant points,
/// swapped regular charts along vertical components. NotACurve if f2 is
/// constant.
std::vector<BranchChart> build_atlas(const BivariatePoly& f2, const Ball2& region);

/// Discriminant locus of f2 in w: roots of Res_z(f2, dz f2) plus the zeros of
/// the leading z-coefficient (where the fiber degree drops).
std::vector<Complex> discriminant_points(const BivariatePoly& f2);

/// Res_z(f, g) as a polynomial in w, by evaluation at ring nodes and exact
/// interpolation. Throws CommonFactor if it vanishes identically.
UnivariatePoly resultant_in_w(const BivariatePoly& f, const BivariatePoly& g);

struct CrossingCount {
    int crossings = 0;
    bool tangential = false;          // a sample touched the line without a sign change
    bool identically_on_line = false;  // the exceptional-line case
};

/// Sign changes of Im(e^{-i theta} g(chart(xi))) for real xi in xi_range:
/// the transversal crossings of the curve value with the line of angle theta.
CrossingCount line_crossing_count(const BivariatePoly& f, const BivariatePoly& g,
                                  const BranchChart& chart, double theta, double xi_lo,
                                  double xi_hi, int n_samples);

/// Isolated solutions of f1 = f2 = 0 via w-roots of the resultant and fiber
/// matching; the count never exceeds deg f1 * deg f2.
struct BezoutResult {
    std::vector<C2> solutions;
    int degree_product = 0;
};
BezoutResult bezout_count(const BivariatePoly& f1, const BivariatePoly& f2);

}  // namespace cb
