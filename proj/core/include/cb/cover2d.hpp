#pragma once

#include <cstdint>
#include <vector>

#include "cb/cartan.hpp"
#include "cb/poly.hpp"
#include "cb/types.hpp"
#include "cb/weierstrass.hpp"

namespace cb {

/// The separation-of-scales hypothesis in checkable form: an input ball cover
/// of the joint near-zero set at level exp(-H0) inside B(0,1/2), with
/// H0 >= ratio * H1 and H1 >= ratio * max(B0, log K1). B0 is clamped below by
/// one (the doubling data is only meaningful above unit scale).
struct TransversalityData {
    double H0 = 0.0;
    double H1 = 0.0;
    int K1 = 0;
    double B0 = 1.0;
    Car20Cover input_cover;

    double ratio = 10.0;
    bool gates_ok = false;
    long boxes_processed = 0;
    int depth_used = 0;

    void validate() const;
};

struct EstimateOptions {
    double ratio = 10.0;        // the frozen version of the two "much greater" gates
    int max_depth = 44;         // box centers stay exactly representable
    long box_budget = 2000000;  // exceeding it signals a non-transversal pair
    int b0_centers = 16;
    std::uint64_t seed = 20260713;
};

/// Desk-scale substitute for the assumed input data: B0 from the doubling
/// lattice, the input cover from adaptive box subdivision of B(0,1/2) with a
/// certified second-order discard test. Requires the caller to have
/// normalized both functions to M(0,1) <= 0 (coefficient-sum normalization is
/// enough). SubdivisionBudgetExceeded when survivors refuse to coarsen.
TransversalityData estimate_inputs(const BivariatePoly& f1, const BivariatePoly& f2, double eps0,
                                   int subdivision_depth, const EstimateOptions& opts = {});

/// Divides by the coefficient sum, a certified bound for sup over B(0,1).
BivariatePoly normalize_on_ball(const BivariatePoly& f);

struct BallProvenance {
    int input_ball = -1;
    int w_disk = -1;
    int z_disk = -1;
};

struct PassDiagnostics {
    int k1 = 0, k2 = 0;
    double rho0 = 0.0, r1 = 0.0;
    int n_disks = 0;
    double cartan_lb = 0.0;      // certified log lower bound for the fitted resultant
    double fit_residual = 0.0;
    double achieved_exterior = 0.0;  // log lower bound for |F| off the cylinders
};

struct CoverResult {
    Car20Cover cover;
    double threshold_log = 0.0;  // -H B0^2 H0
    double H = 0.0;
    TransversalityData data;
    double c_pipeline = 0.0;  // K / (K1 B0^2 H0^2)
    double achieved_exterior_log = 0.0;
    std::vector<BallProvenance> provenance;
    std::vector<PassDiagnostics> diagnostics;  // two entries per input ball
    bool coverage_ok = true;  // every input ball fits inside its valid polydisk
};

struct BuildOptions {
    int max_direction_tries = 400;
    int max_fit_degree = 48;
    std::uint64_t seed = 20260713;
};

/// The two-directional Weierstrass-resultant-Cartan pipeline: per input ball,
/// a joint regular frame, simultaneous preparation of both functions, the
/// resultant of the two monic factors fitted in the transverse variable,
/// exceptional disks at level 2H from its zeros, and the cylinder
/// intersections mapped back through the frame as balls of radius exp(-H).
CoverResult build_cover(const BivariatePoly& f1, const BivariatePoly& f2,
                        const TransversalityData& data, double H, const BuildOptions& opts = {});

struct VerificationReport {
    int samples = 0;
    int violations = 0;
    double threshold_log = 0.0;
    double worst_margin = 0.0;  // min over samples of log|F| - threshold
    C2 worst_point;
    std::vector<double> margin_quantiles;  // 0, 25, 50, 75, 100 percent
};

/// Samples B(0,1/4) outside the cover and checks log|F| >= threshold_log.
/// Violations are reported, never thrown. focus_radius > 0 concentrates the
/// samples in a ball (negative controls probe near the zero set).
VerificationReport verify_cover(const BivariatePoly& f1, const BivariatePoly& f2,
                                const CoverResult& result, int n_samples, std::uint64_t seed,
                                const C2* focus_center = nullptr, double focus_radius = 0.0);

}  // namespace cb
