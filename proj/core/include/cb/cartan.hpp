#pragma once

#include <vector>

#include "cb/poly.hpp"
#include "cb/types.hpp"

namespace cb {

/// Finite union of disks in C with budget exp(-H): at most K disks, total
/// radius < exp(-H), and every disk contains at least one of the generating
/// zeros. Invariants are checked on construction.
struct Car1Cover {
    std::vector<Disk> disks;
    double H = 0.0;
    int K = 0;

    double total_radius() const;
    bool contains(Complex p) const;
    void validate(const std::vector<Complex>& zeros) const;
};

/// Finite union of balls in C^2, all of radius exactly exp(-H), at most K.
struct Car20Cover {
    std::vector<Ball2> balls;
    double H = 0.0;
    int K = 0;

    bool contains(const C2& p) const;
    void validate() const;
};

struct MinModulusCertificate {
    double lower_bound_log = kLogZero;
    int sample_count = 0;
    Complex worst_point;
    double worst_value_log = 0.0;
    int violations = 0;
};

/// Exceptional disks for the product prod |z - a_k|: greedy maximal-cluster
/// selection with unit gamma = exp(-H)/(4n), doubled radii, overlapping disks
/// merged. Outside the cover the product exceeds the returned bound
///   guaranteed_log_lb = n * log(exp(-H)/(4 e n)).
std::pair<Car1Cover, double> cartan_cover_1d(const std::vector<Complex>& zeros, double H);

/// Cover of the near-zero set of p on `domain` at level H, with a certified
/// exterior lower bound for log|p| on domain minus the cover. Zeros within
/// three domain radii feed the disk construction; the zero-free cofactor is
/// bounded through its Harnack inequality on the concentric triple disk.
std::pair<Car1Cover, MinModulusCertificate> cartan_cover_poly(const UnivariatePoly& p,
                                                              const Disk& domain, double H);

bool cover_membership(const Car1Cover& cover, Complex p);
bool cover_membership(const Car20Cover& cover, const C2& p);

/// Resamples the exterior bound of cartan_cover_poly: n_samples points drawn
/// in the domain outside the cover, violations counted (none expected).
MinModulusCertificate validate_certificate(const UnivariatePoly& p, const Disk& domain,
                                           const Car1Cover& cover, double lower_bound_log,
                                           int n_samples, std::uint64_t seed);

}  // namespace cb
