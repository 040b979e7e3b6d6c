#pragma once

#include <cmath>
#include <cstdint>

#include "cb/types.hpp"

namespace cb {

// Portable seeded generator. The update rules are fixed so that reports are
// reproducible bit-for-bit from the seed alone, independent of the standard
// library:
//
//   seeding      : SplitMix64,  x += 0x9E3779B97F4A7C15;
//                  z = x; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//                  z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
//   stream       : xoshiro256**, result = rotl(s1 * 5, 7) * 9
//   uniform [0,1): (next() >> 11) * 2^-53
//   gaussian     : Box-Muller on two uniforms
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : s_) si = splitmix64(x);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Complex unit_complex() {
        const double a = 6.283185307179586476925286766559 * uniform();
        return {std::cos(a), std::sin(a)};
    }

    /// Uniform point in the closed disk D(0,1).
    Complex in_unit_disk() {
        const double r = std::sqrt(uniform());
        return r * unit_complex();
    }

    /// Uniform point on the unit sphere S^3 in C^2 (four gaussians, normalized).
    C2 on_sphere3() {
        while (true) {
            C2 v{{gaussian(), gaussian()}, {gaussian(), gaussian()}};
            const double n = norm(v);
            if (n > 1e-12) return (1.0 / n) * v;
        }
    }

    /// Uniform point in the closed unit ball of C^2 = R^4.
    C2 in_unit_ball() {
        const double r = std::pow(uniform(), 0.25);
        return r * on_sphere3();
    }

  private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cb
