#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cb {

using Complex = std::complex<double>;

/// Point in C^2, stored as a pair of complex coordinates.
struct C2 {
    Complex z{0.0, 0.0};
    Complex w{0.0, 0.0};

    C2() = default;
    C2(Complex z_, Complex w_) : z(z_), w(w_) {}

    friend C2 operator+(const C2& a, const C2& b) { return {a.z + b.z, a.w + b.w}; }
    friend C2 operator-(const C2& a, const C2& b) { return {a.z - b.z, a.w - b.w}; }
    friend C2 operator*(Complex s, const C2& a) { return {s * a.z, s * a.w}; }
    friend C2 operator*(double s, const C2& a) { return {s * a.z, s * a.w}; }
};

inline double norm_sq(const C2& v) { return std::norm(v.z) + std::norm(v.w); }
inline double norm(const C2& v) { return std::sqrt(norm_sq(v)); }

/// Hermitian inner product <a,b> = a.z*conj(b.z) + a.w*conj(b.w).
inline Complex inner(const C2& a, const C2& b) {
    return a.z * std::conj(b.z) + a.w * std::conj(b.w);
}

inline bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }
inline bool is_finite(const C2& v) { return is_finite(v.z) && is_finite(v.w); }

struct Disk {
    Complex center{0.0, 0.0};
    double radius = 0.0;

    Disk() = default;
    Disk(Complex c, double r) : center(c), radius(r) {
        if (!is_finite(c) || !std::isfinite(r) || r < 0.0)
            throw std::invalid_argument("Disk: center must be finite and radius >= 0");
    }
    bool contains(Complex p) const { return std::abs(p - center) <= radius; }
};

/// Closed ball in C^2.
struct Ball2 {
    C2 center;
    double radius = 0.0;

    Ball2() = default;
    Ball2(C2 c, double r) : center(c), radius(r) {
        if (!is_finite(c) || !std::isfinite(r) || r < 0.0)
            throw std::invalid_argument("Ball2: center must be finite and radius >= 0");
    }
    bool contains(const C2& p) const { return norm(p - center) <= radius; }
};

enum class Err {
    NoConvergence,
    CenterIsZero,
    AllZero,
    BudgetTooSmall,
    EmptyTrace,
    NotZeroFree,
    NormalizationViolated,
    NoRegularDirection,
    NoGoodCircle,
    ZeroOnContour,
    WindingNotInteger,
    BoundViolated,
    SubdivisionBudgetExceeded,
    DegenerateResultant,
    CollisionUnresolved,
    NotACurve,
    CommonFactor,
    BadInput,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NoConvergence: return "NoConvergence";
        case Err::CenterIsZero: return "CenterIsZero";
        case Err::AllZero: return "AllZero";
        case Err::BudgetTooSmall: return "BudgetTooSmall";
        case Err::EmptyTrace: return "EmptyTrace";
        case Err::NotZeroFree: return "NotZeroFree";
        case Err::NormalizationViolated: return "NormalizationViolated";
        case Err::NoRegularDirection: return "NoRegularDirection";
        case Err::NoGoodCircle: return "NoGoodCircle";
        case Err::ZeroOnContour: return "ZeroOnContour";
        case Err::WindingNotInteger: return "WindingNotInteger";
        case Err::BoundViolated: return "BoundViolated";
        case Err::SubdivisionBudgetExceeded: return "SubdivisionBudgetExceeded";
        case Err::DegenerateResultant: return "DegenerateResultant";
        case Err::CollisionUnresolved: return "CollisionUnresolved";
        case Err::NotACurve: return "NotACurve";
        case Err::CommonFactor: return "CommonFactor";
        case Err::BadInput: return "BadInput";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

/// Sentinel for log|0|.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

}  // namespace cb
