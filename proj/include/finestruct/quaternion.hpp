#pragma once
/**
 * @file quaternion.hpp
 * @brief Real quaternions and the slice (book) structure of H.
 *
 * Basis products follow e1e2 = e3, e2e3 = e1, e3e1 = e2, ei^2 = -1.
 */

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

namespace finestruct {

struct Quaternion {
    double q0 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double a) : q0(a) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double a, double b, double c, double d) : q0(a), q1(b), q2(c), q3(d) {}

    constexpr double operator[](int i) const {
        return i == 0 ? q0 : i == 1 ? q1 : i == 2 ? q2 : q3;
    }
    constexpr double& operator[](int i) {
        return i == 0 ? q0 : i == 1 ? q1 : i == 2 ? q2 : q3;
    }

    constexpr Quaternion& operator+=(const Quaternion& b) {
        q0 += b.q0; q1 += b.q1; q2 += b.q2; q3 += b.q3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& b) {
        q0 -= b.q0; q1 -= b.q1; q2 -= b.q2; q3 -= b.q3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        q0 *= s; q1 *= s; q2 *= s; q3 *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) { return *this *= (1.0 / s); }

    constexpr bool operator==(const Quaternion&) const = default;
};

inline constexpr Quaternion e1{0, 1, 0, 0};
inline constexpr Quaternion e2{0, 0, 1, 0};
inline constexpr Quaternion e3{0, 0, 0, 1};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
            a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
            a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
            a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}
constexpr Quaternion& operator*=(Quaternion& a, const Quaternion& b) { return a = a * b; }

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }
constexpr double norm2(const Quaternion& q) {
    return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}
inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }
constexpr double re(const Quaternion& q) { return q.q0; }
/// Vector part q̲.
constexpr Quaternion vec(const Quaternion& q) { return {0.0, q.q1, q.q2, q.q3}; }
inline double vec_norm(const Quaternion& q) { return std::hypot(q.q1, q.q2, q.q3); }

/// Kelvin inverse q̄/|q|^2; empty for q = 0.
inline std::optional<Quaternion> kelvin_inverse(const Quaternion& q) {
    const double n2 = norm2(q);
    if (n2 == 0.0) return std::nullopt;
    return conj(q) / n2;
}

/// Unchecked inverse for internal use where the caller has excluded zero.
constexpr Quaternion inv(const Quaternion& q) { return conj(q) / norm2(q); }

struct ConjModInv {
    Quaternion conjugate;
    double modulus;
    std::optional<Quaternion> inverse;
};

inline ConjModInv conj_mod_inv(const Quaternion& q) { return {conj(q), norm(q), kelvin_inverse(q)}; }

/// Non-negative integer power by repeated squaring.
constexpr Quaternion pow(Quaternion q, unsigned n) {
    Quaternion r{1.0};
    while (n) {
        if (n & 1u) r = r * q;
        q = q * q;
        n >>= 1u;
    }
    return r;
}

/// Integer power; negative exponents use the inverse.
inline Quaternion ipow(const Quaternion& q, int n) {
    return n >= 0 ? pow(q, static_cast<unsigned>(n)) : pow(inv(q), static_cast<unsigned>(-n));
}

/// Max-abs component distance.
inline double max_abs_diff(const Quaternion& a, const Quaternion& b) {
    const Quaternion d = a - b;
    return std::max({std::abs(d.q0), std::abs(d.q1), std::abs(d.q2), std::abs(d.q3)});
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.q0 << ',' << q.q1 << ',' << q.q2 << ',' << q.q3 << ']';
}

/// Element of the unit sphere of purely imaginary quaternions.
struct ImaginaryUnit {
    double i1 = 1.0;
    double i2 = 0.0;
    double i3 = 0.0;

    /// Normalises the vector part of v; empty if it vanishes.
    static std::optional<ImaginaryUnit> from(const Quaternion& v) {
        const double n = vec_norm(v);
        if (n == 0.0) return std::nullopt;
        return ImaginaryUnit{v.q1 / n, v.q2 / n, v.q3 / n};
    }

    constexpr Quaternion q() const { return {0.0, i1, i2, i3}; }
    constexpr operator Quaternion() const { return q(); }  // NOLINT
    constexpr ImaginaryUnit operator-() const { return {-i1, -i2, -i3}; }

    /// u + I v.
    constexpr Quaternion at(double u, double v) const { return {u, i1 * v, i2 * v, i3 * v}; }
    Quaternion embed(std::complex<double> z) const { return at(z.real(), z.imag()); }
};

inline constexpr double kRealAxisTol = 1e-13;

inline bool is_real(const Quaternion& q) { return vec_norm(q) <= kRealAxisTol * (1.0 + norm(q)); }

/// q = u + I v with v = |q̲| >= 0; I is empty on the real axis.
struct SliceCoords {
    double u = 0.0;
    double v = 0.0;
    std::optional<ImaginaryUnit> I;
};

inline SliceCoords slice_coords(const Quaternion& q) {
    if (is_real(q)) return {q.q0, 0.0, std::nullopt};
    return {q.q0, vec_norm(q), ImaginaryUnit::from(q)};
}

/// Imaginary unit of q, or e1 on the real axis where any unit will do.
inline ImaginaryUnit unit_or_default(const Quaternion& q) {
    auto I = slice_coords(q).I;
    return I ? *I : ImaginaryUnit{};
}

/// q as a complex number in its own slice, with the matching imaginary unit.
struct SlicePoint {
    std::complex<double> z;
    ImaginaryUnit I;
};

inline SlicePoint to_slice(const Quaternion& q) {
    const auto c = slice_coords(q);
    return {{c.u, c.v}, c.I ? *c.I : ImaginaryUnit{}};
}

}  // namespace finestruct
