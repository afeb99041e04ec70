#pragma once
/**
 * @file kernels.hpp
 * @brief Cauchy-type kernels: S_L^{-1}, S_R^{-1}, Q_{c,p}^{-n}, F_L, P_2^L, E, and their series.
 */

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "families.hpp"
#include "geometry.hpp"
#include "quaternion.hpp"
#include "star.hpp"

namespace finestruct {

enum class KernelId { S_L_inv_I, S_L_inv_II, S_R_inv_I, S_R_inv_II, Q_c_inv, F_L, P2_L, E };

inline std::string_view kernel_name(KernelId k) {
    switch (k) {
        case KernelId::S_L_inv_I: return "S_L_inv_I";
        case KernelId::S_L_inv_II: return "S_L_inv_II";
        case KernelId::S_R_inv_I: return "S_R_inv_I";
        case KernelId::S_R_inv_II: return "S_R_inv_II";
        case KernelId::Q_c_inv: return "Q_c_inv";
        case KernelId::F_L: return "F_L";
        case KernelId::P2_L: return "P2_L";
        case KernelId::E: return "E";
    }
    return "?";
}

/// "S_L_inv" is accepted as an alias of form II.
inline KernelId parse_kernel(std::string_view s) {
    if (s == "S_L_inv") return KernelId::S_L_inv_II;
    if (s == "S_R_inv") return KernelId::S_R_inv_II;
    for (auto k : {KernelId::S_L_inv_I, KernelId::S_L_inv_II, KernelId::S_R_inv_I, KernelId::S_R_inv_II,
                   KernelId::Q_c_inv, KernelId::F_L, KernelId::P2_L, KernelId::E})
        if (kernel_name(k) == s) return k;
    throw std::invalid_argument("unknown kernel: " + std::string(s));
}

/// q^2 - 2 p0 q + |p|^2, the left-form denominator.
inline Quaternion qs(const Quaternion& p, const Quaternion& q) { return q * q - 2.0 * p.q0 * q + norm2(p); }

inline Quaternion qs_checked_inverse(const Quaternion& p, const Quaternion& q) {
    const Quaternion Q = qs(p, q);
    const double m = norm(Q);
    if (m <= kSingularTol * point_scale(p, q)) throw singularity_error("q lies on the sphere [p]", m);
    return inv(Q);
}

inline Quaternion S_L_inv(const Quaternion& p, const Quaternion& q) { return (p - conj(q)) * qc_checked_inverse(p, q); }

/// d/dq0 of S_L^{-1}(p,q) = -Q^{-1} + 2 (p - qbar)(p - q0) Q^{-2}.
inline Quaternion d0_S_L_inv(const Quaternion& p, const Quaternion& q) {
    const Quaternion Qi = qc_checked_inverse(p, q);
    return -1.0 * Qi + 2.0 * (p - conj(q)) * (p - q.q0) * Qi * Qi;
}

/// E(q) = qbar / |q|^4.
inline Quaternion kernel_E(const Quaternion& q) {
    const double m2 = norm2(q);
    if (m2 == 0.0) throw singularity_error("E is singular at the origin", 0.0);
    return conj(q) / (m2 * m2);
}

/// Closed-form kernel value. For Q_c_inv, n is the (positive) power; other kernels ignore it. E ignores p.
inline Quaternion eval_kernel(KernelId id, const Quaternion& p, const Quaternion& q, int n = 1) {
    switch (id) {
        case KernelId::S_L_inv_I: return qs_checked_inverse(p, q) * (conj(p) - q);
        case KernelId::S_L_inv_II: return S_L_inv(p, q);
        case KernelId::S_R_inv_I: return (conj(p) - q) * qs_checked_inverse(p, q);
        case KernelId::S_R_inv_II: return qc_checked_inverse(p, q) * (p - conj(q));
        case KernelId::Q_c_inv:
            if (n < 1) throw std::invalid_argument("Q_c_inv power must be >= 1");
            return qc_power(p, q, -n);
        case KernelId::F_L: {
            const Quaternion Qi = qc_checked_inverse(p, q);
            return -4.0 * (p - conj(q)) * Qi * Qi;
        }
        case KernelId::P2_L: return 2.0 * (d0_S_L_inv(p, q) + qc_checked_inverse(p, q));
        case KernelId::E: return kernel_E(q);
    }
    return {};
}

/// Kernels through S_L^{-1}(p, qbar) - S_L^{-1}(p, q); q must be non-real.
inline Quaternion kernel_splitting(KernelId id, const Quaternion& p, const Quaternion& q) {
    if (is_real(q)) throw real_axis_error("splitting forms need a non-real q");
    const Quaternion w = inv(vec(q));
    const Quaternion jump = S_L_inv(p, conj(q)) - S_L_inv(p, q);
    switch (id) {
        case KernelId::Q_c_inv: return -0.5 * (w * jump);
        case KernelId::P2_L: return 2.0 * d0_S_L_inv(p, q) - w * jump;
        case KernelId::F_L: return -2.0 * (w * d0_S_L_inv(p, q)) - w * w * jump;
        default: break;
    }
    throw std::invalid_argument("splitting form exists for Q_c_inv, P2_L and F_L only");
}

/// Q_{c,p}^{-1}(q) = (q F_L - F_L p) / 4.
inline Quaternion qc_inv_from_F(const Quaternion& p, const Quaternion& q) {
    const Quaternion F = eval_kernel(KernelId::F_L, p, q);
    return 0.25 * (q * F - F * p);
}

/// P_2^L = q0 F_L - F_L p.
inline Quaternion P2_from_F(const Quaternion& p, const Quaternion& q) {
    const Quaternion F = eval_kernel(KernelId::F_L, p, q);
    return q.q0 * F - F * p;
}

/// Dbar^n F_L(p,q) = 2^{n+2} n! (-1)^n M_{n+1}(q,p) Q_{c,p}^{-n-2}(q).
inline Quaternion dbar_power_F_L(int n, const Quaternion& p, const Quaternion& q) {
    double c = std::ldexp(1.0, n + 2);
    for (int k = 2; k <= n; ++k) c *= k;
    if (n % 2) c = -c;
    return c * eval_family(Family::Mcal, n + 1, q, StarCenter(p)) * qc_power(p, q, -n - 2);
}

// ---------------------------------------------------------------------------
// Series

enum class KernelCenter { origin, shifted };

struct KernelSeriesResult {
    Quaternion value;
    double tail_estimate = 0.0;
    double last_term = 0.0;
};

/// Geometric tail from the ratio of the last two term magnitudes.
inline double geometric_tail(double prev, double last) {
    if (last == 0.0) return 0.0;
    if (prev == 0.0) return std::numeric_limits<double>::infinity();
    const double r = last / prev;
    return r < 1.0 ? last * r / (1.0 - r) : std::numeric_limits<double>::infinity();
}

/// n-th term of the kernel expansion (terms n = 0..N).
inline Quaternion kernel_series_term(KernelId id, KernelCenter c, const Quaternion& p, const Quaternion& q, int n) {
    const double s = n % 2 ? -1.0 : 1.0;
    if (id == KernelId::E) return 0.5 * (n + 1.0) * (n + 2.0) * eval_family(Family::CA, n, 1.0 - q);
    if (c == KernelCenter::origin) {
        const Quaternion pi = inv(p);
        switch (id) {
            case KernelId::S_L_inv_I:
            case KernelId::S_L_inv_II: return pow(q, n) * pow(pi, n + 1);
            case KernelId::Q_c_inv: return (n + 1.0) * eval_family(Family::H, n, q) * pow(pi, n + 2);
            case KernelId::F_L:
                return -2.0 * (n + 1.0) * (n + 2.0) * eval_family(Family::CA, n, q) * pow(pi, n + 3);
            case KernelId::P2_L: return 2.0 * (n + 1.0) * eval_family(Family::P2, n, q) * pow(pi, n + 2);
            default: break;
        }
    } else {
        const StarCenter c1(p + 1.0);
        switch (id) {
            case KernelId::S_L_inv_I:
            case KernelId::S_L_inv_II: return -s * star_power(c1, q, n);
            case KernelId::Q_c_inv: return s * (n + 1.0) * eval_family(Family::Ht, n, q, c1);
            case KernelId::F_L: return 2.0 * s * (n + 1.0) * (n + 2.0) * eval_family(Family::Qt, n, q, c1);
            case KernelId::P2_L: return 2.0 * s * (n + 1.0) * eval_family(Family::P2t, n, q, c1);
            default: break;
        }
    }
    throw std::invalid_argument("no series for kernel " + std::string(kernel_name(id)));
}

/**
 * Partial sum of terms 0..N.
 * origin: powers of p^{-1}, valid for |q| < |p|. shifted: centered at p+1, valid in the star dome of
 * radius 1 about p+1. E always expands about 1 with |q-1| < 1.
 */
inline KernelSeriesResult kernel_series(KernelId id, KernelCenter c, const Quaternion& p, const Quaternion& q,
                                        int N = 32) {
    if (N < 1) throw std::invalid_argument("truncation N must be >= 1");
    bool inside = false;
    if (id == KernelId::E) inside = norm(q - 1.0) < 1.0;
    else if (c == KernelCenter::origin) inside = norm(q) < norm(p);
    else inside = region_contains(Region::ball(RegionTag::star_dome, p + 1.0, 1.0), q);
    if (!inside) throw region_error("q lies outside the convergence region of the expansion");
    Quaternion sum{};
    double prev = 0.0, last = 0.0;
    for (int n = 0; n <= N; ++n) {
        const Quaternion t = kernel_series_term(id, c, p, q, n);
        sum += t;
        prev = last;
        last = norm(t);
    }
    return {sum, geometric_tail(prev, last), last};
}

}  // namespace finestruct
