#pragma once
/**
 * @file geometry.hpp
 * @brief Slice distances, convergence regions and coefficient-based radius estimates.
 */

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quaternion.hpp"
#include "star.hpp"

namespace finestruct {

inline constexpr double kCoplanarTol = 1e-10;

/// True when q and p lie in a common complex plane C_I.
inline bool coplanar(const Quaternion& q, const Quaternion& p) {
    const auto cq = slice_coords(q), cp = slice_coords(p);
    if (!cq.I || !cp.I) return true;
    const Quaternion a = cq.I->q(), b = cp.I->q();
    return norm(a - b) < kCoplanarTol || norm(a + b) < kCoplanarTol;
}

enum class DistanceKind { sigma, tau, cassini };

inline DistanceKind parse_distance(std::string_view s) {
    if (s == "sigma") return DistanceKind::sigma;
    if (s == "tau") return DistanceKind::tau;
    if (s == "cassini") return DistanceKind::cassini;
    throw std::invalid_argument("unknown distance: " + std::string(s));
}

inline double distance(DistanceKind kind, const Quaternion& q, const Quaternion& p) {
    if (kind == DistanceKind::cassini) return std::sqrt(norm(spherical_base(StarCenter(p), q)));
    if (coplanar(q, p)) return norm(q - p);
    const double a = q.q0 - p.q0;
    const double b = kind == DistanceKind::sigma ? vec_norm(q) + vec_norm(p) : vec_norm(q) - vec_norm(p);
    return std::hypot(a, b);
}

// ---------------------------------------------------------------------------
// Regions

enum class RegionTag { sigma_ball, star_dome, star_shell, cassini_ball, cassini_shell };

inline std::string_view region_name(RegionTag t) {
    switch (t) {
        case RegionTag::sigma_ball: return "sigma_ball";
        case RegionTag::star_dome: return "star_dome";
        case RegionTag::star_shell: return "star_shell";
        case RegionTag::cassini_ball: return "cassini_ball";
        case RegionTag::cassini_shell: return "cassini_shell";
    }
    return "?";
}

inline RegionTag parse_region_tag(std::string_view s) {
    for (auto t : {RegionTag::sigma_ball, RegionTag::star_dome, RegionTag::star_shell, RegionTag::cassini_ball,
                   RegionTag::cassini_shell})
        if (region_name(t) == s) return t;
    throw std::invalid_argument("unknown region tag: " + std::string(s));
}

inline bool is_shell(RegionTag t) { return t == RegionTag::star_shell || t == RegionTag::cassini_shell; }

/// Open convergence set. Balls use r_outer only; shells use r_inner < r_outer.
struct Region {
    RegionTag tag = RegionTag::sigma_ball;
    Quaternion p;
    double r_inner = 0.0;
    double r_outer = 1.0;

    static Region ball(RegionTag tag, const Quaternion& p, double R) {
        if (is_shell(tag)) throw std::invalid_argument("shell regions need two radii");
        if (!(R > 0.0)) throw std::invalid_argument("region radius must be positive");
        return {tag, p, 0.0, R};
    }
    static Region shell(RegionTag tag, const Quaternion& p, double R1, double R2) {
        if (!is_shell(tag)) throw std::invalid_argument("ball regions take one radius");
        if (!(R1 > 0.0) || !(R1 < R2)) throw std::invalid_argument("shell radii must satisfy 0 < R1 < R2");
        return {tag, p, R1, R2};
    }
};

namespace detail {

/// Both x +- y I_p, evaluated in the plane of p, satisfy lo < |. - p| < hi (or |q-p| itself when coplanar).
inline bool plane_annulus(const Quaternion& q, const Quaternion& p, double lo, double hi) {
    const auto in = [&](double d) { return d > lo && d < hi; };
    if (coplanar(q, p)) return in(norm(q - p));
    const auto c = slice_coords(q);
    const ImaginaryUnit Ip = *slice_coords(p).I;
    return in(norm(Ip.at(c.u, c.v) - p)) && in(norm(Ip.at(c.u, -c.v) - p));
}

}  // namespace detail

inline bool region_contains(const Region& r, const Quaternion& q) {
    switch (r.tag) {
        case RegionTag::sigma_ball:
            return distance(DistanceKind::sigma, q, r.p) < r.r_outer;
        case RegionTag::star_dome:
            return detail::plane_annulus(q, r.p, -1.0, r.r_outer);
        case RegionTag::star_shell:
            return detail::plane_annulus(q, r.p, r.r_inner, r.r_outer);
        case RegionTag::cassini_ball: {
            const double m = norm(spherical_base(StarCenter(r.p), q));
            return m < r.r_outer * r.r_outer;
        }
        case RegionTag::cassini_shell: {
            const double m = norm(spherical_base(StarCenter(r.p), q));
            return m > r.r_inner * r.r_inner && m < r.r_outer * r.r_outer;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Radius estimation

enum class RadiusSide { taylor, laurent_inner };

struct RadiusEstimate {
    double value = 0.0;
    bool unbounded = false;  // taylor side: root sequence still collapsing, series looks entire
};

inline constexpr double kRadiusCap = 1e6;

/**
 * Estimates limsup |a_n|^{1/n} by the maximum over n in [N/2, N], N = coeffs.size() - 1.
 * For the Laurent inner radius coeffs[n] holds a_{-n}.
 */
inline RadiusEstimate radius_estimate(const std::vector<Quaternion>& coeffs, RadiusSide side) {
    if (coeffs.size() < 8) throw std::invalid_argument("radius_estimate needs at least 8 coefficients");
    const int N = static_cast<int>(coeffs.size()) - 1;
    const int lo = std::max(1, N / 2);
    double mx = 0.0;
    for (int n = lo; n <= N; ++n) mx = std::max(mx, std::pow(norm(coeffs[n]), 1.0 / n));
    const double first = std::pow(norm(coeffs[lo]), 1.0 / lo);
    const double last = std::pow(norm(coeffs[N]), 1.0 / N);
    const double inf = std::numeric_limits<double>::infinity();
    if (side == RadiusSide::laurent_inner) return {mx, false};
    if (mx == 0.0) return {inf, true};
    const bool collapsing = first > 0.0 && last < 0.75 * first;
    if (collapsing || 1.0 / mx > kRadiusCap) return {inf, true};
    return {1.0 / mx, false};
}

}  // namespace finestruct
