#pragma once
/**
 * @file contour.hpp
 * @brief Periodic trapezoid quadrature on circles in a slice C_I: Cauchy formula and the
 *        D, Dbar, Delta integral representations.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "kernels.hpp"
#include "operators.hpp"
#include "quaternion.hpp"

namespace finestruct {

/// Positively oriented circle c + r e^{I theta} in C_I with a real center.
struct Contour {
    ImaginaryUnit I;
    double center = 0.0;
    double radius = 1.0;
    int nodes = 512;

    Contour() = default;
    Contour(const ImaginaryUnit& plane, std::complex<double> c, double r, int m) : I(plane), center(c.real()), radius(r), nodes(m) {
        if (c.imag() != 0.0) throw std::invalid_argument("contour center must be real (axially symmetric domain)");
        if (!(r > 0.0)) throw std::invalid_argument("contour radius must be positive");
        if (m < 8) throw std::invalid_argument("contour needs at least 8 nodes");
    }

    Quaternion node(int j) const {
        const double t = 2.0 * std::numbers::pi * j / nodes;
        return I.at(center + radius * std::cos(t), radius * std::sin(t));
    }

    double spacing() const { return 2.0 * std::numbers::pi * radius / nodes; }
};

namespace detail {

/// Distance from the slice images u +- Iv of q to the circle.
inline double contour_gap(const Contour& c, const Quaternion& q) {
    const auto s = slice_coords(q);
    const double d = std::hypot(s.u - c.center, s.v);  // same for u - Iv
    return std::abs(d - c.radius);
}

inline void check_gap(const Contour& c, const Quaternion& q) {
    const double g = contour_gap(c, q);
    if (g < 2.0 * c.spacing()) throw contour_error("evaluation point too close to the contour", g);
}

/// (1/2pi) sum K(p_j, q) (p_j - c) f(p_j) dtheta.
template <class Kernel>
Quaternion trapezoid(const Contour& c, const Quaternion& q, const QFunction& f, Kernel&& K) {
    check_gap(c, q);
    KahanSum acc;
    for (int j = 0; j < c.nodes; ++j) {
        const Quaternion p = c.node(j);
        acc.add(K(p, q) * (p - c.center) * f(p));
    }
    return acc.value() / static_cast<double>(c.nodes);
}

}  // namespace detail

/// f(q) = (1/2pi) \oint S_L^{-1}(p,q) dp_I f(p).
inline Quaternion cauchy_eval(const QFunction& f, const Quaternion& q, const Contour& c) {
    return detail::trapezoid(c, q, f, [](const Quaternion& p, const Quaternion& x) { return S_L_inv(p, x); });
}

/// D f: -(1/pi) with Q_{c,p}^{-1}; Dbar f: (1/2pi) with P_2^L; Delta f: (1/2pi) with F_L.
inline Quaternion fine_integral(Op op, const QFunction& f, const Quaternion& q, const Contour& c) {
    switch (op) {
        case Op::D:
            return -2.0 * detail::trapezoid(c, q, f, [](const Quaternion& p, const Quaternion& x) {
                       return eval_kernel(KernelId::Q_c_inv, p, x);
                   });
        case Op::Dbar:
            return detail::trapezoid(c, q, f,
                                     [](const Quaternion& p, const Quaternion& x) { return eval_kernel(KernelId::P2_L, p, x); });
        case Op::Delta:
            return detail::trapezoid(c, q, f,
                                     [](const Quaternion& p, const Quaternion& x) { return eval_kernel(KernelId::F_L, p, x); });
        default: break;
    }
    throw std::invalid_argument("fine_integral supports D, Dbar, Delta");
}

/// Max pairwise deviation of the integral over several planes (op empty: Cauchy formula).
inline double slice_independence_check(const QFunction& f, const Quaternion& q, const std::vector<ImaginaryUnit>& planes,
                                       double center, double radius, int nodes, std::optional<Op> op = {}) {
    std::vector<Quaternion> v;
    for (const auto& I : planes) {
        const Contour c(I, center, radius, nodes);
        v.push_back(op ? fine_integral(*op, f, q, c) : cauchy_eval(f, q, c));
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) dev = std::max(dev, norm(v[i] - v[j]));
    return dev;
}

}  // namespace finestruct
