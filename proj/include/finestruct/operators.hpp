#pragma once
/**
 * @file operators.hpp
 * @brief D, Dbar, Delta and friends: finite-difference application, closed-form actions,
 *        global-operator powers and slice representation formulas.
 */

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "families.hpp"
#include "quaternion.hpp"
#include "star.hpp"

namespace finestruct {

using QFunction = std::function<Quaternion(const Quaternion&)>;

enum class Op { D, Dbar, Delta, d_q0, Euler, Gamma, V_left, V_right };

inline Op parse_op(std::string_view s) {
    if (s == "D") return Op::D;
    if (s == "Dbar") return Op::Dbar;
    if (s == "Delta") return Op::Delta;
    if (s == "d_q0") return Op::d_q0;
    if (s == "Euler") return Op::Euler;
    if (s == "Gamma") return Op::Gamma;
    if (s == "V_left") return Op::V_left;
    if (s == "V_right") return Op::V_right;
    throw std::invalid_argument("unknown operator: " + std::string(s));
}

inline std::string_view op_name(Op op) {
    switch (op) {
        case Op::D: return "D";
        case Op::Dbar: return "Dbar";
        case Op::Delta: return "Delta";
        case Op::d_q0: return "d_q0";
        case Op::Euler: return "Euler";
        case Op::Gamma: return "Gamma";
        case Op::V_left: return "V_left";
        case Op::V_right: return "V_right";
    }
    return "?";
}

/// Kahan-compensated quaternion accumulator.
struct KahanSum {
    Quaternion sum{}, c{};
    void add(const Quaternion& x) {
        for (int i = 0; i < 4; ++i) {
            const double y = x[i] - c[i];
            const double t = sum[i] + y;
            c[i] = (t - sum[i]) - y;
            sum[i] = t;
        }
    }
    Quaternion value() const { return sum; }
};

inline double default_step(const Quaternion& q) { return 1e-3 * (1.0 + norm(q)); }

namespace fd {

inline Quaternion shifted(const Quaternion& q, int i, double d) {
    Quaternion r = q;
    r[i] += d;
    return r;
}

inline Quaternion d1_raw(const QFunction& f, const Quaternion& q, int i, double h) {
    const Quaternion a = f(shifted(q, i, 2 * h)), b = f(shifted(q, i, h));
    const Quaternion c = f(shifted(q, i, -h)), d = f(shifted(q, i, -2 * h));
    return (8.0 * (b - c) - (a - d)) / (12.0 * h);
}

inline Quaternion d2_raw(const QFunction& f, const Quaternion& q, const Quaternion& f0, int i, double h) {
    const Quaternion a = f(shifted(q, i, 2 * h)), b = f(shifted(q, i, h));
    const Quaternion c = f(shifted(q, i, -h)), d = f(shifted(q, i, -2 * h));
    return (16.0 * (b + c) - (a + d) - 30.0 * f0) / (12.0 * h * h);
}

/// Fourth-order central first derivative with one Richardson level.
inline Quaternion d1(const QFunction& f, const Quaternion& q, int i, double h) {
    return (16.0 * d1_raw(f, q, i, h / 2) - d1_raw(f, q, i, h)) / 15.0;
}

inline Quaternion d2(const QFunction& f, const Quaternion& q, int i, double h) {
    const Quaternion f0 = f(q);
    return (16.0 * d2_raw(f, q, f0, i, h / 2) - d2_raw(f, q, f0, i, h)) / 15.0;
}

inline std::array<Quaternion, 4> gradient(const QFunction& f, const Quaternion& q, double h) {
    return {d1(f, q, 0, h), d1(f, q, 1, h), d1(f, q, 2, h), d1(f, q, 3, h)};
}

}  // namespace fd

inline const std::array<Quaternion, 4>& basis() {
    static const std::array<Quaternion, 4> b{Quaternion{1.0}, e1, e2, e3};
    return b;
}

/// Finite-difference application of op at q. h <= 0 selects the default step.
inline Quaternion apply_numeric(Op op, const QFunction& f, const Quaternion& q, double h = 0.0) {
    if (h <= 0.0) h = default_step(q);
    const bool needs_vector = op == Op::Euler || op == Op::Gamma || op == Op::V_left || op == Op::V_right;
    if (needs_vector && is_real(q)) throw real_axis_error(std::string(op_name(op)) + " needs a non-real point");
    KahanSum acc;
    switch (op) {
        case Op::d_q0:
            return fd::d1(f, q, 0, h);
        case Op::D:
        case Op::Dbar: {
            const double s = op == Op::D ? 1.0 : -1.0;
            acc.add(fd::d1(f, q, 0, h));
            for (int i = 1; i < 4; ++i) acc.add(s * (basis()[i] * fd::d1(f, q, i, h)));
            return acc.value();
        }
        case Op::Delta:
            for (int i = 0; i < 4; ++i) acc.add(fd::d2(f, q, i, h));
            return acc.value();
        case Op::Euler:
            for (int k = 1; k < 4; ++k) acc.add(q[k] * fd::d1(f, q, k, h));
            return acc.value();
        case Op::Gamma: {
            const auto g = fd::gradient(f, q, h);
            for (int j = 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    acc.add(-1.0 * (basis()[j] * basis()[k] * (q[j] * g[k] - q[k] * g[j])));
            return acc.value();
        }
        case Op::V_left:
        case Op::V_right: {
            const auto g = fd::gradient(f, q, h);
            KahanSum radial;
            for (int l = 1; l < 4; ++l) radial.add(q[l] * g[l]);
            const Quaternion w = vec(q) / norm2(vec(q));
            const Quaternion r = op == Op::V_left ? w * radial.value() : radial.value() * w;
            return g[0] + r;
        }
    }
    return {};
}

/// Applies op twice in sequence (outer after inner), both numerically.
inline Quaternion apply_numeric_composed(Op outer, Op inner, const QFunction& f, const Quaternion& q, double h = 0.0) {
    const double hi = h > 0.0 ? h : default_step(q);
    return apply_numeric(outer, [&](const Quaternion& x) { return apply_numeric(inner, f, x, hi); }, q, hi);
}

// ---------------------------------------------------------------------------
// Closed-form actions

enum class TargetKind { star_power, spherical_block, spherical_linear };

/// (q-p)^{*n}, Q_p^n(q) or Q_p^n(q)(q-p).
struct Target {
    TargetKind kind = TargetKind::star_power;
    StarCenter p;
    int n = 0;
};

inline Quaternion eval_target(const Target& t, const Quaternion& q) {
    switch (t.kind) {
        case TargetKind::star_power: return star_power(t.p, q, t.n);
        case TargetKind::spherical_block: return spherical_block(t.p, q, t.n);
        case TargetKind::spherical_linear: return spherical_block(t.p, q, t.n) * (q - t.p.p);
    }
    return {};
}

namespace detail {

inline Quaternion exact_star(Op op, const StarCenter& p, int n, const Quaternion& q) {
    const auto fam = [&](Family f, int k) { return eval_family(f, k, q, p); };
    if (n >= 0) {
        switch (op) {
            case Op::D: return -2.0 * n * fam(Family::Ht, n - 1);
            case Op::Dbar: return 2.0 * n * fam(Family::P2t, n - 1);
            case Op::Delta: return -2.0 * n * (n - 1) * fam(Family::Qt, n - 2);
            default: break;
        }
    } else {
        const int m = -n;
        switch (op) {
            case Op::D: return 2.0 * fam(Family::Hcal, m) * qc_power(p.p, q, -m);
            case Op::Dbar: return -2.0 * fam(Family::R2, m) * qc_power(p.p, q, -m - 1);
            case Op::Delta: return -4.0 * fam(Family::Mcal, m) * qc_power(p.p, q, -m - 1);
            default: break;
        }
    }
    throw std::invalid_argument("apply_exact supports D, Dbar, Delta");
}

/// w(z), w'(z), w''(z) of a complex function.
struct Jet {
    cplx w, dw, ddw;
};

/**
 * D, Dbar or Delta of the intrinsic slice function g(u + Iv) = w(u' + iv) with u' = u - shift.
 * Off the real axis: Dg = -2 beta / v, Dbar g = 2 w'(q) + 2 beta / v,
 * Delta g = (2 I / v) w'(q) - 2 I beta / v^2, where w = alpha + i beta.
 */
template <class JetFn>
Quaternion intrinsic_action(Op op, const Quaternion& q, double shift, JetFn&& jet) {
    const auto c = slice_coords(q);
    const Jet j = jet(cplx{c.u - shift, c.v});
    if (!c.I) {
        switch (op) {
            case Op::D: return Quaternion{-2.0 * j.dw.real()};
            case Op::Dbar: return Quaternion{4.0 * j.dw.real()};
            case Op::Delta: return Quaternion{-2.0 * j.ddw.real()};
            default: break;
        }
        throw std::invalid_argument("apply_exact supports D, Dbar, Delta");
    }
    const double v = c.v, beta = j.w.imag();
    const Quaternion dw = c.I->embed(j.dw);
    switch (op) {
        case Op::D: return Quaternion{-2.0 * beta / v};
        case Op::Dbar: return 2.0 * dw + Quaternion{2.0 * beta / v};
        case Op::Delta: return (2.0 / v) * (c.I->q() * dw) - (2.0 * beta / (v * v)) * c.I->q();
        default: break;
    }
    throw std::invalid_argument("apply_exact supports D, Dbar, Delta");
}

/// Jet of (z^2 + c)^n z^e, e in {0, 1}, n in Z.
inline Jet block_jet(cplx z, double c, int n, int e) {
    const cplx s = z * z + c;
    const cplx s0 = cpow_int(s, n);
    const cplx s1 = n == 0 ? cplx{} : cpow_int(s, n - 1);
    const cplx s2 = (n == 0 || n == 1) ? cplx{} : cpow_int(s, n - 2);
    const double dn = n;
    if (e == 0) return {s0, 2.0 * dn * z * s1, 2.0 * dn * s1 + 4.0 * dn * (dn - 1.0) * z * z * s2};
    return {z * s0, s0 + 2.0 * dn * z * z * s1, 6.0 * dn * z * s1 + 4.0 * dn * (dn - 1.0) * z * z * z * s2};
}

inline void check_block(const StarCenter& p, int n, const Quaternion& q) {
    if (n < 0) (void)spherical_block(p, q, -1);
}

inline Quaternion exact_block(Op op, const StarCenter& p, int n, const Quaternion& q) {
    check_block(p, n, q);
    const double c = p.p1 * p.p1;
    return intrinsic_action(op, q, p.p0, [&](cplx z) { return block_jet(z, c, n, 0); });
}

/// Q_p^n(q)(q - p) = [Q_p^n(q)(q - p0)] - Q_p^n(q) p1 I_p; both brackets are intrinsic.
inline Quaternion exact_linear(Op op, const StarCenter& p, int n, const Quaternion& q) {
    check_block(p, n, q);
    const double c = p.p1 * p.p1;
    const Quaternion lin = intrinsic_action(op, q, p.p0, [&](cplx z) { return block_jet(z, c, n, 1); });
    if (!p.Ip) return lin;
    const Quaternion con = intrinsic_action(op, q, p.p0, [&](cplx z) { return block_jet(z, c, n, 0); });
    return lin - con * (p.p1 * p.Ip->q());
}

}  // namespace detail

/// Closed-form action of D, Dbar or Delta on a target.
inline Quaternion apply_exact(Op op, const Target& t, const Quaternion& q) {
    switch (t.kind) {
        case TargetKind::star_power: return detail::exact_star(op, t.p, t.n, q);
        case TargetKind::spherical_block: return detail::exact_block(op, t.p, t.n, q);
        case TargetKind::spherical_linear: return detail::exact_linear(op, t.p, t.n, q);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Global operator

/// 2^m n(n-1)...(n-m+1).
inline double global_factor(int m, int n) {
    double c = std::ldexp(1.0, m);
    for (int k = 0; k < m; ++k) c *= (n - k);
    return c;
}

/// (p-q)^{*m} = (-1)^m (q-p)^{*m}.
inline Quaternion reversed_star_power(const StarCenter& p, const Quaternion& q, int m) {
    return (m % 2 == 0 ? 1.0 : -1.0) * star_power(p, q, m);
}

/// V_p^m applied to Q_p^n(q), or to Q_p^n(q)(q-p) when with_linear_factor is set.
inline Quaternion global_power_on_block(int m, int n, const StarCenter& p, const Quaternion& q, bool with_linear_factor) {
    if (m < 0) throw std::invalid_argument("global power m must be non-negative");
    if (m > n) throw std::invalid_argument("global power m exceeds block degree n");
    const Quaternion Q = spherical_block(p, q, n - m);
    if (!with_linear_factor) return global_factor(m, n) * Q * reversed_star_power(p, q, m);
    return -global_factor(m, n) * Q * reversed_star_power(p, q, m + 1);
}

/// c_n = 2^n n! (-1)^n.
inline double appell_cn(int n) {
    double c = std::ldexp(1.0, n);
    for (int k = 2; k <= n; ++k) c *= k;
    return n % 2 == 0 ? c : -c;
}

// ---------------------------------------------------------------------------
// Representation formulas

/// Values of f on the slice C_I at u +- Iv, with their u-derivatives.
struct SliceSamples {
    ImaginaryUnit I;
    Quaternion f_plus, f_minus;
    Quaternion du_plus, du_minus;
    Quaternion duu_real;  // second u-derivative, used on the real axis only
};

/// Samples f on C_I with finite differences in u.
inline SliceSamples sample_slice(const QFunction& f, const Quaternion& q, const ImaginaryUnit& I, double h = 0.0) {
    if (h <= 0.0) h = default_step(q);
    const auto c = slice_coords(q);
    SliceSamples s{I, f(I.at(c.u, c.v)), f(I.at(c.u, -c.v)), {}, {}, {}};
    const auto along = [&](double v) { return [&, v](const Quaternion& x) { return f(I.at(x.q0, v)); }; };
    s.du_plus = fd::d1(along(c.v), Quaternion{c.u}, 0, h);
    s.du_minus = fd::d1(along(-c.v), Quaternion{c.u}, 0, h);
    if (!c.I) s.duu_real = fd::d2(along(0.0), Quaternion{c.u}, 0, h);
    return s;
}

/// D, Dbar or Delta of a slice hyperholomorphic f at q from its slice samples.
inline Quaternion rep_formula(Op op, const SliceSamples& s, const Quaternion& q) {
    const auto c = slice_coords(q);
    if (!c.I) {
        switch (op) {
            case Op::D: return -2.0 * s.du_plus;
            case Op::Dbar: return 4.0 * s.du_plus;
            case Op::Delta: return -2.0 * s.duu_real;
            default: break;
        }
        throw std::invalid_argument("rep_formula supports D, Dbar, Delta");
    }
    const Quaternion Iq = c.I->q();
    const Quaternion w = inv(vec(q));
    const Quaternion jump = Iq * s.I.q() * (s.f_minus - s.f_plus);
    const Quaternion du_at_q = representation_eval(s.du_plus, s.du_minus, s.I, *c.I);
    switch (op) {
        case Op::D: return -1.0 * (w * jump);
        case Op::Dbar: return 2.0 * du_at_q + w * jump;
        case Op::Delta: return (2.0 / c.v) * (Iq * du_at_q) - jump / (c.v * c.v);
        default: break;
    }
    throw std::invalid_argument("rep_formula supports D, Dbar, Delta");
}

// ---------------------------------------------------------------------------
// Euler and Gamma

struct FineTriple {
    Quaternion D, Dbar, Delta;
};

/// D, Dbar, Delta of a slice hyperholomorphic f expressed through E and Gamma.
inline FineTriple euler_gamma_identities(const QFunction& f, const Quaternion& q, double h = 0.0) {
    if (is_real(q)) throw real_axis_error("Euler/Gamma identities need a non-real point");
    const Quaternion E = apply_numeric(Op::Euler, f, q, h);
    const Quaternion G = apply_numeric(Op::Gamma, f, q, h);
    const Quaternion w = inv(vec(q));
    return {-1.0 * (w * G), w * (2.0 * E + G), (2.0 * E - G) / norm2(vec(q))};
}

}  // namespace finestruct
