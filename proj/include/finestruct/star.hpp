#pragma once
/**
 * @file star.hpp
 * @brief Slice functions, *-products, star powers (q-p)^{*n} and spherical blocks.
 *
 * Two-variable star powers are evaluated on the complex plane of p, where all
 * factors commute, and extended to q with the representation formula.
 */

#include <complex>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quaternion.hpp"

namespace finestruct {

using cplx = std::complex<double>;

/// Scale used for relative singularity thresholds.
inline double point_scale(const Quaternion& p, const Quaternion& q) { return 1.0 + norm2(p) + norm2(q); }

inline constexpr double kSingularTol = 1e-12;

// ---------------------------------------------------------------------------
// Slice functions

/// f(u + Iv) = alpha(u,v) + I beta(u,v), alpha even and beta odd in v.
class SliceFunction {
public:
    using AlphaBeta = std::pair<Quaternion, Quaternion>;
    using Eval = std::function<AlphaBeta(double, double)>;

    SliceFunction() : eval_([](double, double) { return AlphaBeta{}; }) {}
    explicit SliceFunction(Eval e) : eval_(std::move(e)) {}

    /// Recover (alpha, beta) from a pointwise left slice function using the slice C_J, J = e1.
    static SliceFunction from_values(std::function<Quaternion(const Quaternion&)> f) {
        return SliceFunction([f = std::move(f)](double u, double v) {
            const ImaginaryUnit J{};
            const Quaternion fp = f(J.at(u, v));
            const Quaternion fm = f(J.at(u, -v));
            return AlphaBeta{0.5 * (fp + fm), 0.5 * (J.q() * (fm - fp))};
        });
    }

    /// Sum of q^n a_n with coefficients on the right.
    static SliceFunction polynomial(std::vector<Quaternion> coeffs) {
        return SliceFunction([c = std::move(coeffs)](double u, double v) {
            AlphaBeta r{};
            cplx z{1.0, 0.0};
            const cplx w{u, v};
            for (const auto& a : c) {
                r.first += z.real() * a;
                r.second += z.imag() * a;
                z *= w;
            }
            return r;
        });
    }

    static SliceFunction constant(const Quaternion& a) { return polynomial({a}); }

    AlphaBeta alpha_beta(double u, double v) const { return eval_(u, v); }

    Quaternion operator()(const Quaternion& q) const {
        const auto c = slice_coords(q);
        const auto [a, b] = eval_(c.u, c.v);
        if (!c.I) return a;
        return a + c.I->q() * b;
    }

    /// Value at u + Iv for a prescribed unit (v may be negative).
    Quaternion at(double u, double v, const ImaginaryUnit& I) const {
        const auto [a, b] = eval_(u, v);
        return a + I.q() * b;
    }

    /// Intrinsic test: alpha, beta real-valued on a few sample points.
    bool is_intrinsic(double tol = 1e-12) const {
        for (double u : {-0.7, 0.3, 1.1})
            for (double v : {0.2, 0.9}) {
                const auto [a, b] = eval_(u, v);
                if (vec_norm(a) > tol * (1 + norm(a)) || vec_norm(b) > tol * (1 + norm(b))) return false;
            }
        return true;
    }

private:
    Eval eval_;
};

/// f *_L g as a slice function.
inline SliceFunction star_product(SliceFunction f, SliceFunction g) {
    return SliceFunction([f = std::move(f), g = std::move(g)](double u, double v) {
        const auto [a, b] = f.alpha_beta(u, v);
        const auto [a1, b1] = g.alpha_beta(u, v);
        return SliceFunction::AlphaBeta{a * a1 - b * b1, a * b1 + b * a1};
    });
}

inline Quaternion star_mul_left(const SliceFunction& f, const SliceFunction& g, const Quaternion& q) {
    return star_product(f, g)(q);
}

inline SliceFunction slice_conjugate(SliceFunction f) {
    return SliceFunction([f = std::move(f)](double u, double v) {
        const auto [a, b] = f.alpha_beta(u, v);
        return SliceFunction::AlphaBeta{conj(a), conj(b)};
    });
}

inline SliceFunction symmetrization(const SliceFunction& f) { return star_product(f, slice_conjugate(f)); }

/// (f^s)^{-1} f^c, with f^s intrinsic so the product is pointwise.
inline SliceFunction star_inverse(const SliceFunction& f) {
    const SliceFunction fs = symmetrization(f);
    const SliceFunction fc = slice_conjugate(f);
    return SliceFunction([fs, fc](double u, double v) {
        // f^s = A + I B with A, B real: invert as the complex number A + iB.
        const auto [A, B] = fs.alpha_beta(u, v);
        const auto [c, d] = fc.alpha_beta(u, v);
        const cplx s{A.q0, B.q0};
        const double m = std::norm(s);
        if (std::sqrt(m) <= kSingularTol * (1.0 + u * u + v * v))
            throw singularity_error("star_inverse: zero of the symmetrization", std::sqrt(m));
        const cplx r = 1.0 / s;
        return SliceFunction::AlphaBeta{r.real() * c - r.imag() * d, r.real() * d + r.imag() * c};
    });
}

enum class StarUnary { conjugate, symmetrization, star_inverse };

inline Quaternion star_unary(const SliceFunction& f, StarUnary kind, const Quaternion& q) {
    switch (kind) {
        case StarUnary::conjugate: return slice_conjugate(f)(q);
        case StarUnary::symmetrization: return symmetrization(f)(q);
        case StarUnary::star_inverse: return star_inverse(f)(q);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Star powers

/// p = p0 + I_p p1.
struct StarCenter {
    Quaternion p;
    double p0 = 0.0;
    double p1 = 0.0;
    std::optional<ImaginaryUnit> Ip;

    StarCenter() = default;
    StarCenter(const Quaternion& x) : p(x) {  // NOLINT
        const auto c = slice_coords(x);
        p0 = c.u;
        p1 = c.v;
        Ip = c.I;
    }
    bool is_real() const { return !Ip.has_value(); }
};

/// Integer power of a complex number; negative exponents divide.
inline cplx cpow_int(cplx z, int n) {
    cplx r{1.0, 0.0};
    cplx b = n >= 0 ? z : 1.0 / z;
    for (unsigned k = static_cast<unsigned>(n >= 0 ? n : -n); k; k >>= 1u) {
        if (k & 1u) r *= b;
        b *= b;
    }
    return r;
}

/// Q_{c,p}(q) = p^2 - 2 q0 p + |q|^2.
inline Quaternion qc(const Quaternion& p, const Quaternion& q) { return p * p - 2.0 * q.q0 * p + norm2(q); }

inline void check_off_sphere(const Quaternion& p, const Quaternion& q) {
    const double m = norm(qc(p, q));
    if (m <= kSingularTol * point_scale(p, q)) throw singularity_error("q lies on the sphere [p]", m);
}

/**
 * (q-p)^{*a} * (qbar-p)^{*b}, a, b in Z. On the slice of p every factor commutes, so the
 * value there is an ordinary complex product; the representation formula carries it to q.
 * This avoids the cancellation of the expanded binomial sums.
 */
inline Quaternion star_pair(const StarCenter& c, const Quaternion& q, int a, int b) {
    if (a < 0 || b < 0) check_off_sphere(c.p, q);
    const auto sq = slice_coords(q);
    const ImaginaryUnit J = c.Ip ? *c.Ip : (sq.I ? *sq.I : ImaginaryUnit{});
    const cplx pc{c.p0, c.p1};
    const auto T = [&](cplx x) { return cpow_int(x - pc, a) * cpow_int(std::conj(x) - pc, b); };
    const Quaternion fp = J.embed(T({sq.u, sq.v}));
    if (!sq.I) return fp;
    const Quaternion fm = J.embed(T({sq.u, -sq.v}));
    return 0.5 * (fp + fm) + 0.5 * (sq.I->q() * J.q() * (fm - fp));
}

inline Quaternion qc_checked_inverse(const Quaternion& p, const Quaternion& q) {
    const Quaternion Q = qc(p, q);
    const double m = norm(Q);
    if (m <= kSingularTol * point_scale(p, q)) throw singularity_error("q lies on the sphere [p]", m);
    return inv(Q);
}

/// Q_{c,p}^n(q) for n in Z.
inline Quaternion qc_power(const Quaternion& p, const Quaternion& q, int n) {
    if (n >= 0) return pow(qc(p, q), static_cast<unsigned>(n));
    return pow(qc_checked_inverse(p, q), static_cast<unsigned>(-n));
}

/// (q-p)^{*n}, n in Z. For n < 0 this equals (qbar-p)^{*|n|} Q_{c,p}^{-|n|}(q).
inline Quaternion star_power(const StarCenter& c, const Quaternion& q, int n) { return star_pair(c, q, n, 0); }

/// Expanded form sum_r C(n,r) q^r (-p)^{n-r}, n >= 0. Loses accuracy for large n; kept as a reference.
inline Quaternion star_power_binomial(const Quaternion& p, const Quaternion& q, int n) {
    if (n < 0) throw std::invalid_argument("expanded star power needs n >= 0");
    Quaternion s{};
    double c = 1.0;
    for (int r = 0; r <= n; ++r) {
        s += c * pow(q, static_cast<unsigned>(r)) * pow(-p, static_cast<unsigned>(n - r));
        c = c * (n - r) / (r + 1);
    }
    return s;
}

/// (qbar-p)^{*n}, n in Z. For n < 0 this equals (q-p)^{*|n|} Q_{c,p}^{-|n|}(q).
inline Quaternion conj_star_power(const StarCenter& c, const Quaternion& q, int n) { return star_pair(c, q, 0, n); }

/// (q - p0)^2 + p1^2.
inline Quaternion spherical_base(const StarCenter& c, const Quaternion& q) {
    const Quaternion d = q - c.p0;
    return d * d + c.p1 * c.p1;
}

/// Q_p^n(q) = ((q-p0)^2 + p1^2)^n, n in Z.
inline Quaternion spherical_block(const StarCenter& c, const Quaternion& q, int n) {
    const Quaternion w = spherical_base(c, q);
    if (n >= 0) return pow(w, static_cast<unsigned>(n));
    const double m = norm(w);
    if (m <= kSingularTol * point_scale(c.p, q)) throw singularity_error("q lies on the sphere [p]", m);
    return pow(inv(w), static_cast<unsigned>(-n));
}

/// 1/2 [f(u+Iv) + f(u-Iv)] + (I_q I / 2)[f(u-Iv) - f(u+Iv)].
inline Quaternion representation_eval(const Quaternion& f_plus, const Quaternion& f_minus, const ImaginaryUnit& I,
                                      const ImaginaryUnit& Iq) {
    return 0.5 * (f_plus + f_minus) + 0.5 * (Iq.q() * I.q() * (f_minus - f_plus));
}

/// Evaluates f at q from its restriction to the slice C_I.
inline Quaternion representation_eval(const std::function<Quaternion(const Quaternion&)>& f, const ImaginaryUnit& I,
                                      const Quaternion& q) {
    const auto c = slice_coords(q);
    const ImaginaryUnit Iq = c.I ? *c.I : I;
    return representation_eval(f(I.at(c.u, c.v)), f(I.at(c.u, -c.v)), I, Iq);
}

}  // namespace finestruct
