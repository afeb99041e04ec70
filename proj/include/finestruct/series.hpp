#pragma once
/**
 * @file series.hpp
 * @brief *-Taylor, spherical and Laurent expansions, their fine-structure transforms,
 *        closed non-real forms, the Taylor/spherical coefficient relation and the
 *        rebased evaluation about the real point p0.
 */

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "geometry.hpp"
#include "kernels.hpp"
#include "operators.hpp"
#include "quaternion.hpp"
#include "star.hpp"

namespace finestruct {

enum class SeriesKind { star_taylor, spherical, star_laurent, spherical_laurent };

inline std::string_view series_kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::star_taylor: return "star_taylor";
        case SeriesKind::spherical: return "spherical";
        case SeriesKind::star_laurent: return "star_laurent";
        case SeriesKind::spherical_laurent: return "spherical_laurent";
    }
    return "?";
}

inline SeriesKind parse_series_kind(std::string_view s) {
    for (auto k : {SeriesKind::star_taylor, SeriesKind::spherical, SeriesKind::star_laurent,
                   SeriesKind::spherical_laurent})
        if (series_kind_name(k) == s) return k;
    throw std::invalid_argument("unknown series kind: " + std::string(s));
}

inline bool is_laurent(SeriesKind k) { return k == SeriesKind::star_laurent || k == SeriesKind::spherical_laurent; }
inline bool is_spherical(SeriesKind k) { return k == SeriesKind::spherical || k == SeriesKind::spherical_laurent; }

/**
 * Expansion about p. Star kinds use (q-p)^{*n} a_n, |n| <= N.
 * Spherical kinds use Q_p^n(q)[a_{2n} + (q-p) a_{2n+1}] for block indices |n| <= N.
 */
struct SeriesSpec {
    SeriesKind kind = SeriesKind::star_taylor;
    Quaternion center;
    std::map<int, Quaternion> coeffs;
    int N = 32;

    Quaternion a(int n) const {
        auto it = coeffs.find(n);
        return it == coeffs.end() ? Quaternion{} : it->second;
    }

    void validate() const {
        if (N < 0) throw std::invalid_argument("truncation N must be non-negative");
        if (!is_laurent(kind) && !coeffs.empty() && coeffs.begin()->first < 0)
            throw std::invalid_argument("non-Laurent series cannot carry negative indices");
    }
};

struct SeriesValue {
    Quaternion value;
    double tail_estimate = 0.0;
    bool outside_region = false;
};

namespace detail {

/// Dense magnitudes |a_n| for n = 0..max (sign = +1) or |a_{-n}| for n = 0..max (sign = -1).
inline std::vector<Quaternion> dense_side(const std::map<int, Quaternion>& c, int sign, int limit) {
    std::vector<Quaternion> v;
    int top = 0;
    for (const auto& [k, x] : c)
        if (k * sign > top && std::abs(k) <= limit) top = k * sign;
    v.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        auto it = c.find(sign * n);
        if (it != c.end()) v[n] = it->second;
    }
    return v;
}

/// Block magnitudes max(|a_{2n}|, |a_{2n+1}|) as a pseudo-coefficient sequence.
inline std::vector<Quaternion> block_side(const SeriesSpec& s, int sign) {
    std::vector<Quaternion> v(s.N + 1);
    for (int n = 0; n <= s.N; ++n) {
        const int b = sign * n;
        v[n] = Quaternion{std::max(norm(s.a(2 * b)), norm(s.a(2 * b + 1)))};
    }
    return v;
}

inline std::optional<Region> convergence_region(const SeriesSpec& s) {
    const Quaternion p = s.center;
    const double inf = std::numeric_limits<double>::infinity();
    const auto outer = [&](const std::vector<Quaternion>& v) {
        return v.size() >= 8 ? radius_estimate(v, RadiusSide::taylor).value : inf;
    };
    const auto inner = [&](const std::vector<Quaternion>& v) {
        return v.size() >= 8 ? radius_estimate(v, RadiusSide::laurent_inner).value : 0.0;
    };
    switch (s.kind) {
        case SeriesKind::star_taylor: {
            const double R = outer(dense_side(s.coeffs, 1, s.N));
            if (!std::isfinite(R)) return std::nullopt;
            return Region::ball(RegionTag::sigma_ball, p, R);
        }
        case SeriesKind::star_laurent: {
            const double R2 = outer(dense_side(s.coeffs, 1, s.N));
            const double R1 = inner(dense_side(s.coeffs, -1, s.N));
            if (!std::isfinite(R2)) return R1 > 0 ? std::optional(Region::shell(RegionTag::star_shell, p, R1, 1e300))
                                                  : std::nullopt;
            if (R1 <= 0) return Region::ball(RegionTag::star_dome, p, R2);
            return R1 < R2 ? std::optional(Region::shell(RegionTag::star_shell, p, R1, R2)) : std::nullopt;
        }
        case SeriesKind::spherical:
        case SeriesKind::spherical_laurent: {
            const double rho2 = outer(block_side(s, 1));
            const double rho1 = is_laurent(s.kind) ? inner(block_side(s, -1)) : 0.0;
            const double R2 = std::sqrt(rho2), R1 = std::sqrt(rho1);
            if (R1 <= 0) {
                if (!std::isfinite(R2)) return std::nullopt;
                return Region::ball(RegionTag::cassini_ball, p, R2);
            }
            return Region::shell(RegionTag::cassini_shell, p, R1, std::isfinite(R2) ? R2 : 1e300);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Partial sum with a last-term-ratio tail estimate. Points outside the estimated region are flagged, not rejected.
inline SeriesValue eval_series(const SeriesSpec& s, const Quaternion& q) {
    s.validate();
    const StarCenter c(s.center);
    const int lo = is_laurent(s.kind) ? -s.N : 0;
    KahanSum acc;
    double tail = 0.0;
    std::map<int, double> mags;
    for (int n = lo; n <= s.N; ++n) {
        Quaternion t;
        if (is_spherical(s.kind)) {
            const Quaternion a0 = s.a(2 * n), a1 = s.a(2 * n + 1);
            if (a0 == Quaternion{} && a1 == Quaternion{}) {
                mags[n] = 0.0;
                continue;
            }
            t = spherical_block(c, q, n) * (a0 + (q - c.p) * a1);
        } else {
            const Quaternion a = s.a(n);
            if (a == Quaternion{}) {
                mags[n] = 0.0;
                continue;
            }
            t = star_power(c, q, n) * a;
        }
        acc.add(t);
        mags[n] = norm(t);
    }
    if (s.N >= 1) {
        tail += geometric_tail(mags[s.N - 1], mags[s.N]);
        if (is_laurent(s.kind)) tail += geometric_tail(mags[-s.N + 1], mags[-s.N]);
    }
    SeriesValue out{acc.value(), tail, false};
    if (auto r = detail::convergence_region(s)) out.outside_region = !region_contains(*r, q);
    return out;
}

// ---------------------------------------------------------------------------
// Fine transforms

/// Result of D, Dbar or Delta applied to a series.
struct FineSeries {
    Op op = Op::D;
    SeriesKind source = SeriesKind::star_taylor;
    StarCenter center;
    /// Star kinds: n >= 0 multiplies regular(n); n = -m < 0 multiplies principal(m) Q_{c,p}^{-m-shift}.
    /// Spherical kinds: the source coefficients, transformed termwise on evaluation.
    std::map<int, Quaternion> coeffs;
    int N = 32;
    Family regular = Family::Ht;
    Family principal = Family::Hcal;
    int principal_shift = 0;
};

inline FineSeries fine_transform(const SeriesSpec& s, Op op) {
    s.validate();
    FineSeries f;
    f.op = op;
    f.source = s.kind;
    f.center = StarCenter(s.center);
    f.N = s.N;
    if (is_spherical(s.kind)) {
        f.coeffs = s.coeffs;
        return f;
    }
    switch (op) {
        case Op::D: f.regular = Family::Ht; f.principal = Family::Hcal; f.principal_shift = 0; break;
        case Op::Delta: f.regular = Family::Qt; f.principal = Family::Mcal; f.principal_shift = 1; break;
        case Op::Dbar: f.regular = Family::P2t; f.principal = Family::R2; f.principal_shift = 1; break;
        default: throw std::invalid_argument("fine_transform supports D, Dbar, Delta");
    }
    for (const auto& [k, a] : s.coeffs) {
        if (std::abs(k) > s.N) continue;
        if (k > 0) {
            switch (op) {
                case Op::D: f.coeffs[k - 1] += -2.0 * k * a; break;
                case Op::Dbar: f.coeffs[k - 1] += 2.0 * k * a; break;
                case Op::Delta:
                    if (k >= 2) f.coeffs[k - 2] += -2.0 * k * (k - 1) * a;
                    break;
                default: break;
            }
        } else if (k < 0) {
            const double c = op == Op::D ? 2.0 : op == Op::Delta ? -4.0 : -2.0;
            f.coeffs[k] += c * a;
        }
    }
    return f;
}

/// Termwise D, Dbar or Delta of a spherical (Laurent) series from the block actions.
inline Quaternion eval_fine_spherical(const SeriesSpec& s, Op op, const Quaternion& q) {
    if (!is_spherical(s.kind)) throw std::invalid_argument("eval_fine_spherical needs a spherical series");
    const StarCenter c(s.center);
    const int lo = is_laurent(s.kind) ? -s.N : 0;
    KahanSum acc;
    for (int n = lo; n <= s.N; ++n) {
        const Quaternion a0 = s.a(2 * n), a1 = s.a(2 * n + 1);
        if (!(a0 == Quaternion{})) acc.add(apply_exact(op, {TargetKind::spherical_block, c, n}, q) * a0);
        if (!(a1 == Quaternion{})) acc.add(apply_exact(op, {TargetKind::spherical_linear, c, n}, q) * a1);
    }
    return acc.value();
}

inline Quaternion eval_fine_series(const FineSeries& f, const Quaternion& q) {
    if (is_spherical(f.source)) {
        SeriesSpec s{f.source, f.center.p, f.coeffs, f.N};
        return eval_fine_spherical(s, f.op, q);
    }
    KahanSum acc;
    for (const auto& [k, b] : f.coeffs) {
        if (k >= 0) acc.add(eval_family(f.regular, k, q, f.center) * b);
        else acc.add(eval_family(f.principal, -k, q, f.center) * qc_power(f.center.p, q, k - f.principal_shift) * b);
    }
    return acc.value();
}

/// Human-readable basis description of a fine series.
inline std::string fine_basis_name(const FineSeries& f) {
    if (is_spherical(f.source)) return std::string(op_name(f.op)) + " of spherical blocks";
    std::string s(family_name(f.regular));
    if (is_laurent(f.source)) {
        s += " / ";
        s += family_name(f.principal);
        s += f.principal_shift ? " Q_c^{-n-1}" : " Q_c^{-n}";
    }
    return s;
}

/// Closed non-real forms of D, Dbar, Delta on star series (Taylor or Laurent).
inline Quaternion closed_fine_series(const SeriesSpec& s, Op op, const Quaternion& q) {
    if (is_spherical(s.kind)) throw std::invalid_argument("closed forms cover star series only");
    if (is_real(q)) throw real_axis_error("closed fine-series forms need a non-real q");
    const StarCenter c(s.center);
    const Quaternion w = inv(vec(q));
    KahanSum jump, d0;
    for (const auto& [n, a] : s.coeffs) {
        if (std::abs(n) > s.N) continue;
        jump.add((conj_star_power(c, q, n) - star_power(c, q, n)) * a);
        if (n != 0) d0.add(static_cast<double>(n) * star_power(c, q, n - 1) * a);
    }
    switch (op) {
        case Op::D: return w * jump.value();
        case Op::Delta: return -2.0 * (w * d0.value()) - w * w * jump.value();
        case Op::Dbar: return 2.0 * d0.value() - w * jump.value();
        default: break;
    }
    throw std::invalid_argument("closed forms exist for D, Dbar, Delta");
}

// ---------------------------------------------------------------------------
// Taylor / spherical relation

struct RelationSides {
    Quaternion lhs, rhs;
    std::vector<Quaternion> b;
};

/**
 * lhs = sum_{n<=N} (q-p)^{*n} b_n with b_0 = c_0 a_0, b_n = c_n a_{2n} + c_{n-1} a_{2n-1};
 * rhs = sum_{n<=N} V_p^n(Q_p^n) a_{2n} + sum_{n<N} V_p^n(Q_p^n (q-p)) a_{2n+1}.
 */
inline RelationSides taylor_spherical_relation(const std::map<int, Quaternion>& a, const Quaternion& q,
                                               const Quaternion& p, int N) {
    const StarCenter c(p);
    const auto A = [&](int k) {
        auto it = a.find(k);
        return it == a.end() ? Quaternion{} : it->second;
    };
    RelationSides r;
    r.b.resize(N + 1);
    KahanSum lhs, rhs;
    for (int n = 0; n <= N; ++n) {
        r.b[n] = appell_cn(n) * A(2 * n) + (n > 0 ? appell_cn(n - 1) * A(2 * n - 1) : Quaternion{});
        lhs.add(star_power(c, q, n) * r.b[n]);
        rhs.add(global_power_on_block(n, n, c, q, false) * A(2 * n));
        if (n < N) rhs.add(global_power_on_block(n, n, c, q, true) * A(2 * n + 1));
    }
    r.lhs = lhs.value();
    r.rhs = rhs.value();
    return r;
}

// ---------------------------------------------------------------------------
// Rebased evaluation about the real point p0

enum class RebaseRegime { automatic, outer, inner };

/**
 * Rewrites a spherical (Laurent) series as sum_j (q-p0)^j d_j. Positive blocks expand by the
 * binomial theorem; negative blocks expand in powers of (p1/(q-p0))^2 (outer regime, |p1| < |q-p0|)
 * or ((q-p0)/p1)^2 (inner regime), truncated after K terms.
 */
inline std::map<int, Quaternion> rebase_spherical(const SeriesSpec& s, RebaseRegime regime, int K = 80) {
    if (!is_spherical(s.kind)) throw std::invalid_argument("rebasing applies to spherical series");
    if (regime == RebaseRegime::automatic) throw std::invalid_argument("regime must be resolved before rebasing");
    const StarCenter c(s.center);
    const Quaternion Ip = c.Ip ? c.Ip->q() : Quaternion{};
    const double p1 = c.p1;
    std::map<int, Quaternion> d;
    const auto binom = [](int n, int k) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    const auto put = [&](int j, double w, int n) {
        // w x^j [a_{2n} + (x - p1 I) a_{2n+1}]
        const Quaternion a0 = s.a(2 * n), a1 = s.a(2 * n + 1);
        d[j] += w * (a0 - p1 * (Ip * a1));
        d[j + 1] += w * a1;
    };
    const int lo = is_laurent(s.kind) ? -s.N : 0;
    for (int n = lo; n <= s.N; ++n) {
        if (s.a(2 * n) == Quaternion{} && s.a(2 * n + 1) == Quaternion{}) continue;
        if (n >= 0) {
            for (int k = 0; k <= n; ++k) put(2 * k, binom(n, k) * std::pow(p1, 2 * (n - k)), n);
            continue;
        }
        const int m = -n;
        const int kmax = p1 == 0.0 ? 0 : K;
        for (int k = 0; k <= kmax; ++k) {
            const double sg = k % 2 ? -1.0 : 1.0;
            if (regime == RebaseRegime::outer)
                put(-2 * (m + k), sg * binom(m + k - 1, k) * std::pow(p1, 2 * k), n);
            else
                put(2 * k, sg * binom(m + k - 1, k) * std::pow(p1, -2 * (m + k)), n);
        }
    }
    return d;
}

/// op applied to x^j at x = q - p0 (op = d_q0 is treated as the identity map here).
inline Quaternion power_action(std::optional<Op> op, int j, const Quaternion& x) {
    if (!op) return ipow(x, j);
    if (j >= 0) {
        switch (*op) {
            case Op::D: return -2.0 * j * eval_family(Family::H, j - 1, x);
            case Op::Delta: return -2.0 * j * (j - 1) * eval_family(Family::CA, j - 2, x);
            case Op::Dbar: return j == 0 ? Quaternion{} : 2.0 * j * eval_family(Family::P2, j - 1, x);
            default: break;
        }
    } else {
        const int m = -j;
        const double r2 = norm2(x);
        switch (*op) {
            case Op::D: return 2.0 * eval_family(Family::Pneg, m, x) / std::pow(r2, m);
            case Op::Delta: return -4.0 * eval_family(Family::S, m, x) / std::pow(r2, m + 1);
            case Op::Dbar: return -2.0 * eval_family(Family::R, m, x) / std::pow(r2, m + 1);
            default: break;
        }
    }
    throw std::invalid_argument("rebased evaluation supports D, Dbar, Delta");
}

/// Evaluates f (op empty) or op f through the rebased expansion about p0.
inline Quaternion rebased_eval(const SeriesSpec& s, std::optional<Op> op, const Quaternion& q,
                               RebaseRegime regime = RebaseRegime::automatic, int K = 80) {
    const StarCenter c(s.center);
    const Quaternion x = q - c.p0;
    if (regime == RebaseRegime::automatic) regime = c.p1 < norm(x) ? RebaseRegime::outer : RebaseRegime::inner;
    KahanSum acc;
    for (const auto& [j, dj] : rebase_spherical(s, regime, K)) acc.add(power_action(op, j, x) * dj);
    return acc.value();
}

// ---------------------------------------------------------------------------
// Expansions of S_L^{-1} as series specs

/// S_L^{-1}(p, .) as a *-Taylor spec: about 0 (a_n = p^{-1-n}) or about p+1 (a_n = -(-1)^n).
inline SeriesSpec expand_S_L_inv(const Quaternion& p, KernelCenter where, int N = 32) {
    SeriesSpec s;
    s.kind = SeriesKind::star_taylor;
    s.N = N;
    if (where == KernelCenter::origin) {
        s.center = Quaternion{};
        const Quaternion pi = inv(p);
        for (int n = 0; n <= N; ++n) s.coeffs[n] = pow(pi, n + 1);
    } else {
        s.center = p + 1.0;
        for (int n = 0; n <= N; ++n) s.coeffs[n] = Quaternion{n % 2 ? 1.0 : -1.0};
    }
    return s;
}

}  // namespace finestruct
