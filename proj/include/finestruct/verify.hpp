#pragma once
/**
 * @file verify.hpp
 * @brief Randomized invariant groups, shared by the `verify` command and the acceptance runner.
 *
 * Every check reports the largest residual seen over its samples. Residuals are relative:
 * |a - b| / max(1, |b|) unless a check states its own scale. Samples are drawn from
 * per-check seeded generators, so results do not depend on the thread count.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "contour.hpp"
#include "families.hpp"
#include "kernels.hpp"
#include "operators.hpp"
#include "quaternion.hpp"
#include "series.hpp"
#include "star.hpp"

namespace finestruct::verify {

struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool reject = false;  // the residual must exceed tol (a rejected alternative form)

    bool pass() const { return !std::isnan(residual) && (reject ? residual > tol : residual <= tol); }
};

struct GroupReport {
    std::string group;
    int criterion = 0;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
    }
};

/// hardware_concurrency, capped by FINESTRUCT_THREADS when set.
inline int default_threads() {
    int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* e = std::getenv("FINESTRUCT_THREADS")) {
        const int v = std::atoi(e);
        if (v >= 1) n = std::min(n, v);
    }
    return n;
}

struct Options {
    std::uint64_t seed = 20241018;
    int threads = default_threads();
};

inline constexpr std::string_view kGroups[] = {"operator-oracle", "fueter-theorem", "kernels", "series",
                                               "integrals",       "families",       "discrepancies"};

// ---------------------------------------------------------------------------
// Sampling

class Sampler {
public:
    Sampler(std::uint64_t seed, std::string_view tag, int index) {
        std::uint64_t h = 1469598103934665603ull;
        for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
        std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                        static_cast<std::uint32_t>(index)};
        rng_.seed(s);
    }

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

    ImaginaryUnit unit() {
        std::normal_distribution<double> g;
        for (;;) {
            const auto I = ImaginaryUnit::from({0.0, g(rng_), g(rng_), g(rng_)});
            if (I) return *I;
        }
    }

    /// Uniform in the 4-ball of radius r.
    Quaternion ball(double r) {
        for (;;) {
            const Quaternion q{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            if (norm2(q) <= 1.0) return r * q;
        }
    }

    /// In the 4-ball of radius r with |vec q| >= vmin.
    Quaternion nonreal(double r, double vmin) {
        for (;;) {
            const Quaternion q = ball(r);
            if (vec_norm(q) >= vmin) return q;
        }
    }

    /// Random quaternion of modulus in [lo, hi].
    Quaternion shell(double lo, double hi) {
        const Quaternion d = unit_direction();
        return uniform(lo, hi) * d;
    }

    /// Coefficients c_k with |c_k| <= decay^k.
    std::vector<Quaternion> coeffs(int degree, double decay = 1.0) {
        std::vector<Quaternion> c(degree + 1);
        for (int k = 0; k <= degree; ++k) c[k] = std::pow(decay, k) * ball(1.0);
        return c;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    Quaternion unit_direction() {
        std::normal_distribution<double> g;
        for (;;) {
            const Quaternion q{g(rng_), g(rng_), g(rng_), g(rng_)};
            if (norm(q) > 1e-8) return q / norm(q);
        }
    }

    std::mt19937_64 rng_;
};

inline double rel(const Quaternion& a, const Quaternion& b) { return norm(a - b) / std::max(1.0, norm(b)); }

/// Max of f(i), i < count, over a small thread pool. Exceptions count as infinite residuals.
inline double parallel_max(int count, int threads, const std::function<double(int)>& f) {
    std::vector<double> out(static_cast<std::size_t>(count), 0.0);
    std::atomic<int> next{0};
    const auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < count;) {
            try {
                const double r = f(i);
                out[i] = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
            } catch (const std::exception&) {
                out[i] = std::numeric_limits<double>::infinity();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < std::min(threads, count); ++t) pool.emplace_back(worker);
        worker();
    }
    return count ? *std::max_element(out.begin(), out.end()) : 0.0;
}

class GroupBuilder {
public:
    GroupBuilder(std::string group, int criterion, const Options& o) : opt_(o), start_(std::chrono::steady_clock::now()) {
        rep_.group = std::move(group);
        rep_.criterion = criterion;
    }

    /// Runs f on `count` independently seeded samples and records the largest residual.
    void sampled(const std::string& name, int count, double tol, const std::function<double(Sampler&)>& f,
                 bool reject = false) {
        const double r = parallel_max(count, opt_.threads, [&](int i) {
            Sampler s(opt_.seed, name, i);
            return f(s);
        });
        rep_.checks.push_back({name, r, tol, reject});
    }

    void single(const std::string& name, double residual, double tol, bool reject = false) {
        rep_.checks.push_back({name, residual, tol, reject});
    }

    /// Rejection check that is immune to exceptions in the alternative form.
    void rejected(const std::string& name, int count, double threshold, const std::function<double(Sampler&)>& f) {
        double mn = std::numeric_limits<double>::infinity();
        for (int i = 0; i < count; ++i) {
            Sampler s(opt_.seed, name, i);
            mn = std::min(mn, f(s));
        }
        rep_.checks.push_back({name, mn, threshold, true});
    }

    GroupReport finish() {
        rep_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(rep_);
    }

private:
    Options opt_;
    GroupReport rep_;
    std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Shared helpers

/// q with |vec q| >= 0.15, |Q_{c,p}(q)| >= 0.3 and |Q_p(q)| >= 0.3.
inline Quaternion point_off_sphere(Sampler& s, const Quaternion& p, double r = 1.2) {
    for (;;) {
        const Quaternion q = s.nonreal(r, 0.15);
        if (norm(qc(p, q)) >= 0.3 && norm(spherical_base(StarCenter(p), q)) >= 0.3) return q;
    }
}

inline QFunction polynomial_function(std::vector<Quaternion> c) {
    return [c = std::move(c)](const Quaternion& q) {
        Quaternion s{};
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) s = q * s + c[k];
        return s;
    };
}

/// Bound on |sum q^k c_k| used as a scale.
inline double poly_scale(const std::vector<Quaternion>& c, const Quaternion& q) {
    double s = 1.0, m = 1.0;
    for (const auto& a : c) {
        s += norm(a) * m;
        m *= 1.0 + norm(q);
    }
    return s;
}

/// Exact Delta of sum q^k c_k.
inline Quaternion poly_delta(const std::vector<Quaternion>& c, const Quaternion& q) {
    Quaternion s{};
    for (int k = 2; k < static_cast<int>(c.size()); ++k)
        s += -2.0 * k * (k - 1) * eval_family(Family::CA, k - 2, q) * c[k];
    return s;
}

/// p with |vec p| in [0.1, 0.5] and q whose slice images u +- I_p v lie within 0.6 of p + 1.
inline std::pair<Quaternion, Quaternion> shifted_point(Sampler& s) {
    const ImaginaryUnit Ip = s.unit();
    const Quaternion p = Ip.at(s.uniform(-1.0, 1.0), s.uniform(0.1, 0.5));
    const StarCenter c(p + 1.0);
    for (;;) {
        const double u = c.p0 + s.uniform(-0.6, 0.6), v = s.uniform(0.0, 0.6);
        const double d = std::max(std::hypot(u - c.p0, v - c.p1), std::hypot(u - c.p0, v + c.p1));
        const Quaternion q = s.unit().at(u, v);
        if (d < 0.6 && norm(qc(p, q)) > 0.1) return {p, q};
    }
}

inline std::vector<ImaginaryUnit> three_planes() {
    return {ImaginaryUnit{1, 0, 0}, ImaginaryUnit{0, 1, 0}, *ImaginaryUnit::from({0, 1, 0, 1})};
}

// ---------------------------------------------------------------------------
// Groups

/// Criterion 1: closed-form actions against finite differences.
inline GroupReport operator_oracle(const Options& o) {
    GroupBuilder g("operator-oracle", 1, o);
    struct Case {
        TargetKind kind;
        const char* label;
        int lo, hi;
    };
    const Case cases[] = {{TargetKind::star_power, "star_power", -5, 8},
                          {TargetKind::spherical_block, "spherical_block", -6, 6},
                          {TargetKind::spherical_linear, "spherical_block*(q-p)", -6, 6}};
    for (const auto& c : cases)
        for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
            const std::string name = std::string("apply_exact ") + c.label + " " + std::string(op_name(op)) + " n=" +
                                     std::to_string(c.lo) + ".." + std::to_string(c.hi);
            g.sampled(name, 50, 1e-5, [&](Sampler& s) {
                const Quaternion p = s.nonreal(1.0, 0.2);
                const Quaternion q = point_off_sphere(s, p);
                double r = 0.0;
                for (int n = c.lo; n <= c.hi; ++n) {
                    const Target t{c.kind, StarCenter(p), n};
                    const Quaternion num = apply_numeric(op, [&](const Quaternion& x) { return eval_target(t, x); }, q);
                    r = std::max(r, rel(apply_exact(op, t, q), num));
                }
                return r;
            });
        }

    g.sampled("apply_exact real-axis limits", 20, 1e-5, [](Sampler& s) {
        const Quaternion p = s.nonreal(1.0, 0.3);
        const Quaternion q{s.uniform(-1.0, 1.0)};
        double r = 0.0;
        for (auto kind : {TargetKind::star_power, TargetKind::spherical_block, TargetKind::spherical_linear})
            for (int n = -3; n <= 5; ++n)
                for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
                    const Target t{kind, StarCenter(p), n};
                    r = std::max(r, rel(apply_exact(op, t, q),
                                        apply_numeric(op, [&](const Quaternion& x) { return eval_target(t, x); }, q)));
                }
        return r;
    });

    g.sampled("global operator V_p^m on Q_p^n and Q_p^n(q-p), m<=n<=3", 10, 1e-5, [](Sampler& s) {
        const Quaternion p = s.nonreal(1.0, 0.3);
        const Quaternion q = s.nonreal(1.0, 0.1);
        double r = 0.0;
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= n; ++m)
                for (bool lin : {false, true}) {
                    QFunction f = [=](const Quaternion& x) {
                        const Quaternion b = spherical_block(StarCenter(x), q, n);
                        return lin ? b * (q - x) : b;
                    };
                    for (int k = 0; k < m; ++k) f = [f](const Quaternion& x) { return apply_numeric(Op::V_right, f, x); };
                    r = std::max(r, rel(f(p), global_power_on_block(m, n, StarCenter(p), q, lin)));
                }
        return r;
    });

    g.sampled("rep_formula D/Dbar/Delta vs numeric, plane != I_q", 50, 1e-6, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(1, 5));
        const QFunction f = polynomial_function(c);
        const Quaternion q = s.nonreal(1.0, 0.15);
        const auto samples = sample_slice(f, q, s.unit());
        double r = 0.0;
        for (Op op : {Op::D, Op::Dbar, Op::Delta})
            r = std::max(r, rel(rep_formula(op, samples, q), apply_numeric(op, f, q)) / poly_scale(c, q));
        return r;
    });

    g.sampled("rep_formula real-axis forms", 20, 1e-6, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(1, 5));
        const QFunction f = polynomial_function(c);
        const Quaternion q{s.uniform(-1.0, 1.0)};
        const auto samples = sample_slice(f, q, s.unit());
        double r = 0.0;
        for (Op op : {Op::D, Op::Dbar, Op::Delta})
            r = std::max(r, rel(rep_formula(op, samples, q), apply_numeric(op, f, q)) / poly_scale(c, q));
        return r;
    });

    g.sampled("real limit of D f(u+Iv), v -> 0 extrapolated", 20, 1e-6, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(1, 5));
        const QFunction f = polynomial_function(c);
        const double u = s.uniform(-1.0, 1.0);
        const ImaginaryUnit I = s.unit();
        const auto Dv = [&](double v) {
            const Quaternion q = I.at(u, v);
            return rep_formula(Op::D, sample_slice(f, q, I), q);
        };
        const double v1 = 1e-3, v2 = 1e-4;
        const Quaternion lim = (v1 * v1 * Dv(v2) - v2 * v2 * Dv(v1)) / (v1 * v1 - v2 * v2);
        const Quaternion ref = -2.0 * fd::d1(f, Quaternion{u}, 0, default_step(Quaternion{u}));
        return rel(lim, ref) / poly_scale(c, Quaternion{u});
    });

    g.sampled("Euler/Gamma forms of D, Dbar, Delta", 50, 1e-5, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(1, 5));
        const QFunction f = polynomial_function(c);
        const Quaternion q = s.nonreal(1.0, 0.2);
        const auto t = euler_gamma_identities(f, q);
        const double sc = poly_scale(c, q);
        return std::max({rel(t.D, apply_numeric(Op::D, f, q)), rel(t.Dbar, apply_numeric(Op::Dbar, f, q)),
                         rel(t.Delta, apply_numeric(Op::Delta, f, q))}) /
               sc;
    });

    g.sampled("Leibniz rules for q g(q)", 30, 1e-5, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(0, 4));
        const QFunction gf = polynomial_function(c);
        const QFunction qg = [&](const Quaternion& x) { return x * gf(x); };
        const Quaternion q = s.nonreal(1.0, 0.15);
        const Quaternion Dg = apply_numeric(Op::D, gf, q), Dbg = apply_numeric(Op::Dbar, gf, q);
        const Quaternion Lg = apply_numeric(Op::Delta, gf, q), d0g = apply_numeric(Op::d_q0, gf, q);
        const Quaternion g0 = gf(q), gb = gf(conj(q));
        const Quaternion Dqg = apply_numeric(Op::D, qg, q), Dbqg = apply_numeric(Op::Dbar, qg, q);
        const double sc = poly_scale(c, q);
        return std::max({rel(apply_numeric(Op::Delta, qg, q), q * Lg + 2.0 * Dg), rel(Dqg, conj(q) * Dg - 2.0 * g0),
                         rel(Dqg, q * Dg - 2.0 * gb), rel(Dbqg, 4.0 * g0 + 2.0 * q * d0g - conj(q) * Dg),
                         rel(Dbqg, 2.0 * g0 + 2.0 * gb + q * Dbg)}) /
               sc;
    });
    return g.finish();
}

/// Criterion 2: Delta = D Dbar = Dbar D and D Delta f = 0.
inline GroupReport fueter_theorem(const Options& o) {
    GroupBuilder g("fueter-theorem", 2, o);
    g.sampled("Delta = D o Dbar = Dbar o D on slice polynomials (deg <= 6)", 20, 1e-5, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(1, 6));
        const QFunction f = polynomial_function(c);
        const Quaternion q = s.ball(1.0);
        const Quaternion L = apply_numeric(Op::Delta, f, q);
        const double sc = poly_scale(c, q);
        return std::max(rel(apply_numeric_composed(Op::D, Op::Dbar, f, q), L),
                        rel(apply_numeric_composed(Op::Dbar, Op::D, f, q), L)) /
               sc;
    });
    g.sampled("D Delta f = 0 on slice polynomials (deg <= 6)", 20, 1e-4, [](Sampler& s) {
        const auto c = s.coeffs(s.integer(1, 6));
        const Quaternion q = s.ball(1.0);
        const Quaternion r = apply_numeric(Op::D, [&](const Quaternion& x) { return poly_delta(c, x); }, q);
        return norm(r) / poly_scale(c, q);
    });
    g.sampled("D Delta (q-p)^{*n} = 0, n <= 8", 20, 1e-4, [](Sampler& s) {
        const Quaternion p = s.nonreal(1.0, 0.2);
        const Quaternion q = s.ball(1.2);
        double r = 0.0;
        for (int n = 0; n <= 8; ++n) {
            const Target t{TargetKind::star_power, StarCenter(p), n};
            const Quaternion d =
                apply_numeric(Op::D, [&](const Quaternion& x) { return apply_exact(Op::Delta, t, x); }, q);
            r = std::max(r, norm(d) / std::pow(1.0 + norm(q) + norm(p), n));
        }
        return r;
    });
    g.sampled("D Delta (q-p)^{-*m} = 0, m <= 5", 20, 1e-4, [](Sampler& s) {
        const Quaternion p = s.nonreal(1.0, 0.2);
        const Quaternion q = point_off_sphere(s, p);
        double r = 0.0;
        for (int m = 1; m <= 5; ++m) {
            const Target t{TargetKind::star_power, StarCenter(p), -m};
            const Quaternion d =
                apply_numeric(Op::D, [&](const Quaternion& x) { return apply_exact(Op::Delta, t, x); }, q);
            r = std::max(r, norm(d) / std::max(1.0, norm(apply_exact(Op::Delta, t, q))));
        }
        return r;
    });
    return g.finish();
}

/// Criterion 3: kernel forms, operator images of S_L^{-1} and splitting identities.
inline GroupReport kernels(const Options& o) {
    GroupBuilder g("kernels", 3, o);
    const auto pair = [](Sampler& s) {
        const Quaternion p = s.ball(1.5);
        return std::pair{p, point_off_sphere(s, p, 1.5)};
    };
    g.sampled("S_L^{-1} forms I = II", 50, 1e-11, [&](Sampler& s) {
        const auto [p, q] = pair(s);
        return rel(eval_kernel(KernelId::S_L_inv_I, p, q), eval_kernel(KernelId::S_L_inv_II, p, q));
    });
    g.sampled("S_R^{-1} forms I = II", 50, 1e-11, [&](Sampler& s) {
        const auto [p, q] = pair(s);
        return rel(eval_kernel(KernelId::S_R_inv_I, p, q), eval_kernel(KernelId::S_R_inv_II, p, q));
    });
    struct Img {
        Op op;
        KernelId k;
        double f;
        const char* name;
    };
    for (const Img& c : {Img{Op::D, KernelId::Q_c_inv, -2.0, "D S_L^{-1} = -2 Q_c^{-1}"},
                         Img{Op::Dbar, KernelId::P2_L, 1.0, "Dbar S_L^{-1} = P2_L"},
                         Img{Op::Delta, KernelId::F_L, 1.0, "Delta S_L^{-1} = F_L"}})
        g.sampled(c.name, 50, 1e-5, [&](Sampler& s) {
            const auto [p, q] = pair(s);
            const Quaternion num = apply_numeric(c.op, [&](const Quaternion& x) { return S_L_inv(p, x); }, q);
            return rel(num, c.f * eval_kernel(c.k, p, q));
        });
    for (KernelId k : {KernelId::Q_c_inv, KernelId::P2_L, KernelId::F_L})
        g.sampled("splitting form of " + std::string(kernel_name(k)), 50, 1e-9, [&](Sampler& s) {
            const auto [p, q] = pair(s);
            return rel(kernel_splitting(k, p, q), eval_kernel(k, p, q));
        });
    g.sampled("Q_c^{-1} = (q F_L - F_L p)/4 and P2_L = q0 F_L - F_L p", 50, 1e-10, [&](Sampler& s) {
        const auto [p, q] = pair(s);
        return std::max(rel(qc_inv_from_F(p, q), eval_kernel(KernelId::Q_c_inv, p, q)),
                        rel(P2_from_F(p, q), eval_kernel(KernelId::P2_L, p, q)));
    });
    g.sampled("Q_c^{-1}(p, 0) = p^{-2}", 20, 1e-12, [](Sampler& s) {
        const Quaternion p = s.shell(0.5, 2.0);
        return rel(eval_kernel(KernelId::Q_c_inv, p, Quaternion{}), inv(p * p));
    });
    g.sampled("Dbar^n F_L = 2^{n+2} n! (-1)^n M_{n+1} Q_c^{-n-2}, n <= 3", 6, 1e-4, [](Sampler& s) {
        const Quaternion p = s.shell(1.0, 1.5);
        Quaternion q;
        do q = s.nonreal(0.8, 0.2);
        while (norm(qc(p, q)) < 0.5);
        QFunction f = [p](const Quaternion& x) { return eval_kernel(KernelId::F_L, p, x); };
        double r = 0.0;
        for (int n = 0; n <= 3; ++n) {
            r = std::max(r, rel(f(q), dbar_power_F_L(n, p, q)));
            f = [f](const Quaternion& x) { return apply_numeric(Op::Dbar, f, x); };
        }
        return r;
    });
    return g.finish();
}

namespace detail {

/// Random spec with |a_n| <= decay^|n| for |n| <= 10 (non-negative n only for Taylor kinds).
inline SeriesSpec random_spec(Sampler& s, SeriesKind kind, const Quaternion& p, double decay = 0.5) {
    SeriesSpec sp;
    sp.kind = kind;
    sp.center = p;
    sp.N = 12;
    const int lo = is_laurent(kind) ? -10 : 0;
    for (int n = lo; n <= 10; ++n) sp.coeffs[n] = std::pow(decay, std::abs(n)) * s.ball(1.0);
    return sp;
}

/// Error envelope of partial sums over N in [N - 4, N].
inline double envelope(const std::vector<double>& err, int N) {
    double m = 0.0;
    for (int k = N - 4; k <= N; ++k) m = std::max(m, err[k]);
    return m;
}

}  // namespace detail

/// Criterion 4: fine transforms, closed forms, Taylor/spherical relation and kernel series.
inline GroupReport series(const Options& o) {
    GroupBuilder g("series", 4, o);
    for (SeriesKind kind :
         {SeriesKind::star_taylor, SeriesKind::spherical, SeriesKind::star_laurent, SeriesKind::spherical_laurent})
        for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
            const std::string name =
                "fine_transform " + std::string(series_kind_name(kind)) + " " + std::string(op_name(op));
            g.sampled(name, 50, 1e-5, [=](Sampler& s) {
                const Quaternion p = s.nonreal(0.8, 0.2);
                const SeriesSpec sp = detail::random_spec(s, kind, p);
                const Quaternion q = p + s.shell(0.4, 0.9);
                if (is_laurent(kind) && (norm(qc(p, q)) < 0.2 || norm(spherical_base(StarCenter(p), q)) < 0.2))
                    return 0.0;
                const auto v = eval_series(sp, q);
                const Quaternion num = apply_numeric(op, [&](const Quaternion& x) { return eval_series(sp, x).value; }, q);
                const Quaternion fin = eval_fine_series(fine_transform(sp, op), q);
                return std::max(0.0, norm(fin - num) - v.tail_estimate) / std::max(1.0, norm(num));
            });
        }
    for (SeriesKind kind : {SeriesKind::star_taylor, SeriesKind::star_laurent})
        for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
            const std::string name =
                "closed non-real form " + std::string(series_kind_name(kind)) + " " + std::string(op_name(op));
            g.sampled(name, 50, 1e-9, [=](Sampler& s) {
                const Quaternion p = s.nonreal(0.8, 0.2);
                const SeriesSpec sp = detail::random_spec(s, kind, p);
                Quaternion q;
                do q = p + s.shell(0.4, 0.9);
                while (vec_norm(q) < 0.15 || norm(qc(p, q)) < 0.2);
                return rel(closed_fine_series(sp, op, q), eval_fine_series(fine_transform(sp, op), q));
            });
        }
    for (SeriesKind kind : {SeriesKind::spherical, SeriesKind::spherical_laurent}) {
        const std::string name = "rebased evaluation about p0, " + std::string(series_kind_name(kind));
        g.sampled(name, 30, 1e-5, [=](Sampler& s) {
            const Quaternion p = s.nonreal(0.8, 0.2);
            const SeriesSpec sp = detail::random_spec(s, kind, p);
            const StarCenter c(p);
            Quaternion q;
            for (;;) {
                q = p + s.shell(0.3, 1.0);
                const double x = norm(q - c.p0);
                if ((x > 1.6 * c.p1 || x < c.p1 / 1.6) && norm(spherical_base(c, q)) > 0.2) break;
            }
            const QFunction f = [&](const Quaternion& x) { return eval_series(sp, x).value; };
            double r = rel(rebased_eval(sp, std::nullopt, q), f(q));
            for (Op op : {Op::D, Op::Dbar, Op::Delta})
                r = std::max(r, rel(rebased_eval(sp, op, q), apply_numeric(op, f, q)));
            return r;
        });
    }
    g.sampled("Taylor <-> spherical coefficient relation", 20, 1e-9, [](Sampler& s) {
        const Quaternion p = s.nonreal(1.0, 0.2);
        const Quaternion q = p + s.shell(0.1, 0.6);
        std::map<int, Quaternion> a;
        for (int k = 0; k <= 12; ++k) a[k] = s.ball(1.0);
        const auto r = taylor_spherical_relation(a, q, p, 6);
        return norm(r.lhs - r.rhs) / std::max(1.0, norm(r.rhs));
    });

    const auto origin_point = [](Sampler& s, double lo, double hi) {
        const Quaternion p = s.shell(1.5, 2.5);
        return std::pair{p, s.shell(lo, hi) * norm(p)};
    };
    for (KernelId k : {KernelId::S_L_inv_II, KernelId::Q_c_inv, KernelId::F_L, KernelId::P2_L}) {
        g.sampled("kernel series about 0: " + std::string(kernel_name(k)), 30, 1e-9, [=](Sampler& s) {
            const auto [p, q] = origin_point(s, 0.05, 0.4);
            return rel(kernel_series(k, KernelCenter::origin, p, q, 60).value, eval_kernel(k, p, q));
        });
        g.sampled("kernel series about p+1: " + std::string(kernel_name(k)), 30, 1e-9, [=](Sampler& s) {
            const auto [p, q] = shifted_point(s);
            return rel(kernel_series(k, KernelCenter::shifted, p, q, 80).value, eval_kernel(k, p, q));
        });
    }
    g.sampled("kernel series of E about 1", 30, 1e-9, [](Sampler& s) {
        const Quaternion q = 1.0 + s.ball(0.5);
        return rel(kernel_series(KernelId::E, KernelCenter::origin, 0.0, q, 80).value, kernel_E(q));
    });
    for (KernelId k : {KernelId::S_L_inv_II, KernelId::Q_c_inv, KernelId::F_L, KernelId::P2_L})
        g.sampled("kernel series error ratio within 10% of |q|/|p|: " + std::string(kernel_name(k)), 10, 0.1,
                  [=](Sampler& s) {
                      const auto [p, q] = origin_point(s, 0.7, 0.8);
                      const Quaternion exact = eval_kernel(k, p, q);
                      std::vector<double> err(81);
                      Quaternion sum{};
                      for (int n = 0; n <= 80; ++n) {
                          sum += kernel_series_term(k, KernelCenter::origin, p, q, n);
                          err[n] = norm(sum - exact);
                      }
                      const double measured = std::pow(detail::envelope(err, 80) / detail::envelope(err, 60), 1.0 / 20);
                      return std::abs(measured / (norm(q) / norm(p)) - 1.0);
                  });
    for (Op op : {Op::D, Op::Dbar, Op::Delta})
        g.sampled("spherical fine series term ratio <= (r/R)^2 + 10%: " + std::string(op_name(op)), 10, 0.1,
                  [=](Sampler& s) {
                      const Quaternion p = s.nonreal(0.8, 0.2);
                      const StarCenter c(p);
                      const double R = 1.5;
                      Quaternion q;
                      double r2 = 0.0;
                      do {
                          q = p + s.shell(0.3, 1.2);
                          r2 = norm(spherical_base(c, q));
                      } while (r2 < 0.4 * R * R || r2 > 0.8 * R * R);
                      std::vector<double> t(61);
                      for (int n = 0; n <= 60; ++n) {
                          const Quaternion a0 = s.ball(1.0) / std::pow(R, 2 * n), a1 = s.ball(1.0) / std::pow(R, 2 * n);
                          t[n] = norm(apply_exact(op, {TargetKind::spherical_block, c, n}, q) * a0 +
                                      apply_exact(op, {TargetKind::spherical_linear, c, n}, q) * a1);
                      }
                      const double measured = std::pow(detail::envelope(t, 60) / detail::envelope(t, 40), 1.0 / 20);
                      return std::max(0.0, measured / (r2 / (R * R)) - 1.0);
                  });
    return g.finish();
}

/// Criterion 5: Cauchy formula and the D, Dbar, Delta integral representations.
inline GroupReport integrals(const Options& o) {
    GroupBuilder g("integrals", 5, o);
    struct Setup {
        std::vector<Quaternion> c;
        QFunction f;
        Quaternion q;
        double center;
    };
    const auto setup = [](Sampler& s, int max_degree) {
        Setup u;
        u.c = s.coeffs(s.integer(0, max_degree));
        u.f = polynomial_function(u.c);
        u.center = s.uniform(-0.3, 0.3);
        const ImaginaryUnit I = s.unit();
        const double r = s.uniform(0.2, 1.2), t = s.uniform(0.2, std::numbers::pi - 0.2);
        u.q = I.at(u.center + r * std::cos(t), r * std::sin(t));
        return u;
    };
    g.sampled("cauchy_eval reproduces slice polynomials (M=1024)", 20, 1e-8, [&](Sampler& s) {
        const Setup u = setup(s, 5);
        const Contour C(s.unit(), u.center, 2.0, 1024);
        return rel(cauchy_eval(u.f, u.q, C), u.f(u.q)) / poly_scale(u.c, u.q);
    });
    g.sampled("cauchy_eval of 1 is 1, and 0 outside the contour", 10, 1e-10, [](Sampler& s) {
        const ImaginaryUnit I = s.unit();
        const Contour C(s.unit(), 0.0, 1.0, 256);
        const QFunction one = [](const Quaternion&) { return Quaternion{1.0}; };
        const Quaternion in = I.at(s.uniform(-0.5, 0.5), s.uniform(0.0, 0.5));
        const Quaternion out = I.at(s.uniform(-0.5, 0.5), s.uniform(2.0, 3.0));
        return std::max(rel(cauchy_eval(one, in, C), 1.0), norm(cauchy_eval(one, out, C)));
    });
    g.sampled("fine_integral = rep_formula = apply_numeric (deg <= 5)", 20, 1e-6, [&](Sampler& s) {
        const Setup u = setup(s, 5);
        const Contour C(s.unit(), u.center, 2.0, 1024);
        const auto smp = sample_slice(u.f, u.q, s.unit());
        double r = 0.0;
        for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
            const Quaternion a = fine_integral(op, u.f, u.q, C), b = rep_formula(op, smp, u.q),
                             n = apply_numeric(op, u.f, u.q);
            r = std::max({r, rel(a, b), rel(a, n), rel(b, n)});
        }
        return r / poly_scale(u.c, u.q);
    });
    g.sampled("slice independence across 3 planes and 2 radii", 10, 1e-9, [&](Sampler& s) {
        const Setup u = setup(s, 5);
        const auto planes = three_planes();
        double r = slice_independence_check(u.f, u.q, planes, u.center, 2.0, 1024);
        for (Op op : {Op::D, Op::Dbar, Op::Delta})
            r = std::max(r, slice_independence_check(u.f, u.q, planes, u.center, 2.0, 1024, op));
        for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
            const Quaternion a = fine_integral(op, u.f, u.q, Contour(planes[0], u.center, 2.0, 1024));
            const Quaternion b = fine_integral(op, u.f, u.q, Contour(planes[1], u.center, 2.6, 1024));
            r = std::max(r, norm(a - b));
        }
        return r / poly_scale(u.c, u.q);
    });
    g.sampled("residue form: fine_integral(D) = -q^{-1} I_q I [f(u-Iv) - f(u+Iv)]", 20, 1e-9, [&](Sampler& s) {
        const Setup u = setup(s, 5);
        const ImaginaryUnit I = s.unit();
        const Contour C(I, u.center, 2.0, 1024);
        const auto sc = slice_coords(u.q);
        const Quaternion res =
            -1.0 * (inv(vec(u.q)) * sc.I->q() * I.q() * (u.f(I.at(sc.u, -sc.v)) - u.f(I.at(sc.u, sc.v))));
        return rel(fine_integral(Op::D, u.f, u.q, C), res) / poly_scale(u.c, u.q);
    });
    g.sampled("trapezoid error drops >= 10x from M=256 to M=512", 5, 0.1, [](Sampler& s) {
        const auto c = s.coeffs(4);
        const QFunction f = polynomial_function(c);
        const ImaginaryUnit I = s.unit();
        const double t = s.uniform(0.3, 2.8);
        const Quaternion q = s.unit().at(0.95 * std::cos(t), 0.95 * std::sin(t));
        const double e1 = norm(cauchy_eval(f, q, Contour(I, 0.0, 1.0, 256)) - f(q));
        const double e2 = norm(cauchy_eval(f, q, Contour(I, 0.0, 1.0, 512)) - f(q));
        return e2 <= 1e-14 * poly_scale(c, q) ? 0.0 : e2 / e1;
    });
    const QFunction sq = [](const Quaternion& x) { return x * x; };
    const QFunction cube = [](const Quaternion& x) { return x * x * x; };
    const Quaternion q0{0.5, 0.5, 0.0, 0.0};
    const Contour C(ImaginaryUnit{1, 0, 0}, 0.0, 2.0, 1024);
    g.single("Delta q^2 = -4 by integration", rel(fine_integral(Op::Delta, sq, q0, C), -4.0), 1e-8);
    g.single("D q^2 = -4 q0 by integration", rel(fine_integral(Op::D, sq, q0, C), -4.0 * q0.q0), 1e-8);
    g.single("Delta q^3 = -12 CA_1 by integration",
             rel(fine_integral(Op::Delta, cube, q0, C), -12.0 * eval_family(Family::CA, 1, q0)), 1e-8);
    return g.finish();
}

/// Criterion 6: Appell relations, bounds, decompositions, closed forms and operator kernels.
inline GroupReport families(const Options& o) {
    GroupBuilder g("families", 6, o);
    constexpr int kPts = 500;
    const auto sc = [](const Quaternion& q, const Quaternion& p, int n) { return std::pow(1.0 + norm(q) + norm(p), n); };
    const auto one = [](Family f, int n, const Quaternion& q) { return eval_family(f, n, q); };
    const auto two = [](Family f, int n, const Quaternion& q, const Quaternion& p) {
        return eval_family(f, n, q, StarCenter(p));
    };

    g.sampled("Appell: d/dq0 H_n = n H_{n-1}, n <= 10", kPts, 1e-7, [&](Sampler& s) {
        const Quaternion q = s.ball(1.0);
        double r = 0.0;
        for (int n = 1; n <= 10; ++n)
            r = std::max(r, norm(apply_numeric(Op::d_q0, [&](const Quaternion& x) { return one(Family::H, n, x); }, q) -
                                 n * one(Family::H, n - 1, q)) /
                                sc(q, 0.0, n));
        return r;
    });
    g.sampled("Appell: (Dbar/2) CA_n = n CA_{n-1}, n <= 10", kPts, 1e-7, [&](Sampler& s) {
        const Quaternion q = s.ball(1.0);
        double r = 0.0;
        for (int n = 1; n <= 10; ++n)
            r = std::max(r,
                         norm(0.5 * apply_numeric(Op::Dbar, [&](const Quaternion& x) { return one(Family::CA, n, x); }, q) -
                              n * one(Family::CA, n - 1, q)) /
                             sc(q, 0.0, n));
        return r;
    });
    g.sampled("Appell: d/dq0 Ht_n = n Ht_{n-1}, n <= 10", kPts, 1e-7, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0), q = s.ball(1.0);
        double r = 0.0;
        for (int n = 1; n <= 10; ++n)
            r = std::max(
                r, norm(apply_numeric(Op::d_q0, [&](const Quaternion& x) { return two(Family::Ht, n, x, p); }, q) -
                        n * two(Family::Ht, n - 1, q, p)) /
                       sc(q, p, n));
        return r;
    });
    g.sampled("Appell: (Dbar/2) Qt_n = n Qt_{n-1}, n <= 10", kPts, 1e-7, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0), q = s.ball(1.0);
        double r = 0.0;
        for (int n = 1; n <= 10; ++n)
            r = std::max(
                r, norm(0.5 * apply_numeric(Op::Dbar, [&](const Quaternion& x) { return two(Family::Qt, n, x, p); }, q) -
                        n * two(Family::Qt, n - 1, q, p)) /
                       sc(q, p, n));
        return r;
    });
    g.sampled("bounds |H_n(q)|, |CA_n(q)| <= |q|^n, n <= 12", kPts, 1e-12, [&](Sampler& s) {
        const Quaternion q = s.ball(2.0);
        double r = 0.0;
        for (int n = 0; n <= 12; ++n) {
            const double b = std::pow(norm(q), n);
            r = std::max({r, (norm(one(Family::H, n, q)) - b) / std::max(b, 1e-300),
                          (norm(one(Family::CA, n, q)) - b) / std::max(b, 1e-300)});
        }
        return std::max(r, 0.0);
    });

    struct Kern {
        const char* name;
        Op op;
        bool twice;
        Family fam;
        bool two_var;
    };
    for (const Kern& k : {Kern{"Delta H_n = 0", Op::Delta, false, Family::H, false},
                          Kern{"Delta Ht_n = 0", Op::Delta, false, Family::Ht, true},
                          Kern{"D CA_n = 0", Op::D, false, Family::CA, false},
                          Kern{"D Qt_n = 0", Op::D, false, Family::Qt, true},
                          Kern{"D^2 P2_n = 0", Op::D, true, Family::P2, false},
                          Kern{"D^2 P2t_n = 0", Op::D, true, Family::P2t, true}})
        g.sampled(std::string(k.name) + ", n <= 10", kPts, 1e-6, [&](Sampler& s) {
            const Quaternion p = k.two_var ? s.ball(1.0) : Quaternion{};
            const Quaternion q = s.ball(1.0);
            double r = 0.0;
            for (int n = 0; n <= 10; ++n) {
                const QFunction f = [&](const Quaternion& x) { return k.two_var ? two(k.fam, n, x, p) : one(k.fam, n, x); };
                const Quaternion v = k.twice ? apply_numeric_composed(k.op, k.op, f, q) : apply_numeric(k.op, f, q);
                r = std::max(r, norm(v) / sc(q, p, n));
            }
            return r;
        });
    g.sampled("D P_nu = 0, |nu| <= 6", 100, 1e-6, [](Sampler& s) {
        const Quaternion q = s.ball(1.0);
        double r = 0.0;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b)
                for (int c = 0; a + b + c <= 6; ++c) {
                    const MultiIndex nu{a, b, c};
                    const Quaternion d =
                        apply_numeric(Op::D, [&](const Quaternion& x) { return eval_fueter_polynomial(nu, x); }, q);
                    r = std::max(r, norm(d) / std::pow(1.0 + 2.0 * norm(q), a + b + c));
                }
        return r;
    });

    g.sampled("closed forms = defining sums, all families, n <= 10", kPts, 1e-10, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0);
        const Quaternion q = s.nonreal(1.0, 0.1);
        double r = 0.0;
        for (auto [id, name] : kFamilyNames) {
            if (id == Family::Fueter) continue;
            for (int n = 1; n <= 10; ++n) {
                const std::optional<StarCenter> c = is_two_variable(id) ? std::optional(StarCenter(p)) : std::nullopt;
                r = std::max(r, norm(eval_family(id, n, q, c) - eval_family_closed(id, n, q, c)) /
                                    (sc(q, p, n + 2) / vec_norm(q)));
            }
        }
        return r;
    });
    g.sampled("decompositions of P2_n, P2t_n and R2_n", kPts, 1e-10, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0), q = s.ball(1.0);
        const StarCenter c(p);
        double r = 0.0;
        for (int n = 1; n <= 10; ++n) {
            const double m = sc(q, p, n + 2);
            r = std::max(r, norm(one(Family::P2, n, q) -
                                 ((n + 2.0) * one(Family::CA, n, q) - q.q0 * n * one(Family::CA, n - 1, q))) /
                                m);
            const Quaternion Q = two(Family::Qt, n, q, p), Q1 = two(Family::Qt, n - 1, q, p);
            r = std::max(r, norm(two(Family::P2t, n, q, p) - ((n + 2.0) * Q + n * Q1 * p - q.q0 * n * Q1)) / m);
            r = std::max(r, norm(two(Family::P2t, n, q, p) - (star_power(c, q, n) + two(Family::Ht, n, q, p))) / m);
            if (norm(qc(p, q)) > 1e-3)
                r = std::max(r, norm(two(Family::R2, n, q, p) - (n * conj_star_power(c, q, n + 1) +
                                                                  two(Family::Hcal, n, q, p) * qc(p, q))) /
                                    m);
        }
        return r;
    });
    g.sampled("one-variable reductions at p = 0", 100, 1e-12, [&](Sampler& s) {
        const Quaternion q = s.ball(1.0);
        double r = 0.0;
        for (int n = 0; n <= 10; ++n) {
            const double m = sc(q, 0.0, n);
            r = std::max({r, norm(two(Family::Ht, n, q, 0.0) - one(Family::H, n, q)) / m,
                          norm(two(Family::Qt, n, q, 0.0) - one(Family::CA, n, q)) / m,
                          norm(two(Family::P2t, n, q, 0.0) - one(Family::P2, n, q)) / m,
                          norm(two(Family::Hcal, n, q, 0.0) - one(Family::Pneg, n, q)) / m,
                          norm(two(Family::Mcal, n, q, 0.0) - one(Family::S, n, q)) / m,
                          norm(two(Family::R2, n, q, 0.0) - one(Family::R, n, q)) / m});
        }
        return r;
    });
    return g.finish();
}

/// Criterion 7: sign and factor choices, each checked against its oracle
/// and a competing alternative form rejected.
inline GroupReport discrepancies(const Options& o) {
    GroupBuilder g("discrepancies", 7, o);
    const auto iterated = [](const Quaternion& p, const Quaternion& q, int n) {
        const SliceFunction lin = SliceFunction::from_values([p](const Quaternion& x) { return x - p; });
        SliceFunction f = SliceFunction::constant(1.0);
        for (int k = 0; k < n; ++k) f = star_product(f, lin);
        return f(q);
    };
    const auto unsigned_binomial = [](const Quaternion& p, const Quaternion& q, int n) {
        Quaternion s{};
        double c = 1.0;
        for (int r = 0; r <= n; ++r) {
            s += c * pow(q, r) * pow(p, n - r);
            c = c * (n - r) / (r + 1);
        }
        return s;
    };

    // Star power sign.
    g.sampled("star power: signed binomial = iterated *-product, n <= 8", 200, 1e-10, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0), q = s.ball(1.0);
        double r = 0.0;
        for (int n = 0; n <= 8; ++n) {
            const Quaternion it = iterated(p, q, n);
            const double m = std::pow(1.0 + norm(p) + norm(q), n);
            r = std::max({r, norm(star_power_binomial(p, q, n) - it) / m, norm(star_power(StarCenter(p), q, n) - it) / m});
        }
        return r;
    });
    g.rejected("star power: unsigned binomial (alternative) rejected", 20, 1e-3, [&](Sampler& s) {
        const Quaternion p = s.shell(0.3, 1.0), q = s.ball(1.0);
        return norm(unsigned_binomial(p, q, 1) - iterated(p, q, 1));
    });

    // Q_c^{-1} series prefactor.
    const auto qc_series = [](double pref, const Quaternion& p, const Quaternion& q) {
        Quaternion s{};
        const Quaternion pi = inv(p);
        for (int n = 0; n <= 60; ++n) s += pref * (n + 1.0) * eval_family(Family::H, n, q) * pow(pi, n + 2);
        return s;
    };
    g.sampled("Q_c^{-1} series: +(n+1) H_n p^{-2-n} = closed kernel", 50, 1e-10, [&](Sampler& s) {
        const Quaternion p = s.shell(1.5, 2.5), q = s.ball(0.4 * norm(p));
        return std::max(rel(qc_series(1.0, p, q), eval_kernel(KernelId::Q_c_inv, p, q)),
                        rel(kernel_series(KernelId::Q_c_inv, KernelCenter::origin, p, q, 60).value,
                            eval_kernel(KernelId::Q_c_inv, p, q)));
    });
    g.sampled("Q_c^{-1} series = termwise -D/2 of sum q^n p^{-1-n}", 20, 1e-6, [&](Sampler& s) {
        const Quaternion p = s.shell(1.5, 2.5), q = s.ball(0.4 * norm(p));
        const QFunction S = [&](const Quaternion& x) {
            Quaternion t{};
            for (int n = 0; n <= 60; ++n) t += pow(x, n) * pow(inv(p), n + 1);
            return t;
        };
        return rel(-0.5 * apply_numeric(Op::D, S, q), qc_series(1.0, p, q));
    });
    g.rejected("Q_c^{-1} series: alternative factor -2 rejected", 20, 1e-3, [&](Sampler& s) {
        const Quaternion p = s.shell(1.5, 2.5), q = s.ball(0.4 * norm(p));
        return rel(qc_series(-2.0, p, q), eval_kernel(KernelId::Q_c_inv, p, q));
    });

    // Appell factor of Qt_n.
    const auto appell_qt = [](const Quaternion& p, const Quaternion& q, int n) {
        return 0.5 * apply_numeric(Op::Dbar, [&](const Quaternion& x) { return eval_family(Family::Qt, n, x, StarCenter(p)); },
                                   q);
    };
    g.sampled("(Dbar/2) Qt_n = n Qt_{n-1}, n <= 8", 50, 1e-7, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0), q = s.ball(1.0);
        double r = 0.0;
        for (int n = 1; n <= 8; ++n)
            r = std::max(r, norm(appell_qt(p, q, n) - n * eval_family(Family::Qt, n - 1, q, StarCenter(p))) /
                                std::pow(1.0 + norm(p) + norm(q), n));
        return r;
    });
    g.rejected("(Dbar/2) Qt_n = 2n Qt_{n-1} (alternative) rejected", 20, 1e-3, [&](Sampler& s) {
        const Quaternion p = s.ball(1.0), q = s.ball(1.0);
        return norm(appell_qt(p, q, 1) - 2.0 * eval_family(Family::Qt, 0, q, StarCenter(p)));
    });

    // Further sign and factor choices.
    g.sampled("F_L(0, q) = +4 E(q)", 20, 1e-12, [](Sampler& s) {
        const Quaternion q = s.shell(0.3, 2.0);
        return rel(eval_kernel(KernelId::F_L, 0.0, q), 4.0 * kernel_E(q));
    });
    g.sampled("Dbar^n F_L sign: n = 0 reproduces F_L", 20, 1e-12, [](Sampler& s) {
        const Quaternion p = s.shell(1.0, 1.5), q = s.nonreal(0.5, 0.1);
        return rel(dbar_power_F_L(0, p, q), eval_kernel(KernelId::F_L, p, q));
    });
    g.rejected("P2_L splitting with q^{-1}/2 (alternative) rejected", 20, 1e-3, [](Sampler& s) {
        const Quaternion p = s.ball(1.5);
        const Quaternion q = point_off_sphere(s, p, 1.5);
        const Quaternion w = inv(vec(q));
        const Quaternion alt = 2.0 * d0_S_L_inv(p, q) - 0.5 * (w * (S_L_inv(p, conj(q)) - S_L_inv(p, q)));
        return rel(alt, eval_kernel(KernelId::P2_L, p, q));
    });
    g.rejected("shifted P2_L series with -2(-1)^n(n+1) (alternative) rejected", 10, 1e-3, [](Sampler& s) {
        const auto [p, q] = shifted_point(s);
        const StarCenter c(p + 1.0);
        Quaternion sum{};
        for (int n = 0; n <= 80; ++n)
            sum += -2.0 * (n % 2 ? -1.0 : 1.0) * (n + 1.0) * eval_family(Family::P2t, n, q, c);
        return rel(sum, eval_kernel(KernelId::P2_L, p, q));
    });
    g.rejected("shifted Q_c^{-1} series with 2(-1)^n(n+1) (alternative) rejected", 10, 1e-3, [](Sampler& s) {
        const auto [p, q] = shifted_point(s);
        const StarCenter c(p + 1.0);
        Quaternion sum{};
        for (int n = 0; n <= 80; ++n) sum += 2.0 * (n % 2 ? -1.0 : 1.0) * (n + 1.0) * eval_family(Family::Ht, n, q, c);
        return rel(sum, eval_kernel(KernelId::Q_c_inv, p, q));
    });
    g.rejected("chain-rule form D Q_p^2 = -8 Q_p (q0 - p0) rejected", 20, 1e-3, [](Sampler& s) {
        const Quaternion p = s.nonreal(1.0, 0.2);
        const Quaternion q = point_off_sphere(s, p);
        const StarCenter c(p);
        const Quaternion alt = -8.0 * (q.q0 - c.p0) * spherical_block(c, q, 1);
        return rel(alt, apply_numeric(Op::D, [&](const Quaternion& x) { return spherical_block(c, x, 2); }, q));
    });
    g.sampled("Gamma q = 2 vec(q)", 20, 1e-8, [](Sampler& s) {
        const Quaternion q = s.nonreal(1.0, 0.2);
        return rel(apply_numeric(Op::Gamma, [](const Quaternion& x) { return x; }, q), 2.0 * vec(q));
    });
    return g.finish();
}

inline GroupReport run_group(std::string_view name, const Options& o) {
    if (name == "operator-oracle") return operator_oracle(o);
    if (name == "fueter-theorem") return fueter_theorem(o);
    if (name == "kernels") return kernels(o);
    if (name == "series") return series(o);
    if (name == "integrals") return integrals(o);
    if (name == "families") return families(o);
    if (name == "discrepancies") return discrepancies(o);
    throw std::invalid_argument("unknown verification group: " + std::string(name));
}

}  // namespace finestruct::verify
