#include "test_util.hpp"

using namespace finestruct;

namespace {

SeriesSpec spec(SeriesKind kind, const Quaternion& center, std::map<int, Quaternion> c, int N = 32) {
    SeriesSpec s;
    s.kind = kind;
    s.center = center;
    s.coeffs = std::move(c);
    s.N = N;
    return s;
}

SeriesSpec random_spec(fst::Rng& r, SeriesKind kind, const Quaternion& p) {
    std::map<int, Quaternion> c;
    for (int n = is_laurent(kind) ? -8 : 0; n <= 8; ++n) c[n] = std::pow(0.5, std::abs(n)) * r.ball(1.0);
    return spec(kind, p, c, 10);
}

}  // namespace

TEST(Series, ConstantSeries) {
    const Quaternion c{1, 2, 3, 4};
    const auto s = spec(SeriesKind::star_taylor, e1, {{0, c}});
    EXPECT_QNEAR(eval_series(s, {0.3, 0.1, 0.2, 0.1}).value, c, 1e-15);
}

TEST(Series, CauchyKernelAboutShiftedCenter) {
    const Quaternion p{0.1, 0.2, 0.1, 0.0};
    const SeriesSpec s = expand_S_L_inv(p, KernelCenter::shifted, 80);
    const Quaternion q = p + 1.0 + Quaternion{0.2, 0.1, 0.0, 0.05};
    const auto v = eval_series(s, q);
    EXPECT_FALSE(v.outside_region);
    EXPECT_QNEAR(v.value, S_L_inv(p, q), std::max(1e-12, 10 * v.tail_estimate));
}

TEST(Series, SphericalBlockZero) {
    const Quaternion p{0.2, 0.5, 0, 0}, q{0.4, 0.1, 0.3, -0.2};
    const auto s = spec(SeriesKind::spherical, p, {{0, 1.0}, {1, 1.0}});
    EXPECT_QNEAR(eval_series(s, q).value, 1.0 + (q - p), 1e-15);
}

TEST(Series, RejectsNegativeIndicesForTaylorKinds) {
    EXPECT_THROW(spec(SeriesKind::star_taylor, 0.0, {{-1, 1.0}}).validate(), std::invalid_argument);
}

TEST(FineTransform, Examples) {
    const Quaternion p{0.3, -0.4, 0.2, 0.5}, q{0.1, 0.2, 0.7, -0.3};
    auto f = fine_transform(spec(SeriesKind::star_taylor, p, {{1, 1.0}}), Op::D);
    EXPECT_EQ(f.regular, Family::Ht);
    EXPECT_QNEAR(f.coeffs.at(0), -2.0, 0.0);
    EXPECT_QNEAR(eval_fine_series(f, q), -2.0, 1e-14);

    f = fine_transform(spec(SeriesKind::star_taylor, p, {{2, 1.0}}), Op::Delta);
    EXPECT_EQ(f.regular, Family::Qt);
    EXPECT_QNEAR(f.coeffs.at(0), -4.0, 0.0);
    EXPECT_QNEAR(eval_fine_series(f, q), -4.0, 1e-14);

    f = fine_transform(spec(SeriesKind::star_taylor, p, {{1, 1.0}}), Op::Dbar);
    EXPECT_EQ(f.regular, Family::P2t);
    EXPECT_QNEAR(f.coeffs.at(0), 2.0, 0.0);
    EXPECT_QNEAR(eval_fine_series(f, q), 4.0, 1e-14);
}

TEST(FineTransform, MatchesNumericOperator) {
    fst::Rng r;
    for (SeriesKind kind :
         {SeriesKind::star_taylor, SeriesKind::spherical, SeriesKind::star_laurent, SeriesKind::spherical_laurent})
        for (int i = 0; i < 8; ++i) {
            const Quaternion p = r.nonreal(0.8, 0.2);
            const SeriesSpec s = random_spec(r, kind, p);
            Quaternion q;
            do q = p + r.nonreal(0.9, 0.0);
            while (norm(q - p) < 0.4 || norm(qc(p, q)) < 0.2 || norm(spherical_base(StarCenter(p), q)) < 0.2);
            const QFunction f = [&](const Quaternion& x) { return eval_series(s, x).value; };
            for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
                const Quaternion num = apply_numeric(op, f, q);
                EXPECT_QNEAR(eval_fine_series(fine_transform(s, op), q), num, 1e-5 * std::max(1.0, norm(num)))
                    << series_kind_name(kind) << " " << op_name(op);
            }
        }
}

TEST(FineTransform, ClosedNonRealForms) {
    fst::Rng r;
    for (SeriesKind kind : {SeriesKind::star_taylor, SeriesKind::star_laurent})
        for (int i = 0; i < 10; ++i) {
            const Quaternion p = r.nonreal(0.8, 0.2);
            const SeriesSpec s = random_spec(r, kind, p);
            Quaternion q;
            do q = p + r.nonreal(0.9, 0.0);
            while (norm(q - p) < 0.4 || vec_norm(q) < 0.15 || norm(qc(p, q)) < 0.2);
            for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
                const Quaternion v = eval_fine_series(fine_transform(s, op), q);
                EXPECT_QNEAR(closed_fine_series(s, op, q), v, 1e-9 * std::max(1.0, norm(v)));
            }
        }
}

TEST(EvalFineSpherical, Examples) {
    const Quaternion p{0.3, 0.4, 0.2, 0.0}, q{0.9, -0.1, 0.5, 0.3};
    const StarCenter c(p);
    EXPECT_QNEAR(eval_fine_spherical(spec(SeriesKind::spherical, p, {{2, 1.0}}), Op::D, q), -4.0 * (q.q0 - c.p0), 1e-13);
    EXPECT_QNEAR(eval_fine_spherical(spec(SeriesKind::spherical, p, {}), Op::Delta, q), 0.0, 0.0);
    const auto s = spec(SeriesKind::spherical, p, {{3, 1.0}});
    EXPECT_QNEAR(eval_fine_spherical(s, Op::Dbar, q),
                 apply_numeric(Op::Dbar, [&](const Quaternion& x) { return eval_series(s, x).value; }, q), 1e-6);
}

TEST(RebasedExpansion, MatchesDirectEvaluation) {
    fst::Rng r;
    for (SeriesKind kind : {SeriesKind::spherical, SeriesKind::spherical_laurent})
        for (int i = 0; i < 10; ++i) {
            const Quaternion p = r.nonreal(0.8, 0.2);
            const SeriesSpec s = random_spec(r, kind, p);
            const StarCenter c(p);
            Quaternion q;
            for (;;) {
                q = p + r.nonreal(1.0, 0.0);
                const double x = norm(q - c.p0);
                if ((x > 1.6 * c.p1 || x < c.p1 / 1.6) && norm(spherical_base(c, q)) > 0.2) break;
            }
            const QFunction f = [&](const Quaternion& x) { return eval_series(s, x).value; };
            EXPECT_QNEAR(rebased_eval(s, std::nullopt, q), f(q), 1e-9 * std::max(1.0, norm(f(q))));
            for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
                const Quaternion num = apply_numeric(op, f, q);
                EXPECT_QNEAR(rebased_eval(s, op, q), num, 1e-5 * std::max(1.0, norm(num)));
            }
        }
}

TEST(TaylorSpherical, Examples) {
    const Quaternion p{0.2, 0.6, -0.3, 0.1}, q{0.5, 0.2, 0.1, 0.3};
    auto r = taylor_spherical_relation({{0, 1.0}}, q, p, 3);
    EXPECT_QNEAR(r.lhs, 1.0, 1e-15);
    EXPECT_QNEAR(r.rhs, 1.0, 1e-15);

    r = taylor_spherical_relation({{2, 1.0}}, q, p, 3);
    EXPECT_QNEAR(r.b.at(1), -2.0, 1e-15);
    EXPECT_QNEAR(r.lhs, -2.0 * (q - p), 1e-14);
    EXPECT_QNEAR(r.rhs, 2.0 * (p - q), 1e-14);
}

TEST(TaylorSpherical, RandomCoefficients) {
    fst::Rng r;
    for (int i = 0; i < 20; ++i) {
        const Quaternion p = r.nonreal(1.0, 0.2), q = p + r.ball(0.5);
        std::map<int, Quaternion> a;
        for (int k = 0; k <= 5; ++k) a[k] = r.ball(1.0);
        const auto rel = taylor_spherical_relation(a, q, p, 3);
        EXPECT_QNEAR(rel.lhs, rel.rhs, 1e-9 * std::max(1.0, norm(rel.rhs)));
    }
}

TEST(Series, OutsideRegionIsFlagged) {
    const SeriesSpec s = expand_S_L_inv(2.0, KernelCenter::origin, 40);
    EXPECT_FALSE(eval_series(s, {0.5, 0.5, 0, 0}).outside_region);
    EXPECT_TRUE(eval_series(s, {2.5, 0.5, 0, 0}).outside_region);
}
