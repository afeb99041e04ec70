#include "test_util.hpp"

using namespace finestruct;

namespace {

const QFunction sq_fn = [](const Quaternion& q) { return q * q; };
const QFunction cube_fn = [](const Quaternion& q) { return q * q * q; };
const QFunction one_fn = [](const Quaternion&) { return Quaternion{1.0}; };

}  // namespace

TEST(Contour, Validation) {
    const ImaginaryUnit I{1, 0, 0};
    EXPECT_THROW(Contour(I, {0.0, 0.5}, 1.0, 64), std::invalid_argument);
    EXPECT_THROW(Contour(I, 0.0, -1.0, 64), std::invalid_argument);
    EXPECT_THROW(Contour(I, 0.0, 1.0, 4), std::invalid_argument);
    EXPECT_THROW(cauchy_eval(one_fn, 1.0, Contour(I, 0.0, 1.0, 64)), contour_error);
}

TEST(Cauchy, Examples) {
    const Contour C(ImaginaryUnit{1, 0, 0}, 0.0, 2.0, 1024);
    const Quaternion q = 0.5 + 0.5 * e2;
    EXPECT_QNEAR(cauchy_eval(cube_fn, q, C), q * q * q, 1e-8);
    EXPECT_QNEAR(cauchy_eval(one_fn, q, C), 1.0, 1e-10);
    EXPECT_QNEAR(cauchy_eval(one_fn, 3.0 + e1, C), 0.0, 1e-10);
}

TEST(Cauchy, ReproducesPolynomials) {
    fst::Rng r;
    for (int i = 0; i < 10; ++i) {
        std::vector<Quaternion> c(6);
        for (auto& a : c) a = r.ball(1.0);
        const SliceFunction f = SliceFunction::polynomial(c);
        const QFunction g = [&](const Quaternion& x) { return f(x); };
        const Quaternion q = r.ball(1.2);
        EXPECT_QNEAR(cauchy_eval(g, q, Contour(r.unit(), 0.1, 2.0, 1024)), f(q), 1e-8);
    }
}

TEST(FineIntegral, Examples) {
    const Contour C(ImaginaryUnit{0, 0, 1}, 0.0, 2.0, 1024);
    const Quaternion q{0.3, 0.4, -0.2, 0.5};
    EXPECT_QNEAR(fine_integral(Op::D, sq_fn, q, C), -4.0 * q.q0, 1e-8);
    EXPECT_QNEAR(fine_integral(Op::Delta, cube_fn, q, C), -4.0 * (2.0 * q + conj(q)), 1e-8);
    EXPECT_QNEAR(fine_integral(Op::Delta, sq_fn, 0.5 + 0.5 * e1, C), -4.0, 1e-8);
    for (Op op : {Op::D, Op::Dbar, Op::Delta}) EXPECT_QNEAR(fine_integral(op, one_fn, q, C), 0.0, 1e-10);
    EXPECT_THROW(fine_integral(Op::Gamma, sq_fn, q, C), std::invalid_argument);
}

TEST(FineIntegral, AgreesWithRepresentationFormulaAndNumeric) {
    fst::Rng r;
    for (int i = 0; i < 10; ++i) {
        const Quaternion q = r.nonreal(1.0, 0.2);
        const Contour C(r.unit(), 0.0, 2.0, 1024);
        const auto s = sample_slice(cube_fn, q, r.unit());
        for (Op op : {Op::D, Op::Dbar, Op::Delta}) {
            const Quaternion a = fine_integral(op, cube_fn, q, C);
            EXPECT_QNEAR(a, rep_formula(op, s, q), 1e-6);
            EXPECT_QNEAR(a, apply_numeric(op, cube_fn, q), 1e-6);
        }
    }
}

TEST(SliceIndependence, PlanesAndRadii) {
    const std::vector<ImaginaryUnit> planes{ImaginaryUnit{1, 0, 0}, ImaginaryUnit{0, 1, 0},
                                            *ImaginaryUnit::from({0, 1, 0, 1})};
    const Quaternion q{0.2, 0.3, 0.4, -0.1};
    EXPECT_LT(slice_independence_check(sq_fn, q, planes, 0.0, 2.0, 1024), 1e-9);
    EXPECT_LT(slice_independence_check(one_fn, q, planes, 0.0, 2.0, 1024), 1e-14);
    for (Op op : {Op::D, Op::Dbar, Op::Delta})
        EXPECT_LT(slice_independence_check(cube_fn, q, planes, 0.0, 2.0, 1024, op), 1e-9);
    const Quaternion a = cauchy_eval(sq_fn, q, Contour(planes[0], 0.0, 1.5, 1024));
    const Quaternion b = cauchy_eval(sq_fn, q, Contour(planes[0], 0.0, 2.5, 1024));
    EXPECT_LT(norm(a - b), 1e-9);
}

TEST(Trapezoid, ConvergesGeometrically) {
    const ImaginaryUnit I{1, 0, 0};
    const Quaternion q = 0.95 * Quaternion{0.6, 0, 0.8, 0};
    const double e1_ = norm(cauchy_eval(cube_fn, q, Contour(I, 0.0, 1.0, 256)) - q * q * q);
    const double e2_ = norm(cauchy_eval(cube_fn, q, Contour(I, 0.0, 1.0, 512)) - q * q * q);
    EXPECT_GT(e1_, 0.0);
    EXPECT_LT(e2_, 0.1 * e1_ + 1e-15);
}
