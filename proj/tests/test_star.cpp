#include "test_util.hpp"

using namespace finestruct;

namespace {

SliceFunction identity() { return SliceFunction::polynomial({0.0, 1.0}); }

Quaternion iterated_star_power(const Quaternion& p, const Quaternion& q, int n) {
    const SliceFunction lin = SliceFunction::polynomial({-1.0 * p, 1.0});
    SliceFunction f = SliceFunction::constant(1.0);
    for (int k = 0; k < n; ++k) f = star_product(f, lin);
    return f(q);
}

}  // namespace

TEST(SliceFunction, EvenOddDecomposition) {
    const SliceFunction f = SliceFunction::polynomial({{0.2, 1, 0, 0}, {1, 0, 2, 0}, {0, 0, 0, 1}});
    for (double u : {-1.0, 0.3})
        for (double v : {0.4, 1.7}) {
            const auto [a, b] = f.alpha_beta(u, v);
            const auto [a2, b2] = f.alpha_beta(u, -v);
            EXPECT_QNEAR(a, a2, 1e-15);
            EXPECT_QNEAR(b, -1.0 * b2, 1e-15);
        }
    const Quaternion q{0.3, 0.4, -0.5, 0.6};
    const auto c = slice_coords(q);
    const auto [a, b] = f.alpha_beta(c.u, c.v);
    EXPECT_QNEAR(f(q), a + c.I->q() * b, 1e-15);
}

TEST(StarProduct, Examples) {
    EXPECT_QNEAR(star_mul_left(identity(), identity(), e1), -1.0, 1e-15);

    const SliceFunction f = SliceFunction::polynomial({0.0, e1});
    const SliceFunction g = SliceFunction::polynomial({0.0, e2});
    const Quaternion q = 1.0 + e3;
    EXPECT_QNEAR(star_mul_left(f, g, q), q * q * e3, 1e-14);
}

TEST(StarProduct, IntrinsicFactorIsPointwise) {
    fst::Rng r;
    const SliceFunction f = SliceFunction::polynomial({1.5, -0.5, 2.0});
    const SliceFunction g = SliceFunction::polynomial({{0, 1, 2, 0}, {0.5, 0, 0, -1}});
    ASSERT_TRUE(f.is_intrinsic());
    for (int i = 0; i < 100; ++i) {
        const Quaternion q = r.ball(2.0);
        EXPECT_QNEAR(star_mul_left(f, g, q), f(q) * g(q), 1e-12);
    }
}

TEST(StarUnary, InverseConjugateSymmetrization) {
    const Quaternion q = 1.0 + e1;
    const SliceFunction f = identity();
    const SliceFunction one = star_product(star_inverse(f), f);
    EXPECT_QNEAR(one(q), 1.0, 1e-10);
    // f(q) = q e2: f^s = f * f^c = q^2 |e2|^2
    const SliceFunction fe = SliceFunction::polynomial({0.0, e2});
    EXPECT_QNEAR(star_unary(fe, StarUnary::symmetrization, q), q * q, 1e-14);
    EXPECT_TRUE(symmetrization(fe).is_intrinsic());

    const std::vector<Quaternion> a{{1, 2, 0, 0}, {0, 0, 1, -1}, {0.5, 0, 0, 3}};
    const SliceFunction p = SliceFunction::polynomial(a);
    const Quaternion x{0.2, -0.7, 0.1, 0.4};
    Quaternion expect{};
    for (std::size_t i = 0; i < a.size(); ++i) expect += pow(x, static_cast<unsigned>(i)) * conj(a[i]);
    EXPECT_QNEAR(star_unary(p, StarUnary::conjugate, x), expect, 1e-14);

    const SliceFunction intr = SliceFunction::polynomial({2.0, 1.0, 1.0});
    EXPECT_QNEAR(star_unary(intr, StarUnary::star_inverse, x), inv(intr(x)), 1e-13);
}

TEST(StarPower, RealCenterIsOrdinaryPower) {
    const Quaternion q{0.3, 1.0, -2.0, 0.5};
    EXPECT_QNEAR(star_power(StarCenter(0.7), q, 2), (q - 0.7) * (q - 0.7), 1e-14);
}

TEST(StarPower, MinusOneIsMinusCauchyKernel) {
    fst::Rng r;
    for (int i = 0; i < 50; ++i) {
        const Quaternion p = r.ball(1.5), q = r.ball(1.5);
        if (norm(qc(p, q)) < 0.1) continue;
        EXPECT_QNEAR(star_power(StarCenter(p), q, -1), -1.0 * S_L_inv(p, q), 1e-12);
    }
}

TEST(StarPower, MatchesIteratedStarProduct) {
    EXPECT_QNEAR(star_power(StarCenter(e1), 1.0 + e2, 3), iterated_star_power(e1, 1.0 + e2, 3), 1e-11);
    fst::Rng r;
    for (int i = 0; i < 50; ++i) {
        const Quaternion p = r.ball(1.2), q = r.ball(1.2);
        for (int n = 0; n <= 10; ++n) {
            const double s = std::pow(1 + norm(p) + norm(q), n);
            EXPECT_QNEAR(star_power(StarCenter(p), q, n), iterated_star_power(p, q, n), 1e-12 * s);
            EXPECT_QNEAR(star_power_binomial(p, q, n), iterated_star_power(p, q, n), 1e-12 * s);
        }
    }
}

TEST(StarPower, NegativePowersInvert) {
    fst::Rng r;
    for (int i = 0; i < 30; ++i) {
        const Quaternion p = r.nonreal(1.0, 0.2), q = r.ball(1.5);
        if (norm(qc(p, q)) < 0.2) continue;
        const StarCenter c(p);
        for (int m = 1; m <= 4; ++m) {
            // (q-p)^{-*m} = (qbar-p)^{*m} Q_{c,p}^{-m}
            EXPECT_QNEAR(star_power(c, q, -m), conj_star_power(c, q, m) * qc_power(p, q, -m), 1e-10);
            const SliceFunction pos([&](double u, double v) {
                const ImaginaryUnit J{};
                const Quaternion fp = star_power(c, J.at(u, v), m), fm = star_power(c, J.at(u, -v), m);
                return SliceFunction::AlphaBeta{0.5 * (fp + fm), 0.5 * (J.q() * (fm - fp))};
            });
            const SliceFunction neg([&](double u, double v) {
                const ImaginaryUnit J{};
                const Quaternion fp = star_power(c, J.at(u, v), -m), fm = star_power(c, J.at(u, -v), -m);
                return SliceFunction::AlphaBeta{0.5 * (fp + fm), 0.5 * (J.q() * (fm - fp))};
            });
            EXPECT_QNEAR(star_product(pos, neg)(q), 1.0, 1e-9);
        }
    }
}

TEST(StarPower, SingularOnSphere) {
    const Quaternion p{0.5, 1.0, 0, 0};
    EXPECT_THROW(star_power(StarCenter(p), {0.5, 0, 1.0, 0}, -1), singularity_error);
}

TEST(SphericalBlock, Examples) {
    const Quaternion q{0.3, 0.2, -0.1, 0.6};
    EXPECT_QNEAR(spherical_block(StarCenter(e1), q, 0), 1.0, 0.0);
    const Quaternion d = q - 0.8;
    EXPECT_QNEAR(spherical_block(StarCenter(0.8), q, 3), d * d * d * d * d * d, 1e-14);
    EXPECT_QNEAR(spherical_block(StarCenter(1.0 + e1), 0.0, -1), 0.5, 1e-15);
}

TEST(SphericalBlock, EqualsQcForConjugateSymmetricFactorization) {
    fst::Rng r;
    for (int i = 0; i < 30; ++i) {
        const Quaternion p = r.nonreal(1.0, 0.1), q = r.ball(1.5);
        const StarCenter c(p);
        // Q_p(q) = (q-p) * (q-pbar), both on the right of q
        EXPECT_QNEAR(spherical_block(c, q, 1), star_product(SliceFunction::polynomial({-1.0 * p, 1.0}),
                                                            SliceFunction::polynomial({-1.0 * conj(p), 1.0}))(q),
                     1e-13);
    }
}

TEST(RepresentationFormula, Examples) {
    const ImaginaryUnit I{1, 0, 0}, Iq{0, 1, 0};
    EXPECT_QNEAR(representation_eval(I.at(1, 1), I.at(1, -1), I, Iq), 1.0 + e2, 1e-15);
    EXPECT_QNEAR(representation_eval(Quaternion{2, 1, 0, 3}, Quaternion{2, 1, 0, 3}, I, Iq), Quaternion(2, 1, 0, 3),
                 1e-15);

    fst::Rng r;
    for (int i = 0; i < 50; ++i) {
        const ImaginaryUnit J = r.unit(), K = r.unit();
        const double u = r.uni(-2, 2), v = r.uni(0, 2);
        const Quaternion x = J.at(u, v), y = J.at(u, -v), q = K.at(u, v);
        EXPECT_QNEAR(representation_eval(x * x, y * y, J, K), q * q, 1e-12);
    }
}
