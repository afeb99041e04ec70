#include "test_util.hpp"

using namespace finestruct;

namespace {

std::pair<Quaternion, Quaternion> off_sphere_pair(fst::Rng& r) {
    for (;;) {
        const Quaternion p = r.ball(1.5), q = r.nonreal(1.5, 0.1);
        if (norm(qc(p, q)) > 0.3) return {p, q};
    }
}

}  // namespace

TEST(Kernels, ParseNames) {
    for (auto k : {KernelId::S_L_inv_I, KernelId::S_L_inv_II, KernelId::S_R_inv_I, KernelId::S_R_inv_II,
                   KernelId::Q_c_inv, KernelId::F_L, KernelId::P2_L, KernelId::E})
        EXPECT_EQ(parse_kernel(kernel_name(k)), k);
    EXPECT_EQ(parse_kernel("S_L_inv"), KernelId::S_L_inv_II);
    EXPECT_THROW(parse_kernel("K"), std::invalid_argument);
}

TEST(Kernels, CauchyKernelForms) {
    fst::Rng r;
    for (int i = 0; i < 50; ++i) {
        const auto [p, q] = off_sphere_pair(r);
        const double s = 1e-11 * std::max(1.0, norm(eval_kernel(KernelId::S_L_inv_II, p, q)));
        EXPECT_QNEAR(eval_kernel(KernelId::S_L_inv_I, p, q), eval_kernel(KernelId::S_L_inv_II, p, q), s);
        EXPECT_QNEAR(eval_kernel(KernelId::S_R_inv_I, p, q), eval_kernel(KernelId::S_R_inv_II, p, q), s);
    }
}

TEST(Kernels, CauchyKernelAtOriginIsGeometric) {
    // S_L^{-1}(p, 0) = p^{-1}
    const Quaternion p{0.3, 1.2, -0.4, 0.2};
    EXPECT_QNEAR(S_L_inv(p, 0.0), inv(p), 1e-15);
}

TEST(Kernels, OperatorImagesOfCauchyKernel) {
    fst::Rng r;
    for (int i = 0; i < 30; ++i) {
        const auto [p, q] = off_sphere_pair(r);
        const QFunction S = [&](const Quaternion& x) { return S_L_inv(p, x); };
        const auto close = [](const Quaternion& a, const Quaternion& b) { return norm(a - b) / std::max(1.0, norm(b)); };
        EXPECT_LT(close(apply_numeric(Op::D, S, q), -2.0 * eval_kernel(KernelId::Q_c_inv, p, q)), 1e-5);
        EXPECT_LT(close(apply_numeric(Op::Dbar, S, q), eval_kernel(KernelId::P2_L, p, q)), 1e-5);
        EXPECT_LT(close(apply_numeric(Op::Delta, S, q), eval_kernel(KernelId::F_L, p, q)), 1e-5);
    }
}

TEST(Kernels, SplittingAndConnectionForms) {
    fst::Rng r;
    for (int i = 0; i < 50; ++i) {
        const auto [p, q] = off_sphere_pair(r);
        for (auto k : {KernelId::Q_c_inv, KernelId::P2_L, KernelId::F_L}) {
            const Quaternion v = eval_kernel(k, p, q);
            EXPECT_QNEAR(kernel_splitting(k, p, q), v, 1e-10 * std::max(1.0, norm(v)));
        }
        EXPECT_QNEAR(qc_inv_from_F(p, q), eval_kernel(KernelId::Q_c_inv, p, q), 1e-10);
        EXPECT_QNEAR(P2_from_F(p, q), eval_kernel(KernelId::P2_L, p, q), 1e-10);
    }
    EXPECT_THROW(kernel_splitting(KernelId::F_L, 1.0 + e1, 0.5), real_axis_error);
}

TEST(Kernels, SpecialValues) {
    const Quaternion p{0.5, -0.6, 0.2, 1.0};
    EXPECT_QNEAR(eval_kernel(KernelId::Q_c_inv, p, 0.0), inv(p * p), 1e-14);
    fst::Rng r;
    for (int i = 0; i < 20; ++i) {
        const Quaternion q = r.nonreal(2.0, 0.3);
        EXPECT_QNEAR(eval_kernel(KernelId::F_L, 0.0, q), 4.0 * kernel_E(q), 1e-12 * norm(kernel_E(q)));
    }
}

TEST(Kernels, SingularOnSphere) {
    const Quaternion p{0.5, 1.0, 0, 0};
    EXPECT_THROW(eval_kernel(KernelId::F_L, p, {0.5, 0, 0, 1.0}), singularity_error);
}

TEST(Kernels, DbarPowersOfF) {
    const Quaternion p{1.2, 0.3, -0.2, 0.1}, q{0.1, 0.2, 0.15, -0.1};
    QFunction f = [&](const Quaternion& x) { return eval_kernel(KernelId::F_L, p, x); };
    for (int n = 0; n <= 2; ++n) {
        const Quaternion v = dbar_power_F_L(n, p, q);
        EXPECT_QNEAR(f(q), v, 1e-4 * std::max(1.0, norm(v))) << "n=" << n;
        f = [f](const Quaternion& x) { return apply_numeric(Op::Dbar, f, x); };
    }
}

TEST(KernelSeries, AboutOrigin) {
    const Quaternion p = 2.0, q{0.15, 0.15, -0.15, 0.15};
    ASSERT_NEAR(norm(q), 0.3, 1e-15);
    for (auto k : {KernelId::S_L_inv_II, KernelId::Q_c_inv, KernelId::F_L, KernelId::P2_L}) {
        const auto s = kernel_series(k, KernelCenter::origin, p, q, 40);
        EXPECT_QNEAR(s.value, eval_kernel(k, p, q), 1e-9) << kernel_name(k);
    }
}

TEST(KernelSeries, AboutShiftedCenter) {
    const Quaternion p{0.2, 0.1, 0.2, 0.0};
    fst::Rng r;
    int used = 0;
    for (int i = 0; i < 400 && used < 30; ++i) {
        const Quaternion q = p + 1.0 + r.ball(0.4);
        if (!region_contains(Region::ball(RegionTag::star_dome, p + 1.0, 0.7), q)) continue;
        ++used;
        for (auto k : {KernelId::S_L_inv_II, KernelId::Q_c_inv, KernelId::F_L, KernelId::P2_L})
            EXPECT_QNEAR(kernel_series(k, KernelCenter::shifted, p, q, 100).value, eval_kernel(k, p, q),
                         1e-9 * std::max(1.0, norm(eval_kernel(k, p, q))));
    }
    EXPECT_GT(used, 10);
}

TEST(KernelSeries, EAboutOne) {
    EXPECT_QNEAR(kernel_series(KernelId::E, KernelCenter::origin, 0.0, 1.0, 5).value, 1.0, 1e-15);
    const Quaternion q{1.1, 0.2, -0.1, 0.1};
    EXPECT_QNEAR(kernel_series(KernelId::E, KernelCenter::origin, 0.0, q, 80).value, kernel_E(q), 1e-10);
}

TEST(KernelSeries, OutsideRegionThrows) {
    EXPECT_THROW(kernel_series(KernelId::F_L, KernelCenter::origin, 1.0, 2.0 + e1, 10), region_error);
    EXPECT_THROW(kernel_series(KernelId::E, KernelCenter::origin, 0.0, 2.5, 10), region_error);
}

TEST(KernelSeries, TailEstimateTracksError) {
    const Quaternion p = 2.0, q{0.6, 0.4, 0.3, 0.2};
    const auto s = kernel_series(KernelId::S_L_inv_II, KernelCenter::origin, p, q, 30);
    const double err = norm(s.value - eval_kernel(KernelId::S_L_inv_II, p, q));
    EXPECT_LE(err, 3.0 * s.tail_estimate);
    EXPECT_GE(err, 0.1 * s.tail_estimate);
}
