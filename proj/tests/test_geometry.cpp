#include "test_util.hpp"

using namespace finestruct;

TEST(Distance, Examples) {
    const double u = 0.4, v = 0.7;
    const Quaternion a = ImaginaryUnit{1, 0, 0}.at(u, v), b = ImaginaryUnit{0, 1, 0}.at(u, v);
    EXPECT_NEAR(distance(DistanceKind::sigma, a, b), 2 * v, 1e-15);
    EXPECT_NEAR(distance(DistanceKind::tau, a, b), 0.0, 1e-15);
    const Quaternion p{0.3, 0.5, -0.2, 0.4};
    EXPECT_NEAR(distance(DistanceKind::cassini, conj(p), p), 0.0, 1e-7);  // square root of a rounding-level modulus
    EXPECT_NEAR(distance(DistanceKind::sigma, a, a + 0.25), 0.25, 1e-15);
}

TEST(Regions, Examples) {
    const Quaternion p = 0.5 + e1;
    EXPECT_TRUE(region_contains(Region::ball(RegionTag::sigma_ball, p, 1.0), p + 0.5 * e1));
    EXPECT_FALSE(region_contains(Region::ball(RegionTag::sigma_ball, p, 1.0), p + 0.1 * e2));

    const Quaternion real_center = 0.3;
    EXPECT_TRUE(region_contains(Region::ball(RegionTag::star_dome, real_center + 1.0, 1.0), real_center + 1.5));
    EXPECT_TRUE(region_contains(Region::ball(RegionTag::star_dome, real_center + 1.0, 1.0), real_center + 1.0 + 0.5 * e2));

    // boundary of an open Cassini ball: |(q-p0)^2 + p1^2| = 4 = R^2
    const Quaternion wide = 0.5 + 2.0 * e1;
    const StarCenter c(wide);
    EXPECT_EQ(norm(spherical_base(c, 0.5)), 4.0);
    EXPECT_FALSE(region_contains(Region::ball(RegionTag::cassini_ball, wide, 2.0), 0.5));
    EXPECT_TRUE(region_contains(Region::ball(RegionTag::cassini_ball, wide, 2.0 + 1e-9), 0.5));
}

TEST(Regions, StarDomeNeedsBothSliceImages) {
    const Quaternion p{0.0, 0.8, 0.0, 0.0};
    const Region dome = Region::ball(RegionTag::star_dome, p, 1.0);
    EXPECT_TRUE(region_contains(dome, p + 0.3 * e1));
    // off-plane point at the same u: images u +- I_p v are 0.8 +- v away
    EXPECT_FALSE(region_contains(dome, {0.0, 0.0, 0.8, 0.0}));
}

TEST(Regions, Shells) {
    const Quaternion p = 1.0;
    const Region s = Region::shell(RegionTag::star_shell, p, 0.5, 1.0);
    EXPECT_TRUE(region_contains(s, p + 0.7));
    EXPECT_FALSE(region_contains(s, p + 0.2));
    EXPECT_FALSE(region_contains(s, p + 1.2));
    EXPECT_THROW(Region::shell(RegionTag::star_shell, p, 1.0, 0.5), std::invalid_argument);
    EXPECT_THROW(Region::ball(RegionTag::star_shell, p, 1.0), std::invalid_argument);
}

TEST(RadiusEstimate, Examples) {
    std::vector<Quaternion> ones(60, 1.0), pow2(60), fact(60);
    double f = 1.0;
    for (int n = 0; n < 60; ++n) {
        pow2[n] = std::pow(2.0, n);
        fact[n] = f;
        f /= (n + 1);
    }
    EXPECT_NEAR(radius_estimate(ones, RadiusSide::taylor).value, 1.0, 0.05);
    EXPECT_NEAR(radius_estimate(pow2, RadiusSide::taylor).value, 0.5, 0.03);
    EXPECT_TRUE(radius_estimate(fact, RadiusSide::taylor).unbounded);
}
