#include "test_util.hpp"

using namespace finestruct;

TEST(Io, ParseQuaternion) {
    EXPECT_QNEAR(parse_quaternion("1,2,0,0"), Quaternion(1, 2, 0, 0), 0.0);
    EXPECT_QNEAR(parse_quaternion("-0.5"), -0.5, 0.0);
    EXPECT_THROW(parse_quaternion("1,2,3"), std::invalid_argument);
    EXPECT_THROW(parse_quaternion("1,x,0,0"), std::invalid_argument);
    EXPECT_THROW(parse_quaternion("1,2abc,0,0"), std::invalid_argument);
}

TEST(Io, QuaternionJson) {
    const Quaternion q{0.1, -1e-300, 3.0 / 7.0, 12345.678};
    EXPECT_EQ(quaternion_from_json(to_json(q)), q);
    EXPECT_EQ(format_quaternion({1, 0, 0, 0}), "[1.0,0.0,0.0,0.0]");
}

TEST(Io, SliceFunctionDescriptors) {
    const Quaternion q{0.3, 0.1, -0.4, 0.2};
    EXPECT_QNEAR(parse_slice_function("q^3")(q), q * q * q, 1e-15);
    EXPECT_QNEAR(parse_slice_function("q")(q), q, 0.0);
    const auto f = parse_slice_function(R"({"kind":"monomial_sum","coeffs":[[1,0,0,0],[0,1,0,0]]})");
    EXPECT_QNEAR(f(q), 1.0 + q * Quaternion(0, 1, 0, 0), 1e-15);
    const auto k = parse_slice_function(R"({"kind":"kernel","name":"S_L_inv","p":[2,0,1,0]})");
    EXPECT_QNEAR(k(q), S_L_inv({2, 0, 1, 0}, q), 1e-14);
    EXPECT_THROW(parse_slice_function("sin(q)"), std::invalid_argument);
}

TEST(Io, SeriesSpecRoundTripIsBitIdentical) {
    fst::Rng r;
    for (SeriesKind kind :
         {SeriesKind::star_taylor, SeriesKind::spherical, SeriesKind::star_laurent, SeriesKind::spherical_laurent}) {
        SeriesSpec s;
        s.kind = kind;
        s.center = r.ball(1.0);
        s.N = 17;
        for (int n = is_laurent(kind) ? -5 : 0; n <= 7; ++n) s.coeffs[n] = r.ball(3.0);
        const std::string text = to_json(s).dump();
        const SeriesSpec back = series_from_json(json::parse(text));
        EXPECT_EQ(to_json(back).dump(), text);
        EXPECT_EQ(back.center, s.center);
        EXPECT_EQ(back.coeffs, s.coeffs);
        EXPECT_EQ(back.N, s.N);
        EXPECT_EQ(back.kind, s.kind);
    }
}

TEST(Io, SeriesSpecArrayCoefficients) {
    const auto s = series_from_json(json::parse(R"({"kind":"star_taylor","center":[0,0,0,0],"coeffs":[1,[0,1,0,0]]})"));
    EXPECT_QNEAR(s.a(1), Quaternion(0, 1, 0, 0), 0.0);
    EXPECT_THROW(series_from_json(json::parse(R"({"kind":"star_taylor","center":0,"coeffs":{"-1":1}})")),
                 std::invalid_argument);
    EXPECT_THROW(series_from_json(json::parse(R"({"kind":"star_taylor","center":0,"coeffs":{"x":1}})")),
                 std::invalid_argument);
}

TEST(Io, RegionRoundTrip) {
    for (const Region& r : {Region::ball(RegionTag::sigma_ball, {0, 1, 0, 0}, 2.0),
                            Region::ball(RegionTag::star_dome, 1.5, 1.0),
                            Region::shell(RegionTag::cassini_shell, {0.2, 0, 0.5, 0}, 0.5, 1.5)}) {
        const Region back = region_from_json(to_json(r));
        EXPECT_EQ(back.tag, r.tag);
        EXPECT_EQ(back.p, r.p);
        EXPECT_EQ(back.r_inner, r.r_inner);
        EXPECT_EQ(back.r_outer, r.r_outer);
    }
}
