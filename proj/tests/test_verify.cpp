#include "test_util.hpp"

using namespace finestruct;

TEST(Verify, CheckSemantics) {
    EXPECT_TRUE((verify::Check{"a", 1e-9, 1e-8}.pass()));
    EXPECT_FALSE((verify::Check{"a", 1e-7, 1e-8}.pass()));
    EXPECT_TRUE((verify::Check{"r", 0.5, 1e-3, true}.pass()));
    EXPECT_FALSE((verify::Check{"r", 1e-6, 1e-3, true}.pass()));
    EXPECT_FALSE((verify::Check{"n", std::nan(""), 1.0}.pass()));
}

TEST(Verify, ExceptionsCountAsFailures) {
    const double r = verify::parallel_max(4, 2, [](int i) -> double {
        if (i == 2) throw singularity_error("boom", 0.0);
        return 0.0;
    });
    EXPECT_TRUE(std::isinf(r));
}

TEST(Verify, SamplerIsDeterministicPerCheck) {
    verify::Sampler a(7, "x", 3), b(7, "x", 3), c(7, "y", 3);
    const Quaternion qa = a.ball(1.0), qb = b.ball(1.0), qc_ = c.ball(1.0);
    EXPECT_EQ(qa, qb);
    EXPECT_NE(qa, qc_);
}

TEST(Verify, ResultsIndependentOfThreadCount) {
    verify::Options one{99, 1}, many{99, 4};
    const auto a = verify::run_group("integrals", one), b = verify::run_group("integrals", many);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].residual, b.checks[i].residual);
}

TEST(Verify, UnknownGroup) { EXPECT_THROW(verify::run_group("nope", {}), std::invalid_argument); }
