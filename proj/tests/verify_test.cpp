#include <gtest/gtest.h>

#include <wittpaths/verify.hpp>

namespace wittpaths
{
namespace
{

TEST(Sherman, Passes)
{
    EXPECT_TRUE(verify_sherman(2, 8).passed);
    EXPECT_TRUE(verify_sherman(3, 6).passed);
}

TEST(Sherman, UnitSplit)
{
    const std::vector<unsigned> unit{0, 1};
    EXPECT_EQ(sherman_plus(unit), 2);
    EXPECT_EQ(sherman_minus(unit), 0);
}

TEST(Sherman, DetectsCorruption)
{
    auto report = verify_sherman(2, 8, Corruption{{2, 2}, 1, CorruptionTarget::Secondary});
    ASSERT_FALSE(report.passed);
    ASSERT_TRUE(report.first_mismatch.has_value());
    EXPECT_EQ(report.first_mismatch->exponent, (Exponent{2, 2}));
    for (const Exponent &at : graded_monomials(2, 5, false)) {
        for (int delta : {1, -1}) {
            for (auto target : {CorruptionTarget::Primary, CorruptionTarget::Secondary}) {
                EXPECT_FALSE(verify_sherman(2, 5, Corruption{at, delta, target}).passed);
            }
        }
    }
}

TEST(Cancellation, Passes)
{
    EXPECT_TRUE(verify_cancellation(2, 8).passed);
    EXPECT_TRUE(verify_cancellation(3, 6).passed);
    EXPECT_TRUE(verify_cancellation(2, 2).passed);
}

TEST(Cancellation, DetectsCorruption)
{
    auto report = verify_cancellation(2, 8, Corruption{{2, 2}});
    ASSERT_FALSE(report.passed);
    EXPECT_EQ(report.first_mismatch->exponent, (Exponent{2, 2}));
    EXPECT_FALSE(verify_cancellation(3, 4, Corruption{{1, 1, 1}, -1, CorruptionTarget::Secondary}).passed);
}

TEST(PlusMinus, Passes)
{
    EXPECT_TRUE(verify_plus_minus_products(2, 6).passed());
    EXPECT_TRUE(verify_plus_minus_products(3, 5).passed());
}

TEST(PlusMinus, DetectsCorruptionOnEitherSide)
{
    auto plus = verify_plus_minus_products(2, 6, Corruption{{1, 2}});
    EXPECT_FALSE(plus.plus.passed);
    EXPECT_TRUE(plus.minus.passed);
    auto minus = verify_plus_minus_products(2, 6, Corruption{{1, 2}, 1, CorruptionTarget::Secondary});
    EXPECT_TRUE(minus.plus.passed);
    EXPECT_FALSE(minus.minus.passed);
}

TEST(GenWitt, Passes)
{
    for (auto kind : {WittFunctionKind::F, WittFunctionKind::G, WittFunctionKind::H}) {
        EXPECT_TRUE(verify_gen_witt(kind, 2, 6).passed) << to_string(kind);
        EXPECT_TRUE(verify_gen_witt(kind, 3, 5).passed) << to_string(kind);
    }
}

TEST(GenWitt, RationalKindsStillSatisfyTheProduct)
{
    auto report = verify_gen_witt(WittFunctionKind::F_C, 2, 5);
    EXPECT_TRUE(report.passed);
}

TEST(GenWitt, DetectsCorruption)
{
    auto report = verify_gen_witt(WittFunctionKind::H, 2, 6, Corruption{{2, 2}});
    ASSERT_FALSE(report.passed);
    EXPECT_EQ(report.first_mismatch->exponent, (Exponent{2, 2}));
}

TEST(WittClassical, Passes)
{
    EXPECT_TRUE(verify_witt_classical(2, 8).passed);
    EXPECT_TRUE(verify_witt_classical(3, 6).passed);
}

TEST(WittClassical, DetectsCorruption)
{
    EXPECT_FALSE(verify_witt_classical(3, 6, Corruption{{1, 0, 2}}).passed);
}

TEST(Verifiers, TruncationConsistency)
{
    auto high = verify_sherman(2, 7, Corruption{{3, 3}});
    auto low = verify_sherman(2, 5, Corruption{{3, 3}});
    EXPECT_FALSE(high.passed);
    EXPECT_TRUE(low.passed);
    auto g = witt_generating_series(WittFunctionKind::H, 2, 7);
    EXPECT_EQ(series_exp(g).truncated(4), series_exp(witt_generating_series(WittFunctionKind::H, 2, 4)));
}

TEST(Verifiers, RejectBadShapes)
{
    EXPECT_THROW(verify_sherman(1, 4), std::invalid_argument);
    EXPECT_THROW(verify_cancellation(2, 0), std::invalid_argument);
    EXPECT_THROW(verify_sherman(2, 4, Corruption{{1, 1, 1}}), std::invalid_argument);
}

} // namespace
} // namespace wittpaths
