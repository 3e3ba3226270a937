#include <gtest/gtest.h>

#include "brute_force.hpp"
#include <wittpaths/oracle.hpp>
#include <wittpaths/path_counts.hpp>

namespace wittpaths
{
namespace
{

BigInt big(std::uint64_t v)
{
    return BigInt(std::to_string(v));
}

TEST(Word, Validation)
{
    EXPECT_THROW(Word({}), std::invalid_argument);
    EXPECT_THROW(Word({{1, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(Word({{1, 0}, {2, 1}}), std::invalid_argument);
    EXPECT_THROW(Word({{1, 2}, {2, 1}}, 2), std::invalid_argument);
    Word w({{1, -2}, {2, 1}, {1, 1}, {2, 3}});
    EXPECT_EQ(w.block_count(), 4u);
    EXPECT_EQ(w.negative_count(), 1u);
    EXPECT_EQ(w.length(), 7u);
    EXPECT_EQ(w.edge_counts(2), (std::vector<unsigned>{3, 4}));
    EXPECT_EQ(w.letters(), (std::vector<int>{-1, -1, 2, 1, 2, 2, 2}));
}

TEST(WordPeriod, Examples)
{
    EXPECT_EQ(word_period(Word({{1, 1}, {2, 1}, {1, 1}, {2, 1}})), 2u);
    EXPECT_EQ(word_period(Word({{1, -2}, {2, 1}, {1, 1}, {2, 3}})), 1u);
    EXPECT_EQ(word_period(Word({{1, 1}, {2, 1}, {1, 1}, {2, 2}})), 1u);
    EXPECT_EQ(word_period(Word({{1, 3}})), 3u);
}

TEST(WordCount, Examples)
{
    EXPECT_EQ(count_words({2, 2}), 48);
    EXPECT_EQ(count_words({1, 1}), 8);
    EXPECT_EQ(count_words({1, 1, 1}), 48);
    EXPECT_EQ(count_words({1}), 2);
}

TEST(WordCount, MatchesLetterStringsAndFormula)
{
    for (unsigned r = 2; r <= 3; ++r) {
        for (const auto &e : brute::multidegrees(r, 8)) {
            MultiDegree m(e);
            auto strings = brute::reduced_strings(e);
            EXPECT_EQ(count_words(m), big(strings.reduced_strings)) << m;
            EXPECT_EQ(count_words(m), witt_F_prime(m)) << m;
        }
    }
}

TEST(CanonicalForm, RotationInvariant)
{
    std::vector<Word> words;
    enumerate_words(MultiDegree{2, 3, 1}, [&](const Word &w) { words.push_back(w); });
    ASSERT_FALSE(words.empty());
    for (const Word &w : words) {
        const Word canon = canonical_form(w);
        auto blocks = w.blocks();
        for (std::size_t s = 0; s < blocks.size(); ++s) {
            std::rotate(blocks.begin(), blocks.begin() + 1, blocks.end());
            EXPECT_EQ(canonical_form(Word(blocks)).to_string(), canon.to_string());
        }
    }
}

TEST(WordCensus, PeriodicAccountingRecoversTotal)
{
    for (const auto &e : std::vector<std::vector<unsigned>>{{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 2}}) {
        MultiDegree m(e);
        WordCensus census = word_census(m);
        BigInt total = 0;
        for (const auto &[period, classes] : census.classes_by_period) {
            total += classes * (m.total() / period);
        }
        EXPECT_EQ(total, census.total_words) << m;
        EXPECT_EQ(census.classes_by_period[1], census.nonperiodic_classes) << m;
    }
}

TEST(ThetaOracle, Examples)
{
    EXPECT_EQ(theta_oracle({2, 2}), 10);
    EXPECT_EQ(theta_oracle({1, 1}), 4);
    EXPECT_EQ(theta_oracle({2, 2, 2}), 504);
    EXPECT_EQ(theta_oracle({1}), 2);
}

TEST(ThetaOracle, MatchesFormulaAndStrings)
{
    for (unsigned r = 2; r <= 3; ++r) {
        for (const auto &e : brute::multidegrees(r, r == 2 ? 10 : 8)) {
            MultiDegree m(e);
            BigInt oracle = theta_oracle(m);
            EXPECT_EQ(oracle, theta(m)) << m;
            if (m.total() <= 8) {
                EXPECT_EQ(oracle, big(brute::reduced_strings(e).nonperiodic_classes)) << m;
            }
        }
    }
}

TEST(NecklaceOracle, Examples)
{
    EXPECT_EQ(necklace_M_oracle({2, 2}), 1);
    EXPECT_EQ(necklace_M_oracle({1, 1}), 1);
    EXPECT_EQ(necklace_M_oracle({1, 2}), 1);
}

TEST(NecklaceOracle, MatchesWittFormula)
{
    for (unsigned r = 2; r <= 3; ++r) {
        for (const auto &e : brute::multidegrees(r, 10)) {
            MultiDegree m(e);
            EXPECT_EQ(necklace_M_oracle(m), witt_M(m)) << m;
        }
    }
}

TEST(SignedNecklaceOracle, Examples)
{
    EXPECT_EQ(signed_necklace_oracle({2, 2}), 10);
    EXPECT_EQ(signed_necklace_oracle({1, 1}), 4);
    EXPECT_EQ(signed_necklace_oracle({1, 1, 1}), 16);
}

TEST(SignedNecklaceOracle, MatchesWordClasses)
{
    for (unsigned r = 2; r <= 3; ++r) {
        for (const auto &e : brute::multidegrees(r, 8)) {
            MultiDegree m(e);
            EXPECT_EQ(signed_necklace_oracle(m), theta_oracle(m)) << m;
        }
    }
}

TEST(Oracle, RefusesLargeInputs)
{
    EXPECT_THROW(theta_oracle({7, 6}), ResourceLimitError);
    EXPECT_THROW(necklace_M_oracle({7, 6}), ResourceLimitError);
    EXPECT_THROW(signed_necklace_oracle({7, 6}), ResourceLimitError);
    EXPECT_EQ(necklace_M_oracle({7, 6}, OracleLimits{13}), witt_M({7, 6}));
}

TEST(Necklace, Rendering)
{
    std::vector<std::string> seen;
    for_each_signed_necklace(MultiDegree{1, 1}, [&](const NecklaceColouring &c) { seen.push_back(c.to_string()); });
    EXPECT_EQ(seen.size(), 4u);
    std::vector<std::string> plain;
    for_each_necklace(MultiDegree{2, 1}, [&](const NecklaceColouring &c) { plain.push_back(c.to_string()); });
    EXPECT_EQ(plain, (std::vector<std::string>{"112"}));
}

} // namespace
} // namespace wittpaths
