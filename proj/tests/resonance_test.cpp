#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcw/classify.hpp"
#include "qcw/resonance.hpp"

using namespace qcw;

namespace {

std::vector<oracle::Resonance> as_tuples(const std::vector<ResonanceWitness>& witnesses) {
    std::vector<oracle::Resonance> out;
    for (const auto& w : witnesses) out.emplace_back(w.i, w.j, std::vector<Int>(w.k.values().begin(), w.k.values().end()));
    return out;
}

}  // namespace

TEST(CExponent, Examples) {
    const auto w357 = WeightTuple::validate({3, 5, 7});
    EXPECT_EQ(c_exponent(w357, 1, 2, MultiIndex(3)), -2);
    EXPECT_EQ(c_exponent(w357, 2, 1, MultiIndex(3)), 2);
    EXPECT_EQ(c_exponent(WeightTuple::validate({1, 2, 3}), 1, 3, MultiIndex::from({0, 1, 0})), 0);
}

TEST(CExponent, Errors) {
    const auto w = WeightTuple::validate({3, 5, 7});
    EXPECT_THROW(c_exponent(w, 2, 2, MultiIndex(3)), std::out_of_range);
    EXPECT_THROW(c_exponent(w, 0, 2, MultiIndex(3)), std::out_of_range);
    EXPECT_THROW(c_exponent(w, 1, 4, MultiIndex(3)), std::out_of_range);
    EXPECT_THROW(c_exponent(w, 1, 2, MultiIndex(2)), std::out_of_range);
}

// With the larger index first the exponent never drops below m_j - m_i.
TEST(CExponent, UpperTriangularLowerBound) {
    const auto w = WeightTuple::validate({2, 5, 9, 14});
    std::vector<Int> k(4, 0);
    for (k[0] = 0; k[0] <= 4; ++k[0])
        for (k[1] = 0; k[1] <= 4; ++k[1])
            for (k[2] = 0; k[2] <= 4; ++k[2])
                for (k[3] = 0; k[3] <= 4; ++k[3])
                    for (std::size_t i = 1; i <= 4; ++i)
                        for (std::size_t j = i + 1; j <= 4; ++j) {
                            const Int c = c_exponent(w, j, i, MultiIndex::from(k));
                            ASSERT_GE(c, w.at(j) - w.at(i));
                            ASSERT_GT(c, 0);
                        }
}

TEST(Resonances, Examples) {
    EXPECT_TRUE(resonances(WeightTuple::validate({3, 5, 7})).empty());

    // Frozen from oracle::resonances; includes 2 + 1 = 3 as (2, 3, (1, 0)).
    const std::vector<ResonanceWitness> r123 = {
        {1, 2, MultiIndex::from({1})},
        {1, 3, MultiIndex::from({0, 1})},
        {1, 3, MultiIndex::from({2, 0})},
        {2, 3, MultiIndex::from({1, 0})},
    };
    EXPECT_EQ(resonances(WeightTuple::validate({1, 2, 3})), r123);

    const std::vector<ResonanceWitness> r235 = {
        {1, 3, MultiIndex::from({0, 1})},
        {2, 3, MultiIndex::from({1, 0})},
    };
    EXPECT_EQ(resonances(WeightTuple::validate({2, 3, 5})), r235);
    EXPECT_EQ(count_resonances(WeightTuple::validate({1, 2, 3})), 4u);
}

TEST(Resonances, WitnessesSolveTheirEquation) {
    const auto w = WeightTuple::validate({2, 3, 7, 12, 13});
    const auto list = resonances(w);
    ASSERT_FALSE(list.empty());
    for (const auto& r : list) {
        ASSERT_LT(r.i, r.j);
        ASSERT_EQ(r.k.size(), r.j - 1);
        Int total = w.at(r.i);
        for (std::size_t q = 0; q < r.k.size(); ++q) total += w[q] * r.k[q];
        ASSERT_EQ(total, w.at(r.j));
    }
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
}

TEST(Properties, ResonancesMatchBoxOracle) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> len(2, 5);
    int checked = 0;
    while (checked < 300) {
        const auto m = oracle::random_increasing(rng, len(rng), 1, 30);
        if (gcd_of(m) != 1) continue;
        ++checked;
        const auto w = WeightTuple::validate(m);
        ASSERT_EQ(as_tuples(resonances(w)), oracle::resonances(m)) << w.to_string();
        ASSERT_EQ(count_resonances(w), oracle::resonances(m).size());
    }
}

TEST(ZeroSetEquivalence, Examples) {
    EXPECT_TRUE(zero_set_equivalence_check(WeightTuple::validate({3, 5, 7}), 10));
    EXPECT_TRUE(zero_set_equivalence_check(WeightTuple::validate({1, 2, 3}), 10));
    EXPECT_TRUE(zero_set_equivalence_check(WeightTuple::validate({2, 3, 5}), 0));
    EXPECT_THROW(zero_set_equivalence_check(WeightTuple::validate({2, 3, 5}), -1), ValidationError);
}

TEST(Properties, ZeroSetEquivalenceHolds) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> len(2, 4);
    std::uniform_int_distribution<Int> bound(0, 8);
    int checked = 0;
    while (checked < 80) {
        const auto m = oracle::random_increasing(rng, len(rng), 1, 25);
        if (gcd_of(m) != 1) continue;
        ++checked;
        ASSERT_TRUE(zero_set_equivalence_check(WeightTuple::validate(m), bound(rng)));
    }
}
