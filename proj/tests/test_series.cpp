#include <gtest/gtest.h>

#include <random>
#include <set>

#include <pedlab/eta_theta.hpp>
#include <pedlab/series.hpp>

using namespace pedlab;

namespace {

ExactSeries random_series(std::mt19937 &rng, std::size_t order, bool unit_constant = false)
{
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<BigInt> cs;
    for (std::size_t i = 0; i < order; ++i) {
        cs.emplace_back(d(rng));
    }
    if (unit_constant && order > 0) {
        cs[0] = (rng() & 1U) ? 1 : -1;
    }
    return ExactSeries(std::move(cs));
}

ExactSeries all_ones(std::size_t order)
{
    return ExactSeries(std::vector<BigInt>(order, BigInt(1)));
}

} // namespace

TEST(SeriesAdd, Examples)
{
    const auto a = ExactSeries::from_ints({1, 1}, 5);
    const auto b = ExactSeries::from_ints({1, -1}, 5);
    EXPECT_EQ(a + b, ExactSeries::from_ints({2}, 5));
    EXPECT_EQ(a + ExactSeries::zero(3), truncate(a, 3));

    const ModDomain m3{3};
    const auto one = ModSeries::from_ints({1}, 1, m3);
    const auto two = ModSeries::from_ints({2}, 1, m3);
    EXPECT_TRUE((one + two).is_zero());
}

TEST(SeriesAdd, DomainMismatch)
{
    const auto a = ModSeries::from_ints({1}, 4, ModDomain{24});
    const auto b = ModSeries::from_ints({1}, 4, ModDomain{192});
    EXPECT_THROW(a + b, domain_mismatch);
    EXPECT_THROW(a * b, domain_mismatch);
}

TEST(SeriesMul, Examples)
{
    const auto a = ExactSeries::from_ints({1, 1}, 4);
    const auto b = ExactSeries::from_ints({1, -1}, 4);
    EXPECT_EQ(a * b, ExactSeries::from_ints({1, 0, -1}, 4));
    EXPECT_EQ(a * ExactSeries::one(4), a);
    EXPECT_EQ((a * ExactSeries::one(2)).order(), 2u);

    // (sum q^n)^2: coefficient of q^m counts pairs (i, m - i), i.e. m + 1
    const std::size_t order = 12;
    const auto sq = all_ones(order) * all_ones(order);
    const std::vector<int> by_hand{1, 2, 3, 4, 5};
    for (std::size_t m = 0; m < by_hand.size(); ++m) {
        EXPECT_EQ(sq[m], by_hand[m]);
    }
    for (std::size_t m = 0; m < order; ++m) {
        EXPECT_EQ(sq[m], BigInt(m + 1));
    }
}

TEST(SeriesInvert, Examples)
{
    EXPECT_EQ(invert(ExactSeries::from_ints({1, -1}, 10)), all_ones(10));
    EXPECT_EQ(invert(ExactSeries::one(7)), ExactSeries::one(7));
    const auto f1 = pochhammer(1, 200);
    EXPECT_EQ(f1 * invert(f1), ExactSeries::one(200));
}

TEST(SeriesInvert, NonUnitConstant)
{
    EXPECT_THROW(invert(ExactSeries::from_ints({2, 1}, 5)), non_unit_error);
    EXPECT_THROW(invert(ModSeries::from_ints({12, 1}, 5, ModDomain{24})), non_unit_error);
    EXPECT_THROW(pow(ExactSeries::from_ints({0, 1}, 5), -1), non_unit_error);
    const auto m = ModSeries::from_ints({5, 1}, 6, ModDomain{24});
    EXPECT_EQ(m * invert(m), ModSeries::one(6, ModDomain{24}));
}

TEST(SeriesPow, Examples)
{
    const auto a = ExactSeries::from_ints({1, 1}, 6);
    EXPECT_EQ(pow(a, 2), ExactSeries::from_ints({1, 2, 1}, 6));
    EXPECT_EQ(pow(a, 0), ExactSeries::one(6));
    EXPECT_EQ(pow(a, 5), a * a * a * a * a);
    EXPECT_EQ(pow(a, -3) * pow(a, 3), ExactSeries::one(6));
}

TEST(SeriesPow, SquareOfF1IsF2ModTwo)
{
    const auto f1 = pochhammer(1, 400);
    EXPECT_EQ(reduce_mod(pow(f1, 2), 2), reduce_mod(pochhammer(2, 400), 2));
    // f_t^(2m) == f_(2t)^m (mod 2) more generally
    for (std::uint64_t t : {1, 3, 5}) {
        for (std::int64_t m : {1, 2, 3, -1, -2}) {
            EXPECT_EQ(reduce_mod(pow(pochhammer(t, 300), 2 * m), 2), reduce_mod(pow(pochhammer(2 * t, 300), m), 2))
                << "t=" << t << " m=" << m;
        }
    }
}

TEST(SeriesScaleExponent, Examples)
{
    EXPECT_EQ(scale_exponent(ExactSeries::from_ints({1, 1}, 2), 5), ExactSeries::from_ints({1, 0, 0, 0, 0, 1}, 10));
    const auto a = ExactSeries::from_ints({3, -1, 4, 1}, 4);
    EXPECT_EQ(scale_exponent(a, 1), a);
    EXPECT_EQ(scale_exponent(pochhammer(1, 40), 25), pochhammer(25, 1000));
    EXPECT_THROW(scale_exponent(a, 0), std::invalid_argument);
}

TEST(SeriesDissect, Examples)
{
    EXPECT_EQ(dissect(all_ones(50), 5, 4), all_ones(10));
    const auto a = ExactSeries::from_ints({3, -1, 4, 1, 5}, 5);
    EXPECT_EQ(dissect(a, 1, 0), a);
    // ceil((order - r) / m)
    EXPECT_EQ(dissect(all_ones(7), 5, 1).order(), 2u);
    EXPECT_EQ(dissect(all_ones(7), 5, 2).order(), 1u);
    EXPECT_EQ(dissect(all_ones(2), 5, 3).order(), 0u);
    EXPECT_THROW(dissect(a, 5, 5), std::invalid_argument);
}

TEST(SeriesDissect, PentagonalNumbersAvoidThreeModFive)
{
    // brute force: which residues mod 5 do k(3k+1)/2, k in Z, reach?
    std::set<int> residues;
    for (int k = -50; k <= 50; ++k) {
        residues.insert(((k * (3 * k + 1) / 2) % 5 + 5) % 5);
    }
    EXPECT_EQ(residues.count(3), 0u);
    EXPECT_EQ(residues.count(4), 0u);
    EXPECT_TRUE(dissect(pochhammer(1, 1000), 5, 3).is_zero());
    EXPECT_TRUE(dissect(pochhammer(1, 1000), 5, 4).is_zero());
    EXPECT_FALSE(dissect(pochhammer(1, 1000), 5, 2).is_zero());
}

TEST(SeriesReduceMod, Examples)
{
    EXPECT_EQ(reduce_mod(ExactSeries::from_ints({12, 36}, 2), 24), ModSeries::from_ints({12, 12}, 2, ModDomain{24}));
    EXPECT_EQ(reduce_mod(ExactSeries::from_ints({-1}, 1), 24)[0].residue(), 23u);
    EXPECT_EQ(reduce_mod(pow(pochhammer(1, 300), 2), 2), reduce_mod(pochhammer(2, 300), 2));
    EXPECT_THROW(reduce_mod(ExactSeries::one(3), 1), std::invalid_argument);
    EXPECT_EQ(reduce_mod(ExactSeries::one(3), 5).order(), 3u);
}

TEST(SeriesZeroOrder, AbsorbsOperations)
{
    const auto empty = ExactSeries::zero(0);
    const auto a = ExactSeries::from_ints({1, 2, 3}, 3);
    EXPECT_EQ((a + empty).order(), 0u);
    EXPECT_EQ((a * empty).order(), 0u);
    EXPECT_EQ(invert(empty).order(), 0u);
    EXPECT_EQ(dissect(empty, 5, 4).order(), 0u);
}

TEST(SeriesProperties, RingAxioms)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(rng, 1 + rng() % 25);
        const auto b = random_series(rng, 1 + rng() % 25);
        const auto c = random_series(rng, 1 + rng() % 25);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b).order(), std::min(a.order(), b.order()));
    }
}

TEST(SeriesProperties, InversionContract)
{
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_series(rng, 1 + rng() % 60, true);
        EXPECT_EQ(a * invert(a), ExactSeries::one(a.order()));
    }
}

TEST(SeriesProperties, DissectionLinearityAndCompleteness)
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng() % 9;
        const std::size_t order = m * (1 + rng() % 10);
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        auto rebuilt = ExactSeries::zero(order);
        for (std::size_t r = 0; r < m; ++r) {
            EXPECT_EQ(dissect(a + b, m, r), dissect(a, m, r) + dissect(b, m, r));
            rebuilt = rebuilt + truncate(shift(scale_exponent(dissect(a, m, r), m), r), order);
        }
        EXPECT_EQ(rebuilt, a);
    }
}

TEST(SeriesProperties, ReduceModIsRingHomomorphism)
{
    std::mt19937 rng(99);
    for (std::uint64_t m : {2, 24, 192}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = random_series(rng, 30);
            const auto b = random_series(rng, 30);
            EXPECT_EQ(reduce_mod(a * b, m), reduce_mod(a, m) * reduce_mod(b, m));
            EXPECT_EQ(reduce_mod(a + b, m), reduce_mod(a, m) + reduce_mod(b, m));
        }
    }
}
