#include <gtest/gtest.h>

#include <numeric>

#include <pedlab/coeff.hpp>

using pedlab::ModInt;

TEST(ModInt, NormalizesIntoRange)
{
    EXPECT_EQ(ModInt(50, 24).residue(), 2u);
    EXPECT_EQ(ModInt::from_signed(-1, 24).residue(), 23u);
    EXPECT_EQ(ModInt::from_signed(-48, 24).residue(), 0u);
    EXPECT_EQ(ModInt::from_signed(INT64_MIN, 7).residue(), ModInt::from_big(pedlab::BigInt(INT64_MIN), 7).residue());
    EXPECT_EQ(ModInt::from_big(pedlab::BigInt(-25), 24).residue(), 23u);
}

TEST(ModInt, RejectsModulusBelowTwo)
{
    EXPECT_THROW(ModInt(0, 1), std::invalid_argument);
    EXPECT_THROW(ModInt(0, 0), std::invalid_argument);
}

TEST(ModInt, Wraparound)
{
    EXPECT_EQ((ModInt(1, 3) + ModInt(2, 3)).residue(), 0u);
    EXPECT_EQ((ModInt(1, 3) - ModInt(2, 3)).residue(), 2u);
    EXPECT_EQ((-ModInt(1, 3)).residue(), 2u);
    EXPECT_EQ((ModInt(11, 24) * ModInt(13, 24)).residue(), (11u * 13u) % 24u);
    const std::uint64_t big = (1ULL << 63) + 5;
    EXPECT_EQ((ModInt(big - 1, big) + ModInt(big - 1, big)).residue(), big - 2);
    EXPECT_EQ((ModInt(big - 1, big) * ModInt(big - 1, big)).residue(), 1u);
}

TEST(ModInt, MixedModuliIsAnError)
{
    EXPECT_THROW(ModInt(1, 24) + ModInt(1, 192), pedlab::domain_mismatch);
    EXPECT_THROW(ModInt(1, 24) * ModInt(1, 12), pedlab::domain_mismatch);
}

TEST(ModInt, Inverse)
{
    for (std::uint64_t a = 1; a < 24; ++a) {
        const ModInt x(a, 24);
        if (std::gcd(a, std::uint64_t{24}) == 1) {
            EXPECT_EQ((x * x.inverse()).residue(), 1u);
        } else {
            EXPECT_FALSE(x.is_unit());
            EXPECT_THROW(x.inverse(), pedlab::non_unit_error);
        }
    }
}

TEST(BigIntTraits, UnitsAreSignOnly)
{
    using T = pedlab::coeff_traits<pedlab::BigInt>;
    EXPECT_TRUE(T::is_unit(pedlab::BigInt(-1)));
    EXPECT_FALSE(T::is_unit(pedlab::BigInt(2)));
    EXPECT_THROW(T::unit_inverse(pedlab::BigInt(12)), pedlab::non_unit_error);
}
