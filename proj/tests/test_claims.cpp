#include <gtest/gtest.h>

#include <sstream>

#include <pedlab/claims.hpp>

using namespace pedlab;

namespace {

ClaimFile parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_claim_file(in, "test");
}

} // namespace

TEST(ClaimFile, ParsesClaimsAndFamilies)
{
    const auto f = parse("# header\n"
                         "225 43 24 theorem first claim  # trailing comment\n"
                         "\n"
                         "9 4 8 conjecture\n"
                         "family theorem-family 1 3 10\n"
                         "family ahs-family-2 1 1\n");
    ASSERT_EQ(f.claims.size(), 2u);
    EXPECT_EQ(f.claims[0], (CongruenceClaim{225, 43, 24, ClaimStatus::theorem, "first claim"}));
    EXPECT_EQ(f.claims[1].status, ClaimStatus::conjecture);
    EXPECT_EQ(f.claims[1].label, "");
    ASSERT_EQ(f.families.size(), 2u);
    EXPECT_EQ(f.families[0], (FamilyDirective{FamilyKind::theorem_family, 1, 3, 10}));
    EXPECT_EQ(f.families[1], (FamilyDirective{FamilyKind::ahs_family_2, 1, 1, std::nullopt}));
}

TEST(ClaimFile, RejectsMalformedInput)
{
    EXPECT_THROW(parse(""), claim_parse_error);
    EXPECT_THROW(parse("# only comments\n"), claim_parse_error);
    EXPECT_THROW(parse("225 43 24 lemma x\n"), claim_parse_error);
    EXPECT_THROW(parse("225 43 theorem\n"), claim_parse_error);
    EXPECT_THROW(parse("225 -43 24 theorem\n"), claim_parse_error);
    EXPECT_THROW(parse("0 43 24 theorem\n"), claim_parse_error);
    EXPECT_THROW(parse("225 43 1 theorem\n"), claim_parse_error);
    EXPECT_THROW(parse("modulus=24\n"), claim_parse_error);
    EXPECT_THROW(parse("family theorem-family 1\n"), claim_parse_error);
    EXPECT_THROW(parse("family theorem-family 2 1\n"), claim_parse_error);
    EXPECT_THROW(parse("family theorem-family 1 1 10 extra\n"), claim_parse_error);
    EXPECT_THROW(parse("family xia-family 1 1\n"), claim_parse_error);
    try {
        parse("3 2 2 theorem\nbogus\n");
        FAIL();
    } catch (const claim_parse_error &e) {
        EXPECT_NE(std::string(e.what()).find("test:2"), std::string::npos);
    }
}

TEST(BuiltinSets, Contents)
{
    const auto ahs = builtin_claim_set("ahs");
    EXPECT_EQ(ahs.claims.size(), 3u);
    EXPECT_EQ(ahs.families.size(), 3u);
    const auto t1 = builtin_claim_set("theorem1");
    EXPECT_EQ(t1.claims.size(), 4u);
    for (const auto &c : t1.claims) {
        EXPECT_EQ(c.step, 225u);
        EXPECT_EQ(c.modulus, 24u);
    }
    const auto conj = builtin_claim_set("conjecture192");
    for (const auto &c : conj.claims) {
        EXPECT_EQ(c.status, ClaimStatus::conjecture);
        EXPECT_EQ(c.modulus, 192u);
    }
    const auto all = builtin_claim_set("all");
    EXPECT_EQ(all.claims.size(), 11u);
    EXPECT_EQ(all.families.size(), 5u);
    EXPECT_THROW(builtin_claim_set("xia"), std::invalid_argument);
}

TEST(ClaimFile, LoadMissingFile)
{
    EXPECT_THROW(load_claim_file("/nonexistent/claims.txt"), std::runtime_error);
}
