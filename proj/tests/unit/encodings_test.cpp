#include "archcalc/category.hpp"
#include "archcalc/encodings.hpp"
#include "archcalc/error.hpp"
#include "archcalc/tiers.hpp"
#include "archcalc/views.hpp"

#include <gtest/gtest.h>

using namespace archcalc;

namespace {

Architecture two_arms()
{
    Architecture a;
    a.universe = {"a", "b", "c"};
    a.relations.push_back(Relation{"R1", 2, {{"a", "b"}}});
    a.relations.push_back(Relation{"R2", 2, {{"a", "c"}}});
    return a;
}

} // namespace

TEST(AndJunction, JoinsIntoOneWideRelation)
{
    Architecture out = encode_and_junction(two_arms(), {{0, {"a", "b"}}, {1, {"a", "c"}}});
    EXPECT_TRUE(validate(out).ok());
    ASSERT_EQ(out.relations.size(), 1u);
    EXPECT_EQ(out.relations[0].arity, 3u);
    EXPECT_EQ(out.relations[0].tuples, (std::set<Tuple>{{"a", "b", "c"}}));
}

TEST(AndJunction, KeepsUnrelatedTuples)
{
    Architecture a = two_arms();
    a.relations[0].tuples.insert({"b", "c"});
    Architecture out = encode_and_junction(a, {{0, {"a", "b"}}, {1, {"a", "c"}}});
    EXPECT_TRUE(validate(out).ok());
    ASSERT_EQ(out.relations.size(), 2u);
    EXPECT_EQ(out.relations[0].tuples, (std::set<Tuple>{{"b", "c"}}));
    EXPECT_EQ(out.relations[1].tuples.size(), 1u);
}

TEST(AndJunction, SingleArmIsUnchanged)
{
    Architecture out = encode_and_junction(two_arms(), {{0, {"a", "b"}}});
    EXPECT_EQ(out, two_arms());
    EXPECT_EQ(out.relations[0].arity, 2u);
}

TEST(AndJunction, ShapeMismatch)
{
    auto code_of = [](const std::vector<JunctionArm>& arms, Architecture a = two_arms()) {
        try {
            encode_and_junction(a, arms);
        }
        catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    Architecture different = two_arms();
    different.relations[1].tuples = {{"b", "c"}};
    EXPECT_EQ(code_of({{0, {"a", "b"}}, {1, {"b", "c"}}}, different), ErrorCode::JunctionShapeMismatch);
    EXPECT_EQ(code_of({{0, {"a", "c"}}}), ErrorCode::JunctionShapeMismatch);
    EXPECT_EQ(code_of({{5, {"a", "b"}}}), ErrorCode::JunctionShapeMismatch);
    EXPECT_EQ(code_of({}), ErrorCode::JunctionShapeMismatch);
}

TEST(OrJunction, AddsOmega)
{
    Architecture a;
    a.universe = {"a", "b", "c"};
    a.relations.push_back(Relation{"R", 2, {}});
    Architecture out = encode_or_junction(a, 0, "a", {"b", "c"});
    EXPECT_TRUE(validate(out).ok());
    EXPECT_TRUE(is_bnc(out));
    ASSERT_EQ(out.universe.size(), 4u);
    ElementId omega = out.universe.back();
    EXPECT_EQ(out.relations[0].tuples, (std::set<Tuple>{{"a", omega}, {omega, "b"}, {omega, "c"}}));

    Architecture only = encode_or_junction(a, 0, "a", {});
    EXPECT_EQ(only.relations[0].tuples.size(), 1u);
}

TEST(OrJunction, TwoJunctionsGetDistinctOmegas)
{
    Architecture a;
    a.universe = {"a", "b", "c"};
    a.relations.push_back(Relation{"R", 2, {}});
    Architecture once = encode_or_junction(a, 0, "a", {"b"});
    Architecture twice = encode_or_junction(once, 0, "b", {"c"});
    EXPECT_TRUE(validate(twice).ok());
    EXPECT_EQ(twice.universe.size(), 5u);
    EXPECT_NE(twice.universe[3], twice.universe[4]);
    EXPECT_EQ(twice.universe[3], ElementId("·omega1"));
    EXPECT_EQ(twice.universe[4], ElementId("·omega2"));
    EXPECT_THROW(encode_or_junction(a, 0, "zz", {}), Error);
}

TEST(Indicator, Values)
{
    Architecture a;
    a.universe = {"a", "b"};
    Architecture out = indicator_function(a, {"L", {"a"}});
    EXPECT_TRUE(validate(out).ok());
    ASSERT_EQ(out.functions.size(), 1u);
    const auto& f = out.functions[0];
    EXPECT_EQ(f.apply({"a"}), indicator_member_code);
    EXPECT_EQ(f.apply({"b"}), indicator_non_member_code);
    EXPECT_EQ(out.universe.size(), 4u);

    Architecture none = indicator_function(a, {"none", {}});
    for (const auto& [args, v] : none.functions[0].mapping)
        EXPECT_EQ(v, indicator_non_member_code);
    Architecture all = indicator_function(a, {"all", {"a", "b"}});
    for (const auto& [args, v] : all.functions[0].mapping)
        EXPECT_EQ(v, indicator_member_code);
}

TEST(Indicator, IdentityHasNoDomainEscape)
{
    Architecture out = indicator_function(wilkinson_base(), {"L", {"A", "x"}});
    out = indicator_function(out, {"M", {"b"}});
    EXPECT_TRUE(check_homomorphism(identity(std::make_shared<const Architecture>(out))).ok());
}

TEST(Wilkinson, Fixtures)
{
    Architecture c = wilkinson_base();
    Architecture star = wilkinson_star();
    EXPECT_TRUE(validate(c).ok());
    EXPECT_TRUE(validate(star).ok());
    EXPECT_EQ(star.universe.size(), 11u);
    EXPECT_TRUE(is_sub_architecture(c, star));
    EXPECT_EQ(restrict(star, {"A", "x", "b"}), c);
    EXPECT_EQ(star.functions[0].apply({"a21"}), ElementId("A"));
    EXPECT_EQ(star.functions[0].apply({"x2"}), ElementId("x"));
    EXPECT_EQ(star.functions[0].apply({"b1"}), ElementId("b"));
}

TEST(Torch, Fixture)
{
    Architecture t = torch_fixture();
    EXPECT_TRUE(validate(t).ok());
    EXPECT_TRUE(is_bnc(t));
    EXPECT_EQ(t.universe_set().size(), 7u);
    EXPECT_EQ(t.relations.size(), 7u);
    for (const auto& r : t.relations)
        EXPECT_EQ(r.tuples.size(), 1u);
    EXPECT_EQ(find_max_tiers(t).tiers, 6u);

    TorchLabels labels = default_torch_labels();
    labels.concepts[6] = "Observer";
    EXPECT_TRUE(torch_fixture(labels).contains("Observer"));
}
