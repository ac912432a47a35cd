#include "archcalc/category.hpp"
#include "archcalc/encodings.hpp"
#include "archcalc/morphism.hpp"
#include "archcalc/tiers.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace archcalc;

namespace {

ArchitecturePtr ptr(Architecture a)
{
    return std::make_shared<const Architecture>(std::move(a));
}

Architecture triangle()
{
    Architecture a;
    a.universe = {"a", "b", "c"};
    a.relations.push_back(Relation{"R", 2, {{"a", "b"}, {"b", "c"}, {"a", "c"}}});
    return a;
}

Architecture path3()
{
    Architecture a;
    a.universe = {"a", "b", "c"};
    a.relations.push_back(Relation{"R", 2, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}}});
    return a;
}

Homomorphism map_abc_to_123(const Architecture& source)
{
    Homomorphism h;
    h.source = ptr(source);
    h.target = ptr(elementary_tier(3));
    h.elements = {{"a", "1"}, {"b", "2"}, {"c", "3"}};
    h.relations = {0};
    return h;
}

} // namespace

TEST(CheckHomomorphism, IdentityPasses)
{
    testsupport::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        auto a = ptr(testsupport::random_architecture(rng));
        EXPECT_TRUE(check_homomorphism(identity(a)).ok());
    }
}

TEST(CheckHomomorphism, TriangleOntoT3FailsAtAC)
{
    MorphismReport r = check_homomorphism(map_abc_to_123(triangle()));
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].code, MorphismViolationCode::RelationNotPreserved);
    EXPECT_EQ(r.violations[0].tuple, (Tuple{"a", "c"}));
}

TEST(CheckHomomorphism, StructuralProblems)
{
    Homomorphism h = map_abc_to_123(path3());
    h.elements.erase("c");
    EXPECT_TRUE(check_homomorphism(h).has(MorphismViolationCode::MapNotTotal));

    h = map_abc_to_123(path3());
    h.elements["c"] = "9";
    EXPECT_TRUE(check_homomorphism(h).has(MorphismViolationCode::MapOutOfRange));

    Architecture ternary = path3();
    ternary.relations.push_back(Relation{"S", 3, {}});
    h = map_abc_to_123(ternary);
    h.relations = {0, 0};
    EXPECT_TRUE(check_homomorphism(h).has(MorphismViolationCode::ArityNotPreserved));
}

TEST(CheckHomomorphism, FunctionConditions)
{
    Architecture a;
    a.universe = {"x", "y"};
    a.functions.push_back(FunctionTable::from_mapping("f", 1, {{{"x"}, "y"}}));
    Architecture b;
    b.universe = {"p", "q"};
    b.functions.push_back(FunctionTable::from_mapping("g", 1, {{{"p"}, "p"}}));

    Homomorphism h;
    h.source = ptr(a);
    h.target = ptr(b);
    h.functions = {0};

    h.elements = {{"x", "p"}, {"y", "p"}};
    EXPECT_TRUE(check_homomorphism(h).ok());

    h.elements = {{"x", "p"}, {"y", "q"}};
    EXPECT_TRUE(check_homomorphism(h).has(MorphismViolationCode::FunctionNotCommuting));

    h.elements = {{"x", "q"}, {"y", "p"}};
    EXPECT_TRUE(check_homomorphism(h).has(MorphismViolationCode::FunctionDomainEscape));
}

TEST(IsIsomorphism, Examples)
{
    auto t3 = ptr(elementary_tier(3));
    EXPECT_TRUE(is_isomorphism(identity(t3)));

    Homomorphism h = map_abc_to_123(path3());
    ASSERT_TRUE(check_homomorphism(h).ok());
    EXPECT_TRUE(is_bijective(h));
    EXPECT_FALSE(is_isomorphism(h));

    testsupport::Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        auto a = ptr(testsupport::random_architecture(rng));
        std::map<ElementId, ElementId> renaming;
        for (const auto& e : a->universe)
            renaming.emplace(e, "z_" + e.str());
        Homomorphism r;
        r.source = a;
        r.target = ptr(rename_elements(*a, renaming));
        r.elements = renaming;
        for (std::size_t k = 0; k < a->relations.size(); ++k)
            r.relations.push_back(k);
        for (std::size_t k = 0; k < a->functions.size(); ++k)
            r.functions.push_back(k);
        EXPECT_TRUE(is_isomorphism(r));
        auto inv = inverse(r);
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(compose(*inv, r), identity(a));
    }
}

TEST(FindHomomorphism, WorkedExamples)
{
    SearchOptions surjective;
    surjective.flags.surjective = true;

    Architecture three_tier = path3();
    SearchResult r = find_homomorphism(ptr(three_tier), ptr(elementary_tier(3)), surjective);
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(check_homomorphism(*r.witness).ok());
    EXPECT_TRUE(is_surjective(*r.witness));

    EXPECT_EQ(find_homomorphism(ptr(triangle()), ptr(elementary_tier(3)), surjective).status, SearchStatus::None);

    SearchResult empty = find_homomorphism(ptr(empty_architecture()), ptr(wilkinson_star()));
    ASSERT_TRUE(empty.found());
    EXPECT_TRUE(empty.witness->elements.empty());
}

TEST(FindHomomorphism, BudgetExhaustionIsDistinctFromNone)
{
    SearchOptions options;
    options.flags.surjective = true;
    options.node_budget = 1;
    SearchResult r = find_homomorphism(ptr(torch_fixture()), ptr(elementary_tier(7)), options);
    EXPECT_EQ(r.status, SearchStatus::BudgetExceeded);
    EXPECT_FALSE(r.witness.has_value());
}

TEST(FindHomomorphism, AgreesWithExhaustiveEnumeration)
{
    testsupport::Rng rng(43);
    testsupport::ArchShape shape;
    shape.max_elements = 4;
    shape.max_relations = 2;
    shape.max_arity = 2;
    shape.max_tuples_per_relation = 3;
    shape.max_functions = 1;
    int found = 0;
    for (int i = 0; i < 400; ++i) {
        auto a = ptr(testsupport::random_architecture(rng, shape));
        auto b = ptr(testsupport::random_architecture(rng, shape));
        for (int mode = 0; mode < 3; ++mode) {
            SearchOptions options;
            options.flags.injective = mode == 1;
            options.flags.surjective = mode == 2;
            SearchResult r = find_homomorphism(a, b, options);
            ASSERT_NE(r.status, SearchStatus::BudgetExceeded);
            bool expected = testsupport::brute_force_homomorphism_exists(*a, *b, {mode == 1, mode == 2});
            ASSERT_EQ(r.found(), expected) << "case " << i << " mode " << mode;
            if (r.found()) {
                ++found;
                EXPECT_TRUE(check_homomorphism(*r.witness).ok());
                if (mode == 1)
                    EXPECT_TRUE(is_injective(*r.witness));
                if (mode == 2)
                    EXPECT_TRUE(is_surjective(*r.witness));
            }
        }
    }
    EXPECT_GT(found, 100);
}

TEST(FindHomomorphism, DeskScaleBinaryCompleteness)
{
    testsupport::Rng rng(44);
    testsupport::BncShape shape{5, 6, 3};
    for (int i = 0; i < 300; ++i) {
        auto a = ptr(testsupport::random_bnc(rng, {4, 5, 2}));
        auto b = ptr(testsupport::random_bnc(rng, shape));
        SearchResult r = find_homomorphism(a, b);
        ASSERT_EQ(r.found(), testsupport::brute_force_homomorphism_exists(*a, *b)) << i;
    }
}

TEST(FindHomomorphism, Deterministic)
{
    testsupport::Rng rng(45);
    for (int i = 0; i < 50; ++i) {
        auto a = ptr(testsupport::random_bnc(rng));
        auto b = ptr(elementary_tier(3));
        SearchResult x = find_homomorphism(a, b);
        SearchResult y = find_homomorphism(a, b);
        ASSERT_EQ(x.status, y.status);
        if (x.found())
            EXPECT_EQ(*x.witness, *y.witness);
    }
}

TEST(FindIsomorphism, Examples)
{
    EXPECT_EQ(find_isomorphism(ptr(elementary_tier(2)), ptr(elementary_tier(3))).status, SearchStatus::None);
    SearchResult t1 = find_isomorphism(ptr(trivial_architecture()), ptr(trivial_architecture()));
    ASSERT_TRUE(t1.found());
    EXPECT_EQ(*t1.witness, identity(ptr(trivial_architecture())));
    EXPECT_EQ(find_isomorphism(ptr(path3()), ptr(elementary_tier(3))).status, SearchStatus::None);
}

TEST(FindIsomorphism, RenamedCopies)
{
    testsupport::Rng rng(46);
    for (int i = 0; i < 200; ++i) {
        Architecture a = testsupport::random_architecture(rng);
        std::vector<ElementId> to(a.universe.begin(), a.universe.end());
        std::shuffle(to.begin(), to.end(), rng);
        std::map<ElementId, ElementId> renaming;
        for (std::size_t k = 0; k < to.size(); ++k)
            renaming.emplace(a.universe[k], to[k]);
        auto b = ptr(testsupport::shuffled(rng, rename_elements(a, renaming)));
        SearchResult r = find_isomorphism(ptr(a), b);
        ASSERT_TRUE(r.found()) << i;
        EXPECT_TRUE(is_isomorphism(*r.witness));
    }
}

TEST(FindIsomorphism, IsAnEquivalence)
{
    testsupport::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        auto a = ptr(testsupport::random_bnc(rng, {5, 8, 2}));
        std::map<ElementId, ElementId> r1, r2;
        for (const auto& e : a->universe) {
            r1.emplace(e, "x" + e.str());
            r2.emplace("x" + e.str(), "y" + e.str());
        }
        auto b = ptr(rename_elements(*a, r1));
        auto c = ptr(rename_elements(*b, r2));
        SearchResult ab = find_isomorphism(a, b);
        SearchResult bc = find_isomorphism(b, c);
        ASSERT_TRUE(ab.found() && bc.found());
        EXPECT_TRUE(is_isomorphism(identity(a)));
        auto back = inverse(*ab.witness);
        ASSERT_TRUE(back.has_value());
        EXPECT_TRUE(is_isomorphism(*back));
        EXPECT_TRUE(is_isomorphism(compose(*bc.witness, *ab.witness)));
    }
}
