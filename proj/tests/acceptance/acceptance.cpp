// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion reports what it checked and how long it took.

#include "archcalc/category.hpp"
#include "archcalc/core.hpp"
#include "archcalc/encodings.hpp"
#include "archcalc/format.hpp"
#include "archcalc/graphbridge.hpp"
#include "archcalc/morphism.hpp"
#include "archcalc/tiers.hpp"
#include "archcalc/views.hpp"

#include "documents.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace archcalc;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    std::string first_failure;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
};

ArchitecturePtr ptr(Architecture a)
{
    return std::make_shared<const Architecture>(std::move(a));
}

void validation_codes(Outcome& out)
{
    auto only = [&](const Architecture& a, ViolationCode code, const char* label) {
        ValidationReport r = validate(a);
        out.require(r.violations.size() == 1 && r.violations[0].code == code, label);
    };

    Architecture dangling;
    dangling.universe = {"a"};
    dangling.relations.push_back(Relation{"r", 2, {{"a", "b"}}});
    only(dangling, ViolationCode::DanglingElement, "DANGLING_ELEMENT");

    Architecture arity;
    arity.universe = {"a"};
    arity.relations.push_back(Relation{"r", 2, {{"a"}}});
    only(arity, ViolationCode::ArityMismatch, "ARITY_MISMATCH");

    Architecture duplicate;
    duplicate.universe = {"a", "b"};
    duplicate.relations.push_back(Relation{"calls", 2, {{"a", "b"}}});
    duplicate.relations.push_back(Relation{"protects", 2, {{"a", "b"}}});
    only(duplicate, ViolationCode::DuplicateRelationExtension, "DUPLICATE_RELATION_EXTENSION");

    Architecture partial;
    partial.universe = {"a"};
    FunctionTable f;
    f.name = "f";
    f.arity = 1;
    f.domain = {{"a"}};
    partial.functions.push_back(f);
    only(partial, ViolationCode::PartialMapping, "PARTIAL_MAPPING");

    Architecture repeated;
    repeated.universe = {"a", "a"};
    only(repeated, ViolationCode::DuplicateElement, "DUPLICATE_ELEMENT");

    out.require(validate(empty_architecture()).ok(), "T0 valid");
    out.require(validate(trivial_architecture()).ok(), "T1 valid");
    for (std::size_t n = 1; n <= 6; ++n)
        out.require(validate(elementary_tier(n)).ok(), "Tn valid");
    out.detail << "5 codes triggered, T0, T1, T1..T6 clean";
}

std::vector<Architecture> bnc_corpus()
{
    testsupport::Rng rng(20240101);
    std::vector<Architecture> corpus;
    testsupport::BncShape shape{7, 12, 3};
    while (corpus.size() < 1000)
        corpus.push_back(testsupport::random_bnc(rng, shape));
    return corpus;
}

void max_tiers_equivalence(Outcome& out)
{
    std::size_t agree = 0;
    std::size_t total = 0;
    for (const auto& a : bnc_corpus()) {
        ++total;
        TierResult r = find_max_tiers(a);
        std::size_t oracle = testsupport::brute_force_max_tiers(a);
        if (r.tiers == oracle && testsupport::tiers_ok(a, r.witness.tiers) && r.witness.size() == r.tiers)
            ++agree;
        else
            out.require(false, "mismatch on architecture " + std::to_string(total) + ": search "
                                   + std::to_string(r.tiers) + " vs oracle " + std::to_string(oracle));
    }
    out.detail << agree << "/" << total << " agree with exhaustive partitions";
}

void tier_map_homomorphism(Outcome& out)
{
    std::size_t checked = 0;
    for (const auto& a : bnc_corpus()) {
        auto pa = ptr(a);
        TierPartition p = find_max_tiers(a).witness;
        // The maximal witness and every coarsening obtained by merging.
        for (;;) {
            if (check_tier_partition(a, p)) {
                Homomorphism h = induced_tier_homomorphism(pa, p);
                ++checked;
                out.require(check_homomorphism(h).ok(), "tier map is not a homomorphism");
                out.require(*h.target == elementary_tier(p.size()), "tier map target is not Tn");
                std::set<ElementId> image;
                for (const auto& [_, tier] : h.elements)
                    image.insert(tier);
                out.require(image.size() == p.size(), "tier map misses a tier");
                if (!a.relations.empty())
                    out.require(is_surjective(h), "tier map is not surjective");
            }
            else {
                out.require(false, "merged partition stopped being a tier partition");
            }
            if (p.size() == 1)
                break;
            p = merge_adjacent_tiers(p, 1 + checked % (p.size() - 1));
        }
    }
    out.detail << checked << " verified partitions, all induce homomorphisms";
}

void graph_round_trip(Outcome& out)
{
    testsupport::Rng rng(20240202);
    std::size_t round_trips = 0, decisions = 0, isomorphic = 0;
    for (int i = 0; i < 600; ++i) {
        Graph g = testsupport::random_graph(rng, 5);
        Architecture a = graph_to_bnc(g);
        Graph back = bnc_to_graph(a);
        SearchResult rt = find_isomorphism(ptr(a), ptr(graph_to_bnc(back)));
        out.require(rt.found() && is_isomorphism(*rt.witness), "round trip not isomorphic");
        ++round_trips;

        Graph h = std::bernoulli_distribution(0.5)(rng)
            ? testsupport::relabel(g, testsupport::random_relabeling(rng, g.vertices))
            : testsupport::random_graph(rng, 5);
        bool expected = testsupport::brute_force_graphs_isomorphic(g, h);
        SearchResult r = find_isomorphism(ptr(a), ptr(graph_to_bnc(h)));
        out.require(r.status != SearchStatus::BudgetExceeded, "isomorphism search hit the budget");
        out.require(r.found() == expected, "isomorphism decision differs from vertex-bijection enumeration");
        if (r.found())
            out.require(is_isomorphism(*r.witness), "witness is not an isomorphism");
        ++decisions;
        isomorphic += expected;
    }
    out.detail << round_trips << " round trips, " << decisions << " decisions (" << isomorphic
               << " isomorphic) match brute force";
}

void category_laws(Outcome& out)
{
    testsupport::Rng rng(20240303);
    std::size_t triples = 0;
    for (int i = 0; i < 250; ++i) {
        auto d = ptr(testsupport::random_architecture(rng));
        Homomorphism h = testsupport::random_pullback(rng, d, 2, "c");
        Homomorphism g = testsupport::random_pullback(rng, h.source, 2, "b");
        Homomorphism f = testsupport::random_pullback(rng, g.source, 2, "a");
        for (const auto* m : {&f, &g, &h})
            out.require(check_homomorphism(*m).ok(), "generated map is not a homomorphism");

        Homomorphism left = compose(h, compose(g, f));
        Homomorphism right = compose(compose(h, g), f);
        out.require(left.elements == right.elements && left.relations == right.relations
                        && left.functions == right.functions && left == right,
                    "associativity");
        for (const auto* m : {&f, &g, &h}) {
            Homomorphism l = compose(identity(m->target), *m);
            Homomorphism r = compose(*m, identity(m->source));
            out.require(l.elements == m->elements && l.relations == m->relations && l.functions == m->functions,
                        "left identity");
            out.require(r.elements == m->elements && r.relations == m->relations && r.functions == m->functions,
                        "right identity");
        }
        out.require(check_homomorphism(compose(g, f)).ok() && check_homomorphism(left).ok(), "closure");
        ++triples;
    }
    out.detail << triples << " composable triples";
}

void worked_fixtures(Outcome& out)
{
    Architecture c = wilkinson_base();
    Architecture star = wilkinson_star();
    out.require(is_sub_architecture(c, star), "C is a sub-architecture of C*");
    out.require(restrict(star, {"A", "x", "b"}) == c, "restrict(C*, {A,x,b}) = C");

    Architecture torch = torch_fixture();
    out.require(torch.universe_set().size() == 7, "torch |A| = 7");
    out.require(torch.relations.size() == 7, "torch |R| = 7");
    std::size_t tiers = find_max_tiers(torch).tiers;
    out.require(tiers == 6, "torch max tiers = 6");
    TierSearchOptions oracle;
    oracle.use_oracle = true;
    out.require(find_max_tiers(torch, oracle).tiers == 6, "torch max tiers (enumeration) = 6");

    out.require(is_sub_architecture(empty_architecture(), trivial_architecture()), "T0 sub-architecture of T1");
    for (std::size_t n = 1; n <= 6; ++n)
        out.require(elementary_tier(n).relations.at(0).tuples.size() == 3 * n - 2, "|TL(Tn)| = 3n-2");
    out.detail << "C < C*, restrict(C*) = C, torch 7/7/" << tiers << ", T0 < T1, |TL| = 3n-2 for n=1..6";
}

void format_round_trip(Outcome& out)
{
    testsupport::Rng rng(20240404);
    std::size_t documents = 0, stable = 0;
    for (int i = 0; i < 1000; ++i) {
        Document doc = testsupport::random_document(rng);
        std::string text = serialize(doc);
        Document back = parse(text);
        out.require(testsupport::equivalent(doc, back), "parse(serialize(x)) != x");
        std::string again = serialize(back);
        out.require(again == text, "serialize(parse(text)) != text");
        stable += again == text;
        ++documents;

        if (const auto* a = std::get_if<Architecture>(&doc.payload))
            out.require(serialize(testsupport::shuffled(rng, *a)) == text, "reordered copy serializes differently");
    }
    out.detail << documents << " documents round-trip, " << stable << " byte-stable";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"validation-codes", 1.0, validation_codes},
        {"max-tiers-equivalence", 60.0, max_tiers_equivalence},
        {"tier-map-homomorphism", 60.0, tier_map_homomorphism},
        {"graph-round-trip", 60.0, graph_round_trip},
        {"category-laws", 60.0, category_laws},
        {"worked-fixtures", 5.0, worked_fixtures},
        {"format-round-trip", 60.0, format_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(out);
        }
        catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(seconds <= c.limit_seconds, "runtime over " + std::to_string(c.limit_seconds) + " s");
        std::printf("%s %-24s %7.3fs  %s%s%s\n", out.ok ? "PASS" : "FAIL", c.name, seconds, out.detail.str().c_str(),
                    out.ok ? "" : "  -- ", out.first_failure.c_str());
        failures += !out.ok;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
