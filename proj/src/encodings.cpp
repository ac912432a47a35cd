#include "archcalc/encodings.hpp"

#include "archcalc/error.hpp"

#include <algorithm>

namespace archcalc {

namespace {

// Removing or adding tuples can make two relations coincide.
Architecture settle(Architecture arch)
{
    if (validate(arch).has(ViolationCode::DuplicateRelationExtension))
        return disambiguate_relations(arch);
    return arch;
}

} // namespace

Architecture encode_and_junction(const Architecture& arch, const std::vector<JunctionArm>& arms)
{
    if (arms.empty())
        throw Error(ErrorCode::JunctionShapeMismatch, "a junction needs at least one arm");

    const ElementId source = arms.front().tuple.empty() ? ElementId() : arms.front().tuple.front();
    for (const auto& arm : arms) {
        if (arm.relation >= arch.relations.size())
            throw Error(ErrorCode::JunctionShapeMismatch, "arm refers to relation #" + std::to_string(arm.relation));
        const Relation& r = arch.relations[arm.relation];
        if (r.arity != 2 || arm.tuple.size() != 2)
            throw Error(ErrorCode::JunctionShapeMismatch, "relation " + r.name + " is not binary");
        if (!r.tuples.contains(arm.tuple))
            throw Error(ErrorCode::JunctionShapeMismatch, to_string(arm.tuple) + " is not in relation " + r.name);
        if (arm.tuple.front() != source)
            throw Error(ErrorCode::JunctionShapeMismatch,
                        "arms start at " + source.str() + " and " + arm.tuple.front().str());
    }

    if (arms.size() == 1)
        return arch;

    Architecture out = arch;
    Relation joined{arch.relations[arms.front().relation].name + "_and", arms.size() + 1, {}};
    Tuple wide{source};
    for (const auto& arm : arms) {
        out.relations[arm.relation].tuples.erase(arm.tuple);
        wide.push_back(arm.tuple[1]);
    }
    joined.tuples.insert(std::move(wide));

    std::set<std::size_t> touched;
    for (const auto& arm : arms)
        touched.insert(arm.relation);
    std::vector<Relation> kept;
    for (std::size_t i = 0; i < out.relations.size(); ++i)
        if (!touched.contains(i) || !out.relations[i].tuples.empty())
            kept.push_back(std::move(out.relations[i]));
    kept.push_back(std::move(joined));
    out.relations = std::move(kept);
    return settle(std::move(out));
}

Architecture encode_or_junction(const Architecture& arch, std::size_t relation, const ElementId& source,
                                const ElementSet& targets)
{
    if (relation >= arch.relations.size() || arch.relations[relation].arity != 2)
        throw Error(ErrorCode::JunctionShapeMismatch, "OR-junctions are encoded into a binary relation");
    ElementSet universe = arch.universe_set();
    if (!universe.contains(source))
        throw Error(ErrorCode::InvalidArgument, "junction source " + source.str() + " is not in the universe");
    for (const auto& t : targets)
        if (!universe.contains(t))
            throw Error(ErrorCode::InvalidArgument, "junction target " + t.str() + " is not in the universe");

    Architecture out = arch;
    ElementId omega = fresh_element(universe, "·omega", true);
    out.universe.push_back(omega);
    auto& tuples = out.relations[relation].tuples;
    tuples.insert({source, omega});
    for (const auto& t : targets)
        tuples.insert({omega, t});
    return settle(std::move(out));
}

Architecture indicator_function(const Architecture& arch, const LayerSpec& layer)
{
    ElementSet universe = arch.universe_set();
    for (const auto& m : layer.members)
        if (!universe.contains(m))
            throw Error(ErrorCode::InvalidArgument, "layer member " + m.str() + " is not in the universe");

    Architecture out = arch;
    std::map<Tuple, ElementId> mapping;
    for (const auto& e : universe)
        if (e != indicator_member_code && e != indicator_non_member_code)
            mapping.emplace(Tuple{e}, layer.members.contains(e) ? indicator_member_code : indicator_non_member_code);
    for (const auto& code : {indicator_member_code, indicator_non_member_code})
        if (!universe.contains(code))
            out.universe.push_back(code);
    out.functions.push_back(FunctionTable::from_mapping("f_" + layer.name, 1, std::move(mapping)));
    return out;
}

Architecture wilkinson_base()
{
    Architecture c;
    c.name = "C";
    c.universe = {"A", "x", "b"};
    c.relations.push_back(Relation{"R_bullet", 2, {{"A", "x"}}});
    c.relations.push_back(Relation{"R_eq", 2, {{"x", "b"}}});
    return c;
}

Architecture wilkinson_star()
{
    Architecture c = wilkinson_base();
    c.name = "C_star";
    std::map<Tuple, ElementId> f;
    for (const char* a : {"a11", "a12", "a21", "a22"})
        f.emplace(Tuple{a}, "A");
    for (const char* x : {"x1", "x2"})
        f.emplace(Tuple{x}, "x");
    for (const char* b : {"b1", "b2"})
        f.emplace(Tuple{b}, "b");
    for (const auto& [args, _] : f)
        c.universe.push_back(args.front());
    c.functions.push_back(FunctionTable::from_mapping("f_star", 1, std::move(f)));
    return c;
}

TorchLabels default_torch_labels()
{
    return TorchLabels{
        {"EnergyStore", "EnergyTransferMechanism", "LightEmitter", "Housing", "Light", "Scene", "User"},
        {"is_transferred_by", "is_consumed_by", "is_held_by", "energizes", "emits", "illuminates", "is_observed_by"},
    };
}

Architecture torch_fixture(const TorchLabels& labels)
{
    const auto& c = labels.concepts;
    // (from, to) concept indices, one per relation label.
    constexpr std::array<std::pair<int, int>, 7> edges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 4}, {4, 5}, {5, 6}}};

    Architecture torch;
    torch.name = "torch";
    torch.universe.assign(c.begin(), c.end());
    for (std::size_t i = 0; i < edges.size(); ++i)
        torch.relations.push_back(
            Relation{labels.relations[i], 2, {{c[edges[i].first], c[edges[i].second]}}});
    return torch;
}

} // namespace archcalc
