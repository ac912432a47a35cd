#include "archcalc/core.hpp"

#include <algorithm>
#include <tuple>

namespace archcalc {

namespace {

using RelationKey = std::pair<std::size_t, const std::set<Tuple>*>;

struct KeyLess {
    bool operator()(const RelationKey& a, const RelationKey& b) const
    {
        if (a.first != b.first)
            return a.first < b.first;
        return *a.second < *b.second;
    }
};

std::set<RelationKey, KeyLess> relation_keys(const Architecture& a)
{
    std::set<RelationKey, KeyLess> keys;
    for (const auto& r : a.relations)
        keys.insert({r.arity, &r.tuples});
    return keys;
}

using FunctionKey = std::tuple<std::size_t, const std::set<Tuple>*, const std::map<Tuple, ElementId>*>;

struct FunctionKeyLess {
    bool operator()(const FunctionKey& a, const FunctionKey& b) const
    {
        if (std::get<0>(a) != std::get<0>(b))
            return std::get<0>(a) < std::get<0>(b);
        if (*std::get<1>(a) != *std::get<1>(b))
            return *std::get<1>(a) < *std::get<1>(b);
        return *std::get<2>(a) < *std::get<2>(b);
    }
};

std::set<FunctionKey, FunctionKeyLess> function_keys(const Architecture& a)
{
    std::set<FunctionKey, FunctionKeyLess> keys;
    for (const auto& f : a.functions)
        keys.insert({f.arity, &f.domain, &f.mapping});
    return keys;
}

} // namespace

std::string to_string(const Tuple& tuple)
{
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i)
            out += ", ";
        out += tuple[i].str();
    }
    return out + ")";
}

FunctionTable FunctionTable::from_mapping(std::string name, std::size_t arity,
                                          std::map<Tuple, ElementId> mapping)
{
    FunctionTable f;
    f.name = std::move(name);
    f.arity = arity;
    for (const auto& [args, _] : mapping)
        f.domain.insert(args);
    f.mapping = std::move(mapping);
    return f;
}

std::optional<ElementId> FunctionTable::apply(const Tuple& args) const
{
    auto it = mapping.find(args);
    if (it == mapping.end())
        return std::nullopt;
    return it->second;
}

bool Architecture::contains(const ElementId& e) const
{
    return std::find(universe.begin(), universe.end(), e) != universe.end();
}

ElementSet Architecture::universe_set() const
{
    return ElementSet(universe.begin(), universe.end());
}

std::optional<std::size_t> Architecture::find_relation(const Relation& r) const
{
    for (std::size_t i = 0; i < relations.size(); ++i)
        if (relations[i].same_extension(r))
            return i;
    return std::nullopt;
}

std::optional<std::size_t> Architecture::find_function(const FunctionTable& f) const
{
    for (std::size_t i = 0; i < functions.size(); ++i)
        if (functions[i].same_extension(f))
            return i;
    return std::nullopt;
}

bool operator==(const Architecture& a, const Architecture& b)
{
    if (a.universe_set() != b.universe_set())
        return false;

    auto ra = relation_keys(a);
    auto rb = relation_keys(b);
    if (ra.size() != rb.size() || !std::equal(ra.begin(), ra.end(), rb.begin(), [](const auto& x, const auto& y) {
            return x.first == y.first && *x.second == *y.second;
        }))
        return false;

    auto fa = function_keys(a);
    auto fb = function_keys(b);
    return fa.size() == fb.size() && std::equal(fa.begin(), fa.end(), fb.begin(), [](const auto& x, const auto& y) {
               return std::get<0>(x) == std::get<0>(y) && *std::get<1>(x) == *std::get<1>(y)
                   && *std::get<2>(x) == *std::get<2>(y);
           });
}

const char* to_string(ViolationCode code) noexcept
{
    switch (code) {
    case ViolationCode::DanglingElement: return "DANGLING_ELEMENT";
    case ViolationCode::ArityMismatch: return "ARITY_MISMATCH";
    case ViolationCode::DuplicateRelationExtension: return "DUPLICATE_RELATION_EXTENSION";
    case ViolationCode::PartialMapping: return "PARTIAL_MAPPING";
    case ViolationCode::DuplicateElement: return "DUPLICATE_ELEMENT";
    }
    return "UNKNOWN";
}

bool ValidationReport::has(ViolationCode code) const
{
    return count(code) > 0;
}

std::size_t ValidationReport::count(ViolationCode code) const
{
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [code](const Violation& v) { return v.code == code; }));
}

ValidationReport validate(const Architecture& arch)
{
    ValidationReport report;
    auto add = [&](ViolationCode code, std::string message) {
        report.violations.push_back({code, std::move(message)});
    };

    ElementSet universe;
    for (const auto& e : arch.universe)
        if (!universe.insert(e).second)
            add(ViolationCode::DuplicateElement, "element " + e.str() + " listed more than once");

    auto check_members = [&](const Tuple& t, const std::string& owner, ElementSet& reported) {
        for (const auto& e : t)
            if (!universe.contains(e) && reported.insert(e).second)
                add(ViolationCode::DanglingElement, "element " + e.str() + " in " + owner + " is not in the universe");
    };

    for (const auto& r : arch.relations) {
        std::string owner = "relation " + r.name;
        if (r.arity == 0)
            add(ViolationCode::ArityMismatch, owner + " has arity 0");
        ElementSet reported;
        for (const auto& t : r.tuples) {
            if (t.size() != r.arity)
                add(ViolationCode::ArityMismatch, owner + "/" + std::to_string(r.arity) + " contains tuple " + to_string(t));
            check_members(t, owner, reported);
        }
    }

    for (const auto& f : arch.functions) {
        std::string owner = "function " + f.name;
        if (f.arity == 0)
            add(ViolationCode::ArityMismatch, owner + " has arity 0");
        ElementSet reported;
        for (const auto& t : f.domain) {
            if (t.size() != f.arity)
                add(ViolationCode::ArityMismatch, owner + "/" + std::to_string(f.arity) + " has domain tuple " + to_string(t));
            check_members(t, owner, reported);
        }
        for (const auto& [args, out] : f.mapping) {
            if (!f.domain.contains(args)) {
                if (args.size() != f.arity)
                    add(ViolationCode::ArityMismatch, owner + "/" + std::to_string(f.arity) + " maps tuple " + to_string(args));
                add(ViolationCode::PartialMapping, owner + " maps " + to_string(args) + " outside its domain");
                check_members(args, owner, reported);
            }
            check_members(Tuple{out}, owner, reported);
        }
        for (const auto& t : f.domain)
            if (!f.mapping.contains(t))
                add(ViolationCode::PartialMapping, owner + " is undefined on domain tuple " + to_string(t));
    }

    for (std::size_t i = 0; i < arch.relations.size(); ++i)
        for (std::size_t j = i + 1; j < arch.relations.size(); ++j)
            if (arch.relations[i].same_extension(arch.relations[j]))
                add(ViolationCode::DuplicateRelationExtension,
                    "relations " + arch.relations[i].name + " and " + arch.relations[j].name + " have the same extension");

    return report;
}

ElementId fresh_element(const ElementSet& taken, std::string_view base, bool always_number)
{
    std::string stem(base);
    if (!always_number && !taken.contains(ElementId(stem)))
        return ElementId(stem);
    for (std::size_t k = always_number ? 1 : 2;; ++k) {
        ElementId candidate(stem + std::to_string(k));
        if (!taken.contains(candidate))
            return candidate;
    }
}

Architecture disambiguate_relations(const Architecture& arch)
{
    Architecture out = arch;
    ElementSet taken = arch.universe_set();

    std::vector<bool> seen(out.relations.size(), false);
    for (std::size_t i = 0; i < out.relations.size(); ++i) {
        if (seen[i])
            continue;
        for (std::size_t j = i + 1; j < out.relations.size(); ++j) {
            if (seen[j] || !arch.relations[i].same_extension(arch.relations[j]))
                continue;
            seen[j] = true;

            ElementId marker = fresh_element(taken, "·n", true);
            taken.insert(marker);
            out.universe.push_back(marker);

            Relation& r = out.relations[j];
            std::set<Tuple> extended;
            for (const auto& t : r.tuples) {
                Tuple e;
                e.reserve(t.size() + 1);
                e.push_back(marker);
                e.insert(e.end(), t.begin(), t.end());
                extended.insert(std::move(e));
            }
            // An empty extension stays empty when prefixed, so it gets a
            // marker tuple instead.
            if (extended.empty())
                extended.insert(Tuple(r.arity + 1, marker));
            r.tuples = std::move(extended);
            ++r.arity;
        }
    }
    return out;
}

Architecture empty_architecture()
{
    Architecture t0;
    t0.name = "T0";
    return t0;
}

Architecture trivial_architecture()
{
    Architecture t1;
    t1.name = "T1";
    t1.universe = {"a"};
    t1.relations.push_back(Relation{"loop", 2, {{"a", "a"}}});
    t1.functions.push_back(FunctionTable::from_mapping("id", 1, {{{"a"}, "a"}}));
    return t1;
}

Architecture canonicalized(const Architecture& arch)
{
    Architecture out = arch;
    std::sort(out.universe.begin(), out.universe.end());
    std::stable_sort(out.relations.begin(), out.relations.end(), [](const Relation& a, const Relation& b) {
        return std::tie(a.name, a.arity, a.tuples) < std::tie(b.name, b.arity, b.tuples);
    });
    std::stable_sort(out.functions.begin(), out.functions.end(), [](const FunctionTable& a, const FunctionTable& b) {
        return std::tie(a.name, a.arity, a.domain, a.mapping) < std::tie(b.name, b.arity, b.domain, b.mapping);
    });
    return out;
}

} // namespace archcalc
