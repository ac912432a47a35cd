#include "archcalc/morphism.hpp"

#include "archcalc/error.hpp"

#include <algorithm>
#include <numeric>

namespace archcalc {

Tuple Homomorphism::map(const Tuple& t) const
{
    Tuple out;
    out.reserve(t.size());
    for (const auto& e : t)
        out.push_back(elements.at(e));
    return out;
}

namespace {

// hR (or hF) as a sorted list of (source extension, target extension) pairs,
// so that maps between reordered copies of the same architectures compare
// equal.
template <class Item, class Key>
std::vector<std::pair<Key, Key>> extension_pairs(const std::vector<Item>& from, const std::vector<Item>& to,
                                                 const std::vector<std::size_t>& map, Key (*key)(const Item&))
{
    std::vector<std::pair<Key, Key>> out;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i >= from.size() || map[i] >= to.size())
            return {};
        out.emplace_back(key(from[i]), key(to[map[i]]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::size_t, std::set<Tuple>> relation_key(const Relation& r)
{
    return {r.arity, r.tuples};
}

std::pair<std::size_t, std::map<Tuple, ElementId>> function_key(const FunctionTable& f)
{
    return {f.arity, f.mapping};
}

} // namespace

bool operator==(const Homomorphism& a, const Homomorphism& b)
{
    if (a.elements != b.elements || a.relations.size() != b.relations.size()
        || a.functions.size() != b.functions.size())
        return false;
    if (!a.source || !b.source || !a.target || !b.target)
        return a.source == b.source && a.target == b.target && a.relations == b.relations
            && a.functions == b.functions;
    if (!(*a.source == *b.source) || !(*a.target == *b.target))
        return false;
    return extension_pairs(a.source->relations, a.target->relations, a.relations, relation_key)
               == extension_pairs(b.source->relations, b.target->relations, b.relations, relation_key)
        && extension_pairs(a.source->functions, a.target->functions, a.functions, function_key)
               == extension_pairs(b.source->functions, b.target->functions, b.functions, function_key);
}

const char* to_string(MorphismViolationCode code) noexcept
{
    switch (code) {
    case MorphismViolationCode::MapNotTotal: return "MAP_NOT_TOTAL";
    case MorphismViolationCode::MapOutOfRange: return "MAP_OUT_OF_RANGE";
    case MorphismViolationCode::ArityNotPreserved: return "ARITY_NOT_PRESERVED";
    case MorphismViolationCode::RelationNotPreserved: return "RELATION_NOT_PRESERVED";
    case MorphismViolationCode::FunctionDomainEscape: return "FUNCTION_DOMAIN_ESCAPE";
    case MorphismViolationCode::FunctionNotCommuting: return "FUNCTION_NOT_COMMUTING";
    }
    return "UNKNOWN";
}

bool MorphismReport::has(MorphismViolationCode code) const
{
    return std::any_of(violations.begin(), violations.end(), [code](const auto& v) { return v.code == code; });
}

MorphismReport check_homomorphism(const Homomorphism& h)
{
    MorphismReport report;
    auto add = [&](MorphismViolationCode code, std::string msg, Tuple t = {}) {
        report.violations.push_back({code, std::move(msg), std::move(t)});
    };
    if (!h.source || !h.target) {
        add(MorphismViolationCode::MapNotTotal, "missing source or target architecture");
        return report;
    }
    const Architecture& a = *h.source;
    const Architecture& b = *h.target;

    ElementSet source_universe = a.universe_set();
    ElementSet target_universe = b.universe_set();
    for (const auto& e : source_universe)
        if (!h.elements.contains(e))
            add(MorphismViolationCode::MapNotTotal, "h0 undefined on " + e.str());
    for (const auto& [from, to] : h.elements) {
        if (!source_universe.contains(from))
            add(MorphismViolationCode::MapOutOfRange, "h0 maps " + from.str() + " which is not a source element");
        if (!target_universe.contains(to))
            add(MorphismViolationCode::MapOutOfRange, "h0(" + from.str() + ") = " + to.str() + " is not a target element");
    }
    if (h.relations.size() != a.relations.size())
        add(MorphismViolationCode::MapNotTotal, "hR covers " + std::to_string(h.relations.size()) + " of "
                                                    + std::to_string(a.relations.size()) + " relations");
    if (h.functions.size() != a.functions.size())
        add(MorphismViolationCode::MapNotTotal, "hF covers " + std::to_string(h.functions.size()) + " of "
                                                    + std::to_string(a.functions.size()) + " functions");
    for (std::size_t i = 0; i < h.relations.size() && i < a.relations.size(); ++i) {
        if (h.relations[i] >= b.relations.size())
            add(MorphismViolationCode::MapOutOfRange, "hR(" + a.relations[i].name + ") is out of range");
        else if (b.relations[h.relations[i]].arity != a.relations[i].arity)
            add(MorphismViolationCode::ArityNotPreserved,
                "hR(" + a.relations[i].name + ") = " + b.relations[h.relations[i]].name + " changes arity");
    }
    for (std::size_t i = 0; i < h.functions.size() && i < a.functions.size(); ++i) {
        if (h.functions[i] >= b.functions.size())
            add(MorphismViolationCode::MapOutOfRange, "hF(" + a.functions[i].name + ") is out of range");
        else if (b.functions[h.functions[i]].arity != a.functions[i].arity)
            add(MorphismViolationCode::ArityNotPreserved,
                "hF(" + a.functions[i].name + ") = " + b.functions[h.functions[i]].name + " changes arity");
    }
    if (!report.ok())
        return report;

    for (std::size_t i = 0; i < a.relations.size(); ++i) {
        const Relation& image = b.relations[h.relations[i]];
        for (const auto& t : a.relations[i].tuples)
            if (!image.tuples.contains(h.map(t)))
                add(MorphismViolationCode::RelationNotPreserved,
                    a.relations[i].name + to_string(t) + " maps to " + image.name + to_string(h.map(t))
                        + " which does not hold",
                    t);
    }

    for (std::size_t i = 0; i < a.functions.size(); ++i) {
        const FunctionTable& f = a.functions[i];
        const FunctionTable& g = b.functions[h.functions[i]];
        for (const auto& t : f.domain) {
            Tuple mapped = h.map(t);
            auto image_value = g.apply(mapped);
            if (!image_value) {
                add(MorphismViolationCode::FunctionDomainEscape,
                    "h0" + to_string(t) + " = " + to_string(mapped) + " is outside dom(" + g.name + ")", t);
                continue;
            }
            auto value = f.apply(t);
            if (!value || h.map(*value) != *image_value)
                add(MorphismViolationCode::FunctionNotCommuting,
                    "h0(" + f.name + to_string(t) + ") differs from " + g.name + to_string(mapped), t);
        }
    }
    return report;
}

namespace {

template <class Range>
bool injective_indices(const Range& r)
{
    std::set<typename Range::value_type> seen(r.begin(), r.end());
    return seen.size() == r.size();
}

bool covers(const std::vector<std::size_t>& image, std::size_t n)
{
    std::set<std::size_t> seen(image.begin(), image.end());
    for (std::size_t i = 0; i < n; ++i)
        if (!seen.contains(i))
            return false;
    return true;
}

} // namespace

bool is_injective(const Homomorphism& h)
{
    std::set<ElementId> image;
    for (const auto& [_, to] : h.elements)
        if (!image.insert(to).second)
            return false;
    return injective_indices(h.relations) && injective_indices(h.functions);
}

bool is_surjective(const Homomorphism& h)
{
    std::set<ElementId> image;
    for (const auto& [_, to] : h.elements)
        image.insert(to);
    return image == h.target->universe_set() && covers(h.relations, h.target->relations.size())
        && covers(h.functions, h.target->functions.size());
}

bool is_bijective(const Homomorphism& h)
{
    return is_injective(h) && is_surjective(h);
}

std::optional<Homomorphism> inverse(const Homomorphism& h)
{
    if (!h.source || !h.target || !check_homomorphism(h).ok() || !is_bijective(h))
        return std::nullopt;
    Homomorphism inv;
    inv.source = h.target;
    inv.target = h.source;
    for (const auto& [from, to] : h.elements)
        inv.elements.emplace(to, from);
    inv.relations.assign(h.relations.size(), 0);
    for (std::size_t i = 0; i < h.relations.size(); ++i)
        inv.relations[h.relations[i]] = i;
    inv.functions.assign(h.functions.size(), 0);
    for (std::size_t i = 0; i < h.functions.size(); ++i)
        inv.functions[h.functions[i]] = i;
    return inv;
}

bool is_isomorphism(const Homomorphism& h)
{
    auto inv = inverse(h);
    return inv && check_homomorphism(*inv).ok();
}

Architecture rename_elements(const Architecture& arch, const std::map<ElementId, ElementId>& renaming)
{
    auto rn = [&](const ElementId& e) { return renaming.at(e); };
    auto rt = [&](const Tuple& t) {
        Tuple out;
        out.reserve(t.size());
        for (const auto& e : t)
            out.push_back(rn(e));
        return out;
    };
    Architecture out;
    out.name = arch.name;
    for (const auto& e : arch.universe)
        out.universe.push_back(rn(e));
    for (const auto& r : arch.relations) {
        Relation nr{r.name, r.arity, {}};
        for (const auto& t : r.tuples)
            nr.tuples.insert(rt(t));
        out.relations.push_back(std::move(nr));
    }
    for (const auto& f : arch.functions) {
        FunctionTable nf;
        nf.name = f.name;
        nf.arity = f.arity;
        for (const auto& t : f.domain)
            nf.domain.insert(rt(t));
        for (const auto& [args, v] : f.mapping)
            nf.mapping.emplace(rt(args), rn(v));
        out.functions.push_back(std::move(nf));
    }
    return out;
}

namespace {

struct BudgetExhausted {};

// Relation and function assignments are enumerated first; for each complete
// choice the element map is found by forward-checking backtracking.
class Searcher {
public:
    Searcher(const ArchitecturePtr& a, const ArchitecturePtr& b, const SearchOptions& options)
        : source_(a), target_(b), options_(options)
    {
        flags_ = options.flags;
        if (flags_.isomorphism)
            flags_.bijective = true;
        if (flags_.bijective)
            flags_.injective = flags_.surjective = true;

        ElementSet su = a->universe_set();
        ElementSet tu = b->universe_set();
        src_elems_.assign(su.begin(), su.end());
        tgt_elems_.assign(tu.begin(), tu.end());
        for (std::size_t i = 0; i < src_elems_.size(); ++i)
            src_index_.emplace(src_elems_[i], static_cast<int>(i));
        for (std::size_t i = 0; i < tgt_elems_.size(); ++i)
            tgt_index_.emplace(tgt_elems_[i], static_cast<int>(i));

        for (const auto& r : a->relations) {
            std::vector<std::vector<int>> ts;
            for (const auto& t : r.tuples)
                ts.push_back(encode(t, src_index_));
            src_rel_tuples_.push_back(std::move(ts));
        }
        for (const auto& r : b->relations) {
            std::set<std::vector<int>> ts;
            for (const auto& t : r.tuples)
                ts.insert(encode(t, tgt_index_));
            tgt_rel_tuples_.push_back(std::move(ts));
        }
        for (const auto& f : a->functions) {
            std::vector<std::pair<std::vector<int>, int>> entries;
            for (const auto& [args, v] : f.mapping)
                entries.emplace_back(encode(args, src_index_), src_index_.at(v));
            src_fun_entries_.push_back(std::move(entries));
        }
        for (const auto& f : b->functions) {
            std::map<std::vector<int>, int> table;
            for (const auto& [args, v] : f.mapping)
                table.emplace(encode(args, tgt_index_), tgt_index_.at(v));
            tgt_fun_tables_.push_back(std::move(table));
        }
    }

    SearchResult run()
    {
        SearchResult result;
        try {
            if (feasible_sizes() && assign_relation(0)) {
                result.status = SearchStatus::Found;
                result.witness = std::move(witness_);
            }
            else {
                result.status = SearchStatus::None;
            }
        }
        catch (const BudgetExhausted&) {
            result.status = SearchStatus::BudgetExceeded;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    struct RelConstraint {
        std::vector<int> vars;
        std::size_t target;
    };
    struct FunConstraint {
        std::vector<int> args;
        int out;
        std::size_t target;
    };
    using Domains = std::vector<std::vector<char>>;

    static std::vector<int> encode(const Tuple& t, const std::map<ElementId, int>& index)
    {
        std::vector<int> out;
        out.reserve(t.size());
        for (const auto& e : t)
            out.push_back(index.at(e));
        return out;
    }

    void tick()
    {
        if (++nodes_ > options_.node_budget)
            throw BudgetExhausted{};
    }

    bool feasible_sizes() const
    {
        auto check = [&](std::size_t n, std::size_t m) {
            if (flags_.injective && n > m)
                return false;
            if (flags_.surjective && n < m)
                return false;
            return true;
        };
        if (!src_elems_.empty() && tgt_elems_.empty())
            return false;
        return check(src_elems_.size(), tgt_elems_.size())
            && check(source_->relations.size(), target_->relations.size())
            && check(source_->functions.size(), target_->functions.size());
    }

    bool relation_candidate(std::size_t i, std::size_t j) const
    {
        const auto& r = source_->relations[i];
        const auto& s = target_->relations[j];
        if (r.arity != s.arity)
            return false;
        if (!r.tuples.empty() && s.tuples.empty())
            return false;
        if (flags_.isomorphism && r.tuples.size() != s.tuples.size())
            return false;
        return true;
    }

    bool function_candidate(std::size_t i, std::size_t j) const
    {
        const auto& f = source_->functions[i];
        const auto& g = target_->functions[j];
        if (f.arity != g.arity)
            return false;
        if (!f.domain.empty() && g.domain.empty())
            return false;
        if (flags_.isomorphism && f.domain.size() != g.domain.size())
            return false;
        return true;
    }

    // Surjectivity bookkeeping shared by the relation and function phases.
    static bool can_still_cover(const std::vector<int>& usage, std::size_t remaining)
    {
        auto uncovered = static_cast<std::size_t>(std::count(usage.begin(), usage.end(), 0));
        return uncovered <= remaining;
    }

    bool assign_relation(std::size_t i)
    {
        if (i == 0)
            rel_usage_.assign(target_->relations.size(), 0);
        if (i == source_->relations.size())
            return assign_function(0);
        for (std::size_t j = 0; j < target_->relations.size(); ++j) {
            if (!relation_candidate(i, j) || (flags_.injective && rel_usage_[j]))
                continue;
            tick();
            hr_.resize(i);
            hr_.push_back(j);
            ++rel_usage_[j];
            bool ok = !flags_.surjective || can_still_cover(rel_usage_, source_->relations.size() - i - 1);
            if (ok && assign_relation(i + 1))
                return true;
            --rel_usage_[j];
        }
        return false;
    }

    bool assign_function(std::size_t i)
    {
        if (i == 0)
            fun_usage_.assign(target_->functions.size(), 0);
        if (i == source_->functions.size())
            return search_elements();
        for (std::size_t j = 0; j < target_->functions.size(); ++j) {
            if (!function_candidate(i, j) || (flags_.injective && fun_usage_[j]))
                continue;
            tick();
            hf_.resize(i);
            hf_.push_back(j);
            ++fun_usage_[j];
            bool ok = !flags_.surjective || can_still_cover(fun_usage_, source_->functions.size() - i - 1);
            if (ok && assign_function(i + 1))
                return true;
            --fun_usage_[j];
        }
        return false;
    }

    bool search_elements()
    {
        const std::size_t n = src_elems_.size();
        const std::size_t m = tgt_elems_.size();
        rel_cons_.clear();
        fun_cons_.clear();
        rel_cons_of_.assign(n, {});
        fun_cons_of_.assign(n, {});
        degree_.assign(n, 0);

        for (std::size_t i = 0; i < src_rel_tuples_.size(); ++i)
            for (const auto& t : src_rel_tuples_[i]) {
                std::size_t id = rel_cons_.size();
                rel_cons_.push_back({t, hr_[i]});
                std::set<int> vars(t.begin(), t.end());
                for (int v : vars) {
                    rel_cons_of_[v].push_back(id);
                    ++degree_[v];
                }
            }
        for (std::size_t i = 0; i < src_fun_entries_.size(); ++i)
            for (const auto& [args, out] : src_fun_entries_[i]) {
                std::size_t id = fun_cons_.size();
                fun_cons_.push_back({args, out, hf_[i]});
                std::set<int> vars(args.begin(), args.end());
                vars.insert(out);
                for (int v : vars) {
                    fun_cons_of_[v].push_back(id);
                    ++degree_[v];
                }
            }

        assignment_.assign(n, -1);
        Domains domains(n, std::vector<char>(m, 1));
        for (std::size_t v = 0; v < n; ++v)
            if (!propagate_from(static_cast<int>(v), domains, true))
                return false;
        return descend(domains, 0);
    }

    int unassigned_other(const std::vector<int>& vars, int extra, bool& several) const
    {
        int found = -1;
        several = false;
        auto visit = [&](int v) {
            if (assignment_[v] >= 0 || v == found)
                return;
            if (found >= 0)
                several = true;
            else
                found = v;
        };
        for (int v : vars)
            visit(v);
        if (extra >= 0)
            visit(extra);
        return found;
    }

    int value_of(int var, int candidate_var, int candidate) const
    {
        return var == candidate_var ? candidate : assignment_[var];
    }

    bool relation_holds(const RelConstraint& c, int var, int value) const
    {
        std::vector<int> t;
        t.reserve(c.vars.size());
        for (int v : c.vars)
            t.push_back(value_of(v, var, value));
        return tgt_rel_tuples_[c.target].contains(t);
    }

    bool function_holds(const FunConstraint& c, int var, int value) const
    {
        std::vector<int> args;
        args.reserve(c.args.size());
        for (int v : c.args)
            args.push_back(value_of(v, var, value));
        const auto& table = tgt_fun_tables_[c.target];
        auto it = table.find(args);
        return it != table.end() && it->second == value_of(c.out, var, value);
    }

    // Filters the domain of the single unassigned variable of every constraint
    // touching `var`. With `initial` set, only constraints whose variables all
    // coincide with `var` are considered.
    bool propagate_from(int var, Domains& domains, bool initial)
    {
        auto filter = [&](int u, auto&& holds) {
            auto& dom = domains[u];
            bool any = false;
            for (std::size_t c = 0; c < dom.size(); ++c) {
                if (!dom[c])
                    continue;
                if (holds(static_cast<int>(c)))
                    any = true;
                else
                    dom[c] = 0;
            }
            return any;
        };

        for (std::size_t id : rel_cons_of_[var]) {
            const auto& c = rel_cons_[id];
            bool several = false;
            int u = unassigned_other(c.vars, -1, several);
            if (several)
                continue;
            if (initial && (u != var || std::any_of(c.vars.begin(), c.vars.end(), [&](int v) { return v != var; })))
                continue;
            if (u < 0) {
                if (!relation_holds(c, -1, 0))
                    return false;
                continue;
            }
            if (!filter(u, [&](int value) { return relation_holds(c, u, value); }))
                return false;
        }
        for (std::size_t id : fun_cons_of_[var]) {
            const auto& c = fun_cons_[id];
            bool several = false;
            int u = unassigned_other(c.args, c.out, several);
            if (several)
                continue;
            if (initial) {
                bool all_same = c.out == var && std::all_of(c.args.begin(), c.args.end(), [&](int v) { return v == var; });
                if (!all_same)
                    continue;
            }
            if (u < 0) {
                if (!function_holds(c, -1, 0))
                    return false;
                continue;
            }
            if (!filter(u, [&](int value) { return function_holds(c, u, value); }))
                return false;
        }
        return true;
    }

    int choose_variable(const Domains& domains) const
    {
        int best = -1;
        std::size_t best_size = 0;
        for (std::size_t v = 0; v < domains.size(); ++v) {
            if (assignment_[v] >= 0)
                continue;
            auto size = static_cast<std::size_t>(std::count(domains[v].begin(), domains[v].end(), 1));
            if (best < 0 || size < best_size || (size == best_size && degree_[v] > degree_[best])) {
                best = static_cast<int>(v);
                best_size = size;
            }
        }
        return best;
    }

    bool surjectivity_possible(const Domains& domains, std::size_t unassigned) const
    {
        std::vector<char> covered(tgt_elems_.size(), 0);
        for (int value : assignment_)
            if (value >= 0)
                covered[value] = 1;
        std::size_t uncovered = 0;
        for (std::size_t t = 0; t < covered.size(); ++t) {
            if (covered[t])
                continue;
            ++uncovered;
            bool reachable = false;
            for (std::size_t v = 0; v < domains.size() && !reachable; ++v)
                reachable = assignment_[v] < 0 && domains[v][t];
            if (!reachable)
                return false;
        }
        return uncovered <= unassigned;
    }

    bool descend(const Domains& domains, std::size_t assigned)
    {
        if (assigned == src_elems_.size())
            return accept();

        int var = choose_variable(domains);
        for (std::size_t value = 0; value < tgt_elems_.size(); ++value) {
            if (!domains[var][value])
                continue;
            tick();
            Domains next = domains;
            std::fill(next[var].begin(), next[var].end(), 0);
            next[var][value] = 1;
            assignment_[var] = static_cast<int>(value);

            bool ok = propagate_from(var, next, false);
            if (ok && flags_.injective)
                for (std::size_t v = 0; v < next.size() && ok; ++v)
                    if (assignment_[v] < 0) {
                        next[v][value] = 0;
                        ok = std::find(next[v].begin(), next[v].end(), 1) != next[v].end();
                    }
            if (ok)
                for (std::size_t v = 0; v < next.size() && ok; ++v)
                    ok = assignment_[v] >= 0 || std::find(next[v].begin(), next[v].end(), 1) != next[v].end();
            if (ok && flags_.surjective)
                ok = surjectivity_possible(next, src_elems_.size() - assigned - 1);

            if (ok && descend(next, assigned + 1))
                return true;
            assignment_[var] = -1;
        }
        return false;
    }

    bool accept()
    {
        Homomorphism h;
        h.source = source_;
        h.target = target_;
        for (std::size_t v = 0; v < src_elems_.size(); ++v)
            h.elements.emplace(src_elems_[v], tgt_elems_[assignment_[v]]);
        h.relations = hr_;
        h.functions = hf_;
        if (flags_.isomorphism && !is_isomorphism(h))
            return false;
        witness_ = std::move(h);
        return true;
    }

    ArchitecturePtr source_;
    ArchitecturePtr target_;
    SearchOptions options_;
    SearchFlags flags_;
    std::uint64_t nodes_ = 0;

    std::vector<ElementId> src_elems_;
    std::vector<ElementId> tgt_elems_;
    std::map<ElementId, int> src_index_;
    std::map<ElementId, int> tgt_index_;
    std::vector<std::vector<std::vector<int>>> src_rel_tuples_;
    std::vector<std::set<std::vector<int>>> tgt_rel_tuples_;
    std::vector<std::vector<std::pair<std::vector<int>, int>>> src_fun_entries_;
    std::vector<std::map<std::vector<int>, int>> tgt_fun_tables_;

    std::vector<std::size_t> hr_;
    std::vector<std::size_t> hf_;
    std::vector<int> rel_usage_;
    std::vector<int> fun_usage_;

    std::vector<RelConstraint> rel_cons_;
    std::vector<FunConstraint> fun_cons_;
    std::vector<std::vector<std::size_t>> rel_cons_of_;
    std::vector<std::vector<std::size_t>> fun_cons_of_;
    std::vector<std::size_t> degree_;
    std::vector<int> assignment_;

    std::optional<Homomorphism> witness_;
};

} // namespace

SearchResult find_homomorphism(const ArchitecturePtr& a, const ArchitecturePtr& b, const SearchOptions& options)
{
    if (!a || !b)
        throw Error(ErrorCode::InvalidArgument, "null architecture");
    return Searcher(a, b, options).run();
}

SearchResult find_isomorphism(const ArchitecturePtr& a, const ArchitecturePtr& b, std::uint64_t node_budget)
{
    SearchOptions options;
    options.flags.isomorphism = true;
    options.node_budget = node_budget;
    return find_homomorphism(a, b, options);
}

} // namespace archcalc
