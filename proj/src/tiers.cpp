#include "archcalc/tiers.hpp"

#include "archcalc/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace archcalc {

bool is_bnc(const Architecture& arch)
{
    return arch.functions.empty()
        && std::all_of(arch.relations.begin(), arch.relations.end(), [](const Relation& r) { return r.arity == 2; });
}

namespace {

std::map<ElementId, std::size_t> tier_index(const Architecture& arch, const TierPartition& p)
{
    std::map<ElementId, std::size_t> index;
    for (std::size_t i = 0; i < p.tiers.size(); ++i) {
        if (p.tiers[i].empty())
            throw Error(ErrorCode::NotAPartition, "tier " + std::to_string(i + 1) + " is empty");
        for (const auto& e : p.tiers[i])
            if (!index.emplace(e, i).second)
                throw Error(ErrorCode::NotAPartition, "element " + e.str() + " lies in more than one tier");
    }
    ElementSet universe = arch.universe_set();
    for (const auto& [e, _] : index)
        if (!universe.contains(e))
            throw Error(ErrorCode::NotAPartition, "element " + e.str() + " is not in the universe");
    if (index.size() != universe.size()) {
        for (const auto& e : universe)
            if (!index.contains(e))
                throw Error(ErrorCode::NotAPartition, "element " + e.str() + " is in no tier");
    }
    if (p.tiers.empty() && !universe.empty())
        throw Error(ErrorCode::NotAPartition, "no tiers");
    return index;
}

template <class TierOf>
bool tuples_fit(const Architecture& arch, TierOf&& tier_of)
{
    for (const auto& r : arch.relations)
        for (const auto& t : r.tuples) {
            if (t.empty())
                continue;
            std::size_t lo = tier_of(t.front());
            std::size_t hi = lo;
            for (const auto& e : t) {
                std::size_t k = tier_of(e);
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
            if (hi - lo > 1)
                return false;
        }
    return true;
}

// Undirected adjacency of a B&C architecture, loops dropped.
std::map<ElementId, ElementSet> neighbours(const Architecture& arch)
{
    std::map<ElementId, ElementSet> adj;
    for (const auto& e : arch.universe)
        adj[e];
    for (const auto& r : arch.relations)
        for (const auto& t : r.tuples)
            if (t.size() == 2 && t[0] != t[1]) {
                adj[t[0]].insert(t[1]);
                adj[t[1]].insert(t[0]);
            }
    return adj;
}

TierPartition bfs_layering(const Architecture& arch)
{
    auto adj = neighbours(arch);
    TierPartition layering;
    ElementSet placed;
    for (const auto& [start, _] : adj) {
        if (placed.contains(start))
            continue;

        // Collect the component, then restart BFS from its minimum-degree element.
        ElementSet component{start};
        std::deque<ElementId> queue{start};
        while (!queue.empty()) {
            auto e = queue.front();
            queue.pop_front();
            for (const auto& n : adj[e])
                if (component.insert(n).second)
                    queue.push_back(n);
        }
        ElementId root = *std::min_element(component.begin(), component.end(), [&](const auto& x, const auto& y) {
            return adj[x].size() != adj[y].size() ? adj[x].size() < adj[y].size() : x < y;
        });

        std::map<ElementId, std::size_t> depth{{root, 0}};
        queue.push_back(root);
        std::size_t base = layering.tiers.size();
        while (!queue.empty()) {
            auto e = queue.front();
            queue.pop_front();
            std::size_t d = depth[e];
            if (base + d >= layering.tiers.size())
                layering.tiers.emplace_back();
            layering.tiers[base + d].insert(e);
            for (const auto& n : adj[e])
                if (depth.emplace(n, d + 1).second)
                    queue.push_back(n);
        }
        placed.insert(component.begin(), component.end());
    }
    return layering;
}

} // namespace

bool check_tier_partition(const Architecture& arch, const TierPartition& p)
{
    auto index = tier_index(arch, p);
    if (p.size() <= 1)
        return true;
    return tuples_fit(arch, [&](const ElementId& e) { return index.at(e); });
}

Architecture elementary_tier(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "elementary tier architecture needs n >= 1");
    Architecture t;
    t.name = "T" + std::to_string(n);
    Relation link{"TL", 2, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        t.universe.emplace_back(std::to_string(i));
        for (std::size_t j = (i > 1 ? i - 1 : 1); j <= std::min(n, i + 1); ++j)
            link.tuples.insert({std::to_string(i), std::to_string(j)});
    }
    t.relations.push_back(std::move(link));
    return t;
}

TierPartition merge_adjacent_tiers(const TierPartition& p, std::size_t i)
{
    if (i < 1 || i >= p.size())
        throw Error(ErrorCode::IndexOutOfRange, "cannot merge tier " + std::to_string(i) + " of "
                                                    + std::to_string(p.size()) + " with its successor");
    TierPartition out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k == i) {
            out.tiers.back().insert(p.tiers[k].begin(), p.tiers[k].end());
            continue;
        }
        out.tiers.push_back(p.tiers[k]);
    }
    return out;
}

Homomorphism induced_tier_homomorphism(const ArchitecturePtr& arch, const TierPartition& p)
{
    if (!is_bnc(*arch))
        throw Error(ErrorCode::NotBnc, "tier maps into T_n are defined for B&C architectures");
    auto index = tier_index(*arch, p);
    Homomorphism h;
    h.source = arch;
    h.target = std::make_shared<const Architecture>(elementary_tier(std::max<std::size_t>(p.size(), 1)));
    for (const auto& [e, i] : index)
        h.elements.emplace(e, ElementId(std::to_string(i + 1)));
    h.relations.assign(arch->relations.size(), 0);
    return h;
}

TierPartition tier_partition_from(const Homomorphism& into_tn)
{
    TierPartition p;
    p.tiers.resize(into_tn.target->universe.size());
    for (const auto& [from, to] : into_tn.elements) {
        std::size_t i = std::stoul(to.str());
        p.tiers.at(i - 1).insert(from);
    }
    return p;
}

TierResult max_tiers_by_enumeration(const Architecture& arch, std::size_t cap)
{
    ElementSet universe = arch.universe_set();
    if (universe.empty())
        throw Error(ErrorCode::EmptyUniverse, "no elements to arrange into tiers");
    if (universe.size() > cap)
        throw Error(ErrorCode::InvalidArgument, "enumeration oracle limited to " + std::to_string(cap) + " elements");

    std::vector<ElementId> elems(universe.begin(), universe.end());
    std::map<ElementId, std::size_t> pos;
    for (std::size_t i = 0; i < elems.size(); ++i)
        pos.emplace(elems[i], i);

    const std::size_t n = elems.size();
    std::vector<std::size_t> block(n, 0);
    TierResult best;

    // Set partitions as restricted growth strings; every block order is tried.
    auto visit = [&](std::size_t blocks) {
        if (blocks <= best.tiers)
            return;
        std::vector<std::size_t> order(blocks);
        std::iota(order.begin(), order.end(), 0);
        do {
            bool ok = blocks == 1
                || tuples_fit(arch, [&](const ElementId& e) { return order[block[pos.at(e)]]; });
            if (ok) {
                best.tiers = blocks;
                best.witness.tiers.assign(blocks, {});
                for (std::size_t i = 0; i < n; ++i)
                    best.witness.tiers[order[block[i]]].insert(elems[i]);
                return;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    };

    auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            visit(used);
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            block[i] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

TierResult find_max_tiers(const Architecture& arch, const TierSearchOptions& options)
{
    if (!is_bnc(arch))
        throw Error(ErrorCode::NotBnc, "maximal tiers are computed for B&C architectures only");
    if (arch.universe.empty())
        throw Error(ErrorCode::EmptyUniverse, "no elements to arrange into tiers");
    if (options.use_oracle)
        return max_tiers_by_enumeration(arch, options.oracle_cap);

    ElementSet universe = arch.universe_set();
    TierResult best;

    // Without relations h_R cannot be surjective onto {TL}; every ordering into
    // singleton tiers is valid then.
    if (arch.relations.empty()) {
        for (const auto& e : universe)
            best.witness.tiers.push_back({e});
        best.tiers = universe.size();
        return best;
    }

    best.witness = bfs_layering(arch);
    best.tiers = best.witness.size();

    auto source = std::make_shared<const Architecture>(arch);
    SearchOptions search;
    search.flags.surjective = true;
    search.node_budget = options.node_budget;
    for (std::size_t n = best.tiers + 1; n <= universe.size(); ++n) {
        auto target = std::make_shared<const Architecture>(elementary_tier(n));
        SearchResult r = find_homomorphism(source, target, search);
        if (r.status == SearchStatus::BudgetExceeded)
            throw Error(ErrorCode::SearchBudgetExceeded, "no decision for " + std::to_string(n) + " tiers within "
                                                             + std::to_string(options.node_budget) + " nodes");
        if (r.status == SearchStatus::None)
            break;
        best.tiers = n;
        best.witness = tier_partition_from(*r.witness);
    }
    return best;
}

} // namespace archcalc
