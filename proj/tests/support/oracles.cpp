#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace testsupport {

using namespace archcalc;

namespace {

// Calls `visit` with every map {0..n-1} -> {0..m-1} as a digit vector;
// stops early when `visit` returns true.
bool for_each_map(std::size_t n, std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> digits(n, 0);
    if (n > 0 && m == 0)
        return false;
    for (;;) {
        if (visit(digits))
            return true;
        std::size_t i = 0;
        while (i < n && ++digits[i] == m)
            digits[i++] = 0;
        if (i == n)
            return false;
    }
}

bool injective(const std::vector<std::size_t>& m)
{
    return std::set<std::size_t>(m.begin(), m.end()).size() == m.size();
}

bool surjective(const std::vector<std::size_t>& m, std::size_t range)
{
    return std::set<std::size_t>(m.begin(), m.end()).size() == range;
}

} // namespace

bool brute_force_homomorphism_exists(const Architecture& a, const Architecture& b, BruteFlags flags)
{
    std::vector<ElementId> au(a.universe.begin(), a.universe.end());
    std::vector<ElementId> bu(b.universe.begin(), b.universe.end());

    auto rel_ok = [&](const std::vector<std::size_t>& hr) {
        for (std::size_t i = 0; i < hr.size(); ++i)
            if (a.relations[i].arity != b.relations[hr[i]].arity)
                return false;
        if (flags.injective && !injective(hr))
            return false;
        return !flags.surjective || surjective(hr, b.relations.size());
    };
    auto fun_ok = [&](const std::vector<std::size_t>& hf) {
        for (std::size_t i = 0; i < hf.size(); ++i)
            if (a.functions[i].arity != b.functions[hf[i]].arity)
                return false;
        if (flags.injective && !injective(hf))
            return false;
        return !flags.surjective || surjective(hf, b.functions.size());
    };

    return for_each_map(a.relations.size(), b.relations.size(), [&](const std::vector<std::size_t>& hr) {
        if (!rel_ok(hr))
            return false;
        return for_each_map(a.functions.size(), b.functions.size(), [&](const std::vector<std::size_t>& hf) {
            if (!fun_ok(hf))
                return false;
            return for_each_map(au.size(), bu.size(), [&](const std::vector<std::size_t>& h0) {
                if (flags.injective && !injective(h0))
                    return false;
                if (flags.surjective && !surjective(h0, bu.size()))
                    return false;
                std::map<ElementId, ElementId> m;
                for (std::size_t i = 0; i < au.size(); ++i)
                    m.emplace(au[i], bu[h0[i]]);
                auto image = [&](const Tuple& t) {
                    Tuple out;
                    for (const auto& e : t)
                        out.push_back(m.at(e));
                    return out;
                };
                for (std::size_t i = 0; i < hr.size(); ++i)
                    for (const auto& t : a.relations[i].tuples)
                        if (!b.relations[hr[i]].tuples.contains(image(t)))
                            return false;
                for (std::size_t i = 0; i < hf.size(); ++i) {
                    const auto& g = b.functions[hf[i]].mapping;
                    for (const auto& [args, value] : a.functions[i].mapping) {
                        auto it = g.find(image(args));
                        if (it == g.end() || it->second != m.at(value))
                            return false;
                    }
                }
                return true;
            });
        });
    });
}

bool brute_force_graphs_isomorphic(const Graph& g, const Graph& h)
{
    if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size())
        return false;
    std::vector<ElementId> from(g.vertices.begin(), g.vertices.end());
    std::vector<ElementId> to(h.vertices.begin(), h.vertices.end());
    do {
        std::map<ElementId, ElementId> m;
        for (std::size_t i = 0; i < from.size(); ++i)
            m.emplace(from[i], to[i]);
        bool ok = true;
        for (const auto& [x, y] : g.edges)
            if (!h.edges.contains({m.at(x), m.at(y)})) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(to.begin(), to.end()));
    return false;
}

bool tiers_ok(const Architecture& a, const std::vector<ElementSet>& tiers)
{
    std::map<ElementId, std::size_t> index;
    for (std::size_t i = 0; i < tiers.size(); ++i)
        for (const auto& e : tiers[i])
            index.emplace(e, i);
    auto check = [&](const Tuple& t) {
        if (t.empty())
            return true;
        std::size_t lo = index.at(t.front()), hi = lo;
        for (const auto& e : t) {
            lo = std::min(lo, index.at(e));
            hi = std::max(hi, index.at(e));
        }
        return hi - lo <= 1;
    };
    for (const auto& r : a.relations)
        for (const auto& t : r.tuples)
            if (!check(t))
                return false;
    return true;
}

std::size_t brute_force_max_tiers(const Architecture& a)
{
    std::vector<ElementId> elems(a.universe.begin(), a.universe.end());
    if (elems.empty())
        throw std::invalid_argument("empty universe");
    std::map<ElementId, std::size_t> pos;
    for (std::size_t i = 0; i < elems.size(); ++i)
        pos.emplace(elems[i], i);

    // Tuples grouped by the position of their last element in `elems`, so
    // each is checked exactly when it becomes fully assigned.
    std::vector<std::vector<std::vector<std::size_t>>> ready(elems.size());
    for (const auto& r : a.relations)
        for (const auto& t : r.tuples) {
            std::vector<std::size_t> idx;
            for (const auto& e : t)
                idx.push_back(pos.at(e));
            if (!idx.empty())
                ready[*std::max_element(idx.begin(), idx.end())].push_back(std::move(idx));
        }

    std::vector<std::size_t> label(elems.size());
    std::vector<std::size_t> used;
    std::function<bool(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t n) {
        std::size_t unused = std::count(used.begin(), used.end(), 0);
        if (unused > elems.size() - i)
            return false;
        if (i == elems.size())
            return unused == 0;
        for (std::size_t l = 0; l < n; ++l) {
            label[i] = l;
            bool ok = true;
            for (const auto& t : ready[i]) {
                std::size_t lo = label[t[0]], hi = lo;
                for (auto k : t) {
                    lo = std::min(lo, label[k]);
                    hi = std::max(hi, label[k]);
                }
                if (hi - lo > 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            ++used[l];
            bool found = assign(i + 1, n);
            --used[l];
            if (found)
                return true;
        }
        return false;
    };

    for (std::size_t n = elems.size(); n >= 1; --n) {
        used.assign(n, 0);
        if (assign(0, n))
            return n;
    }
    return 1;
}

std::size_t diameter_tier_bound(const Architecture& a)
{
    std::map<ElementId, std::set<ElementId>> adj;
    for (const auto& e : a.universe)
        adj[e];
    for (const auto& r : a.relations)
        for (const auto& t : r.tuples)
            for (const auto& x : t)
                for (const auto& y : t)
                    if (x != y)
                        adj[x].insert(y);

    auto bfs = [&](const ElementId& start) {
        std::map<ElementId, std::size_t> dist{{start, 0}};
        std::deque<ElementId> queue{start};
        while (!queue.empty()) {
            ElementId v = queue.front();
            queue.pop_front();
            for (const auto& w : adj[v])
                if (dist.emplace(w, dist[v] + 1).second)
                    queue.push_back(w);
        }
        return dist;
    };

    std::set<ElementId> seen;
    std::size_t total = 0;
    for (const auto& [v, _] : adj) {
        if (seen.contains(v))
            continue;
        auto component = bfs(v);
        std::size_t diameter = 0;
        for (const auto& [w, _d] : component) {
            seen.insert(w);
            for (const auto& [_x, d] : bfs(w))
                diameter = std::max(diameter, d);
        }
        total += diameter + 1;
    }
    return total;
}

} // namespace testsupport
