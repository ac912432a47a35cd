#pragma once

#include "archcalc/core.hpp"

#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace archcalc {

struct Graph {
    ElementSet vertices;
    std::set<std::pair<ElementId, ElementId>> edges;

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// <V, {E}, {}>. The graph with no vertices maps to T0.
Architecture graph_to_bnc(const Graph& g);

/// Inverse of graph_to_bnc for B&C architectures with at most one relation.
/// Throws Error(NotSingleRelationBnc) otherwise.
Graph bnc_to_graph(const Architecture& a);

/// Parses `digraph <id> { a; a -> b; ... }`. Identifiers match
/// [A-Za-z_][A-Za-z0-9_]* or are numerals [0-9]+. `//` starts a line comment;
/// the `;` before `}` may be omitted. Throws ParseError with 1-based
/// line/column.
Graph parse_dot_subset(std::string_view text);

/// Writes the graph in the same subset, vertices first, lexicographic order.
/// Throws Error(InvalidArgument) for vertices that are not DOT identifiers.
std::string to_dot(const Graph& g, std::string_view name = "g");

} // namespace archcalc
