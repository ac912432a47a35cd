#pragma once

#include "archcalc/core.hpp"
#include "archcalc/morphism.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace archcalc {

/// Ordered tiers C1..Cn. Tier i (1-based in diagnostics) is tiers[i-1].
struct TierPartition {
    std::vector<ElementSet> tiers;

    std::size_t size() const noexcept { return tiers.size(); }
    friend bool operator==(const TierPartition&, const TierPartition&) = default;
};

/// Only binary relations and no functions.
bool is_bnc(const Architecture& arch);

/// True iff every tuple of every relation lies inside C_l ∪ C_{l+1} for some
/// l. A single tier holds trivially. Throws Error(NotAPartition) if `p` is not
/// a partition of the universe into nonempty tiers.
bool check_tier_partition(const Architecture& arch, const TierPartition& p);

/// T_n: universe {1..n}, one symmetric relation TL = {(i,j) : |i-j| <= 1}.
Architecture elementary_tier(std::size_t n);

/// Replaces tiers i and i+1 (1-based i) by their union.
/// Throws Error(IndexOutOfRange) unless 1 <= i < n.
TierPartition merge_adjacent_tiers(const TierPartition& p, std::size_t i);

/// The tier map: a -> index of its tier, every relation -> TL. The target is
/// elementary_tier(p.size()).
Homomorphism induced_tier_homomorphism(const ArchitecturePtr& arch, const TierPartition& p);

/// Pullback partition of a homomorphism into T_n: C_i = h0^-1(i).
TierPartition tier_partition_from(const Homomorphism& into_tn);

struct TierSearchOptions {
    std::uint64_t node_budget = default_search_budget;
    /// Use exhaustive partition enumeration instead of homomorphism search.
    bool use_oracle = false;
    /// Largest universe the enumeration oracle accepts.
    std::size_t oracle_cap = 9;
};

struct TierResult {
    std::size_t tiers = 0;
    TierPartition witness;
};

/// Largest n admitting an n-tier partition. Seeds a lower bound with a BFS
/// layering per connected component, then proves each next n via a search for
/// a surjective homomorphism onto T_n until none exists.
///
/// Throws Error(NotBnc), Error(EmptyUniverse), Error(SearchBudgetExceeded), or
/// Error(InvalidArgument) when the oracle is asked for a universe above its cap.
TierResult find_max_tiers(const Architecture& arch, const TierSearchOptions& options = {});

/// Exhaustive oracle: enumerates every ordered partition of the universe.
/// Works for any arity. Throws Error(InvalidArgument) above `cap` elements.
TierResult max_tiers_by_enumeration(const Architecture& arch, std::size_t cap = 9);

} // namespace archcalc
