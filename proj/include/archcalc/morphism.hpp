#pragma once

#include "archcalc/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace archcalc {

/// h = <h0, hR, hF>. Relations and functions are addressed by their index in
/// the source/target architecture lists.
struct Homomorphism {
    ArchitecturePtr source;
    ArchitecturePtr target;
    std::map<ElementId, ElementId> elements;
    std::vector<std::size_t> relations;
    std::vector<std::size_t> functions;

    ElementId map(const ElementId& e) const { return elements.at(e); }
    Tuple map(const Tuple& t) const;

    /// Componentwise equality. Source and target are compared extensionally,
    /// and hR/hF by the extensions they pair up rather than by index.
    friend bool operator==(const Homomorphism& a, const Homomorphism& b);
};

enum class MorphismViolationCode {
    MapNotTotal,
    MapOutOfRange,
    ArityNotPreserved,
    RelationNotPreserved,
    FunctionDomainEscape,
    FunctionNotCommuting,
};

const char* to_string(MorphismViolationCode code) noexcept;

struct MorphismViolation {
    MorphismViolationCode code;
    std::string message;
    Tuple tuple;
};

struct MorphismReport {
    std::vector<MorphismViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(MorphismViolationCode code) const;
};

/// Checks totality and arity preservation, then the relation and function
/// conditions. Every offending tuple is reported.
MorphismReport check_homomorphism(const Homomorphism& h);

bool is_injective(const Homomorphism& h);
bool is_surjective(const Homomorphism& h);
bool is_bijective(const Homomorphism& h);

/// Inverse triple of a bijective homomorphism, nullopt otherwise.
std::optional<Homomorphism> inverse(const Homomorphism& h);

/// Bijective and the explicit inverse is itself a homomorphism.
bool is_isomorphism(const Homomorphism& h);

struct SearchFlags {
    bool injective = false;
    bool surjective = false;
    bool bijective = false;
    /// Additionally require the inverse triple to be a homomorphism.
    bool isomorphism = false;
};

inline constexpr std::uint64_t default_search_budget = 10'000'000;

struct SearchOptions {
    SearchFlags flags;
    std::uint64_t node_budget = default_search_budget;
};

enum class SearchStatus { Found, None, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<Homomorphism> witness;
    std::uint64_t nodes = 0;

    bool found() const noexcept { return status == SearchStatus::Found; }
};

/// Exact backtracking search. Deterministic for fixed inputs and options.
/// `None` means the whole space was exhausted.
SearchResult find_homomorphism(const ArchitecturePtr& a, const ArchitecturePtr& b, const SearchOptions& options = {});

SearchResult find_isomorphism(const ArchitecturePtr& a, const ArchitecturePtr& b,
                              std::uint64_t node_budget = default_search_budget);

/// Copy of `arch` with every element renamed through `renaming` (which must be
/// injective and total on the universe).
Architecture rename_elements(const Architecture& arch, const std::map<ElementId, ElementId>& renaming);

} // namespace archcalc
