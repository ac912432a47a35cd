#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace archcalc {

/// Opaque element token of an architecture universe.
class ElementId {
public:
    ElementId() = default;
    ElementId(std::string value) : value_(std::move(value)) {}
    ElementId(std::string_view value) : value_(value) {}
    ElementId(const char* value) : value_(value) {}

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    friend bool operator==(const ElementId&, const ElementId&) = default;
    friend auto operator<=>(const ElementId&, const ElementId&) = default;

private:
    std::string value_;
};

using Tuple = std::vector<ElementId>;
using ElementSet = std::set<ElementId>;

std::string to_string(const Tuple& tuple);

/// A k-ary relation over the universe. The name is metadata only; identity is
/// the pair (arity, tuples).
struct Relation {
    std::string name;
    std::size_t arity = 0;
    std::set<Tuple> tuples;

    bool same_extension(const Relation& other) const {
        return arity == other.arity && tuples == other.tuples;
    }
};

/// A finite function with an explicit domain. `domain` and the key set of
/// `mapping` must coincide for a valid table.
struct FunctionTable {
    std::string name;
    std::size_t arity = 0;
    std::set<Tuple> domain;
    std::map<Tuple, ElementId> mapping;

    /// Builds a table whose domain is exactly the key set of `mapping`.
    static FunctionTable from_mapping(std::string name, std::size_t arity,
                                      std::map<Tuple, ElementId> mapping);

    std::optional<ElementId> apply(const Tuple& args) const;

    bool same_extension(const FunctionTable& other) const {
        return arity == other.arity && domain == other.domain && mapping == other.mapping;
    }
};

/// The complex <A, R, F>. Relations and functions keep insertion order so
/// homomorphisms can refer to them by index; equality ignores that order and
/// all names.
struct Architecture {
    std::string name;
    std::vector<ElementId> universe;
    std::vector<Relation> relations;
    std::vector<FunctionTable> functions;

    bool contains(const ElementId& e) const;
    ElementSet universe_set() const;

    /// Index of the first relation with the same extension, if any.
    std::optional<std::size_t> find_relation(const Relation& r) const;
    std::optional<std::size_t> find_function(const FunctionTable& f) const;

    /// Extensional equality: same universe set, same set of relation
    /// extensions, same set of function extensions.
    friend bool operator==(const Architecture& a, const Architecture& b);
};

using ArchitecturePtr = std::shared_ptr<const Architecture>;

enum class ViolationCode {
    DanglingElement,
    ArityMismatch,
    DuplicateRelationExtension,
    PartialMapping,
    DuplicateElement,
};

const char* to_string(ViolationCode code) noexcept;

struct Violation {
    ViolationCode code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationCode code) const;
    std::size_t count(ViolationCode code) const;
};

ValidationReport validate(const Architecture& arch);

/// Gives every extensional duplicate beyond the first of its group a fresh
/// element prepended as a leading argument. Already distinct relations are
/// untouched.
Architecture disambiguate_relations(const Architecture& arch);

/// T0 = <{}, {}, {}>.
Architecture empty_architecture();

/// T1 = <{a}, {{(a,a)}}, {id}>.
Architecture trivial_architecture();

/// Returns `base` if it is not in `taken`, otherwise base + "2", base + "3", ...
/// (or base + "1", "2", ... when `always_number` is set).
ElementId fresh_element(const ElementSet& taken, std::string_view base, bool always_number = false);

/// Same content with universe, relations, functions sorted canonically
/// (relations by name, then arity, then tuples).
Architecture canonicalized(const Architecture& arch);

} // namespace archcalc
