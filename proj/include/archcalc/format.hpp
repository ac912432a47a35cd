#pragma once

// Line-oriented interchange format (.archc).
//
//   arch <name>
//   elements: e1 e2 ...
//   rel <name>/<arity>:
//     (e1, e2)
//   fun <name>/<arity>:
//     (e1) -> e2
//
// Tokens (names and elements) match [A-Za-z0-9_.-] plus the middle dot "·".
// Blank lines and lines starting with '#' are ignored. Other document kinds
// wrap architecture blocks:
//
//   partition <name>          hom <name>             view <name>
//   tier: a b                 source:                elements: a
//   tier: c                   arch ...               relations: r1
//                             target:                functions:
//                             arch ...               parent:
//                             h0:                    arch ...
//                               a -> 1
//                             hR:                    viewpoint <name>
//                               r -> TL              view <label>:
//                             hF:                    elements: ...
//                                                    relations: ...
//                                                    functions: ...
//                                                    structured <label>:
//                                                    arch ...
//                                                    parent:
//                                                    arch ...
//
// Serialization is canonical: elements, tuples and map lines are sorted,
// relations and functions are ordered by (name, arity, extension), and
// colliding or unrepresentable names are rewritten deterministically.

#include "archcalc/core.hpp"
#include "archcalc/error.hpp"
#include "archcalc/morphism.hpp"
#include "archcalc/tiers.hpp"
#include "archcalc/views.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace archcalc {

/// Structurally valid text whose content violates the architecture invariants.
class SchemaError : public Error {
public:
    SchemaError(std::size_t line, ValidationReport report, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    const ValidationReport& report() const noexcept { return report_; }

private:
    std::size_t line_;
    ValidationReport report_;
};

enum class DocumentKind { Architecture, View, Viewpoint, Partition, Homomorphism };

const char* to_string(DocumentKind kind) noexcept;

struct Document {
    std::string name;
    std::variant<Architecture, UnstructuredView, Viewpoint, TierPartition, Homomorphism> payload;

    DocumentKind kind() const noexcept { return static_cast<DocumentKind>(payload.index()); }
};

struct ParseOptions {
    /// Run validate() on every architecture block and throw SchemaError on
    /// violations.
    bool check_schema = true;
};

std::string serialize(const Document& doc);
std::string serialize(const Architecture& arch);
std::string serialize(const TierPartition& partition, std::string_view name = "p");
std::string serialize(const Homomorphism& h, std::string_view name = "h");

/// Throws ParseError (1-based line/column) or SchemaError.
Document parse(std::string_view text, const ParseOptions& options = {});

/// parse() restricted to one kind; a different kind is a ParseError at line 1.
Architecture parse_architecture(std::string_view text, const ParseOptions& options = {});
TierPartition parse_partition(std::string_view text);
Homomorphism parse_homomorphism(std::string_view text);

/// True iff `token` is representable as an element or name.
bool is_format_token(std::string_view token);

} // namespace archcalc
