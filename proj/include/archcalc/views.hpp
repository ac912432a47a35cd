#pragma once

#include "archcalc/core.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace archcalc {

/// Maximal structured view of `parent` on `subset`: every relation is cut down
/// to the tuples lying inside `subset`, every function to the domain tuples
/// whose arguments and value lie inside `subset`. Relations that collapse onto
/// an earlier relation are merged; functions whose restriction is empty are
/// dropped. Merge and drop events are appended to `notes` when given.
///
/// Throws Error(SubsetNotInUniverse) if `subset` is not contained in the
/// parent universe.
Architecture restrict(const Architecture& parent, const ElementSet& subset,
                      std::vector<std::string>* notes = nullptr);

/// a ⊂ b: strict universe inclusion, and every relation/function of `a` is the
/// restriction of some relation/function of `b`.
bool is_sub_architecture(const Architecture& a, const Architecture& b);

/// Componentwise selection from a parent architecture. The element subset and
/// the selected relations need not be compatible with each other.
class UnstructuredView {
public:
    UnstructuredView(ArchitecturePtr parent, ElementSet elements,
                     std::set<std::size_t> relation_refs, std::set<std::size_t> function_refs);

    const ArchitecturePtr& parent() const noexcept { return parent_; }
    const ElementSet& elements() const noexcept { return elements_; }
    const std::set<std::size_t>& relation_refs() const noexcept { return relation_refs_; }
    const std::set<std::size_t>& function_refs() const noexcept { return function_refs_; }

    /// The view as a plain complex <A_V, R_V, F_V>. It need not validate.
    Architecture complex() const;

private:
    ArchitecturePtr parent_;
    ElementSet elements_;
    std::set<std::size_t> relation_refs_;
    std::set<std::size_t> function_refs_;
};

/// Relations and functions are matched against the parent by extension.
/// Throws Error(NotASubset) naming every offending component.
UnstructuredView make_view(const ArchitecturePtr& parent, const ElementSet& elements,
                           const std::vector<Relation>& relations,
                           const std::vector<FunctionTable>& functions);

/// True iff A_V ⊆ A, R_V ⊆ R and F_V ⊆ F (extensionally).
bool is_view(const Architecture& candidate, const Architecture& parent);

/// Unstructured view selecting the universe of `structured` together with the
/// parent relations/functions whose restrictions occur in it.
UnstructuredView project_structured_view(const ArchitecturePtr& parent, const Architecture& structured);

using View = std::variant<Architecture, UnstructuredView>;

/// The complex a view denotes, whichever kind it is.
Architecture view_complex(const View& view);

class Viewpoint {
public:
    const ArchitecturePtr& parent() const noexcept { return parent_; }
    const std::vector<std::pair<std::string, View>>& views() const noexcept { return views_; }
    std::size_t size() const noexcept { return views_.size(); }
    const View* find(const std::string& label) const;

private:
    friend Viewpoint make_viewpoint(const ArchitecturePtr&, std::vector<std::pair<std::string, View>>);

    ArchitecturePtr parent_;
    std::vector<std::pair<std::string, View>> views_;
};

/// Builds an injective label -> view assignment over `parent`.
/// Throws Error(DuplicateView) when two labels denote the same view or a label
/// repeats, and Error(NotASubset) when a view does not belong to `parent`.
Viewpoint make_viewpoint(const ArchitecturePtr& parent, std::vector<std::pair<std::string, View>> labeled_views);

} // namespace archcalc
