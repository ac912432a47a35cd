#include "archcalc/views.hpp"

#include "archcalc/error.hpp"

#include <algorithm>

namespace archcalc {

namespace {

bool inside(const Tuple& t, const ElementSet& s)
{
    return std::all_of(t.begin(), t.end(), [&](const ElementId& e) { return s.contains(e); });
}

Relation restrict_relation(const Relation& r, const ElementSet& s)
{
    Relation out{r.name, r.arity, {}};
    for (const auto& t : r.tuples)
        if (inside(t, s))
            out.tuples.insert(t);
    return out;
}

// A domain tuple survives only if its value also stays inside the subset.
FunctionTable restrict_function(const FunctionTable& f, const ElementSet& s)
{
    FunctionTable out;
    out.name = f.name;
    out.arity = f.arity;
    for (const auto& t : f.domain) {
        auto value = f.apply(t);
        if (inside(t, s) && value && s.contains(*value)) {
            out.domain.insert(t);
            out.mapping.emplace(t, *value);
        }
    }
    return out;
}

} // namespace

Architecture restrict(const Architecture& parent, const ElementSet& subset, std::vector<std::string>* notes)
{
    ElementSet universe = parent.universe_set();
    std::vector<std::string> missing;
    for (const auto& e : subset)
        if (!universe.contains(e))
            missing.push_back(e.str());
    if (!missing.empty()) {
        std::string msg = "not in the parent universe:";
        for (const auto& m : missing)
            msg += " " + m;
        throw Error(ErrorCode::SubsetNotInUniverse, msg);
    }

    Architecture out;
    out.name = parent.name;
    for (const auto& e : parent.universe)
        if (subset.contains(e) && !out.contains(e))
            out.universe.push_back(e);

    for (const auto& r : parent.relations) {
        Relation cut = restrict_relation(r, subset);
        if (auto existing = out.find_relation(cut)) {
            if (notes)
                notes->push_back("relation " + r.name + " merged into " + out.relations[*existing].name
                                 + " after restriction");
            continue;
        }
        out.relations.push_back(std::move(cut));
    }

    for (const auto& f : parent.functions) {
        FunctionTable cut = restrict_function(f, subset);
        if (cut.domain.empty() && !f.domain.empty()) {
            if (notes)
                notes->push_back("function " + f.name + " dropped: empty after restriction");
            continue;
        }
        if (auto existing = out.find_function(cut)) {
            if (notes)
                notes->push_back("function " + f.name + " merged into " + out.functions[*existing].name
                                 + " after restriction");
            continue;
        }
        out.functions.push_back(std::move(cut));
    }
    return out;
}

bool is_sub_architecture(const Architecture& a, const Architecture& b)
{
    ElementSet sa = a.universe_set();
    ElementSet sb = b.universe_set();
    if (sa.size() >= sb.size() || !std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
        return false;

    for (const auto& r : a.relations) {
        bool matched = std::any_of(b.relations.begin(), b.relations.end(), [&](const Relation& rb) {
            return rb.arity == r.arity && restrict_relation(rb, sa).tuples == r.tuples;
        });
        if (!matched)
            return false;
    }
    for (const auto& f : a.functions) {
        bool matched = std::any_of(b.functions.begin(), b.functions.end(), [&](const FunctionTable& fb) {
            return fb.arity == f.arity && restrict_function(fb, sa).same_extension(f);
        });
        if (!matched)
            return false;
    }
    return true;
}

UnstructuredView::UnstructuredView(ArchitecturePtr parent, ElementSet elements,
                                   std::set<std::size_t> relation_refs, std::set<std::size_t> function_refs)
    : parent_(std::move(parent)), elements_(std::move(elements)),
      relation_refs_(std::move(relation_refs)), function_refs_(std::move(function_refs))
{
    if (!parent_)
        throw Error(ErrorCode::InvalidArgument, "view without parent architecture");
    std::string bad;
    ElementSet universe = parent_->universe_set();
    for (const auto& e : elements_)
        if (!universe.contains(e))
            bad += " element " + e.str();
    for (auto i : relation_refs_)
        if (i >= parent_->relations.size())
            bad += " relation #" + std::to_string(i);
    for (auto i : function_refs_)
        if (i >= parent_->functions.size())
            bad += " function #" + std::to_string(i);
    if (!bad.empty())
        throw Error(ErrorCode::NotASubset, "view components not in parent:" + bad);
}

Architecture UnstructuredView::complex() const
{
    Architecture out;
    out.name = parent_->name;
    out.universe.assign(elements_.begin(), elements_.end());
    for (auto i : relation_refs_)
        out.relations.push_back(parent_->relations[i]);
    for (auto i : function_refs_)
        out.functions.push_back(parent_->functions[i]);
    return out;
}

UnstructuredView make_view(const ArchitecturePtr& parent, const ElementSet& elements,
                           const std::vector<Relation>& relations,
                           const std::vector<FunctionTable>& functions)
{
    if (!parent)
        throw Error(ErrorCode::InvalidArgument, "view without parent architecture");

    std::string bad;
    ElementSet universe = parent->universe_set();
    for (const auto& e : elements)
        if (!universe.contains(e))
            bad += " element " + e.str();

    std::set<std::size_t> rel_refs;
    for (const auto& r : relations) {
        if (auto i = parent->find_relation(r))
            rel_refs.insert(*i);
        else
            bad += " relation " + (r.name.empty() ? std::string("<unnamed>") : r.name);
    }
    std::set<std::size_t> fun_refs;
    for (const auto& f : functions) {
        if (auto i = parent->find_function(f))
            fun_refs.insert(*i);
        else
            bad += " function " + (f.name.empty() ? std::string("<unnamed>") : f.name);
    }
    if (!bad.empty())
        throw Error(ErrorCode::NotASubset, "view components not in parent:" + bad);
    return UnstructuredView(parent, elements, std::move(rel_refs), std::move(fun_refs));
}

bool is_view(const Architecture& candidate, const Architecture& parent)
{
    ElementSet universe = parent.universe_set();
    for (const auto& e : candidate.universe)
        if (!universe.contains(e))
            return false;
    for (const auto& r : candidate.relations)
        if (!parent.find_relation(r))
            return false;
    for (const auto& f : candidate.functions)
        if (!parent.find_function(f))
            return false;
    return true;
}

UnstructuredView project_structured_view(const ArchitecturePtr& parent, const Architecture& structured)
{
    ElementSet sub = structured.universe_set();
    std::set<std::size_t> rel_refs;
    for (std::size_t i = 0; i < parent->relations.size(); ++i)
        if (structured.find_relation(restrict_relation(parent->relations[i], sub)))
            rel_refs.insert(i);
    std::set<std::size_t> fun_refs;
    for (std::size_t i = 0; i < parent->functions.size(); ++i)
        if (structured.find_function(restrict_function(parent->functions[i], sub)))
            fun_refs.insert(i);
    return UnstructuredView(parent, std::move(sub), std::move(rel_refs), std::move(fun_refs));
}

Architecture view_complex(const View& view)
{
    if (const auto* s = std::get_if<Architecture>(&view))
        return *s;
    return std::get<UnstructuredView>(view).complex();
}

const View* Viewpoint::find(const std::string& label) const
{
    for (const auto& [l, v] : views_)
        if (l == label)
            return &v;
    return nullptr;
}

Viewpoint make_viewpoint(const ArchitecturePtr& parent, std::vector<std::pair<std::string, View>> labeled_views)
{
    if (!parent)
        throw Error(ErrorCode::InvalidArgument, "viewpoint without parent architecture");

    std::vector<Architecture> complexes;
    complexes.reserve(labeled_views.size());
    for (const auto& [label, view] : labeled_views) {
        if (const auto* u = std::get_if<UnstructuredView>(&view)) {
            if (!(*u->parent() == *parent))
                throw Error(ErrorCode::NotASubset, "view '" + label + "' belongs to a different architecture");
        } else if (!is_sub_architecture(std::get<Architecture>(view), *parent)) {
            throw Error(ErrorCode::NotASubset, "structured view '" + label + "' is not a sub-architecture");
        }
        complexes.push_back(view_complex(view));
    }

    for (std::size_t i = 0; i < labeled_views.size(); ++i)
        for (std::size_t j = i + 1; j < labeled_views.size(); ++j) {
            if (labeled_views[i].first == labeled_views[j].first)
                throw Error(ErrorCode::DuplicateView, "label '" + labeled_views[i].first + "' used twice");
            if (complexes[i] == complexes[j])
                throw Error(ErrorCode::DuplicateView, "labels '" + labeled_views[i].first + "' and '"
                                                          + labeled_views[j].first + "' assign the same view");
        }

    Viewpoint vp;
    vp.parent_ = parent;
    vp.views_ = std::move(labeled_views);
    return vp;
}

} // namespace archcalc
