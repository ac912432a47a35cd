#include "archcalc/category.hpp"

#include "archcalc/error.hpp"

namespace archcalc {

namespace {

// Index in `to` of the component at `index` in `from`. Positions are kept
// when they agree, so equal functions listed twice are not conflated.
template <class Item, class Find>
std::size_t translate(const std::vector<Item>& from, const std::vector<Item>& to, std::size_t index, Find find)
{
    const Item& item = from.at(index);
    if (index < to.size() && to[index].same_extension(item))
        return index;
    return *find(item);
}

} // namespace

Homomorphism identity(const ArchitecturePtr& a)
{
    if (!a)
        throw Error(ErrorCode::InvalidArgument, "null architecture");
    Homomorphism id;
    id.source = a;
    id.target = a;
    for (const auto& e : a->universe)
        id.elements.emplace(e, e);
    for (std::size_t i = 0; i < a->relations.size(); ++i)
        id.relations.push_back(i);
    for (std::size_t i = 0; i < a->functions.size(); ++i)
        id.functions.push_back(i);
    return id;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f)
{
    if (!f.target || !g.source || !(*f.target == *g.source))
        throw Error(ErrorCode::NotComposable, "target of the first map differs from source of the second");

    const Architecture& middle_f = *f.target;
    const Architecture& middle_g = *g.source;

    Homomorphism h;
    h.source = f.source;
    h.target = g.target;
    for (const auto& [from, via] : f.elements)
        h.elements.emplace(from, g.elements.at(via));
    for (std::size_t r : f.relations)
        h.relations.push_back(g.relations.at(translate(middle_f.relations, middle_g.relations, r,
                                                       [&](const Relation& x) { return middle_g.find_relation(x); })));
    for (std::size_t k : f.functions)
        h.functions.push_back(g.functions.at(translate(middle_f.functions, middle_g.functions, k,
                                                       [&](const FunctionTable& x) { return middle_g.find_function(x); })));
    return h;
}

} // namespace archcalc
