#include "archcalc/archcalc.h"

#include "archcalc/category.hpp"
#include "archcalc/core.hpp"
#include "archcalc/encodings.hpp"
#include "archcalc/error.hpp"
#include "archcalc/format.hpp"
#include "archcalc/graphbridge.hpp"
#include "archcalc/morphism.hpp"
#include "archcalc/tiers.hpp"
#include "archcalc/views.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct archc_arch {
    archcalc::ArchitecturePtr arch;
};

struct archc_hom {
    archcalc::Homomorphism hom;
};

struct archc_partition {
    archcalc::TierPartition partition;
};

namespace {

using namespace archcalc;

struct LastError {
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

thread_local LastError last_error;

archc_status status_of(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return ARCHC_PARSE_ERROR;
    case ErrorCode::SchemaError: return ARCHC_SCHEMA_ERROR;
    case ErrorCode::SubsetNotInUniverse: return ARCHC_SUBSET_NOT_IN_UNIVERSE;
    case ErrorCode::NotASubset: return ARCHC_NOT_A_SUBSET;
    case ErrorCode::DuplicateView: return ARCHC_DUPLICATE_VIEW;
    case ErrorCode::NotBnc: return ARCHC_NOT_BNC;
    case ErrorCode::EmptyUniverse: return ARCHC_EMPTY_UNIVERSE;
    case ErrorCode::NotAPartition: return ARCHC_NOT_A_PARTITION;
    case ErrorCode::IndexOutOfRange: return ARCHC_INDEX_OUT_OF_RANGE;
    case ErrorCode::SearchBudgetExceeded: return ARCHC_BUDGET_EXCEEDED;
    case ErrorCode::NotComposable: return ARCHC_NOT_COMPOSABLE;
    case ErrorCode::NotSingleRelationBnc: return ARCHC_NOT_SINGLE_RELATION_BNC;
    case ErrorCode::JunctionShapeMismatch: return ARCHC_JUNCTION_SHAPE_MISMATCH;
    case ErrorCode::InvalidArgument: return ARCHC_INVALID_ARGUMENT;
    }
    return ARCHC_INTERNAL_ERROR;
}

archc_status fail(archc_status status, std::string message, std::size_t line = 0, std::size_t column = 0)
{
    last_error = {std::move(message), line, column};
    return status;
}

template <class F>
archc_status guarded(F&& body)
{
    try {
        last_error = {};
        return body();
    }
    catch (const ParseError& e) {
        return fail(ARCHC_PARSE_ERROR, e.what(), e.line(), e.column());
    }
    catch (const SchemaError& e) {
        return fail(ARCHC_SCHEMA_ERROR, e.what(), e.line());
    }
    catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    }
    catch (const std::bad_alloc&) {
        return fail(ARCHC_INTERNAL_ERROR, "out of memory");
    }
    catch (const std::exception& e) {
        return fail(ARCHC_INTERNAL_ERROR, e.what());
    }
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

#define ARCHC_REQUIRE(cond)                                                          \
    do {                                                                             \
        if (!(cond))                                                                 \
            return fail(ARCHC_INVALID_ARGUMENT, "invalid argument: " #cond);         \
    } while (0)

std::uint64_t effective_budget(std::uint64_t budget)
{
    return budget == 0 ? default_search_budget : budget;
}

archc_arch* wrap(Architecture a)
{
    return new archc_arch{std::make_shared<const Architecture>(std::move(a))};
}

Architecture fixture(std::string_view name)
{
    if (name == "t0")
        return empty_architecture();
    if (name == "t1")
        return trivial_architecture();
    if (name == "wilkinson")
        return wilkinson_base();
    if (name == "wilkinson-star")
        return wilkinson_star();
    if (name == "torch")
        return torch_fixture();
    if (name.starts_with("tn:")) {
        std::string digits(name.substr(3));
        if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "tn:N needs a positive integer N");
        return elementary_tier(std::stoul(digits));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

} // namespace

extern "C" {

const char* archc_version(void)
{
    return "0.1.0";
}

const char* archc_status_name(archc_status status)
{
    switch (status) {
    case ARCHC_OK: return "OK";
    case ARCHC_NOT_FOUND: return "NOT_FOUND";
    case ARCHC_BUDGET_EXCEEDED: return "SEARCH_BUDGET_EXCEEDED";
    case ARCHC_PARSE_ERROR: return "PARSE_ERROR";
    case ARCHC_SCHEMA_ERROR: return "SCHEMA_ERROR";
    case ARCHC_SUBSET_NOT_IN_UNIVERSE: return "SUBSET_NOT_IN_UNIVERSE";
    case ARCHC_NOT_A_SUBSET: return "NOT_A_SUBSET";
    case ARCHC_DUPLICATE_VIEW: return "DUPLICATE_VIEW";
    case ARCHC_NOT_BNC: return "NOT_BNC";
    case ARCHC_EMPTY_UNIVERSE: return "EMPTY_UNIVERSE";
    case ARCHC_NOT_A_PARTITION: return "NOT_A_PARTITION";
    case ARCHC_INDEX_OUT_OF_RANGE: return "INDEX_OUT_OF_RANGE";
    case ARCHC_NOT_COMPOSABLE: return "NOT_COMPOSABLE";
    case ARCHC_NOT_SINGLE_RELATION_BNC: return "NOT_SINGLE_RELATION_BNC";
    case ARCHC_JUNCTION_SHAPE_MISMATCH: return "JUNCTION_SHAPE_MISMATCH";
    case ARCHC_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case ARCHC_INTERNAL_ERROR: return "INTERNAL_ERROR";
    }
    return "UNKNOWN";
}

const char* archc_last_error(void)
{
    return last_error.message.c_str();
}

size_t archc_last_error_line(void)
{
    return last_error.line;
}

size_t archc_last_error_column(void)
{
    return last_error.column;
}

void archc_string_free(char* s)
{
    std::free(s);
}

archc_status archc_arch_parse(const char* text, unsigned flags, archc_arch** out)
{
    ARCHC_REQUIRE(text && out);
    return guarded([&] {
        ParseOptions options;
        options.check_schema = !(flags & ARCHC_PARSE_NO_VALIDATE);
        *out = wrap(parse_architecture(text, options));
        return ARCHC_OK;
    });
}

archc_status archc_arch_serialize(const archc_arch* a, char** out)
{
    ARCHC_REQUIRE(a && out);
    return guarded([&] {
        *out = copy_string(serialize(*a->arch));
        return ARCHC_OK;
    });
}

void archc_arch_free(archc_arch* a)
{
    delete a;
}

archc_status archc_arch_counts(const archc_arch* a, size_t* elements, size_t* relations, size_t* functions)
{
    ARCHC_REQUIRE(a);
    if (elements)
        *elements = a->arch->universe_set().size();
    if (relations)
        *relations = a->arch->relations.size();
    if (functions)
        *functions = a->arch->functions.size();
    return ARCHC_OK;
}

archc_status archc_arch_equal(const archc_arch* a, const archc_arch* b, int* equal)
{
    ARCHC_REQUIRE(a && b && equal);
    *equal = *a->arch == *b->arch;
    return ARCHC_OK;
}

archc_status archc_validate(const archc_arch* a, int* ok, char** report)
{
    ARCHC_REQUIRE(a && ok);
    return guarded([&] {
        ValidationReport r = validate(*a->arch);
        *ok = r.ok();
        if (report) {
            std::string text;
            for (const auto& v : r.violations)
                text += std::string(to_string(v.code)) + ": " + v.message + "\n";
            *report = copy_string(text);
        }
        return ARCHC_OK;
    });
}

archc_status archc_fixture(const char* name, archc_arch** out)
{
    ARCHC_REQUIRE(name && out);
    return guarded([&] {
        *out = wrap(fixture(name));
        return ARCHC_OK;
    });
}

archc_status archc_restrict(const archc_arch* a, const char* const* elements, size_t count, archc_arch** out)
{
    ARCHC_REQUIRE(a && out && (elements || count == 0));
    return guarded([&] {
        ElementSet subset;
        for (std::size_t i = 0; i < count; ++i) {
            if (!elements[i])
                return fail(ARCHC_INVALID_ARGUMENT, "null element name");
            subset.emplace(elements[i]);
        }
        *out = wrap(restrict(*a->arch, subset));
        return ARCHC_OK;
    });
}

archc_status archc_is_sub_architecture(const archc_arch* a, const archc_arch* b, int* holds)
{
    ARCHC_REQUIRE(a && b && holds);
    return guarded([&] {
        *holds = is_sub_architecture(*a->arch, *b->arch);
        return ARCHC_OK;
    });
}

archc_status archc_is_bnc(const archc_arch* a, int* holds)
{
    ARCHC_REQUIRE(a && holds);
    *holds = is_bnc(*a->arch);
    return ARCHC_OK;
}

archc_status archc_partition_parse(const char* text, archc_partition** out)
{
    ARCHC_REQUIRE(text && out);
    return guarded([&] {
        *out = new archc_partition{parse_partition(text)};
        return ARCHC_OK;
    });
}

archc_status archc_partition_serialize(const archc_partition* p, char** out)
{
    ARCHC_REQUIRE(p && out);
    return guarded([&] {
        *out = copy_string(serialize(p->partition));
        return ARCHC_OK;
    });
}

void archc_partition_free(archc_partition* p)
{
    delete p;
}

size_t archc_partition_size(const archc_partition* p)
{
    return p ? p->partition.size() : 0;
}

archc_status archc_partition_tier(const archc_partition* p, size_t index, char** out)
{
    ARCHC_REQUIRE(p && out);
    if (index >= p->partition.size())
        return fail(ARCHC_INDEX_OUT_OF_RANGE, "tier index " + std::to_string(index) + " out of range");
    return guarded([&] {
        std::string text;
        for (const auto& e : p->partition.tiers[index])
            text += (text.empty() ? "" : " ") + e.str();
        *out = copy_string(text);
        return ARCHC_OK;
    });
}

archc_status archc_check_tier_partition(const archc_arch* a, const archc_partition* p, int* holds)
{
    ARCHC_REQUIRE(a && p && holds);
    return guarded([&] {
        *holds = check_tier_partition(*a->arch, p->partition);
        return ARCHC_OK;
    });
}

archc_status archc_find_max_tiers(const archc_arch* a, int use_oracle, uint64_t budget, size_t* tiers,
                                  archc_partition** witness)
{
    ARCHC_REQUIRE(a && tiers);
    return guarded([&] {
        TierSearchOptions options;
        options.node_budget = effective_budget(budget);
        options.use_oracle = use_oracle != 0;
        TierResult r = find_max_tiers(*a->arch, options);
        *tiers = r.tiers;
        if (witness)
            *witness = new archc_partition{std::move(r.witness)};
        return ARCHC_OK;
    });
}

archc_status archc_find_homomorphism(const archc_arch* a, const archc_arch* b, unsigned flags, uint64_t budget,
                                     archc_hom** witness)
{
    ARCHC_REQUIRE(a && b);
    return guarded([&] {
        SearchOptions options;
        options.node_budget = effective_budget(budget);
        options.flags.injective = flags & ARCHC_HOM_INJECTIVE;
        options.flags.surjective = flags & ARCHC_HOM_SURJECTIVE;
        options.flags.bijective = flags & ARCHC_HOM_BIJECTIVE;
        options.flags.isomorphism = flags & ARCHC_HOM_ISOMORPHISM;
        SearchResult r = find_homomorphism(a->arch, b->arch, options);
        switch (r.status) {
        case SearchStatus::Found:
            if (witness)
                *witness = new archc_hom{std::move(*r.witness)};
            return ARCHC_OK;
        case SearchStatus::None:
            return ARCHC_NOT_FOUND;
        case SearchStatus::BudgetExceeded:
            break;
        }
        return fail(ARCHC_BUDGET_EXCEEDED, "SEARCH_BUDGET_EXCEEDED: search stopped after "
                                               + std::to_string(r.nodes) + " nodes");
    });
}

archc_status archc_hom_parse(const char* text, archc_hom** out)
{
    ARCHC_REQUIRE(text && out);
    return guarded([&] {
        *out = new archc_hom{parse_homomorphism(text)};
        return ARCHC_OK;
    });
}

archc_status archc_hom_serialize(const archc_hom* h, char** out)
{
    ARCHC_REQUIRE(h && out);
    return guarded([&] {
        *out = copy_string(serialize(h->hom));
        return ARCHC_OK;
    });
}

void archc_hom_free(archc_hom* h)
{
    delete h;
}

archc_status archc_check_homomorphism(const archc_hom* h, int* ok, char** report)
{
    ARCHC_REQUIRE(h && ok);
    return guarded([&] {
        MorphismReport r = check_homomorphism(h->hom);
        *ok = r.ok();
        if (report) {
            std::string text;
            for (const auto& v : r.violations)
                text += std::string(to_string(v.code)) + ": " + v.message + "\n";
            *report = copy_string(text);
        }
        return ARCHC_OK;
    });
}

archc_status archc_is_isomorphism(const archc_hom* h, int* holds)
{
    ARCHC_REQUIRE(h && holds);
    return guarded([&] {
        *holds = is_isomorphism(h->hom);
        return ARCHC_OK;
    });
}

archc_status archc_compose(const archc_hom* g, const archc_hom* f, archc_hom** out)
{
    ARCHC_REQUIRE(g && f && out);
    return guarded([&] {
        *out = new archc_hom{compose(g->hom, f->hom)};
        return ARCHC_OK;
    });
}

archc_status archc_import_dot(const char* text, archc_arch** out)
{
    ARCHC_REQUIRE(text && out);
    return guarded([&] {
        *out = wrap(graph_to_bnc(parse_dot_subset(text)));
        return ARCHC_OK;
    });
}

archc_status archc_emit_dot(const archc_arch* a, char** out)
{
    ARCHC_REQUIRE(a && out);
    return guarded([&] {
        *out = copy_string(to_dot(bnc_to_graph(*a->arch), a->arch->name.empty() ? "g" : a->arch->name));
        return ARCHC_OK;
    });
}

} // extern "C"
