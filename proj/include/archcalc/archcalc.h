#ifndef ARCHCALC_H
#define ARCHCALC_H

/* C interface to the archcalc library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through `char**` are heap-allocated and
 * released with archc_string_free. Every call returns an archc_status; on
 * anything other than ARCHC_OK or ARCHC_NOT_FOUND the thread-local
 * archc_last_error() describes the failure. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARCHCALC_BUILDING)
#    define ARCHCALC_API __declspec(dllexport)
#  else
#    define ARCHCALC_API __declspec(dllimport)
#  endif
#else
#  define ARCHCALC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct archc_arch archc_arch;
typedef struct archc_hom archc_hom;
typedef struct archc_partition archc_partition;

typedef enum archc_status {
    ARCHC_OK = 0,
    ARCHC_NOT_FOUND = 1,
    ARCHC_BUDGET_EXCEEDED = 2,
    ARCHC_PARSE_ERROR = 3,
    ARCHC_SCHEMA_ERROR = 4,
    ARCHC_SUBSET_NOT_IN_UNIVERSE = 5,
    ARCHC_NOT_A_SUBSET = 6,
    ARCHC_DUPLICATE_VIEW = 7,
    ARCHC_NOT_BNC = 8,
    ARCHC_EMPTY_UNIVERSE = 9,
    ARCHC_NOT_A_PARTITION = 10,
    ARCHC_INDEX_OUT_OF_RANGE = 11,
    ARCHC_NOT_COMPOSABLE = 12,
    ARCHC_NOT_SINGLE_RELATION_BNC = 13,
    ARCHC_JUNCTION_SHAPE_MISMATCH = 14,
    ARCHC_INVALID_ARGUMENT = 15,
    ARCHC_INTERNAL_ERROR = 16
} archc_status;

/* archc_find_homomorphism flags. ISOMORPHISM implies BIJECTIVE, which implies
 * INJECTIVE and SURJECTIVE. */
enum {
    ARCHC_HOM_ANY = 0,
    ARCHC_HOM_INJECTIVE = 1u << 0,
    ARCHC_HOM_SURJECTIVE = 1u << 1,
    ARCHC_HOM_BIJECTIVE = 1u << 2,
    ARCHC_HOM_ISOMORPHISM = 1u << 3
};

/* archc_arch_parse flags. */
enum { ARCHC_PARSE_NO_VALIDATE = 1u << 0 };

/* Node budget used when 0 is passed. */
#define ARCHC_DEFAULT_BUDGET UINT64_C(10000000)

ARCHCALC_API const char* archc_version(void);
ARCHCALC_API const char* archc_status_name(archc_status status);

/* Message of the last failed call on this thread, "" if none. Parse errors
 * also report a 1-based line and column (0 when not applicable). */
ARCHCALC_API const char* archc_last_error(void);
ARCHCALC_API size_t archc_last_error_line(void);
ARCHCALC_API size_t archc_last_error_column(void);

ARCHCALC_API void archc_string_free(char* s);

/* Architectures */
ARCHCALC_API archc_status archc_arch_parse(const char* text, unsigned flags, archc_arch** out);
ARCHCALC_API archc_status archc_arch_serialize(const archc_arch* a, char** out);
ARCHCALC_API void archc_arch_free(archc_arch* a);
ARCHCALC_API archc_status archc_arch_counts(const archc_arch* a, size_t* elements, size_t* relations,
                                            size_t* functions);
ARCHCALC_API archc_status archc_arch_equal(const archc_arch* a, const archc_arch* b, int* equal);

/* `*ok` is 1 when valid. `report` (optional) receives one "CODE: message"
 * line per violation. */
ARCHCALC_API archc_status archc_validate(const archc_arch* a, int* ok, char** report);

/* Built-in architectures: "t0", "t1", "tn:N", "wilkinson", "wilkinson-star",
 * "torch". */
ARCHCALC_API archc_status archc_fixture(const char* name, archc_arch** out);

/* Views */
ARCHCALC_API archc_status archc_restrict(const archc_arch* a, const char* const* elements, size_t count,
                                         archc_arch** out);
ARCHCALC_API archc_status archc_is_sub_architecture(const archc_arch* a, const archc_arch* b, int* holds);

/* Tiers */
ARCHCALC_API archc_status archc_is_bnc(const archc_arch* a, int* holds);
ARCHCALC_API archc_status archc_partition_parse(const char* text, archc_partition** out);
ARCHCALC_API archc_status archc_partition_serialize(const archc_partition* p, char** out);
ARCHCALC_API void archc_partition_free(archc_partition* p);
ARCHCALC_API size_t archc_partition_size(const archc_partition* p);
/* Space-separated members of tier `index` (0-based). */
ARCHCALC_API archc_status archc_partition_tier(const archc_partition* p, size_t index, char** out);
ARCHCALC_API archc_status archc_check_tier_partition(const archc_arch* a, const archc_partition* p, int* holds);
/* `witness` is optional. */
ARCHCALC_API archc_status archc_find_max_tiers(const archc_arch* a, int use_oracle, uint64_t budget,
                                               size_t* tiers, archc_partition** witness);

/* Homomorphisms. archc_find_homomorphism returns ARCHC_OK with a witness,
 * ARCHC_NOT_FOUND when none exists, ARCHC_BUDGET_EXCEEDED when the search
 * was cut off. `witness` is optional. */
ARCHCALC_API archc_status archc_find_homomorphism(const archc_arch* a, const archc_arch* b, unsigned flags,
                                                  uint64_t budget, archc_hom** witness);
ARCHCALC_API archc_status archc_hom_parse(const char* text, archc_hom** out);
ARCHCALC_API archc_status archc_hom_serialize(const archc_hom* h, char** out);
ARCHCALC_API void archc_hom_free(archc_hom* h);
ARCHCALC_API archc_status archc_check_homomorphism(const archc_hom* h, int* ok, char** report);
ARCHCALC_API archc_status archc_is_isomorphism(const archc_hom* h, int* holds);
/* g after f. */
ARCHCALC_API archc_status archc_compose(const archc_hom* g, const archc_hom* f, archc_hom** out);

/* DOT */
ARCHCALC_API archc_status archc_import_dot(const char* text, archc_arch** out);
ARCHCALC_API archc_status archc_emit_dot(const archc_arch* a, char** out);

#ifdef __cplusplus
}
#endif

#endif
