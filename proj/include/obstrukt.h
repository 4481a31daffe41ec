/* C interface to obstrukt. All functions return an obk_status; on failure
 * obk_last_error() describes the problem for the calling thread. Reports are
 * canonical JSON strings owned by the caller and released with
 * obk_string_free. */
#ifndef OBSTRUKT_H
#define OBSTRUKT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OBK_API __declspec(dllexport)
#else
#define OBK_API __attribute__((visibility("default")))
#endif

typedef enum obk_status {
    OBK_OK = 0,
    OBK_ERR_DIMENSION_MISMATCH = 1,
    OBK_ERR_FIELD_MISMATCH = 2,
    OBK_ERR_INPUT = 3,
    OBK_ERR_NOT_INNER = 4,
    OBK_ERR_CURVATURE_NOT_INNER = 5,
    OBK_ERR_VALUE_ESCAPES_ANNIHILATOR = 6,
    OBK_ERR_OBSTRUCTION_NONZERO = 7,
    OBK_ERR_NOT_COCYCLE = 8,
    OBK_ERR_NOT_BIMODULE = 9,
    OBK_ERR_DEGREE_OVERFLOW = 10,
    OBK_ERR_NUCLEUS_MISMATCH = 11,
    OBK_ERR_SECTION_NOT_SECTION = 12,
    OBK_ERR_PRODUCT_ESCAPES_KERNEL = 13,
    OBK_ERR_INVALID_EXTENSION = 14,
    OBK_ERR_INTERNAL = 15,
    OBK_ERR_NULL_ARGUMENT = 16
} obk_status;

typedef struct obk_algebra obk_algebra;
typedef struct obk_lie obk_lie;
typedef struct obk_bimodule obk_bimodule;
typedef struct obk_lie_module obk_lie_module;
typedef struct obk_cochain obk_cochain;
typedef struct obk_ce_cochain obk_ce_cochain;
typedef struct obk_coupling obk_coupling;
typedef struct obk_bundle obk_bundle;

OBK_API const char* obk_version(void);
OBK_API const char* obk_last_error(void);
/* "InputError", "ObstructionNonzero", ... */
OBK_API const char* obk_status_name(int status);
/* 1 when the status is a mathematical refusal rather than bad input */
OBK_API int obk_status_is_refusal(int status);
OBK_API void obk_string_free(char* s);

/* parsing */
OBK_API int obk_algebra_from_json(const char* json, obk_algebra** out);
OBK_API int obk_algebra_dim(const obk_algebra* a, size_t* out);
OBK_API void obk_algebra_free(obk_algebra* a);

OBK_API int obk_lie_from_json(const char* json, obk_lie** out);
OBK_API void obk_lie_free(obk_lie* g);

OBK_API int obk_bimodule_from_json(const char* json, const obk_algebra* a, obk_bimodule** out);
OBK_API void obk_bimodule_free(obk_bimodule* m);

OBK_API int obk_lie_module_from_json(const char* json, const obk_lie* g, obk_lie_module** out);
OBK_API void obk_lie_module_free(obk_lie_module* m);

/* Hochschild cochain on the module's algebra with values in the module */
OBK_API int obk_cochain_from_json(const char* json, const obk_bimodule* m, obk_cochain** out);
OBK_API void obk_cochain_free(obk_cochain* f);

OBK_API int obk_ce_cochain_from_json(const char* json, const obk_lie_module* m, obk_ce_cochain** out);
OBK_API void obk_ce_cochain_free(obk_ce_cochain* f);

/* a lift A -> Mul(K) given as a connection file */
OBK_API int obk_coupling_from_json(const char* connection_json, const obk_algebra* a, const obk_algebra* k,
                                   obk_coupling** out);
/* optional K-valued hindrance h : A (x) A -> K */
OBK_API int obk_coupling_set_hindrance(obk_coupling* c, const char* cochain_json);
OBK_API void obk_coupling_free(obk_coupling* c);

OBK_API int obk_bundle_from_json(const char* json, obk_bundle** out);
/* the coupling stored in a bundle, with its hindrance and nucleus */
OBK_API int obk_bundle_coupling(const obk_bundle* b, obk_coupling** out);
OBK_API void obk_bundle_free(obk_bundle* b);

/* operations; *report receives a JSON object */
OBK_API int obk_validate_algebra(const obk_algebra* a, char** report, int* valid);
OBK_API int obk_validate_lie(const obk_lie* g, char** report, int* valid);
OBK_API int obk_validate_bimodule(const obk_bimodule* m, char** report, int* valid);
OBK_API int obk_validate_lie_module(const obk_lie_module* m, char** report, int* valid);

OBK_API int obk_mul_algebra(const obk_algebra* k, char** report);
OBK_API int obk_hochschild_cohomology(const obk_bimodule* m, unsigned degree, char** report);
OBK_API int obk_hochschild_class(const obk_bimodule* m, const obk_cochain* f, char** report);
OBK_API int obk_ce_cohomology(const obk_lie_module* m, unsigned degree, char** report);

OBK_API int obk_obstruct(const obk_coupling* c, char** report, int* vanishes);
/* crossed product; OBK_ERR_OBSTRUCTION_NONZERO when the class does not vanish */
OBK_API int obk_extend(const obk_coupling* c, char** report, char** algebra_json);

/* mode: "thm3" or "thm4" */
OBK_API int obk_build_kernel(const obk_bimodule* m, const obk_cochain* f, const char* mode, char** report,
                             char** bundle_json, int* verified);
OBK_API int obk_verify_bundle(const obk_bundle* b, char** report, int* verified);

OBK_API int obk_lie_transfer(const obk_lie_module* m, const obk_ce_cochain* f, unsigned bound, char** report,
                             int* verified);

#ifdef __cplusplus
}
#endif

#endif
