/*
 * exgl — exact witness computations in general linear groups over finite
 * rings, exposed as a C API with opaque handles and status codes.
 *
 * Conventions:
 *   - Ring elements are canonical indices 0..order-1 (uint32_t).
 *   - Matrix rows/columns and transvection indices are 1-based here and in
 *     all JSON payloads; degree n means indices 1..n.
 *   - Every function returning EXGL_OK may allocate output handles/strings;
 *     free them with the matching exgl_*_free / exgl_string_free.
 *   - On failure, exgl_last_error() returns a thread-local message.
 */
#ifndef EXGL_H
#define EXGL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EXGL_API __declspec(dllexport)
#else
#define EXGL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  EXGL_OK = 0,
  EXGL_ERR_ARGUMENT = 1,
  EXGL_ERR_PARSE = 2,
  EXGL_ERR_CAPACITY = 3,
  EXGL_ERR_NOT_INVERTIBLE = 4,
  EXGL_ERR_PRECONDITION = 5,
  EXGL_ERR_INVARIANT = 6,
  EXGL_ERR_UNSUPPORTED = 7,
  EXGL_ERR_SAMPLING = 8,
  EXGL_ERR_IO = 9,
  EXGL_ERR_UNKNOWN = 127
};

typedef struct exgl_ring exgl_ring;
typedef struct exgl_ideal exgl_ideal;
typedef struct exgl_matrix exgl_matrix;    /* an invertible matrix with its inverse */
typedef struct exgl_word exgl_word;        /* word in elementary transvections */
typedef struct exgl_relword exgl_relword;  /* relative word (conjugated ideal letters) */
typedef struct exgl_product exgl_product;  /* product of conjugates of one matrix */
typedef struct exgl_group exgl_group;      /* enumerated subgroup */

EXGL_API const char* exgl_status_name(int status);
EXGL_API const char* exgl_last_error(void);
EXGL_API void exgl_string_free(char* s);

/* ---- rings ---------------------------------------------------------- */
/* Grammar: Z/<m> | Prod(<spec>,...) | Mat(<k>,<spec>) | UT(<k>,<spec>) |
 * Table(<path>); table files are JSON {order, add, mul, zero, one}. */
EXGL_API int exgl_ring_create(const char* spec, exgl_ring** out);
EXGL_API int exgl_ring_from_table_json(const char* json, exgl_ring** out);
EXGL_API void exgl_ring_free(exgl_ring* ring);
EXGL_API uint32_t exgl_ring_order(const exgl_ring* ring);
EXGL_API uint32_t exgl_ring_zero(const exgl_ring* ring);
EXGL_API uint32_t exgl_ring_one(const exgl_ring* ring);
EXGL_API int exgl_ring_add(const exgl_ring* ring, uint32_t a, uint32_t b, uint32_t* out);
EXGL_API int exgl_ring_mul(const exgl_ring* ring, uint32_t a, uint32_t b, uint32_t* out);
EXGL_API int exgl_ring_neg(const exgl_ring* ring, uint32_t a, uint32_t* out);
EXGL_API int exgl_ring_element_str(const exgl_ring* ring, uint32_t a, char** out);
/* Exhaustive axiom check on table rings; structural kinds pass vacuously.
 * *pass is 1/0; *report_json describes the first violation. */
EXGL_API int exgl_ring_verify(const exgl_ring* ring, int* pass, char** report_json);

/* ---- ideals --------------------------------------------------------- */
EXGL_API int exgl_ideal_create(const exgl_ring* ring, const uint32_t* gens, size_t ngens,
                               uint64_t cap, exgl_ideal** out);
EXGL_API void exgl_ideal_free(exgl_ideal* ideal);
EXGL_API size_t exgl_ideal_size(const exgl_ideal* ideal);
EXGL_API int exgl_ideal_contains(const exgl_ideal* ideal, uint32_t a);
EXGL_API int exgl_ideal_elements(const exgl_ideal* ideal, uint32_t* buf, size_t buflen,
                                 size_t* written);

/* ---- exchange-ring idempotents -------------------------------------- */
EXGL_API int exgl_nicholson(const exgl_ring* ring, uint32_t x, uint32_t* e, uint32_t* s,
                            uint32_t* t);
/* es/rs must hold m entries; inputs must sum to 1. */
EXGL_API int exgl_orthogonal_decomposition(const exgl_ring* ring, const uint32_t* xs, size_t m,
                                           uint32_t* es, uint32_t* rs);

/* ---- matrices -------------------------------------------------------- */
EXGL_API int exgl_matrix_identity(const exgl_ring* ring, uint32_t n, exgl_matrix** out);
EXGL_API int exgl_matrix_from_json(const exgl_ring* ring, const char* json, exgl_matrix** out);
EXGL_API int exgl_matrix_transvection(const exgl_ring* ring, uint32_t n, uint32_t i, uint32_t j,
                                      uint32_t x, exgl_matrix** out);
EXGL_API int exgl_matrix_perm(const exgl_ring* ring, uint32_t n, uint32_t i, uint32_t j,
                              exgl_matrix** out);
EXGL_API int exgl_matrix_mul(const exgl_matrix* a, const exgl_matrix* b, exgl_matrix** out);
EXGL_API void exgl_matrix_free(exgl_matrix* m);
EXGL_API int exgl_matrix_to_json(const exgl_matrix* m, char** out);
EXGL_API int exgl_matrix_inverse_json(const exgl_matrix* m, char** out);
EXGL_API int exgl_matrix_equal(const exgl_matrix* a, const exgl_matrix* b);
EXGL_API uint32_t exgl_matrix_degree(const exgl_matrix* m);
EXGL_API int exgl_matrix_entry(const exgl_matrix* m, uint32_t i, uint32_t j, uint32_t* out);
EXGL_API int exgl_congruence_member(const exgl_matrix* m, const exgl_ideal* ideal, int* out);
EXGL_API int exgl_level_ideal(const exgl_matrix* m, uint64_t cap, exgl_ideal** out);

/* ---- words ----------------------------------------------------------- */
EXGL_API int exgl_word_from_json(const exgl_ring* ring, uint32_t n, const char* json,
                                 exgl_word** out);
EXGL_API void exgl_word_free(exgl_word* w);
EXGL_API int exgl_word_to_json(const exgl_word* w, char** out);
EXGL_API size_t exgl_word_length(const exgl_word* w);
EXGL_API int exgl_word_eval(const exgl_word* w, exgl_matrix** out);
EXGL_API int exgl_word_sample(const exgl_ring* ring, uint32_t n, uint64_t seed, uint32_t index,
                              uint32_t length, exgl_word** out);

EXGL_API void exgl_relword_free(exgl_relword* w);
EXGL_API int exgl_relword_from_json(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                                    const char* json, exgl_relword** out);
EXGL_API int exgl_relword_to_json(const exgl_relword* w, char** out);
EXGL_API size_t exgl_relword_factors(const exgl_relword* w);
EXGL_API int exgl_relword_eval(const exgl_relword* w, exgl_matrix** out);
EXGL_API int exgl_relword_expand(const exgl_relword* w, exgl_word** out);

/* ---- factorizations --------------------------------------------------- */
EXGL_API int exgl_factor_rank_one(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                                  const uint32_t* u, const uint32_t* v, uint32_t j,
                                  exgl_relword** out);
EXGL_API int exgl_factor_unimodular(const exgl_ring* ring, uint32_t n, const exgl_ideal* ideal,
                                    const uint32_t* u, const uint32_t* v, const uint32_t* w,
                                    uint32_t x, exgl_relword** out);
EXGL_API int exgl_factor_conj_transvection(const exgl_matrix* sigma, uint32_t i, uint32_t j,
                                           uint32_t x, const exgl_ideal* ideal,
                                           exgl_relword** out);
EXGL_API int exgl_factor_commutator(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t x,
                                    const exgl_ideal* ideal, exgl_relword** out);

/* ---- conjugate products ----------------------------------------------- */
EXGL_API void exgl_product_free(exgl_product* p);
EXGL_API int exgl_product_to_json(const exgl_product* p, char** out);
EXGL_API size_t exgl_product_factors(const exgl_product* p);
EXGL_API int exgl_product_eval(const exgl_product* p, exgl_matrix** out);
EXGL_API int exgl_product_from_json(const exgl_ring* ring, const char* json, exgl_product** out);

EXGL_API int exgl_reduce_step(const exgl_matrix* a, const exgl_matrix* b, const exgl_matrix* g,
                              exgl_matrix** a2, exgl_matrix** b2);
/* Expands the chain reduced by gs[0..k-1]; the product has exactly 2^k
 * factors conjugating eval(a1) * b1. */
EXGL_API int exgl_expand_reduction(const exgl_word* a1, const exgl_matrix* b1,
                                   const exgl_word* const* gs, size_t k, exgl_product** out);
EXGL_API int exgl_extract_eight(const exgl_matrix* sigma, uint32_t i, const uint32_t* xs,
                                uint32_t j_decl, uint32_t y, uint32_t k, uint32_t l, uint32_t a,
                                uint32_t b, exgl_product** out);
EXGL_API int exgl_extract_entry(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t k,
                                uint32_t l, uint32_t a, uint32_t b, exgl_product** out);
EXGL_API int exgl_extract_diagonal(const exgl_matrix* sigma, uint32_t i, uint32_t j, uint32_t k,
                                   uint32_t l, uint32_t a, uint32_t b, uint32_t c,
                                   exgl_product** out);

/* ---- classification ---------------------------------------------------- */
/* compare_json: optional array of ideal generator lists, e.g. [[],[2]].
 * Emits the full certificate as JSON. */
EXGL_API int exgl_classify(const exgl_matrix* const* gens, size_t ngens, const char* compare_json,
                           uint64_t ideal_cap, char** cert_json);

/* ---- enumeration oracles ------------------------------------------------ */
EXGL_API int exgl_group_closure(const exgl_matrix* const* gens, size_t ngens, uint64_t cap,
                                exgl_group** out);
EXGL_API int exgl_group_relative_elementary(const exgl_ring* ring, uint32_t n,
                                            const exgl_ideal* ideal, uint64_t cap,
                                            exgl_group** out);
EXGL_API void exgl_group_free(exgl_group* g);
EXGL_API size_t exgl_group_order(const exgl_group* g);
EXGL_API int exgl_group_contains(const exgl_group* g, const exgl_matrix* m);

/* ---- sampling and suites ------------------------------------------------ */
EXGL_API int exgl_sample_gl(const exgl_ring* ring, uint32_t n, uint64_t seed, uint32_t count,
                            exgl_matrix*** out_array);
EXGL_API void exgl_matrix_array_free(exgl_matrix** array, size_t count);

/* config_json fields (all optional): ring, n, ideal, seed, samples,
 * element_cap, group_cap. Suites: relations, idempotents, normality,
 * commutator-formula, sandwich, reduction. */
EXGL_API int exgl_run_suite(const char* name, const char* config_json, char** report_json,
                            int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* EXGL_H */
