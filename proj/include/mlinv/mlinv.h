#ifndef MLINV_MLINV_H
#define MLINV_MLINV_H

/*
 * C interface to libmlinv: multilinear invariants of the order-96 unitary
 * reflection group generated by
 *
 *     T = (1+i)/2 [[1, 1], [1, -1]],    D = diag(1, i).
 *
 * Conventions
 *   - Every function that can fail returns an mlinv_status; MLINV_OK is 0.
 *     On failure, mlinv_last_error() returns a message for the calling
 *     thread until its next failing call.
 *   - Objects are opaque handles released with the matching _destroy
 *     function. Destroying NULL is a no-op.
 *   - Strings returned through `char** out` are owned by the caller and must
 *     be released with mlinv_string_free().
 *   - Exact values cross the boundary as text, "p/q+r/s*i" (e.g. "2",
 *     "-i/2", "1/2+1/2*i"). No floating point is used anywhere.
 *   - Monomial lists are text with one "i_1..i_f,k_1..k_f" per line
 *     (e.g. "121,112"); blank lines and '#' comments are ignored.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define MLINV_API __declspec(dllexport)
#else
#  define MLINV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlinv_status {
  MLINV_OK = 0,
  MLINV_E_INVALID_ARGUMENT = 1,
  MLINV_E_PARSE = 2,
  MLINV_E_DIVISION_BY_ZERO = 3,
  MLINV_E_SINGULAR_MATRIX = 4,
  MLINV_E_CAP_EXCEEDED = 5,
  MLINV_E_INVALID_PERMUTATION = 6,
  MLINV_E_DIMENSION_MISMATCH = 7,
  MLINV_E_NOT_IN_SPAN = 8,
  MLINV_E_DEPENDENT_BASIS = 9,
  MLINV_E_INSUFFICIENT_CANDIDATES = 10,
  MLINV_E_ODD_COEFFICIENT = 11,
  MLINV_E_RESOURCE_LIMIT = 12,
  MLINV_E_IO = 13,
  MLINV_E_INTERNAL = 99
} mlinv_status;

typedef enum mlinv_format {
  MLINV_FORMAT_JSON = 0,
  MLINV_FORMAT_TABLE = 1,
  MLINV_FORMAT_CSV = 2
} mlinv_format;

typedef struct mlinv_group mlinv_group;
typedef struct mlinv_basis mlinv_basis;
typedef struct mlinv_relation mlinv_relation;

MLINV_API const char* mlinv_version(void);
/* Stable snake_case name, e.g. "not_in_span". */
MLINV_API const char* mlinv_status_name(mlinv_status status);
MLINV_API const char* mlinv_last_error(void);
MLINV_API void mlinv_string_free(char* s);

/* Exact arithmetic on serialized Gaussian rationals. */
MLINV_API mlinv_status mlinv_gr_normalize(const char* x, char** out);
MLINV_API mlinv_status mlinv_gr_add(const char* x, const char* y, char** out);
MLINV_API mlinv_status mlinv_gr_mul(const char* x, const char* y, char** out);
MLINV_API mlinv_status mlinv_gr_inv(const char* x, char** out);

MLINV_API mlinv_status mlinv_dim_v_formula(int f, uint64_t* out);
MLINV_API mlinv_status mlinv_catalan(int f, uint64_t* out);

/* ---- group ---- */

/* The group generated by T and D (96 elements). */
MLINV_API mlinv_status mlinv_group_create_default(mlinv_group** out);
/* Closure of generators given as 4 entry strings each, row-major. */
MLINV_API mlinv_status mlinv_group_create(const char* const* entries, size_t generator_count,
                                          size_t cap, mlinv_group** out);
MLINV_API void mlinv_group_destroy(mlinv_group* g);
MLINV_API size_t mlinv_group_order(const mlinv_group* g);
MLINV_API mlinv_status mlinv_group_render(const mlinv_group* g, mlinv_format format, char** out);

/* ---- bases ---- */

/* V_f basis. forced_order may be NULL (encoding order only). */
MLINV_API mlinv_status mlinv_vbasis_build(const mlinv_group* g, int f, const char* forced_order,
                                          unsigned workers, mlinv_basis** out);
/* W_f basis from all permutations in lexicographic order. */
MLINV_API mlinv_status mlinv_wbasis_build(int f, mlinv_basis** out);
MLINV_API void mlinv_basis_destroy(mlinv_basis* b);
MLINV_API size_t mlinv_basis_dimension(const mlinv_basis* b);
MLINV_API int mlinv_basis_degree(const mlinv_basis* b);
/* "121,112" for V vectors, "12354" (beta) for W vectors; index is 0-based. */
MLINV_API mlinv_status mlinv_basis_label(const mlinv_basis* b, size_t index, char** out);
/* {"f":n,"coeffs":[{"pos":t,"val":"..."}]} of one basis vector. */
MLINV_API mlinv_status mlinv_basis_vector_json(const mlinv_basis* b, size_t index, char** out);
MLINV_API mlinv_status mlinv_basis_render(const mlinv_basis* b, mlinv_format format, char** out);

/* Reference V orders (monomial list text) for f = 1..5. */
MLINV_API mlinv_status mlinv_reference_v_order(int f, char** out);

/* ---- relations ---- */

MLINV_API mlinv_status mlinv_relate(const mlinv_basis* v, const mlinv_basis* w,
                                    mlinv_relation** out);
MLINV_API void mlinv_relation_destroy(mlinv_relation* r);
MLINV_API int mlinv_relation_all_even(const mlinv_relation* r);
MLINV_API size_t mlinv_relation_rows(const mlinv_relation* r);
MLINV_API size_t mlinv_relation_cols(const mlinv_relation* r);
MLINV_API mlinv_status mlinv_relation_coefficient(const mlinv_relation* r, size_t row, size_t col,
                                                  char** out);
MLINV_API mlinv_status mlinv_relation_render(const mlinv_relation* r, mlinv_format format,
                                             char** out);

/*
 * Completion of W to V. With candidates, every listed monomial must raise
 * the rank and the last must reach dim V (else
 * MLINV_E_INSUFFICIENT_CANDIDATES). With NULL, the V basis is scanned
 * greedily in order.
 */
MLINV_API mlinv_status mlinv_complete(const mlinv_group* g, const mlinv_basis* v,
                                      const mlinv_basis* w, const char* candidates,
                                      mlinv_format format, char** out);

/* ---- whole pipelines ---- */

MLINV_API mlinv_status mlinv_dims_render(const mlinv_group* g, int f, unsigned workers,
                                         mlinv_format format, char** out);
/* Runs the invariant suite; *all_passed is set even when checks fail. */
MLINV_API mlinv_status mlinv_verify(const mlinv_group* g, int f, unsigned workers,
                                    mlinv_format format, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* MLINV_MLINV_H */
