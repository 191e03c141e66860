/*
 * C interface to the colhur library: conjugacy classes of S_N with respect
 * to a Young subgroup, and the structure constants of their class-sum
 * algebra computed by direct counting and as colored Hurwitz numbers.
 *
 * All objects are opaque handles. Every fallible call returns a
 * colhur_status; on failure colhur_last_error() describes the problem for
 * the calling thread. Buffers returned through out-parameters are owned by
 * the caller and released with colhur_buffer_destroy().
 */
#ifndef COLHUR_H
#define COLHUR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COLHUR_BUILDING_LIBRARY)
#    define COLHUR_API __declspec(dllexport)
#  else
#    define COLHUR_API __declspec(dllimport)
#  endif
#else
#  define COLHUR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum colhur_status {
  COLHUR_OK = 0,
  COLHUR_ERR_VALIDATION = 1, /* malformed input */
  COLHUR_ERR_CAP = 2,        /* enumeration cap exceeded */
  COLHUR_ERR_VERIFY = 3,     /* a cross-check failed; see the report */
  COLHUR_ERR_INTERNAL = 4
} colhur_status;

typedef enum colhur_method {
  COLHUR_METHOD_BOTH = 0,
  COLHUR_METHOD_ORACLE = 1,
  COLHUR_METHOD_HURWITZ = 2
} colhur_method;

typedef struct colhur_limits {
  uint32_t max_degree;
  uint64_t max_young;
  uint32_t max_necklace_degree;
  uint32_t max_scan_degree;
  uint32_t max_verify_degree;
} colhur_limits;

typedef struct colhur_context colhur_context;
typedef struct colhur_buffer colhur_buffer;

typedef struct colhur_constant_result {
  int has_oracle;
  uint64_t oracle;
  int has_hurwitz;
  /* Exact value hurwitz_numerator / hurwitz_denominator in lowest terms. */
  int64_t hurwitz_numerator;
  int64_t hurwitz_denominator;
  int match; /* 1 when both were computed and agree */
} colhur_constant_result;

COLHUR_API const char* colhur_version(void);
COLHUR_API const char* colhur_last_error(void);

COLHUR_API void colhur_limits_default(colhur_limits* limits);
/* Defaults overridden by COLHUR_MAX_N, COLHUR_MAX_YOUNG, COLHUR_MAX_VERIFY_N. */
COLHUR_API void colhur_limits_from_env(colhur_limits* limits);

/* Block coloring: multiplicities {2,2,1} paint points 0-1 a, 2-3 b, 4 c.
 * `limits` may be NULL for the defaults. */
COLHUR_API colhur_status colhur_context_create_blocks(const uint32_t* multiplicities, size_t count,
                                                      const colhur_limits* limits, colhur_context** out);
/* Per-point letters, e.g. "aabba". */
COLHUR_API colhur_status colhur_context_create_letters(const char* letters, const colhur_limits* limits,
                                                       colhur_context** out);
COLHUR_API void colhur_context_destroy(colhur_context* ctx);

COLHUR_API size_t colhur_degree(const colhur_context* ctx);
COLHUR_API uint64_t colhur_young_order(const colhur_context* ctx);
COLHUR_API colhur_status colhur_class_count(colhur_context* ctx, size_t* out);
/* Text label ("a|ab") of the class at `index` in enumeration order. */
COLHUR_API colhur_status colhur_class_label(colhur_context* ctx, size_t index, colhur_buffer** out);

/* Class listing as JSON. */
COLHUR_API colhur_status colhur_classes_json(colhur_context* ctx, colhur_buffer** out);

/* c^nu_{mu lambda}; messes in text form, canonicalized on input. */
COLHUR_API colhur_status colhur_constant(colhur_context* ctx, const char* lambda, const char* mu, const char* nu,
                                         colhur_method method, colhur_constant_result* out);
COLHUR_API colhur_status colhur_constant_json(colhur_context* ctx, const char* lambda, const char* mu,
                                              const char* nu, colhur_method method, colhur_buffer** out);

/* Full table. With verify != 0 every cell is cross-checked against the
 * Hurwitz formula; a mismatch returns COLHUR_ERR_VERIFY. `csv` may be NULL. */
COLHUR_API colhur_status colhur_table(colhur_context* ctx, int verify, colhur_buffer** json, colhur_buffer** csv);

/* Census of surface classes for (lambda, mu, nu) as JSON. */
COLHUR_API colhur_status colhur_surfaces_json(colhur_context* ctx, const char* lambda, const char* mu,
                                              const char* nu, colhur_buffer** out);

/* Runs the invariant suite. Both buffers are filled even when checks fail,
 * in which case the status is COLHUR_ERR_VERIFY. `json` may be NULL. */
COLHUR_API colhur_status colhur_verify(colhur_context* ctx, uint64_t seed, colhur_buffer** text, colhur_buffer** json);

COLHUR_API const char* colhur_buffer_data(const colhur_buffer* buffer);
COLHUR_API size_t colhur_buffer_size(const colhur_buffer* buffer);
COLHUR_API void colhur_buffer_destroy(colhur_buffer* buffer);

#ifdef __cplusplus
}
#endif

#endif /* COLHUR_H */
