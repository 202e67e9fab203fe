#ifndef PATIENCE_LAB_H
#define PATIENCE_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

/*
 Result code of every fallible call.
 */
typedef enum {
  PL_STATUS_OK = 0,
  PL_STATUS_NULL_POINTER = 1,
  PL_STATUS_INVALID_UTF8 = 2,
  PL_STATUS_PARSE = 3,
  PL_STATUS_NOT_A_PERMUTATION = 4,
  PL_STATUS_MALFORMED = 5,
  PL_STATUS_SHAPE_MISMATCH = 6,
  PL_STATUS_NO_PREIMAGE = 7,
  PL_STATUS_OUT_OF_RANGE = 8,
  PL_STATUS_PANIC = 9,
} PlStatus;

/*
 Opaque permutation handle.
 */
typedef struct PlPermutation PlPermutation;

/*
 Opaque pile configuration handle (columns bottom to top).
 */
typedef struct PlPileConfig PlPileConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failing call on this thread, or NULL. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *pl_last_error(void);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void pl_string_free(char *s);

/*
 Parses one-line notation: `"64518723"`, `"6 4 5 1"` or `"6,4,5,1"`.

 # Safety
 `text` must be NUL terminated; `out` must be writable.
 */
PlStatus pl_permutation_parse(const char *text, PlPermutation **out);

/*
 Builds a permutation from `len` values that must be exactly `1..=len`.

 # Safety
 `values` must point to `len` readable elements (or be NULL when `len` is 0).
 */
PlStatus pl_permutation_from_array(const size_t *values, size_t len, PlPermutation **out);

/*
 Number of entries; 0 for NULL.

 # Safety
 `p` must be a live handle or NULL.
 */
size_t pl_permutation_len(const PlPermutation *p);

/*
 Entry at 0-based `index`.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_permutation_get(const PlPermutation *p, size_t index, size_t *out);

/*
 Space separated one-line notation.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_permutation_to_string(const PlPermutation *p, char **out);

/*
 # Safety
 `p` must come from this library and not have been freed; NULL is ignored.
 */
void pl_permutation_free(PlPermutation *p);

/*
 Extended Patience Sorting: insertion piles `R` and recording piles `S`.

 # Safety
 `p` must be a live handle; `out_r` and `out_s` must be writable.
 */
PlStatus pl_xps(const PlPermutation *p, PlPileConfig **out_r, PlPileConfig **out_s);

/*
 The permutation sorted into `(r, s)`, or [`PlStatus::ShapeMismatch`] /
 [`PlStatus::NoPreimage`].

 # Safety
 `r` and `s` must be live handles; `out` must be writable.
 */
PlStatus pl_xps_inverse(const PlPileConfig *r, const PlPileConfig *s, PlPermutation **out);

/*
 Reverse patience word: columns left to right, each read bottom to top.

 # Safety
 `r` must be a live handle; `out` must be writable.
 */
PlStatus pl_rpw(const PlPileConfig *r, PlPermutation **out);

/*
 Parses `{"columns": [[...], ...]}`.

 # Safety
 `json` must be NUL terminated; `out` must be writable.
 */
PlStatus pl_piles_from_json(const char *json, PlPileConfig **out);

/*
 # Safety
 `c` must be a live handle; `out` must be writable.
 */
PlStatus pl_piles_to_json(const PlPileConfig *c, char **out);

/*
 Number of piles; 0 for NULL.

 # Safety
 `c` must be a live handle or NULL.
 */
size_t pl_piles_count(const PlPileConfig *c);

/*
 Height of pile `column`.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
PlStatus pl_piles_column_len(const PlPileConfig *c, size_t column, size_t *out);

/*
 Card at `index` (0 = bottom) of pile `column`.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
PlStatus pl_piles_get(const PlPileConfig *c, size_t column, size_t index, size_t *out);

/*
 Whether the configuration is the insertion piles of some permutation.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
PlStatus pl_piles_is_legal(const PlPileConfig *c, bool *out);

/*
 # Safety
 `c` must come from this library and not have been freed; NULL is ignored.
 */
void pl_piles_free(PlPileConfig *c);

/*
 Whether `p` avoids the barred pattern 3-1̄-42.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_avoids_3bar142(const PlPermutation *p, bool *out);

/*
 Whether every southwest shadow diagram iterate of `p` is free of crossings.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_crossing_free(const PlPermutation *p, bool *out);

/*
 `[{"rows": P}, {"rows": Q}]`.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_rsk_json(const PlPermutation *p, char **out);

/*
 All southwest iterates as a JSON array of diagrams.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_sw_iterates_json(const PlPermutation *p, char **out);

/*
 All northeast iterates as a JSON array of diagrams.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_ne_iterates_json(const PlPermutation *p, char **out);

/*
 Piles, tableaux, reverse patience word and avoidance flag as one JSON
 object, the same record `patience-lab run --format json` prints.

 # Safety
 `p` must be a live handle; `out` must be writable.
 */
PlStatus pl_run_json(const PlPermutation *p, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PATIENCE_LAB_H */
