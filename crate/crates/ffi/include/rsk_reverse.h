/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef RSK_REVERSE_H
#define RSK_REVERSE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result of every fallible call.
 */
typedef enum RskStatus {
  RSK_STATUS_OK = 0,
  RSK_STATUS_NULL_POINTER = 1,
  RSK_STATUS_INVALID_ARGUMENT = 2,
  RSK_STATUS_PARSE_ERROR = 3,
  RSK_STATUS_OUT_OF_RANGE = 4,
  RSK_STATUS_BUFFER_TOO_SMALL = 5,
  RSK_STATUS_PANIC = 6,
} RskStatus;

/*
 Opaque permutation handle.
 */
typedef struct RskPermutation RskPermutation;

/*
 Opaque standard Young tableau handle.
 */
typedef struct RskTableau RskTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or null. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *rsk_last_error_message(void);

/*
 Releases a string returned by this library. Null is ignored.
 */
void rsk_string_free(char *s);

/*
 Builds a permutation of `1..=len` from one-line notation.
 */
enum RskStatus rsk_permutation_new(const uint32_t *values,
                                   uintptr_t len,
                                   struct RskPermutation **out);

/*
 Parses `"52314"`, `"5 2 3 1 4"` or `"5,2,3,1,4"`.
 */
enum RskStatus rsk_permutation_parse(const char *text, struct RskPermutation **out);

/*
 The permutation of rank `rank` in lexicographic order on `S_n`.
 */
enum RskStatus rsk_permutation_unrank(uintptr_t n, uint64_t rank, struct RskPermutation **out);

void rsk_permutation_free(struct RskPermutation *p);

/*
 Length of `p`, or 0 when `p` is null.
 */
uintptr_t rsk_permutation_len(const struct RskPermutation *p);

/*
 Copies the one-line notation into `buf`. `out_len` (optional) receives
 the length even when `buf` is too small.
 */
enum RskStatus rsk_permutation_entries(const struct RskPermutation *p,
                                       uint32_t *buf,
                                       uintptr_t cap,
                                       uintptr_t *out_len);

/*
 Space-separated one-line notation; free with [`rsk_string_free`].
 */
enum RskStatus rsk_permutation_to_string(const struct RskPermutation *p, char **out);

/*
 Lexicographic rank of `p` in `S_n`.
 */
enum RskStatus rsk_permutation_rank(const struct RskPermutation *p, uint64_t *out);

enum RskStatus rsk_permutation_reverse(const struct RskPermutation *p, struct RskPermutation **out);

enum RskStatus rsk_permutation_complement(const struct RskPermutation *p,
                                          struct RskPermutation **out);

enum RskStatus rsk_permutation_inverse(const struct RskPermutation *p, struct RskPermutation **out);

/*
 `phi_{a,b}(p)`, a permutation of length `len(p) + 2`.
 */
enum RskStatus rsk_phi(const struct RskPermutation *p,
                       uintptr_t a,
                       uintptr_t b,
                       struct RskPermutation **out);

/*
 `theta(p)`, a permutation of length `len(p) - 2`; needs `len(p) >= 3`.
 */
enum RskStatus rsk_theta(const struct RskPermutation *p, struct RskPermutation **out);

/*
 Insertion tableau `P(p)` and recording tableau `Q(p)`.
 */
enum RskStatus rsk_insertion_recording(const struct RskPermutation *p,
                                       struct RskTableau **out_p,
                                       struct RskTableau **out_q);

/*
 The permutation with insertion tableau `p` and recording tableau `q`.
 */
enum RskStatus rsk_inverse(const struct RskTableau *p,
                           const struct RskTableau *q,
                           struct RskPermutation **out);

/*
 Parses `[[1,3,5],[2],[4]]` or `{"rows": [[1,3,5],[2],[4]]}`.
 */
enum RskStatus rsk_tableau_from_json(const char *json, struct RskTableau **out);

/*
 `{"rows": [...]}`; free with [`rsk_string_free`].
 */
enum RskStatus rsk_tableau_to_json(const struct RskTableau *t, char **out);

void rsk_tableau_free(struct RskTableau *t);

/*
 Number of cells, or 0 when `t` is null.
 */
uintptr_t rsk_tableau_size(const struct RskTableau *t);

/*
 Row lengths, longest first.
 */
enum RskStatus rsk_tableau_shape(const struct RskTableau *t,
                                 uint32_t *buf,
                                 uintptr_t cap,
                                 uintptr_t *out_len);

enum RskStatus rsk_tableau_transpose(const struct RskTableau *t, struct RskTableau **out);

/*
 Schützenberger evacuation.
 */
enum RskStatus rsk_tableau_evacuation(const struct RskTableau *t, struct RskTableau **out);

/*
 Whether `Q(p) = Q(p^r)`.
 */
enum RskStatus rsk_is_in_r(const struct RskPermutation *p, bool *out);

/*
 Whether `Q(p)` has symmetric hook shape.
 */
enum RskStatus rsk_is_in_h(const struct RskPermutation *p, bool *out);

/*
 Whether the transpose of the evacuation of `t` is `t` itself.
 */
enum RskStatus rsk_tableau_is_in_m(const struct RskTableau *t, bool *out);

/*
 Whether every `i > 1` in the first row has `n - i + 2` in the first column.
 */
enum RskStatus rsk_tableau_first_row_property(const struct RskTableau *t, bool *out);

/*
 `|R_n|` by exhaustive sweep over `S_n` (`n <= 11`).
 */
enum RskStatus rsk_count_r(uintptr_t n, uintptr_t workers, uint64_t *out);

/*
 `|H_n|` by exhaustive sweep over `S_n` (`n <= 11`).
 */
enum RskStatus rsk_count_h(uintptr_t n, uintptr_t workers, uint64_t *out);

/*
 `|M_n|` for the symmetric hook of size `n`; 0 for even `n`.
 */
enum RskStatus rsk_count_m(uintptr_t n, uintptr_t workers, uint64_t *out);

/*
 Runs verification sweeps and returns the reports as a JSON array.

 `checks` is a comma-separated list drawn from `count`,
 `characterization`, `symmetry`, `phi-theta`, `transport`, `m-set`, or
 `all`. `out_all_passed` may be null.
 */
enum RskStatus rsk_verify_json(const char *checks,
                               uintptr_t n_max,
                               uintptr_t workers,
                               char **out_json,
                               bool *out_all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RSK_REVERSE_H */
