#ifndef PEAKALG_H
#define PEAKALG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PEAKALG_OK 0

#define PEAKALG_ERR_NULL 1

#define PEAKALG_ERR_ARGUMENT 2

#define PEAKALG_ERR_RANGE 3

#define PEAKALG_ERR_ALGEBRA 4

#define PEAKALG_ERR_PANIC 5

#define PEAKALG_FAMILY_A 0

#define PEAKALG_FAMILY_B 1

#define PEAKALG_FAMILY_PEAK 2

/*
 A q-Cartan matrix with integer polynomial entries.
 */
typedef struct PeakalgCartan PeakalgCartan;

/*
 An element of the descent algebra over Q, in the S basis.
 */
typedef struct PeakalgElement PeakalgElement;

/*
 A list of labelled elements, such as a system of idempotents.
 */
typedef struct PeakalgSystem PeakalgSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static NUL-terminated string.
 */
const char *peakalg_version(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void peakalg_string_free(char *s);

/*
 Parses an expansion in the S basis such as `S3 - S21 + 1/3 S111` of
 weight `n` (one digit per part).

 # Safety
 `text` must be a valid NUL-terminated string and `out` writable.
 */
int32_t peakalg_element_parse(const char *text, uint32_t n, struct PeakalgElement **out);

/*
 The Lie idempotent ζ_n (`r == 0`) or its level-r analogue ζ^(r)_n.

 # Safety
 `out` must be writable.
 */
int32_t peakalg_zeta(uint32_t n, uint32_t r, struct PeakalgElement **out);

/*
 Internal product `a ∗ b`.

 # Safety
 `a` and `b` must be live element handles and `out` writable.
 */
int32_t peakalg_element_product(const struct PeakalgElement *a,
                                const struct PeakalgElement *b,
                                struct PeakalgElement **out);

/*
 Writes 1 to `out` if the two elements are equal, 0 otherwise.

 # Safety
 `a` and `b` must be live element handles and `out` writable.
 */
int32_t peakalg_element_equal(const struct PeakalgElement *a,
                              const struct PeakalgElement *b,
                              int32_t *out);

/*
 Number of S-basis terms with nonzero coefficient.

 # Safety
 `e` must be a live element handle and `out` writable.
 */
int32_t peakalg_element_len(const struct PeakalgElement *e, size_t *out);

/*
 The element as JSON: `{"weight", "field", "terms": [{"label", "coeff"}]}`.

 # Safety
 `e` must be a live element handle and `out` writable.
 */
int32_t peakalg_element_to_json(const struct PeakalgElement *e, char **out);

/*
 # Safety
 `e` must be null or an element handle not yet freed.
 */
void peakalg_element_free(struct PeakalgElement *e);

/*
 The complete system of orthogonal idempotents of a family: type A
 (`r` ignored), type B (`r` ignored) or the r-peak algebra.

 # Safety
 `out` must be writable.
 */
int32_t peakalg_idempotents(int32_t family, uint32_t n, uint32_t r, struct PeakalgSystem **out);

/*
 # Safety
 `s` must be a live system handle and `out` writable.
 */
int32_t peakalg_system_len(const struct PeakalgSystem *s, size_t *out);

/*
 Label of member `i`, e.g. `0;2,1`.

 # Safety
 `s` must be a live system handle and `out` writable.
 */
int32_t peakalg_system_label(const struct PeakalgSystem *s, size_t i, char **out);

/*
 Copy of member `i` as a new element handle.

 # Safety
 `s` must be a live system handle and `out` writable.
 */
int32_t peakalg_system_get(const struct PeakalgSystem *s, size_t i, struct PeakalgElement **out);

/*
 # Safety
 `s` must be null or a system handle not yet freed.
 */
void peakalg_system_free(struct PeakalgSystem *s);

/*
 q-Cartan matrix of the r-peak algebra of weight n.

 # Safety
 `out` must be writable.
 */
int32_t peakalg_cartan_new(uint32_t n, uint32_t r, struct PeakalgCartan **out);

/*
 # Safety
 `c` must be a live matrix handle and `out` writable.
 */
int32_t peakalg_cartan_size(const struct PeakalgCartan *c, size_t *out);

/*
 Label of row and column `i`.

 # Safety
 `c` must be a live matrix handle and `out` writable.
 */
int32_t peakalg_cartan_label(const struct PeakalgCartan *c, size_t i, char **out);

/*
 Coefficients of entry (i, j) in increasing degree. The number of
 coefficients is written to `len` (0 for a zero entry); at most `cap` are
 copied into `coeffs`, which may be null when `cap` is 0. Returns
 `PEAKALG_ERR_RANGE` if `cap` is too small, after setting `len`.

 # Safety
 `c` must be a live matrix handle, `len` writable and `coeffs` valid for
 `cap` writes.
 */
int32_t peakalg_cartan_entry(const struct PeakalgCartan *c,
                             size_t i,
                             size_t j,
                             int64_t *coeffs,
                             size_t cap,
                             size_t *len);

/*
 Entry (i, j) evaluated at q = 1.

 # Safety
 `c` must be a live matrix handle and `out` writable.
 */
int32_t peakalg_cartan_at_one(const struct PeakalgCartan *c, size_t i, size_t j, int64_t *out);

/*
 # Safety
 `c` must be null or a matrix handle not yet freed.
 */
void peakalg_cartan_free(struct PeakalgCartan *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PEAKALG_H */
