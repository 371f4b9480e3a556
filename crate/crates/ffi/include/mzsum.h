#ifndef MZSUM_H
#define MZSUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by every function taking an out-pointer.
 */
typedef enum MzStatus {
  MZ_STATUS_OK = 0,
  MZ_STATUS_INVALID_QUERY = 1,
  MZ_STATUS_UNSUPPORTED = 2,
  MZ_STATUS_DIVERGENT = 3,
  MZ_STATUS_TOO_LARGE = 4,
  MZ_STATUS_INCONSISTENT = 5,
  MZ_STATUS_NULL_POINTER = 6,
  MZ_STATUS_INVALID_UTF8 = 7,
  MZ_STATUS_PANIC = 8,
} MzStatus;

/*
 A numerical value with an absolute error bound.
 */
typedef struct MzNumeric MzNumeric;

/*
 An exact value `coeff * pi^pi_exp`.
 */
typedef struct MzPiValue MzPiValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 `E(mn,k)` by the named route (`"theorem-a"`, `"theorem-b"`, `"hoffman"`,
 `"theorem-c"`, `"gencev"`, `"e6-bernoulli"`, `"e6-half"`, `"e8"`,
 `"theorem5"`). A null `method` selects `"theorem-a"`.

 # Safety
 `method` must be null or a valid NUL-terminated string; `out` must be a
 valid pointer to writable storage.
 */
enum MzStatus mz_esum(uint32_t m,
                      uint32_t n,
                      uint32_t k,
                      const char *method,
                      struct MzPiValue **out);

/*
 `zeta({arg}^n)` for even `arg >= 2`.

 # Safety
 `out` must be a valid pointer to writable storage.
 */
enum MzStatus mz_zeta_repeated(uint32_t arg, uint32_t n, struct MzPiValue **out);

/*
 `zeta*({arg}^n)` for even `arg >= 2`.

 # Safety
 `out` must be a valid pointer to writable storage.
 */
enum MzStatus mz_zeta_star_repeated(uint32_t arg, uint32_t n, struct MzPiValue **out);

/*
 Numerical `E(mn,k)` at `digits` decimal digits with summation cutoff
 `cutoff`; works for odd `m` as well.

 # Safety
 `out` must be a valid pointer to writable storage.
 */
enum MzStatus mz_esum_numeric(uint32_t m,
                              uint32_t n,
                              uint32_t k,
                              uint32_t digits,
                              uint64_t cutoff,
                              struct MzNumeric **out);

/*
 The rational coefficient as `"p/q"` (or `"p"`). Free with
 [`mz_string_free`]. Returns null for a null handle.

 # Safety
 `v` must be null or a handle returned by this library.
 */
char *mz_pivalue_coeff(const struct MzPiValue *v);

/*
 The power of pi; 0 for a null handle.

 # Safety
 `v` must be null or a handle returned by this library.
 */
uint32_t mz_pivalue_pi_exp(const struct MzPiValue *v);

/*
 LaTeX rendering, e.g. `\frac{1}{120}\pi^{4}`. Free with [`mz_string_free`].

 # Safety
 `v` must be null or a handle returned by this library.
 */
char *mz_pivalue_latex(const struct MzPiValue *v);

/*
 Releases a value handle; null is ignored.

 # Safety
 `v` must be null or a handle returned by this library, not yet freed.
 */
void mz_pivalue_free(struct MzPiValue *v);

/*
 Decimal rendering with `places` fractional digits. Free with
 [`mz_string_free`].

 # Safety
 `v` must be null or a handle returned by this library.
 */
char *mz_numeric_value(const struct MzNumeric *v, uint32_t places);

/*
 The absolute error bound; negative for a null handle.

 # Safety
 `v` must be null or a handle returned by this library.
 */
double mz_numeric_error_bound(const struct MzNumeric *v);

/*
 Releases a numeric handle; null is ignored.

 # Safety
 `v` must be null or a handle returned by this library, not yet freed.
 */
void mz_numeric_free(struct MzNumeric *v);

/*
 Message for the last failed call on this thread, or null. The pointer
 stays valid until the next library call on the same thread.
 */
const char *mz_last_error_message(void);

/*
 Releases a string returned by this library; null is ignored.

 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void mz_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MZSUM_H */
